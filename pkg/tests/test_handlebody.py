import json
from itertools import product

import pytest

from app.core.errors import InvalidTripleError
from app.exactalg import A, RationalFn
from app.handlebody import (
    GENERATORS,
    BasisTriple,
    SkeinVector,
    h1_class,
    inner_product,
    norm_sq,
    order_less,
)
from app.recoupling import qint


def _triples(max_label: int):
    for a, b, c in product(range(max_label + 1), repeat=3):
        if BasisTriple.is_valid(a, b, c):
            yield BasisTriple(a, b, c)


def test_invalid_triples_are_rejected():
    for bad in [(1, 1, 1), (0, 2, 1), (1, 4, 3), (-1, 0, 0)]:
        with pytest.raises(InvalidTripleError):
            BasisTriple(*bad)


def test_norm_examples():
    assert norm_sq(BasisTriple(0, 0, 0)) == 1
    assert norm_sq(BasisTriple(1, 0, 1)) == 1, "theta(1,1,0)^2 / Delta_1^2"
    assert norm_sq(BasisTriple(1, 2, 1)) == RationalFn(qint(3), qint(2) ** 2)


def test_h1_classes():
    assert h1_class(BasisTriple(0, 0, 1)) == (0, 1)
    assert h1_class(BasisTriple(1, 0, 1)) == (1, 1)
    assert h1_class(BasisTriple(2, 2, 4)) == (0, 0)
    classes = {h1_class(g) for g in GENERATORS}
    assert classes == {(0, 0), (0, 1), (1, 0), (1, 1)}, "generators must hit every class"
    assert [h1_class(g) for g in GENERATORS].count((0, 0)) == 2, "(0,0,0) and (0,0,2) share the trivial class"


def test_order_examples():
    assert order_less(BasisTriple(1, 0, 0), BasisTriple(0, 0, 2)), "max 1 < max 2"
    assert order_less(BasisTriple(1, 0, 2), BasisTriple(2, 0, 1)), "equal max, compare a"
    assert order_less(BasisTriple(1, 0, 1), BasisTriple(1, 2, 1)), "equal max, a and c; compare b"


def test_order_is_a_strict_total_order():
    triples = list(_triples(6))
    for s in triples:
        assert not order_less(s, s), f"{s} < {s}"
        for t in triples:
            if s != t:
                assert order_less(s, t) != order_less(t, s), f"trichotomy fails for {s}, {t}"
    ranked = sorted(triples, key=lambda t: t.sort_key)
    for lower, higher in zip(ranked, ranked[1:]):
        assert order_less(lower, higher)


def test_inner_product_examples():
    unit = SkeinVector.basis(BasisTriple(0, 0, 0))
    assert inner_product(unit, unit) == 1
    v = SkeinVector.basis(BasisTriple(1, 0, 1))
    w = SkeinVector.basis(BasisTriple(0, 0, 2))
    assert inner_product(v, w) == 0, "distinct triples are orthogonal"
    assert inner_product(v.scale(A), v) == A ** -1, "conjugate-linear in the first slot"


def test_inner_product_is_hermitian():
    v = SkeinVector({BasisTriple(1, 2, 1): A + 2, BasisTriple(2, 2, 2): RationalFn(1, A ** 2 + 1)})
    w = SkeinVector({BasisTriple(1, 2, 1): A ** -3, BasisTriple(2, 2, 2): A - 1})
    assert inner_product(v, w) == inner_product(w, v).bar()


def test_vector_arithmetic_and_mirror():
    v = SkeinVector({BasisTriple(1, 0, 2): A, BasisTriple(2, 2, 1): 3})
    assert (v - v).is_zero()
    assert v.mirror() == SkeinVector({BasisTriple(2, 0, 1): A, BasisTriple(1, 2, 2): 3})
    assert v.mirror().mirror() == v
    assert v.highest() == BasisTriple(2, 2, 1)


def test_json_schema():
    v = SkeinVector({BasisTriple(1, 2, 1): RationalFn(A, A + 1), BasisTriple(1, 0, 0): -1})
    data = json.loads(json.dumps(v.to_json()))
    assert [(t["a"], t["b"], t["c"]) for t in data["terms"]] == [(1, 0, 0), (1, 2, 1)], "terms sorted by the descent order"
    assert data["terms"][0]["coeff"] == {"num": "-1*A^0", "den": "1*A^0"}
    assert SkeinVector.from_json(data) == v
