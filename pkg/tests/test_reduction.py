import importlib
from itertools import product

import pytest

from app.core.config import Limits
from app.core.errors import InvalidTripleError, SingularSystemError
from app.exactalg import A, RationalFn, is_unit_ratfn
from app.handlebody import GENERATORS, BasisTriple, SkeinVector, h1_class
from app.reduction import Reducer, reduce, reduce_vector, relation_consistency
from app.relations import RelationId, relation_vector


def _t(a, b, c):
    return BasisTriple(a, b, c)


def _triples(max_label: int):
    for a, b, c in product(range(max_label + 1), repeat=3):
        if BasisTriple.is_valid(a, b, c):
            yield _t(a, b, c)


def test_generators_reduce_to_themselves():
    for g in GENERATORS:
        assert reduce(g).as_vector() == SkeinVector.basis(g)


def test_reduce_121():
    k = RationalFn(A ** 4 + A ** -4 - A ** 2 - A ** -2, A ** 2 + A ** -2)
    expected = SkeinVector.basis(_t(1, 0, 1), -k / (1 - A ** -4))
    assert reduce(_t(1, 2, 1)).as_vector() == expected


def test_reduce_102():
    assert reduce(_t(1, 0, 2)).as_vector() == SkeinVector.basis(_t(1, 0, 0), A ** 2 + 1 + A ** -2)


def test_reduce_202_stays_in_trivial_class():
    result = reduce(_t(2, 0, 2))
    assert set(result.coords) <= {_t(0, 0, 0), _t(0, 0, 2)}


def test_reduce_vector_basics():
    assert reduce_vector(SkeinVector()).is_zero()
    v = SkeinVector({_t(0, 0, 1): 1, _t(1, 0, 0): 1})
    assert reduce_vector(v).as_vector() == v


def test_reduce_vector_kills_r3_at_11():
    assert reduce_vector(relation_vector(RelationId.r3(1, 1))).is_zero()


def test_homology_is_preserved():
    for t in _triples(4):
        classes = reduce(t).classes()
        assert classes <= {h1_class(t)}, f"{t} reduces outside class {h1_class(t)}"


def test_coordinates_have_unit_denominators():
    for t in _triples(3):
        for g, coeff in reduce(t).coords.items():
            den = RationalFn.coerce(coeff.denominator)
            assert is_unit_ratfn(den) is not None, f"{t} -> {g} has a non-unit denominator"


def test_reduction_is_idempotent():
    for t in [_t(2, 2, 1), _t(3, 0, 0), _t(0, 0, 3), _t(2, 0, 2)]:
        once = reduce(t)
        assert reduce_vector(once.as_vector()) == once


def test_relations_vanish_after_reduction():
    report = relation_consistency(2, slides=(1, 2, 3, 4, 5))
    assert report.ok, report.to_json()["failures"][:1]
    assert relation_consistency(1, slides=(6,)).ok


def test_separate_reducers_agree():
    fresh = Reducer()
    for t in [_t(2, 0, 1), _t(1, 2, 2), _t(3, 0, 1)]:
        assert fresh.reduce(t) == reduce(t)
    assert fresh.cache_size() > len(GENERATORS)


def test_label_cap():
    small = Reducer(Limits(max_label=3))
    with pytest.raises(InvalidTripleError):
        small.reduce(_t(4, 0, 0))


def test_singular_case_matrix_names_the_target(monkeypatch):
    cases = importlib.import_module("app.relations.cases")

    def no_pivot(M, b):
        raise SingularSystemError("no pivot in column 0")

    monkeypatch.setattr(cases, "solve_linear_system", no_pivot)
    with pytest.raises(SingularSystemError) as excinfo:
        Reducer().reduce(_t(1, 2, 1))
    message = str(excinfo.value)
    assert "(1,2,1)" in message and "case 1" in message, message
    assert "r1(1,0,0)" in message, message
