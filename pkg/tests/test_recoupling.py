from itertools import permutations, product

from app.exactalg import A, RationalFn
from app.recoupling import (
    TetSpec,
    admissible,
    delta,
    fusion_coeff,
    labels_between,
    lambda_coeff,
    qint,
    quantum_basics,
    r_admissible,
    tet,
    tet_closed_form,
    tet_symmetries,
    theta,
    twist,
)


def _small_tets(max_label: int):
    for labels in product(range(max_label + 1), repeat=6):
        spec = TetSpec(*labels)
        if spec.is_admissible():
            yield spec


def test_quantum_basics_examples():
    assert quantum_basics(1).qint == 1
    assert quantum_basics(1).delta == -(A ** 2) - A ** -2, "Delta_1 is the loop value"
    assert qint(3) == A ** 4 + 1 + A ** -4
    assert quantum_basics(3).qfact == RationalFn.coerce(qint(2) * qint(3))
    assert qint(0) == 0


def test_quantum_integer_defining_quotient():
    for k in range(8):
        lhs = RationalFn.coerce(qint(k)) * (A ** 2 - A ** -2)
        assert lhs == A ** (2 * k) - A ** (-2 * k), f"[{k}] fails its defining quotient"


def test_admissibility():
    assert admissible(1, 1, 2)
    assert not admissible(1, 1, 1), "odd label sum is inadmissible"
    assert not admissible(0, 3, 1), "triangle inequality"
    assert r_admissible(2, 2, 2, 5), "6 <= 2*5 - 4"
    assert not r_admissible(2, 2, 4, 5), "8 > 2*5 - 4"
    assert not r_admissible(4, 4, 0, 5), "labels above r - 2"
    assert list(labels_between(3, 1)) == [2, 4]


def test_theta_examples():
    assert theta(0, 0, 0) == 1
    assert theta(1, 1, 0) == -(A ** 2) - A ** -2
    assert theta(1, 1, 2) == A ** 4 + 1 + A ** -4
    assert theta(1, 1, 1) == 0, "inadmissible theta is zero"
    assert theta(2, 2, 2) == RationalFn(-qint(3) * qint(4), qint(2) ** 2)


def test_theta_symmetry_and_loop_values():
    for a, b, c in product(range(6), repeat=3):
        if not admissible(a, b, c):
            continue
        values = {theta(*p) for p in permutations((a, b, c))}
        assert len(values) == 1, f"theta({a},{b},{c}) depends on argument order"
    for a in range(13):
        assert theta(a, a, 0) == delta(a), f"theta({a},{a},0) should be Delta_{a}"


def test_theta_families_used_by_the_relations():
    for a in range(8):
        assert theta(a, a + 1, 1) == delta(a + 1)
    for x in range(1, 8):
        sign = 1 if (x + 1) % 2 == 0 else -1
        expected = RationalFn(sign * qint(x + 2) * qint(x + 1), qint(x) * qint(2))
        assert theta(x, x, 2) == expected, f"theta({x},{x},2)"


def test_tet_examples():
    assert tet(0, 0, 0, 0, 0, 0) == 1
    assert tet(1, 2, 1, 2, 1, 1) == RationalFn(qint(3), qint(2))
    assert tet(2, 1, 1, 2, 2, 1) == theta(2, 2, 2)
    assert tet(1, 1, 1, 1, 1, 1) == 0, "inadmissible faces give zero"


def test_tet_with_a_zero_edge_is_a_theta():
    for a, c, e in product(range(5), repeat=3):
        if not admissible(a, c, e):
            continue
        assert tet_closed_form(a, a, c, c, e, 0) == theta(a, c, e), f"F=0 at ({a},{c},{e})"
        assert tet_closed_form(a, c, e, 0, a, e) == theta(a, c, e), f"D=0 at ({a},{c},{e})"


def test_tet_families_used_by_the_relations():
    for x in range(1, 6):
        sign = 1 if (x + 1) % 2 == 0 else -1
        assert tet(1, x + 1, x, 2, 1, x) == RationalFn(sign * qint(x + 2), qint(2)), f"i = x+1 at x={x}"
        assert tet(1, x - 1, x, 2, 1, x) == RationalFn(sign * qint(x + 2) * qint(x + 1), qint(x) * qint(2)), \
            f"i = x-1 at x={x}"
    for z in range(1, 6):
        assert tet(z, 1, 1, z, 2, z - 1) == theta(z, z, 2), f"tet(z,1,1,z,2,z-1) at z={z}"


def test_tet_tetrahedral_symmetry():
    for spec in _small_tets(2):
        base = tet_closed_form(*spec)
        images = tet_symmetries(spec)
        assert len(images) == 24
        for moved in set(images):
            assert moved.is_admissible(), f"relabelling {moved} of {spec} lost admissibility"
            assert tet_closed_form(*moved) == base, f"tet{tuple(spec)} vs tet{tuple(moved)}"


def test_tet_symmetries_swap_opposite_edges_together():
    images = set(tet_symmetries(TetSpec(1, 2, 3, 4, 5, 6)))
    assert TetSpec(1, 2, 3, 4, 5, 6) in images
    assert len(images) == 24, "distinct labels give 24 distinct relabellings"
    for moved in images:
        opposite = {frozenset((moved.a, moved.c)), frozenset((moved.b, moved.d)), frozenset((moved.e, moved.f))}
        assert opposite == {frozenset((1, 3)), frozenset((2, 4)), frozenset((5, 6))}, f"{moved}"


def test_tet_cache_is_transparent():
    for spec in _small_tets(2):
        assert tet(*spec) == tet_closed_form(*spec), f"cached tet{tuple(spec)} differs"


def test_twist_and_lambda():
    assert twist(1) == -(A ** 3)
    assert lambda_coeff(0, 1, 1) == -(A ** 3)
    assert lambda_coeff(2, 1, 1) == A ** -1
    for x in range(1, 8):
        assert lambda_coeff(x + 1, x, 1) == A ** -x
        assert lambda_coeff(x - 1, x, 1) == -(A ** (x + 2))
    for a, b, c in product(range(5), repeat=3):
        if admissible(a, b, c):
            product_ab = lambda_coeff(c, a, b) * lambda_coeff(c, b, a)
            assert product_ab == A ** (a * (a + 2) + b * (b + 2) - c * (c + 2))


def test_fusion_coefficients():
    assert fusion_coeff(1, 1, 0) == RationalFn(1, -(A ** 2) - A ** -2)
    assert fusion_coeff(1, 1, 1) == 0
    assert fusion_coeff(1, 1, 2) == 1
    for a, b in product(range(5), repeat=2):
        total = sum(
            (fusion_coeff(a, b, i) * theta(a, b, i) / delta(i) for i in labels_between(a, b)),
            RationalFn.coerce(0),
        )
        assert total == len(labels_between(a, b)), f"bigon sum at ({a},{b})"
