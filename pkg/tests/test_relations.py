from itertools import product

import pytest

from app.core.errors import InvalidParamsError
from app.exactalg import A, RationalFn
from app.handlebody import GENERATORS, BasisTriple, SkeinVector
from app.recoupling import delta
from app.relations import (
    RelationId,
    case_closed_form,
    case_system,
    check_case,
    classify_case,
    express_target,
    homology_classes,
    relation_vector,
    support_violations,
    verify_case_determinant,
)


def _t(a, b, c):
    return BasisTriple(a, b, c)


def _small_relation_ids(limit: int):
    for al, be, ga in product(range(limit + 1), repeat=3):
        if BasisTriple.is_valid(al, be, ga):
            yield RelationId.r1(al, be, ga)
            yield RelationId.r2(al, be, ga)
    for al, ga in product(range(limit + 1), repeat=2):
        yield RelationId.r3(al, ga)
    for k in range(limit + 1):
        yield RelationId.r4(k)
        yield RelationId.r5(k)
    for k in range(min(limit, 2) + 1):
        yield RelationId.r6(k)


def test_relation_id_validation():
    with pytest.raises(InvalidParamsError):
        RelationId.r1(0, 2, 0)
    with pytest.raises(InvalidParamsError):
        RelationId(7, alpha=0)
    with pytest.raises(InvalidParamsError):
        RelationId(4, alpha=1, gamma=1)
    assert str(RelationId.r3(2, 1)) == "r3(2,1)"
    assert RelationId.r5(3).to_json() == {"slide": 5, "gamma": 3}


def test_r1_trivial_parameters_vanish():
    assert relation_vector(RelationId.r1(0, 0, 0)).is_zero()


def test_r1_at_100():
    k = RationalFn(A ** 4 + A ** -4 - A ** 2 - A ** -2, A ** 2 + A ** -2)
    expected = SkeinVector({_t(1, 0, 1): k, _t(1, 2, 1): 1 - A ** -4})
    assert relation_vector(RelationId.r1(1, 0, 0)) == expected


def test_r1_at_101():
    k = RationalFn(A ** 4 + A ** -4 - A ** 2 - A ** -2, A ** 2 + A ** -2)
    expected = SkeinVector({_t(1, 0, 0): k, _t(1, 0, 2): k, _t(1, 2, 2): 1 - A ** -4})
    assert relation_vector(RelationId.r1(1, 0, 1)) == expected


def test_r1_at_200():
    expected = SkeinVector({_t(2, 0, 1): (A ** 2 - A ** -2) ** 2, _t(2, 2, 1): A ** 2 - A ** -6})
    assert relation_vector(RelationId.r1(2, 0, 0)) == expected


def test_r3_at_00():
    expected = SkeinVector({
        _t(1, 0, 1): RationalFn(A ** 6 - 1, delta(1)),
        _t(1, 2, 1): -(A ** 2 + 1),
    })
    assert relation_vector(RelationId.r3(0, 0)) == expected


def test_r4_at_0():
    d1 = RationalFn.coerce(delta(1))
    expected = SkeinVector({
        _t(1, 0, 0): 1 / d1 - 1,
        _t(1, 0, 2): -(A ** -4) / d1,
        _t(1, 2, 2): -(A ** -4),
    })
    assert relation_vector(RelationId.r4(0)) == expected


def test_r2_and_r5_are_mirrors():
    assert relation_vector(RelationId.r2(0, 0, 1)) == relation_vector(RelationId.r1(1, 0, 0)).mirror()
    assert relation_vector(RelationId.r5(0)) == relation_vector(RelationId.r4(0)).mirror()


def test_support_constraints():
    for rid in _small_relation_ids(3):
        assert support_violations(rid) == [], f"{rid} has terms outside its support rule"


def test_relations_are_homogeneous():
    for rid in _small_relation_ids(3):
        assert len(homology_classes(rid)) <= 1, f"{rid} mixes homology classes"


def test_every_triple_has_a_case():
    for a, b, c in product(range(11), repeat=3):
        if not BasisTriple.is_valid(a, b, c):
            continue
        t = _t(a, b, c)
        case = classify_case(t)
        if t in GENERATORS:
            assert case is None
            continue
        assert case in (1, 2, 3, 4, 5), f"{t} not classified"
        if case == 4:
            assert c > 2, f"{t} is case 4 below z = 3"


def test_case_system_rejects_wrong_case():
    with pytest.raises(InvalidParamsError):
        case_system(4, _t(0, 0, 2))
    with pytest.raises(InvalidParamsError):
        case_system(1, _t(2, 0, 2))


def test_case1_matrix_and_ratio():
    system = case_system(1, _t(1, 2, 1))
    assert system.matrix == ((RationalFn.coerce(1 - A ** -4),),)
    check = check_case(1, _t(1, 2, 1))
    assert check.monomial_ratio == (1, -2), "case 1 determinant is A^-2 times the closed form"
    assert check.passed


def test_case1_closed_form_instance():
    expected = A ** -8 * (A ** 6 - A ** 2) * (A ** 6 + A ** 2)
    assert case_closed_form(1, _t(2, 2, 2)) == expected


def test_case2_determinant_is_exact_at_12():
    check = check_case(2, _t(1, 0, 2))
    assert check.exact, f"det {check.determinant!r} vs {check.closed_form!r}"
    assert check.certificate is not None


def test_case3_zero_pattern():
    for x in (2, 3):
        m = case_system(3, _t(x, 0, 0)).matrix
        assert m[1][0].is_zero() and m[1][3].is_zero(), "r2 row misses (x,4,2) and (x,0,0)"
        assert m[2][0].is_zero(), "r3 row misses (x,4,2)"


def test_case5_shape():
    system = case_system(5, _t(2, 0, 2))
    assert system.highest_terms == (_t(2, 4, 2), _t(2, 2, 2), _t(2, 0, 2))
    assert len(system.matrix) == 3
    assert case_closed_form(5, _t(2, 0, 2)) == A ** 4 - 1


def test_case3_determinant_is_minus_closed_form():
    for x in (2, 3):
        check = check_case(3, _t(x, 0, 0))
        assert check.monomial_ratio == (-1, 0), f"case 3 at ({x},0,0) has ratio {check.ratio}"
        assert not check.exact
        assert check.passed


def test_exactness_is_reported_per_case():
    report = verify_case_determinant(1, max_param=3)
    assert report.ok and not report.exact_ok
    assert report.first_inexact.target == _t(1, 2, 1)
    assert report.first_inexact.monomial_ratio == (1, -2)
    assert report.to_json()["exact_ok"] is False
    assert report.to_json()["first_inexact"]["target"] == [1, 2, 1]

    assert not verify_case_determinant(3, max_param=3).exact_ok
    for case_id, bound in [(2, 3), (4, 4), (5, 3)]:
        report = verify_case_determinant(case_id, max_param=bound)
        assert report.exact_ok, f"case {case_id} not exact at {report.first_inexact}"
        assert report.first_inexact is None


def test_case_determinants_are_units():
    for case_id, bound in [(1, 3), (2, 3), (3, 3), (4, 4), (5, 3)]:
        report = verify_case_determinant(case_id, max_param=bound)
        assert report.checks, f"case {case_id} has no targets up to {bound}"
        assert report.ok, f"case {case_id} fails at {report.first_mismatch}"


def test_express_target_lands_below_target():
    for case_id, target in [(1, _t(1, 2, 1)), (2, _t(2, 0, 1)), (3, _t(2, 0, 0)), (5, _t(2, 0, 2))]:
        rewritten, det = express_target(case_system(case_id, target))
        assert not det.is_zero()
        for t in rewritten.triples():
            assert t < target, f"{t} is not below {target}"
