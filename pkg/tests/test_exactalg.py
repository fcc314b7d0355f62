import random
from fractions import Fraction

import mpmath
import pytest

from app.core.errors import PoleError, SingularSystemError
from app.exactalg import (
    A,
    LaurentPoly,
    RationalFn,
    cyclotomic,
    determinant,
    eval_complex,
    is_signed_monomial,
    is_unit_in_R,
    is_unit_ratfn,
    mat_vec,
    solve_linear_system,
)


def _random_poly(rng: random.Random) -> LaurentPoly:
    return LaurentPoly({rng.randint(-6, 6): rng.randint(-5, 5) for _ in range(rng.randint(0, 5))})


# ----- LaurentPoly -----

def test_laurent_basic_arithmetic():
    assert (A + A ** -1) + (-(A ** -1)) == A, "A + A^-1 - A^-1 should collapse to A"
    assert (A ** 2 + A ** -2) * (A ** 2 - A ** -2) == A ** 4 - A ** -4, "difference of squares"
    assert (A ** 2 + 3 * A ** -5).bar() == A ** -2 + 3 * A ** 5, "bar negates exponents"
    assert (A - A).terms == {}, "zero coefficients must not be stored"


def test_laurent_ring_axioms_on_random_triples():
    rng = random.Random(20240607)
    for _ in range(60):
        f, g, h = (_random_poly(rng) for _ in range(3))
        assert (f * g) * h == f * (g * h), "multiplication must be associative"
        assert f * (g + h) == f * g + f * h, "multiplication must distribute over addition"
        assert f.bar().bar() == f, "bar must be an involution"
        assert (f * g).bar() == f.bar() * g.bar(), "bar must be multiplicative"


def test_laurent_canonical_text():
    poly = -(A ** -2) - A ** 2
    assert poly.to_text() == "-1*A^-2 + -1*A^2", f"unexpected text form {poly.to_text()!r}"
    assert LaurentPoly.from_text(poly.to_text()) == poly, "text form must parse back"
    assert LaurentPoly().to_text() == "0"


def test_laurent_negative_power_only_for_units():
    assert (-(A ** 3)) ** -1 == -(A ** -3)
    with pytest.raises(ValueError):
        (A + 1) ** -1


# ----- RationalFn -----

def test_ratfn_sum_of_reciprocals():
    total = RationalFn(1, A - 1) + RationalFn(1, A + 1)
    assert total == RationalFn(2 * A, A ** 2 - 1), f"got {total}"


def test_ratfn_self_division_is_one():
    f = RationalFn(A ** 3 - 2 * A + 7, A ** 2 + A ** -1)
    assert f / f == 1, "f / f must normalize to 1"


def test_ratfn_equality_by_normal_form_and_cross_multiplication():
    lhs = RationalFn.coerce(A ** 2 - A ** -2)
    rhs = RationalFn(A ** 4 - 1, A ** 2)
    assert lhs == rhs, "normal forms should coincide"
    assert lhs.cross_equal(rhs), "cross-multiplication should agree"
    assert rhs.is_laurent(), "(A^4 - 1)/A^2 is a Laurent polynomial"


def test_ratfn_normal_form_conventions():
    f = RationalFn(1, -2 * A ** 3)
    assert f.denominator == 2, "monomial part of the denominator moves to the numerator"
    assert f.numerator == -(A ** -3)
    g = RationalFn(A, 1 - A)
    assert g.denominator.leading_coefficient > 0, "denominator leading coefficient must be positive"
    assert g.denominator.low_degree == 0, "denominator must have a nonzero constant term"


def test_ratfn_division_by_zero():
    with pytest.raises(PoleError):
        RationalFn.coerce(A) / 0


# ----- cyclotomic / units -----

def test_cyclotomic_small_indices():
    assert cyclotomic(1) == A - 1
    assert cyclotomic(2) == A + 1
    assert cyclotomic(12) == A ** 4 - A ** 2 + 1, f"got {cyclotomic(12)}"
    assert cyclotomic(9) == A ** 6 + A ** 3 + 1


def test_unit_detection():
    cert = is_unit_in_R(A ** 5)
    assert cert is not None and (cert.sign, cert.monomial_power, cert.cyclotomic_indices) == (1, 5, ())

    cert = is_unit_in_R(A ** 4 - 1)
    assert cert is not None, "A^4 - 1 is a product of cyclotomics"
    assert sorted(cert.cyclotomic_indices) == [1, 2, 4]

    case_one = A ** -6 * (A ** 4 - A ** 2) * (A ** 4 + A ** 2)
    assert case_one == A ** 2 - A ** -2
    cert = is_unit_in_R(case_one)
    assert cert is not None and cert.monomial_power == -2
    assert cert.reconstruct() == case_one, "certificate must reproduce the input"


def test_non_units_are_rejected():
    assert is_unit_in_R(LaurentPoly.constant(2)) is None
    assert is_unit_in_R(A + 2) is None
    assert is_unit_in_R(A ** 2 - 2) is None
    assert is_unit_in_R(2 * (A - 1)) is None


def test_rational_unit_certificate():
    f = RationalFn(-(A ** 3) * (A ** 6 - 1), A ** 2 + 1)
    cert = is_unit_ratfn(f)
    assert cert is not None
    assert cert.reconstruct() == f
    assert is_signed_monomial(RationalFn.coerce(-(A ** 4))) == (-1, 4)
    assert is_signed_monomial(A + 1) is None


# ----- linear systems -----

def test_solve_identity():
    b = [A, RationalFn(1, A + 1)]
    x, det = solve_linear_system([[1, 0], [0, 1]], b)
    assert x == [RationalFn.coerce(A), RationalFn(1, A + 1)]
    assert det == 1


def test_solve_triangular_system():
    x, det = solve_linear_system([[A, 1], [0, A]], [1, A])
    assert x == [0, 1], f"got {x}"
    assert det == A ** 2


def test_solve_resubstitution_and_determinant():
    M = [[A, 1, 0], [1, A ** -1, 2], [0, A + 1, 1]]
    b = [1, A ** 3, RationalFn(1, A - 1)]
    x, det = solve_linear_system(M, b)
    assert mat_vec(M, x) == [RationalFn.coerce(v) for v in b], "M x must equal b exactly"
    assert det == -2 * A ** 2 - 2 * A
    assert determinant(M) == det


def test_singular_system():
    with pytest.raises(SingularSystemError):
        solve_linear_system([[A, 1], [A, 1]], [0, 1])


# ----- complex evaluation -----

def test_eval_complex_examples():
    z = mpmath.expjpi(mpmath.mpf(1) / 3)
    assert abs(eval_complex(A, z, 128) - z) < 1e-12
    assert abs(eval_complex(A ** 2 + A ** -2, 1j, 128) - (-2)) < 1e-12


def test_eval_complex_product():
    f = RationalFn(A ** 5 - 3 * A + 1, A ** 2 + A + 1)
    g = RationalFn(A ** -3 + 2, A - 3)
    z = mpmath.expjpi(mpmath.mpf(2) / 11)
    with mpmath.workprec(128):
        diff = abs(eval_complex(f * g, z, 128) - eval_complex(f, z, 128) * eval_complex(g, z, 128))
    assert diff < mpmath.mpf(2) ** -110


def test_laurent_evaluate_matches_eval_complex():
    rng = random.Random(11)
    with mpmath.workprec(128):
        z = mpmath.expjpi(mpmath.mpf(2) / 7)
        for _ in range(10):
            f = _random_poly(rng)
            gap = abs(mpmath.mpc(f.evaluate(z)) - eval_complex(f, z, 128))
            assert gap < mpmath.mpf(2) ** -100, f"evaluate and eval_complex disagree on {f}"


def test_laurent_evaluate_on_rationals():
    assert (A ** 2 + A ** -2).evaluate(Fraction(2)) == Fraction(17, 4)
    assert (3 * A - 1).evaluate(5) == 14
    assert LaurentPoly().evaluate(Fraction(1, 3)) == 0


def test_eval_complex_pole():
    with pytest.raises(PoleError):
        eval_complex(RationalFn(1, A - 1), 1, 64)
