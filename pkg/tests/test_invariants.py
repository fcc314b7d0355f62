import random

import mpmath
import pytest

from app.core.errors import InvalidParamsError, PoleError
from app.exactalg import A, RationalFn, cyclotomic, eval_complex, root_of_unity
from app.invariants import (
    CyclotomicNum,
    Framing,
    closed_form_001,
    eval_at_root,
    invariant_002_routes,
    invariant_sum,
    prop_checks,
    quantum_context,
)
from app.recoupling import delta, qint


def test_eval_at_root_examples():
    for r in (3, 5, 7):
        assert eval_at_root(A ** (2 * r), r) == 1
        assert eval_at_root(qint(r), r).is_zero(), "[r] vanishes at zeta_2r"
    inv = eval_at_root(RationalFn(1, A ** 2 + 1), 3)
    assert inv * (CyclotomicNum.zeta_power(3, 2) + 1) == 1


def test_eval_at_root_cancels_common_factors():
    phi = cyclotomic(10)
    f = RationalFn(phi * (A + 2), phi * (A - 3))
    assert eval_at_root(f, 5) == eval_at_root(RationalFn(A + 2, A - 3), 5)
    with pytest.raises(PoleError):
        eval_at_root(RationalFn(1, phi), 5)


def test_eval_at_root_is_a_ring_map():
    rng = random.Random(7)
    for _ in range(10):
        f = sum((rng.randint(-3, 3) * A ** rng.randint(-6, 6) for _ in range(4)), 0 * A)
        g = sum((rng.randint(-3, 3) * A ** rng.randint(-6, 6) for _ in range(4)), 0 * A)
        for r in (3, 7):
            assert eval_at_root(f + g, r) == eval_at_root(f, r) + eval_at_root(g, r)
            assert eval_at_root(f * g, r) == eval_at_root(f, r) * eval_at_root(g, r)


def test_level_validation():
    for bad in (2, 1, 4):
        with pytest.raises(InvalidParamsError):
            quantum_context(bad)
    with pytest.raises(InvalidParamsError):
        invariant_sum(5, 3)


def test_quantum_context():
    ctx = quantum_context(3)
    assert ctx.omega_bracket == 1 and ctx.eta_sq == 1
    ctx5 = quantum_context(5)
    assert ctx5.omega_bracket == 1 + eval_at_root(delta(1) ** 2, 5)
    for r in range(3, 32, 2):
        ctx = quantum_context(r)
        assert ctx.eta_sq * ctx.omega_bracket == 1, f"eta^2 <Omega> != 1 at r={r}"
        assert ctx.kappa6 == CyclotomicNum.zeta_power(r, -6 - r * (r + 1) // 2)


def test_small_invariants():
    assert invariant_sum(3, 0) == 1
    assert invariant_sum(3, 1) == 1
    assert invariant_sum(5, 0) == eval_at_root(1 + delta(1) * A ** 6, 5)
    assert invariant_sum(5, 0) == eval_at_root(1 - A ** 4 - A ** 8, 5)


def test_identities_hold_unsigned():
    for r in range(3, 42, 2):
        report = prop_checks(r)
        assert report.ok, f"r={r}: {report.to_json()}"


def test_signed_framing_flips_the_shift_identity():
    for r in (5, 7, 9):
        i0 = invariant_sum(r, 0, Framing.SIGNED)
        i2 = invariant_sum(r, 2, Framing.SIGNED)
        assert CyclotomicNum.zeta_power(r, 4) * i2 == 1 - i0
        assert invariant_sum(r, 1, Framing.SIGNED) == -closed_form_001(r) * (-1) ** ((r - 1) // 2)


def test_two_routes_to_002():
    for r in (5, 7, 11, 13):
        direct, via_i = invariant_002_routes(r)
        assert direct == via_i


def test_complex_embedding_matches_eval_complex():
    f = RationalFn(A ** 5 - 2 * A + 3, A ** 2 + A ** -2)
    r, bits = 7, 128
    exact = eval_at_root(f, r).to_complex(bits)
    with mpmath.workprec(bits):
        numeric = eval_complex(f, root_of_unity(2 * r, 1, bits), bits)
        assert abs(exact - numeric) < mpmath.mpf(2) ** (-bits + 16)
