"""
Complex evaluation of exact values with mpmath.

Evaluation runs inside mpmath.workprec(bits) with mpmath's default
round-to-nearest; each Laurent polynomial is evaluated by Horner's rule on
its dense coefficient list and then multiplied by z^low.
"""
from __future__ import annotations

import mpmath

from app.core.config import MIN_PRECISION_BITS, PRECISION_BITS
from app.core.errors import InvalidParamsError, PoleError
from app.exactalg.laurent import LaurentPoly
from app.exactalg.ratfn import RationalFn


def _horner(poly: LaurentPoly, z) -> mpmath.mpc:
    if poly.is_zero():
        return mpmath.mpc(0)
    low, high = poly.low_degree, poly.high_degree
    acc = mpmath.mpc(0)
    for exp in range(high, low - 1, -1):
        acc = acc * z + poly.coefficient(exp)
    return acc * mpmath.power(z, low)


def eval_complex(f: RationalFn | LaurentPoly | int, z, precision_bits: int | None = None) -> mpmath.mpc:
    """
    f(z) at `precision_bits` of working precision.

    Raises PoleError when |den(z)| < 2^(-precision_bits / 2).
    """
    bits = PRECISION_BITS if precision_bits is None else precision_bits
    if bits < MIN_PRECISION_BITS:
        raise InvalidParamsError(f"precision must be at least {MIN_PRECISION_BITS} bits, got {bits}")
    f = RationalFn.coerce(f)
    with mpmath.workprec(bits):
        point = mpmath.mpc(z)
        if point == 0 and not f.is_zero() and f.numerator.low_degree < 0:
            raise PoleError("negative power of A evaluated at 0")
        den = _horner(f.denominator, point)
        if abs(den) < mpmath.mpf(2) ** (-(bits // 2)):
            raise PoleError(f"denominator vanishes at {mpmath.nstr(point, 15)} (|den| = {mpmath.nstr(abs(den), 5)})")
        num = _horner(f.numerator, point)
        return num / den


def root_of_unity(order: int, power: int = 1, precision_bits: int | None = None) -> mpmath.mpc:
    """exp(2 pi i power / order)."""
    bits = PRECISION_BITS if precision_bits is None else precision_bits
    with mpmath.workprec(bits):
        return mpmath.expjpi(mpmath.mpf(2 * power) / order)
