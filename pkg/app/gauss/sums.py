"""
Incomplete quadratic Gauss sums and the van Wamelen identity.

    g_N(m) = 2/sqrt(N) * sum_{k=0}^{m} zeta_N^{k^2}

All arithmetic runs under mpmath.workprec; exponents are reduced modulo
the root order before exponentiation.
"""
from __future__ import annotations

import mpmath

from app.core.config import MIN_PRECISION_BITS, PRECISION_BITS
from app.core.errors import InvalidParamsError
from app.invariants.models import check_level


def working_bits(precision_bits: int | None) -> int:
    bits = PRECISION_BITS if precision_bits is None else precision_bits
    if bits < MIN_PRECISION_BITS:
        raise InvalidParamsError(f"precision must be at least {MIN_PRECISION_BITS} bits, got {bits}")
    return bits


def zeta(order: int, exp: int) -> mpmath.mpc:
    """exp(2 pi i exp / order) at the current working precision."""
    return mpmath.expjpi(mpmath.mpf(2 * (exp % order)) / order)


def gauss_sum(N: int, m: int, precision_bits: int | None = None, reverse: bool = False) -> mpmath.mpc:
    if N < 1:
        raise InvalidParamsError(f"N must be positive, got {N}")
    if not 0 <= m < N:
        raise InvalidParamsError(f"need 0 <= m < N, got m={m}, N={N}")
    with mpmath.workprec(working_bits(precision_bits)):
        ks = range(m, -1, -1) if reverse else range(m + 1)
        total = mpmath.mpc(0)
        for k in ks:
            total += zeta(N, k * k)
        return 2 * total / mpmath.sqrt(N)


def alternating_side(r: int, precision_bits: int | None = None) -> mpmath.mpc:
    """sum_{k=1}^{r-1} (-1)^k zeta_{2r}^{2k^2+2k} + 1, numerically."""
    check_level(r)
    with mpmath.workprec(working_bits(precision_bits)):
        total = mpmath.mpc(1)
        for k in range(1, r):
            term = zeta(2 * r, 2 * k * k + 2 * k)
            total += -term if k % 2 else term
        return total


def gauss_route(r: int, precision_bits: int | None = None) -> mpmath.mpc:
    """
    zeta_{16r}^{-(r+2)^2} (zeta_{16r}^{9r^2} - 2 sqrt(r) (2 g_{16r}(r-1) - g_{4r}((r-1)/2)))

    which equals (1 - A_r^4) I_r(M) + 1.
    """
    check_level(r)
    bits = working_bits(precision_bits)
    with mpmath.workprec(bits + 16):
        n = 16 * r
        diff = 2 * gauss_sum(n, r - 1, bits + 16) - gauss_sum(4 * r, (r - 1) // 2, bits + 16)
        inner = zeta(n, 9 * r * r) - 2 * mpmath.sqrt(r) * diff
        return zeta(n, -(r + 2) ** 2) * inner


def van_wamelen_residual(r: int, precision_bits: int | None = None) -> mpmath.mpf:
    """|alternating side - Gauss route|."""
    bits = working_bits(precision_bits)
    lhs = alternating_side(r, bits)
    rhs = gauss_route(r, bits)
    with mpmath.workprec(bits):
        return abs(lhs - rhs)
