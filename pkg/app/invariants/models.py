"""
Exact arithmetic in Q(zeta) for zeta = exp(i pi / r), r odd.

Elements are sympy polynomials over QQ in z, kept reduced modulo the
cyclotomic polynomial Phi_{2r}(z).
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import mpmath
from sympy import QQ, Poly, Symbol, cyclotomic_poly

from app.core.config import PRECISION_BITS
from app.core.errors import InvalidParamsError, PoleError
from app.exactalg.laurent import LaurentPoly

Z = Symbol("z")


def check_level(r: int) -> None:
    if not isinstance(r, int) or r < 3 or r % 2 == 0:
        raise InvalidParamsError(f"r must be an odd integer >= 3, got {r!r}")


@lru_cache(maxsize=None)
def cyclotomic_modulus(r: int) -> Poly:
    """Phi_{2r} over QQ."""
    return Poly(cyclotomic_poly(2 * r, Z), Z, domain=QQ)


def _poly(exponents: dict[int, int]) -> Poly:
    if not exponents:
        return Poly(0, Z, domain=QQ)
    return Poly.from_dict({(e,): c for e, c in exponents.items()}, Z, domain=QQ)


class CyclotomicNum:
    __slots__ = ("r", "poly")

    def __init__(self, r: int, poly: Poly):
        check_level(r)
        self.r = r
        self.poly = poly.rem(cyclotomic_modulus(r))

    @classmethod
    def from_int(cls, r: int, value: int) -> CyclotomicNum:
        return cls(r, Poly(value, Z, domain=QQ))

    @classmethod
    def zeta_power(cls, r: int, k: int) -> CyclotomicNum:
        return cls(r, _poly({k % (2 * r): 1}))

    @classmethod
    def from_laurent(cls, r: int, f: LaurentPoly) -> CyclotomicNum:
        """f(zeta); exponents are folded modulo 2r first."""
        folded: dict[int, int] = {}
        for exp, coeff in f.terms.items():
            e = exp % (2 * r)
            folded[e] = folded.get(e, 0) + coeff
        return cls(r, _poly({e: c for e, c in folded.items() if c}))

    # ----- arithmetic -----

    def _same_level(self, other) -> CyclotomicNum:
        if isinstance(other, int):
            return CyclotomicNum.from_int(self.r, other)
        if not isinstance(other, CyclotomicNum):
            raise TypeError(f"cannot combine CyclotomicNum with {type(other).__name__}")
        if other.r != self.r:
            raise InvalidParamsError(f"levels differ: r={self.r} and r={other.r}")
        return other

    def __add__(self, other) -> CyclotomicNum:
        other = self._same_level(other)
        return CyclotomicNum(self.r, self.poly + other.poly)

    __radd__ = __add__

    def __neg__(self) -> CyclotomicNum:
        return CyclotomicNum(self.r, -self.poly)

    def __sub__(self, other) -> CyclotomicNum:
        other = self._same_level(other)
        return CyclotomicNum(self.r, self.poly - other.poly)

    def __rsub__(self, other) -> CyclotomicNum:
        return self._same_level(other) - self

    def __mul__(self, other) -> CyclotomicNum:
        other = self._same_level(other)
        return CyclotomicNum(self.r, self.poly * other.poly)

    __rmul__ = __mul__

    def inverse(self) -> CyclotomicNum:
        if self.is_zero():
            raise PoleError(f"division by zero in Q(zeta_{2 * self.r})")
        return CyclotomicNum(self.r, self.poly.invert(cyclotomic_modulus(self.r)))

    def __truediv__(self, other) -> CyclotomicNum:
        return self * self._same_level(other).inverse()

    def __pow__(self, n: int) -> CyclotomicNum:
        base = self if n >= 0 else self.inverse()
        result = CyclotomicNum.from_int(self.r, 1)
        for _ in range(abs(n)):
            result = result * base
        return result

    # ----- inspection -----

    def is_zero(self) -> bool:
        return self.poly.is_zero

    def coefficients(self) -> list:
        """Rational coefficients of 1, z, z^2, ... (lowest first)."""
        return list(reversed(self.poly.all_coeffs())) if not self.is_zero() else []

    def to_complex(self, precision_bits: int | None = None) -> mpmath.mpc:
        bits = PRECISION_BITS if precision_bits is None else precision_bits
        with mpmath.workprec(bits):
            zeta = mpmath.expjpi(mpmath.mpf(1) / self.r)
            total = mpmath.mpc(0)
            for k, c in enumerate(self.coefficients()):
                if c:
                    total += mpmath.mpf(int(c.p)) / int(c.q) * zeta ** k
            return total

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = CyclotomicNum.from_int(self.r, other)
        if not isinstance(other, CyclotomicNum):
            return NotImplemented
        return self.r == other.r and self.poly == other.poly

    def __hash__(self) -> int:
        return hash((self.r, tuple(self.coefficients())))

    def __repr__(self) -> str:
        return f"CyclotomicNum(r={self.r}, {self.poly.as_expr()})"

    def to_json(self) -> dict:
        return {"r": self.r, "coeffs": [str(c) for c in self.coefficients()]}


@dataclass(frozen=True)
class QuantumContext:
    """Level-r data: Delta_i for i <= (r-3)/2, <Omega_r>, eta^2 and kappa^6."""
    r: int
    omega_coeffs: tuple[LaurentPoly, ...]
    omega_bracket: CyclotomicNum
    eta_sq: CyclotomicNum
    kappa6: CyclotomicNum
