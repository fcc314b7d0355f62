"""
Cyclotomic polynomials and unit detection in R = Z[A, A^-1] localized at
all cyclotomic polynomials.

A Laurent polynomial is a unit of R exactly when it factors as
+-A^k * prod(Phi_n).  Detection is trial division, so it always terminates:
deg Phi_n = phi(n) >= sqrt(n/2), hence no factor of index above
2 * span^2 + 2 can divide a polynomial of exponent span `span`.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache

from app.core.errors import InvalidParamsError
from app.exactalg.laurent import LaurentPoly
from app.exactalg.ratfn import RationalFn, ZX, from_ring, to_ring


@lru_cache(maxsize=None)
def _cyclotomic_ring(n: int):
    # Phi_n = (A^n - 1) / prod_{d | n, d < n} Phi_d
    poly = ZX.from_dict({(n,): 1, (0,): -1})
    for d in range(1, n):
        if n % d == 0:
            poly, rem = divmod(poly, _cyclotomic_ring(d))
            assert not rem, f"Phi_{d} does not divide A^{n} - 1"
    return poly


def cyclotomic(n: int) -> LaurentPoly:
    """The n-th cyclotomic polynomial in A."""
    if n < 1:
        raise InvalidParamsError(f"cyclotomic index must be positive, got {n}")
    return from_ring(_cyclotomic_ring(n))


def default_search_bound(f: LaurentPoly) -> int:
    return 2 * f.span ** 2 + 2


@dataclass(frozen=True)
class UnitCertificate:
    """
    Witness that a value is sign * A^k * prod(Phi_n) / prod(Phi_m).

    `cyclotomic_indices` holds the n's (with repetition), `inverse_indices`
    the m's; the latter is empty for Laurent polynomials.
    """
    sign: int
    monomial_power: int
    cyclotomic_indices: tuple[int, ...] = ()
    inverse_indices: tuple[int, ...] = field(default=())

    def reconstruct(self) -> RationalFn:
        num = LaurentPoly.monomial(self.monomial_power, self.sign)
        for n in self.cyclotomic_indices:
            num = num * cyclotomic(n)
        den = LaurentPoly.constant(1)
        for m in self.inverse_indices:
            den = den * cyclotomic(m)
        return RationalFn(num, den)

    def describe(self) -> str:
        parts = [f"{'+' if self.sign > 0 else '-'}A^{self.monomial_power}"]
        for n, mult in sorted(Counter(self.cyclotomic_indices).items()):
            parts.append(f"Phi_{n}" + (f"^{mult}" if mult > 1 else ""))
        text = " * ".join(parts)
        if self.inverse_indices:
            den = " * ".join(
                f"Phi_{m}" + (f"^{mult}" if mult > 1 else "")
                for m, mult in sorted(Counter(self.inverse_indices).items())
            )
            text = f"{text} / ({den})"
        return text

    def to_json(self) -> dict:
        return {
            "sign": self.sign,
            "monomial_power": self.monomial_power,
            "cyclotomic_indices": list(self.cyclotomic_indices),
            "inverse_indices": list(self.inverse_indices),
        }


def _strip_cyclotomics(f: LaurentPoly, n_max: int | None) -> tuple[int, int, list[int]] | None:
    if f.is_zero():
        raise InvalidParamsError("zero is not a unit")
    k = f.low_degree
    bound = n_max if n_max is not None else default_search_bound(f)
    g = to_ring(f.shift(-k))
    indices: list[int] = []
    n = 1
    while g.degree() > 0 and n <= bound:
        phi = _cyclotomic_ring(n)
        if phi.degree() > g.degree():
            n += 1
            continue
        q, r = divmod(g, phi)
        if r:
            n += 1
            continue
        g = q
        indices.append(n)
    if g.degree() > 0:
        return None
    c = int(g.LC)
    if abs(c) != 1:
        return None
    return c, k, indices


def is_unit_in_R(f: LaurentPoly, n_max: int | None = None) -> UnitCertificate | None:
    """Return a certificate when f = +-A^k * prod(Phi_n), else None."""
    stripped = _strip_cyclotomics(f, n_max)
    if stripped is None:
        return None
    sign, k, indices = stripped
    return UnitCertificate(sign=sign, monomial_power=k, cyclotomic_indices=tuple(indices))


def is_unit_ratfn(f: RationalFn, n_max: int | None = None) -> UnitCertificate | None:
    """Unit test for a rational function: numerator and denominator must both be units."""
    num = is_unit_in_R(f.numerator, n_max)
    if num is None:
        return None
    den = is_unit_in_R(f.denominator, n_max)
    if den is None:
        return None
    return UnitCertificate(
        sign=num.sign * den.sign,
        monomial_power=num.monomial_power - den.monomial_power,
        cyclotomic_indices=num.cyclotomic_indices,
        inverse_indices=den.cyclotomic_indices,
    )


def is_signed_monomial(f: RationalFn | LaurentPoly) -> tuple[int, int] | None:
    """(sign, k) when f = +-A^k exactly."""
    if isinstance(f, RationalFn):
        if not f.is_laurent():
            return None
        f = f.numerator
    if f.is_monomial() and abs(f.leading_coefficient) == 1:
        return f.leading_coefficient, f.low_degree
    return None
