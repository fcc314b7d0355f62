"""
Sparse Laurent polynomials in the variable A with integer coefficients.

A value is a mapping exponent -> coefficient with no zero coefficients, so
structural comparison is equality in Z[A, A^-1].
"""
from __future__ import annotations

import re
from types import MappingProxyType
from typing import Mapping, Union

IntLike = Union[int, "LaurentPoly"]

_TERM_RE = re.compile(r"(-?\d+)\*A\^(-?\d+)")


class LaurentPoly:
    """
    An element of Z[A, A^-1].

    >>> (A + A**-1) * (A - A**-1)
    LaurentPoly('-1*A^-2 + 1*A^2')
    """
    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, int] | None = None):
        clean: dict[int, int] = {}
        for exp, coeff in (terms or {}).items():
            coeff = int(coeff)
            if coeff:
                clean[int(exp)] = coeff
        self._terms = clean
        self._hash = None

    # ------------------------------------------------------------------
    # constructors
    # ------------------------------------------------------------------

    @classmethod
    def monomial(cls, exp: int, coeff: int = 1) -> LaurentPoly:
        return cls({exp: coeff})

    @classmethod
    def constant(cls, value: int) -> LaurentPoly:
        return cls({0: value})

    @classmethod
    def _wrap(cls, clean: dict[int, int]) -> LaurentPoly:
        # caller guarantees no zero coefficients
        obj = cls.__new__(cls)
        obj._terms = clean
        obj._hash = None
        return obj

    @classmethod
    def from_text(cls, text: str) -> LaurentPoly:
        """Parse the canonical text form written by to_text()."""
        text = text.strip()
        if text == "0":
            return cls()
        terms: dict[int, int] = {}
        matches = _TERM_RE.findall(text)
        if not matches or _TERM_RE.sub("", text).replace("+", "").strip():
            raise ValueError(f"not a Laurent polynomial in canonical form: {text!r}")
        for coeff, exp in matches:
            terms[int(exp)] = terms.get(int(exp), 0) + int(coeff)
        return cls(terms)

    # ------------------------------------------------------------------
    # inspection
    # ------------------------------------------------------------------

    @property
    def terms(self) -> Mapping[int, int]:
        return MappingProxyType(self._terms)

    def coefficient(self, exp: int) -> int:
        return self._terms.get(exp, 0)

    def is_zero(self) -> bool:
        return not self._terms

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    @property
    def low_degree(self) -> int:
        if not self._terms:
            raise ValueError("the zero polynomial has no degree")
        return min(self._terms)

    @property
    def high_degree(self) -> int:
        if not self._terms:
            raise ValueError("the zero polynomial has no degree")
        return max(self._terms)

    @property
    def span(self) -> int:
        """Exponent span high - low; 0 for monomials."""
        return self.high_degree - self.low_degree

    @property
    def leading_coefficient(self) -> int:
        return self._terms[self.high_degree]

    # ------------------------------------------------------------------
    # ring operations
    # ------------------------------------------------------------------

    @staticmethod
    def _coerce(other: IntLike) -> LaurentPoly | None:
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, int):
            return LaurentPoly.constant(other)
        return None

    def __add__(self, other: IntLike) -> LaurentPoly:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        out = dict(self._terms)
        for exp, coeff in rhs._terms.items():
            total = out.get(exp, 0) + coeff
            if total:
                out[exp] = total
            else:
                out.pop(exp, None)
        return LaurentPoly._wrap(out)

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly._wrap({e: -c for e, c in self._terms.items()})

    def __sub__(self, other: IntLike) -> LaurentPoly:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self + (-rhs)

    def __rsub__(self, other: IntLike) -> LaurentPoly:
        lhs = self._coerce(other)
        if lhs is None:
            return NotImplemented
        return lhs - self

    def __mul__(self, other: IntLike) -> LaurentPoly:
        if isinstance(other, int):
            if other == 0:
                return LaurentPoly()
            return LaurentPoly._wrap({e: c * other for e, c in self._terms.items()})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        out: dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> LaurentPoly:
        if n < 0:
            if not self.is_monomial() or abs(self.leading_coefficient) != 1:
                raise ValueError("only the units +-A^k have inverses in Z[A, A^-1]")
            (exp, coeff), = self._terms.items()
            return LaurentPoly.monomial(exp * n, coeff ** (-n))
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, k: int) -> LaurentPoly:
        """Multiply by A^k."""
        return LaurentPoly._wrap({e + k: c for e, c in self._terms.items()})

    def bar(self) -> LaurentPoly:
        """The involution A -> A^-1."""
        return LaurentPoly._wrap({-e: c for e, c in self._terms.items()})

    def evaluate(self, x):
        """Substitute x for A; x must support integer powers (negative ones if needed)."""
        total = 0
        for exp, coeff in self._terms.items():
            total = total + coeff * x ** exp
        return total

    # ------------------------------------------------------------------
    # comparison / display
    # ------------------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = LaurentPoly.constant(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self._terms)

    def to_text(self) -> str:
        if not self._terms:
            return "0"
        return " + ".join(f"{self._terms[e]}*A^{e}" for e in sorted(self._terms))

    __str__ = to_text

    def __repr__(self) -> str:
        return f"LaurentPoly('{self.to_text()}')"


ZERO = LaurentPoly()
ONE = LaurentPoly.constant(1)
A = LaurentPoly.monomial(1)
