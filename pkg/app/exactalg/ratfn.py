"""
Rational functions in A, kept in lowest terms.

Normal form:
  - the denominator is an ordinary polynomial in A (no negative powers),
    with nonzero constant term and positive leading coefficient;
  - numerator and denominator are coprime in Z[A];
  - any monomial unit +-A^k lives in the numerator.

Two equal functions therefore have identical numerator and denominator.
The gcd work is delegated to sympy's dense univariate ring over ZZ.
"""
from __future__ import annotations

import math
from typing import Union

from sympy.polys.domains import ZZ
from sympy.polys.rings import ring

from app.core.errors import PoleError
from app.exactalg.laurent import LaurentPoly

ZX, _X = ring("A", ZZ)

Scalar = Union[int, LaurentPoly, "RationalFn"]


def to_ring(poly: LaurentPoly):
    # poly must have no negative exponents
    return ZX.from_dict({(exp,): coeff for exp, coeff in poly.terms.items()})


def from_ring(elem) -> LaurentPoly:
    return LaurentPoly({monom[0]: int(coeff) for monom, coeff in elem.items()})


class RationalFn:
    __slots__ = ("_num", "_den", "_hash")

    def __init__(self, numerator: LaurentPoly | int, denominator: LaurentPoly | int = 1):
        num = numerator if isinstance(numerator, LaurentPoly) else LaurentPoly.constant(numerator)
        den = denominator if isinstance(denominator, LaurentPoly) else LaurentPoly.constant(denominator)
        if den.is_zero():
            raise PoleError("rational function with zero denominator")
        self._num, self._den = self._normalize(num, den)
        self._hash = None

    @staticmethod
    def _normalize(num: LaurentPoly, den: LaurentPoly) -> tuple[LaurentPoly, LaurentPoly]:
        if num.is_zero():
            return LaurentPoly(), LaurentPoly.constant(1)
        shift = num.low_degree - den.low_degree
        num = num.shift(-num.low_degree)
        den = den.shift(-den.low_degree)
        if den.is_monomial():
            # denominator is the constant c after the shift
            c = den.leading_coefficient
            g = 0
            for coeff in num.terms.values():
                g = math.gcd(g, coeff)
            g = math.gcd(g, c)
            if c < 0:
                g = -g
            num = LaurentPoly({e: v // g for e, v in num.terms.items()})
            den = LaurentPoly.constant(c // g)
        else:
            _, p, q = to_ring(num).cofactors(to_ring(den))
            num, den = from_ring(p), from_ring(q)
            if den.leading_coefficient < 0:
                num, den = -num, -den
        return num.shift(shift), den

    @classmethod
    def _raw(cls, num: LaurentPoly, den: LaurentPoly) -> RationalFn:
        obj = cls.__new__(cls)
        obj._num = num
        obj._den = den
        obj._hash = None
        return obj

    @classmethod
    def coerce(cls, value: Scalar) -> RationalFn:
        if isinstance(value, RationalFn):
            return value
        if isinstance(value, LaurentPoly):
            return cls._raw(value, _ONE_POLY)
        if isinstance(value, int):
            return cls._raw(LaurentPoly.constant(value), _ONE_POLY)
        raise TypeError(f"cannot coerce {type(value).__name__} to RationalFn")

    # ------------------------------------------------------------------

    @property
    def numerator(self) -> LaurentPoly:
        return self._num

    @property
    def denominator(self) -> LaurentPoly:
        return self._den

    def is_zero(self) -> bool:
        return self._num.is_zero()

    def is_laurent(self) -> bool:
        return self._den == _ONE_POLY

    def as_laurent(self) -> LaurentPoly:
        if not self.is_laurent():
            raise ValueError(f"{self} is not a Laurent polynomial")
        return self._num

    # ------------------------------------------------------------------

    def __add__(self, other: Scalar) -> RationalFn:
        try:
            rhs = RationalFn.coerce(other)
        except TypeError:
            return NotImplemented
        if self._den == rhs._den:
            return RationalFn(self._num + rhs._num, self._den)
        return RationalFn(self._num * rhs._den + rhs._num * self._den, self._den * rhs._den)

    __radd__ = __add__

    def __neg__(self) -> RationalFn:
        return RationalFn._raw(-self._num, self._den)

    def __sub__(self, other: Scalar) -> RationalFn:
        try:
            rhs = RationalFn.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-rhs)

    def __rsub__(self, other: Scalar) -> RationalFn:
        return (-self) + other

    def __mul__(self, other: Scalar) -> RationalFn:
        try:
            rhs = RationalFn.coerce(other)
        except TypeError:
            return NotImplemented
        if self.is_zero() or rhs.is_zero():
            return RationalFn._raw(LaurentPoly(), _ONE_POLY)
        return RationalFn(self._num * rhs._num, self._den * rhs._den)

    __rmul__ = __mul__

    def inverse(self) -> RationalFn:
        if self.is_zero():
            raise PoleError("division by the zero rational function")
        return RationalFn(self._den, self._num)

    def __truediv__(self, other: Scalar) -> RationalFn:
        try:
            rhs = RationalFn.coerce(other)
        except TypeError:
            return NotImplemented
        return self * rhs.inverse()

    def __rtruediv__(self, other: Scalar) -> RationalFn:
        return RationalFn.coerce(other) * self.inverse()

    def __pow__(self, n: int) -> RationalFn:
        if n < 0:
            return self.inverse() ** (-n)
        return RationalFn._raw(self._num ** n, self._den ** n) if n else RationalFn.coerce(1)

    def bar(self) -> RationalFn:
        return RationalFn(self._num.bar(), self._den.bar())

    # ------------------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, LaurentPoly)):
            other = RationalFn.coerce(other)
        if not isinstance(other, RationalFn):
            return NotImplemented
        return self._num == other._num and self._den == other._den

    def cross_equal(self, other: Scalar) -> bool:
        """Equality by cross-multiplication; agrees with == on normalized values."""
        rhs = RationalFn.coerce(other)
        return self._num * rhs._den == rhs._num * self._den

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._num, self._den))
        return self._hash

    def __bool__(self) -> bool:
        return not self.is_zero()

    def to_text(self) -> str:
        if self.is_laurent():
            return self._num.to_text()
        return f"({self._num.to_text()}) / ({self._den.to_text()})"

    __str__ = to_text

    def __repr__(self) -> str:
        return f"RationalFn('{self.to_text()}')"

    def to_json(self) -> dict:
        return {"num": self._num.to_text(), "den": self._den.to_text()}

    @classmethod
    def from_json(cls, data: dict) -> RationalFn:
        return cls(LaurentPoly.from_text(data["num"]), LaurentPoly.from_text(data.get("den", "1*A^0")))


def common_denominator(values) -> LaurentPoly:
    """Least common multiple of the denominators of `values` in Z[A]."""
    acc = ZX.one
    for value in values:
        den = RationalFn.coerce(value)._den
        if den != _ONE_POLY:
            acc = acc.lcm(to_ring(den))
    return from_ring(acc)


def scaled_numerator(value: RationalFn, denominator: LaurentPoly) -> LaurentPoly:
    """The N with value = N / denominator; `denominator` must be a multiple of value's."""
    if value._den == denominator:
        return value._num
    quotient, rem = divmod(to_ring(denominator), to_ring(value._den))
    if rem:
        raise ValueError(f"{denominator} is not a multiple of {value._den}")
    return value._num * from_ring(quotient)


_ONE_POLY = LaurentPoly.constant(1)
