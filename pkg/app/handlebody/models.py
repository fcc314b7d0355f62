"""
Basis elements of the genus-2 handlebody skein module and vectors over them.

A triple (a, b, c) colors the spine graph: a and c on the two loops, b on
the connecting edge. Valid triples have b even, b <= 2a and b <= 2c.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Mapping

from app.core.errors import InvalidTripleError
from app.exactalg.ratfn import RationalFn, Scalar


@dataclass(frozen=True)
class BasisTriple:
    a: int
    b: int
    c: int

    def __post_init__(self):
        a, b, c = self.a, self.b, self.c
        if min(a, b, c) < 0:
            raise InvalidTripleError(f"({a},{b},{c}): labels must be nonnegative")
        if b % 2:
            raise InvalidTripleError(f"({a},{b},{c}): b must be even")
        if b > 2 * a or b > 2 * c:
            raise InvalidTripleError(f"({a},{b},{c}): need b <= 2a and b <= 2c")

    @classmethod
    def is_valid(cls, a: int, b: int, c: int) -> bool:
        return min(a, b, c) >= 0 and b % 2 == 0 and b <= 2 * a and b <= 2 * c

    @property
    def sort_key(self) -> tuple[int, int, int, int]:
        """Descent order: max(a, c), then a, then c, then b."""
        return max(self.a, self.c), self.a, self.c, self.b

    def __lt__(self, other: BasisTriple) -> bool:
        return self.sort_key < other.sort_key

    def mirror(self) -> BasisTriple:
        """Rotation exchanging the two handles."""
        return BasisTriple(self.c, self.b, self.a)

    def as_tuple(self) -> tuple[int, int, int]:
        return self.a, self.b, self.c

    def __str__(self) -> str:
        return f"({self.a},{self.b},{self.c})"


GENERATORS: tuple[BasisTriple, ...] = (
    BasisTriple(0, 0, 0),
    BasisTriple(0, 0, 1),
    BasisTriple(1, 0, 0),
    BasisTriple(1, 0, 1),
    BasisTriple(0, 0, 2),
)


def order_less(s: BasisTriple, t: BasisTriple) -> bool:
    return s.sort_key < t.sort_key


def h1_class(t: BasisTriple) -> tuple[int, int]:
    """Z/2 homology class: parity of the two loop labels."""
    return t.a % 2, t.c % 2


class SkeinVector:
    """Finite combination of basis triples with coefficients in Q(A)."""

    __slots__ = ("_support",)

    def __init__(self, support: Mapping[BasisTriple, Scalar] | None = None):
        clean: dict[BasisTriple, RationalFn] = {}
        for triple, coeff in (support or {}).items():
            coeff = RationalFn.coerce(coeff)
            if not coeff.is_zero():
                clean[triple] = coeff
        self._support = clean

    @classmethod
    def basis(cls, triple: BasisTriple, coeff: Scalar = 1) -> SkeinVector:
        return cls({triple: coeff})

    @property
    def support(self) -> Mapping[BasisTriple, RationalFn]:
        return dict(self._support)

    def coefficient(self, triple: BasisTriple) -> RationalFn:
        return self._support.get(triple, RationalFn.coerce(0))

    def is_zero(self) -> bool:
        return not self._support

    def triples(self) -> list[BasisTriple]:
        """Support triples, highest first."""
        return sorted(self._support, key=lambda t: t.sort_key, reverse=True)

    def highest(self) -> BasisTriple | None:
        return max(self._support, key=lambda t: t.sort_key, default=None)

    def __iter__(self) -> Iterator[tuple[BasisTriple, RationalFn]]:
        return iter(self._support.items())

    def __len__(self) -> int:
        return len(self._support)

    def __add__(self, other: SkeinVector) -> SkeinVector:
        if not isinstance(other, SkeinVector):
            return NotImplemented
        out = dict(self._support)
        for triple, coeff in other._support.items():
            out[triple] = out[triple] + coeff if triple in out else coeff
        return SkeinVector(out)

    def __neg__(self) -> SkeinVector:
        return SkeinVector({t: -c for t, c in self._support.items()})

    def __sub__(self, other: SkeinVector) -> SkeinVector:
        return self + (-other)

    def scale(self, factor: Scalar) -> SkeinVector:
        factor = RationalFn.coerce(factor)
        return SkeinVector({t: c * factor for t, c in self._support.items()})

    def mirror(self) -> SkeinVector:
        return SkeinVector({t.mirror(): c for t, c in self._support.items()})

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SkeinVector):
            return NotImplemented
        return self._support == other._support

    def __repr__(self) -> str:
        inner = ", ".join(f"{t}: {c}" for t, c in sorted(self._support.items(), key=lambda kv: kv[0].sort_key))
        return f"SkeinVector({{{inner}}})"

    # ----- JSON -----

    def to_json(self) -> dict:
        terms = []
        for triple in sorted(self._support, key=lambda t: t.sort_key):
            terms.append({"a": triple.a, "b": triple.b, "c": triple.c, "coeff": self._support[triple].to_json()})
        return {"terms": terms}

    @classmethod
    def from_json(cls, data: dict) -> SkeinVector:
        support: dict[BasisTriple, RationalFn] = {}
        for term in data.get("terms", []):
            triple = BasisTriple(int(term["a"]), int(term["b"]), int(term["c"]))
            support[triple] = RationalFn.from_json(term["coeff"])
        return cls(support)
