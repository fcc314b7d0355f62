"""
Temperley-Lieb diagrams and their linear combinations.

A PlanarMatching is a crossingless diagram from `bottom` points to `top`
points. Boundary points are numbered
  - top points 0 .. top-1, left to right;
  - bottom points top .. top+bottom-1, left to right.
`partner[p]` is the point joined to p.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Mapping

from app.core.errors import StrandMismatchError
from app.exactalg.laurent import LaurentPoly
from app.exactalg.ratfn import RationalFn, common_denominator, scaled_numerator
from app.recoupling.coefficients import delta

LOOP_VALUE = delta(1)


@dataclass(frozen=True)
class PlanarMatching:
    top: int
    bottom: int
    partner: tuple[int, ...]

    def __post_init__(self):
        size = self.top + self.bottom
        if len(self.partner) != size:
            raise ValueError(f"matching needs {size} partners, got {len(self.partner)}")
        for p, q in enumerate(self.partner):
            if q == p or not 0 <= q < size or self.partner[q] != p:
                raise ValueError(f"point {p} is not matched consistently")
        if not self._is_planar():
            raise ValueError(f"matching {self.partner} has crossings")

    def _circle_position(self, p: int) -> int:
        # top left-to-right, then bottom right-to-left
        if p < self.top:
            return p
        return self.top + (self.bottom - 1 - (p - self.top))

    def _is_planar(self) -> bool:
        order = sorted(range(self.top + self.bottom), key=self._circle_position)
        stack: list[int] = []
        seen: set[int] = set()
        for p in order:
            q = self.partner[p]
            if q in seen:
                if not stack or stack[-1] != q:
                    return False
                stack.pop()
            else:
                stack.append(p)
            seen.add(p)
        return not stack

    @classmethod
    def from_pairs(cls, top: int, bottom: int, pairs: Iterable[tuple[int, int]]) -> PlanarMatching:
        partner = [-1] * (top + bottom)
        for p, q in pairs:
            partner[p], partner[q] = q, p
        return cls(top, bottom, tuple(partner))

    @classmethod
    def identity(cls, n: int) -> PlanarMatching:
        return cls.from_pairs(n, n, ((i, n + i) for i in range(n)))

    @classmethod
    def hook(cls, n: int, i: int) -> PlanarMatching:
        """e_i on n strands joins strands i-1 and i (1 <= i < n) at top and bottom."""
        if not 1 <= i < n:
            raise ValueError(f"hook e_{i} needs 1 <= i < {n}")
        pairs = [(i - 1, i), (n + i - 1, n + i)]
        pairs += [(k, n + k) for k in range(n) if k not in (i - 1, i)]
        return cls.from_pairs(n, n, pairs)

    def transpose(self) -> PlanarMatching:
        """Reflect top and bottom."""
        def move(p: int) -> int:
            return self.bottom + p if p < self.top else p - self.top
        partner = [0] * (self.top + self.bottom)
        for p, q in enumerate(self.partner):
            partner[move(p)] = move(q)
        return PlanarMatching(self.bottom, self.top, tuple(partner))

    def is_identity(self) -> bool:
        return self.top == self.bottom and all(self.partner[i] == self.top + i for i in range(self.top))


@lru_cache(maxsize=200_000)
def compose_matchings(x: PlanarMatching, y: PlanarMatching) -> tuple[PlanarMatching, int]:
    """
    x stacked on top of y (x after y). Returns the resulting diagram and the
    number of closed loops formed in the middle.
    """
    if x.bottom != y.top:
        raise StrandMismatchError(f"cannot stack a {x.bottom}-point bottom on a {y.top}-point top")
    xt, m, yb = x.top, x.bottom, y.bottom
    partner = [-1] * (xt + yb)
    visited = [False] * m

    def walk(side: str, idx: int) -> int:
        while True:
            if side == "x":
                q = x.partner[idx]
                if q < xt:
                    return q
                visited[q - xt] = True
                side, idx = "y", q - xt
            else:
                q = y.partner[idx]
                if q >= m:
                    return xt + (q - m)
                visited[q] = True
                side, idx = "x", xt + q

    for p in range(xt):
        if partner[p] < 0:
            end = walk("x", p)
            partner[p], partner[end] = end, p
    for j in range(yb):
        p = xt + j
        if partner[p] < 0:
            end = walk("y", m + j)
            partner[p], partner[end] = end, p

    loops = 0
    for j in range(m):
        if visited[j]:
            continue
        loops += 1
        # every middle point left over lies on a closed loop
        start = j
        cur = j
        while True:
            visited[cur] = True
            nxt = x.partner[xt + cur] - xt
            visited[nxt] = True
            cur = y.partner[nxt]
            if cur == start:
                break
    return PlanarMatching(xt, yb, tuple(partner)), loops


@lru_cache(maxsize=50_000)
def tensor_matchings(x: PlanarMatching, y: PlanarMatching) -> PlanarMatching:
    """x to the left of y."""
    top, bottom = x.top + y.top, x.bottom + y.bottom

    def place_x(p: int) -> int:
        return p if p < x.top else top + (p - x.top)

    def place_y(p: int) -> int:
        return x.top + p if p < y.top else top + x.bottom + (p - y.top)

    partner = [0] * (top + bottom)
    for p, q in enumerate(x.partner):
        partner[place_x(p)] = place_x(q)
    for p, q in enumerate(y.partner):
        partner[place_y(p)] = place_y(q)
    return PlanarMatching(top, bottom, tuple(partner))


def closure_loops(x: PlanarMatching) -> int:
    """Loops formed by the trace closure (top i joined to bottom i on the right)."""
    if x.top != x.bottom:
        raise StrandMismatchError("trace closure needs as many top as bottom points")
    n = x.top
    seen = [False] * (2 * n)
    loops = 0
    for start in range(2 * n):
        if seen[start]:
            continue
        loops += 1
        p = start
        while not seen[p]:
            seen[p] = True
            q = x.partner[p]
            seen[q] = True
            p = q + n if q < n else q - n
    return loops


def _loop_power(k: int) -> LaurentPoly:
    return LOOP_VALUE ** k


class TLElement:
    """Linear combination of diagrams with a common shape, coefficients in Q(A)."""

    __slots__ = ("top", "bottom", "combo")

    def __init__(self, top: int, bottom: int, combo: Mapping[PlanarMatching, RationalFn] | None = None):
        self.top = top
        self.bottom = bottom
        clean: dict[PlanarMatching, RationalFn] = {}
        for diagram, coeff in (combo or {}).items():
            if (diagram.top, diagram.bottom) != (top, bottom):
                raise StrandMismatchError(
                    f"diagram {diagram.top}<-{diagram.bottom} in a {top}<-{bottom} element"
                )
            coeff = RationalFn.coerce(coeff)
            if not coeff.is_zero():
                clean[diagram] = coeff
        self.combo = clean

    @classmethod
    def basis(cls, diagram: PlanarMatching, coeff=1) -> TLElement:
        return cls(diagram.top, diagram.bottom, {diagram: RationalFn.coerce(coeff)})

    @classmethod
    def identity(cls, n: int) -> TLElement:
        return cls.basis(PlanarMatching.identity(n))

    def __len__(self) -> int:
        return len(self.combo)

    def __add__(self, other: TLElement) -> TLElement:
        if (self.top, self.bottom) != (other.top, other.bottom):
            raise StrandMismatchError("cannot add elements of different shapes")
        out = dict(self.combo)
        for diagram, coeff in other.combo.items():
            out[diagram] = out[diagram] + coeff if diagram in out else coeff
        return TLElement(self.top, self.bottom, out)

    def scale(self, factor) -> TLElement:
        factor = RationalFn.coerce(factor)
        return TLElement(self.top, self.bottom, {d: c * factor for d, c in self.combo.items()})

    def __sub__(self, other: TLElement) -> TLElement:
        return self + other.scale(-1)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TLElement):
            return NotImplemented
        return (self.top, self.bottom, self.combo) == (other.top, other.bottom, other.combo)

    def tensor(self, other: TLElement) -> TLElement:
        out: dict[PlanarMatching, RationalFn] = {}
        for dx, cx in self.combo.items():
            for dy, cy in other.combo.items():
                out[tensor_matchings(dx, dy)] = cx * cy
        return TLElement(self.top + other.top, self.bottom + other.bottom, out)

    def transpose(self) -> TLElement:
        return TLElement(self.bottom, self.top, {d.transpose(): c for d, c in self.combo.items()})

    def scalar(self) -> RationalFn:
        """Coefficient of the empty diagram of a closed (0 <- 0) element."""
        if self.top or self.bottom:
            raise StrandMismatchError("only closed networks evaluate to a scalar")
        return self.combo.get(PlanarMatching(0, 0, ()), RationalFn.coerce(0))

    def trace(self) -> RationalFn:
        acc: dict[int, RationalFn] = {}
        for diagram, coeff in self.combo.items():
            k = closure_loops(diagram)
            acc[k] = acc[k] + coeff if k in acc else coeff
        return sum((c * _loop_power(k) for k, c in acc.items()), RationalFn.coerce(0))

    def coefficient(self, diagram: PlanarMatching) -> RationalFn:
        return self.combo.get(diagram, RationalFn.coerce(0))

    def __repr__(self) -> str:
        return f"TLElement({self.top}<-{self.bottom}, {len(self.combo)} diagrams)"


def _common_form(x: TLElement) -> tuple[LaurentPoly, dict[PlanarMatching, LaurentPoly]]:
    den = common_denominator(x.combo.values())
    return den, {d: scaled_numerator(c, den) for d, c in x.combo.items()}


def tl_multiply(x: TLElement, y: TLElement) -> TLElement:
    """
    x stacked on y. Each closed loop contributes the loop value
    -A^2 - A^-2. Numerators are accumulated over the product of the two
    common denominators and normalized once per resulting diagram.
    """
    if x.bottom != y.top:
        raise StrandMismatchError(f"cannot multiply: {x.bottom} bottom points vs {y.top} top points")
    if not x.combo or not y.combo:
        return TLElement(x.top, y.bottom)
    den_x, num_x = _common_form(x)
    den_y, num_y = _common_form(y)

    acc: dict[PlanarMatching, dict[int, LaurentPoly]] = {}
    for dx, nx in num_x.items():
        for dy, ny in num_y.items():
            diagram, loops = compose_matchings(dx, dy)
            slot = acc.setdefault(diagram, {})
            term = nx * ny
            slot[loops] = slot[loops] + term if loops in slot else term

    den = den_x * den_y
    out: dict[PlanarMatching, RationalFn] = {}
    for diagram, by_loops in acc.items():
        total = LaurentPoly()
        for loops, part in by_loops.items():
            total = total + (part * _loop_power(loops) if loops else part)
        if not total.is_zero():
            out[diagram] = RationalFn(total, den)
    return TLElement(x.top, y.bottom, out)
