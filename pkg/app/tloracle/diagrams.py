"""
Building blocks for closed networks: Jones-Wenzl idempotents, trivalent
vertices and the crossing.

Vertex diagrams for a triple (a, b, c) join
  - (a+b-c)/2 strands of a to b,
  - (b+c-a)/2 strands of b to c,
  - (a+c-b)/2 strands of a to c, outermost.
"""
from __future__ import annotations

from functools import lru_cache
from typing import Iterator, Sequence

from app.core.errors import CapExceededError, InvalidParamsError, InvalidTripleError
from app.core.log import get_logger
from app.exactalg.laurent import A
from app.exactalg.ratfn import RationalFn
from app.recoupling.coefficients import admissible, delta
from app.tloracle.models import PlanarMatching, TLElement, tl_multiply

logger = get_logger(__name__, "ORACLE")

DEFAULT_JW_CAP = 8


def _noncrossing(points: Sequence[int]) -> Iterator[list[tuple[int, int]]]:
    if not points:
        yield []
        return
    first = points[0]
    for k in range(1, len(points), 2):
        for inner in _noncrossing(points[1:k]):
            for outer in _noncrossing(points[k + 1:]):
                yield [(first, points[k])] + inner + outer


def all_matchings(n: int) -> list[PlanarMatching]:
    """Every crossingless n <- n diagram; there are Catalan(n) of them."""
    # boundary in circle order: top left-to-right, then bottom right-to-left
    circle = list(range(n)) + [n + (n - 1 - k) for k in range(n)]
    return [PlanarMatching.from_pairs(n, n, pairs) for pairs in _noncrossing(circle)]


# ----- Jones-Wenzl -----

@lru_cache(maxsize=None)
def _jones_wenzl(n: int) -> TLElement:
    if n <= 1:
        return TLElement.identity(n)
    prev = _jones_wenzl(n - 1).tensor(TLElement.identity(1))
    hook = TLElement.basis(PlanarMatching.hook(n, n - 1))
    middle = tl_multiply(tl_multiply(prev, hook), prev)
    coeff = RationalFn.coerce(delta(n - 2)) / delta(n - 1)
    result = prev - middle.scale(coeff)
    logger.debug("f_%d built with %d diagrams", n, len(result))
    return result


def jones_wenzl(n: int, cap: int = DEFAULT_JW_CAP) -> TLElement:
    """
    f_n by the Wenzl recursion
    f_n = f_{n-1} x 1 - (Delta_{n-2} / Delta_{n-1}) (f_{n-1} x 1) e_{n-1} (f_{n-1} x 1).
    """
    if n < 0:
        raise InvalidParamsError(f"idempotent index must be nonnegative, got {n}")
    if n > cap:
        raise CapExceededError(f"f_{n} exceeds the oracle cap of {cap} strands")
    return _jones_wenzl(n)


# ----- vertices -----

def _require(a: int, b: int, c: int) -> None:
    if not admissible(a, b, c):
        raise InvalidTripleError(f"({a},{b},{c}) is not admissible")


def cup_vertex(a: int, b: int, c: int) -> PlanarMatching:
    """Trivalent vertex as a diagram from nothing to a x b x c."""
    _require(a, b, c)
    ab, bc, ac = (a + b - c) // 2, (b + c - a) // 2, (a + c - b) // 2
    n = a + b + c
    pairs = [(a - 1 - t, a + t) for t in range(ab)]
    pairs += [(a + b - 1 - t, a + b + t) for t in range(bc)]
    pairs += [(ac - 1 - t, n - ac + t) for t in range(ac)]
    return PlanarMatching.from_pairs(n, 0, pairs)


def cap_vertex(a: int, b: int, c: int) -> PlanarMatching:
    """Trivalent vertex as a diagram from a x b x c to nothing."""
    return cup_vertex(a, b, c).transpose()


def split_vertex(a: int, d: int, e: int) -> PlanarMatching:
    """Trivalent vertex as a diagram from a to d x e."""
    _require(a, d, e)
    x = (d + e - a) // 2
    top = d + e
    pairs = [(t, top + t) for t in range(d - x)]
    pairs += [(d - 1 - t, d + t) for t in range(x)]
    pairs += [(d + x + t, top + (d - x) + t) for t in range(e - x)]
    return PlanarMatching.from_pairs(top, a, pairs)


def merge_vertex(d: int, e: int, a: int) -> PlanarMatching:
    """Trivalent vertex as a diagram from d x e to a."""
    return split_vertex(a, d, e).transpose()


# ----- layers -----

def embed(element: TLElement, left: int, right: int) -> TLElement:
    """id_left x element x id_right."""
    out = element
    if left:
        out = TLElement.identity(left).tensor(out)
    if right:
        out = out.tensor(TLElement.identity(right))
    return out


def apply_projectors(x: TLElement, labels: Sequence[int], cap: int = DEFAULT_JW_CAP) -> TLElement:
    """(f_{l1} x f_{l2} x ...) on top of x, one idempotent at a time."""
    if sum(labels) != x.top:
        raise InvalidParamsError(f"labels {tuple(labels)} do not cover {x.top} strands")
    offset = 0
    for label in labels:
        if label > 1:
            layer = embed(jones_wenzl(label, cap), offset, x.top - offset - label)
            x = tl_multiply(layer, x)
        offset += label
    return x


def apply_crossing(x: TLElement, i: int) -> TLElement:
    """sigma_i on top of x, sigma_i = A^-1 * id + A * e_i on strands i-1, i."""
    hook = TLElement.basis(PlanarMatching.hook(x.top, i))
    return x.scale(A ** -1) + tl_multiply(hook, x).scale(A)


def apply_bundle_swap(x: TLElement, left: int, a: int, b: int) -> TLElement:
    """Move the b strands at positions left+a .. left+a+b-1 leftwards over the a strands before them."""
    for k in range(b):
        for p in range(left + a + k - 1, left + k - 1, -1):
            x = apply_crossing(x, p + 1)
    return x
