"""
Closed-form recoupling coefficients.

Core rules:
- [k] = (A^{2k} - A^{-2k}) / (A^2 - A^{-2}), Delta_n = (-1)^n [n+1].
- theta and tet return 0 on inadmissible labels, never raise.
- tet slot order (a, b, c, d, e, f) names the edges of a tetrahedron whose
  vertices carry the triples (a,d,e), (b,c,e), (a,b,f), (c,d,f); the
  opposite edge pairs are (a,c), (b,d), (e,f).
- Caches are functools.lru_cache, which is internally synchronized.
"""
from __future__ import annotations

from functools import lru_cache
from itertools import permutations
from typing import NamedTuple

from app.exactalg.laurent import LaurentPoly
from app.exactalg.ratfn import RationalFn

_ONE = LaurentPoly.constant(1)


# ----- labels and admissibility -----

def admissible(a: int, b: int, c: int) -> bool:
    """|a-b| <= c <= a+b and a+b+c even, all labels nonnegative."""
    if a < 0 or b < 0 or c < 0:
        return False
    return abs(a - b) <= c <= a + b and (a + b + c) % 2 == 0


def r_admissible(a: int, b: int, c: int, r: int) -> bool:
    """Admissible at level r: additionally a+b+c <= 2r-4 and every label <= r-2."""
    return admissible(a, b, c) and a + b + c <= 2 * r - 4 and max(a, b, c) <= r - 2


def labels_between(x: int, y: int) -> range:
    """All c with (x, y, c) admissible."""
    if x < 0 or y < 0:
        return range(0)
    return range(abs(x - y), x + y + 1, 2)


# ----- quantum integers -----

class QuantumBasics(NamedTuple):
    qint: LaurentPoly
    qfact: RationalFn
    delta: LaurentPoly


@lru_cache(maxsize=None)
def qint(k: int) -> LaurentPoly:
    if k < 0:
        return -qint(-k)
    return LaurentPoly({2 * k - 2 - 4 * j: 1 for j in range(k)})


@lru_cache(maxsize=None)
def qfact_poly(k: int) -> LaurentPoly:
    if k <= 1:
        return _ONE
    return qfact_poly(k - 1) * qint(k)


def qfact(k: int) -> RationalFn:
    return RationalFn.coerce(qfact_poly(k))


@lru_cache(maxsize=None)
def delta(n: int) -> LaurentPoly:
    """Loop value of the n-th idempotent closure."""
    return qint(n + 1) if n % 2 == 0 else -qint(n + 1)


def quantum_basics(k: int) -> QuantumBasics:
    return QuantumBasics(qint=qint(k), qfact=qfact(k), delta=delta(k))


# ----- theta -----

def _theta_closed_form(a: int, b: int, c: int) -> RationalFn:
    i = (a + b - c) // 2
    j = (b + c - a) // 2
    k = (a + c - b) // 2
    num = qfact_poly(i + j + k + 1) * qfact_poly(i) * qfact_poly(j) * qfact_poly(k)
    den = qfact_poly(i + j) * qfact_poly(j + k) * qfact_poly(i + k)
    if (i + j + k) % 2:
        num = -num
    return RationalFn(num, den)


@lru_cache(maxsize=None)
def _theta_sorted(a: int, b: int, c: int) -> RationalFn:
    return _theta_closed_form(a, b, c)


def theta(a: int, b: int, c: int) -> RationalFn:
    """Value of the theta net with edges a, b, c; 0 if inadmissible."""
    if not admissible(a, b, c):
        return RationalFn.coerce(0)
    return _theta_sorted(*sorted((a, b, c)))


# ----- tet -----

class TetSpec(NamedTuple):
    a: int
    b: int
    c: int
    d: int
    e: int
    f: int

    def faces(self) -> tuple[tuple[int, int, int], ...]:
        a, b, c, d, e, f = self
        return (a, d, e), (b, c, e), (a, b, f), (c, d, f)

    def is_admissible(self) -> bool:
        return all(admissible(*face) for face in self.faces())


# edge slot -> vertex pair
_SLOT_EDGES = ((1, 3), (2, 3), (2, 4), (1, 4), (1, 2), (3, 4))


def tet_symmetries(labels: tuple[int, ...]) -> list[TetSpec]:
    """The 24 relabellings of a tet under vertex permutations (with repeats)."""
    by_edge = {frozenset(edge): label for edge, label in zip(_SLOT_EDGES, labels)}
    out = []
    for perm in permutations((1, 2, 3, 4)):
        image = dict(zip((1, 2, 3, 4), perm))
        out.append(TetSpec(*(by_edge[frozenset((image[u], image[v]))] for u, v in _SLOT_EDGES)))
    return out


def _canonical_tet_key(labels: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(min(tet_symmetries(labels)))


def tet_closed_form(a: int, b: int, c: int, d: int, e: int, f: int) -> RationalFn:
    """Uncached single-sum formula; assumes admissible labels."""
    corners = ((a + d + e) // 2, (b + c + e) // 2, (a + b + f) // 2, (c + d + f) // 2)
    squares = ((b + d + e + f) // 2, (a + c + e + f) // 2, (a + b + c + d) // 2)

    pre_num = _ONE
    for bj in squares:
        for ai in corners:
            pre_num = pre_num * qfact_poly(bj - ai)
    pre_den = _ONE
    for label in (a, b, c, d, e, f):
        pre_den = pre_den * qfact_poly(label)

    total = RationalFn.coerce(0)
    for s in range(max(corners), min(squares) + 1):
        den = _ONE
        for ai in corners:
            den = den * qfact_poly(s - ai)
        for bj in squares:
            den = den * qfact_poly(bj - s)
        num = qfact_poly(s + 1)
        total = total + RationalFn(-num if s % 2 else num, den)
    return RationalFn(pre_num, pre_den) * total


@lru_cache(maxsize=None)
def _tet_canonical(key: tuple[int, ...]) -> RationalFn:
    return tet_closed_form(*key)


def tet(a: int, b: int, c: int, d: int, e: int, f: int) -> RationalFn:
    """Tetrahedral net value; 0 if any vertex triple is inadmissible."""
    spec = TetSpec(a, b, c, d, e, f)
    if not spec.is_admissible():
        return RationalFn.coerce(0)
    return _tet_canonical(_canonical_tet_key(spec))


# ----- twists and half twists -----

def twist(a: int) -> LaurentPoly:
    """(-A)^{a(a+2)}: removing a full curl from an a-colored strand."""
    exp = a * (a + 2)
    return LaurentPoly.monomial(exp, -1 if exp % 2 else 1)


def lambda_coeff(c: int, a: int, b: int) -> LaurentPoly:
    """lambda_c^{ab} = (-1)^{(a+b-c)/2} A^{(a(a+2)+b(b+2)-c(c+2))/2}."""
    if not admissible(a, b, c):
        raise ValueError(f"lambda needs an admissible triple, got ({a},{b},{c})")
    exp = (a * (a + 2) + b * (b + 2) - c * (c + 2)) // 2
    sign = -1 if ((a + b - c) // 2) % 2 else 1
    return LaurentPoly.monomial(exp, sign)


class TwistLambda(NamedTuple):
    twist: LaurentPoly
    lam: LaurentPoly


def twist_and_lambda(a: int, b: int, c: int) -> TwistLambda:
    return TwistLambda(twist=twist(a), lam=lambda_coeff(c, a, b))


# ----- fusion -----

def fusion_coeff(a: int, b: int, i: int) -> RationalFn:
    """Delta_i / theta(a, b, i), or 0 if (a, b, i) is inadmissible."""
    if not admissible(a, b, i):
        return RationalFn.coerce(0)
    return RationalFn.coerce(delta(i)) / theta(a, b, i)
