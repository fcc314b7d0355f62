"""
The six handle-slide relations as exact skein vectors.

Each relation r is (right-hand side) - (left-hand side) written in the
triple basis; it vanishes in the skein module of the closed manifold.
Coefficients are ratios of theta / tet / loop values; a term whose
denominator contains a vanishing theta is dropped.

Notation below: N = <<a,b,c>>, lam(c; a, b) = lambda_c^{ab}.
"""
from __future__ import annotations

from collections import defaultdict
from functools import lru_cache
from typing import Callable

from app.core.log import get_logger
from app.exactalg.laurent import A
from app.exactalg.ratfn import RationalFn
from app.handlebody.forms import norm_sq
from app.handlebody.models import BasisTriple, SkeinVector, h1_class
from app.recoupling.coefficients import admissible, delta, labels_between, lambda_coeff, tet, theta
from app.relations.models import RelationId

logger = get_logger(__name__, "RELATIONS")

_ZERO = RationalFn.coerce(0)
_ONE = RationalFn.coerce(1)


def _q(num, *dens) -> RationalFn:
    """num / prod(dens), or 0 when some denominator factor vanishes."""
    den = _ONE
    for d in dens:
        d = RationalFn.coerce(d)
        if d.is_zero():
            return _ZERO
        den = den * d
    return RationalFn.coerce(num) / den


def _valid(a: int, b: int, c: int) -> bool:
    return BasisTriple.is_valid(a, b, c)


# ----- slide 1 -----

def _r1(al: int, be: int, ga: int) -> dict[BasisTriple, RationalFn]:
    out: dict[BasisTriple, RationalFn] = {}
    a = al
    for c in labels_between(ga, 1):
        for b in (be - 2, be, be + 2):
            if not _valid(a, b, c):
                continue
            t = BasisTriple(a, b, c)
            n = norm_sq(t)
            lhs = _ZERO
            if b == be:
                lhs = _q(theta(al, al, be) * tet(c, ga, ga, c, be, 1), delta(al), delta(be), theta(c, ga, 1), n)
            rhs = _ZERO
            for r in labels_between(be, 1):
                if not admissible(b, r, 1) or not admissible(c, r, ga):
                    continue
                s_r = _ZERO
                for i in labels_between(al, 1):
                    if not admissible(al, r, i):
                        continue
                    lam_i = lambda_coeff(i, al, 1)
                    s_r = s_r + _q(
                        delta(i) * lam_i * lam_i * tet(r, i, al, b, 1, al) * tet(1, i, al, be, r, al),
                        lambda_coeff(r, b, 1), theta(al, i, 1), theta(al, r, i),
                    )
                if s_r.is_zero():
                    continue
                rhs = rhs + _q(
                    delta(r) * tet(c, r, 1, c, b, ga) * tet(1, r, ga, ga, c, be) * s_r,
                    delta(al), theta(be, r, 1), theta(b, r, 1), theta(c, ga, 1), theta(c, r, ga), n,
                )
            out[t] = rhs - lhs
    return out


# ----- slide 3 -----

def _r3(al: int, ga: int) -> dict[BasisTriple, RationalFn]:
    out: dict[BasisTriple, RationalFn] = {}
    minus_a3 = -(A ** 3)
    for a in labels_between(al, 1):
        for c in labels_between(ga, 1):
            for b in (0, 2):
                if not _valid(a, b, c):
                    continue
                t = BasisTriple(a, b, c)
                n = norm_sq(t)
                shared = tet(c, 1, 1, c, b, ga)
                lhs = _q(tet(1, a, a, 1, b, al) * shared, theta(a, al, 1), theta(b, 1, 1), theta(c, ga, 1), n)
                s = _ZERO
                for i in labels_between(a, 1):
                    if not admissible(b, al, i):
                        continue
                    s = s + _q(
                        delta(i) * lambda_coeff(i, a, 1) * tet(i, a, a, al, b, 1) * tet(al, 1, 1, i, b, a),
                        theta(a, i, 1), theta(b, al, i),
                    )
                rhs = _q(
                    minus_a3 * shared * s,
                    lambda_coeff(a, al, 1), theta(a, al, 1), theta(b, 1, 1), theta(c, ga, 1), n,
                )
                out[t] = rhs - lhs
    return out


# ----- slide 4 -----

def _r4(al: int) -> dict[BasisTriple, RationalFn]:
    rhs: dict[BasisTriple, RationalFn] = defaultdict(lambda: _ZERO)
    minus_a_inv3 = -(A ** -3)
    for a in labels_between(al, 1):
        for c in (0, 2):
            for r in labels_between(c, 1):
                if not admissible(a, r, al):
                    continue
                s_r = _ZERO
                for i in labels_between(a, 1):
                    if not admissible(c, al, i):
                        continue
                    lam_i = lambda_coeff(i, a, 1)
                    s_r = s_r + _q(
                        delta(i) * lam_i * lam_i * tet(1, i, al, 1, c, a) * tet(c, i, a, r, 1, al),
                        lambda_coeff(c, r, 1), theta(a, i, 1), theta(c, al, i),
                    )
                if s_r.is_zero():
                    continue
                for b in labels_between(r, 1):
                    if not _valid(a, b, c):
                        continue
                    t = BasisTriple(a, b, c)
                    rhs[t] = rhs[t] + _q(
                        minus_a_inv3 * delta(r) * tet(c, r, 1, c, b, 1) * tet(a, a, r, 1, al, b) * s_r,
                        theta(a, al, 1), theta(c, 1, 1), theta(b, r, 1), theta(r, c, 1), theta(a, r, al), norm_sq(t),
                    )
    out = dict(rhs)
    for a in labels_between(al, 1):
        t = BasisTriple(a, 0, 0)
        out[t] = out.get(t, _ZERO) - _q(1, norm_sq(t))
    return out


# ----- slide 6 -----

def _r6(al: int) -> dict[BasisTriple, RationalFn]:
    rhs: dict[BasisTriple, RationalFn] = defaultdict(lambda: _ZERO)
    inner_cache: dict[tuple[int, ...], RationalFn] = {}

    def inner(p: int, a: int, qp: int, q: int, b: int) -> RationalFn:
        key = (p, a, qp, q, b)
        if key in inner_cache:
            return inner_cache[key]
        total = _ZERO
        for i in labels_between(al, 1):
            if not admissible(a, i, 1):
                continue
            e_sum = _ZERO
            for j in labels_between(a, 1):
                e_sum = e_sum + _q(
                    delta(j) * lambda_coeff(j, a, 1)
                    * tet(1, qp, i, a, j, 1) * tet(qp, q, al, i, j, 1)
                    * tet(q, b, p, al, j, 1) * tet(j, a, a, p, b, 1),
                    theta(a, j, 1), theta(i, j, qp), theta(al, j, q), theta(p, b, j),
                )
            if e_sum.is_zero():
                continue
            total = total + _q(
                delta(i) * tet(p, 1, i, 1, a, al) * e_sum,
                lambda_coeff(i, al, 1), theta(al, i, 1), theta(a, i, 1),
            )
        inner_cache[key] = total
        return total

    for p in labels_between(al, 1):
        for a in labels_between(p, 1):
            for qp in (0, 2):
                for q in labels_between(qp, 1):
                    for b in labels_between(q, 1):
                        for r in labels_between(al, 1):
                            for c in labels_between(r, 1):
                                if not _valid(a, b, c):
                                    continue
                                if not admissible(c, al, qp) or not admissible(c, q, r):
                                    continue
                                d_sum = inner(p, a, qp, q, b)
                                if d_sum.is_zero():
                                    continue
                                t = BasisTriple(a, b, c)
                                rhs[t] = rhs[t] + _q(
                                    delta(p) * delta(q) * delta(qp) * delta(r)
                                    * tet(1, c, al, 1, qp, r) * tet(qp, c, r, 1, q, al) * tet(q, b, c, r, c, 1)
                                    * d_sum,
                                    theta(al, 1, p), theta(a, 1, p), theta(qp, 1, 1), theta(q, qp, 1),
                                    theta(b, q, 1), theta(al, r, 1), theta(c, r, 1), theta(c, al, qp),
                                    theta(c, q, r), norm_sq(t),
                                )
    out = dict(rhs)
    t = BasisTriple(al, 0, al)
    out[t] = out.get(t, _ZERO) - _q(delta(1), norm_sq(t))
    return out


# ----- public -----

@lru_cache(maxsize=4096)
def relation_vector(rid: RelationId) -> SkeinVector:
    """
    r_i = RHS - LHS for the given slide and parameters.

    r2 and r5 are the images of r1 and r4 under the rotation exchanging
    the handles, (a,b,c) -> (c,b,a), with parameters (gamma, beta, alpha).
    """
    if rid.slide == 1:
        terms = _r1(rid.alpha, rid.beta, rid.gamma)
    elif rid.slide == 2:
        return relation_vector(RelationId.r1(rid.gamma, rid.beta, rid.alpha)).mirror()
    elif rid.slide == 3:
        terms = _r3(rid.alpha, rid.gamma)
    elif rid.slide == 4:
        terms = _r4(rid.alpha)
    elif rid.slide == 5:
        return relation_vector(RelationId.r4(rid.gamma)).mirror()
    else:
        terms = _r6(rid.alpha)
    vector = SkeinVector(terms)
    logger.debug("%s has %d terms", rid, len(vector))
    return vector


def support_rule(rid: RelationId) -> Callable[[BasisTriple], bool]:
    """The admissibility constraint on triples that may appear in a relation."""
    al, be, ga = rid.alpha, rid.beta, rid.gamma
    if rid.slide == 1:
        return lambda t: t.a == al and t.b in (be - 2, be, be + 2) and t.c in (ga - 1, ga + 1)
    if rid.slide == 2:
        return lambda t: t.a in (al - 1, al + 1) and t.b in (be - 2, be, be + 2) and t.c == ga
    if rid.slide == 3:
        return lambda t: t.a in (al - 1, al + 1) and t.b in (0, 2) and t.c in (ga - 1, ga + 1)
    if rid.slide == 4:
        return lambda t: t.a in (al - 1, al + 1) and t.b in (0, 2, 4) and t.c in (0, 2)
    if rid.slide == 5:
        return lambda t: t.a in (0, 2) and t.b in (0, 2, 4) and t.c in (ga - 1, ga + 1)
    return lambda t: t.a in (al - 2, al, al + 2) and t.b in (0, 2, 4) and t.c in (al - 2, al, al + 2)


def support_violations(rid: RelationId) -> list[BasisTriple]:
    rule = support_rule(rid)
    return [t for t in relation_vector(rid).triples() if not rule(t)]


def homology_classes(rid: RelationId) -> set[tuple[int, int]]:
    return {h1_class(t) for t in relation_vector(rid).triples()}
