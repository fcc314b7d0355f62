"""Hermitian form on the handlebody skein module (diagonal in the triple basis)."""
from __future__ import annotations

from functools import lru_cache

from app.exactalg.ratfn import RationalFn
from app.handlebody.models import BasisTriple, SkeinVector
from app.recoupling.coefficients import delta, theta


@lru_cache(maxsize=None)
def _norm_sq(a: int, b: int, c: int) -> RationalFn:
    num = theta(a, a, b) * theta(b, c, c)
    return num / (delta(a) * delta(b) * delta(c))


def norm_sq(t: BasisTriple) -> RationalFn:
    """<<a,b,c>> = theta(a,a,b) theta(b,c,c) / (Delta_a Delta_b Delta_c)."""
    return _norm_sq(t.a, t.b, t.c)


def inner_product(v: SkeinVector, w: SkeinVector) -> RationalFn:
    """<v, w> = sum over t of bar(v_t) w_t <<t>>; conjugate-linear in v."""
    total = RationalFn.coerce(0)
    for triple, coeff in v:
        other = w.coefficient(triple)
        if not other.is_zero():
            total = total + coeff.bar() * other * norm_sq(triple)
    return total
