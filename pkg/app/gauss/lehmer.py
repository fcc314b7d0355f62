"""
Lehmer's disk for incomplete Gauss sums.

For N >= 100 and sqrt(N/2) <= m <= N/4, g_N(m) lies in the disk with
center (C(sqrt 2), S(sqrt 2) - 1/(sqrt(2) pi)) and radius
1/(sqrt(2) pi) + 101/(40 sqrt(N)); C and S are the Fresnel integrals
with the pi x^2 / 2 normalization.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, NamedTuple

import mpmath

from app.core.errors import InvalidParamsError
from app.core.log import get_logger
from app.gauss.sums import working_bits, zeta

logger = get_logger(__name__, "GAUSS")

MIN_LEHMER_N = 100


def fresnel_point(u=None, precision_bits: int | None = None) -> tuple[mpmath.mpf, mpmath.mpf]:
    """(C(u), S(u)) from mpmath's series; u defaults to sqrt(2)."""
    with mpmath.workprec(working_bits(precision_bits)):
        u = mpmath.sqrt(2) if u is None else mpmath.mpf(u)
        return mpmath.fresnelc(u), mpmath.fresnels(u)


def fresnel_by_quadrature(u=None, precision_bits: int | None = None) -> tuple[mpmath.mpf, mpmath.mpf]:
    with mpmath.workprec(working_bits(precision_bits)):
        u = mpmath.sqrt(2) if u is None else mpmath.mpf(u)
        c = mpmath.quad(lambda x: mpmath.cos(mpmath.pi * x * x / 2), [0, u])
        s = mpmath.quad(lambda x: mpmath.sin(mpmath.pi * x * x / 2), [0, u])
        return c, s


def lehmer_center(precision_bits: int | None = None) -> tuple[mpmath.mpf, mpmath.mpf]:
    with mpmath.workprec(working_bits(precision_bits)):
        c, s = fresnel_point(precision_bits=precision_bits)
        return c, s - 1 / (mpmath.sqrt(2) * mpmath.pi)


def lehmer_radius(N: int, precision_bits: int | None = None) -> mpmath.mpf:
    with mpmath.workprec(working_bits(precision_bits)):
        return 1 / (mpmath.sqrt(2) * mpmath.pi) + mpmath.mpf(101) / (40 * mpmath.sqrt(N))


class LehmerCircle(NamedTuple):
    center: tuple[mpmath.mpf, mpmath.mpf]
    radius: mpmath.mpf


def lehmer_circle(N: int, precision_bits: int | None = None) -> LehmerCircle:
    return LehmerCircle(lehmer_center(precision_bits), lehmer_radius(N, precision_bits))


def lehmer_range(N: int) -> range:
    """m with sqrt(N/2) <= m <= N/4."""
    m_min = math.isqrt(N // 2)
    while 2 * m_min * m_min < N:
        m_min += 1
    return range(m_min, N // 4 + 1)


@dataclass(frozen=True)
class LehmerRow:
    N: int
    m_min: int
    m_max: int
    worst_m: int
    worst_distance: float
    radius: float

    @property
    def ok(self) -> bool:
        return self.worst_distance <= self.radius

    def to_json(self) -> dict:
        return {
            "N": self.N, "m_min": self.m_min, "m_max": self.m_max,
            "worst_m": self.worst_m, "worst_distance": self.worst_distance,
            "radius": self.radius, "ok": self.ok,
        }


@dataclass
class LehmerReport:
    rows: list[LehmerRow] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(row.ok for row in self.rows)

    def to_json(self) -> dict:
        return {"ok": self.ok, "rows": [row.to_json() for row in self.rows]}


def lehmer_scan(Ns: Iterable[int], precision_bits: int | None = None) -> LehmerReport:
    """Largest distance from the center over the Lehmer range, for each N."""
    bits = working_bits(precision_bits)
    report = LehmerReport()
    for N in Ns:
        if N < MIN_LEHMER_N:
            raise InvalidParamsError(f"Lehmer's bound needs N >= {MIN_LEHMER_N}, got {N}")
        span = lehmer_range(N)
        with mpmath.workprec(bits):
            h, k = lehmer_center(bits)
            center = mpmath.mpc(h, k)
            radius = lehmer_radius(N, bits)
            scale = 2 / mpmath.sqrt(N)
            partial = mpmath.mpc(0)
            worst_m, worst = span.start, mpmath.mpf(0)
            # running partial sum; only m inside the range are measured
            for j in range(span.stop):
                partial += zeta(N, j * j)
                if j >= span.start:
                    dist = abs(scale * partial - center)
                    if dist > worst:
                        worst_m, worst = j, dist
        row = LehmerRow(N, span.start, span.stop - 1, worst_m, float(worst), float(radius))
        if not row.ok:
            logger.warning("N=%d: g_N(%d) is %.6f from the center, radius %.6f", N, worst_m, row.worst_distance, row.radius)
        report.rows.append(row)
    return report
