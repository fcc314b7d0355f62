"""
The mod-16 sign scan of (1 - A_r^4) I_r(M) over odd r.

Each row carries the value from the exact cyclotomic route, the imaginary
part of value + 1 with its sign, and the gap to the Gauss-sum route.
"""
from __future__ import annotations

import csv
from dataclasses import dataclass
from typing import Iterable, TextIO

import mpmath

from app.core.config import Limits
from app.core.errors import InvalidParamsError
from app.core.log import get_logger
from app.gauss.lehmer import lehmer_center
from app.gauss.sums import gauss_route, working_bits
from app.invariants.models import CyclotomicNum
from app.invariants.sums import invariant_sum

logger = get_logger(__name__, "GAUSS")

CSV_HEADER = ("r", "rmod16", "re", "im", "im_shifted", "sign")

# slack added to 1/(sqrt(2) pi) when bounding the two Gauss sums
DISK_SLACK = mpmath.mpf("0.0001")

# largest accepted gap between the exact and Gauss-sum routes
ROUTE_GAP_TOLERANCE = 1e-20


@dataclass(frozen=True)
class ScanRow:
    r: int
    r_mod_16: int
    value: mpmath.mpc
    im_shifted: float
    sign: int
    route_gap: float

    @property
    def routes_agree(self) -> bool:
        return self.route_gap < ROUTE_GAP_TOLERANCE

    def csv_fields(self) -> list[str]:
        return [
            str(self.r),
            str(self.r_mod_16),
            mpmath.nstr(self.value.real, 17),
            mpmath.nstr(self.value.imag, 17),
            repr(self.im_shifted),
            str(self.sign),
        ]


def scan_value(r: int, precision_bits: int | None = None) -> mpmath.mpc:
    """(1 - zeta^4) I_r(M), computed exactly and embedded at exp(i pi / r)."""
    exact = (1 - CyclotomicNum.zeta_power(r, 4)) * invariant_sum(r, 0)
    return exact.to_complex(precision_bits)


def _odd_range(r_min: int, r_max: int) -> range:
    if r_min % 2 == 0 or r_max % 2 == 0:
        raise InvalidParamsError(f"scan bounds must be odd, got {r_min}..{r_max}")
    if r_min < 3 or r_min > r_max:
        raise InvalidParamsError(f"need 3 <= rmin <= rmax, got {r_min}..{r_max}")
    return range(r_min, r_max + 1, 2)


def sign_scan(
    r_min: int = 17,
    r_max: int = 301,
    precision_bits: int | None = None,
    limits: Limits | None = None,
) -> list[ScanRow]:
    bits = working_bits(precision_bits)
    threshold = (limits or Limits()).scan_zero_threshold
    rows: list[ScanRow] = []
    for r in _odd_range(r_min, r_max):
        with mpmath.workprec(bits):
            value = scan_value(r, bits)
            other = gauss_route(r, bits) - 1
            im = float((value + 1).imag)
            gap = float(abs(value - other))
        sign = 0 if abs(im) < threshold else (1 if im > 0 else -1)
        if sign == 0:
            logger.warning("r=%d: |Im| = %.3g is below the zero threshold", r, abs(im))
        if gap >= ROUTE_GAP_TOLERANCE:
            logger.warning("r=%d: exact and Gauss-sum routes differ by %.3g", r, gap)
        rows.append(ScanRow(r, r % 16, value, im, sign, gap))
    logger.info("scanned %d odd r in [%d, %d]", len(rows), r_min, r_max)
    return rows


def sign_pattern_threshold(rows: Iterable[ScanRow]) -> int | None:
    """
    Smallest scanned r from which every r = 1 mod 16 has sign +1 and every
    r = 9 mod 16 has sign -1; None when the last such row already breaks it.
    """
    watched = [row for row in sorted(rows, key=lambda row: row.r) if row.r_mod_16 in (1, 9)]
    threshold = None
    for row in reversed(watched):
        expected = 1 if row.r_mod_16 == 1 else -1
        if row.sign != expected:
            break
        threshold = row.r
    return threshold


def angle_constants(precision_bits: int | None = None) -> tuple[float, float]:
    """
    (theta, phi) in degrees: theta = asin(3R / |(h, k)|), phi = atan(k / h),
    with (h, k) the Lehmer center and R = 1/(sqrt(2) pi) + 0.0001.
    """
    with mpmath.workprec(working_bits(precision_bits)):
        h, k = lehmer_center(precision_bits)
        R = 1 / (mpmath.sqrt(2) * mpmath.pi) + DISK_SLACK
        theta = mpmath.degrees(mpmath.asin(3 * R / mpmath.hypot(h, k)))
        phi = mpmath.degrees(mpmath.atan(k / h))
        return float(theta), float(phi)


def write_csv(rows: Iterable[ScanRow], out: TextIO) -> int:
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    count = 0
    for row in rows:
        writer.writerow(row.csv_fields())
        count += 1
    return count
