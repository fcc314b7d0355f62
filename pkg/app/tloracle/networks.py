"""
Brute-force evaluation of small closed networks.

Every network is assembled by stacking diagrams (vertices, idempotents,
crossings) and expanded fully; the scalar is read off the empty diagram.
"""
from __future__ import annotations

from dataclasses import dataclass, field, replace
from enum import Enum
from itertools import product
from typing import Sequence

from app.core.config import Limits
from app.core.errors import CapExceededError, InvalidParamsError
from app.core.log import get_logger
from app.exactalg.ratfn import RationalFn
from app.recoupling.coefficients import TetSpec, admissible, delta, lambda_coeff, tet, tet_symmetries, theta
from app.tloracle.diagrams import (
    apply_bundle_swap,
    apply_projectors,
    cap_vertex,
    cup_vertex,
    embed,
    jones_wenzl,
    merge_vertex,
    split_vertex,
)
from app.tloracle.models import TLElement, tl_multiply

logger = get_logger(__name__, "ORACLE")


class NetworkKind(str, Enum):
    THETA = "theta"
    TET = "tet"
    LAMBDA = "lambda"
    DELTA = "delta"


_ARITY = {NetworkKind.THETA: 3, NetworkKind.TET: 6, NetworkKind.LAMBDA: 3, NetworkKind.DELTA: 1}


def _close(x: TLElement, cap) -> RationalFn:
    return tl_multiply(TLElement.basis(cap), x).scalar()


def _theta_network(a: int, b: int, c: int, jw_cap: int) -> RationalFn:
    x = TLElement.basis(cup_vertex(a, b, c))
    x = apply_projectors(x, (a, b, c), jw_cap)
    return _close(x, cap_vertex(a, b, c))


def _tet_network(spec: TetSpec, jw_cap: int) -> RationalFn:
    a, b, c, d, e, f = spec
    x = TLElement.basis(cup_vertex(a, b, f))
    x = apply_projectors(x, (a, b, f), jw_cap)
    x = tl_multiply(embed(TLElement.basis(split_vertex(a, d, e)), 0, b + f), x)
    x = apply_projectors(x, (d, e, b, f), jw_cap)
    x = tl_multiply(embed(TLElement.basis(merge_vertex(e, b, c)), d, f), x)
    x = apply_projectors(x, (d, c, f), jw_cap)
    return _close(x, cap_vertex(d, c, f))


def _lambda_network(a: int, b: int, c: int, jw_cap: int) -> RationalFn:
    x = TLElement.basis(cup_vertex(a, b, c))
    x = apply_projectors(x, (a, b, c), jw_cap)
    x = apply_bundle_swap(x, 0, a, b)
    twisted = _close(x, cap_vertex(b, a, c))
    return twisted / _theta_network(a, b, c, jw_cap)


def evaluate_network(kind: NetworkKind | str, labels: Sequence[int], limits: Limits | None = None) -> RationalFn:
    """
    Scalar value of a closed network:
      theta (a, b, c), tet (a, b, c, d, e, f), lambda (a, b, c) -> lambda_c^{ab},
      delta (n,).
    Inadmissible labels give 0; oversized inputs raise CapExceededError.
    """
    limits = limits or Limits()
    kind = NetworkKind(kind)
    labels = tuple(int(v) for v in labels)
    if len(labels) != _ARITY[kind]:
        raise InvalidParamsError(f"{kind.value} takes {_ARITY[kind]} labels, got {len(labels)}")
    if any(v < 0 for v in labels):
        return RationalFn.coerce(0)

    total = sum(labels)
    if kind is NetworkKind.DELTA:
        return jones_wenzl(labels[0], limits.oracle_cap).trace()

    if kind is NetworkKind.TET:
        if total > limits.tet_cap:
            raise CapExceededError(f"tet label sum {total} exceeds the oracle cap {limits.tet_cap}")
        spec = TetSpec(*labels)
        if not spec.is_admissible():
            return RationalFn.coerce(0)
        logger.debug("expanding tet network %s", labels)
        return _tet_network(spec, limits.oracle_cap)

    if total > limits.theta_cap:
        raise CapExceededError(f"{kind.value} label sum {total} exceeds the oracle cap {limits.theta_cap}")
    if not admissible(*labels):
        return RationalFn.coerce(0)
    if kind is NetworkKind.THETA:
        return _theta_network(*labels, limits.oracle_cap)
    return _lambda_network(*labels, limits.oracle_cap)


# ----- cross-check against the closed forms -----

@dataclass
class OracleReport:
    cap: int
    checked: dict[str, int] = field(default_factory=dict)
    mismatches: list[tuple[str, tuple[int, ...]]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def to_json(self) -> dict:
        return {
            "cap": self.cap,
            "ok": self.ok,
            "checked": self.checked,
            "mismatches": [{"kind": kind, "labels": list(labels)} for kind, labels in self.mismatches],
        }


def _record(report: OracleReport, kind: NetworkKind, labels: tuple[int, ...], expected: RationalFn, limits: Limits):
    report.checked[kind.value] = report.checked.get(kind.value, 0) + 1
    if evaluate_network(kind, labels, limits) != expected:
        logger.warning("%s%s disagrees with its closed form", kind.value, labels)
        report.mismatches.append((kind.value, labels))


def verify_oracle(cap: int = 8, limits: Limits | None = None) -> OracleReport:
    """Compare Delta, theta, lambda and tet with diagram expansion for label totals up to `cap`."""
    limits = replace(limits or Limits(), oracle_cap=cap, theta_cap=max(cap, 1), tet_cap=cap)
    report = OracleReport(cap)
    for n in range(cap + 1):
        _record(report, NetworkKind.DELTA, (n,), RationalFn.coerce(delta(n)), limits)
    for a, b, c in product(range(cap + 1), repeat=3):
        if a + b + c > cap or not admissible(a, b, c):
            continue
        _record(report, NetworkKind.THETA, (a, b, c), theta(a, b, c), limits)
        _record(report, NetworkKind.LAMBDA, (a, b, c), RationalFn.coerce(lambda_coeff(c, a, b)), limits)
    seen: set[tuple[int, ...]] = set()
    for labels in product(range(cap // 2 + 1), repeat=6):
        if sum(labels) > cap:
            continue
        spec = TetSpec(*labels)
        if not spec.is_admissible():
            continue
        key = tuple(min(tet_symmetries(labels)))
        if key in seen:
            continue
        seen.add(key)
        _record(report, NetworkKind.TET, labels, tet(*labels), limits)
    logger.info("oracle cross-check at cap %d: %s", cap, report.checked)
    return report
