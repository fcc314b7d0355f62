"""
Rewriting triples onto the five generators.

Each non-generator triple is replaced, through its case system, by a
combination of strictly lower triples; the lower triples are reduced in
turn. The descent order is well-founded, so the walk terminates.
"""
from __future__ import annotations

import threading
from dataclasses import dataclass, field
from itertools import product
from typing import Iterable, Mapping

from app.core.config import Limits
from app.core.errors import InvalidTripleError, SingularSystemError
from app.core.log import get_logger
from app.exactalg.ratfn import RationalFn, Scalar
from app.handlebody.models import GENERATORS, BasisTriple, SkeinVector, h1_class
from app.relations.cases import case_system, classify_case, express_target
from app.relations.models import RelationId
from app.relations.slides import relation_vector

logger = get_logger(__name__, "REDUCE")


@dataclass(frozen=True)
class ReducedElement:
    """Coordinates on the generators (0,0,0), (0,0,1), (1,0,0), (1,0,1), (0,0,2)."""
    coords: Mapping[BasisTriple, RationalFn] = field(default_factory=dict)

    @classmethod
    def from_vector(cls, v: SkeinVector) -> ReducedElement:
        return cls({t: c for t, c in v if not c.is_zero()})

    def coefficient(self, g: BasisTriple) -> RationalFn:
        return self.coords.get(g, RationalFn.coerce(0))

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coords.values())

    def classes(self) -> set[tuple[int, int]]:
        return {h1_class(g) for g, c in self.coords.items() if not c.is_zero()}

    def as_vector(self) -> SkeinVector:
        return SkeinVector(self.coords)

    def __add__(self, other: ReducedElement) -> ReducedElement:
        return ReducedElement.from_vector(self.as_vector() + other.as_vector())

    def scale(self, factor: Scalar) -> ReducedElement:
        return ReducedElement.from_vector(self.as_vector().scale(factor))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ReducedElement):
            return NotImplemented
        return self.as_vector() == other.as_vector()

    def __hash__(self) -> int:
        return hash(frozenset(self.as_vector().support.items()))

    def to_json(self) -> dict:
        return self.as_vector().to_json()


class Reducer:
    """
    Memoized reduction.

    One table per instance, guarded by a lock so sweeps can share it.
    """

    def __init__(self, limits: Limits | None = None):
        self.limits = limits or Limits()
        self._lock = threading.Lock()
        self._reduced: dict[BasisTriple, SkeinVector] = {g: SkeinVector.basis(g) for g in GENERATORS}
        self._steps: dict[BasisTriple, SkeinVector] = {}

    def _check_labels(self, t: BasisTriple) -> None:
        if max(t.as_tuple()) > self.limits.max_label:
            raise InvalidTripleError(f"{t} exceeds max_label={self.limits.max_label}")

    def _step(self, t: BasisTriple) -> SkeinVector:
        """One rewriting step: t as a combination of lower triples."""
        if t not in self._steps:
            case_id = classify_case(t)
            system = case_system(case_id, t)
            try:
                rewritten, _ = express_target(system)
            except SingularSystemError as exc:
                relations = ", ".join(str(rid) for rid in system.relation_ids)
                raise SingularSystemError(f"case {case_id} matrix for {t} is singular (relations {relations}): {exc}") from exc
            logger.debug("%s via case %d -> %d lower terms", t, case_id, len(rewritten))
            self._steps[t] = rewritten
        return self._steps[t]

    def reduce(self, t: BasisTriple) -> ReducedElement:
        self._check_labels(t)
        with self._lock:
            # explicit stack; a triple is combined once all its lower terms are done
            stack = [t]
            while stack:
                top = stack[-1]
                if top in self._reduced:
                    stack.pop()
                    continue
                pending = [s for s in self._step(top).triples() if s not in self._reduced]
                if pending:
                    stack.extend(pending)
                    continue
                total = SkeinVector()
                for s, coeff in self._step(top):
                    total = total + self._reduced[s].scale(coeff)
                self._reduced[top] = total
                stack.pop()
            return ReducedElement.from_vector(self._reduced[t])

    def reduce_vector(self, v: SkeinVector) -> ReducedElement:
        total = SkeinVector()
        for t, coeff in v:
            total = total + self.reduce(t).as_vector().scale(coeff)
        return ReducedElement.from_vector(total)

    def cache_size(self) -> int:
        return len(self._reduced)


_default = Reducer()


def reduce(t: BasisTriple) -> ReducedElement:
    return _default.reduce(t)


def reduce_vector(v: SkeinVector) -> ReducedElement:
    return _default.reduce_vector(v)


# ----- relation consistency -----

@dataclass
class ConsistencyReport:
    checked: list[RelationId] = field(default_factory=list)
    residues: dict[RelationId, ReducedElement] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.residues

    def to_json(self) -> dict:
        return {
            "ok": self.ok,
            "checked": len(self.checked),
            "failures": [
                {"relation": str(rid), "residue": residue.to_json()}
                for rid, residue in self.residues.items()
            ],
        }


def relation_grid(max_param: int, slides: Iterable[int] = (1, 2, 3, 4, 5, 6)) -> list[RelationId]:
    """Relations with every parameter at most max_param."""
    slides = set(slides)
    span = range(max_param + 1)
    out: list[RelationId] = []
    for slide in sorted(slides):
        if slide in (1, 2):
            out.extend(RelationId(slide, al, be, ga) for al, be, ga in product(span, repeat=3)
                       if BasisTriple.is_valid(al, be, ga))
        elif slide == 3:
            out.extend(RelationId.r3(al, ga) for al, ga in product(span, repeat=2))
        elif slide == 4:
            out.extend(RelationId.r4(k) for k in span)
        elif slide == 5:
            out.extend(RelationId.r5(k) for k in span)
        else:
            out.extend(RelationId.r6(k) for k in span)
    return out


def check_relations(relations: Iterable[RelationId], reducer: Reducer | None = None) -> ConsistencyReport:
    """Reduce each relation; each must vanish on the generators."""
    reducer = reducer or _default
    report = ConsistencyReport()
    for rid in relations:
        residue = reducer.reduce_vector(relation_vector(rid))
        report.checked.append(rid)
        if not residue.is_zero():
            logger.warning("%s leaves a nonzero residue", rid)
            report.residues[rid] = residue
    logger.info("checked %d relations, %d with residue", len(report.checked), len(report.residues))
    return report


def relation_consistency(
    max_param: int,
    slides: Iterable[int] = (1, 2, 3, 4, 5, 6),
    reducer: Reducer | None = None,
) -> ConsistencyReport:
    return check_relations(relation_grid(max_param, slides), reducer)
