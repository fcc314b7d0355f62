"""Identifiers and result types for handle-slide relations and case systems."""
from __future__ import annotations

from dataclasses import dataclass, field

from app.core.errors import InvalidParamsError
from app.exactalg.cyclotomic import UnitCertificate
from app.exactalg.ratfn import RationalFn
from app.handlebody.models import BasisTriple, SkeinVector

# which of alpha / beta / gamma each slide takes
SLIDE_PARAMS: dict[int, tuple[str, ...]] = {
    1: ("alpha", "beta", "gamma"),
    2: ("alpha", "beta", "gamma"),
    3: ("alpha", "gamma"),
    4: ("alpha",),
    5: ("gamma",),
    6: ("alpha",),
}


@dataclass(frozen=True)
class RelationId:
    slide: int
    alpha: int | None = None
    beta: int | None = None
    gamma: int | None = None

    def __post_init__(self):
        if self.slide not in SLIDE_PARAMS:
            raise InvalidParamsError(f"slide must be 1..6, got {self.slide}")
        wanted = SLIDE_PARAMS[self.slide]
        for name in ("alpha", "beta", "gamma"):
            value = getattr(self, name)
            if name in wanted:
                if value is None or value < 0:
                    raise InvalidParamsError(f"r{self.slide} needs a nonnegative {name}, got {value}")
            elif value is not None:
                raise InvalidParamsError(f"r{self.slide} takes no {name}")
        if self.slide in (1, 2) and not BasisTriple.is_valid(self.alpha, self.beta, self.gamma):
            raise InvalidParamsError(
                f"r{self.slide}({self.alpha},{self.beta},{self.gamma}): parameters must form a valid triple"
            )

    @classmethod
    def r1(cls, alpha: int, beta: int, gamma: int) -> RelationId:
        return cls(1, alpha, beta, gamma)

    @classmethod
    def r2(cls, alpha: int, beta: int, gamma: int) -> RelationId:
        return cls(2, alpha, beta, gamma)

    @classmethod
    def r3(cls, alpha: int, gamma: int) -> RelationId:
        return cls(3, alpha=alpha, gamma=gamma)

    @classmethod
    def r4(cls, alpha: int) -> RelationId:
        return cls(4, alpha=alpha)

    @classmethod
    def r5(cls, gamma: int) -> RelationId:
        return cls(5, gamma=gamma)

    @classmethod
    def r6(cls, alpha: int) -> RelationId:
        return cls(6, alpha=alpha)

    @property
    def params(self) -> tuple[int, ...]:
        return tuple(getattr(self, name) for name in SLIDE_PARAMS[self.slide])

    def __str__(self) -> str:
        return f"r{self.slide}({','.join(str(p) for p in self.params)})"

    def to_json(self) -> dict:
        return {"slide": self.slide, **{name: getattr(self, name) for name in SLIDE_PARAMS[self.slide]}}


@dataclass(frozen=True)
class CaseSystem:
    """
    Relations used to rewrite `target`, the matrix of their coefficients on
    the highest terms (rows = relations, columns = highest_terms, highest
    first) and the leftover part of each relation.
    """
    case_id: int
    target: BasisTriple
    relation_ids: tuple[RelationId, ...]
    highest_terms: tuple[BasisTriple, ...]
    matrix: tuple[tuple[RationalFn, ...], ...]
    remainders: tuple[SkeinVector, ...]

    def to_json(self) -> dict:
        return {
            "case": self.case_id,
            "target": list(self.target.as_tuple()),
            "relations": [str(r) for r in self.relation_ids],
            "highest_terms": [list(t.as_tuple()) for t in self.highest_terms],
            "matrix": [[entry.to_json() for entry in row] for row in self.matrix],
        }


@dataclass(frozen=True)
class CaseCheck:
    case_id: int
    target: BasisTriple
    determinant: RationalFn
    closed_form: RationalFn
    ratio: RationalFn | None
    exact: bool
    monomial_ratio: tuple[int, int] | None
    certificate: UnitCertificate | None

    @property
    def passed(self) -> bool:
        return self.monomial_ratio is not None and self.certificate is not None

    def to_json(self) -> dict:
        return {
            "case": self.case_id,
            "target": list(self.target.as_tuple()),
            "determinant": self.determinant.to_json(),
            "closed_form": self.closed_form.to_json(),
            "exact": self.exact,
            "ratio": None if self.monomial_ratio is None else {
                "sign": self.monomial_ratio[0], "power": self.monomial_ratio[1],
            },
            "unit": None if self.certificate is None else self.certificate.describe(),
            "passed": self.passed,
        }


@dataclass
class CaseReport:
    case_id: int
    checks: list[CaseCheck] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(check.passed for check in self.checks)

    @property
    def exact_ok(self) -> bool:
        return all(check.exact for check in self.checks)

    @property
    def first_mismatch(self) -> CaseCheck | None:
        return next((check for check in self.checks if not check.passed), None)

    @property
    def first_inexact(self) -> CaseCheck | None:
        return next((check for check in self.checks if not check.exact), None)

    def to_json(self) -> dict:
        return {
            "case": self.case_id,
            "ok": self.ok,
            "checked": len(self.checks),
            "exact_ok": self.exact_ok,
            "exact": sum(1 for check in self.checks if check.exact),
            "first_mismatch": None if self.first_mismatch is None else self.first_mismatch.to_json(),
            "first_inexact": None if self.first_inexact is None else self.first_inexact.to_json(),
            "checks": [check.to_json() for check in self.checks],
        }
