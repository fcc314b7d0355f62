from app.relations.models import CaseCheck, CaseReport, CaseSystem, RelationId
from app.relations.slides import homology_classes, relation_vector, support_rule, support_violations
from app.relations.cases import (
    CASE_IDS,
    case_closed_form,
    case_relations,
    case_system,
    case_targets,
    check_case,
    classify_case,
    express_target,
    verify_case_determinant,
)

__all__ = [
    "CaseCheck",
    "CaseReport",
    "CaseSystem",
    "RelationId",
    "homology_classes",
    "relation_vector",
    "support_rule",
    "support_violations",
    "CASE_IDS",
    "case_closed_form",
    "case_relations",
    "case_system",
    "case_targets",
    "check_case",
    "classify_case",
    "express_target",
    "verify_case_determinant",
]
