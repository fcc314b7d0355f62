from app.invariants.models import CyclotomicNum, QuantumContext, cyclotomic_modulus
from app.invariants.sums import (
    Framing,
    PropReport,
    closed_form_001,
    eval_at_root,
    gauss_side,
    invariant_002_routes,
    invariant_sum,
    prop_checks,
    quantum_context,
)

__all__ = [
    "CyclotomicNum",
    "QuantumContext",
    "cyclotomic_modulus",
    "Framing",
    "PropReport",
    "closed_form_001",
    "eval_at_root",
    "gauss_side",
    "invariant_002_routes",
    "invariant_sum",
    "prop_checks",
    "quantum_context",
]
