from app.exactalg.laurent import A, ONE, ZERO, LaurentPoly
from app.exactalg.ratfn import RationalFn
from app.exactalg.cyclotomic import (
    UnitCertificate,
    cyclotomic,
    is_signed_monomial,
    is_unit_in_R,
    is_unit_ratfn,
)
from app.exactalg.linalg import determinant, mat_vec, solve_linear_system
from app.exactalg.numeric import eval_complex, root_of_unity

__all__ = [
    "A", "ONE", "ZERO", "LaurentPoly", "RationalFn", "UnitCertificate",
    "cyclotomic", "is_signed_monomial", "is_unit_in_R", "is_unit_ratfn",
    "determinant", "mat_vec", "solve_linear_system", "eval_complex", "root_of_unity",
]
