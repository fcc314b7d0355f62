from app.recoupling.coefficients import (
    QuantumBasics,
    TetSpec,
    TwistLambda,
    admissible,
    delta,
    fusion_coeff,
    labels_between,
    lambda_coeff,
    qfact,
    qint,
    quantum_basics,
    r_admissible,
    tet,
    tet_closed_form,
    tet_symmetries,
    theta,
    twist,
    twist_and_lambda,
)

__all__ = [
    "QuantumBasics", "TetSpec", "TwistLambda", "admissible", "delta", "fusion_coeff",
    "labels_between", "lambda_coeff", "qfact", "qint", "quantum_basics", "r_admissible",
    "tet", "tet_closed_form", "tet_symmetries", "theta", "twist", "twist_and_lambda",
]
