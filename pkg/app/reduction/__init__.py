from app.reduction.reduce import (
    ConsistencyReport,
    ReducedElement,
    Reducer,
    check_relations,
    reduce,
    reduce_vector,
    relation_consistency,
    relation_grid,
)

__all__ = [
    "ConsistencyReport",
    "ReducedElement",
    "Reducer",
    "check_relations",
    "reduce",
    "reduce_vector",
    "relation_consistency",
    "relation_grid",
]
