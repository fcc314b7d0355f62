from app.tloracle.models import PlanarMatching, TLElement, tl_multiply
from app.tloracle.diagrams import all_matchings, jones_wenzl
from app.tloracle.networks import NetworkKind, OracleReport, evaluate_network, verify_oracle

__all__ = [
    "PlanarMatching", "TLElement", "tl_multiply", "all_matchings", "jones_wenzl",
    "NetworkKind", "OracleReport", "evaluate_network", "verify_oracle",
]
