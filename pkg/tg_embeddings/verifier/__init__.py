from . import IdentitySuite, Report, SubgroupGraph, WitnessSearch
from .Report import ClaimRecord
from .SubgroupGraph import SubgroupGraph as Graph, build_graph, fold, is_free_basis, member, rank
from .WitnessSearch import WitnessReport, WitnessStatus, find_witness

__all__ = [
    "ClaimRecord",
    "Graph",
    "IdentitySuite",
    "Report",
    "SubgroupGraph",
    "WitnessReport",
    "WitnessSearch",
    "WitnessStatus",
    "build_graph",
    "find_witness",
    "fold",
    "is_free_basis",
    "member",
    "rank",
]
