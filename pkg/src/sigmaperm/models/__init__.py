"""Value types: permutations, partitions, σ-generator lists and reports."""

from .permutation import Permutation
from .partition import Partition, all_partitions, parse_partition
from .sigma_generators import SigmaGenerators
from .reports import CheckReport, GroupSummary, Report, Witness

__all__ = [
    "Permutation",
    "Partition",
    "all_partitions",
    "parse_partition",
    "SigmaGenerators",
    "CheckReport",
    "GroupSummary",
    "Report",
    "Witness",
]
