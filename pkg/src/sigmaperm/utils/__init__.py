"""Small helpers for cycle notation, prime arithmetic and union-find."""

from .cycle_notation import CycleNotation, format_cycles, parse_cycles
from .primes import PrimeTools
from .union_find import UnionFind

__all__ = ["CycleNotation", "PrimeTools", "UnionFind", "format_cycles", "parse_cycles"]
