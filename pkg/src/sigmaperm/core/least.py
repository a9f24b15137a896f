"""Least partitions σ for σ-nilpotency, σ-solubility and σ-p-permutability."""

import logging
from dataclasses import dataclass, field
from typing import Any, Callable, Generic, Optional, TypeVar

from ..config import Config, resolve_config
from ..errors import DeskScaleError, InvariantViolation
from ..models.partition import Block, Partition
from ..models.permutation import Permutation
from ..utils.primes import PrimeTools
from ..utils.union_find import UnionFind
from .checks import (
    _check_triple,
    is_sigma_nilpotent,
    is_sigma_p_permutable,
    is_sigma_subnormal,
    soluble_verdict,
)
from .decomposition import decompose_generators
from .oracle import least_partition_oracle
from .stab_chain import PermGroup
from .toolbox import Section, chief_series, core, join, normal_closure, o_upper_pi


logger = logging.getLogger(__name__)

P = TypeVar("P")


@dataclass
class MergeGraph(Generic[P]):
    """Blocks of the working partition with a payload each, plus merge edges."""

    payload: dict[Block, P]
    edges: set[tuple[Block, Block]] = field(default_factory=set)

    @property
    def vertices(self) -> list[Block]:
        return list(self.payload)

    def add_edge(self, a: Block, b: Block) -> None:
        if a != b:
            self.edges.add((min(a, b), max(a, b)))

    def merged_blocks(self) -> list[list[Block]]:
        """Connected components, each a list of the blocks it joins."""
        uf: UnionFind[Block] = UnionFind(self.payload)
        for a, b in self.edges:
            uf.union(a, b)
        return uf.components()


def _union(blocks: list[Block]) -> Block:
    return tuple(sorted(p for b in blocks for p in b))


def _check_rounds(rounds: int, primes: frozenset[int], what: str) -> None:
    if rounds > max(len(primes), 1):
        raise InvariantViolation(
            f"{what} needed {rounds} merge rounds for {len(primes)} primes"
        )


def least_sigma_nilpotent(
    s: Section, config: Optional[Config] = None
) -> Partition:
    """
    The least σ of π(G/K) with G/K σ-nilpotent.

    Starts from singletons; two blocks are joined when a commutator of their
    generators escapes K or when the quotient primes of one block's piece
    meet the other block. Stops when a round adds no edge.
    """
    primes = s.primes()
    if not primes:
        return Partition.from_blocks([])
    k = s.small
    k_order = k.order()
    start = Partition.singletons(primes)
    parts = decompose_generators(
        s.big, start, PrimeTools.prime_set(s.big.order()) - primes
    )
    graph: MergeGraph[list[Permutation]] = MergeGraph(dict(parts.by_block))

    rounds = 0
    while True:
        rounds += 1
        _check_rounds(rounds, primes, "σ-nilpotency merge")
        labels: dict[Block, frozenset[int]] = {}
        for block, gens in graph.payload.items():
            piece = join(PermGroup(s.degree, gens), k)
            labels[block] = PrimeTools.prime_set(piece.order() // k_order)

        blocks = graph.vertices
        for i, a in enumerate(blocks):
            for b in blocks[i + 1 :]:
                if labels[a] & frozenset(b) or labels[b] & frozenset(a):
                    graph.add_edge(a, b)
                elif any(
                    not k.contains(x.commutator(y))
                    for x in graph.payload[a]
                    for y in graph.payload[b]
                ):
                    graph.add_edge(a, b)

        if not graph.edges:
            break
        merged: dict[Block, list[Permutation]] = {}
        for component in graph.merged_blocks():
            merged[_union(component)] = [x for b in component for x in graph.payload[b]]
        logger.debug(f"Nilpotency round {rounds}: {len(blocks)} -> {len(merged)} blocks")
        graph = MergeGraph(merged)

    result = Partition.from_blocks(graph.vertices, primes)
    if not is_sigma_nilpotent(s, result, config):
        raise InvariantViolation(f"least σ-nilpotent partition {result} fails its check")
    return result


def least_sigma_soluble(s: Section, config: Optional[Config] = None) -> Partition:
    """The least σ of π(G/K) with G/K σ-soluble: overlap components of the
    chief factor prime sets."""
    primes = s.primes()
    if not primes:
        return Partition.from_blocks([])
    series = chief_series(s, config)
    uf: UnionFind[int] = UnionFind(sorted(primes))
    for factor in series.factor_prime_sets:
        first, *rest = sorted(factor)
        for p in rest:
            uf.union(first, p)
    result = Partition.from_blocks(uf.components(), primes)
    if not soluble_verdict(series, result):
        raise InvariantViolation(f"least σ-soluble partition {result} fails its check")
    return result


def _stable_under(piece: PermGroup, conjugators: list[Permutation]) -> bool:
    return all(piece.contains(x.conjugate(c)) for x in piece.generators for c in conjugators)


def least_sigma_p_permutable(
    g: PermGroup, h: PermGroup, k: PermGroup, config: Optional[Config] = None
) -> Partition:
    """
    The least σ of π(G/K) with H/K σ-p-permutable in G/K.

    The least σ-nilpotency partition of H^G/H_G, padded with singletons up to
    π(G/H_G), is a lower bound. Blocks a, b are then joined while the piece
    ⟨S_a(H), H_G⟩ is not normalized by P_b (the normal closure of the Sylow
    subgroups for the primes of b), or the other way round. Primes of
    π(G/K) ∖ π(G/H_G) end up as singletons.
    """
    config = resolve_config(config)
    _check_triple(g, h, k)
    target = Section(g, k, check=False).primes()
    h_core = core(g, h, config)
    outer = Section(g, h_core, check=False).primes()
    h_closure = normal_closure(g, h)
    lower = least_sigma_nilpotent(Section(h_closure, h_core, check=False), config)
    lower = lower.extend(outer)

    group_primes = PrimeTools.prime_set(g.order())
    current = lower
    if len(current) > 1:
        sylow_closures: dict[Block, PermGroup] = {}
        rounds = 0
        while True:
            rounds += 1
            _check_rounds(rounds, outer, "σ-p-permutability merge")
            parts = decompose_generators(h, current, group_primes - current.ground)
            pieces = {
                b: join(PermGroup(g.degree, parts[b]), h_core) for b in current.blocks
            }
            for b in current.blocks:
                if b not in sylow_closures:
                    sylow_closures[b] = o_upper_pi(g, group_primes - frozenset(b), config)
            graph: MergeGraph[PermGroup] = MergeGraph(pieces)
            blocks = current.blocks
            for i, a in enumerate(blocks):
                for b in blocks[i + 1 :]:
                    if not _stable_under(
                        pieces[a], sylow_closures[b].generators
                    ) or not _stable_under(pieces[b], sylow_closures[a].generators):
                        graph.add_edge(a, b)
            if not graph.edges:
                break
            current = Partition.from_blocks(
                [_union(c) for c in graph.merged_blocks()], current.ground
            )
            logger.debug(f"Permutability round {rounds}: {len(blocks)} -> {len(current)} blocks")
            if len(current) == 1:
                break

    if not lower.leq(current):
        raise InvariantViolation(f"nilpotency bound {lower} does not refine {current}")
    result = current.extend(target)
    if not is_sigma_p_permutable(g, h, k, result, config):
        raise InvariantViolation(
            f"least σ-p-permutable partition {result} fails its check"
        )
    return result


Checker = Callable[..., Any]


def verify_least(
    result: Partition,
    checker: Checker,
    instance: tuple,
    config: Optional[Config] = None,
) -> bool:
    """
    True iff ``checker`` holds at ``result`` and ``result`` is the meet of
    every partition of its ground at which ``checker`` holds.

    ``checker`` is called as ``checker(*instance, sigma, config)``.

    Raises:
        DeskScaleError: If the ground has more than four primes
    """
    if len(result.ground) > 4:
        raise DeskScaleError("least-partition verification needs at most four primes")

    def holds(sigma: Partition) -> bool:
        return bool(checker(*instance, sigma, config))

    if not holds(result):
        return False
    return least_partition_oracle(result.ground, holds) == result


def least_sigma_subnormal_experimental(
    g: PermGroup, h: PermGroup, k: PermGroup, config: Optional[Config] = None
) -> Partition:
    """
    Experimental: least σ of π(G/K) for σ-subnormality by exhaustive search
    over all partitions (at most four primes).
    """
    _check_triple(g, h, k)
    primes = Section(g, k, check=False).primes()
    if len(primes) > 4:
        raise DeskScaleError("exhaustive search needs at most four primes")
    logger.warning("least σ-subnormal partition is computed by exhaustive search")
    return least_partition_oracle(
        primes, lambda sigma: bool(is_sigma_subnormal(g, h, k, sigma, config))
    )
