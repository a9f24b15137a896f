"""Per-block generator lists produced by σ-decomposition."""

from dataclasses import dataclass, field

from .partition import Block, Partition
from .permutation import Permutation


@dataclass
class SigmaGenerators:
    """
    Generators of a group split into σ_i-elements, one list per block.

    Attributes:
        partition: The partition the generators were decomposed over
        by_block: Block -> σ_i-elements (identities dropped, keys kept)
        extra_primes: Primes handled by the extra bucket
        extra: Elements whose order only involves ``extra_primes``
    """

    partition: Partition
    by_block: dict[Block, list[Permutation]]
    extra_primes: frozenset[int] = frozenset()
    extra: list[Permutation] = field(default_factory=list)

    def __getitem__(self, block: Block) -> list[Permutation]:
        return self.by_block[block]

    def all_generators(self) -> list[Permutation]:
        """Every listed element, blocks in partition order, extra bucket last."""
        out = [g for block in self.partition.blocks for g in self.by_block[block]]
        return out + self.extra

    @property
    def total(self) -> int:
        return sum(len(gens) for gens in self.by_block.values()) + len(self.extra)
