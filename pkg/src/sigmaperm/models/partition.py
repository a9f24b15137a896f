"""Partitions of finite prime sets."""

from dataclasses import dataclass
from typing import Iterable, Iterator, Optional

from ..errors import PartitionError
from ..utils.primes import PrimeTools


Block = tuple[int, ...]


@dataclass(frozen=True)
class Partition:
    """A partition σ of a finite set of primes into disjoint nonempty blocks.

    Blocks are kept canonical (primes ascending within a block, blocks sorted
    by least prime), so equality is structural and partitions can be used as
    dictionary keys.
    """

    ground: frozenset[int]
    blocks: tuple[Block, ...]

    @classmethod
    def from_blocks(
        cls, blocks: Iterable[Iterable[int]], ground: Optional[Iterable[int]] = None
    ) -> "Partition":
        """
        Validate and canonicalise blocks.

        Args:
            blocks: Disjoint nonempty prime sets
            ground: Expected union of the blocks (defaults to the union)

        Raises:
            PartitionError: On empty blocks, overlaps, or a union that differs
                from ``ground``
        """
        canonical: list[Block] = []
        seen: set[int] = set()
        for block in blocks:
            primes = tuple(sorted(set(block)))
            if not primes:
                raise PartitionError("partition blocks must be nonempty")
            overlap = seen.intersection(primes)
            if overlap:
                raise PartitionError(f"prime {min(overlap)} appears in two blocks")
            seen.update(primes)
            canonical.append(primes)

        union = frozenset(seen)
        if ground is not None:
            expected = frozenset(ground)
            if union != expected:
                missing = sorted(expected - union)
                extra = sorted(union - expected)
                details = []
                if missing:
                    details.append(f"uncovered {missing}")
                if extra:
                    details.append(f"outside ground {extra}")
                raise PartitionError(
                    f"blocks do not partition {sorted(expected)}: " + ", ".join(details)
                )
        canonical.sort(key=lambda b: b[0])
        return cls(ground=union, blocks=tuple(canonical))

    @classmethod
    def singletons(cls, primes: Iterable[int]) -> "Partition":
        """The finest partition {{p} | p ∈ primes}."""
        return cls.from_blocks([(p,) for p in set(primes)])

    @classmethod
    def single_block(cls, primes: Iterable[int]) -> "Partition":
        """The coarsest partition {primes} (empty partition for no primes)."""
        primes = frozenset(primes)
        return cls.from_blocks([primes] if primes else [])

    @classmethod
    def parse(cls, text: str, ground: Iterable[int]) -> "Partition":
        """
        Parse ``block ("|" block)*`` with ``block := prime ("," prime)*``.

        Examples:
            >>> str(Partition.parse("2,3|5", {2, 3, 5}))
            '2,3|5'
        """
        ground = frozenset(ground)
        stripped = text.strip()
        if not stripped:
            return cls.from_blocks([], ground)

        blocks: list[list[int]] = []
        for raw_block in stripped.split("|"):
            block: list[int] = []
            for token in raw_block.split(","):
                token = token.strip()
                if not (token.isascii() and token.isdigit()):
                    raise PartitionError(f"bad token {token!r} in partition {text!r}")
                value = int(token)
                if not PrimeTools.is_prime(value):
                    raise PartitionError(f"{value} is not prime")
                if value in block:
                    raise PartitionError(f"prime {value} repeated")
                block.append(value)
            blocks.append(block)
        return cls.from_blocks(blocks, ground)

    def __str__(self) -> str:
        return "|".join(",".join(map(str, b)) for b in self.blocks)

    def __len__(self) -> int:
        return len(self.blocks)

    def __iter__(self) -> Iterator[Block]:
        return iter(self.blocks)

    def _check_ground(self, other: "Partition") -> None:
        if self.ground != other.ground:
            raise PartitionError(
                f"ground mismatch: {sorted(self.ground)} != {sorted(other.ground)}"
            )

    def block_of(self, prime: int) -> Block:
        for block in self.blocks:
            if prime in block:
                return block
        raise PartitionError(f"prime {prime} is not in the ground set")

    def meet(self, other: "Partition") -> "Partition":
        """σ¹ ∩ σ²: all nonempty pairwise block intersections."""
        self._check_ground(other)
        pieces = [
            set(a).intersection(b) for a in self.blocks for b in other.blocks
        ]
        return Partition.from_blocks([p for p in pieces if p], self.ground)

    def __and__(self, other: "Partition") -> "Partition":
        return self.meet(other)

    def leq(self, other: "Partition") -> bool:
        """Refinement order: every block of self lies inside a block of other."""
        self._check_ground(other)
        return all(
            any(set(a) <= set(b) for b in other.blocks) for a in self.blocks
        )

    def __le__(self, other: "Partition") -> bool:
        return self.leq(other)

    def restrict(self, primes: Iterable[int]) -> "Partition":
        """σ(H/K) = {σ_i ∩ primes}, dropping empty intersections."""
        primes = frozenset(primes)
        if not primes <= self.ground:
            raise PartitionError(
                f"primes {sorted(primes - self.ground)} lie outside the ground set"
            )
        pieces = [primes.intersection(b) for b in self.blocks]
        return Partition.from_blocks([p for p in pieces if p], primes)

    def extend(self, primes: Iterable[int]) -> "Partition":
        """Add a singleton block for every prime not already in the ground."""
        new = sorted(frozenset(primes) - self.ground)
        return Partition.from_blocks([*self.blocks, *((p,) for p in new)])

    def split_refinements(self) -> list["Partition"]:
        """Partitions obtained by splitting exactly one block into two parts."""
        out: list[Partition] = []
        for index, block in enumerate(self.blocks):
            if len(block) < 2:
                continue
            rest = [b for i, b in enumerate(self.blocks) if i != index]
            first, others = block[0], block[1:]
            # Each two-part split once: subsets of the tail joined with the head
            for mask in range(2 ** len(others) - 1):
                left = [first] + [p for bit, p in enumerate(others) if mask >> bit & 1]
                right = [p for p in block if p not in left]
                out.append(Partition.from_blocks([*rest, left, right], self.ground))
        return out


def parse_partition(text: str, ground: Iterable[int]) -> Partition:
    return Partition.parse(text, ground)


def all_partitions(primes: Iterable[int]) -> list[Partition]:
    """
    Every partition of a prime set (Bell-number many), in a fixed order.

    Examples:
        >>> len(all_partitions({2, 3, 5, 7}))
        15
    """
    items = sorted(set(primes))

    def build(rest: list[int]) -> Iterator[list[list[int]]]:
        if not rest:
            yield []
            return
        head, tail = rest[0], rest[1:]
        for partial in build(tail):
            yield [[head], *partial]
            for i in range(len(partial)):
                yield [*partial[:i], [head, *partial[i]], *partial[i + 1 :]]

    return [Partition.from_blocks(blocks, items) for blocks in build(items)]
