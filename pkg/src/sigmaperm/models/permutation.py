"""Permutations of {1..n} stored as image tables."""

from dataclasses import dataclass
from math import lcm
from typing import Iterable, Iterator, Sequence

from ..errors import DegreeMismatchError, InputError


@dataclass(frozen=True, slots=True)
class Permutation:
    """A bijection of {1..n}.

    Points are 1-indexed in every public method; ``images`` is the 0-indexed
    image table (``images[i]`` is the image of point ``i + 1``, minus one).

    Products act left to right: ``(a * b)(i) == b(a(i))``. ``h.conjugate(g)``
    is g⁻¹ h g and ``a.commutator(b)`` is a⁻¹ b⁻¹ a b.
    """

    images: tuple[int, ...]

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        if degree < 1:
            raise InputError(f"degree must be positive, got {degree}")
        return cls(tuple(range(degree)))

    @classmethod
    def from_images(cls, images: Sequence[int]) -> "Permutation":
        """Build from a 1-indexed image list, validating bijectivity.

        Examples:
            >>> Permutation.from_images([2, 3, 1])
            Permutation((1 2 3))
        """
        n = len(images)
        if n < 1:
            raise InputError("a permutation needs at least one point")
        table = tuple(int(i) - 1 for i in images)
        if sorted(table) != list(range(n)):
            raise InputError(f"images {list(images)} are not a bijection of 1..{n}")
        return cls(table)

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], degree: int) -> "Permutation":
        """Build from disjoint 1-indexed cycles; unlisted points are fixed."""
        table = list(range(degree))
        for cycle in cycles:
            for a, b in zip(cycle, [*cycle[1:], cycle[0]]):
                table[a - 1] = b - 1
        return cls(tuple(table))

    @classmethod
    def parse(cls, text: str, degree: int) -> "Permutation":
        from ..utils.cycle_notation import CycleNotation

        return CycleNotation.parse(text, degree)

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, point: int) -> int:
        """Image of a 1-indexed point."""
        return self.images[point - 1] + 1

    def __str__(self) -> str:
        from ..utils.cycle_notation import CycleNotation

        return CycleNotation.format(self)

    def __repr__(self) -> str:
        return f"Permutation({self})"

    def __lt__(self, other: "Permutation") -> bool:
        return self.images < other.images

    def is_identity(self) -> bool:
        return all(i == x for i, x in enumerate(self.images))

    def _check_degree(self, other: "Permutation") -> None:
        if len(self.images) != len(other.images):
            raise DegreeMismatchError(len(self.images), len(other.images))

    def compose(self, other: "Permutation") -> "Permutation":
        """Left-to-right product: apply ``self`` first, then ``other``."""
        self._check_degree(other)
        return Permutation(tuple(map(other.images.__getitem__, self.images)))

    __mul__ = compose

    def inverse(self) -> "Permutation":
        table = [0] * len(self.images)
        for i, x in enumerate(self.images):
            table[x] = i
        return Permutation(tuple(table))

    def power(self, exponent: int) -> "Permutation":
        """Square-and-multiply power; negative exponents use the inverse."""
        base = self if exponent >= 0 else self.inverse()
        e = abs(exponent)
        result = Permutation(tuple(range(len(self.images))))
        while e:
            if e & 1:
                result = result.compose(base)
            e >>= 1
            if e:
                base = base.compose(base)
        return result

    __pow__ = power

    def conjugate(self, g: "Permutation") -> "Permutation":
        """Return g⁻¹ · self · g."""
        return g.inverse().compose(self).compose(g)

    def commutator(self, other: "Permutation") -> "Permutation":
        """Return [self, other] = self⁻¹ · other⁻¹ · self · other."""
        return self.inverse().compose(other.inverse()).compose(self).compose(other)

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles, each starting at its least point, sorted."""
        seen = [False] * len(self.images)
        out: list[tuple[int, ...]] = []
        for start, target in enumerate(self.images):
            if seen[start] or target == start:
                continue
            cycle = [start + 1]
            seen[start] = True
            j = target
            while j != start:
                seen[j] = True
                cycle.append(j + 1)
                j = self.images[j]
            out.append(tuple(cycle))
        return out

    def cycle_lengths(self) -> Iterator[int]:
        return (len(c) for c in self.cycles())

    def order(self) -> int:
        """Element order: lcm of the cycle lengths."""
        return lcm(1, *self.cycle_lengths())

    def moved_points(self) -> list[int]:
        """Moved points, 1-indexed and ascending."""
        return [i + 1 for i, x in enumerate(self.images) if i != x]

    def least_moved_point(self) -> int:
        """Least moved 0-indexed point, or -1 for the identity."""
        for i, x in enumerate(self.images):
            if i != x:
                return i
        return -1

    def embed(self, degree: int) -> "Permutation":
        """Explicitly extend to a larger degree, fixing the new points."""
        if degree < len(self.images):
            raise InputError(f"cannot embed degree {len(self.images)} into {degree}")
        return Permutation(self.images + tuple(range(len(self.images), degree)))


def compose(a: Permutation, b: Permutation) -> Permutation:
    return a.compose(b)


def inverse(a: Permutation) -> Permutation:
    return a.inverse()


def power(a: Permutation, e: int) -> Permutation:
    return a.power(e)


def element_order(a: Permutation) -> int:
    return a.order()
