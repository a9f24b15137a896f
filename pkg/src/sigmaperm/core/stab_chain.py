"""Stabilizer chains and permutation groups.

Deterministic incremental Schreier-Sims: every Schreier generator is sifted
before the chain is accepted, so orders and membership tests are exact.
"""

import logging
import random
import threading
from dataclasses import dataclass, field
from math import prod
from typing import Iterable, Optional, Sequence

from ..errors import DegreeMismatchError, DeskScaleError, InputError, InvariantViolation
from ..models.permutation import Permutation


logger = logging.getLogger(__name__)


def max_chain_length(degree: int) -> int:
    """Longest strictly ascending subgroup chain in S_n (2n - 3 for n >= 2)."""
    return max(2 * degree - 3, 0)


def check_chain_length(steps: int, degree: int, what: str = "subgroup chain") -> None:
    """Raise if a strictly ascending chain exceeds the 2n - 3 bound."""
    bound = max_chain_length(degree)
    if steps > bound:
        raise InvariantViolation(
            f"{what} has {steps} strict steps, exceeding 2n - 3 = {bound} for n = {degree}"
        )


@dataclass
class ChainLevel:
    """One level of a stabilizer chain: base point, generators, transversal."""

    point: int  # 0-indexed base point
    generators: list[Permutation] = field(default_factory=list)
    transversal: dict[int, Permutation] = field(default_factory=dict)
    _inverses: dict[int, Permutation] = field(default_factory=dict, repr=False)

    def extend_orbit(self, degree: int) -> None:
        """Breadth-first orbit of the base point under the current generators.

        Representatives already in the transversal are kept, so Schreier
        generators sifted earlier stay valid.
        """
        if not self.transversal:
            self.transversal = {self.point: Permutation.identity(degree)}
        queue = list(self.transversal)
        for beta in queue:
            u_beta = self.transversal[beta]
            for s in self.generators:
                gamma = s.images[beta]
                if gamma not in self.transversal:
                    self.transversal[gamma] = u_beta.compose(s)
                    queue.append(gamma)

    def inverse_of(self, beta: int) -> Permutation:
        inv = self._inverses.get(beta)
        if inv is None:
            inv = self._inverses[beta] = self.transversal[beta].inverse()
        return inv

    @property
    def orbit_size(self) -> int:
        return len(self.transversal)


class StabilizerChain:
    """Base and strong generating set with per-level orbit transversals."""

    def __init__(self, degree: int, levels: list[ChainLevel]):
        self.degree = degree
        self.levels = levels

    @property
    def base(self) -> list[int]:
        """Base points, 1-indexed."""
        return [level.point + 1 for level in self.levels]

    @property
    def order(self) -> int:
        return prod(level.orbit_size for level in self.levels)

    @property
    def strong_generators(self) -> list[Permutation]:
        seen: dict[Permutation, None] = {}
        for level in self.levels:
            for g in level.generators:
                seen.setdefault(g, None)
        return list(seen)

    @property
    def transversal_elements(self) -> list[Permutation]:
        """Nonidentity coset representatives of all levels; they generate the group."""
        seen: dict[Permutation, None] = {}
        for level in self.levels:
            for u in level.transversal.values():
                if not u.is_identity():
                    seen.setdefault(u, None)
        return list(seen)

    def sift(self, g: Permutation, start: int = 0) -> tuple[Permutation, int]:
        """Strip ``g`` through the levels from ``start``.

        Returns the residue and the index of the level where sifting stopped
        (``len(levels)`` when every level was passed).
        """
        for index in range(start, len(self.levels)):
            level = self.levels[index]
            beta = g.images[level.point]
            if beta not in level.transversal:
                return g, index
            g = g.compose(level.inverse_of(beta))
        return g, len(self.levels)

    def contains(self, g: Permutation) -> bool:
        residue, index = self.sift(g)
        return index == len(self.levels) and residue.is_identity()

    @classmethod
    def build(
        cls,
        degree: int,
        generators: Sequence[Permutation],
        initial_base: Sequence[int] = (),
    ) -> "StabilizerChain":
        """
        Deterministic incremental Schreier-Sims.

        Args:
            degree: Degree of the permutations
            generators: Nonidentity generators
            initial_base: 0-indexed points forced to the front of the base;
                further base points are least moved points, appended in order

        Returns:
            A chain in which every Schreier generator sifts to the identity
        """
        base = list(initial_base)
        for g in generators:
            if all(g.images[b] == b for b in base):
                base.append(g.least_moved_point())

        levels = [ChainLevel(point) for point in base]
        for depth, level in enumerate(levels):
            fixed = base[:depth]
            level.generators = [g for g in generators if all(g.images[b] == b for b in fixed)]
            level.extend_orbit(degree)
        chain = cls(degree, levels)
        # (orbit point, generator index) pairs already sifted, per level
        checked: list[set[tuple[int, int]]] = [set() for _ in levels]

        i = len(levels) - 1
        while i >= 0:
            level, done = levels[i], checked[i]
            grown_to: Optional[int] = None
            for beta, u_beta in list(level.transversal.items()):
                for index, s in enumerate(list(level.generators)):
                    if (beta, index) in done:
                        continue
                    done.add((beta, index))
                    gamma = s.images[beta]
                    moved = u_beta.compose(s)
                    if moved == level.transversal[gamma]:
                        continue
                    schreier = moved.compose(level.inverse_of(gamma))
                    residue, j = chain.sift(schreier, start=i + 1)
                    if j == len(levels):
                        if residue.is_identity():
                            continue
                        levels.append(ChainLevel(residue.least_moved_point()))
                        checked.append(set())
                    # residue fixes base[:j]; it joins levels i+1..j
                    for depth in range(i + 1, j + 1):
                        levels[depth].generators.append(residue)
                        levels[depth].extend_orbit(degree)
                    grown_to = j
                    break
                if grown_to is not None:
                    break
            i = i - 1 if grown_to is None else grown_to

        logger.debug(
            f"Built chain of degree {degree}: base length {len(levels)}, "
            f"order {chain.order}"
        )
        return chain

    def verify(self) -> bool:
        """Re-sift every Schreier generator of every level."""
        for index, level in enumerate(self.levels):
            for beta, u_beta in level.transversal.items():
                for s in level.generators:
                    schreier = u_beta.compose(s).compose(
                        level.inverse_of(s.images[beta])
                    )
                    residue, j = self.sift(schreier, start=index + 1)
                    if j != len(self.levels) or not residue.is_identity():
                        return False
        return True


class PermGroup:
    """A permutation group given by generators, with a lazily built chain.

    Generators are deduplicated and stripped of the identity. When more than
    n² generators are supplied they are replaced by the chain's transversal elements.
    The chain is built once under a lock and then shared read-only.
    """

    def __init__(
        self,
        degree: int,
        generators: Iterable[Permutation] = (),
        *,
        _seed: Optional[tuple[Sequence[int], Sequence[Permutation]]] = None,
    ):
        if degree < 1:
            raise InputError(f"degree must be positive, got {degree}")
        unique: dict[Permutation, None] = {}
        for g in generators:
            if g.degree != degree:
                raise DegreeMismatchError(degree, g.degree)
            if not g.is_identity():
                unique.setdefault(g, None)

        self.degree = degree
        self.generators: list[Permutation] = list(unique)
        self._seed = _seed
        self._chain: Optional[StabilizerChain] = None
        self._lock = threading.Lock()

        if len(self.generators) > degree**2:
            reps = self.chain.transversal_elements
            logger.debug(
                f"Reducing {len(self.generators)} generators to "
                f"{len(reps)} transversal elements"
            )
            self.generators = reps

    @classmethod
    def trivial(cls, degree: int) -> "PermGroup":
        return cls(degree)

    @classmethod
    def from_cycles(cls, degree: int, cycles: Iterable[str]) -> "PermGroup":
        return cls(degree, [Permutation.parse(text, degree) for text in cycles])

    def __repr__(self) -> str:
        gens = ", ".join(str(g) for g in self.generators) or "()"
        return f"PermGroup(degree={self.degree}, <{gens}>)"

    @property
    def chain(self) -> StabilizerChain:
        if self._chain is None:
            with self._lock:
                if self._chain is None:
                    if self._seed is not None:
                        base, strong = self._seed
                        gens = list(dict.fromkeys([*strong, *self.generators]))
                        self._chain = StabilizerChain.build(self.degree, gens, base)
                    else:
                        self._chain = StabilizerChain.build(self.degree, self.generators)
        return self._chain

    def order(self) -> int:
        """|G| as the product of basic orbit lengths."""
        if not self.generators:
            return 1
        return self.chain.order

    def is_trivial(self) -> bool:
        return not self.generators

    def _check_degree(self, degree: int) -> None:
        if degree != self.degree:
            raise DegreeMismatchError(self.degree, degree)

    def contains(self, p: Permutation) -> bool:
        """Membership by sifting through the chain."""
        self._check_degree(p.degree)
        if p.is_identity():
            return True
        if not self.generators:
            return False
        return self.chain.contains(p)

    __contains__ = contains

    def is_subgroup(self, other: "PermGroup") -> bool:
        """True if self ≤ other (every generator of self lies in other)."""
        self._check_degree(other.degree)
        return all(other.contains(g) for g in self.generators)

    def equals(self, other: "PermGroup") -> bool:
        """Equality as subgroups of S_n, short-circuited on the order."""
        self._check_degree(other.degree)
        if self.order() != other.order():
            return False
        return self.is_subgroup(other)

    def closure_with(self, elements: Iterable[Permutation]) -> "PermGroup":
        """⟨self, elements⟩, seeding Schreier-Sims with the current chain."""
        new = [g for g in elements if not self.contains(g)]
        if not new:
            return self
        if not self.generators:
            return PermGroup(self.degree, new)
        chain = self.chain
        seed = ([level.point for level in chain.levels], chain.strong_generators)
        return PermGroup(self.degree, [*self.generators, *new], _seed=seed)

    def elements(self, cap: int) -> list[Permutation]:
        """All elements as products of transversal elements, deepest level first.

        Raises:
            DeskScaleError: If the order exceeds ``cap``
        """
        order = self.order()
        if order > cap:
            raise DeskScaleError(f"group of order {order} exceeds enumeration cap {cap}")
        elements = [Permutation.identity(self.degree)]
        if not self.generators:
            return elements
        for level in reversed(self.chain.levels):
            reps = list(level.transversal.values())
            elements = [e.compose(u) for e in elements for u in reps]
        return elements

    def random_element(self, rng: random.Random) -> Permutation:
        """Uniformly random element."""
        g = Permutation.identity(self.degree)
        if not self.generators:
            return g
        for level in reversed(self.chain.levels):
            reps = list(level.transversal.values())
            g = g.compose(rng.choice(reps))
        return g


def group_order(g: PermGroup) -> int:
    return g.order()


def contains(g: PermGroup, p: Permutation) -> bool:
    return g.contains(p)


def is_subgroup(h: PermGroup, g: PermGroup) -> bool:
    return h.is_subgroup(g)


def equal_groups(a: PermGroup, b: PermGroup) -> bool:
    return a.equals(b)


def enumerate_elements(g: PermGroup, cap: int) -> list[Permutation]:
    return g.elements(cap)


def build_chain(g: PermGroup) -> StabilizerChain:
    return g.chain
