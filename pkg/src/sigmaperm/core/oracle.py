"""Brute-force certifiers for tiny groups.

Everything here works from the definitions on explicit element sets: a
quotient G/K is modelled as a Cayley table over K-cosets, subgroups are
frozensets of table indices. Nothing in this module calls the σ-property
checkers it is used to certify.
"""

import logging
from dataclasses import dataclass, field
from functools import reduce
from typing import Callable, Iterable, Optional

from ..config import Config, resolve_config
from ..errors import DeskScaleError, InvariantViolation, NotSigmaSolubleError
from ..models.partition import Partition, all_partitions
from ..models.permutation import Permutation
from ..utils.primes import PrimeTools
from .stab_chain import PermGroup


logger = logging.getLogger(__name__)

Subset = frozenset[int]


class CayleyTable:
    """Multiplication table of G/K with one representative per K-coset.

    Index 0 is the identity coset.
    """

    def __init__(
        self,
        reps: list[Permutation],
        mul: list[list[int]],
        inverse: list[int],
        generators: list[int],
        labels: dict[tuple[int, ...], int],
    ):
        self.reps = reps
        self.mul = mul
        self.inverse = inverse
        self.generators = generators
        self._labels = labels

    @classmethod
    def from_section(
        cls, big: PermGroup, small: Optional[PermGroup] = None, cap: int = 2000
    ) -> "CayleyTable":
        """
        Enumerate G and label every element by its K-coset.

        Raises:
            DeskScaleError: If |G| exceeds ``cap``
        """
        if big.order() > cap:
            raise DeskScaleError(f"oracle needs |G| <= {cap}, got {big.order()}")
        small = small if small is not None else PermGroup.trivial(big.degree)
        kernel = small.elements(cap)
        identity = Permutation.identity(big.degree)

        labels: dict[tuple[int, ...], int] = {}
        reps: list[Permutation] = []
        for x in [identity, *big.elements(cap)]:
            if x.images in labels:
                continue
            index = len(reps)
            reps.append(x)
            for y in kernel:
                labels[x.compose(y).images] = index

        mul = [[labels[a.compose(b).images] for b in reps] for a in reps]
        inverse = [labels[a.inverse().images] for a in reps]
        generators = sorted({labels[s.images] for s in big.generators} - {0})
        logger.debug(f"Cayley table of order {len(reps)}")
        return cls(reps, mul, inverse, generators, labels)

    @property
    def order(self) -> int:
        return len(self.reps)

    def index_of(self, p: Permutation) -> int:
        return self._labels[p.images]

    def generate(self, gens: Iterable[int]) -> Subset:
        """Subgroup generated by table elements (closure under right products)."""
        gens = list(gens)
        seen = {0}
        queue = [0]
        for x in queue:
            row = self.mul[x]
            for s in gens:
                y = row[s]
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
        return frozenset(seen)

    def image_of(self, group: PermGroup) -> Subset:
        """Image of a subgroup of G in the quotient."""
        return self.generate(self.index_of(s) for s in group.generators)

    def conjugate(self, x: int, y: int) -> int:
        """y⁻¹ x y."""
        return self.mul[self.mul[self.inverse[y]][x]][y]

    def conjugate_set(self, subset: Subset, y: int) -> Subset:
        return frozenset(self.conjugate(x, y) for x in subset)

    def is_normal(self, subset: Subset, within: Optional[Iterable[int]] = None) -> bool:
        conjugators = self.generators if within is None else within
        return all(self.conjugate(x, y) in subset for y in conjugators for x in subset)

    def element_order(self, x: int) -> int:
        order, y = 1, x
        while y != 0:
            y = self.mul[y][x]
            order += 1
        return order

    def normal_closure_of(self, x: int) -> Subset:
        return self.generate({self.conjugate(x, y) for y in range(self.order)})

    def permutes(self, a: Subset, b: Subset) -> bool:
        """True iff AB = BA as element sets."""
        ab = {self.mul[x][y] for x in a for y in b}
        ba = {self.mul[y][x] for x in a for y in b}
        return ab == ba


def _subgroups(
    table: CayleyTable,
    seed: Callable[[int], bool] = lambda x: True,
    keep: Callable[[Subset], bool] = lambda s: True,
) -> dict[Subset, tuple[int, ...]]:
    """Subgroups reachable from cyclic subgroups of seed elements by iterated
    joins with cyclic subgroups, pruned by ``keep``. Maps each to generators."""
    cyclic: dict[Subset, tuple[int, ...]] = {}
    for x in range(1, table.order):
        if seed(x):
            cyclic.setdefault(table.generate([x]), (x,))

    found: dict[Subset, tuple[int, ...]] = {frozenset({0}): ()}
    for c, gens in cyclic.items():
        if keep(c):
            found.setdefault(c, gens)
    frontier = list(found)
    while frontier:
        fresh: list[Subset] = []
        for a in frontier:
            for c, gens in cyclic.items():
                if c <= a:
                    continue
                joined_gens = found[a] + gens
                joined = table.generate(joined_gens)
                if joined in found or not keep(joined):
                    continue
                found[joined] = joined_gens
                fresh.append(joined)
        frontier = fresh
    return found


@dataclass
class SubgroupLattice:
    """All subgroups of a (quotient) group with inclusion and normality.

    ``normality[i][j]`` is True when subgroup i is a normal subgroup of j.
    """

    table: CayleyTable
    subgroups: list[Subset]
    generators: list[tuple[int, ...]]
    inclusion: list[list[bool]] = field(default_factory=list)
    normality: list[list[bool]] = field(default_factory=list)

    @classmethod
    def build(cls, table: CayleyTable) -> "SubgroupLattice":
        found = _subgroups(table)
        ordered = sorted(found, key=lambda s: (len(s), sorted(s)))
        gens = [found[s] for s in ordered]
        size = len(ordered)
        inclusion = [[a <= b for b in ordered] for a in ordered]
        normality = [
            [
                inclusion[i][j]
                and all(table.conjugate(x, y) in ordered[i] for y in gens[j] for x in gens[i])
                for j in range(size)
            ]
            for i in range(size)
        ]
        return cls(table, ordered, gens, inclusion, normality)

    def __len__(self) -> int:
        return len(self.subgroups)

    def index(self, subset: Subset) -> int:
        return self.subgroups.index(subset)

    def core_in(self, i: int, j: int) -> int:
        """Index of the largest subgroup inside i that is normal in j."""
        best = 0
        for l in range(len(self.subgroups)):
            if self.inclusion[l][i] and self.normality[l][j]:
                if len(self.subgroups[l]) > len(self.subgroups[best]):
                    best = l
        return best

    def to_groups(self, degree: int) -> list[PermGroup]:
        """Subgroups as permutation groups (meaningful over a trivial K)."""
        return [
            PermGroup(degree, [self.table.reps[x] for x in gens]) for gens in self.generators
        ]


def subgroup_lattice(
    g: PermGroup, cap: Optional[int] = None, config: Optional[Config] = None
) -> SubgroupLattice:
    """
    Every subgroup of G.

    Raises:
        DeskScaleError: If |G| exceeds the lattice cap
    """
    config = resolve_config(config)
    cap = cap if cap is not None else config.lattice_cap
    return SubgroupLattice.build(CayleyTable.from_section(g, cap=cap))


def _hall_sets(table: CayleyTable, primes: Iterable[int]) -> list[Subset]:
    primes = frozenset(primes)
    part = PrimeTools.pi_part(table.order, primes)
    if part == 1:
        return [frozenset({0})]
    if part == table.order:
        return [frozenset(range(table.order))]
    found = _subgroups(
        table,
        seed=lambda x: PrimeTools.is_pi_number(table.element_order(x), primes),
        keep=lambda s: PrimeTools.is_pi_number(len(s), primes),
    )
    return sorted((s for s in found if len(s) == part), key=sorted)


def hall_subgroups(
    g: PermGroup,
    block: Iterable[int],
    cap: Optional[int] = None,
    config: Optional[Config] = None,
) -> list[PermGroup]:
    """
    All Hall block-subgroups of G: subgroups of order the block-part of |G|.

    Raises:
        DeskScaleError: If |G| exceeds the cap
    """
    config = resolve_config(config)
    cap = cap if cap is not None else config.oracle_cap
    table = CayleyTable.from_section(g, cap=cap)
    return [
        PermGroup(g.degree, [table.reps[x] for x in subset if x])
        for subset in _hall_sets(table, block)
    ]


def set_product_permutes(
    a: PermGroup, b: PermGroup, cap: Optional[int] = None, config: Optional[Config] = None
) -> bool:
    """
    True iff the element sets AB and BA coincide.

    Raises:
        DeskScaleError: If |A|·|B| exceeds the cap
    """
    config = resolve_config(config)
    cap = cap if cap is not None else config.oracle_cap
    if a.order() * b.order() > cap:
        raise DeskScaleError(f"set product of {a.order()} x {b.order()} exceeds {cap}")
    xs, ys = a.elements(cap), b.elements(cap)
    ab = {x.compose(y).images for x in xs for y in ys}
    ba = {y.compose(x).images for x in xs for y in ys}
    return ab == ba


def _blocks_over(sigma: Partition, primes: frozenset[int]) -> list[frozenset[int]]:
    pieces = [frozenset(b) & primes for b in sigma.blocks]
    return [p for p in pieces if p]


def _quotient(
    g: PermGroup, k: Optional[PermGroup], config: Config, cap: Optional[int] = None
) -> CayleyTable:
    table = CayleyTable.from_section(g, k, cap=config.oracle_cap)
    if cap is not None and table.order > cap:
        raise DeskScaleError(f"oracle needs |G/K| <= {cap}, got {table.order}")
    return table


def sigma_nilpotent_oracle(
    g: PermGroup,
    k: Optional[PermGroup],
    sigma: Partition,
    cap: Optional[int] = None,
    config: Optional[Config] = None,
) -> bool:
    """G/K has a normal Hall σ_i-subgroup for every block."""
    config = resolve_config(config)
    return nilpotent_in_table(_quotient(g, k, config, cap), sigma)


def nilpotent_in_table(table: CayleyTable, sigma: Partition) -> bool:
    primes = PrimeTools.prime_set(table.order)
    return all(
        any(table.is_normal(h) for h in _hall_sets(table, block))
        for block in _blocks_over(sigma, primes)
    )


def normal_subgroups(table: CayleyTable) -> list[Subset]:
    """Every normal subgroup, as joins of normal closures of single elements."""
    closures = {table.normal_closure_of(x) for x in range(1, table.order)}
    found: set[Subset] = {frozenset({0}), *closures}
    frontier = list(found)
    while frontier:
        fresh = []
        for a in frontier:
            for c in closures:
                if c <= a:
                    continue
                joined = table.generate(a | c)
                if joined not in found:
                    found.add(joined)
                    fresh.append(joined)
        frontier = fresh
    return sorted(found, key=lambda s: (len(s), sorted(s)))


def chief_factor_primes(table: CayleyTable) -> list[frozenset[int]]:
    """Prime sets of the factors of a chief series built by minimal steps."""
    normals = normal_subgroups(table)
    current: Subset = frozenset({0})
    factors: list[frozenset[int]] = []
    while len(current) < table.order:
        above = [n for n in normals if current < n]
        step = min(above, key=len)
        factors.append(PrimeTools.prime_set(len(step) // len(current)))
        current = step
    return factors


def sigma_soluble_oracle(
    g: PermGroup,
    k: Optional[PermGroup],
    sigma: Partition,
    cap: Optional[int] = None,
    config: Optional[Config] = None,
) -> bool:
    """Every chief factor of G/K is a σ_i-group for some block."""
    config = resolve_config(config)
    return soluble_at(chief_factor_primes(_quotient(g, k, config, cap)), sigma)


def soluble_at(factor_primes: list[frozenset[int]], sigma: Partition) -> bool:
    """True if every chief factor prime set fits inside one block."""
    blocks = [frozenset(b) for b in sigma.blocks]
    return all(any(primes <= b for b in blocks) for primes in factor_primes)


def sigma_subnormal_oracle(
    g: PermGroup,
    h: PermGroup,
    sigma: Partition,
    cap: Optional[int] = None,
    k: Optional[PermGroup] = None,
    config: Optional[Config] = None,
) -> bool:
    """
    Chain search over the subgroup lattice of G/K for H/K.

    f(G) holds; f(A) holds when some B ⊋ A with f(B) satisfies A ⊴ B or
    B/A_B is a σ_i-group.
    """
    config = resolve_config(config)
    cap = cap if cap is not None else config.lattice_cap
    lattice = SubgroupLattice.build(_quotient(g, k, config, cap))
    return lattice_subnormal(lattice, lattice.table.image_of(h), sigma)


def lattice_subnormal(lattice: SubgroupLattice, target: Subset, sigma: Partition) -> bool:
    """Evaluate the σ-subnormal chain recursion on a prebuilt lattice."""
    blocks = [frozenset(b) for b in sigma.blocks]
    size = len(lattice)
    reachable = [False] * size
    reachable[size - 1] = True
    for i in range(size - 2, -1, -1):
        for j in range(i + 1, size):
            if not reachable[j] or not lattice.inclusion[i][j]:
                continue
            if lattice.normality[i][j]:
                reachable[i] = True
                break
            ratio = len(lattice.subgroups[j]) // len(lattice.subgroups[lattice.core_in(i, j)])
            primes = PrimeTools.prime_set(ratio)
            if any(primes <= b for b in blocks):
                reachable[i] = True
                break
    return reachable[lattice.index(target)]


def sigma_permutable_oracle(
    g: PermGroup,
    h: PermGroup,
    sigma: Partition,
    cap: Optional[int] = None,
    k: Optional[PermGroup] = None,
    config: Optional[Config] = None,
) -> bool:
    """
    H/K permutes with every conjugate of one Hall σ_i-subgroup per block.

    Raises:
        NotSigmaSolubleError: If G/K is not σ-soluble at σ
    """
    config = resolve_config(config)
    table = _quotient(g, k, config, cap)
    if not soluble_at(chief_factor_primes(table), sigma):
        raise NotSigmaSolubleError("Hall subgroups need a σ-soluble group")
    return permutable_in_table(table, table.image_of(h), sigma)


def permutable_in_table(table: CayleyTable, target: Subset, sigma: Partition) -> bool:
    """Set-product test against all conjugates of one Hall σ_i-subgroup per
    block; the caller guarantees the Hall subgroups exist."""
    primes = PrimeTools.prime_set(table.order)
    for block in _blocks_over(sigma, primes):
        hall = _hall_sets(table, block)[0]
        conjugates = {table.conjugate_set(hall, x) for x in range(table.order)}
        if not all(table.permutes(target, c) for c in conjugates):
            return False
    return True


def least_partition_oracle(
    primes: Iterable[int], predicate: Callable[[Partition], bool]
) -> Partition:
    """
    Meet of every partition of ``primes`` satisfying ``predicate``.

    Raises:
        DeskScaleError: For more than four primes
        InvariantViolation: If the single-block partition or the meet fails
    """
    primes = frozenset(primes)
    if len(primes) > 4:
        raise DeskScaleError("exhaustive partition search needs at most four primes")
    single = Partition.single_block(primes)
    passing = [p for p in all_partitions(primes) if predicate(p)]
    if single not in passing:
        raise InvariantViolation(f"single-block partition {single} fails the predicate")
    meet = reduce(Partition.meet, passing)
    if not predicate(meet):
        raise InvariantViolation(f"meet {meet} of passing partitions fails the predicate")
    return meet
