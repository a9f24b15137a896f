"""Subgroup toolbox: closures, cores, Sylow subgroups, O^π and chief series.

Everything here works on :class:`PermGroup` objects of one degree and takes an
optional :class:`Config` holding the desk-scale caps.
"""

import logging
import random
from dataclasses import dataclass, field
from math import factorial
from typing import Iterable, Optional, Sequence

from ..config import Config, resolve_config
from ..errors import (
    DegreeMismatchError,
    DeskScaleError,
    InvariantViolation,
    PreconditionError,
    SeriesNotFoundError,
)
from ..models.permutation import Permutation
from ..utils.primes import PrimeTools
from .stab_chain import PermGroup, check_chain_length


logger = logging.getLogger(__name__)


def _same_degree(*groups: PermGroup) -> int:
    degree = groups[0].degree
    for g in groups[1:]:
        if g.degree != degree:
            raise DegreeMismatchError(degree, g.degree)
    return degree


def _require_subgroup(h: PermGroup, g: PermGroup, what: str = "subgroup") -> None:
    if not h.is_subgroup(g):
        raise PreconditionError(f"{what} is not contained in the ambient group")


def is_normal_in(h: PermGroup, g: PermGroup) -> bool:
    """
    True if h ⊴ g: every conjugate of an h-generator by a g-generator lies in h.

    Raises:
        PreconditionError: If h is not a subgroup of g
    """
    _same_degree(h, g)
    _require_subgroup(h, g)
    return _normalized_by(h, g.generators)


def _normalized_by(h: PermGroup, conjugators: Iterable[Permutation]) -> bool:
    conjugators = list(conjugators)
    return all(h.contains(x.conjugate(s)) for x in h.generators for s in conjugators)


class Section:
    """The quotient G/K, held as the pair (G, K) with K ⊴ G.

    Args:
        big: The group G
        small: A normal subgroup K of G
        check: Verify K ≤ G and K ⊴ G (skipped only for pairs built internally)

    Raises:
        PreconditionError: If K is not a normal subgroup of G
    """

    def __init__(self, big: PermGroup, small: PermGroup, check: bool = True):
        _same_degree(big, small)
        if check:
            _require_subgroup(small, big, "normal subgroup")
            if not _normalized_by(small, big.generators):
                raise PreconditionError("K is not normal in G")
        self.big = big
        self.small = small

    def __repr__(self) -> str:
        return f"Section(|G|={self.big.order()}, |K|={self.small.order()})"

    @property
    def degree(self) -> int:
        return self.big.degree

    def order(self) -> int:
        big, small = self.big.order(), self.small.order()
        if big % small:
            raise InvariantViolation(f"|K| = {small} does not divide |G| = {big}")
        return big // small

    def primes(self) -> frozenset[int]:
        return PrimeTools.prime_set(self.order())

    def is_trivial(self) -> bool:
        return self.order() == 1


@dataclass
class ChiefSeries:
    """Ascending chief series K = G_0 < G_1 < ... < G_k = G."""

    groups: list[PermGroup]
    factor_orders: list[int] = field(default_factory=list)
    factor_prime_sets: list[frozenset[int]] = field(default_factory=list)

    @classmethod
    def from_groups(cls, groups: list[PermGroup]) -> "ChiefSeries":
        orders = [b.order() // a.order() for a, b in zip(groups, groups[1:])]
        return cls(groups, orders, [PrimeTools.prime_set(o) for o in orders])

    def __len__(self) -> int:
        return len(self.factor_orders)


def join(h: PermGroup, k: PermGroup) -> PermGroup:
    """⟨H, K⟩."""
    _same_degree(h, k)
    if not k.generators:
        return h
    if not h.generators:
        return k
    return h.closure_with(k.generators)


def _close_under_conjugation(
    group: PermGroup, pending: Iterable[Permutation], conjugators: Sequence[Permutation]
) -> PermGroup:
    """Smallest group containing ``group`` and stable under ``conjugators``.

    Every generator of ``group`` not listed in ``pending`` must already have all
    its conjugates inside ``group``.
    """
    queue = list(pending)
    while queue:
        x = queue.pop()
        for s in conjugators:
            y = x.conjugate(s)
            if not group.contains(y):
                group = group.closure_with([y])
                queue.append(y)
    return group


def normal_closure(g: PermGroup, t: PermGroup) -> PermGroup:
    """
    ⟨T⟩^G by a conjugation fixpoint.

    Raises:
        PreconditionError: If T is not contained in G
    """
    _same_degree(g, t)
    _require_subgroup(t, g)
    return _close_under_conjugation(t, t.generators, g.generators)


def commutator_subgroup(h: PermGroup, k: PermGroup) -> PermGroup:
    """[H, K]: normal closure in ⟨H, K⟩ of the generator commutators."""
    degree = _same_degree(h, k)
    commutators = [a.commutator(b) for a in h.generators for b in k.generators]
    start = PermGroup(degree, commutators)
    return _close_under_conjugation(start, start.generators, join(h, k).generators)


def intersect_with_normal(
    h: PermGroup, k: PermGroup, g: PermGroup, config: Optional[Config] = None
) -> PermGroup:
    """
    H ∩ K for H, K ≤ G with K ⊴ G.

    The smaller group is enumerated and filtered by membership in the other.

    Raises:
        PreconditionError: If H or K is not in G, or K is not normal in G
        DeskScaleError: If both groups exceed the enumeration cap
    """
    config = resolve_config(config)
    degree = _same_degree(h, k, g)
    _require_subgroup(h, g)
    if not is_normal_in(k, g):
        raise PreconditionError("K is not normal in G")

    if h.is_subgroup(k):
        return h
    if k.is_subgroup(h):
        return k

    small, large = (h, k) if h.order() <= k.order() else (k, h)
    if small.order() > config.enum_cap:
        raise DeskScaleError(
            f"intersection beyond desk scale: both orders exceed {config.enum_cap}"
        )
    result = PermGroup.trivial(degree)
    for x in small.elements(config.enum_cap):
        if large.contains(x) and not result.contains(x):
            result = result.closure_with([x])
    return result


class CosetTable:
    """Right cosets Hx of H in G, found by breadth-first search.

    Cosets are bucketed by the images of H's orbits under a representative
    (an invariant of the coset) and then told apart by membership in H.
    """

    def __init__(self, g: PermGroup, h: PermGroup, cap: int):
        _same_degree(g, h)
        index = g.order() // h.order()
        if index > cap:
            raise DeskScaleError(f"index {index} exceeds the coset cap {cap}")
        self.g = g
        self.h = h
        self.index = index
        self._orbits = self._orbits_of(h)
        self._buckets: dict[tuple, list[int]] = {}
        self.reps: list[Permutation] = []
        self.actions: list[list[int]] = [[] for _ in g.generators]
        self._build()

    @staticmethod
    def _orbits_of(h: PermGroup) -> list[list[int]]:
        seen: set[int] = set()
        orbits: list[list[int]] = []
        for start in range(h.degree):
            if start in seen:
                continue
            orbit = [start]
            seen.add(start)
            for point in orbit:
                for s in h.generators:
                    image = s.images[point]
                    if image not in seen:
                        seen.add(image)
                        orbit.append(image)
            orbits.append(orbit)
        return orbits

    def _key(self, x: Permutation) -> tuple:
        return tuple(frozenset(x.images[p] for p in orbit) for orbit in self._orbits)

    def find(self, x: Permutation) -> Optional[int]:
        """Index of the coset Hx, or None if it has not been seen."""
        for index in self._buckets.get(self._key(x), ()):
            if self.h.contains(x.compose(self.reps[index].inverse())):
                return index
        return None

    def _add(self, x: Permutation) -> int:
        index = len(self.reps)
        self.reps.append(x)
        self._buckets.setdefault(self._key(x), []).append(index)
        return index

    def _build(self) -> None:
        self._add(Permutation.identity(self.g.degree))
        for i in range(self.index):
            if i >= len(self.reps):
                raise InvariantViolation("coset enumeration fell short of the index")
            rep = self.reps[i]
            for column, s in enumerate(self.g.generators):
                y = rep.compose(s)
                j = self.find(y)
                if j is None:
                    j = self._add(y)
                self.actions[column].append(j)
        if len(self.reps) != self.index:
            raise InvariantViolation(
                f"found {len(self.reps)} cosets, expected index {self.index}"
            )


def core(g: PermGroup, h: PermGroup, config: Optional[Config] = None) -> PermGroup:
    """
    H_G, the kernel of G acting on the right cosets of H.

    The action group A on the m cosets is built first; G is then lifted to
    degree m + n (cosets first) with A's base forced to the front, so the
    stabilizer of that prefix is exactly the kernel.

    Raises:
        PreconditionError: If H is not contained in G
        DeskScaleError: If |G:H| exceeds the index cap
    """
    config = resolve_config(config)
    degree = _same_degree(g, h)
    _require_subgroup(h, g)
    if h.order() == g.order():
        return g
    if _normalized_by(h, g.generators):
        return h

    table = CosetTable(g, h, config.index_cap)
    m = table.index
    actions = [Permutation(tuple(a)) for a in table.actions]
    image = PermGroup(m, actions)
    image_base = [level.point for level in image.chain.levels]

    lifted = [
        Permutation(tuple(a.images) + tuple(m + x for x in s.images))
        for a, s in zip(actions, g.generators)
    ]
    big = PermGroup(m + degree, lifted, _seed=(image_base, []))
    levels = big.chain.levels
    depth = len(image_base)
    if depth >= len(levels):
        return PermGroup.trivial(degree)
    kernel = [Permutation(tuple(x - m for x in k.images[m:])) for k in levels[depth].generators]
    logger.debug(f"Core over {m} cosets has {len(kernel)} generators")
    return PermGroup(degree, kernel)


def _is_p_power(n: int, p: int) -> bool:
    return PrimeTools.p_part(n, p) == n


def p_part_of(x: Permutation, p: int) -> Permutation:
    """The p-part x^(o / o_p) of an element (not the CRT component)."""
    order = x.order()
    return x.power(order // PrimeTools.p_part(order, p))


# consecutive random misses before the centralizer step is tried
CENTRALIZER_AFTER = 64


def _ascend(
    sylow_p: PermGroup, elements: Sequence[Permutation], p: int, target: int
) -> PermGroup:
    """Grow a p-subgroup by p-elements normalizing it until it reaches ``target``."""
    p_elements = [x for x in elements if not x.is_identity() and _is_p_power(x.order(), p)]
    while sylow_p.order() < target:
        for x in p_elements:
            if not sylow_p.contains(x) and _normalized_by(sylow_p, [x]):
                sylow_p = sylow_p.closure_with([x])
                break
        else:
            raise InvariantViolation(f"normalizer ascent for p={p} stalled")
    return sylow_p


def symmetric_centralizer(z: Permutation) -> tuple[int, list[Permutation]]:
    """|C_{S_n}(z)| and generators for it, read off the cycle type of z.

    Cycles of equal length L (fixed points count as L = 1) contribute
    L^m · m!: a rotation per cycle plus a swap and a shift of the m cycles.
    """
    n = z.degree
    moved = {x for c in z.cycles() for x in c}
    by_length: dict[int, list[tuple[int, ...]]] = {}
    for c in [*z.cycles(), *((x,) for x in range(1, n + 1) if x not in moved)]:
        by_length.setdefault(len(c), []).append(c)

    size = 1
    gens: list[Permutation] = []
    for length, cycles in by_length.items():
        m = len(cycles)
        size *= length**m * factorial(m)
        if length > 1:
            gens.extend(Permutation.from_cycles([c], n) for c in cycles)
        if m < 2:
            continue
        swap = list(range(n))
        for a, b in zip(cycles[0], cycles[1]):
            swap[a - 1], swap[b - 1] = b - 1, a - 1
        shift = list(range(n))
        for k, c in enumerate(cycles):
            for a, b in zip(c, cycles[(k + 1) % m]):
                shift[a - 1] = b - 1
        gens.extend([Permutation(tuple(swap)), Permutation(tuple(shift))])
    return size, gens


def _centralizer_step(
    g: PermGroup, sylow_p: PermGroup, p: int, config: Config
) -> PermGroup:
    """Grow P inside C_G(z) for central z of order p.

    Some such z is fixed by N_Q(P) for a Sylow Q ⊇ P, so when P is not yet
    Sylow one of these centralizers holds a p-element normalizing P outside
    it. Centralizers above ``config.enum_cap`` are skipped.
    """
    if sylow_p.order() > config.enum_cap:
        return sylow_p
    central = [
        z for z in sylow_p.elements(config.enum_cap)
        if z.order() == p and all(z * s == s * z for s in sylow_p.generators)
    ]
    sized = sorted(
        ((symmetric_centralizer(z), z) for z in central), key=lambda pair: pair[0][0]
    )
    for (size, gens), z in sized:
        if size > config.enum_cap:
            break
        c = sylow_p
        for x in PermGroup(g.degree, gens).elements(config.enum_cap):
            if not c.contains(x) and g.contains(x):
                c = c.closure_with([x])
        target = PrimeTools.p_part(c.order(), p)
        if target == sylow_p.order():
            continue
        logger.debug(f"Centralizer of {z} (order {c.order()}) lifts P past {sylow_p.order()}")
        return _ascend(sylow_p, c.elements(config.enum_cap), p, target)
    return sylow_p


def sylow(g: PermGroup, p: int, config: Optional[Config] = None) -> PermGroup:
    """
    A Sylow p-subgroup of G by normalizer ascent.

    Small groups are enumerated and P grows by p-elements normalizing it.
    Larger groups use random p-parts, accepted when they normalize P or keep
    ⟨P, x⟩ a p-group; after a run of misses P is grown inside the
    centralizers of its central elements of order p.

    Raises:
        DeskScaleError: If random ascent exhausts ``config.sylow_retries``
    """
    config = resolve_config(config)
    order = g.order()
    target = PrimeTools.p_part(order, p)
    if target == 1:
        return PermGroup.trivial(g.degree)
    if target == order:
        return g

    sylow_p = PermGroup.trivial(g.degree)
    if order <= config.enum_cap:
        return _ascend(sylow_p, g.elements(config.enum_cap), p, target)

    rng = random.Random(config.seed)
    failures = 0
    streak = 0
    while sylow_p.order() < target:
        x = p_part_of(g.random_element(rng), p)
        if not x.is_identity() and not sylow_p.contains(x):
            if _normalized_by(sylow_p, [x]):
                sylow_p = sylow_p.closure_with([x])
                streak = 0
                continue
            candidate = sylow_p.closure_with([x])
            if _is_p_power(candidate.order(), p):
                sylow_p = candidate
                streak = 0
                continue
        failures += 1
        streak += 1
        if streak == CENTRALIZER_AFTER and not sylow_p.is_trivial():
            grown = _centralizer_step(g, sylow_p, p, config)
            if grown.order() > sylow_p.order():
                sylow_p = grown
                streak = 0
                continue
        if failures > config.sylow_retries:
            raise DeskScaleError(
                f"Sylow {p}-subgroup search gave up at order {sylow_p.order()} of {target}"
            )
    logger.debug(f"Sylow {p}-subgroup of order {target} after {failures} misses")
    return sylow_p


def o_upper_pi(
    g: PermGroup, pi: Iterable[int], config: Optional[Config] = None
) -> PermGroup:
    """O^π(G): normal closure of Sylow p-subgroups for p ∈ π(G) ∖ π."""
    outside = sorted(PrimeTools.prime_set(g.order()) - frozenset(pi))
    if not outside:
        return PermGroup.trivial(g.degree)
    gens = [x for p in outside for x in sylow(g, p, config).generators]
    start = PermGroup(g.degree, gens)
    return _close_under_conjugation(start, start.generators, g.generators)


def section_order(s: Section) -> int:
    return s.order()


def section_primes(s: Section) -> frozenset[int]:
    return s.primes()


def _prime_order_power(x: Permutation, n: PermGroup) -> Optional[Permutation]:
    """A power of x whose image modulo N has prime order, or None if x ∈ N."""
    e = x.order()
    reduced = True
    while reduced:
        reduced = False
        for q in PrimeTools.prime_set(e):
            if n.contains(x.power(e // q)):
                e //= q
                reduced = True
                break
    if e == 1:
        return None
    q = min(PrimeTools.prime_set(e))
    return x.power(e // q)


def _structural_descent(
    g: PermGroup, n: PermGroup, m: PermGroup
) -> Optional[PermGroup]:
    """A normal L of G with N < L < M read off M's structure, or None.

    Tries M'N, then for abelian M/N the normal closures of the commutators
    [x, s] with x in M and s in G.
    """
    derived = join(commutator_subgroup(m, m), n)
    if n.order() < derived.order() < m.order():
        return derived
    if derived.order() > n.order():
        return None
    for x in m.generators:
        for s in g.generators:
            c = x.commutator(s)
            if n.contains(c):
                continue
            closure = _close_under_conjugation(n.closure_with([c]), [c], g.generators)
            if closure.order() < m.order():
                return closure
    return None


def _minimal_normal_over(
    g: PermGroup, n: PermGroup, rng: random.Random, config: Config
) -> PermGroup:
    """A minimal normal subgroup of G/N, as its preimage M with N < M ⊴ G.

    M starts at G and descends through ⟨x⟩^G N for x of prime order modulo N.
    While |M/N| is within the scan cap every coset of N in M is tried, which
    makes the result exact. Above it M first descends through M'N and the
    commutators with G, then random elements are sampled; M is accepted after
    ``recheck_count`` consecutive non-improving samples.

    Raises:
        SeriesNotFoundError: If ``sample_count`` runs out before M is accepted
    """
    m = g
    sampled = 0
    while True:
        quotient = m.order() // n.order()
        if quotient <= config.quotient_scan_cap:
            candidates = CosetTable(m, n, config.quotient_scan_cap).reps
            budget = len(candidates)
        else:
            lower = _structural_descent(g, n, m)
            if lower is not None:
                m = lower
                continue
            candidates = []
            budget = config.recheck_count

        improved = False
        misses = 0
        while misses < budget:
            if candidates:
                x = candidates[misses]
            else:
                if sampled >= config.sample_count:
                    raise SeriesNotFoundError(
                        f"sample budget of {config.sample_count} ran out before a minimal "
                        f"normal subgroup over order {n.order()} was confirmed"
                    )
                sampled += 1
                x = m.random_element(rng)
            misses += 1
            y = _prime_order_power(x, n)
            if y is None:
                continue
            closure = _close_under_conjugation(n.closure_with([y]), [y], g.generators)
            if closure.order() < m.order():
                m = closure
                improved = True
                break
        if not improved:
            return m


def chief_series(s: Section, config: Optional[Config] = None) -> ChiefSeries:
    """
    Ascending chief series of G through K.

    Raises:
        SeriesNotFoundError: If sampling runs out before a term is confirmed
    """
    config = resolve_config(config)
    rng = random.Random(config.seed)
    groups = [s.small]
    current = s.small
    target = s.big.order()
    while current.order() < target:
        current = _minimal_normal_over(s.big, current, rng, config)
        groups.append(current)
        logger.debug(f"Chief series term of order {current.order()}")
    series = ChiefSeries.from_groups(groups)
    check_chain_length(len(series), s.degree, "chief series")
    return series
