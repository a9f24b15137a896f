"""Named permutation groups used for verification and benchmarks."""

from dataclasses import dataclass, field

from ..models.permutation import Permutation
from .stab_chain import PermGroup


def _cycle(points: list[int], degree: int) -> Permutation:
    return Permutation.from_cycles([points], degree)


def symmetric(n: int) -> PermGroup:
    """S_n = ⟨(1 2), (1 2 ... n)⟩."""
    if n < 2:
        return PermGroup.trivial(max(n, 1))
    return PermGroup(n, [_cycle([1, 2], n), _cycle(list(range(1, n + 1)), n)])


def alternating(n: int) -> PermGroup:
    """A_n = ⟨(1 2 3), (1 ... n)⟩ for odd n, ⟨(1 2 3), (2 ... n)⟩ for even n."""
    if n < 3:
        return PermGroup.trivial(max(n, 1))
    long_cycle = list(range(1, n + 1)) if n % 2 else list(range(2, n + 1))
    return PermGroup(n, [_cycle([1, 2, 3], n), _cycle(long_cycle, n)])


def cyclic(n: int) -> PermGroup:
    """C_n as a single n-cycle."""
    if n < 2:
        return PermGroup.trivial(1)
    return PermGroup(n, [_cycle(list(range(1, n + 1)), n)])


def cyclic_product(*orders: int) -> PermGroup:
    """⟨c_1 c_2 ...⟩ for disjoint cycles of the given lengths (C_lcm)."""
    degree = sum(orders)
    cycles, start = [], 1
    for length in orders:
        cycles.append(list(range(start, start + length)))
        start += length
    return PermGroup(degree, [Permutation.from_cycles(cycles, degree)])


def dihedral(m: int) -> PermGroup:
    """D_2m acting on the m vertices of a polygon (degree m, order 2m)."""
    if m < 3:
        return cyclic(2) if m == 2 else PermGroup.trivial(1)
    rotation = Permutation(tuple((i + 1) % m for i in range(m)))
    reflection = Permutation(tuple((-i) % m for i in range(m)))
    return PermGroup(m, [rotation, reflection])


def klein_four() -> PermGroup:
    """V_4 = ⟨(1 2)(3 4), (1 3)(2 4)⟩."""
    return PermGroup.from_cycles(4, ["(1 2)(3 4)", "(1 3)(2 4)"])


def direct_c2_a4() -> PermGroup:
    """C_2 × A_4 on 6 points."""
    return PermGroup.from_cycles(6, ["(1 2 3)", "(2 3 4)", "(5 6)"])


def c2_x_c3() -> PermGroup:
    """C_2 × C_3 = ⟨(1 2), (3 4 5)⟩."""
    return PermGroup.from_cycles(5, ["(1 2)", "(3 4 5)"])


@dataclass
class CorpusEntry:
    """A named group with the normal subgroups K used as section bottoms."""

    name: str
    group: PermGroup
    normals: list[PermGroup] = field(default_factory=list)

    def __post_init__(self) -> None:
        if not self.normals:
            self.normals = [PermGroup.trivial(self.group.degree)]


def _entry(name: str, group: PermGroup, *normal_cycles: list[str]) -> CorpusEntry:
    trivial = PermGroup.trivial(group.degree)
    normals = [PermGroup.from_cycles(group.degree, gens) for gens in normal_cycles]
    return CorpusEntry(name, group, [trivial, *normals])


def default_corpus() -> list[CorpusEntry]:
    """Groups of the verification matrix, each with trivial and proper normal K."""
    return [
        _entry("S3", symmetric(3), ["(1 2 3)"]),
        _entry("S4", symmetric(4), ["(1 2)(3 4)", "(1 3)(2 4)"], ["(1 2 3)", "(2 3 4)"]),
        _entry("S5", symmetric(5), ["(1 2 3)", "(1 2 3 4 5)"]),
        _entry("A4", alternating(4), ["(1 2)(3 4)", "(1 3)(2 4)"]),
        _entry("A5", alternating(5)),
        _entry("C6", cyclic_product(2, 3), ["(3 4 5)"]),
        _entry("C30", cyclic_product(2, 3, 5), ["(3 4 5)"]),
        _entry("D8", dihedral(4), ["(1 2 3 4)"]),
        _entry("D12", dihedral(6), ["(1 3 5)(2 4 6)"]),
        _entry("V4", klein_four(), ["(1 2)(3 4)"]),
        _entry("C2xA4", direct_c2_a4(), ["(1 2)(3 4)", "(1 3)(2 4)"]),
        _entry("C2xC3", c2_x_c3(), ["(3 4 5)"]),
        _entry("D14", dihedral(7), ["(1 2 3 4 5 6 7)"]),
    ]


def corpus_by_name() -> dict[str, CorpusEntry]:
    return {entry.name: entry for entry in default_corpus()}
