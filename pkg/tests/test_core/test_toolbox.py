"""Tests for the group toolbox: closures, cores, Sylow subgroups, chief series."""

from itertools import chain, combinations

import pytest

from sigmaperm.config import Config
from sigmaperm.core.corpus import (
    alternating,
    c2_x_c3,
    default_corpus,
    dihedral,
    klein_four,
    symmetric,
)
from sigmaperm.core.stab_chain import PermGroup
from sigmaperm.core.toolbox import (
    CosetTable,
    Section,
    chief_series,
    commutator_subgroup,
    core,
    intersect_with_normal,
    is_normal_in,
    join,
    normal_closure,
    o_upper_pi,
    p_part_of,
    section_order,
    section_primes,
    sylow,
    symmetric_centralizer,
)
from sigmaperm.errors import (
    DegreeMismatchError,
    DeskScaleError,
    PreconditionError,
    SeriesNotFoundError,
)
from sigmaperm.models.permutation import Permutation
from sigmaperm.utils.primes import PrimeTools


def test_section(s3):
    a3 = PermGroup.from_cycles(3, ["(1 2 3)"])
    section = Section(s3, a3)
    assert section_order(section) == 2
    assert section_primes(section) == {2}
    assert not section.is_trivial()
    assert Section(s3, s3).is_trivial()


def test_section_requires_normal(s3):
    with pytest.raises(PreconditionError):
        Section(s3, PermGroup.from_cycles(3, ["(1 2)"]))


def test_section_degree_mismatch(s3, s4):
    with pytest.raises(DegreeMismatchError):
        Section(s4, s3)


def test_is_normal_in(s4, v4, d8):
    assert is_normal_in(v4, s4)
    assert not is_normal_in(d8, s4)
    assert is_normal_in(alternating(4), s4)


def test_join(s3):
    a = PermGroup.from_cycles(3, ["(1 2)"])
    b = PermGroup.from_cycles(3, ["(2 3)"])
    assert join(a, b).order() == 6
    assert join(a, PermGroup.trivial(3)) is a


def test_normal_closure(s3, s4):
    assert normal_closure(s3, PermGroup.from_cycles(3, ["(1 2)"])).order() == 6
    closure = normal_closure(s4, PermGroup.from_cycles(4, ["(1 2)(3 4)"]))
    assert closure.equals(klein_four())


def test_normal_closure_requires_subgroup(s4):
    a4 = alternating(4)
    with pytest.raises(PreconditionError):
        normal_closure(a4, PermGroup.from_cycles(4, ["(1 2)"]))


def test_commutator_subgroup(s4):
    assert commutator_subgroup(s4, s4).equals(alternating(4))
    assert commutator_subgroup(alternating(4), alternating(4)).equals(klein_four())
    assert commutator_subgroup(c2_x_c3(), c2_x_c3()).is_trivial()


def test_intersect_with_normal(s4, d8):
    meet = intersect_with_normal(d8, alternating(4), s4)
    assert meet.equals(klein_four())


def test_intersect_with_normal_cap():
    s5 = symmetric(5)
    s4_in_s5 = PermGroup.from_cycles(5, ["(1 2)", "(1 2 3 4)"])
    with pytest.raises(DeskScaleError):
        intersect_with_normal(s4_in_s5, alternating(5), s5, Config(enum_cap=10))


def test_coset_table(s4, d8):
    table = CosetTable(s4, d8, cap=10)
    assert table.index == 3
    assert len(table.reps) == 3
    for column in table.actions:
        assert sorted(column) == [0, 1, 2]


def test_coset_table_cap(s4):
    with pytest.raises(DeskScaleError):
        CosetTable(s4, PermGroup.trivial(4), cap=10)


def test_core_of_d8_in_s4(s4, d8):
    assert core(s4, d8).equals(klein_four())


def test_core_of_transposition(s3):
    assert core(s3, PermGroup.from_cycles(3, ["(1 2)"])).is_trivial()


def test_core_of_normal_subgroup(s4):
    a4 = alternating(4)
    assert core(s4, a4) is a4
    assert core(s4, s4) is s4


def test_core_in_s5():
    s5 = symmetric(5)
    s4_in_s5 = PermGroup.from_cycles(5, ["(1 2)", "(1 2 3 4)"])
    assert core(s5, s4_in_s5).is_trivial()


def test_core_index_cap(s4, d8):
    with pytest.raises(DeskScaleError):
        core(s4, PermGroup.from_cycles(4, ["(1 2)"]), Config(index_cap=5))


def test_p_part_of():
    x = Permutation.parse("(1 2)(3 4 5)", 5)
    assert str(p_part_of(x, 2)) == "(1 2)"
    assert str(p_part_of(x, 3)) == "(3 5 4)"
    assert p_part_of(x, 5).is_identity()


@pytest.mark.parametrize(
    "group,p,order",
    [
        (symmetric(4), 2, 8),
        (symmetric(4), 3, 3),
        (alternating(5), 5, 5),
        (alternating(5), 2, 4),
        (symmetric(3), 5, 1),
        (dihedral(4), 2, 8),
    ],
)
def test_sylow(group, p, order):
    subgroup = sylow(group, p)
    assert subgroup.order() == order
    assert subgroup.is_subgroup(group)


def test_sylow_random_ascent():
    """Above the enumeration cap the ascent samples random p-parts."""
    s6 = symmetric(6)
    subgroup = sylow(s6, 2, Config(enum_cap=10))
    assert subgroup.order() == 16
    assert subgroup.is_subgroup(s6)


def test_sylow_in_s12_beyond_enumeration():
    """A random ascent that stalls is lifted through centralizers of central involutions."""
    s12 = symmetric(12)
    subgroup = sylow(s12, 2)
    assert subgroup.order() == 1024
    assert subgroup.is_subgroup(s12)


@pytest.mark.parametrize(
    "cycles,degree,size",
    [
        ("(1 2)(3 4)", 5, 8),
        ("(1 2 3)", 5, 6),
        ("(1 2)(3 4)(5 6)", 6, 48),
        ("(1 2 3 4 5)", 5, 5),
    ],
)
def test_symmetric_centralizer(cycles, degree, size, naive_closure):
    z = Permutation.parse(cycles, degree)
    order, gens = symmetric_centralizer(z)
    assert order == size
    assert all(z * s == s * z for s in gens)
    assert len(naive_closure(gens, z.degree)) == size


def test_o_upper_pi(s4):
    assert o_upper_pi(s4, {2}).equals(alternating(4))
    assert o_upper_pi(s4, {3}).order() == 24
    assert o_upper_pi(s4, {2, 3}).is_trivial()
    assert o_upper_pi(alternating(4), {3}).equals(klein_four())


def test_chief_series_s4(s4):
    series = chief_series(Section(s4, PermGroup.trivial(4)))
    assert series.factor_orders == [4, 3, 2]
    assert series.factor_prime_sets == [{2}, {3}, {2}]
    assert len(series) == 3
    assert series.groups[1].equals(klein_four())


def test_chief_series_through_k(s4, v4):
    series = chief_series(Section(s4, v4))
    assert series.factor_orders == [3, 2]


def test_chief_series_simple(a5):
    series = chief_series(Section(a5, PermGroup.trivial(5)))
    assert series.factor_orders == [60]


def test_chief_series_abelian(c6):
    series = chief_series(Section(c6, PermGroup.trivial(5)))
    assert sorted(series.factor_orders) == [2, 3]


def test_chief_series_sampling(s4):
    """A tiny scan cap forces the sampled descent."""
    config = Config(quotient_scan_cap=1)
    series = chief_series(Section(s4, PermGroup.trivial(4)), config)
    assert series.factor_orders == [4, 3, 2]


def test_chief_series_trivial_section(s3):
    assert len(chief_series(Section(s3, s3))) == 0


CORPUS = default_corpus()


def _subsets(primes):
    items = sorted(primes)
    every = chain.from_iterable(combinations(items, r) for r in range(len(items) + 1))
    return [frozenset(c) for c in every]


def _small_subgroups(g):
    """Sylow subgroups for every prime of |G| plus the cyclic subgroup of the first generator."""
    subgroups = [sylow(g, p) for p in sorted(PrimeTools.prime_set(g.order()))]
    subgroups.append(PermGroup(g.degree, g.generators[:1]))
    return subgroups


@pytest.mark.parametrize("entry", CORPUS, ids=[e.name for e in CORPUS])
def test_sylow_for_every_prime_up_to_degree(entry):
    g = entry.group
    for p in range(2, g.degree + 1):
        if not PrimeTools.is_prime(p):
            continue
        subgroup = sylow(g, p)
        assert subgroup.order() == PrimeTools.p_part(g.order(), p)
        assert subgroup.is_subgroup(g)
        assert PrimeTools.prime_set(subgroup.order()) <= {p}


@pytest.mark.parametrize("entry", CORPUS, ids=[e.name for e in CORPUS])
def test_o_upper_pi_meets_as_join(entry):
    """O^(π1 ∩ π2) is generated by O^π1 and O^π2, and G/O^π is a π-group."""
    g = entry.group
    subsets = _subsets(PrimeTools.prime_set(g.order()))
    residuals = {pi: o_upper_pi(g, pi) for pi in subsets}
    for pi, residual in residuals.items():
        assert is_normal_in(residual, g)
        assert PrimeTools.is_pi_number(g.order() // residual.order(), pi)
    for first in subsets:
        for second in subsets:
            combined = join(residuals[first], residuals[second])
            assert combined.equals(residuals[first & second])


@pytest.mark.parametrize("entry", CORPUS, ids=[e.name for e in CORPUS])
def test_core_is_intersection_of_conjugates(entry, naive_closure):
    g = entry.group
    elements = naive_closure(g.generators, g.degree)
    for h in _small_subgroups(g):
        members = naive_closure(h.generators, g.degree)
        expected = set(members)
        for x in elements:
            expected &= {y.conjugate(x) for y in members}
        result = core(g, h)
        assert result.order() == len(expected)
        assert all(result.contains(y) for y in expected)


@pytest.mark.parametrize("entry", CORPUS, ids=[e.name for e in CORPUS])
def test_normal_closure_matches_conjugate_span(entry, naive_closure):
    g = entry.group
    elements = naive_closure(g.generators, g.degree)
    for t in _small_subgroups(g):
        conjugates = {s.conjugate(x) for s in t.generators for x in elements}
        expected = naive_closure(conjugates, g.degree)
        result = normal_closure(g, t)
        assert result.order() == len(expected)
        assert all(result.contains(y) for y in expected)


def test_chief_series_sampling_budget_exhausted(s4):
    """Sampling that runs out before a term is confirmed raises instead of guessing."""
    config = Config(quotient_scan_cap=1, sample_count=2)
    with pytest.raises(SeriesNotFoundError):
        chief_series(Section(s4, PermGroup.trivial(4)), config)


@pytest.mark.parametrize("entry", CORPUS, ids=[e.name for e in CORPUS])
def test_sampled_chief_factors_match_scanned(entry):
    """Chief factors found by sampling have the orders and primes of the exact scan."""
    for k in entry.normals:
        section = Section(entry.group, k)
        exact = chief_series(section)
        sampled = chief_series(section, Config(quotient_scan_cap=1))
        assert sorted(sampled.factor_orders) == sorted(exact.factor_orders)
        assert all(is_normal_in(term, entry.group) for term in sampled.groups)
