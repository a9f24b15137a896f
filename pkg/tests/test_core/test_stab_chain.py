"""Tests for stabilizer chains and PermGroup."""

import random

import pytest

from sigmaperm.core.corpus import alternating, cyclic, default_corpus, dihedral, symmetric
from sigmaperm.core.stab_chain import (
    PermGroup,
    StabilizerChain,
    check_chain_length,
    enumerate_elements,
    equal_groups,
    group_order,
    max_chain_length,
)
from sigmaperm.errors import DegreeMismatchError, DeskScaleError, InvariantViolation
from sigmaperm.models.permutation import Permutation


@pytest.mark.parametrize(
    "group,order",
    [
        (PermGroup.trivial(5), 1),
        (PermGroup.from_cycles(2, ["(1 2)"]), 2),
        (PermGroup.from_cycles(3, ["(1 2)", "(1 2 3)"]), 6),
        (symmetric(5), 120),
        (alternating(5), 60),
        (symmetric(7), 5040),
        (dihedral(9), 18),
        (cyclic(12), 12),
    ],
)
def test_group_order(group, order):
    assert group_order(group) == order


def test_large_symmetric_order():
    assert symmetric(12).order() == 479001600


def test_contains():
    a4 = alternating(4)
    assert a4.contains(Permutation.parse("(1 2)(3 4)", 4))
    assert Permutation.parse("(1 2 3)", 4) in a4
    assert not a4.contains(Permutation.parse("(1 2)", 4))
    assert a4.contains(Permutation.identity(4))


def test_contains_degree_mismatch():
    with pytest.raises(DegreeMismatchError):
        symmetric(3).contains(Permutation.parse("(1 2)", 4))


def test_generators_deduplicated_and_identity_dropped():
    g = PermGroup.from_cycles(3, ["(1 2)", "()", "(1 2)"])
    assert len(g.generators) == 1
    assert PermGroup.from_cycles(3, ["()"]).is_trivial()


def test_is_subgroup_and_equals():
    v4 = PermGroup.from_cycles(4, ["(1 2)", "(3 4)"])
    same = PermGroup.from_cycles(4, ["(1 2)(3 4)", "(1 2)"])
    assert equal_groups(v4, same)
    assert v4.is_subgroup(symmetric(4))
    assert not symmetric(3).equals(PermGroup.from_cycles(3, ["(1 2 3)"]))
    assert PermGroup.from_cycles(3, ["(1 2 3)"]).equals(PermGroup.from_cycles(3, ["(1 3 2)"]))


def test_chain_verifies():
    chain = symmetric(6).chain
    assert isinstance(chain, StabilizerChain)
    assert chain.order == 720
    assert chain.verify()
    assert len(chain.base) <= 5


def test_initial_base_is_respected():
    chain = StabilizerChain.build(4, symmetric(4).generators, [3, 2])
    assert chain.base[:2] == [4, 3]
    assert chain.order == 24


def test_sift_residue():
    s3 = symmetric(3)
    residue, _ = s3.chain.sift(Permutation.parse("(1 3)", 3))
    assert residue.is_identity()


def test_closure_with():
    c3 = PermGroup.from_cycles(4, ["(1 2 3)"])
    closed = c3.closure_with([Permutation.parse("(2 3 4)", 4)])
    assert closed.order() == 12
    assert c3.closure_with([Permutation.parse("(1 3 2)", 4)]) is c3


def test_elements():
    elements = enumerate_elements(symmetric(4), cap=100)
    assert len(elements) == 24
    assert len(set(elements)) == 24


def test_elements_cap():
    with pytest.raises(DeskScaleError):
        symmetric(5).elements(cap=100)


def test_random_element_is_member():
    a5 = alternating(5)
    rng = random.Random(0)
    for _ in range(20):
        assert a5.contains(a5.random_element(rng))


def test_many_generators_reduced():
    """More than n² generators are replaced by transversal elements."""
    gens = symmetric(4).elements(cap=100)
    group = PermGroup(4, gens)
    assert group.order() == 24
    assert len(group.generators) <= 6
    assert group.equals(symmetric(4))


def test_max_chain_length():
    assert max_chain_length(1) == 0
    assert max_chain_length(4) == 5
    check_chain_length(5, 4)
    with pytest.raises(InvariantViolation):
        check_chain_length(6, 4)


CORPUS = default_corpus()


@pytest.mark.parametrize("entry", CORPUS, ids=[e.name for e in CORPUS])
def test_chain_matches_brute_force_closure(entry, naive_closure):
    """Order and membership agree with the enumerated closure of the generators."""
    g = entry.group
    elements = naive_closure(g.generators, g.degree)

    assert group_order(g) == len(elements)
    assert all(g.contains(x) for x in elements)

    rng = random.Random(entry.name)
    points = list(range(g.degree))
    for _ in range(100):
        x = Permutation(tuple(rng.sample(points, len(points))))
        assert g.contains(x) == (x in elements)
