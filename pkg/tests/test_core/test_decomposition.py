"""Tests for σ-decomposition of elements and generators."""

from functools import reduce

import pytest
from hypothesis import given
from hypothesis import strategies as st

from sigmaperm.core.corpus import c2_x_c3, symmetric
from sigmaperm.core.decomposition import decompose_element, decompose_generators
from sigmaperm.core.stab_chain import PermGroup
from sigmaperm.errors import PartitionError, PreconditionError
from sigmaperm.models.partition import Partition, all_partitions
from sigmaperm.models.permutation import Permutation
from sigmaperm.utils.primes import PrimeTools


def test_decompose_element_singletons():
    s = Permutation.parse("(1 2)(3 4 5)", 5)
    parts = decompose_element(s, Partition.singletons({2, 3}))
    assert str(parts[(2,)]) == "(1 2)"
    assert str(parts[(3,)]) == "(3 4 5)"


def test_decompose_element_single_block():
    s = Permutation.parse("(1 2)(3 4 5)", 5)
    parts = decompose_element(s, Partition.single_block({2, 3}))
    assert parts[(2, 3)] == s


def test_decompose_element_absent_block_is_identity():
    s = Permutation.parse("(1 2 3)", 3)
    parts = decompose_element(s, Partition.singletons({2, 3, 5}))
    assert parts[(2,)].is_identity()
    assert parts[(5,)].is_identity()


def test_decompose_element_uncovered():
    with pytest.raises(PreconditionError):
        decompose_element(Permutation.parse("(1 2 3)", 3), Partition.singletons({2}))


@st.composite
def element_and_partition(draw):
    n = draw(st.integers(min_value=1, max_value=10))
    s = Permutation(tuple(draw(st.permutations(range(n)))))
    primes = sorted(PrimeTools.prime_set(s.order()) | {2})
    sigma = draw(st.sampled_from(all_partitions(primes)))
    return s, sigma


@given(element_and_partition())
def test_components_multiply_back(case):
    s, sigma = case
    parts = decompose_element(s, sigma)
    product = reduce(lambda a, b: a * b, parts.values(), Permutation.identity(s.degree))
    assert product == s


@given(element_and_partition())
def test_components_are_block_elements_and_commute(case):
    s, sigma = case
    parts = decompose_element(s, sigma)
    for block, x in parts.items():
        assert PrimeTools.is_pi_number(x.order(), block)
        for y in parts.values():
            assert x * y == y * x


def test_decompose_generators(c6):
    parts = decompose_generators(c6, Partition.singletons({2, 3}))
    assert [str(x) for x in parts[(2,)]] == ["(1 2)"]
    assert [str(x) for x in parts[(3,)]] == ["(3 4 5)"]
    assert parts.total == 2


def test_decompose_generators_regenerates_group():
    g = PermGroup.from_cycles(5, ["(1 2)(3 4 5)", "(3 4)"])
    parts = decompose_generators(g, Partition.singletons({2, 3}))
    assert PermGroup(5, parts.all_generators()).equals(g)


def test_decompose_generators_extra_bucket():
    g = PermGroup.from_cycles(5, ["(1 2)(3 4 5)"])
    parts = decompose_generators(g, Partition.singletons({2}), extra={3})
    assert [str(x) for x in parts.extra] == ["(3 4 5)"]
    assert parts.extra_primes == {3}


def test_decompose_generators_errors():
    s3 = symmetric(3)
    with pytest.raises(PartitionError):
        decompose_generators(s3, Partition.singletons({2, 3}), extra={3})
    with pytest.raises(PreconditionError):
        decompose_generators(s3, Partition.singletons({2}))


def test_decompose_generators_drops_identities():
    parts = decompose_generators(c2_x_c3(), Partition.singletons({2, 3, 5}))
    assert parts[(5,)] == []
