"""Tests for prime partitions."""

import itertools

import pytest

from sigmaperm.errors import PartitionError
from sigmaperm.models.partition import Partition, all_partitions, parse_partition


def test_parse_canonical():
    sigma = parse_partition(" 5 | 3,2 ", {2, 3, 5})
    assert str(sigma) == "2,3|5"
    assert sigma.blocks == ((2, 3), (5,))


def test_parse_empty():
    sigma = Partition.parse("", set())
    assert len(sigma) == 0
    assert str(sigma) == ""


@pytest.mark.parametrize(
    "text",
    [
        "2|4",  # not prime
        "2,3",  # 5 missing
        "2|3|5|7",  # 7 outside the ground
        "2,2|3|5",  # repeated
        "2||3,5",  # empty block
        "2;3|5",
        "2|³|5",  # superscript digit
        "2,3|٥",  # non-ASCII digit
    ],
)
def test_parse_errors(text):
    with pytest.raises(PartitionError):
        Partition.parse(text, {2, 3, 5})


def test_from_blocks_rejects_overlap():
    with pytest.raises(PartitionError):
        Partition.from_blocks([[2, 3], [3, 5]])


def test_block_of():
    sigma = Partition.parse("2,5|3", {2, 3, 5})
    assert sigma.block_of(5) == (2, 5)
    with pytest.raises(PartitionError):
        sigma.block_of(7)


def test_meet():
    a = Partition.parse("2,3|5,7", {2, 3, 5, 7})
    b = Partition.parse("2,5|3,7", {2, 3, 5, 7})
    assert str(a & b) == "2|3|5|7"
    assert str(a.meet(Partition.single_block({2, 3, 5, 7}))) == str(a)


def test_meet_ground_mismatch():
    with pytest.raises(PartitionError):
        Partition.singletons({2, 3}).meet(Partition.singletons({2, 5}))


def test_meet_is_greatest_lower_bound():
    """Exhaustive over all partitions of {2, 3, 5, 7}."""
    parts = all_partitions({2, 3, 5, 7})
    for a, b in itertools.product(parts, repeat=2):
        m = a & b
        assert m <= a and m <= b
        for c in parts:
            if c <= a and c <= b:
                assert c <= m


def test_leq():
    fine = Partition.singletons({2, 3, 5})
    coarse = Partition.single_block({2, 3, 5})
    assert fine <= coarse
    assert not coarse <= fine


def test_restrict_and_extend():
    sigma = Partition.parse("2,3|5,7", {2, 3, 5, 7})
    assert str(sigma.restrict({2, 5})) == "2|5"
    assert str(sigma.restrict({2, 3})) == "2,3"
    assert str(sigma.extend({11, 2})) == "2,3|5,7|11"
    with pytest.raises(PartitionError):
        sigma.restrict({13})


def test_split_refinements():
    sigma = Partition.parse("2,3,5|7", {2, 3, 5, 7})
    splits = {str(p) for p in sigma.split_refinements()}
    assert splits == {"2|3,5|7", "2,3|5|7", "2,5|3|7"}
    assert Partition.singletons({2, 3}).split_refinements() == []


@pytest.mark.parametrize("n,bell", [(0, 1), (1, 1), (2, 2), (3, 5), (4, 15)])
def test_all_partitions_count(n, bell):
    primes = [2, 3, 5, 7][:n]
    parts = all_partitions(primes)
    assert len(parts) == bell
    assert len(set(parts)) == bell
