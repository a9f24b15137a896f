"""Tests for the brute-force oracles."""

import pytest

from sigmaperm.core.corpus import alternating, cyclic, symmetric
from sigmaperm.core.oracle import (
    CayleyTable,
    chief_factor_primes,
    hall_subgroups,
    least_partition_oracle,
    normal_subgroups,
    set_product_permutes,
    sigma_nilpotent_oracle,
    sigma_permutable_oracle,
    sigma_soluble_oracle,
    sigma_subnormal_oracle,
    subgroup_lattice,
)
from sigmaperm.core.stab_chain import PermGroup
from sigmaperm.errors import DeskScaleError, InvariantViolation, NotSigmaSolubleError
from sigmaperm.models.partition import Partition


SINGLETONS = Partition.singletons({2, 3})
ONE_BLOCK = Partition.single_block({2, 3})


def test_cayley_table(s3):
    table = CayleyTable.from_section(s3)
    assert table.order == 6
    assert table.reps[0].is_identity()
    assert sorted(table.element_order(x) for x in range(6)) == [1, 2, 2, 2, 3, 3]
    for x in range(6):
        assert table.mul[x][table.inverse[x]] == 0


def test_cayley_table_of_quotient(s4, v4):
    table = CayleyTable.from_section(s4, v4)
    assert table.order == 6
    assert table.index_of(v4.generators[0]) == 0


def test_cayley_table_cap():
    with pytest.raises(DeskScaleError):
        CayleyTable.from_section(symmetric(5), cap=100)


@pytest.mark.parametrize(
    "group,count",
    [
        (symmetric(3), 6),
        (symmetric(4), 30),
        (alternating(4), 10),
        (cyclic(6), 4),
        (cyclic(4), 3),
        (PermGroup.trivial(2), 1),
    ],
)
def test_subgroup_lattice_counts(group, count):
    assert len(subgroup_lattice(group)) == count


def test_lattice_core(s4, d8, v4):
    lattice = subgroup_lattice(s4)
    i = lattice.index(lattice.table.image_of(d8))
    top = len(lattice) - 1
    assert len(lattice.subgroups[lattice.core_in(i, top)]) == 4
    assert lattice.normality[lattice.index(lattice.table.image_of(v4))][top]


def test_lattice_to_groups(s3):
    orders = sorted(g.order() for g in subgroup_lattice(s3).to_groups(3))
    assert orders == [1, 2, 2, 2, 3, 6]


def test_lattice_cap(s4):
    with pytest.raises(DeskScaleError):
        subgroup_lattice(s4, cap=10)


def test_hall_subgroups(s4, a5):
    assert len(hall_subgroups(s4, {2})) == 3
    assert len(hall_subgroups(s4, {3})) == 4
    assert [h.order() for h in hall_subgroups(a5, {2, 3})] == [12] * 5
    assert hall_subgroups(a5, {3, 5}) == []


def test_set_product_permutes(s3):
    t12 = PermGroup.from_cycles(3, ["(1 2)"])
    t13 = PermGroup.from_cycles(3, ["(1 3)"])
    a3 = PermGroup.from_cycles(3, ["(1 2 3)"])
    assert set_product_permutes(t12, a3)
    assert not set_product_permutes(t12, t13)


def test_nilpotent_oracle(s3, c6, s4, v4):
    assert not sigma_nilpotent_oracle(s3, None, SINGLETONS)
    assert sigma_nilpotent_oracle(s3, None, ONE_BLOCK)
    assert sigma_nilpotent_oracle(c6, None, SINGLETONS)
    assert not sigma_nilpotent_oracle(s4, v4, SINGLETONS)


def test_normal_subgroups_and_chief_factors(s4):
    table = CayleyTable.from_section(s4)
    assert [len(n) for n in normal_subgroups(table)] == [1, 4, 12, 24]
    assert chief_factor_primes(table) == [{2}, {3}, {2}]


def test_soluble_oracle(s4, a5):
    assert sigma_soluble_oracle(s4, None, SINGLETONS)
    assert not sigma_soluble_oracle(a5, None, Partition.singletons({2, 3, 5}))
    assert sigma_soluble_oracle(a5, None, Partition.single_block({2, 3, 5}))


def test_subnormal_oracle(s3, s4):
    t12 = PermGroup.from_cycles(3, ["(1 2)"])
    assert not sigma_subnormal_oracle(s3, t12, SINGLETONS)
    assert sigma_subnormal_oracle(s3, t12, ONE_BLOCK)
    assert sigma_subnormal_oracle(s4, PermGroup.from_cycles(4, ["(1 2)(3 4)"]), SINGLETONS)


def test_permutable_oracle(s3, a5):
    t12 = PermGroup.from_cycles(3, ["(1 2)"])
    assert not sigma_permutable_oracle(s3, t12, SINGLETONS)
    assert sigma_permutable_oracle(s3, t12, ONE_BLOCK)
    with pytest.raises(NotSigmaSolubleError):
        sigma_permutable_oracle(
            a5, PermGroup.from_cycles(5, ["(1 2 3)"]), Partition.singletons({2, 3, 5})
        )


def test_least_partition_oracle():
    assert least_partition_oracle({2, 3}, lambda p: True) == SINGLETONS
    assert least_partition_oracle({2, 3}, lambda p: len(p) == 1) == ONE_BLOCK
    assert len(least_partition_oracle(set(), lambda p: True)) == 0


def test_least_partition_oracle_guards():
    with pytest.raises(InvariantViolation):
        least_partition_oracle({2, 3}, lambda p: len(p) == 2)
    with pytest.raises(DeskScaleError):
        least_partition_oracle({2, 3, 5, 7, 11}, lambda p: True)
