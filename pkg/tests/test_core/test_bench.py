"""Tests for the scaling smoke test."""

import pytest

from sigmaperm.core.bench import BenchResult, run_bench, time_nilpotency
from sigmaperm.core.corpus import dihedral


def test_time_nilpotency():
    seconds, verdict = time_nilpotency(dihedral(8))
    assert seconds >= 0
    assert verdict is True
    assert time_nilpotency(dihedral(9))[1] is False


def test_slope_needs_two_sizes():
    assert BenchResult("dihedral", [10], [0.1], [True]).slope is None


def test_slope_fit():
    result = BenchResult("dihedral", [10, 100, 1000], [1.0, 100.0, 10000.0], [True] * 3)
    assert result.slope == pytest.approx(2.0)


def test_unknown_family():
    with pytest.raises(ValueError):
        run_bench("quaternion", [8])


def test_run_bench_small():
    result = run_bench("symmetric", [4, 5, 6])
    assert result.sizes == [4, 5, 6]
    assert len(result.seconds) == 3
    assert result.verdicts == [False, False, False]


@pytest.mark.slow
def test_dihedral_scaling_is_subquartic():
    result = run_bench("dihedral", [100, 200, 400])
    assert result.slope is not None
    assert result.slope < 4


@pytest.mark.slow
def test_symmetric_scaling_slope_at_most_five():
    """Schreier generators already sifted are not sifted again on later passes."""
    result = run_bench("symmetric", [10, 20, 40])
    assert result.slope is not None
    assert result.slope <= 5
