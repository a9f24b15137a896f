"""Shared test fixtures for sigmaperm."""

import tempfile
from pathlib import Path
from typing import Any, Callable, Iterable

import pytest

from sigmaperm.config import Config
from sigmaperm.core.corpus import (
    alternating,
    c2_x_c3,
    cyclic,
    dihedral,
    klein_four,
    symmetric,
)
from sigmaperm.core.stab_chain import PermGroup
from sigmaperm.file_ops.group_file import write_group_file
from sigmaperm.models.permutation import Permutation


@pytest.fixture
def temp_dir():
    """Create a temporary directory for test files."""
    with tempfile.TemporaryDirectory() as tmpdir:
        yield Path(tmpdir)


@pytest.fixture
def sample_config_dict() -> dict[str, Any]:
    """Sample configuration dictionary in the config file layout."""
    return {
        "limits": {
            "index_cap": 5000,
            "enum_cap": 2000,
            "quotient_scan_cap": 1000,
        },
        "sampling": {
            "sample_count": 500,
            "recheck_count": 20,
            "sylow_retries": 100,
            "seed": 7,
        },
        "oracle": {
            "lattice_cap": 100,
            "oracle_cap": 1000,
        },
    }


@pytest.fixture
def config() -> Config:
    return Config()


@pytest.fixture
def s3() -> PermGroup:
    return symmetric(3)


@pytest.fixture
def s4() -> PermGroup:
    return symmetric(4)


@pytest.fixture
def a4() -> PermGroup:
    return alternating(4)


@pytest.fixture
def a5() -> PermGroup:
    return alternating(5)


@pytest.fixture
def c6() -> PermGroup:
    """C_6 as ⟨(1 2), (3 4 5)⟩."""
    return c2_x_c3()


@pytest.fixture
def v4() -> PermGroup:
    return klein_four()


@pytest.fixture
def d8() -> PermGroup:
    """D_8 inside S_4, the stabilizer of the square 1-2-3-4."""
    return dihedral(4)


@pytest.fixture
def c4() -> PermGroup:
    return cyclic(4)


@pytest.fixture
def group_file(temp_dir: Path) -> Callable[..., Path]:
    """Write a group into temp_dir and return its path."""

    def write(name: str, group: PermGroup) -> Path:
        return write_group_file(temp_dir / f"{name}.grp", group, name)

    return write


@pytest.fixture
def naive_closure() -> Callable[..., set[Permutation]]:
    """Brute-force ⟨generators⟩ by breadth-first products, for small groups."""

    def close(generators: Iterable[Permutation], degree: int) -> set[Permutation]:
        gens = list(generators)
        identity = Permutation.identity(degree)
        seen = {identity}
        frontier = [identity]
        while frontier:
            fresh = []
            for x in frontier:
                for s in gens:
                    y = x * s
                    if y not in seen:
                        seen.add(y)
                        fresh.append(y)
            frontier = fresh
        return seen

    return close
