"""Scaling smoke test for the σ-nilpotency check."""

import logging
import time
from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence

import numpy as np
from alive_progress import alive_bar

from ..config import Config
from ..models.partition import Partition
from .checks import is_sigma_nilpotent
from .corpus import dihedral, symmetric
from .stab_chain import PermGroup
from .toolbox import Section


logger = logging.getLogger(__name__)

FAMILIES: dict[str, Callable[[int], PermGroup]] = {
    "dihedral": dihedral,
    "symmetric": symmetric,
}


@dataclass
class BenchResult:
    """Timings per size and the fitted log-log slope."""

    family: str
    sizes: list[int] = field(default_factory=list)
    seconds: list[float] = field(default_factory=list)
    verdicts: list[bool] = field(default_factory=list)

    @property
    def slope(self) -> Optional[float]:
        """Least-squares slope of log(time) against log(size)."""
        if len(self.sizes) < 2:
            return None
        x = np.log(np.asarray(self.sizes, dtype=float))
        y = np.log(np.maximum(np.asarray(self.seconds, dtype=float), 1e-9))
        slope, _ = np.polyfit(x, y, 1)
        return float(slope)


def time_nilpotency(group: PermGroup, config: Optional[Config] = None) -> tuple[float, bool]:
    """Seconds for one singleton-σ nilpotency check, including the chain build."""
    start = time.perf_counter()
    section = Section(group, PermGroup.trivial(group.degree), check=False)
    sigma = Partition.singletons(section.primes())
    verdict = bool(is_sigma_nilpotent(section, sigma, config))
    return time.perf_counter() - start, verdict


def run_bench(
    family: str,
    sizes: Sequence[int],
    config: Optional[Config] = None,
    show_progress: bool = False,
) -> BenchResult:
    """
    Time the check on each member of a group family.

    Raises:
        ValueError: For an unknown family
    """
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}; choose from {sorted(FAMILIES)}")
    build = FAMILIES[family]
    result = BenchResult(family)

    def step(size: int) -> None:
        seconds, verdict = time_nilpotency(build(size), config)
        result.sizes.append(size)
        result.seconds.append(seconds)
        result.verdicts.append(verdict)
        logger.info(f"{family}({size}): {seconds:.3f}s, verdict {verdict}")

    if show_progress:
        with alive_bar(len(sizes), title=f"Benchmarking {family}", enrich_print=False) as bar:
            for size in sizes:
                step(size)
                bar()
    else:
        for size in sizes:
            step(size)
    return result
