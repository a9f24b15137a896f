"""Cross-validation of the σ-property algorithms against the oracles."""

import logging
import threading
from concurrent.futures import ThreadPoolExecutor, as_completed
from dataclasses import dataclass, field
from typing import Callable, Optional

from alive_progress import alive_bar

from ..config import Config, resolve_config
from ..errors import SigmaPermError
from ..models.partition import Partition, all_partitions
from ..models.reports import CheckReport
from .checks import (
    is_sigma_nilpotent,
    is_sigma_p_permutable,
    is_sigma_soluble,
    is_sigma_subnormal,
)
from .corpus import CorpusEntry, default_corpus
from .least import least_sigma_nilpotent, least_sigma_p_permutable, least_sigma_soluble
from .oracle import (
    CayleyTable,
    SubgroupLattice,
    chief_factor_primes,
    lattice_subnormal,
    least_partition_oracle,
    nilpotent_in_table,
    permutable_in_table,
    soluble_at,
)
from .stab_chain import PermGroup
from .toolbox import Section, join


logger = logging.getLogger(__name__)

# Maximum number of parallel workers for cell verification
MAX_WORKERS = 4


@dataclass
class VerifyResult:
    """Results from a verification run (thread-safe)."""

    cells_checked: int = 0
    comparisons: int = 0
    mismatches: list[str] = field(default_factory=list)
    errors: list[str] = field(default_factory=list)
    _lock: threading.Lock = field(default_factory=threading.Lock, repr=False)

    def increment_cells(self) -> None:
        with self._lock:
            self.cells_checked += 1

    def add_comparisons(self, count: int) -> None:
        with self._lock:
            self.comparisons += count

    def add_mismatch(self, message: str) -> None:
        with self._lock:
            self.mismatches.append(message)

    def add_error(self, error: str) -> None:
        with self._lock:
            self.errors.append(error)

    @property
    def ok(self) -> bool:
        return not self.mismatches and not self.errors


@dataclass
class Cell:
    """One (G, K) pair of the verification matrix."""

    name: str
    group: PermGroup
    normal: PermGroup

    @property
    def label(self) -> str:
        return f"{self.name}/K{self.normal.order()}"


class VerifyEngine:
    """Runs every algorithm/oracle comparison over the corpus matrix."""

    def __init__(
        self,
        corpus: Optional[list[CorpusEntry]] = None,
        config: Optional[Config] = None,
        workers: int = MAX_WORKERS,
    ):
        """
        Initialize the engine.

        Args:
            corpus: Entries to verify (defaults to the built-in corpus)
            config: Caps for algorithms and oracles
            workers: Thread pool size
        """
        self.corpus = corpus if corpus is not None else default_corpus()
        self.config = resolve_config(config)
        self.workers = max(1, workers)
        logger.info(f"VerifyEngine initialized with {len(self.corpus)} groups")

    def cells(self) -> list[Cell]:
        return [
            Cell(entry.name, entry.group, k) for entry in self.corpus for k in entry.normals
        ]

    def run(self, show_progress: bool = True) -> VerifyResult:
        """Verify every cell, in parallel."""
        result = VerifyResult()
        cells = self.cells()

        def work(cell: Cell) -> None:
            try:
                self.verify_cell(cell, result)
            except SigmaPermError as e:
                result.add_error(f"{cell.label}: {type(e).__name__}: {e}")
                logger.error(f"{cell.label} failed: {e}")
            finally:
                result.increment_cells()

        with ThreadPoolExecutor(max_workers=self.workers) as executor:
            futures = [executor.submit(work, cell) for cell in cells]
            if show_progress:
                with alive_bar(len(futures), title="Verifying", enrich_print=False) as bar:
                    for future in as_completed(futures):
                        future.result()
                        bar()
            else:
                for future in as_completed(futures):
                    future.result()

        logger.info(
            f"Verified {result.cells_checked} cells, {result.comparisons} comparisons, "
            f"{len(result.mismatches)} mismatches"
        )
        return result

    def _compare(
        self, result: VerifyResult, what: str, algorithm: object, oracle: object
    ) -> None:
        result.add_comparisons(1)
        if algorithm != oracle:
            result.add_mismatch(f"{what}: algorithm {algorithm}, oracle {oracle}")

    def _meet_law(
        self,
        result: VerifyResult,
        what: str,
        partitions: list[Partition],
        check: Callable[[Partition], CheckReport],
    ) -> dict[Partition, bool]:
        verdicts = {sigma: bool(check(sigma)) for sigma in partitions}
        true_ones = [sigma for sigma, ok in verdicts.items() if ok]
        for i, a in enumerate(true_ones):
            for b in true_ones[i + 1 :]:
                meet = a.meet(b)
                result.add_comparisons(1)
                if not verdicts[meet]:
                    result.add_mismatch(f"{what}: true at {a} and {b} but not at {meet}")
        return verdicts

    def _splits_fail(
        self,
        result: VerifyResult,
        what: str,
        least: Partition,
        verdicts: dict[Partition, bool],
    ) -> None:
        """Splitting any block of a least partition must break the property."""
        for finer in least.split_refinements():
            result.add_comparisons(1)
            if verdicts[finer]:
                result.add_mismatch(f"{what}: finer partition {finer} also holds")

    def verify_cell(self, cell: Cell, result: VerifyResult) -> None:
        """Every comparison for one (G, K) pair."""
        config = self.config
        g, k = cell.group, cell.normal
        section = Section(g, k)
        primes = section.primes()
        partitions = all_partitions(primes)
        label = cell.label

        table = CayleyTable.from_section(g, k, cap=config.oracle_cap)
        factor_primes = chief_factor_primes(table)
        nilpotent_oracle = {sigma: nilpotent_in_table(table, sigma) for sigma in partitions}
        soluble_oracle = {sigma: soluble_at(factor_primes, sigma) for sigma in partitions}

        nilpotent = self._meet_law(
            result, f"{label} nilpotent", partitions,
            lambda sigma: is_sigma_nilpotent(section, sigma, config),
        )
        soluble = self._meet_law(
            result, f"{label} soluble", partitions,
            lambda sigma: is_sigma_soluble(section, sigma, config),
        )
        for sigma in partitions:
            self._compare(
                result, f"{label} nilpotent at {sigma}", nilpotent[sigma], nilpotent_oracle[sigma]
            )
            self._compare(
                result, f"{label} soluble at {sigma}", soluble[sigma], soluble_oracle[sigma]
            )

        least_nilpotent = least_sigma_nilpotent(section, config)
        self._compare(
            result, f"{label} least nilpotent", least_nilpotent,
            least_partition_oracle(primes, nilpotent_oracle.__getitem__),
        )
        self._splits_fail(result, f"{label} least nilpotent", least_nilpotent, nilpotent)
        least_soluble = least_sigma_soluble(section, config)
        self._compare(
            result, f"{label} least soluble", least_soluble,
            least_partition_oracle(primes, soluble_oracle.__getitem__),
        )
        self._splits_fail(result, f"{label} least soluble", least_soluble, soluble)

        if g.order() > config.lattice_cap:
            return
        lattice = SubgroupLattice.build(table)
        soluble_everywhere = all(len(p) == 1 for p in factor_primes)
        for subset, gens in zip(lattice.subgroups, lattice.generators):
            h = join(k, PermGroup(g.degree, [table.reps[x] for x in gens]))
            self._verify_subgroup(
                result, cell, h, lattice, subset, partitions, soluble_oracle, soluble_everywhere
            )

    def _verify_subgroup(
        self,
        result: VerifyResult,
        cell: Cell,
        h: PermGroup,
        lattice: SubgroupLattice,
        subset: frozenset[int],
        partitions: list[Partition],
        soluble_oracle: dict[Partition, bool],
        soluble_everywhere: bool,
    ) -> None:
        config = self.config
        g, k = cell.group, cell.normal
        table = lattice.table
        what = f"{cell.label} H{h.order()}"

        subnormal = self._meet_law(
            result, f"{what} subnormal", partitions,
            lambda sigma: is_sigma_subnormal(g, h, k, sigma, config),
        )
        for sigma in partitions:
            self._compare(
                result, f"{what} subnormal at {sigma}",
                subnormal[sigma], lattice_subnormal(lattice, subset, sigma),
            )

        permutable = self._meet_law(
            result, f"{what} p-permutable", partitions,
            lambda sigma: is_sigma_p_permutable(g, h, k, sigma, config),
        )
        permutable_oracle = {
            sigma: permutable_in_table(table, subset, sigma)
            for sigma in partitions
            if soluble_oracle[sigma]
        }
        for sigma, expected in permutable_oracle.items():
            self._compare(
                result, f"{what} permutable at {sigma}", permutable[sigma], expected
            )

        # Hall subgroups exist at every partition only for soluble G/K
        if soluble_everywhere:
            least = least_sigma_p_permutable(g, h, k, config)
            self._splits_fail(result, f"{what} least p-permutable", least, permutable)
            self._compare(
                result, f"{what} least p-permutable",
                least,
                least_partition_oracle(
                    Section(g, k, check=False).primes(), permutable_oracle.__getitem__
                ),
            )
