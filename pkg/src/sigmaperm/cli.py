"""Command-line interface for sigmaperm."""

import logging
import sys
import time
from pathlib import Path
from typing import Callable, Optional

import click

from .config import (
    Config,
    config_exists,
    config_items,
    get_config_path,
    load_config,
    save_config,
)
from .core.bench import FAMILIES, run_bench
from .core.checks import (
    is_sigma_nilpotent,
    is_sigma_p_permutable,
    is_sigma_permutable_soluble,
    is_sigma_soluble,
    is_sigma_subnormal,
)
from .core.corpus import corpus_by_name, default_corpus
from .core.least import (
    least_sigma_nilpotent,
    least_sigma_p_permutable,
    least_sigma_soluble,
    least_sigma_subnormal_experimental,
)
from .core.stab_chain import PermGroup
from .core.toolbox import Section
from .core.verify_engine import MAX_WORKERS, VerifyEngine
from .errors import DeskScaleError, InputError, NotSigmaSolubleError
from .file_ops.group_file import parse_group_file, write_group_file
from .models.partition import Partition
from .models.reports import CheckReport, GroupSummary, Report
from .templates.renderer import emit_report
from .utils.primes import PrimeTools


logger = logging.getLogger(__name__)

EXIT_FALSE = 1
EXIT_INPUT = 2
EXIT_DESK_SCALE = 3


def setup_logging(verbose: bool = False) -> None:
    """Configure console-only logging."""
    level = logging.DEBUG if verbose else logging.WARNING

    formatter = logging.Formatter("%(levelname)s: %(message)s")

    console_handler = logging.StreamHandler()
    console_handler.setLevel(level)
    console_handler.setFormatter(formatter)

    root_logger = logging.getLogger()
    root_logger.setLevel(level)
    root_logger.handlers = []
    root_logger.addHandler(console_handler)


def prompt_with_default(prompt: str, default: Optional[str] = None) -> str:
    """Prompt for input with an optional default value.

    If the user presses Enter without typing anything, the default is used.
    """
    full_prompt = f"{prompt} [default: {default}]: " if default else f"{prompt}: "
    value = input(full_prompt).strip()
    if not value and default:
        return default
    return value


def load_settings(max_index: Optional[int] = None, max_enum: Optional[int] = None) -> Config:
    """Stored configuration with the per-invocation cap overrides applied.

    Raises:
        InputError: If the config file is invalid
    """
    try:
        config = load_config()
    except (ValueError, OSError) as e:
        raise InputError(f"Failed to load configuration: {e}") from e
    return config.with_overrides(index_cap=max_index, enum_cap=max_enum)


def summarize(group: PermGroup) -> GroupSummary:
    order = group.order()
    return GroupSummary(group.degree, order, tuple(sorted(PrimeTools.prime_set(order))))


def run_command(
    command: str,
    body: Callable[[], Report],
    as_json: bool = False,
    assert_verdict: bool = False,
) -> Report:
    """Run one check/least command: time it, print its report, map errors to
    exit codes.

    Exit codes: 0 on a completed computation, 1 on a false verdict with
    ``--assert``, 2 on input errors, 3 when a desk-scale cap is exceeded.
    Errors go to stderr and leave stdout empty.
    """
    start = time.perf_counter()
    try:
        report = body()
    except (InputError, NotSigmaSolubleError) as e:
        click.echo(f"Error: {e}", err=True)
        sys.exit(EXIT_INPUT)
    except DeskScaleError as e:
        click.echo(f"Error: {e}", err=True)
        click.echo("Raise the caps with --max-index/--max-enum or 'sigmaperm config'.", err=True)
        sys.exit(EXIT_DESK_SCALE)

    report.millis = int((time.perf_counter() - start) * 1000)
    logger.debug(f"{command} finished in {report.millis} ms")
    click.echo(emit_report(report, as_json), nl=False)

    if assert_verdict and report.verdict is False:
        sys.exit(EXIT_FALSE)
    return report


class Inputs:
    """Groups named on the command line, loaded and validated."""

    def __init__(
        self,
        group_path: Path,
        normal_path: Optional[Path] = None,
        subgroup_path: Optional[Path] = None,
    ):
        self.g = parse_group_file(group_path)
        self.has_normal = normal_path is not None
        self.k = (
            parse_group_file(normal_path)
            if normal_path is not None
            else PermGroup.trivial(self.g.degree)
        )
        self.section = Section(self.g, self.k)
        self.h = parse_group_file(subgroup_path) if subgroup_path is not None else None

    def quotient_primes(self) -> frozenset[int]:
        return self.section.primes()

    def partition(self, text: str) -> Partition:
        """σ parsed against π(G/K) exactly."""
        return Partition.parse(text, self.quotient_primes())

    def report(self, command: str, **fields) -> Report:
        return Report(
            command=command,
            group=summarize(self.g),
            normal=summarize(self.k) if self.has_normal else None,
            subgroup=summarize(self.h) if self.h is not None else None,
            **fields,
        )


def verdict_report(inputs: Inputs, command: str, sigma: Partition, result: CheckReport) -> Report:
    return inputs.report(
        command, sigma=str(sigma), verdict=result.verdict, witness=result.witness
    )


GroupPath = click.Path(exists=False, dir_okay=False, path_type=Path)


def group_options(f: Callable) -> Callable:
    """--group and --normal, shared by every check/least command."""
    f = click.option(
        "--normal",
        "normal_path",
        type=GroupPath,
        default=None,
        help="Group file of K (default: trivial group)",
    )(f)
    f = click.option(
        "--group", "group_path", type=GroupPath, required=True, help="Group file of G"
    )(f)
    return f


def subgroup_option(f: Callable) -> Callable:
    return click.option(
        "--subgroup", "subgroup_path", type=GroupPath, required=True, help="Group file of H"
    )(f)


def output_options(f: Callable) -> Callable:
    """--json and the cap overrides."""
    f = click.option("--max-enum", type=click.IntRange(min=1), default=None,
                     help="Override the element enumeration cap")(f)
    f = click.option("--max-index", type=click.IntRange(min=1), default=None,
                     help="Override the coset index cap")(f)
    f = click.option("--json", "as_json", is_flag=True, help="Emit a JSON report")(f)
    return f


def check_options(f: Callable) -> Callable:
    f = click.option(
        "--assert", "assert_verdict", is_flag=True, help="Exit 1 when the verdict is false"
    )(f)
    f = click.option("--sigma", required=True, help='Partition of π(G/K), e.g. "2,3|5"')(f)
    return output_options(group_options(f))


@click.group()
@click.option("-v", "--verbose", is_flag=True, help="Enable verbose logging")
@click.pass_context
def main(ctx: click.Context, verbose: bool) -> None:
    """sigmaperm - σ-properties of sections of permutation groups.

    Decide σ-nilpotency, σ-solubility, σ-subnormality and σ-p-permutability
    of H/K in G/K for groups given by generators, and find the least
    partition σ of π(G/K) for which each property holds.
    """
    ctx.ensure_object(dict)
    ctx.obj["verbose"] = verbose
    setup_logging(verbose)


@main.group()
def check() -> None:
    """Decide a σ-property for a given partition σ."""


@check.command("nilpotent")
@check_options
def check_nilpotent(group_path, normal_path, sigma, as_json, max_index, max_enum, assert_verdict):
    """Is G/K σ-nilpotent?"""

    def body() -> Report:
        config = load_settings(max_index, max_enum)
        inputs = Inputs(group_path, normal_path)
        partition = inputs.partition(sigma)
        result = is_sigma_nilpotent(inputs.section, partition, config)
        return verdict_report(inputs, "check nilpotent", partition, result)

    run_command("check nilpotent", body, as_json, assert_verdict)


@check.command("soluble")
@check_options
def check_soluble(group_path, normal_path, sigma, as_json, max_index, max_enum, assert_verdict):
    """Is G/K σ-soluble?"""

    def body() -> Report:
        config = load_settings(max_index, max_enum)
        inputs = Inputs(group_path, normal_path)
        partition = inputs.partition(sigma)
        result = is_sigma_soluble(inputs.section, partition, config)
        return verdict_report(inputs, "check soluble", partition, result)

    run_command("check soluble", body, as_json, assert_verdict)


def _subgroup_check(command: str, checker: Callable[..., CheckReport]) -> Callable:
    def handler(
        group_path, normal_path, subgroup_path, sigma, as_json, max_index, max_enum, assert_verdict
    ):
        def body() -> Report:
            config = load_settings(max_index, max_enum)
            inputs = Inputs(group_path, normal_path, subgroup_path)
            partition = inputs.partition(sigma)
            result = checker(inputs.g, inputs.h, inputs.k, partition, config)
            return verdict_report(inputs, command, partition, result)

        run_command(command, body, as_json, assert_verdict)

    return handler


@check.command("subnormal")
@subgroup_option
@check_options
def check_subnormal(**kwargs):
    """Is H/K σ-subnormal in G/K?"""
    _subgroup_check("check subnormal", is_sigma_subnormal)(**kwargs)


@check.command("ppermutable")
@subgroup_option
@check_options
def check_ppermutable(**kwargs):
    """Is H/K σ-p-permutable in G/K?"""
    _subgroup_check("check ppermutable", is_sigma_p_permutable)(**kwargs)


@check.command("permutable")
@subgroup_option
@check_options
def check_permutable(**kwargs):
    """Is H/K σ-permutable in G/K? Requires G/K to be σ-soluble."""
    _subgroup_check("check permutable", is_sigma_permutable_soluble)(**kwargs)


@main.group()
def least() -> None:
    """Find the least partition σ of π(G/K) for a σ-property."""


@least.command("nilpotent")
@output_options
@group_options
def least_nilpotent(group_path, normal_path, as_json, max_index, max_enum):
    """Least σ with G/K σ-nilpotent."""

    def body() -> Report:
        config = load_settings(max_index, max_enum)
        inputs = Inputs(group_path, normal_path)
        return inputs.report(
            "least nilpotent", least=str(least_sigma_nilpotent(inputs.section, config))
        )

    run_command("least nilpotent", body, as_json)


@least.command("soluble")
@output_options
@group_options
def least_soluble(group_path, normal_path, as_json, max_index, max_enum):
    """Least σ with G/K σ-soluble."""

    def body() -> Report:
        config = load_settings(max_index, max_enum)
        inputs = Inputs(group_path, normal_path)
        return inputs.report(
            "least soluble", least=str(least_sigma_soluble(inputs.section, config))
        )

    run_command("least soluble", body, as_json)


@least.command("ppermutable")
@subgroup_option
@output_options
@group_options
def least_ppermutable(group_path, normal_path, subgroup_path, as_json, max_index, max_enum):
    """Least σ with H/K σ-p-permutable in G/K."""

    def body() -> Report:
        config = load_settings(max_index, max_enum)
        inputs = Inputs(group_path, normal_path, subgroup_path)
        result = least_sigma_p_permutable(inputs.g, inputs.h, inputs.k, config)
        return inputs.report("least ppermutable", least=str(result))

    run_command("least ppermutable", body, as_json)


@least.command("subnormal")
@subgroup_option
@output_options
@group_options
def least_subnormal(group_path, normal_path, subgroup_path, as_json, max_index, max_enum):
    """Least σ with H/K σ-subnormal (experimental, exhaustive, at most 4 primes)."""

    def body() -> Report:
        config = load_settings(max_index, max_enum)
        inputs = Inputs(group_path, normal_path, subgroup_path)
        result = least_sigma_subnormal_experimental(inputs.g, inputs.h, inputs.k, config)
        return inputs.report("least subnormal", least=str(result))

    run_command("least subnormal", body, as_json)


@main.command()
@click.option("--workers", type=click.IntRange(min=1), default=MAX_WORKERS,
              show_default=True, help="Parallel workers")
@click.option("--no-progress", is_flag=True, help="Disable progress bar")
@click.option("--only", "only", multiple=True, help="Verify only this corpus group (repeatable)")
@click.pass_context
def verify(ctx: click.Context, workers: int, no_progress: bool, only: tuple[str, ...]) -> None:
    """Cross-check every algorithm against brute-force oracles on the corpus."""
    try:
        config = load_settings()
    except InputError as e:
        click.echo(f"Error: {e}", err=True)
        sys.exit(EXIT_INPUT)

    by_name = corpus_by_name()
    unknown = [name for name in only if name not in by_name]
    if unknown:
        click.echo(
            f"Error: unknown corpus group(s) {', '.join(unknown)}; "
            f"choose from {', '.join(by_name)}",
            err=True,
        )
        sys.exit(EXIT_INPUT)
    corpus = [by_name[name] for name in only] if only else default_corpus()

    engine = VerifyEngine(corpus=corpus, config=config, workers=workers)
    result = engine.run(show_progress=not no_progress)

    click.echo("\n" + "=" * 50)
    click.echo("Verification Complete")
    click.echo("=" * 50)
    click.echo(f"  Cells checked: {result.cells_checked}")
    click.echo(f"  Comparisons:   {result.comparisons}")
    click.echo(f"  Mismatches:    {len(result.mismatches)}")
    click.echo(f"  Errors:        {len(result.errors)}")

    for title, messages in (("Mismatches", result.mismatches), ("Errors", result.errors)):
        if messages:
            click.echo(f"\n{title} ({len(messages)}):", err=True)
            for message in messages[:5]:
                click.echo(f"  - {message}", err=True)
            if len(messages) > 5:
                click.echo(f"  ... and {len(messages) - 5} more", err=True)

    click.echo("=" * 50)
    if not result.ok:
        sys.exit(EXIT_FALSE)


def _parse_sizes(ctx: click.Context, param: click.Parameter, value: str) -> list[int]:
    try:
        sizes = [int(part) for part in value.split(",") if part.strip()]
    except ValueError:
        raise click.BadParameter("sizes must be comma-separated integers")
    if not sizes or any(size < 3 for size in sizes):
        raise click.BadParameter("sizes must be integers of at least 3")
    return sizes


@main.command()
@click.option("--family", type=click.Choice(sorted(FAMILIES)), default="dihedral",
              show_default=True, help="Group family to time")
@click.option("--sizes", callback=_parse_sizes, default="100,200,400",
              show_default=True, help="Comma-separated degrees")
@click.option("--no-progress", is_flag=True, help="Disable progress bar")
def bench(family: str, sizes: list[int], no_progress: bool) -> None:
    """Time the σ-nilpotency check on a family and fit the log-log slope."""
    try:
        result = run_bench(family, sizes, load_settings(), show_progress=not no_progress)
    except InputError as e:
        click.echo(f"Error: {e}", err=True)
        sys.exit(EXIT_INPUT)
    except DeskScaleError as e:
        click.echo(f"Error: {e}", err=True)
        sys.exit(EXIT_DESK_SCALE)

    click.echo("\n" + "=" * 50)
    click.echo(f"Benchmark: {family}")
    click.echo("=" * 50)
    for size, seconds, verdict in zip(result.sizes, result.seconds, result.verdicts):
        click.echo(f"  n = {size:>6}: {seconds:8.3f}s  nilpotent={verdict}")
    slope = result.slope
    click.echo(f"  Slope: {slope:.2f}" if slope is not None else "  Slope: n/a")
    click.echo("=" * 50)


@main.command()
@click.option("--out", "out_dir", type=click.Path(file_okay=False, path_type=Path),
              required=True, help="Directory for the group files")
def corpus(out_dir: Path) -> None:
    """Write the built-in corpus groups and their normal subgroups as group files."""
    written = 0
    for entry in default_corpus():
        write_group_file(out_dir / f"{entry.name}.grp", entry.group, entry.name)
        written += 1
        for normal in entry.normals:
            if normal.is_trivial():
                continue
            name = f"{entry.name}_K{normal.order()}"
            write_group_file(out_dir / f"{name}.grp", normal, name)
            written += 1
    click.echo(f"Wrote {written} group files to {out_dir}")


@main.command("config")
def config_cmd() -> None:
    """Configure desk-scale caps and sampling interactively.

    Press Enter to keep the current value.
    """
    click.echo("\nsigmaperm - Configuration")
    click.echo("=" * 35)

    try:
        existing = load_config()
        if config_exists():
            click.echo("(Press Enter to keep current value)\n")
    except ValueError:
        click.echo("(Existing config is invalid, starting fresh)\n")
        existing = Config()

    values: dict[str, int] = {}
    for section, key, current in config_items(existing):
        raw = prompt_with_default(f"{section}.{key}", str(current))
        try:
            value = int(raw)
        except ValueError:
            click.echo(f"Error: {key} must be an integer.", err=True)
            sys.exit(EXIT_FALSE)
        if value < 0 or (value == 0 and key != "seed"):
            click.echo(f"Error: {key} must be positive.", err=True)
            sys.exit(EXIT_FALSE)
        values[key] = value

    path = save_config(existing.with_overrides(**values))
    click.echo(f"\nConfiguration saved to {path}")


@main.command()
def status() -> None:
    """Show the configuration file location and the effective caps."""
    click.echo("\n" + "=" * 50)
    click.echo("sigmaperm Status")
    click.echo("=" * 50)

    click.echo("\nConfiguration:")
    config_path = get_config_path()
    if config_exists():
        click.echo(f"  Config file: {config_path}")
    else:
        click.echo(f"  Config file: {config_path} (not created, using defaults)")
    try:
        config = load_config()
    except ValueError as e:
        click.echo(f"  Error: Failed to read config: {e}", err=True)
        click.echo("=" * 50 + "\n")
        return

    current_section = None
    for section, key, value in config_items(config):
        if section != current_section:
            click.echo(f"\n  [{section}]")
            current_section = section
        click.echo(f"    {key}: {value}")

    click.echo("=" * 50 + "\n")


if __name__ == "__main__":
    main()
