import logging
import sys
from pathlib import Path
from typing import Callable, NamedTuple

import click

from .. import constants as const, errors as err
from ..embedder import ReferenceFamilies, UniversalWords
from ..embedder.Embedder import EmbeddingResult, embed, embed_schema, format_result, instantiate_result
from ..library import WordLib
from ..presentation import Examples
from ..presentation.Presentation import instantiate
from ..presentation.PresentationParser import parse, parse_word
from ..presentation.PresentationSerializer import serialize
from ..types import EmbedMode, Presentation, Simplify, Word
from ..verifier import IdentitySuite, Report, WitnessSearch
from ..verifier.Report import ClaimRecord


logger = logging.getLogger(__name__)


# Structs
class RunConfig(NamedTuple):
    command: str
    source: str
    source_name: str
    constants: dict[str, int]
    bound: int | None = None
    mode: EmbedMode = EmbedMode.GENERAL
    format: str = "dsl"
    simplify: Simplify = Simplify.NONE
    schema: bool = False
    workers: int = 1
    max_degree: int = const.DEFAULT_WITNESS_DEGREE
    steps: int = const.DEFAULT_WITNESS_STEPS
    timeout: float | None = None
    seed: int = const.DEFAULT_SEED
    deterministic: bool = True
    strict: bool = False


EXIT_CODES: list[tuple[type[Exception], int]] = [
    (err.EmbeddingModeError, const.EXIT_MODE_VIOLATION),
    (err.SchemaRefusalError, const.EXIT_SCHEMA_REFUSAL),
    (err.TgEmbeddingsError, const.EXIT_PARSE_ERROR),
]


def _exit_code(error: Exception) -> int:
    for kind, code in EXIT_CODES:
        if isinstance(error, kind):
            return code
    return const.EXIT_PARSE_ERROR


def _guarded(action: Callable[[], int]) -> None:
    """Run a command body and exit with its status, mapping toolkit errors to exit codes."""
    try:
        status = action()
    except err.TgEmbeddingsError as e:
        click.echo(f"error: {e}", err=True)
        sys.exit(_exit_code(e))
    sys.exit(status)


def _check_bound(ctx: click.Context, param: click.Parameter, value: int | None) -> int | None:
    if value is not None and value < 1:
        raise click.BadParameter(err.RUN_BOUND_INVALID)
    return value


def _parse_lets(values: tuple[str, ...], p: int | None) -> dict[str, int]:
    constants = {}
    for value in values:
        name, _, number = value.partition("=")
        try:
            constants[name.strip()] = int(number)
        except ValueError:
            raise click.BadParameter(f"expected NAME=INT, got {value}", param_hint="--let")
    if p is not None:
        constants["p"] = p
    return constants


def _read_source(file: str | None, example: str | None, source: str | None) -> tuple[str, str]:
    given = [option for option in (file, example, source) if option is not None]
    if len(given) > 1:
        raise click.UsageError(err.RUN_SOURCE_COUNT)
    if file is not None:
        return Path(file).read_text(), file
    if example is not None:
        return Examples.EXAMPLES[example].source, example
    if source is not None:
        return source, "<source>"
    return click.get_text_stream("stdin").read(), "<stdin>"


def source_options(command: Callable) -> Callable:
    for option in reversed([
        click.option("--file", "file", type=click.Path(exists=True, dir_okay=False), help="Presentation source file."),
        click.option("--example", type=click.Choice(sorted(Examples.EXAMPLES)), help="Built-in example presentation."),
        click.option("--source", help="Inline presentation source."),
        click.option("--let", "lets", multiple=True, metavar="NAME=INT", help="Set a DSL constant."),
        click.option("--p", "p", type=int, help="The prime of the Prüfer example (same as --let p=P)."),
        click.option("--bound", type=int, callback=_check_bound, help="Cap on every schema parameter."),
        click.option("--mode", type=click.Choice([m.value for m in EmbedMode]), help="Embedding mode."),
    ]):
        command = option(command)
    return command


def _mode(value: str | None, example: str | None) -> EmbedMode:
    if value is not None:
        return EmbedMode(value)
    if example is not None:
        return Examples.EXAMPLES[example].mode
    return EmbedMode.GENERAL


def _presentation(config: RunConfig) -> Presentation:
    return parse(config.source, config.constants)


def _embed_config(config: RunConfig) -> EmbeddingResult:
    p = _presentation(config)
    if config.schema:
        return embed_schema(p, config.mode, config.simplify)
    if not p.is_instantiated():
        p = instantiate(p, config.bound)
    return embed(p, config.mode, config.simplify, config.workers)


def _emit_records(records: list[ClaimRecord], report: str) -> int:
    click.echo(Report.render_jsonl(records) if report == "jsonl" else Report.render_table(records), nl=False)
    return const.EXIT_OK if Report.all_passed(records) else const.EXIT_CHECK_FAILED


@click.group(context_settings={"auto_envvar_prefix": "TG_EMBED"})
@click.option(
    "--log-level",
    default="WARNING",
    type=click.Choice(["DEBUG", "INFO", "WARNING", "ERROR"], case_sensitive=False),
    help="Diagnostics on stderr.",
)
def cli(log_level: str) -> None:
    """Embed presented groups into two-generator groups and verify the free-group facts behind the embedding."""
    logging.basicConfig(stream=sys.stderr, level=log_level.upper(), format="%(levelname)s %(name)s %(message)s", force=True)


@cli.command("embed")
@source_options
@click.option("--format", "format", type=click.Choice(["dsl", "gap", "json"]), default="dsl", show_default=True)
@click.option("--simplify", type=click.Choice([s.value for s in Simplify]), default="none", show_default=True)
@click.option("--schema", is_flag=True, help="Keep relator schemas symbolic instead of instantiating.")
@click.option("--workers", type=click.IntRange(min=1), default=1, show_default=True)
def cmd_embed(
    file: str | None,
    example: str | None,
    source: str | None,
    lets: tuple[str, ...],
    p: int | None,
    bound: int | None,
    mode: str | None,
    format: str,
    simplify: str,
    schema: bool,
    workers: int,
) -> None:
    """Write the two-generator presentation of the input and its generator images."""
    text, name = _read_source(file, example, source)
    config = RunConfig(
        command="embed",
        source=text,
        source_name=name,
        constants=_parse_lets(lets, p),
        bound=bound,
        mode=_mode(mode, example),
        format=format,
        simplify=Simplify(simplify),
        schema=schema,
        workers=workers,
    )

    def run() -> int:
        click.echo(format_result(_embed_config(config), config.format), nl=False)
        return const.EXIT_OK

    _guarded(run)


@cli.group("verify")
def cmd_verify() -> None:
    """Check identities, free bases and nontriviality witnesses; exit 1 when a check fails."""


def report_option(command: Callable) -> Callable:
    return click.option(
        "--report", type=click.Choice(["table", "jsonl"]), default="table", show_default=True
    )(command)


@cmd_verify.command("identities")
@click.option("--imax", type=click.IntRange(min=1), default=const.DEFAULT_IDENTITY_IMAX, show_default=True)
@click.option("--negative-controls", is_flag=True, help="Also check that perturbed identities fail.")
@report_option
def verify_identities(imax: int, negative_controls: bool, report: str) -> None:
    def run() -> int:
        records = IdentitySuite.check_identities(imax)
        if negative_controls:
            for name in IdentitySuite.IDENTITIES:
                control = IdentitySuite.check_identity(name, 1, perturb=True)
                records.append(ClaimRecord(f"negative_control:{name}", {"i": 1}, not control.passed, control.certificate))
        return _emit_records(records, report)

    _guarded(run)


@cmd_verify.command("basis")
@click.option("--n", "n", type=click.IntRange(min=1), default=const.DEFAULT_BASIS_N, show_default=True)
@report_option
def verify_basis(n: int, report: str) -> None:
    _guarded(lambda: _emit_records(IdentitySuite.check_basis(n), report))


@cmd_verify.command("lengths")
@click.option("--imax", type=click.IntRange(min=1), default=const.DEFAULT_LENGTH_IMAX, show_default=True)
@report_option
def verify_lengths(imax: int, report: str) -> None:
    _guarded(lambda: _emit_records(
        IdentitySuite.check_expansions(imax) + IdentitySuite.check_length_comparison(imax), report
    ))


@cmd_verify.command("claims")
@click.option("--n", "n", type=click.IntRange(min=1), default=const.DEFAULT_BASIS_N, show_default=True)
@report_option
def verify_claims(n: int, report: str) -> None:
    _guarded(lambda: _emit_records(IdentitySuite.check_claims(n), report))


def _cyclic_order(group: str) -> int:
    if not group.startswith("C") or not group[1:].isdigit() or int(group[1:]) < 1:
        raise click.BadParameter(f"expected Cn with n >= 1, got {group}", param_hint="--group")
    return int(group[1:])


def _witness_problem(config: RunConfig, group: str | None, word: str) -> tuple[Presentation, Word]:
    if group is not None:
        result = embed(Examples.cyclic(_cyclic_order(group)), EmbedMode.GENERAL)
        return result.target, UniversalWords.universal_word(1)
    source = _presentation(config)
    result = _embed_config(config._replace(schema=False))
    w = WordLib.substitute(parse_word(word, source), result.gamma)
    return instantiate_result(result, config.bound), w


@cmd_verify.command("witness")
@source_options
@click.option("--group", help="Built-in cyclic group Cn, queried at a[1].")
@click.option("--word", default="a[1]", show_default=True, help="Source word to certify as nontrivial.")
@click.option("--max-degree", type=click.IntRange(min=1), default=const.DEFAULT_WITNESS_DEGREE, show_default=True)
@click.option("--steps", type=click.IntRange(min=1), default=const.DEFAULT_WITNESS_STEPS, show_default=True)
@click.option("--timeout", type=float, help="Wall-clock limit in seconds.")
@click.option("--seed", type=int, default=const.DEFAULT_SEED, show_default=True)
@click.option("--nondeterministic", is_flag=True, help="Race one seed per worker; the first witness wins.")
@click.option("--workers", type=click.IntRange(min=1), default=1, show_default=True)
@click.option("--strict", is_flag=True, help="Exit 1 when no witness is found.")
def verify_witness(
    file: str | None,
    example: str | None,
    source: str | None,
    lets: tuple[str, ...],
    p: int | None,
    bound: int | None,
    mode: str | None,
    group: str | None,
    word: str,
    max_degree: int,
    steps: int,
    timeout: float | None,
    seed: int,
    nondeterministic: bool,
    workers: int,
    strict: bool,
) -> None:
    """Search finite permutation quotients for a witness that the image of a word is nontrivial.

    A witness proves nontriviality; finding none proves nothing.
    """
    if group is not None and any(option is not None for option in (file, example, source)):
        raise click.UsageError(err.RUN_SOURCE_COUNT)
    text, name = ("", group) if group is not None else _read_source(file, example, source)
    config = RunConfig(
        command="verify witness",
        source=text,
        source_name=name,
        constants=_parse_lets(lets, p),
        bound=bound,
        mode=_mode(mode, example),
        workers=workers,
        max_degree=max_degree,
        steps=steps,
        timeout=timeout,
        seed=seed,
        deterministic=not nondeterministic,
        strict=strict,
    )

    def run() -> int:
        target, w = _witness_problem(config, group, word)
        found = WitnessSearch.find_witness(
            target, w, config.max_degree, config.steps, config.seed, config.timeout, config.deterministic, config.workers
        )
        click.echo(f"status: {found.status.value}")
        click.echo(f"steps: {found.steps}")
        if found.assignment is None:
            click.echo("no witness; this proves nothing about the word")
            return const.EXIT_CHECK_FAILED if config.strict else const.EXIT_OK
        valid = WitnessSearch.validate_witness(target, w, found.assignment)
        click.echo(f"degree: {found.assignment.degree}")
        click.echo(f"image order: {found.image_order}")
        for generator, images in found.assignment.as_lists().items():
            click.echo(f"{generator}: {images}")
        click.echo(f"validated: {'yes' if valid else 'no'}")
        return const.EXIT_OK if valid else const.EXIT_CHECK_FAILED

    _guarded(run)


GOLDEN_DIR = Path(__file__).resolve().parents[1] / "goldens"
GOLDEN_FORMATS = ("dsl", "gap")


def golden_path(directory: str | Path, name: str, bound: int, p: int | None, format: str = "dsl") -> Path:
    prime = "" if name != "prufer" else f"-p{p or 2}"
    return Path(directory) / f"{name}{prime}-b{bound}.{format}"


def _golden_matches(name: str, expected: str, actual: str, target: Presentation, format: str) -> bool:
    if expected == actual:
        return True
    if name != "prufer" or format != "dsl":
        return False
    # the Prüfer display may group its factors differently; accept free equality of the cyclic reductions
    stored = parse(expected)
    return [WordLib.cyclic_reduce(r) for r in stored.relators] == [WordLib.cyclic_reduce(r) for r in target.relators]


@cli.command("examples")
@click.argument("name", type=click.Choice(sorted(Examples.EXAMPLES)))
@click.option("--bound", type=int, default=3, show_default=True, callback=_check_bound)
@click.option("--p", "p", type=int, help="The prime of the Prüfer example.")
@click.option("--format", "format", type=click.Choice(["dsl", "gap", "json"]), default="dsl", show_default=True)
@click.option(
    "--golden", type=click.Path(file_okay=False), help="Directory of golden files, the packaged goldens by default."
)
@click.option("--update-golden", is_flag=True, help="Write the golden file instead of diffing.")
def cmd_examples(name: str, bound: int, p: int | None, format: str, golden: str | None, update_golden: bool) -> None:
    """Embed a built-in example and compare it with its reference target family and its golden file."""
    example = Examples.EXAMPLES[name]

    def run() -> int:
        source = Examples.example(name, p)
        result = embed(instantiate(source, bound), example.mode)
        click.echo(f"# source {name}")
        click.echo(serialize(source, "dsl"), nl=False)
        click.echo(f"# target at bound {bound}, mode {example.mode.value}")
        click.echo(format_result(result, format), nl=False)
        status = const.EXIT_OK

        mismatches = ReferenceFamilies.compare_with_reference(name, result.target, bound, p)
        for mismatch in mismatches:
            click.echo(f"# reference mismatch at {mismatch.position}: expected {mismatch.expected}, got {mismatch.actual}")
        schematic = instantiate_result(embed_schema(source, example.mode), bound)
        commutes = schematic.relators == result.target.relators
        click.echo(f"# reference family: {'match' if not mismatches else 'MISMATCH'}")
        click.echo(f"# schema commutation: {'match' if commutes else 'MISMATCH'}")
        if mismatches or not commutes:
            status = const.EXIT_CHECK_FAILED

        if format not in GOLDEN_FORMATS:
            click.echo(f"# golden: none kept for {format}")
            return status
        cyclic = embed(instantiate(source, bound), example.mode, Simplify.CYCLIC).target
        rendered = serialize(cyclic, format)
        path = golden_path(GOLDEN_DIR if golden is None else golden, name, bound, p, format)
        if update_golden:
            path.parent.mkdir(parents=True, exist_ok=True)
            path.write_text(rendered)
            click.echo(f"# golden written: {path}")
        elif not path.exists():
            if golden is not None:
                click.echo(f"# golden missing: {path}", err=True)
                status = const.EXIT_CHECK_FAILED
            else:
                click.echo(f"# golden: none stored for {path.name}")
        elif _golden_matches(name, path.read_text(), rendered, cyclic, format):
            click.echo(f"# golden: match {path.name}")
        else:
            click.echo(f"# golden: MISMATCH {path}")
            status = const.EXIT_CHECK_FAILED
        return status

    _guarded(run)
