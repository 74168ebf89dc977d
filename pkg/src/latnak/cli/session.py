import logging
import sys
from collections.abc import Iterator
from contextlib import contextmanager
from dataclasses import dataclass
from pathlib import Path

import typer
from rich.console import Console
from rich.logging import RichHandler
from sympy.polys.domains.domain import Domain

from latnak.algebra import (
    BoundQuiverAlgebra,
    intro_lattice_algebra,
    lattice_algebra,
    lattice_shriek,
    nakayama,
    nn,
    path_algebra_an,
)
from latnak.config import RunConfig, load_config
from latnak.constants import EXIT_INTERNAL, EXIT_PRECONDITION, OUTPUT_FORMATS, PACKAGE_NAME
from latnak.exceptions import ConfigError, PreconditionError, SerializationError
from latnak.lattice import CompositionPair, LatticeSet, composition_pair, young_pq, young_pqr
from latnak.reporter import Reporter
from latnak.serialize import lattice_from_dict, read_json

console = Console()

LOG_LEVELS = {"minimal": logging.WARNING, "normal": logging.INFO, "verbose": logging.DEBUG}


@dataclass
class Session:
    """
    Settings shared by every command of one invocation

    Attributes:
        config (RunConfig): Configuration after command line overrides
    """

    config: RunConfig

    @property
    def field(self) -> Domain:
        return self.config.domain()

    @property
    def format(self) -> str:
        return self.config.output.format

    @property
    def verify(self) -> bool:
        return self.config.run.verify

    def reporter(self) -> Reporter:
        return Reporter(self.config.output, output=sys.stdout)

    def within_caps(self, algebra: BoundQuiverAlgebra) -> bool:
        return algebra.dim <= self.config.limits.max_dim


def build_session(
    config_path: Path | None,
    field: str | None,
    prime: int | None,
    output_format: str | None,
    max_dim: int | None,
    seed: int | None,
    verbose: bool,
) -> Session:
    """
    Load the configuration and apply the global command line overrides

    Raises:
        ConfigError: If the configuration or an override is invalid
    """

    config = load_config(config_path)

    if field is not None:
        config.field.kind = field  # type: ignore[assignment]
    if prime is not None:
        config.field.prime = prime
        if field is None:
            config.field.kind = "prime"
    if output_format is not None:
        if output_format not in OUTPUT_FORMATS:
            raise ConfigError(f"Invalid format '{output_format}'. Use one of: {', '.join(OUTPUT_FORMATS)}")
        config.output.format = output_format  # type: ignore[assignment]
    if max_dim is not None:
        config.limits.max_dim = max_dim
    if seed is not None:
        config.run.seed = seed
    if verbose:
        config.output.verbosity = "verbose"

    # rejects a bad field choice before any command runs
    config.domain()
    setup_logging(config)
    return Session(config)


def setup_logging(config: RunConfig) -> None:
    logger = logging.getLogger(PACKAGE_NAME)
    for handler in list(logger.handlers):
        logger.removeHandler(handler)

    handler = RichHandler(console=Console(stderr=True), show_path=False, markup=False)
    logger.addHandler(handler)
    logger.setLevel(LOG_LEVELS[config.output.verbosity])
    logger.propagate = False


@contextmanager
def guarded() -> Iterator[None]:
    """
    Map library exceptions onto the exit code contract
    """

    try:
        yield
    except typer.Exit:
        raise
    except (PreconditionError, ConfigError, SerializationError) as e:
        console.print(f"[red]Error:[/red] {e}")
        raise typer.Exit(EXIT_PRECONDITION) from e
    except Exception as e:
        console.print(f"[red]Error:[/red] {type(e).__name__}: {e}")
        raise typer.Exit(EXIT_INTERNAL) from e


def parse_ints(text: str, count: int | None = None, option: str = "value") -> tuple[int, ...]:
    """
    Parse "2,8,5" into a tuple of integers

    Raises:
        PreconditionError: If the text is not a comma separated list of the expected length
    """

    try:
        values = tuple(int(x) for x in text.replace(" ", "").split(",") if x)
    except ValueError as e:
        raise PreconditionError(option, f"expected comma separated integers, got '{text}'") from e

    if count is not None and len(values) != count:
        raise PreconditionError(option, f"expected {count} integers, got '{text}'")
    return values


def parse_pair(text: str) -> CompositionPair:
    """
    Parse "1,2,1;1,2,2" into the composition pair ((1,2,1), (1,2,2))
    """

    if ";" not in text:
        raise PreconditionError("--pair", f"expected 'p1,...;q1,...', got '{text}'")
    left, right = text.split(";", 1)
    return CompositionPair(parse_ints(left, option="--pair"), parse_ints(right, option="--pair"))


def resolve_lattice(young: str | None, pair: str | None, lattice_file: Path | None) -> LatticeSet:
    """
    The lattice set named by exactly one of --young, --pair and --lattice-file
    """

    given = [x for x in (young, pair, lattice_file) if x is not None]
    if len(given) != 1:
        raise PreconditionError("lattice", "give exactly one of --young, --pair, --lattice-file")

    if young is not None:
        return young_pqr(*parse_ints(young, 3, "--young"))
    if pair is not None:
        return young_pq(parse_pair(pair))
    return lattice_from_dict(read_json(lattice_file))  # type: ignore[arg-type]


def resolve_pair(s: int | None, t: int | None, u: int | None, pair: str | None) -> CompositionPair:
    if pair is not None:
        return parse_pair(pair)
    if s is None or t is None:
        raise PreconditionError("pair", "give --pair or --s/--t (and optionally --u)")
    return composition_pair(s, t, u or 0)


def resolve_algebra(
    kind: str,
    field: Domain,
    n: int | None = None,
    l: int | None = None,  # noqa: E741
    young: str | None = None,
    pair: str | None = None,
    lattice_file: Path | None = None,
) -> BoundQuiverAlgebra:
    """
    Build the algebra selected by --algebra and its parameters

    Raises:
        PreconditionError: If the kind is unknown or a parameter is missing
    """

    match kind:
        case "nakayama":
            if n is None or l is None:
                raise PreconditionError("--algebra nakayama", "needs --n and --l")
            return nakayama(n, l, field)
        case "an":
            if n is None:
                raise PreconditionError("--algebra an", "needs --n")
            return path_algebra_an(n, field)
        case "nn":
            if n is None:
                raise PreconditionError("--algebra nn", "needs --n")
            return nn(range(1, n + 1), field)
        case "lattice":
            return lattice_algebra(resolve_lattice(young, pair, lattice_file), field)
        case "shriek":
            if pair is None:
                raise PreconditionError("--algebra shriek", "needs --pair")
            return lattice_shriek(parse_pair(pair), field)
        case "intro":
            if young is None:
                raise PreconditionError("--algebra intro", "needs --young s,t,u")
            return intro_lattice_algebra(*parse_ints(young, 3, "--young"), field)
        case _:
            raise PreconditionError(
                "--algebra", f"unknown kind '{kind}'", "nakayama | an | nn | lattice | shriek | intro"
            )
