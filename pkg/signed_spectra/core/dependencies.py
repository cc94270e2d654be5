"""Options and helpers shared by every CLI command."""
from pathlib import Path
from typing import Optional

import click
from pydantic import BaseModel, ValidationError

from signed_spectra.io.graph_file import read_graph
from signed_spectra.models.graph import SignedGraph
from signed_spectra.models.measure import VertexMeasure
from signed_spectra.schemas.options import MeasureKind
from signed_spectra.schemas.run import Command, RunConfig


def enum_choice(enum) -> click.Choice:
    return click.Choice([member.value for member in enum])


graph_argument = click.argument("file", type=click.Path(exists=True, dir_okay=False, path_type=Path))
k_option = click.option("--k", "k", type=int, default=1, show_default=True, help="Number of parts / eigenvalue index.")
measure_option = click.option(
    "--measure",
    type=click.Choice([MeasureKind.DEGREE.value, MeasureKind.UNIT.value]),
    default=MeasureKind.DEGREE.value,
    show_default=True,
)
seed_option = click.option("--seed", type=int, default=0, show_default=True, help="Seed for randomized steps.")
budget_option = click.option("--budget", type=int, default=None, help="Enumeration states allowed for exact constants.")
out_option = click.option(
    "--out", type=click.Path(dir_okay=False, writable=True, path_type=Path), default=None, help="Write JSON here."
)


def build_config(command: Command, **options) -> RunConfig:
    """Validate raw click values; a pydantic failure becomes a usage error."""
    try:
        return RunConfig(command=command, **{k: v for k, v in options.items() if v is not None})
    except ValidationError as exc:
        problems = "; ".join(f"{'.'.join(map(str, e['loc']))}: {e['msg']}" for e in exc.errors())
        raise click.UsageError(problems) from None


def load_graph(path: Path) -> SignedGraph:
    return read_graph(path)


def get_measure(g: SignedGraph, config: RunConfig) -> VertexMeasure:
    return VertexMeasure.of_kind(g, config.measure)


def emit(payload: BaseModel, out: Optional[Path] = None) -> None:
    text = payload.model_dump_json(indent=2)
    if out is None:
        click.echo(text)
    else:
        out.write_text(text + "\n", encoding="utf-8")
