import click

from signed_spectra.core.dependencies import (
    enum_choice,
    build_config,
    emit,
    graph_argument,
    load_graph,
    out_option,
    seed_option,
)
from signed_spectra.schemas.cheeger import FrustrationResponse
from signed_spectra.schemas.options import FrustrationMethod
from signed_spectra.schemas.run import Command
from signed_spectra.services.cheeger import frustration


@click.command("frustration")
@graph_argument
@click.option("--vertices", default=None, help="Comma separated labels of S; defaults to every vertex.")
@click.option(
    "--method", type=enum_choice(FrustrationMethod), default=FrustrationMethod.EXACT.value, show_default=True
)
@seed_option
@out_option
def command(file, vertices, method, seed, out):
    """Least edge weight whose deletion balances the subgraph induced on S."""
    config = build_config(Command.FRUSTRATION, frustration_method=method, seed=seed, out=out)
    g = load_graph(file)
    subset = g.labels if vertices is None else [label.strip() for label in vertices.split(",") if label.strip()]
    result = frustration(g, subset, method=config.frustration_method, seed=config.seed)
    emit(
        FrustrationResponse.from_domain(result, vertices=None if vertices is None else sorted(set(subset))),
        config.out,
    )
