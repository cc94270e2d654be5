import click

from signed_spectra.core.dependencies import budget_option, build_config, emit, graph_argument, load_graph, out_option
from signed_spectra.schemas.bounds import BoundsResponse
from signed_spectra.schemas.run import Command
from signed_spectra.services.bounds import verify_all

k_max_option = click.option("--k", "k", type=int, default=3, show_default=True, help="Largest k checked.")


@click.command("bounds")
@graph_argument
@k_max_option
@budget_option
@out_option
def command(file, k, budget, out):
    """Report every spectral inequality on one graph, with slack and status."""
    config = build_config(Command.BOUNDS, k=k, budget=budget, out=out)
    g = load_graph(file)
    emit(BoundsResponse(reports=verify_all(g, budget=config.budget, k_max=config.k)), config.out)
