import click

from signed_spectra.core.dependencies import (
    enum_choice,
    build_config,
    emit,
    graph_argument,
    k_option,
    load_graph,
    out_option,
    seed_option,
)
from signed_spectra.schemas.clustering import ClusterResponse
from signed_spectra.schemas.options import EmbeddingMode, PartitionStrategy
from signed_spectra.schemas.run import Command
from signed_spectra.services.clustering import cluster


@click.command("cluster")
@graph_argument
@k_option
@click.option("--mode", type=enum_choice(EmbeddingMode), default=EmbeddingMode.BALANCED.value, show_default=True)
@click.option(
    "--strategy", type=enum_choice(PartitionStrategy), default=PartitionStrategy.RANDOM_PADDED.value, show_default=True
)
@click.option("--epsilon", type=float, default=None, help="Localization radius in (0, 2).")
@seed_option
@out_option
def command(file, k, mode, strategy, epsilon, seed, out):
    """Split the graph into k disjoint almost-balanced (or antibalanced) sub-bipartitions."""
    config = build_config(
        Command.CLUSTER, k=k, mode=mode, strategy=strategy, epsilon=epsilon, seed=seed, out=out
    )
    g = load_graph(file)
    result = cluster(
        g, config.k, mode=config.mode, strategy=config.strategy, epsilon=config.epsilon, seed=config.seed
    )
    emit(ClusterResponse.from_domain(result), config.out)
