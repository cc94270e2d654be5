import click

from signed_spectra.core.dependencies import (
    budget_option,
    build_config,
    emit,
    enum_choice,
    get_measure,
    graph_argument,
    k_option,
    load_graph,
    measure_option,
    out_option,
    seed_option,
)
from signed_spectra.schemas.cheeger import CheegerResponse
from signed_spectra.schemas.options import CheegerMode, ExactMethod
from signed_spectra.schemas.run import Command
from signed_spectra.services.cheeger import dual_h_exact, h_exact
from signed_spectra.services.clustering import sweep_certificate
from signed_spectra.services.graph_core import negate

_MODES = {"exact": CheegerMode.EXACT_ENUMERATION, "sweep": CheegerMode.SWEEP_UPPER_BOUND}


@click.command("cheeger")
@graph_argument
@k_option
@measure_option
@click.option("--mode", type=click.Choice(list(_MODES)), default="exact", show_default=True)
@click.option("--method", type=enum_choice(ExactMethod), default=ExactMethod.SUBSETS.value, show_default=True)
@click.option("--dual", is_flag=True, help="Compute the dual constant h̃_k (h_k of −Γ).")
@budget_option
@seed_option
@out_option
def command(file, k, measure, mode, method, dual, budget, seed, out):
    """
    Compute h_k^σ(μ) exactly, or an upper bound from spectral sweeps.

    Exact enumeration refuses graphs beyond ``--budget``; sweep mode
    works at any size.
    """
    config = build_config(
        Command.CHEEGER,
        k=k,
        measure=measure,
        cheeger_mode=_MODES[mode],
        method=method,
        budget=budget,
        seed=seed,
        out=out,
    )
    g = load_graph(file)
    mu = get_measure(g, config)
    if config.cheeger_mode == CheegerMode.SWEEP_UPPER_BOUND:
        certificate = sweep_certificate(negate(g) if dual else g, config.k, mu, seed=config.seed)
    elif dual:
        certificate = dual_h_exact(g, config.k, mu, method=config.method, budget=config.budget)
    else:
        certificate = h_exact(g, config.k, mu, method=config.method, budget=config.budget)
    emit(CheegerResponse.from_domain(certificate, config.measure), config.out)
