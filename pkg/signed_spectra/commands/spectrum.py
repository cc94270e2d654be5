import click

from signed_spectra.core.dependencies import enum_choice, build_config, emit, graph_argument, load_graph, out_option
from signed_spectra.schemas.options import OperatorKind
from signed_spectra.schemas.run import Command
from signed_spectra.schemas.spectrum import SpectrumResponse
from signed_spectra.services.graph_core import is_antibalanced, is_balanced
from signed_spectra.services.spectral import spectrum


@click.command("spectrum")
@graph_argument
@click.option("--operator", type=enum_choice(OperatorKind), default=OperatorKind.NORMALIZED.value, show_default=True)
@out_option
def command(file, operator, out):
    """
    Print the ascending eigenvalues of Δ^σ (normalized) or L^σ (kirchhoff).

    Balance flags come from the combinatorial test; when the graph is
    unbalanced a cycle with negative sign product is included.
    """
    config = build_config(Command.SPECTRUM, operator=operator, out=out)
    g = load_graph(file)
    spec = spectrum(g, config.operator)
    balance = is_balanced(g)
    emit(
        SpectrumResponse(
            operator=config.operator,
            eigenvalues=[float(value) for value in spec.eigenvalues],
            balanced=balance.balanced,
            antibalanced=is_antibalanced(g).balanced,
            negative_cycle=None if balance.balanced else list(balance.negative_cycle),
        ),
        config.out,
    )
