import logging
from collections import Counter

import click

from signed_spectra.commands.bounds import k_max_option
from signed_spectra.core.dependencies import budget_option, build_config, emit, load_graph, out_option, seed_option
from signed_spectra.core.errors import VerificationFailed
from signed_spectra.corpus import random_corpus
from signed_spectra.schemas.bounds import BoundStatus, VerifySummary
from signed_spectra.schemas.run import Command
from signed_spectra.services.bounds import verify_all

logger = logging.getLogger(__name__)


@click.command("verify")
@click.argument("file", required=False, type=click.Path(exists=True, dir_okay=False))
@click.option("--count", type=click.IntRange(min=1), default=20, show_default=True, help="Random graphs to check.")
@click.option("--max-n", type=click.IntRange(min=3), default=7, show_default=True, help="Largest random graph.")
@k_max_option
@budget_option
@seed_option
@out_option
def command(file, count, max_n, k, budget, seed, out):
    """
    Check every inequality on FILE, or on a seeded random corpus.

    Exits with code 3 when any report is violated.
    """
    config = build_config(Command.VERIFY, k=k, budget=budget, seed=seed, out=out)
    graphs = [load_graph(file)] if file else random_corpus(config.seed, count, max_n)

    reports = []
    for position, g in enumerate(graphs):
        logger.debug("verify graph %d/%d N=%d", position + 1, len(graphs), g.vertex_count)
        reports += verify_all(g, budget=config.budget, k_max=config.k)

    tally = Counter(report.status for report in reports)
    violations = [report for report in reports if report.status == BoundStatus.VIOLATED]
    emit(
        VerifySummary(
            graphs=len(graphs),
            reports=len(reports),
            verified=tally[BoundStatus.VERIFIED],
            violated=tally[BoundStatus.VIOLATED],
            vacuous=tally[BoundStatus.VACUOUS],
            informational=tally[BoundStatus.INFORMATIONAL],
            skipped=tally[BoundStatus.SKIPPED],
            violations=violations,
        ),
        config.out,
    )
    if violations:
        raise VerificationFailed(f"{len(violations)} of {len(reports)} bound reports violated")
