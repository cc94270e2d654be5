"""Threshold sweeps that turn a real function on V into a sub-bipartition.

Between consecutive values of |f| the threshold sets do not change, so
scanning the finite set {|f(u)|} plus the zero convention covers every
threshold. Ties go to the smallest threshold.
"""
import logging
from typing import Optional

import numpy as np

from signed_spectra.core.errors import ZeroFunction
from signed_spectra.models.cheeger import SweepResult
from signed_spectra.models.graph import SignedGraph, SubBipartition
from signed_spectra.models.measure import VertexMeasure
from signed_spectra.services.cheeger import beta, bipartition_numerators, l1_rayleigh
from signed_spectra.services.spectral import max_weight_degree_ratio, rayleigh

logger = logging.getLogger(__name__)


def _candidates(values: np.ndarray, within: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Thresholds in ascending order and the matching indicator rows.

    s > 0 yields V_1 = {f ≥ s}, V_2 = {f ≤ −s}; s = 0 yields V_1 = {f ≥ 0},
    V_2 = {f < 0}. Both are intersected with ``within``.
    """
    magnitudes = np.abs(values[within])
    thresholds = np.concatenate(([0.0], np.unique(magnitudes[magnitudes > 0])))
    upper = values[None, :] >= thresholds[:, None]
    lower = values[None, :] <= -thresholds[:, None]
    lower[0] = values < 0
    rows = (upper & within).astype(np.float64) - (lower & within)
    return thresholds, rows


def _sweep(g: SignedGraph, f, mu: VertexMeasure, within: Optional[np.ndarray]):
    values = g.as_vector(f)
    within = np.ones(g.vertex_count, dtype=bool) if within is None else np.asarray(within, dtype=bool)
    values = np.where(within, values, 0.0)
    if not np.any(values != 0):
        raise ZeroFunction("cannot sweep the zero function")

    thresholds, rows = _candidates(values, within)
    volumes = np.abs(rows) @ mu.values
    ratios = bipartition_numerators(g, rows) / volumes
    # argmin keeps the first, i.e. smallest, threshold among ties
    j = int(np.argmin(ratios))
    logger.debug("sweep candidates=%d threshold=%s value=%s", thresholds.size, thresholds[j], ratios[j])
    bp = SubBipartition.from_indicator(g, rows[j])
    return values, bp, beta(g, bp, mu), float(thresholds[j])


def sweep_quadratic(
    g: SignedGraph, f, mu: VertexMeasure, within: Optional[np.ndarray] = None
) -> SweepResult:
    """Best β^σ(V_f(s), V_f(−s)); reports t′ = s² and the guarantee √(2 d_μ^w R^σ(f)).

    ``within`` is an optional boolean mask: f is restricted to it and so are
    the threshold sets.
    """
    values, bp, value, threshold = _sweep(g, f, mu, within)
    guarantee = float(np.sqrt(2.0 * max_weight_degree_ratio(g, mu) * rayleigh(g, values, mu)))
    return SweepResult(bipartition=bp, value=value, threshold=threshold * threshold, guarantee=guarantee)


def sweep_linear(
    g: SignedGraph, f, mu: VertexMeasure, within: Optional[np.ndarray] = None
) -> SweepResult:
    """Same sweep with t′ = s and the ℓ1 Rayleigh ratio of f as guarantee."""
    values, bp, value, threshold = _sweep(g, f, mu, within)
    return SweepResult(bipartition=bp, value=value, threshold=threshold, guarantee=l1_rayleigh(g, values, mu))
