"""Eigenvalue bounds from signed triangles and a harness that checks the
spectral inequalities relating λ_k and h_k on a concrete graph."""
import logging
from typing import Optional

import numpy as np

from signed_spectra.core.config import settings
from signed_spectra.core.errors import (
    BudgetExceeded,
    EmptyEdgeSet,
    InvariantViolation,
    TooLargeForExact,
)
from signed_spectra.models.graph import SignedGraph
from signed_spectra.models.measure import VertexMeasure
from signed_spectra.schemas.bounds import BoundName, BoundReport, BoundStatus
from signed_spectra.schemas.options import OperatorKind
from signed_spectra.services.cheeger import cheeger_profile, h_exact
from signed_spectra.services.graph_core import triangle_counts_by_index, negate
from signed_spectra.services.spectral import spectrum

logger = logging.getLogger(__name__)

DEGENERATE_EIGENVALUE = 1e-12
DUALITY_TOLERANCE = 1e-8


def _require_edges(g: SignedGraph):
    u, v, w, _ = g.edge_arrays
    if u.size == 0:
        raise EmptyEdgeSet("bounds need at least one edge")
    return u, v, w


def _root(value: float) -> float:
    # round-off can leave a zero eigenvalue slightly negative
    return float(np.sqrt(max(float(value), 0.0)))


def _edge_labels(g: SignedGraph, u: int, v: int) -> list[str]:
    return [g.labels[u], g.labels[v]]


def triangle_bounds_normalized(g: SignedGraph) -> tuple[BoundReport, BoundReport]:
    """(w²/W)·min ♯⁻/max d ≤ λ_1(Δ^σ) and λ_N(Δ^σ) ≤ 2 − (w²/W)·min ♯⁺/max d."""
    u, v, w = _require_edges(g)
    counts = np.array([triangle_counts_by_index(g, a, b) for a, b in zip(u, v)])
    factor = float(w.min()) ** 2 / float(w.max()) / float(g.degrees.max())
    spec = spectrum(g, OperatorKind.NORMALIZED)

    lowest_minus = int(np.argmin(counts[:, 1]))
    lowest_plus = int(np.argmin(counts[:, 0]))
    lower = BoundReport.compare(
        BoundName.TRIANGLE_LAMBDA1_LOWER,
        lhs=factor * counts[lowest_minus, 1],
        rhs=spec.smallest,
        witness=_edge_labels(g, u[lowest_minus], v[lowest_minus]),
        vacuous=counts[lowest_minus, 1] == 0,
    )
    upper = BoundReport.compare(
        BoundName.TRIANGLE_LAMBDAN_UPPER,
        lhs=spec.largest,
        rhs=2.0 - factor * counts[lowest_plus, 0],
        witness=_edge_labels(g, u[lowest_plus], v[lowest_plus]),
        vacuous=counts[lowest_plus, 0] == 0,
    )
    return lower, upper


def _das_terms(g: SignedGraph) -> np.ndarray:
    """Per-edge bracket of the weighted triangle bound on λ_N(L^σ)."""
    u, v, _, _ = g.edge_arrays
    weights, signs, degrees = g.weights, g.signs, g.degrees
    terms = np.empty(u.size)
    for e, (a, b) in enumerate(zip(u, v)):
        near_a, near_b = weights[a] > 0, weights[b] > 0
        common = near_a & near_b
        # a neighbour of a that misses b, b itself included
        only_a = near_a & ~near_b
        only_b = near_b & ~near_a
        concordant = common & (signs[:, a] * signs[:, b] == signs[a, b])
        discordant = common & ~concordant
        terms[e] = (
            degrees[a]
            + degrees[b]
            + weights[only_a, a].sum()
            + weights[discordant, a].sum()
            + weights[only_b, b].sum()
            + weights[discordant, b].sum()
            + np.abs(weights[concordant, a] - weights[concordant, b]).sum()
        )
    return terms


def _check_unweighted_reduction(g: SignedGraph, terms: np.ndarray) -> None:
    u, v, _, _ = g.edge_arrays
    for e, (a, b) in enumerate(zip(u, v)):
        plus, _ = triangle_counts_by_index(g, a, b)
        expected = g.degrees[a] + g.degrees[b] - plus
        if terms[e] / 2.0 != expected:
            raise InvariantViolation(
                f"weighted triangle bound {terms[e] / 2.0} differs from d_u + d_v − ♯⁺ = {expected} "
                f"on edge ({g.labels[a]!r}, {g.labels[b]!r})"
            )


def das_bound_kirchhoff(g: SignedGraph) -> BoundReport:
    """λ_N(L^σ) ≤ ½ max_{u∼v} of the weighted triangle bracket.

    On unweighted graphs the bracket halves to d_u + d_v − ♯⁺(u, v); that
    reduction is checked edge by edge when invariant checks are on.
    """
    u, v, w = _require_edges(g)
    terms = _das_terms(g)
    unweighted = bool(np.all(w == 1.0))
    if unweighted and settings.CHECK_INVARIANTS:
        _check_unweighted_reduction(g, terms)
    worst = int(np.argmax(terms))
    return BoundReport.compare(
        BoundName.KIRCHHOFF_TRIANGLE_UPPER,
        lhs=spectrum(g, OperatorKind.KIRCHHOFF).largest,
        rhs=float(terms[worst]) / 2.0,
        witness=_edge_labels(g, u[worst], v[worst]),
        detail="unweighted: equals max d_u + d_v − ♯⁺(u,v)" if unweighted else None,
    )


def degree_sum_bound_kirchhoff(g: SignedGraph) -> BoundReport:
    """λ_N(L^σ) ≤ max_{u∼v} (d_u + d_v)."""
    u, v, _ = _require_edges(g)
    sums = g.degrees[u] + g.degrees[v]
    worst = int(np.argmax(sums))
    return BoundReport.compare(
        BoundName.KIRCHHOFF_DEGREE_SUM_UPPER,
        lhs=spectrum(g, OperatorKind.KIRCHHOFF).largest,
        rhs=float(sums[worst]),
        witness=_edge_labels(g, u[worst], v[worst]),
    )


# ── Verification harness ─────────────────────────────────────────────────


def _profile(g: SignedGraph, k_max: int, mu: VertexMeasure, budget: Optional[int]):
    """h_1..h_j for the largest j ≤ k_max the budget allows, or an empty list."""
    for k in range(k_max, 0, -1):
        try:
            return [c.value for c in cheeger_profile(g, k, mu, budget=budget)]
        except BudgetExceeded:
            continue
    return []


def _improved(
    name: BoundName,
    disjunction: BoundName,
    h1: float,
    eigenvalues: np.ndarray,
    scale: float,
) -> list[BoundReport]:
    """h_1 < scale·k·λ_1/√λ_k per k, plus the disjunction with h_1 ≤ 8kλ_1."""
    reports = []
    lambda_1 = float(eigenvalues[0])
    for k in range(1, eigenvalues.size + 1):
        lambda_k = float(eigenvalues[k - 1])
        first = 8.0 * k * lambda_1
        if lambda_k <= DEGENERATE_EIGENVALUE:
            reports.append(
                BoundReport(
                    bound_name=name,
                    lhs=h1,
                    status=BoundStatus.VACUOUS,
                    k=k,
                    detail="λ_k vanishes; the ratio is undefined",
                )
            )
            reports.append(BoundReport.compare(disjunction, h1, first, k=k, detail="only h_1 ≤ 8kλ_1 applies"))
            continue
        second = scale * k * lambda_1 / np.sqrt(lambda_k)
        reports.append(BoundReport.compare(name, h1, float(second), k=k, strict=True))
        holds_first = h1 <= first + 1e-9
        reports.append(
            BoundReport.compare(
                disjunction,
                h1,
                float(first if holds_first else second),
                k=k,
                strict=not holds_first,
                detail="h_1 ≤ 8kλ_1" if holds_first else "h_1 < c·kλ_1/√λ_k",
            )
        )
    return reports


def _informational(name: BoundName, h: float, scale: float, k: int, detail: str = "") -> BoundReport:
    """lhs ≤ C·rhs for an unspecified constant C; reports the smallest C that works."""
    if scale <= DEGENERATE_EIGENVALUE:
        return BoundReport(bound_name=name, lhs=h, status=BoundStatus.VACUOUS, k=k, detail=detail or None)
    return BoundReport(
        bound_name=name,
        lhs=h,
        rhs=float(scale),
        status=BoundStatus.INFORMATIONAL,
        k=k,
        detail=f"{detail}implied constant {float(h / scale)!r}",
    )


def _higher_order_constants(profile: list[float], eigenvalues: np.ndarray) -> list[BoundReport]:
    """h_k ≤ C·k³√λ_k and h_k < C·l·k⁶·λ_k/√λ_l for k ≤ l."""
    reports = []
    n = eigenvalues.size
    for k, h in enumerate(profile, start=1):
        lambda_k = float(eigenvalues[k - 1])
        reports.append(_informational(BoundName.HIGHER_ORDER_UPPER, h, k**3 * np.sqrt(max(lambda_k, 0.0)), k))
        for l in range(k, n + 1):
            lambda_l = float(eigenvalues[l - 1])
            scale = l * k**6 * lambda_k / np.sqrt(lambda_l) if lambda_l > DEGENERATE_EIGENVALUE else 0.0
            reports.append(_informational(BoundName.IMPROVED_HIGHER_ORDER, h, scale, k, detail=f"l={l}; "))
    return reports


def _skip(names: list[BoundName], exc: Exception) -> list[BoundReport]:
    return [BoundReport.skipped(name, exc.detail) for name in names]


def verify_all(
    g: SignedGraph,
    mu_d: Optional[VertexMeasure] = None,
    mu_1: Optional[VertexMeasure] = None,
    budget: Optional[int] = None,
    k_max: int = 3,
) -> list[BoundReport]:
    """Check every computable inequality between spectra, Cheeger constants and triangles.

    Items that need an exact Cheeger constant beyond ``budget`` are reported
    as skipped; the rest still run.
    """
    _require_edges(g)
    mu_d = VertexMeasure.degree(g) if mu_d is None else mu_d
    mu_1 = VertexMeasure.unit(g) if mu_1 is None else mu_1
    n = g.vertex_count
    k_max = min(k_max, n)
    normalized = spectrum(g, OperatorKind.NORMALIZED).eigenvalues
    kirchhoff = spectrum(g, OperatorKind.KIRCHHOFF).eigenvalues
    dual = spectrum(negate(g), OperatorKind.NORMALIZED).eigenvalues
    d_max = float(g.degrees.max())
    reports: list[BoundReport] = []

    # normalized operator, μ_d
    h = _profile(g, k_max, mu_d, budget)
    if h:
        h1 = h[0]
        reports.append(BoundReport.compare(BoundName.SIGNED_CHEEGER_LOWER, normalized[0] / 2.0, h1))
        reports.append(BoundReport.compare(BoundName.SIGNED_CHEEGER_UPPER, h1, _root(2.0 * normalized[0])))
        for k, hk in enumerate(h, start=1):
            reports.append(BoundReport.compare(BoundName.HIGHER_ORDER_LOWER, normalized[k - 1] / 2.0, hk, k=k))
        reports += _higher_order_constants(h, normalized)
        reports += _improved(
            BoundName.IMPROVED_CHEEGER, BoundName.IMPROVED_CHEEGER_DISJUNCTION, h1, normalized, 16.0 * np.sqrt(2.0)
        )
    else:
        reports.append(
            BoundReport.skipped(BoundName.SIGNED_CHEEGER_LOWER, f"exact h_1 on {n} vertices exceeds the budget")
        )

    # dual constant h̃_1 = h_1 of −Γ against 2 − λ_N
    try:
        dual_h1 = h_exact(negate(g), 1, mu_d, budget=budget).value
        gap = 2.0 - float(normalized[-1])
        reports.append(BoundReport.compare(BoundName.DUAL_CHEEGER_LOWER, gap / 2.0, dual_h1))
        reports.append(BoundReport.compare(BoundName.DUAL_CHEEGER_UPPER, dual_h1, _root(2.0 * gap)))
    except (BudgetExceeded, TooLargeForExact) as exc:
        reports += _skip([BoundName.DUAL_CHEEGER_LOWER, BoundName.DUAL_CHEEGER_UPPER], exc)

    for k in range(1, n + 1):
        residual = abs((2.0 - float(normalized[n - k])) - float(dual[k - 1]))
        reports.append(BoundReport.compare(BoundName.DUALITY_IDENTITY, residual, DUALITY_TOLERANCE, k=k))

    # Kirchhoff operator, μ_1
    h_unit = _profile(g, k_max, mu_1, budget)
    if h_unit:
        h1 = h_unit[0]
        reports.append(BoundReport.compare(BoundName.KIRCHHOFF_CHEEGER_LOWER, kirchhoff[0] / 2.0, h1))
        reports.append(
            BoundReport.compare(BoundName.KIRCHHOFF_CHEEGER_UPPER, h1, _root(2.0 * d_max * kirchhoff[0]))
        )
        for k, hk in enumerate(h_unit, start=1):
            reports.append(
                BoundReport.compare(BoundName.KIRCHHOFF_HIGHER_ORDER_LOWER, kirchhoff[k - 1] / 2.0, hk, k=k)
            )
        reports += _improved(
            BoundName.KIRCHHOFF_IMPROVED_CHEEGER,
            BoundName.KIRCHHOFF_IMPROVED_CHEEGER_DISJUNCTION,
            h1,
            kirchhoff,
            16.0 * np.sqrt(2.0 * d_max),
        )
    else:
        reports.append(
            BoundReport.skipped(BoundName.KIRCHHOFF_CHEEGER_LOWER, f"exact h_1 on {n} vertices exceeds the budget")
        )

    if g.edge_count:
        reports += list(triangle_bounds_normalized(g))
        reports.append(das_bound_kirchhoff(g))
        reports.append(degree_sum_bound_kirchhoff(g))

    violated = [r for r in reports if r.status == BoundStatus.VIOLATED]
    for report in violated:
        logger.warning("bound violated name=%s k=%s slack=%r", report.bound_name.value, report.k, report.slack)
    logger.debug("verify_all N=%d reports=%d violated=%d", n, len(reports), len(violated))
    return reports
