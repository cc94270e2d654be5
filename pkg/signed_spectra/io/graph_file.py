"""Edge-list graph files.

One edge per line: ``label_u label_v signed_weight``. The sign of the
weight is the edge sign. ``#`` starts a comment; blank lines are skipped.
"""
import logging
import math
from collections.abc import Iterable
from pathlib import Path
from typing import Union

from signed_spectra.core.errors import EmptyEdgeSet, ParseError
from signed_spectra.models.graph import SignedGraph
from signed_spectra.services.graph_core import build_graph

logger = logging.getLogger(__name__)


def parse_graph(lines: Iterable[Union[str, bytes]]) -> SignedGraph:
    """Parse edge-list lines; byte lines are decoded as UTF-8 one at a time."""
    edges, line_numbers = [], []
    for number, raw in enumerate(lines, start=1):
        if isinstance(raw, bytes):
            try:
                raw = raw.decode("utf-8")
            except UnicodeDecodeError:
                raise ParseError(number, "not valid UTF-8") from None
        text = raw.split("#", 1)[0].strip()
        if not text:
            continue
        fields = text.split()
        if len(fields) != 3:
            raise ParseError(number, f"expected 'label_u label_v signed_weight', got {len(fields)} fields")
        a, b, token = fields
        try:
            value = float(token)
        except ValueError:
            raise ParseError(number, f"weight {token!r} is not a number") from None
        if not math.isfinite(value):
            raise ParseError(number, f"weight {token!r} is not finite")
        edges.append((a, b, value))
        line_numbers.append(number)
    if not edges:
        raise EmptyEdgeSet("graph file contains no edges")
    return build_graph(edges, line_numbers=line_numbers)


def read_graph(path: Union[str, Path]) -> SignedGraph:
    with open(path, "rb") as handle:
        g = parse_graph(handle)
    logger.debug("read %s N=%d edges=%d", path, g.vertex_count, g.edge_count)
    return g


def format_graph(g: SignedGraph) -> str:
    """Inverse of ``parse_graph``; weights written with repr so they read back exactly."""
    lines = [f"{a} {b} {sign * weight!r}" for a, b, weight, sign in g.edges()]
    return "\n".join(lines) + "\n"
