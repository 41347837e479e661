"""Energy of graphs with self-loops, its spectral bounds and an exhaustive verifier."""

import json as _json

from ._core import (
    Error,
    Graph,
    canonical_code,
    connected_components,
    disjoint_union,
    eigenvalues,
    energy,
    find_extremal,
    gutman_upper,
    is_connected,
    make_family,
    parse_graph,
    serialize_graph,
)
from . import _core


def bound_report(graph, tol=1e-9):
    """Spectrum, energy, every bound, equality flags and family matches as a dict."""
    return _json.loads(_core.bound_report_json(graph, tol))


def verify(max_n=6, tol=1e-9, dedup=False, jobs=1):
    """Run the exhaustive sweep and return the summary as a dict."""
    return _json.loads(_core.verify_json(max_n, tol, dedup, jobs))


__all__ = [
    "Error",
    "Graph",
    "bound_report",
    "canonical_code",
    "connected_components",
    "disjoint_union",
    "eigenvalues",
    "energy",
    "find_extremal",
    "gutman_upper",
    "is_connected",
    "make_family",
    "parse_graph",
    "serialize_graph",
    "verify",
]
