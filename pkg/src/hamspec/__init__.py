"""Spectral certificates and rotation-extension search for Hamiltonian cycles."""

from .errors import HamspecError
from .graph import (
    Graph,
    build_graph,
    connected_components,
    edge_count_between,
    edges_inside,
    neighborhood,
    volume,
)
from .spectral import (
    Operator,
    check_butler_chung,
    check_fan_yu,
    check_krivelevich_sudakov,
    degree_summary,
    eigenvalues,
    operator_matrix,
    sigma_adjacency,
    spectral_gap,
    spectrum,
)

__all__ = [
    "Graph",
    "HamspecError",
    "Operator",
    "build_graph",
    "check_butler_chung",
    "check_fan_yu",
    "check_krivelevich_sudakov",
    "connected_components",
    "degree_summary",
    "edge_count_between",
    "edges_inside",
    "eigenvalues",
    "neighborhood",
    "operator_matrix",
    "sigma_adjacency",
    "spectral_gap",
    "spectrum",
    "volume",
]
