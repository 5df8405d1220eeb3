"""Locally twisted cubes: label algebra, canonical-path congestion,
exact crossing-number geometry, recursive drawing construction, and
closed-form crossing bounds."""

from .labels import (
    DIM_INFINITE,
    ForwardDirection,
    LtqGraph,
    VertexLabel,
    dim_of,
    double_label,
    epsilon_zeta,
    forward_direction,
    from_decimal,
    is_adjacent,
    is_odd_vertex,
    label,
    lambda_index,
    neighbor,
    parse_vertex,
    partner,
    to_decimal,
)

__version__ = "0.1.0"

__all__ = [
    "DIM_INFINITE",
    "ForwardDirection",
    "LtqGraph",
    "VertexLabel",
    "dim_of",
    "double_label",
    "epsilon_zeta",
    "forward_direction",
    "from_decimal",
    "is_adjacent",
    "is_odd_vertex",
    "label",
    "lambda_index",
    "neighbor",
    "parse_vertex",
    "partner",
    "to_decimal",
    "__version__",
]
