"""Vertex-label algebra for the locally twisted cube LTQ_n.

A vertex of LTQ_n is a bit string b_1 ... b_n (b_1 most significant).
LTQ_2 is the 4-cycle; for n >= 3 the graph is two copies of LTQ_{n-1}
prefixed with 0 and 1, where vertex 0 x_2 x_3 ... x_n is joined to
1 (x_2+x_n) x_3 ... x_n  (addition mod 2).

Unrolling that recursion gives a closed-form neighbor rule, used
throughout this module (and checked against the literal recursive
construction in the test suite):

    dimension i <= n-2 : flip bit i, and flip bit i+1 iff b_n = 1
    dimension n-1, n   : flip bit i only

Bit indices are 1-based to match the label notation.
"""

from __future__ import annotations

import math
from enum import Enum
from typing import Iterator, NamedTuple

__all__ = [
    "VertexLabel",
    "LtqGraph",
    "ForwardDirection",
    "DIM_INFINITE",
    "to_decimal",
    "from_decimal",
    "label",
    "parse_vertex",
    "lambda_index",
    "neighbor",
    "dim_of",
    "is_adjacent",
    "is_odd_vertex",
    "double_label",
    "epsilon_zeta",
    "forward_direction",
    "partner",
]

# Dim value for a non-adjacent pair.  A float so that comparisons like
# ``dim_of(x, y) <= n - 1`` behave naturally.
DIM_INFINITE = math.inf


class ForwardDirection(Enum):
    FROM_X_TO_Y = "from_x_to_y"
    FROM_Y_TO_X = "from_y_to_x"


class VertexLabel(NamedTuple):
    """Immutable vertex label: dimension ``n`` plus the integer code.

    ``code`` is the decimal value of the bit string, i.e. bit i
    contributes 2**(n-i).
    """

    n: int
    code: int

    def bit(self, i: int) -> int:
        """Value of bit b_i, 1-based from the most significant end."""
        if not 1 <= i <= self.n:
            raise ValueError(f"bit index {i} out of range 1..{self.n}")
        return (self.code >> (self.n - i)) & 1

    def bits(self) -> tuple[int, ...]:
        return tuple(self.bit(i) for i in range(1, self.n + 1))

    def popcount(self) -> int:
        return self.code.bit_count()

    def __str__(self) -> str:
        return format(self.code, f"0{self.n}b")

    def __repr__(self) -> str:
        return f"VertexLabel({self})"


def _check_dimension(n: int) -> None:
    if n < 2:
        raise ValueError(f"dimension must be >= 2, got {n}")


def _check_same_dimension(x: VertexLabel, y: VertexLabel) -> None:
    if x.n != y.n:
        raise ValueError(f"dimension mismatch: {x.n} != {y.n}")


def label(bits: str | int, n: int | None = None) -> VertexLabel:
    """Build a VertexLabel from a bit string, or from (code, n)."""
    if isinstance(bits, str):
        if n is not None and n != len(bits):
            raise ValueError("explicit n disagrees with bit-string length")
        if not bits or any(c not in "01" for c in bits):
            raise ValueError(f"not a bit string: {bits!r}")
        _check_dimension(len(bits))
        return VertexLabel(len(bits), int(bits, 2))
    if n is None:
        raise ValueError("n is required when building from an integer code")
    return from_decimal(bits, n)


def to_decimal(x: VertexLabel) -> int:
    """Decimal value of a label (bit i weighted by 2**(n-i))."""
    return x.code


def from_decimal(d: int, n: int) -> VertexLabel:
    """Inverse of :func:`to_decimal`; rejects d outside 0 .. 2**n - 1."""
    _check_dimension(n)
    if not 0 <= d < (1 << n):
        raise ValueError(f"decimal {d} out of range 0..{(1 << n) - 1}")
    return VertexLabel(n, d)


def parse_vertex(text: str, n: int | None = None) -> VertexLabel:
    """Parse either a bit string ("001011") or decimal-with-dimension ("11@6")."""
    text = text.strip()
    if "@" in text:
        dec_s, _, n_s = text.partition("@")
        try:
            d, nn = int(dec_s), int(n_s)
        except ValueError:
            raise ValueError(f"bad vertex syntax: {text!r}") from None
        if n is not None and n != nn:
            raise ValueError(f"vertex {text!r} has dimension {nn}, expected {n}")
        return from_decimal(d, nn)
    return label(text, n)


def lambda_index(x: VertexLabel, y: VertexLabel) -> int:
    """Smallest 1-based index where the two labels differ."""
    _check_same_dimension(x, y)
    diff = x.code ^ y.code
    if diff == 0:
        raise ValueError("labels are equal; no differing index")
    return x.n - diff.bit_length() + 1


def _neighbor_code(code: int, i: int, n: int) -> int:
    mask = 1 << (n - i)
    if i <= n - 2 and (code & 1):
        mask |= 1 << (n - i - 1)
    return code ^ mask


def neighbor(x: VertexLabel, i: int) -> VertexLabel:
    """The unique neighbor u of x with lambda_index(x, u) == i."""
    if not 1 <= i <= x.n:
        raise ValueError(f"dimension index {i} out of range 1..{x.n}")
    return VertexLabel(x.n, _neighbor_code(x.code, i, x.n))


def is_adjacent(x: VertexLabel, y: VertexLabel) -> bool:
    _check_same_dimension(x, y)
    if x == y:
        return False
    return neighbor(x, lambda_index(x, y)) == y


def dim_of(x: VertexLabel, y: VertexLabel):
    """Edge dimension: lambda_index if x, y are adjacent, else DIM_INFINITE."""
    lam = lambda_index(x, y)  # also rejects x == y
    return lam if neighbor(x, lam) == y else DIM_INFINITE


def is_odd_vertex(x: VertexLabel) -> bool:
    """True iff the label has an odd number of 1 bits."""
    return x.popcount() % 2 == 1


def double_label(x: VertexLabel, delta: int) -> VertexLabel:
    """(n+1)-bit label with ``delta`` inserted just before the last bit."""
    if delta not in (0, 1):
        raise ValueError(f"delta must be 0 or 1, got {delta}")
    code = ((x.code >> 1) << 2) | (delta << 1) | (x.code & 1)
    return VertexLabel(x.n + 1, code)


def epsilon_zeta(x: VertexLabel, y: VertexLabel) -> tuple[tuple[int, int], tuple[int, int]]:
    """Endpoint tag pairs ((eps1, zeta1), (eps2, zeta2)) for doubling the edge xy.

    As an unordered set this is {(0,1),(1,0)} when the edge has dimension
    n-1 and the labels end in 1, and {(0,0),(1,1)} otherwise.  The returned
    order fixes eps1 = 0.
    """
    d = dim_of(x, y)
    if d is DIM_INFINITE:
        raise ValueError(f"{x} and {y} are not adjacent")
    if d == x.n - 1 and x.bit(x.n) == 1:
        return ((0, 1), (1, 0))
    return ((0, 0), (1, 1))


def forward_direction(x: VertexLabel, y: VertexLabel) -> ForwardDirection:
    """Orientation tag of x relative to its dimension-(n-1) partner y.

    Points from y to x exactly when x ends in 1 and is an odd vertex.
    """
    if dim_of(x, y) != x.n - 1:
        raise ValueError(f"forward direction needs an edge of dimension {x.n - 1}")
    if x.bit(x.n) == 1 and is_odd_vertex(x):
        return ForwardDirection.FROM_Y_TO_X
    return ForwardDirection.FROM_X_TO_Y


def partner(x: VertexLabel) -> VertexLabel:
    """The unique vertex u with dim_of(x, u) == n - 1."""
    return neighbor(x, x.n - 1)


class LtqGraph:
    """The locally twisted cube LTQ_n with adjacency given by the neighbor rule."""

    def __init__(self, n: int):
        _check_dimension(n)
        self.n = n

    @property
    def vertex_count(self) -> int:
        return 1 << self.n

    @property
    def edge_count(self) -> int:
        return self.n * (1 << (self.n - 1))

    def vertices(self) -> Iterator[VertexLabel]:
        for code in range(1 << self.n):
            yield VertexLabel(self.n, code)

    def neighbors(self, x: VertexLabel) -> list[VertexLabel]:
        return [neighbor(x, i) for i in range(1, self.n + 1)]

    def edges(self) -> Iterator[tuple[VertexLabel, VertexLabel]]:
        """Undirected edges, each once, endpoints ordered by code."""
        for x in self.vertices():
            for i in range(1, self.n + 1):
                y = neighbor(x, i)
                if x.code < y.code:
                    yield (x, y)

    def edges_of_dimension(self, d: int) -> Iterator[tuple[VertexLabel, VertexLabel]]:
        if not 1 <= d <= self.n:
            raise ValueError(f"dimension {d} out of range 1..{self.n}")
        for x, y in self.edges():
            if lambda_index(x, y) == d:
                yield (x, y)
