"""Canonical paths and edge congestion for the embedding of the doubled
complete graph into LTQ_n.

The canonical path from u to v repeatedly moves along the dimension of
the first differing bit with v; the index of the first differing bit
strictly increases along the path, so the path has at most n steps and
is unique.  Routing every ordered vertex pair (u, v) along its canonical
path loads every directed edge side with exactly 2**(n-1) paths, hence
every undirected edge with 2**n.

The all-pairs sweep is the hot loop of the package.  Three
interchangeable backends produce the same directed-traversal tally:

* ``numba``  - jitted nested loop over ordered pairs (default),
* ``numpy``  - vectorized over sources for each target,
* ``python`` - plain reference loop.

Selection: the ``backend=`` argument, else the ``LTQCROSS_BACKEND``
environment variable, else numba when importable.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from .labels import (
    DIM_INFINITE,
    VertexLabel,
    dim_of,
    is_adjacent,
    lambda_index,
    neighbor,
)

__all__ = [
    "CongestionReport",
    "ResourceLimitError",
    "tau",
    "canonical_path",
    "f_set",
    "v_set",
    "v_set_size",
    "edge_congestion",
    "congestion_report",
    "congestion_csv",
    "available_backends",
    "resolve_backend",
]

DEFAULT_MAX_N = 10

_ENV_BACKEND = "LTQCROSS_BACKEND"


class ResourceLimitError(Exception):
    """Raised when a full congestion sweep is requested above the n cap."""


def tau(v: VertexLabel, u: VertexLabel) -> VertexLabel:
    """One canonical-path step from u toward v: move along the first
    differing bit."""
    return neighbor(u, lambda_index(u, v))


def canonical_path(u: VertexLabel, v: VertexLabel) -> list[VertexLabel]:
    """The unique path from u to v obtained by iterating :func:`tau`.

    For u == v this is the length-0 path [u].
    """
    path = [u]
    cur = u
    while cur != v:
        cur = tau(v, cur)
        path.append(cur)
    return path


def f_set(
    v: VertexLabel, w: VertexLabel, t1: int, t2: int
) -> set[VertexLabel]:
    """All u != v with t1 <= lambda_index(u, v) <= t2 whose canonical path
    to v passes through w.  Computed by enumeration."""
    if v == w:
        raise ValueError("v and w must differ")
    if not 1 <= t1 <= t2 <= v.n:
        raise ValueError(f"need 1 <= t1 <= t2 <= {v.n}, got ({t1}, {t2})")
    out: set[VertexLabel] = set()
    for code in range(1 << v.n):
        u = VertexLabel(v.n, code)
        if u == v:
            continue
        if not t1 <= lambda_index(u, v) <= t2:
            continue
        if w in canonical_path(u, v):
            out.add(u)
    return out


def v_set(x: VertexLabel, y: VertexLabel) -> set[VertexLabel]:
    """All v != x whose canonical-path step at x leads to y."""
    if not is_adjacent(x, y):
        raise ValueError(f"{x} and {y} are not adjacent")
    out: set[VertexLabel] = set()
    for code in range(1 << x.n):
        v = VertexLabel(x.n, code)
        if v != x and tau(v, x) == y:
            out.add(v)
    return out


def v_set_size(x: VertexLabel, y: VertexLabel) -> int:
    return len(v_set(x, y))


def edge_congestion(n: int, e: tuple[VertexLabel, VertexLabel]) -> tuple[int, int, int]:
    """Directed loads (p_xy, p_yx) and total for one edge, by brute force
    over all ordered vertex pairs.

    Independent of the tally sweep in :func:`congestion_report`; the two
    are cross-checked in the tests.
    """
    x, y = e
    if x.n != n or y.n != n:
        raise ValueError("edge endpoints do not have dimension n")
    if dim_of(x, y) is DIM_INFINITE:
        raise ValueError(f"({x}, {y}) is not an edge of LTQ_{n}")
    p_xy = p_yx = 0
    size = 1 << n
    for v_code in range(size):
        v = VertexLabel(n, v_code)
        for u_code in range(size):
            if u_code == v_code:
                continue
            path = canonical_path(VertexLabel(n, u_code), v)
            for a, b in zip(path, path[1:]):
                if a == x and b == y:
                    p_xy += 1
                elif a == y and b == x:
                    p_yx += 1
    return p_xy, p_yx, p_xy + p_yx


@dataclass(frozen=True)
class CongestionReport:
    """Per-edge directed loads for the all-pairs canonical-path routing.

    ``per_edge`` maps (code_x, code_y) with code_x < code_y to
    (p_xy, p_yx, total).
    """

    n: int
    per_edge: dict[tuple[int, int], tuple[int, int, int]]
    max_congestion: int

    def edge(self, x: VertexLabel, y: VertexLabel) -> tuple[int, int, int]:
        a, b = x.code, y.code
        if a > b:
            p_xy, p_yx, tot = self.per_edge[(b, a)]
            return p_yx, p_xy, tot
        return self.per_edge[(a, b)]


# ---------------------------------------------------------------------------
# Sweep backends.  Each returns an int64 tally of shape (2**n, n+1) where
# tally[code, d] counts canonical-path steps leaving ``code`` along
# dimension d, over all ordered pairs (u, v) with v in [v_start, v_stop).
# ---------------------------------------------------------------------------


def _sweep_python(n: int, v_start: int, v_stop: int) -> np.ndarray:
    size = 1 << n
    tally = np.zeros((size, n + 1), dtype=np.int64)
    for v in range(v_start, v_stop):
        for u0 in range(size):
            u = u0
            while u != v:
                d = n - (u ^ v).bit_length() + 1
                mask = 1 << (n - d)
                if d <= n - 2 and (u & 1):
                    mask |= 1 << (n - d - 1)
                tally[u, d] += 1
                u ^= mask
    return tally


def _sweep_numpy(n: int, v_start: int, v_stop: int) -> np.ndarray:
    size = 1 << n
    tally = np.zeros((size, n + 1), dtype=np.int64)
    bitlen = np.zeros(size, dtype=np.int64)
    for i in range(1, n + 1):
        bitlen[(1 << (i - 1)) : (1 << i)] = i
    codes = np.arange(size, dtype=np.int64)
    one = np.int64(1)
    for v in range(v_start, v_stop):
        cur = codes.copy()
        active = cur != v
        while active.any():
            a = cur[active]
            d = n - bitlen[a ^ v] + 1
            shift_lo = np.where(d <= n - 2, n - d - 1, 0)
            mask = (one << (n - d)) | np.where(
                (d <= n - 2) & ((a & 1) == 1), one << shift_lo, 0
            )
            np.add.at(tally, (a, d), 1)
            cur[active] = a ^ mask
            active = cur != v
    return tally


_NUMBA_SWEEP = None


def _get_numba_sweep():
    global _NUMBA_SWEEP
    if _NUMBA_SWEEP is None:
        from numba import njit

        @njit(cache=True)
        def sweep(n, v_start, v_stop, tally):  # pragma: no cover - jitted
            size = 1 << n
            for v in range(v_start, v_stop):
                for u0 in range(size):
                    u = u0
                    while u != v:
                        diff = u ^ v
                        bl = 0
                        while diff:
                            diff >>= 1
                            bl += 1
                        d = n - bl + 1
                        mask = 1 << (n - d)
                        if d <= n - 2 and (u & 1):
                            mask |= 1 << (n - d - 1)
                        tally[u, d] += 1
                        u ^= mask

        _NUMBA_SWEEP = sweep
    return _NUMBA_SWEEP


def _sweep_numba(n: int, v_start: int, v_stop: int) -> np.ndarray:
    size = 1 << n
    tally = np.zeros((size, n + 1), dtype=np.int64)
    _get_numba_sweep()(n, v_start, v_stop, tally)
    return tally


_SWEEPS = {
    "python": _sweep_python,
    "numpy": _sweep_numpy,
    "numba": _sweep_numba,
}


def available_backends() -> list[str]:
    out = ["python", "numpy"]
    try:
        import numba  # noqa: F401

        out.append("numba")
    except ImportError:
        pass
    return out


def resolve_backend(backend: str | None = None) -> str:
    """Pick the sweep backend: argument, then env var, then best available."""
    choice = backend or os.environ.get(_ENV_BACKEND, "").strip().lower() or None
    if choice is not None:
        if choice not in _SWEEPS:
            raise ValueError(
                f"unknown backend {choice!r}; expected one of {sorted(_SWEEPS)}"
            )
        return choice
    return "numba" if "numba" in available_backends() else "numpy"


def _sweep_chunk(args: tuple[str, int, int, int]) -> np.ndarray:
    backend, n, v_start, v_stop = args
    return _SWEEPS[backend](n, v_start, v_stop)


def congestion_tally(
    n: int, *, backend: str | None = None, jobs: int = 1
) -> np.ndarray:
    """Directed traversal tally over all ordered pairs (see backends above).

    With jobs > 1 the target-vertex range is partitioned across worker
    processes; tallies merge by addition, so the result is independent of
    the partition.
    """
    chosen = resolve_backend(backend)
    size = 1 << n
    if jobs <= 1:
        return _SWEEPS[chosen](n, 0, size)
    jobs = min(jobs, size)
    bounds = [(size * k) // jobs for k in range(jobs + 1)]
    chunks = [
        (chosen, n, bounds[k], bounds[k + 1])
        for k in range(jobs)
        if bounds[k] < bounds[k + 1]
    ]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        parts = list(pool.map(_sweep_chunk, chunks))
    return np.sum(parts, axis=0)


def congestion_report(
    n: int,
    *,
    max_n: int = DEFAULT_MAX_N,
    backend: str | None = None,
    jobs: int = 1,
) -> CongestionReport:
    """Directed and total loads for every edge of LTQ_n under the
    all-pairs canonical-path routing."""
    if n < 2:
        raise ValueError(f"dimension must be >= 2, got {n}")
    if n > max_n:
        raise ResourceLimitError(
            f"congestion sweep for n={n} exceeds the cap {max_n}; "
            "raise max_n to override"
        )
    tally = congestion_tally(n, backend=backend, jobs=jobs)
    per_edge: dict[tuple[int, int], tuple[int, int, int]] = {}
    max_cg = 0
    for x in range(1 << n):
        xl = VertexLabel(n, x)
        for d in range(1, n + 1):
            y = neighbor(xl, d).code
            if x < y:
                p_xy = int(tally[x, d])
                p_yx = int(tally[y, d])
                total = p_xy + p_yx
                per_edge[(x, y)] = (p_xy, p_yx, total)
                max_cg = max(max_cg, total)
    return CongestionReport(n=n, per_edge=per_edge, max_congestion=max_cg)


def congestion_csv(report: CongestionReport) -> str:
    """CSV rendering: columns x,y,p_xy,p_yx,total with decimal vertices."""
    lines = ["x,y,p_xy,p_yx,total"]
    for (x, y), (p_xy, p_yx, total) in sorted(report.per_edge.items()):
        lines.append(f"{x},{y},{p_xy},{p_yx},{total}")
    return "\n".join(lines) + "\n"
