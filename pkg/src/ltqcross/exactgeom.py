"""Exact planar geometry over the rationals: segment intersection
classification, polyline crossing counting, and good-drawing validation.

Every geometric decision is made in exact rational (or scaled integer)
arithmetic; there is no tolerance anywhere.  Floating point appears only
in the conservative bounding-box prefilter, whose boxes are padded
outward by several ulps so it can only pass extra candidate pairs to the
exact tests, never drop a real one.

Good-drawing rules checked: an edge must not cross itself, adjacent
edges must not cross, no two edges may cross more than once, no three
edges may pass through a common crossing point, and no edge may pass
through a vertex other than its endpoints.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Hashable, Iterable, Sequence

import numpy as np

__all__ = [
    "Point",
    "GeometryError",
    "SegmentIntersection",
    "ViolationKind",
    "Violation",
    "CrossingReport",
    "rational",
    "point",
    "orient",
    "segment_intersect",
    "count_crossings",
    "is_good_drawing",
]

Point = tuple[Fraction, Fraction]


class GeometryError(ValueError):
    """Malformed geometric input (bad polyline, inconsistent vertices)."""


def rational(value) -> Fraction:
    """Coerce to Fraction; floats are rejected to keep inputs exact."""
    if isinstance(value, float):
        raise TypeError(f"refusing float coordinate {value!r}; pass a Fraction, int, or 'p/q' string")
    return Fraction(value)


def point(x, y) -> Point:
    return (rational(x), rational(y))


def orient(a, b, c):
    """Twice the signed area of triangle abc; sign gives the turn direction."""
    return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])


def _on_bbox(p, a, b) -> bool:
    """Whether p lies inside the bounding box of segment ab (p collinear)."""
    if a[0] <= b[0]:
        okx = a[0] <= p[0] <= b[0]
    else:
        okx = b[0] <= p[0] <= a[0]
    if not okx:
        return False
    if a[1] <= b[1]:
        return a[1] <= p[1] <= b[1]
    return b[1] <= p[1] <= a[1]


@dataclass(frozen=True)
class SegmentIntersection:
    kind: str  # "none" | "proper" | "endpoint_touch" | "overlap"
    point: Point | None = None


NONE = "none"
PROPER = "proper"
ENDPOINT_TOUCH = "endpoint_touch"
OVERLAP = "overlap"


def _proper_point(p1, p2, p3, p4, o3, o4) -> tuple:
    """Interior intersection point of segments p1p2 and p3p4."""
    if isinstance(o3, Fraction) or isinstance(o4, Fraction):
        t = o3 / (o3 - o4)
    else:
        t = Fraction(o3, o3 - o4)
    return (p1[0] + t * (p2[0] - p1[0]), p1[1] + t * (p2[1] - p1[1]))


def _classify(p1, p2, p3, p4) -> SegmentIntersection:
    """Classify the intersection of segments p1p2 and p3p4 (exact)."""
    o1 = orient(p1, p2, p3)
    o2 = orient(p1, p2, p4)
    o3 = orient(p3, p4, p1)
    o4 = orient(p3, p4, p2)

    if o1 == 0 and o2 == 0:
        # collinear lines: overlap, single-point touch, or disjoint
        touches = []
        for p, (a, b) in ((p3, (p1, p2)), (p4, (p1, p2)), (p1, (p3, p4)), (p2, (p3, p4))):
            if _on_bbox(p, a, b):
                touches.append(p)
        if not touches:
            return SegmentIntersection(NONE)
        distinct = []
        for p in touches:
            if p not in distinct:
                distinct.append(p)
        if len(distinct) == 1:
            return SegmentIntersection(ENDPOINT_TOUCH, distinct[0])
        return SegmentIntersection(OVERLAP)

    if ((o1 > 0 > o2) or (o1 < 0 < o2)) and ((o3 > 0 > o4) or (o3 < 0 < o4)):
        return SegmentIntersection(PROPER, _proper_point(p1, p2, p3, p4, o3, o4))

    # a zero orientation with the point inside the other segment's box
    if o1 == 0 and _on_bbox(p3, p1, p2):
        return SegmentIntersection(ENDPOINT_TOUCH, p3)
    if o2 == 0 and _on_bbox(p4, p1, p2):
        return SegmentIntersection(ENDPOINT_TOUCH, p4)
    if o3 == 0 and _on_bbox(p1, p3, p4):
        return SegmentIntersection(ENDPOINT_TOUCH, p1)
    if o4 == 0 and _on_bbox(p2, p3, p4):
        return SegmentIntersection(ENDPOINT_TOUCH, p2)
    return SegmentIntersection(NONE)


def segment_intersect(s1: tuple[Point, Point], s2: tuple[Point, Point]) -> SegmentIntersection:
    """Exact classification of two segments with distinct endpoints."""
    (p1, p2), (p3, p4) = s1, s2
    if p1 == p2 or p3 == p4:
        raise GeometryError("zero-length segment")
    return _classify(p1, p2, p3, p4)


class ViolationKind(Enum):
    SELF_CROSS = "SELF_CROSS"
    ADJACENT_CROSS = "ADJACENT_CROSS"
    DOUBLE_CROSS = "DOUBLE_CROSS"
    TRIPLE_POINT = "TRIPLE_POINT"
    VERTEX_ON_EDGE = "VERTEX_ON_EDGE"


@dataclass(frozen=True)
class Violation:
    kind: ViolationKind
    edges: tuple
    point: Point | None = None
    detail: str = ""


@dataclass
class CrossingReport:
    """Crossings between distinct edges plus good-drawing violations."""

    crossings: list[tuple[Hashable, Hashable, Point]] = field(default_factory=list)
    violations: list[Violation] = field(default_factory=list)

    @property
    def total(self) -> int:
        return len(self.crossings)

    def pair_count(self, e: Hashable, f: Hashable) -> int:
        return sum(1 for a, b, _ in self.crossings if {a, b} == {e, f})

    def violation_kinds(self) -> set[ViolationKind]:
        return {v.kind for v in self.violations}


# ---------------------------------------------------------------------------
# Polyline crossing counting
# ---------------------------------------------------------------------------


class _Edge:
    __slots__ = ("eid", "va", "vb", "pts", "wpts")

    def __init__(self, eid, va, vb, pts):
        self.eid = eid
        self.va = va
        self.vb = vb
        self.pts = pts
        self.wpts = pts  # working coordinates, possibly integer-scaled


def _validate_edges(edges) -> tuple[list[_Edge], dict]:
    parsed: list[_Edge] = []
    vertex_pos: dict = {}
    seen_ids = set()
    for item in edges:
        try:
            eid, (va, vb), pts = item
        except (TypeError, ValueError):
            raise GeometryError(f"bad edge record: {item!r}") from None
        if eid in seen_ids:
            raise GeometryError(f"duplicate edge id {eid!r}")
        seen_ids.add(eid)
        pts = [(rational(x), rational(y)) for (x, y) in pts]
        if len(pts) < 2:
            raise GeometryError(f"edge {eid!r}: polyline needs at least 2 points")
        for a, b in zip(pts, pts[1:]):
            if a == b:
                raise GeometryError(f"edge {eid!r}: zero-length segment at {a}")
        for vid, p in ((va, pts[0]), (vb, pts[-1])):
            if vid in vertex_pos:
                if vertex_pos[vid] != p:
                    raise GeometryError(
                        f"vertex {vid!r} drawn at two positions: {vertex_pos[vid]} and {p}"
                    )
            else:
                vertex_pos[vid] = p
        parsed.append(_Edge(eid, va, vb, pts))
    return parsed, vertex_pos


def _scale_to_ints(parsed: list[_Edge]) -> int | None:
    """Rescale all coordinates to plain ints when the common denominator
    is tame; predicates then run on fast integer arithmetic."""
    denom = 1
    for e in parsed:
        for x, y in e.pts:
            denom = math.lcm(denom, x.denominator, y.denominator)
            if denom.bit_length() > 4096:
                return None
    for e in parsed:
        e.wpts = [
            (x.numerator * (denom // x.denominator), y.numerator * (denom // y.denominator))
            for x, y in e.pts
        ]
    return denom


def _float_bboxes(segs) -> np.ndarray:
    """Conservative float bounding boxes, padded outward by a few ulps."""
    out = np.empty((len(segs), 4), dtype=np.float64)
    for k, (_, _, a, b) in enumerate(segs):
        xs = sorted((float(a[0]), float(b[0])))
        ys = sorted((float(a[1]), float(b[1])))
        out[k, 0] = math.nextafter(math.nextafter(xs[0], -math.inf), -math.inf)
        out[k, 1] = math.nextafter(math.nextafter(xs[1], math.inf), math.inf)
        out[k, 2] = math.nextafter(math.nextafter(ys[0], -math.inf), -math.inf)
        out[k, 3] = math.nextafter(math.nextafter(ys[1], math.inf), math.inf)
    return out


def _candidate_pairs(boxes: np.ndarray) -> Iterable[tuple[int, int]]:
    """Pairs of segments with overlapping (padded) boxes, via a uniform grid.

    A pair is emitted at the lexicographically smallest grid cell the two
    boxes share, so each pair appears exactly once.
    """
    m = len(boxes)
    if m < 2:
        return
    widths = np.maximum(boxes[:, 1] - boxes[:, 0], boxes[:, 3] - boxes[:, 2])
    finite = widths[np.isfinite(widths)]
    cell = float(np.median(finite)) if len(finite) else 1.0
    if not math.isfinite(cell) or cell <= 0.0:
        cell = 1.0
    inv = 1.0 / cell
    lox = np.floor(boxes[:, 0] * inv).astype(np.int64, copy=False)
    hix = np.floor(boxes[:, 1] * inv).astype(np.int64, copy=False)
    loy = np.floor(boxes[:, 2] * inv).astype(np.int64, copy=False)
    hiy = np.floor(boxes[:, 3] * inv).astype(np.int64, copy=False)
    buckets: dict[tuple[int, int], list[int]] = {}
    for i in range(m):
        for cx in range(lox[i], hix[i] + 1):
            for cy in range(loy[i], hiy[i] + 1):
                buckets.setdefault((cx, cy), []).append(i)
    bx = boxes
    for (cx, cy), members in buckets.items():
        if len(members) < 2:
            continue
        for a in range(len(members)):
            i = members[a]
            for b in range(a + 1, len(members)):
                j = members[b]
                if bx[i, 0] > bx[j, 1] or bx[j, 0] > bx[i, 1]:
                    continue
                if bx[i, 2] > bx[j, 3] or bx[j, 2] > bx[i, 3]:
                    continue
                # emit only at the first shared cell
                if cx != max(lox[i], lox[j]) or cy != max(loy[i], loy[j]):
                    continue
                yield (i, j) if i < j else (j, i)


def count_crossings(edges) -> CrossingReport:
    """Count proper crossings between distinct polyline edges and collect
    good-drawing violations.

    Touches at shared endpoint vertices are not crossings; a bend joint of
    one polyline lying on another edge counts as a crossing when the
    polyline passes transversally through it, and is reported as a
    violation when it merely touches.  Counting proceeds even when
    violations exist; the report carries both.
    """
    parsed, vertex_pos = _validate_edges(edges)
    scale = _scale_to_ints(parsed)
    wvertex = {}
    for vid, p in vertex_pos.items():
        if scale is None:
            wvertex[vid] = p
        else:
            wvertex[vid] = (
                p[0].numerator * (scale // p[0].denominator),
                p[1].numerator * (scale // p[1].denominator),
            )
    wvertex_points = {}
    for vid, wp in wvertex.items():
        wvertex_points.setdefault(wp, []).append(vid)

    # flatten segments: (edge_index, seg_index, a, b) in working coords
    segs = []
    for ei, e in enumerate(parsed):
        for si in range(len(e.wpts) - 1):
            segs.append((ei, si, e.wpts[si], e.wpts[si + 1]))

    def to_original(p) -> Point:
        if scale is None:
            return (Fraction(p[0]), Fraction(p[1]))
        return (Fraction(p[0], scale), Fraction(p[1], scale))

    crossings: dict[tuple[int, int, tuple], Point] = {}
    violations: list[Violation] = []
    seen_violations: set = set()

    def add_violation(kind, eids, p, detail=""):
        key = (kind, tuple(sorted(map(repr, eids))), p)
        if key in seen_violations:
            return
        seen_violations.add(key)
        violations.append(
            Violation(kind, tuple(eids), None if p is None else to_original(p), detail)
        )

    def joint_index(e: _Edge, wp) -> int | None:
        """Polyline index of wp within e (interior joints only)."""
        for k in range(1, len(e.wpts) - 1):
            if e.wpts[k] == wp:
                return k
        return None

    self_cross_edges = set()

    boxes = _float_bboxes(segs)
    for i, j in _candidate_pairs(boxes):
        ei, si, a1, b1 = segs[i]
        ej, sj, a2, b2 = segs[j]
        if ei == ej:
            e = parsed[ei]
            lo, hi = min(si, sj), max(si, sj)
            res = _classify(a1, b1, a2, b2)
            if res.kind == NONE:
                continue
            if hi == lo + 1 and res.kind == ENDPOINT_TOUCH:
                continue  # shared bend joint of consecutive segments
            if e.eid not in self_cross_edges:
                self_cross_edges.add(e.eid)
                p = res.point if res.kind != OVERLAP else None
                add_violation(ViolationKind.SELF_CROSS, (e.eid,), p, "polyline intersects itself")
            continue

        e, f = parsed[ei], parsed[ej]
        res = _classify(a1, b1, a2, b2)
        if res.kind == NONE:
            continue
        if res.kind == OVERLAP:
            add_violation(
                ViolationKind.DOUBLE_CROSS, (e.eid, f.eid), None, "collinear overlap"
            )
            continue
        p = res.point
        shared = {wvertex[v] for v in (e.va, e.vb) if v in (f.va, f.vb)}
        if p in shared:
            continue
        if res.kind == PROPER:
            crossings[(ei, ej, p)] = to_original(p)
            continue

        # endpoint touch away from a shared vertex
        ends_e = (e.wpts[0], e.wpts[-1])
        ends_f = (f.wpts[0], f.wpts[-1])
        if p in ends_e or p in ends_f or p in wvertex_points:
            add_violation(
                ViolationKind.VERTEX_ON_EDGE,
                (e.eid, f.eid),
                p,
                "edge passes through a vertex that is not its endpoint",
            )
            continue
        ke = joint_index(e, p)
        kf = joint_index(f, p)
        if ke is not None and kf is not None:
            add_violation(
                ViolationKind.VERTEX_ON_EDGE,
                (e.eid, f.eid),
                p,
                "coincident polyline joints",
            )
            continue
        if ke is not None:
            bent, other, oa, ob = e, f, a2, b2
            k = ke
        else:
            bent, other, oa, ob = f, e, a1, b1
            k = kf
        s_prev = orient(oa, ob, bent.wpts[k - 1])
        s_next = orient(oa, ob, bent.wpts[k + 1])
        if (s_prev > 0 > s_next) or (s_prev < 0 < s_next):
            # transversal passage through a bend joint: one crossing
            crossings[(ei, ej, p)] = to_original(p)
        else:
            add_violation(
                ViolationKind.VERTEX_ON_EDGE,
                (bent.eid, other.eid),
                p,
                "polyline joint touches another edge",
            )

    # assemble per-pair statistics
    by_pair: dict[tuple[int, int], list] = {}
    by_point: dict[tuple, set] = {}
    out_crossings = []
    for (ei, ej, wp), p in crossings.items():
        by_pair.setdefault((ei, ej), []).append(p)
        by_point.setdefault(wp, set()).update((ei, ej))
        out_crossings.append((ei, ej, p))

    for (ei, ej), pts in sorted(by_pair.items()):
        e, f = parsed[ei], parsed[ej]
        if len(pts) >= 2:
            add_violation(
                ViolationKind.DOUBLE_CROSS,
                (e.eid, f.eid),
                None,
                f"{len(pts)} crossings between one edge pair",
            )
        if {e.va, e.vb} & {f.va, f.vb}:
            add_violation(
                ViolationKind.ADJACENT_CROSS,
                (e.eid, f.eid),
                None,
                "adjacent edges cross",
            )
    for wp, eset in by_point.items():
        if len(eset) >= 3:
            add_violation(
                ViolationKind.TRIPLE_POINT,
                tuple(sorted((parsed[k].eid for k in eset), key=repr)),
                wp,
                f"{len(eset)} edges through one point",
            )

    out_crossings.sort(key=lambda t: (t[0], t[1], t[2]))
    report = CrossingReport(
        crossings=[(parsed[a].eid, parsed[b].eid, p) for a, b, p in out_crossings],
        violations=violations,
    )
    return report


def is_good_drawing(edges) -> tuple[bool, list[Violation]]:
    """True iff the drawing has no good-drawing violations."""
    report = count_crossings(edges)
    return (not report.violations, report.violations)
