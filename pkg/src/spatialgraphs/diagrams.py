"""Planar diagrams of graphs with exact rational geometry.

A diagram places vertices at rational points and routes every edge as a
polyline.  All intersection tests run in exact arithmetic over fractions,
and construction certifies generic position: transversal double points
only, no vertex on a foreign edge, no triple points, no overlapping or
self-intersecting polylines.  Over/under information lives on the crossing
records, so reassigning a diagram's crossings is cheap and the geometry is
shared.

Randomly assigning over/under bits to a fixed projection samples honest
spatial embeddings: every assignment of a generic projection is realizable
by a polygonal embedding pushing strands above or below the page.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, replace
from fractions import Fraction
from random import Random
from typing import Iterable, Optional, Sequence, Union

from .cycles import Cycle, cycle_order
from .invariants import GaussLink, Passage
from .multigraph import GraphError, MultiGraph

Point = tuple[Fraction, Fraction]


class GenericityError(GraphError):
    """The geometry violates generic position."""


def _sub(p: Point, q: Point) -> Point:
    return (p[0] - q[0], p[1] - q[1])


def _cross(a: Point, b: Point) -> Fraction:
    return a[0] * b[1] - a[1] * b[0]


def _seg_intersection(p1: Point, p2: Point, q1: Point, q2: Point):
    """Classify the intersection of two closed segments.

    Returns one of
      ("none",), ("overlap",), or ("point", t, s, point)
    with t, s the exact parameters along each segment in [0, 1].
    """
    r = _sub(p2, p1)
    u = _sub(q2, q1)
    denom = _cross(r, u)
    w = _sub(q1, p1)
    if denom == 0:
        if _cross(w, r) != 0:
            return ("none",)
        # collinear: overlapping interiors are a genericity violation
        rr = r[0] * r[0] + r[1] * r[1]
        if rr == 0:
            raise GenericityError("zero-length segment")
        t0 = (w[0] * r[0] + w[1] * r[1]) / rr
        t1 = t0 + (u[0] * r[0] + u[1] * r[1]) / rr
        lo, hi = min(t0, t1), max(t0, t1)
        if hi < 0 or lo > 1:
            return ("none",)
        if hi == 0 or lo == 1:
            # touching at one shared endpoint only
            return ("point", 0 if hi == 0 else 1, None, p1 if hi == 0 else p2)
        return ("overlap",)
    t = _cross(w, u) / denom
    s = _cross(w, r) / denom
    if 0 <= t <= 1 and 0 <= s <= 1:
        pt = (p1[0] + t * r[0], p1[1] + t * r[1])
        return ("point", t, s, pt)
    return ("none",)


def _point_on_segment(p: Point, a: Point, b: Point) -> bool:
    r = _sub(b, a)
    w = _sub(p, a)
    if _cross(r, w) != 0:
        return False
    dot = w[0] * r[0] + w[1] * r[1]
    rr = r[0] * r[0] + r[1] * r[1]
    return 0 <= dot <= rr


@dataclass(frozen=True)
class DiagramEdge:
    eid: int
    u: int
    v: int
    # polyline from position(u) to position(v); interior points are waypoints
    polyline: tuple[Point, ...]

    def segments(self):
        return list(zip(self.polyline, self.polyline[1:]))


@dataclass(frozen=True)
class Crossing:
    cid: int
    edge_a: int
    param_a: Fraction  # segment index + parameter within the segment
    edge_b: int
    param_b: Fraction
    over: str  # "a" or "b"
    point: Point
    dir_a: Point  # direction of edge_a's segment at the crossing (stored orientation)
    dir_b: Point

    @property
    def over_edge(self) -> int:
        return self.edge_a if self.over == "a" else self.edge_b

    @property
    def under_edge(self) -> int:
        return self.edge_b if self.over == "a" else self.edge_a


class SpatialDiagram:
    """A certified-generic polyline diagram of a multigraph."""

    def __init__(
        self,
        graph: MultiGraph,
        positions: dict[int, Point],
        polylines: dict[int, tuple[Point, ...]],
    ):
        self.graph = graph
        self.positions = {v: (Fraction(p[0]), Fraction(p[1])) for v, p in positions.items()}
        if set(self.positions) != set(graph.vertices):
            raise GraphError("positions must cover exactly the vertex set")
        if len({p for p in self.positions.values()}) != len(self.positions):
            raise GenericityError("two vertices share a position")
        edges = {}
        for eid, u, v in graph.edges:
            pl = tuple((Fraction(x), Fraction(y)) for x, y in polylines[eid])
            if pl[0] != self.positions[u] or pl[-1] != self.positions[v]:
                raise GraphError(f"polyline of edge {eid} does not join its endpoints")
            if len(pl) < 2:
                raise GraphError(f"polyline of edge {eid} has no segment")
            edges[eid] = DiagramEdge(eid, u, v, pl)
        self.edges = edges
        self.crossings = self._compute_crossings()
        self._per_edge = self._index_per_edge()

    # -- geometry ------------------------------------------------------------

    def _compute_crossings(self) -> tuple[Crossing, ...]:
        raw = []
        eids = sorted(self.edges)
        vertex_points = set(self.positions.values())
        for e in eids:
            self._check_polyline(self.edges[e], vertex_points)
        for i, ea in enumerate(eids):
            for eb in eids[i + 1 :]:
                raw.extend(self._pair_crossings(self.edges[ea], self.edges[eb]))
        raw.sort(key=lambda c: (c[0], c[1], c[2], c[3]))
        pts = {}
        out = []
        for cid, (ea, pa, eb, pb, pt, da, db) in enumerate(raw):
            if pt in pts:
                raise GenericityError(f"triple point at {pt}")
            pts[pt] = cid
            out.append(Crossing(cid, ea, pa, eb, pb, "a", pt, da, db))
        return tuple(out)

    def _check_polyline(self, de: DiagramEdge, vertex_points: set) -> None:
        segs = de.segments()
        pu, pv = self.positions[de.u], self.positions[de.v]
        own_ends = {pu, pv}
        # interior waypoints must not sit on vertices
        for pt in de.polyline[1:-1]:
            if pt in vertex_points:
                raise GenericityError(f"edge {de.eid} passes through a vertex")
        for idx, (a, b) in enumerate(segs):
            if a == b:
                raise GenericityError(f"edge {de.eid} has a zero-length segment")
            # no vertex in a segment interior
            for vp in vertex_points:
                if vp in (a, b):
                    continue
                if _point_on_segment(vp, a, b):
                    raise GenericityError(f"a vertex lies on edge {de.eid}")
        # self-intersection check between non-adjacent segments
        for i in range(len(segs)):
            for j in range(i + 1, len(segs)):
                res = _seg_intersection(*segs[i], *segs[j])
                if res[0] == "overlap":
                    raise GenericityError(f"edge {de.eid} overlaps itself")
                if res[0] == "point":
                    if j == i + 1:
                        if res[3] == segs[i][1]:
                            continue  # shared waypoint
                        raise GenericityError(f"edge {de.eid} touches itself")
                    # a loop's first and last segments legitimately share the
                    # base vertex
                    if (
                        de.u == de.v
                        and i == 0
                        and j == len(segs) - 1
                        and res[3] == pu
                    ):
                        continue
                    raise GenericityError(f"edge {de.eid} crosses itself")

    def _pair_crossings(self, da: DiagramEdge, db: DiagramEdge):
        shared = ({self.positions[da.u], self.positions[da.v]}
                  & {self.positions[db.u], self.positions[db.v]})
        segs_a, segs_b = da.segments(), db.segments()
        found = []
        for i, (a1, a2) in enumerate(segs_a):
            for j, (b1, b2) in enumerate(segs_b):
                res = _seg_intersection(a1, a2, b1, b2)
                if res[0] == "none":
                    continue
                if res[0] == "overlap":
                    raise GenericityError(
                        f"edges {da.eid} and {db.eid} overlap"
                    )
                _, t, s, pt = res
                if pt in shared:
                    # meeting at a common endpoint vertex is not a crossing,
                    # but only terminal segment tips may do it
                    if self._is_terminal_tip(da, i, t, pt) and self._is_terminal_tip(db, j, s, pt):
                        continue
                    raise GenericityError(
                        f"edges {da.eid} and {db.eid} touch a shared vertex improperly"
                    )
                if t in (0, 1) or s in (0, 1) or t is None or s is None:
                    raise GenericityError(
                        f"edges {da.eid} and {db.eid} touch without crossing"
                    )
                found.append(
                    (
                        da.eid,
                        Fraction(i) + t,
                        db.eid,
                        Fraction(j) + s,
                        pt,
                        _sub(a2, a1),
                        _sub(b2, b1),
                    )
                )
        return found

    @staticmethod
    def _is_terminal_tip(de: DiagramEdge, seg_idx: int, t, pt: Point) -> bool:
        if t is None:
            return False
        segs = de.segments()
        if seg_idx == 0 and t == 0 and pt == de.polyline[0]:
            return True
        if seg_idx == len(segs) - 1 and t == 1 and pt == de.polyline[-1]:
            return True
        return False

    def _index_per_edge(self):
        per: dict[int, list[tuple[Fraction, int, str]]] = {e: [] for e in self.edges}
        for c in self.crossings:
            per[c.edge_a].append((c.param_a, c.cid, "a"))
            per[c.edge_b].append((c.param_b, c.cid, "b"))
        return {e: tuple(sorted(lst)) for e, lst in per.items()}

    # -- over/under ----------------------------------------------------------

    def with_crossings(self, crossings: tuple[Crossing, ...]) -> "SpatialDiagram":
        clone = object.__new__(SpatialDiagram)
        clone.graph = self.graph
        clone.positions = self.positions
        clone.edges = self.edges
        clone.crossings = crossings
        clone._per_edge = self._per_edge
        return clone

    @property
    def crossing_count(self) -> int:
        return len(self.crossings)


def assign_over_under(
    d: SpatialDiagram,
    bits: Union[int, Sequence[int], None] = None,
    seed: Optional[int] = None,
) -> SpatialDiagram:
    """New diagram with over/under chosen by bits (bit i = crossing i) or by
    a seeded RNG.  Bit 0 puts the lexicographically first strand on top."""
    n = d.crossing_count
    if bits is None:
        if seed is None:
            raise GraphError("need bits or a seed")
        bits = Random(seed).getrandbits(n) if n else 0
    if isinstance(bits, int):
        if bits < 0 or bits >= (1 << n):
            raise GraphError(f"bits out of range for {n} crossings")
        seq = [(bits >> i) & 1 for i in range(n)]
    else:
        seq = [1 if b else 0 for b in bits]
        if len(seq) != n:
            raise GraphError(f"expected {n} bits, got {len(seq)}")
    new = tuple(
        replace(c, over="a" if b == 0 else "b") for c, b in zip(d.crossings, seq)
    )
    return d.with_crossings(new)


# -- Gauss code extraction ----------------------------------------------------


def _component_walk(g: MultiGraph, cycle: Cycle) -> list[tuple[int, bool]]:
    """Edges of a cycle in traversal order with direction flags.

    The walk starts at the smallest vertex and heads toward its smallest
    neighbor on the cycle (for a doubled edge, along the smaller edge id;
    a loop is traversed in stored direction).  True means the edge is
    walked from stored u to stored v.
    """
    ids = sorted(cycle)
    if len(ids) == 1:
        return [(ids[0], True)]
    if len(ids) == 2:
        e1, e2 = ids
        u, v = g.endpoints(e1)
        # start at min(u, v): e1 forward (u -> v), e2 backward (v -> u)
        return [(e1, True), (e2, False)]
    order = cycle_order(g, cycle)
    remaining = set(ids)
    out = []
    for a, b in zip(order, order[1:] + order[:1]):
        key = (a, b) if a <= b else (b, a)
        eid = min(
            e for e in remaining if tuple(sorted(g.endpoints(e))) == key
        )
        remaining.discard(eid)
        out.append((eid, g.endpoints(eid)[0] == a))
    return out


def extract_gauss(d: SpatialDiagram, components: Union[Cycle, Iterable[Cycle]]) -> GaussLink:
    """Gauss code of the sub-diagram spanned by disjoint cycles of d's graph.

    Crossings where only one strand belongs to the chosen cycles are not
    passages.  Crossing signs follow the right-handed convention: +1 when
    the under direction is a positive quarter turn of the over direction.
    """
    if isinstance(components, frozenset) and all(isinstance(x, int) for x in components):
        comps = [components]
    else:
        comps = list(components)
    comps = sorted(comps, key=lambda c: (min(cycle_vertices_local(d.graph, c)), sorted(c)))
    all_eids = set()
    for c in comps:
        if all_eids & set(c):
            raise GraphError("components share edges")
        all_eids |= set(c)

    # direction multiplier of each edge as walked, per component
    walk_dirs: dict[int, int] = {}
    sequences: list[list[tuple[int, str]]] = []
    for c in comps:
        seq: list[tuple[int, str]] = []
        for eid, forward in _component_walk(d.graph, c):
            walk_dirs[eid] = 1 if forward else -1
            passages = d._per_edge[eid]
            ordered = passages if forward else tuple(reversed(passages))
            for param, cid, side in ordered:
                other = (
                    d.crossings[cid].edge_b if side == "a" else d.crossings[cid].edge_a
                )
                if other in all_eids:
                    seq.append((cid, side))
        sequences.append(seq)

    out_components = []
    for seq in sequences:
        passages = []
        for cid, side in seq:
            c = d.crossings[cid]
            over = side == c.over
            da = (c.dir_a[0] * walk_dirs[c.edge_a], c.dir_a[1] * walk_dirs[c.edge_a])
            db = (c.dir_b[0] * walk_dirs[c.edge_b], c.dir_b[1] * walk_dirs[c.edge_b])
            d_over, d_under = (da, db) if c.over == "a" else (db, da)
            sign = 1 if _cross(d_over, d_under) > 0 else -1
            passages.append(Passage(cid, over, sign))
        out_components.append(tuple(passages))
    return GaussLink(tuple(out_components))


def cycle_vertices_local(g: MultiGraph, c: Cycle) -> frozenset[int]:
    out = set()
    for eid in c:
        u, v = g.endpoints(eid)
        out.update((u, v))
    return frozenset(out)


# -- convex position construction ---------------------------------------------


def build_convex_diagram(
    g: MultiGraph,
    order: Optional[Sequence[int]] = None,
    seed: int = 0,
    max_attempts: int = 40,
) -> SpatialDiagram:
    """Vertices in convex position (on a parabola, in the given order),
    simple edges as straight chords, parallels and loops as jittered
    polylines.  Retries seeded jitters until the diagram certifies generic.
    """
    vs = list(order) if order is not None else list(g.vertices)
    if sorted(vs) != list(g.vertices):
        raise GraphError("order must enumerate the vertex set")
    last_err: Optional[Exception] = None
    for attempt in range(max_attempts):
        rng = Random(seed * 0x10001 + attempt)
        try:
            return _attempt_convex(g, vs, rng, attempt)
        except GenericityError as err:
            last_err = err
    raise GenericityError(f"no generic drawing found: {last_err}")


def _attempt_convex(g, vs, rng: Random, attempt: int) -> SpatialDiagram:
    positions: dict[int, Point] = {}
    for i, v in enumerate(vs):
        x = Fraction(i)
        if attempt > 0:
            x += Fraction(rng.randrange(-60, 61), 1024)
        positions[v] = (x, x * x)
    polylines: dict[int, tuple[Point, ...]] = {}
    for (u, v), ids in sorted(g.parallel_classes().items()):
        if u == v:
            base = positions[u]
            for k, eid in enumerate(sorted(ids)):
                r1 = Fraction(rng.randrange(200, 400) * (k + 1), 1024)
                r2 = Fraction(rng.randrange(100, 300) * (k + 1), 1024)
                w1 = (base[0] + r1, base[1] + r2)
                w2 = (base[0] + r1, base[1] - r2)
                polylines[eid] = (base, w1, w2, base)
            continue
        pu, pv = positions[u], positions[v]
        mid = ((pu[0] + pv[0]) / 2, (pu[1] + pv[1]) / 2)
        d = _sub(pv, pu)
        perp = (-d[1], d[0])
        for k, eid in enumerate(sorted(ids)):
            if k == 0:
                polylines[eid] = (pu, pv)
            else:
                scale = Fraction(rng.randrange(20, 60) * k, 4096)
                w = (mid[0] + perp[0] * scale, mid[1] + perp[1] * scale)
                polylines[eid] = (pu, w, pv)
    return SpatialDiagram(g, positions, polylines)


def random_knot_diagram(
    seed: int, n: int = 7, max_crossings: int = 16
) -> tuple[SpatialDiagram, Cycle]:
    """A random knot: an n-cycle drawn in convex position with the vertices
    in a shuffled circular order and uniformly random over/under bits.
    Orders yielding more than max_crossings crossings are rejected."""
    from .multigraph import from_pairs

    g = from_pairs([(i, i % n + 1) for i in range(1, n + 1)])
    cycle = frozenset(g.edge_ids())
    rng = Random(seed * 0x10001 + 0xA2)
    for _ in range(200):
        order = list(g.vertices)
        rng.shuffle(order)
        d = build_convex_diagram(g, order=order, seed=rng.randrange(1 << 30))
        if 2 <= d.crossing_count <= max_crossings:
            return assign_over_under(d, seed=rng.randrange(1 << 30)), cycle
    raise GenericityError("no usable knot diagram found")


# -- JSON round trip -----------------------------------------------------------


def _frac_str(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def _frac(s: str) -> Fraction:
    num, _, den = s.partition("/")
    return Fraction(int(num), int(den) if den else 1)


def diagram_to_json(d: SpatialDiagram) -> str:
    doc = {
        "vertices": {
            str(v): [_frac_str(p[0]), _frac_str(p[1])] for v, p in sorted(d.positions.items())
        },
        "edges": {
            str(e.eid): {
                "u": e.u,
                "v": e.v,
                "polyline": [[_frac_str(x), _frac_str(y)] for x, y in e.polyline],
            }
            for e in sorted(d.edges.values(), key=lambda e: e.eid)
        },
        "crossings": [
            {
                "id": c.cid,
                "over_edge": c.over_edge,
                "over_param": _frac_str(c.param_a if c.over == "a" else c.param_b),
                "under_edge": c.under_edge,
                "under_param": _frac_str(c.param_b if c.over == "a" else c.param_a),
            }
            for c in d.crossings
        ],
    }
    return json.dumps(doc, indent=2) + "\n"


def diagram_from_json(text: str) -> SpatialDiagram:
    doc = json.loads(text)
    positions = {
        int(v): (_frac(p[0]), _frac(p[1])) for v, p in doc["vertices"].items()
    }
    polylines = {}
    pairs = []
    for eid_s, rec in doc["edges"].items():
        eid = int(eid_s)
        pairs.append((eid, rec["u"], rec["v"]))
        polylines[eid] = tuple((_frac(x), _frac(y)) for x, y in rec["polyline"])
    g = MultiGraph(positions.keys(), pairs)
    d = SpatialDiagram(g, positions, polylines)
    # replay the stored over/under onto the recomputed crossings
    by_key = {}
    for c in d.crossings:
        by_key[(c.edge_a, c.param_a, c.edge_b, c.param_b)] = c.cid
    bits = [0] * d.crossing_count
    matched = 0
    for rec in doc["crossings"]:
        oe, op = rec["over_edge"], _frac(rec["over_param"])
        ue, up = rec["under_edge"], _frac(rec["under_param"])
        if (oe, op, ue, up) in by_key:
            bits[by_key[(oe, op, ue, up)]] = 0
            matched += 1
        elif (ue, up, oe, op) in by_key:
            bits[by_key[(ue, up, oe, op)]] = 1
            matched += 1
        else:
            raise GraphError("stored crossing does not match the geometry")
    if matched != d.crossing_count:
        raise GraphError("crossing list does not match the geometry")
    return assign_over_under(d, bits)
