"""Cycle sets of multigraphs and the two cycle transfer maps.

A cycle is represented by its frozenset of edge ids.  That makes parallel
copies distinct cycles, lets loops (one edge) and doubled edges (two edges)
count as cycles, and keeps every representation stable under deletions and
contractions of other edges.

Beyond plain enumeration this module implements

* ``disjoint_cycle_tuples``: unordered n-tuples of pairwise vertex-disjoint
  cycles,
* ``lift_cycles``: pushing cycles of a minor through a ``MinorModel`` into
  the host graph (injective; branch set paths chosen shortest, ties to the
  smallest vertex id),
* ``phi_map``: the correspondence between cycles of a graph carrying a
  triangle and cycles of its triangle-to-star exchange (surjective with
  fibers of size at most 2).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping, Optional

from .multigraph import MultiGraph, UnknownEdgeError, GraphError

Cycle = frozenset[int]
CycleTuple = frozenset[Cycle]


def all_cycles(g: MultiGraph) -> frozenset[Cycle]:
    """Every cycle of g: loops, parallel pairs, and vertex cycles >= 3."""
    found: set[Cycle] = set()
    for eid, u, v in g.edges:
        if u == v:
            found.add(frozenset([eid]))
    for (u, v), ids in g.parallel_classes().items():
        if u == v:
            continue
        for i in range(len(ids)):
            for j in range(i + 1, len(ids)):
                found.add(frozenset([ids[i], ids[j]]))

    # Vertex cycles of length >= 3, rooted at their smallest vertex.  Each
    # cycle is reached in both directions; the frozenset collapses the pair.
    vs = g.vertices
    for root in vs:
        stack = [(root, [], {root})]
        while stack:
            here, path_edges, on_path = stack.pop()
            for eid, w in g.incident(here):
                if w == here or w < root:
                    continue
                if w == root:
                    if len(path_edges) >= 2:
                        found.add(frozenset(path_edges + [eid]))
                    continue
                if w in on_path:
                    continue
                stack.append((w, path_edges + [eid], on_path | {w}))
    return frozenset(found)


def cycle_vertices(g: MultiGraph, cycle: Cycle) -> frozenset[int]:
    out = set()
    for eid in cycle:
        u, v = g.endpoints(eid)
        out.add(u)
        out.add(v)
    return frozenset(out)


def is_cycle(g: MultiGraph, edge_ids: Iterable[int]) -> bool:
    """Connected and every vertex of the subgraph has degree exactly 2."""
    ids = set(edge_ids)
    if not ids:
        return False
    deg: dict[int, int] = {}
    for eid in ids:
        try:
            u, v = g.endpoints(eid)
        except UnknownEdgeError:
            return False
        deg[u] = deg.get(u, 0) + (2 if u == v else 1)
        if u != v:
            deg[v] = deg.get(v, 0) + 1
    if any(d != 2 for d in deg.values()):
        return False
    # connectivity over the support
    verts = sorted(deg)
    start = verts[0]
    seen = {start}
    frontier = [start]
    adj: dict[int, set[int]] = {v: set() for v in verts}
    for eid in ids:
        u, v = g.endpoints(eid)
        adj[u].add(v)
        adj[v].add(u)
    while frontier:
        nxt = []
        for x in frontier:
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return len(seen) == len(verts)


def cycle_order(g: MultiGraph, cycle: Cycle) -> list[int]:
    """Vertex order around the cycle, starting at the smallest vertex and
    moving toward its smaller-labelled side (loops give a single vertex)."""
    ids = sorted(cycle)
    if len(ids) == 1:
        u, v = g.endpoints(ids[0])
        if u != v:
            raise GraphError("single non-loop edge is not a cycle")
        return [u]
    if len(ids) == 2:
        u, v = g.endpoints(ids[0])
        return sorted((u, v))
    incid: dict[int, list[tuple[int, int]]] = {}
    for eid in ids:
        u, v = g.endpoints(eid)
        incid.setdefault(u, []).append((eid, v))
        incid.setdefault(v, []).append((eid, u))
    start = min(incid)
    nexts = sorted(w for _, w in incid[start])
    order = [start]
    prev_edge = None
    here = start
    target = nexts[0]
    # choose the incident edge leading to the smaller neighbor
    for eid, w in sorted(incid[start]):
        if w == target:
            prev_edge = eid
            break
    here = target
    while here != start:
        order.append(here)
        for eid, w in sorted(incid[here]):
            if eid != prev_edge:
                prev_edge = eid
                here = w
                break
    return order


def format_cycle(g: MultiGraph, cycle: Cycle) -> str:
    return "[" + " ".join(str(v) for v in cycle_order(g, cycle)) + "]"


def parse_cycle(g: MultiGraph, text: str) -> Cycle:
    """Bracket notation -> edge set.  Requires a unique edge between each
    consecutive vertex pair, so it only suits simple stretches of a graph."""
    body = text.strip()
    if not (body.startswith("[") and body.endswith("]")):
        raise GraphError(f"not bracket notation: {text!r}")
    verts = [int(tok) for tok in body[1:-1].split()]
    if not verts:
        raise GraphError("empty cycle")
    if len(verts) == 1:
        loops = g.loops_at(verts[0])
        if len(loops) != 1:
            raise GraphError(f"no unique loop at {verts[0]}")
        return frozenset(loops)
    ids = []
    for a, b in zip(verts, verts[1:] + verts[:1]):
        if len(verts) == 2 and a > b:
            continue  # the pair [u v] closes over the same parallel class
        between = g.edges_between(a, b)
        if len(verts) == 2:
            if len(between) != 2:
                raise GraphError(f"no doubled edge between {a},{b}")
            return frozenset(between)
        if len(between) != 1:
            raise GraphError(f"no unique edge between {a},{b}")
        ids.append(between[0])
    return frozenset(ids)


def _support_masks(g: MultiGraph, cycles: list[Cycle]) -> list[int]:
    index = {v: i for i, v in enumerate(g.vertices)}
    masks = []
    for c in cycles:
        m = 0
        for v in cycle_vertices(g, c):
            m |= 1 << index[v]
        masks.append(m)
    return masks


def disjoint_cycle_tuples(g: MultiGraph, n: int) -> frozenset[CycleTuple]:
    """Unordered n-sets of pairwise vertex-disjoint cycles of g."""
    if n < 1:
        raise GraphError("n must be >= 1")
    cycles = sorted(all_cycles(g), key=sorted)
    if n == 1:
        return frozenset(frozenset([c]) for c in cycles)
    masks = _support_masks(g, cycles)
    out: set[CycleTuple] = set()
    chosen: list[int] = []

    def grow(start: int, used: int, depth: int):
        if depth == n:
            out.add(frozenset(cycles[i] for i in chosen))
            return
        for i in range(start, len(cycles)):
            if masks[i] & used:
                continue
            chosen.append(i)
            grow(i + 1, used | masks[i], depth + 1)
            chosen.pop()

    grow(0, 0, 0)
    return frozenset(out)


def _min_cycle_support(g: MultiGraph) -> int:
    # 1 with a loop present, 2 with a parallel pair, else 3
    if any(u == v for _, u, v in g.edges):
        return 1
    if any(len(ids) > 1 for ids in g.parallel_classes().values()):
        return 2
    return 3


def has_disjoint_cycles(g: MultiGraph, n: int) -> bool:
    """Short-circuiting version of ``disjoint_cycle_tuples(g, n) != {}``."""
    if g.vertex_count < n * _min_cycle_support(g):
        return False
    cycles = sorted(all_cycles(g), key=sorted)
    if len(cycles) < n:
        return False
    masks = _support_masks(g, cycles)

    def grow(start: int, used: int, depth: int) -> bool:
        if depth == n:
            return True
        for i in range(start, len(cycles)):
            if masks[i] & used:
                continue
            if grow(i + 1, used | masks[i], depth + 1):
                return True
        return False

    return grow(0, 0, 0)


def gamma3_empty(g: MultiGraph) -> bool:
    """True iff g has no three pairwise vertex-disjoint cycles."""
    return not has_disjoint_cycles(g, 3)


def z2_decompose(g: MultiGraph, target: Cycle, parts: Iterable[Cycle]) -> bool:
    """Mod-2 sum test in the cycle space over endpoint pairs.

    Edge sets are projected to their endpoint pairs first, so two parallel
    copies of the same pair cancel, matching the simple cycle space.
    """

    def vec(edge_ids: Iterable[int]) -> frozenset[tuple[int, int]]:
        count: dict[tuple[int, int], int] = {}
        for eid in edge_ids:
            u, v = g.endpoints(eid)
            count[(u, v)] = count.get((u, v), 0) + 1
        return frozenset(k for k, c in count.items() if c % 2)

    acc: frozenset[tuple[int, int]] = frozenset()
    for part in parts:
        acc = acc ^ vec(part)
    return acc == vec(target)


# -- minor models and cycle lifting ------------------------------------------


@dataclass(frozen=True)
class MinorModel:
    """Branch sets + edge injection witnessing ``pattern`` as a minor of
    ``host``.  ``branch_sets`` maps pattern vertices to disjoint connected
    host vertex sets; ``edge_map`` injects pattern edge ids into host edge
    ids joining the corresponding branch sets."""

    host: MultiGraph
    pattern: MultiGraph
    branch_sets: Mapping[int, frozenset[int]]
    edge_map: Mapping[int, int]

    def validate(self) -> None:
        seen: set[int] = set()
        for pv, bs in self.branch_sets.items():
            if not bs:
                raise GraphError(f"empty branch set for {pv}")
            if seen & bs:
                raise GraphError("branch sets overlap")
            seen |= bs
            if not _connected_in(self.host, bs):
                raise GraphError(f"branch set of {pv} is not connected")
        if len(set(self.edge_map.values())) != len(self.edge_map):
            raise GraphError("edge map is not injective")
        for peid, heid in self.edge_map.items():
            pu, pv = self.pattern.endpoints(peid)
            hu, hv = self.host.endpoints(heid)
            bu, bv = self.branch_sets[pu], self.branch_sets[pv]
            if pu == pv:
                if not (hu in bu and hv in bu):
                    raise GraphError(f"loop image {heid} leaves its branch set")
            elif not (
                (hu in bu and hv in bv) or (hu in bv and hv in bu)
            ):
                raise GraphError(f"edge image {heid} joins the wrong branch sets")


def _connected_in(g: MultiGraph, vs: frozenset[int]) -> bool:
    start = min(vs)
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for x in frontier:
            for _, w in g.incident(x):
                if w in vs and w not in seen:
                    seen.add(w)
                    nxt.append(w)
        frontier = nxt
    return seen == set(vs)


def _branch_path(g: MultiGraph, inside: frozenset[int], a: int, b: int) -> list[int]:
    """Deterministic shortest path within an induced branch set.

    BFS layer by layer; among equally short predecessors the smallest vertex
    label wins, so lifted cycles do not depend on dict ordering.
    """
    if a == b:
        return []
    dist = {a: 0}
    parent: dict[int, int] = {}
    frontier = [a]
    while frontier and b not in dist:
        nxt = []
        for x in sorted(frontier):
            for w in sorted({w for _, w in g.incident(x) if w in inside and w != x}):
                if w not in dist:
                    dist[w] = dist[x] + 1
                    parent[w] = x
                    nxt.append(w)
                elif dist[w] == dist[x] + 1 and parent.get(w, x) > x:
                    parent[w] = x
        frontier = nxt
    if b not in dist:
        raise GraphError(f"branch set has no path {a} -> {b}")
    path = [b]
    while path[-1] != a:
        path.append(parent[path[-1]])
    path.reverse()
    edges: list[int] = []
    for x, y in zip(path, path[1:]):
        edges.append(min(g.edges_between(x, y)))
    return edges


def lift_cycle(model: MinorModel, pattern_cycle: Cycle) -> Cycle:
    """Image of one pattern cycle in the host graph."""
    pat, host = model.pattern, model.host
    ids = sorted(pattern_cycle)
    if len(ids) == 1:
        (peid,) = ids
        u, v = pat.endpoints(peid)
        if u != v:
            raise GraphError("single edge cycle must be a loop")
        heid = model.edge_map[peid]
        hu, hv = host.endpoints(heid)
        inner = _branch_path(host, model.branch_sets[u], hu, hv)
        return frozenset([heid, *inner])

    order = cycle_order(pat, pattern_cycle)
    if len(ids) == 2:
        order = [order[0], order[1]]
    # walk pattern edges in cyclic order, matching edge ids to vertex steps
    remaining = set(ids)
    step_edges: list[int] = []
    for a, b in zip(order, order[1:] + order[:1]):
        key = (a, b) if a <= b else (b, a)
        cands = [e for e in remaining if tuple(sorted(pat.endpoints(e))) == key]
        step_edges.append(min(cands))
        remaining.discard(min(cands))

    out: set[int] = set()
    k = len(order)
    for i, pv in enumerate(order):
        e_in = step_edges[(i - 1) % k]
        e_out = step_edges[i]
        bs = model.branch_sets[pv]
        h_in = model.edge_map[e_in]
        h_out = model.edge_map[e_out]
        a_in = next(x for x in model.host.endpoints(h_in) if x in bs)
        a_out = next(x for x in model.host.endpoints(h_out) if x in bs)
        out.update(_branch_path(model.host, bs, a_in, a_out))
        out.add(h_out)
    lifted = frozenset(out)
    if not is_cycle(model.host, lifted):
        raise GraphError("lift produced a non-cycle")
    return lifted


def lift_cycles(
    model: MinorModel, tuples: Iterable[CycleTuple]
) -> dict[CycleTuple, CycleTuple]:
    """Lift whole tuples; raises if two inputs collide (the map is injective)."""
    out: dict[CycleTuple, CycleTuple] = {}
    seen: dict[CycleTuple, CycleTuple] = {}
    for t in tuples:
        image = frozenset(lift_cycle(model, c) for c in t)
        if len(image) != len(t):
            raise GraphError("components of a lifted tuple collided")
        if image in seen and seen[image] != t:
            raise GraphError("cycle lifting was not injective")
        seen[image] = t
        out[t] = image
    return out


# -- triangle exchange correspondence ----------------------------------------


@dataclass
class PhiResult:
    exchanged: MultiGraph          # the triangle-to-star exchange of the input
    mapping: dict[CycleTuple, CycleTuple]
    fibers: dict[CycleTuple, tuple[CycleTuple, ...]]
    surjective: bool
    max_fiber: int


def phi_map(g: MultiGraph, triangle: tuple[int, int, int], n: int) -> PhiResult:
    """Cycle correspondence along one triangle-to-star exchange.

    Domain: n-tuples of disjoint cycles of ``g`` whose edge set does not
    contain the whole triangle.  Each tuple maps to the unique tuple of the
    exchanged graph agreeing with it away from the triangle/star edges.
    """
    from .exchange import delta_y, _triangle_edges  # local import, no cycle at import time

    gy = delta_y(g, triangle)
    tri_eids = _triangle_edges(g, triangle)
    tri_by_pair = {}
    for eid in tri_eids:
        u, v = g.endpoints(eid)
        tri_by_pair[frozenset((u, v))] = eid
    x = max(gy.vertices)  # the fresh star center gets the next label
    star_eid = {}
    for eid, u, v in gy.edges:
        if u == x or v == x:
            other = u if v == x else v
            star_eid[other] = eid

    if n == 1:
        domain = [frozenset([c]) for c in all_cycles(g)]
        codomain = {frozenset([c]) for c in all_cycles(gy)}
    else:
        domain = sorted(disjoint_cycle_tuples(g, n), key=lambda t: sorted(map(sorted, t)))
        codomain = set(disjoint_cycle_tuples(gy, n))

    tri_set = frozenset(tri_eids)
    mapping: dict[CycleTuple, CycleTuple] = {}
    for t in domain:
        union = frozenset().union(*t)
        if tri_set <= union:
            continue
        image_parts = []
        for comp in t:
            hit = comp & tri_set
            if not hit:
                image_parts.append(comp)
                continue
            if len(hit) == 1:
                (eid,) = hit
                u, v = g.endpoints(eid)
                image_parts.append((comp - hit) | {star_eid[u], star_eid[v]})
            elif len(hit) == 2:
                corners = set()
                for eid in hit:
                    corners.update(g.endpoints(eid))
                shared = [c for c in corners if all(c in g.endpoints(e) for e in hit)]
                outer = sorted(corners - set(shared))
                image_parts.append((comp - hit) | {star_eid[outer[0]], star_eid[outer[1]]})
            else:
                raise GraphError("component contains the whole triangle")
        image = frozenset(frozenset(p) for p in image_parts)
        for p in image:
            if not is_cycle(gy, p):
                raise GraphError("triangle exchange image is not a cycle")
        mapping[t] = image

    fibers: dict[CycleTuple, list[CycleTuple]] = {}
    for t, img in mapping.items():
        fibers.setdefault(img, []).append(t)
    fib = {k: tuple(v) for k, v in fibers.items()}
    image_set = set(fib)
    surjective = image_set == codomain
    max_fiber = max((len(v) for v in fib.values()), default=0)
    return PhiResult(gy, mapping, fib, surjective, max_fiber)
