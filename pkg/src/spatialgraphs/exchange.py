"""Triangle/star exchange moves and exchange-closed graph families.

``delta_y`` replaces a triangle by a new degree-3 vertex, ``y_delta`` does
the reverse.  ``closure`` explores everything reachable from a seed graph
under a chosen move set, deduplicating by canonical form and remembering one
shortest discovery path per isomorphism class.

Star-to-triangle needs a convention when two neighbors of the degree-3
vertex are already adjacent (the new triangle edge would collapse with the
old one).  Both behaviours are implemented; the closure default is
``collapse="skip"``, which only performs edge-count-preserving exchanges.
The family censuses this library targets are stated for that convention,
and ``closure`` records the convention in its result so manifests can carry
it.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Optional

from .canon import Certificate, canonical_form, degree_sequence
from .cycles import gamma3_empty
from .multigraph import (
    GraphError,
    MultiGraph,
    delete_edge,
    format_edge_list,
    simplify,
)


class ExchangeSiteError(GraphError):
    pass


def triangles(g: MultiGraph) -> tuple[tuple[int, int, int], ...]:
    """All triangles (u < v < w pairwise adjacent); ignores parallels/loops."""
    out = []
    vs = g.vertices
    for i, u in enumerate(vs):
        nu = set(g.neighbors(u))
        for j in range(i + 1, len(vs)):
            v = vs[j]
            if v not in nu:
                continue
            nv = set(g.neighbors(v))
            for k in range(j + 1, len(vs)):
                w = vs[k]
                if w in nu and w in nv:
                    out.append((u, v, w))
    return tuple(out)


def _triangle_edges(g: MultiGraph, t: tuple[int, int, int]) -> tuple[int, int, int]:
    u, v, w = sorted(t)
    ids = []
    for a, b in ((u, v), (u, w), (v, w)):
        between = g.edges_between(a, b)
        if not between:
            raise ExchangeSiteError(f"{t} is not a triangle: no edge {a}-{b}")
        ids.append(min(between))
    return tuple(ids)


def delta_y(g: MultiGraph, t: tuple[int, int, int]) -> MultiGraph:
    """Triangle-to-star: delete the triangle edges, join a fresh vertex to
    the three corners.  Edge count is preserved."""
    u, v, w = sorted(t)
    tri = _triangle_edges(g, t)
    x = g.next_vertex_label()
    base = g
    for eid in tri:
        base = delete_edge(base, eid)
    nid = g.next_edge_id()
    edges = list(base.edges) + [(nid, u, x), (nid + 1, v, x), (nid + 2, w, x)]
    return MultiGraph(list(base.vertices) + [x], edges)


def y_delta(g: MultiGraph, x: int) -> MultiGraph:
    """Star-to-triangle at a degree-3 vertex with three distinct neighbors.

    The vertex and its star go away and the neighbors get a triangle, then
    parallel classes are collapsed, so the result is simple whenever the
    input is.
    """
    if g.degree(x) != 3:
        raise ExchangeSiteError(f"vertex {x} has degree {g.degree(x)}, not 3")
    if g.loops_at(x):
        raise ExchangeSiteError(f"vertex {x} carries a loop")
    nbrs = g.neighbors(x)
    if len(nbrs) != 3:
        raise ExchangeSiteError(f"vertex {x} does not have three distinct neighbors")
    a, b, c = nbrs
    kept = [(e, p, q) for e, p, q in g.edges if p != x and q != x]
    nid = g.next_edge_id()
    kept += [(nid, a, b), (nid + 1, a, c), (nid + 2, b, c)]
    return simplify(MultiGraph((v for v in g.vertices if v != x), kept))


def y_delta_preserves_edges(g: MultiGraph, x: int) -> bool:
    """Whether the star-to-triangle at x would keep the edge count (no
    neighbor pair already adjacent)."""
    nbrs = g.neighbors(x)
    if g.degree(x) != 3 or len(nbrs) != 3 or g.loops_at(x):
        return False
    a, b, c = nbrs
    return not (
        g.has_edge_between(a, b) or g.has_edge_between(a, c) or g.has_edge_between(b, c)
    )


@dataclass(frozen=True)
class Move:
    kind: str  # "dy" or "yd"
    site: tuple[int, ...]  # triangle corners, or the degree-3 vertex


@dataclass
class FamilyRecord:
    certificate: Certificate
    graph: MultiGraph
    provenance: tuple[Move, ...]
    name: Optional[str] = None
    dy_only_reachable: Optional[bool] = None
    gamma3_empty: Optional[bool] = None
    heuristic_name: bool = False

    @property
    def vertex_count(self) -> int:
        return self.graph.vertex_count

    @property
    def edge_count(self) -> int:
        return self.graph.edge_count

    @property
    def degree_sequence(self) -> tuple[int, ...]:
        return degree_sequence(self.graph)


@dataclass(frozen=True)
class Transition:
    source: Certificate
    move: Move
    target: Certificate


@dataclass
class ClosureResult:
    seed_certificate: Certificate
    moves: tuple[str, ...]
    collapse: str
    records: list[FamilyRecord]
    transitions: tuple[Transition, ...]

    def by_certificate(self) -> dict[str, FamilyRecord]:
        return {r.certificate.hex: r for r in self.records}

    def certificates(self) -> frozenset[str]:
        return frozenset(r.certificate.hex for r in self.records)


def closure(
    seed: MultiGraph,
    moves: Iterable[str] = ("dy", "yd"),
    collapse: str = "skip",
) -> ClosureResult:
    """Breadth-first exchange closure of a seed graph.

    moves: subset of {"dy", "yd"}.
    collapse: "skip" performs only edge-count-preserving star-to-triangle
    moves; "simplify" always applies the move and lets parallel classes
    collapse (which can shrink the edge count and grow the family).

    Records are sorted by (vertex count, certificate); each carries the
    first discovery path from the seed.  Every attempted move is logged as a
    transition between certificates, including moves whose target was
    already known.
    """
    move_set = tuple(moves)
    for m in move_set:
        if m not in ("dy", "yd"):
            raise GraphError(f"unknown move kind {m!r}")
    if collapse not in ("skip", "simplify"):
        raise GraphError(f"unknown collapse policy {collapse!r}")

    seed_cert = canonical_form(seed)
    known: dict[bytes, FamilyRecord] = {}
    known[seed_cert.blob] = FamilyRecord(seed_cert, seed, ())
    queue = [known[seed_cert.blob]]
    transitions: list[Transition] = []

    while queue:
        rec = queue.pop(0)
        g = rec.graph
        children: list[tuple[Move, MultiGraph]] = []
        if "dy" in move_set:
            for t in triangles(g):
                children.append((Move("dy", t), delta_y(g, t)))
        if "yd" in move_set:
            for x in g.vertices:
                if g.degree(x) != 3 or len(g.neighbors(x)) != 3 or g.loops_at(x):
                    continue
                if collapse == "skip" and not y_delta_preserves_edges(g, x):
                    continue
                children.append((Move("yd", (x,)), y_delta(g, x)))
        for move, child in children:
            cert = canonical_form(child)
            transitions.append(Transition(rec.certificate, move, cert))
            if cert.blob not in known:
                child_rec = FamilyRecord(cert, child, rec.provenance + (move,))
                known[cert.blob] = child_rec
                queue.append(child_rec)

    records = sorted(
        known.values(), key=lambda r: (r.vertex_count, r.certificate.blob)
    )
    return ClosureResult(seed_cert, move_set, collapse, records, tuple(transitions))


def replay_provenance(seed: MultiGraph, provenance: Iterable[Move]) -> MultiGraph:
    """Re-run a discovery path from the seed."""
    g = seed
    for move in provenance:
        if move.kind == "dy":
            g = delta_y(g, tuple(move.site))
        elif move.kind == "yd":
            g = y_delta(g, move.site[0])
        else:
            raise GraphError(f"unknown move kind {move.kind!r}")
    return g


def annotate_flags(result: ClosureResult, seed: MultiGraph) -> None:
    """Fill in gamma3_empty and reachability-under-dy-only for each record."""
    dy_certs = closure(seed, moves=("dy",)).certificates()
    for rec in result.records:
        rec.dy_only_reachable = rec.certificate.hex in dy_certs
        rec.gamma3_empty = gamma3_empty(rec.graph)


# -- manifest ----------------------------------------------------------------


def write_manifest(result: ClosureResult, out_dir) -> Path:
    """Write manifest.json plus one .edges file per member.

    Unnamed records fall back to G<vertices>_<cert digest prefix>.
    """
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    entries = []
    for rec in result.records:
        # digest, not a prefix of the cert itself: the cert starts with the
        # vertex and edge counts, which coincide across closure members
        digest = hashlib.sha256(rec.certificate.hex.encode()).hexdigest()[:8]
        name = rec.name or f"G{rec.vertex_count}_{digest}"
        entries.append(
            {
                "name": name,
                "certificate": rec.certificate.hex,
                "vertices": rec.vertex_count,
                "edges": rec.edge_count,
                "degree_sequence": list(rec.degree_sequence),
                "dy_only_reachable": rec.dy_only_reachable,
                "gamma3_empty": rec.gamma3_empty,
                "heuristic_name": rec.heuristic_name,
                "provenance": [
                    {"move": m.kind, "site": list(m.site)} for m in rec.provenance
                ],
            }
        )
        (out / f"{name}.edges").write_text(
            format_edge_list(rec.graph, comment=name)
        )
    manifest = {
        "seed_certificate": result.seed_certificate.hex,
        "moves": list(result.moves),
        "collapse_convention": result.collapse,
        "members": entries,
    }
    path = out / "manifest.json"
    path.write_text(json.dumps(manifest, indent=2) + "\n")
    return path
