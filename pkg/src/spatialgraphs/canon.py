"""Canonical forms and isomorphism for small multigraphs.

Iterative partition refinement on (degree, multiset of neighbor colors with
edge multiplicities), then backtracking over the first non-singleton cell;
the lexicographically smallest relabeled encoding is the certificate.  Loop
and parallel multiplicities enter the encoding exactly, so two graphs get
equal certificates iff they are isomorphic as multigraphs.  Exponential in
the worst case, which is fine at the sizes this library works at (<= 16
vertices or so).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .multigraph import MultiGraph


@dataclass(frozen=True)
class Certificate:
    blob: bytes

    @property
    def hex(self) -> str:
        return self.blob.hex()

    def __lt__(self, other: "Certificate") -> bool:
        return self.blob < other.blob

    def __repr__(self) -> str:
        h = self.hex
        return f"Certificate({h[:16]}{'...' if len(h) > 16 else ''})"


def degree_sequence(g: MultiGraph) -> tuple[int, ...]:
    """Descending degrees; a loop contributes 2 to its vertex."""
    return tuple(sorted((g.degree(v) for v in g.vertices), reverse=True))


def _neighbor_profile(g: MultiGraph, colors: dict[int, int], v: int):
    prof: dict[tuple[int, bool], int] = {}
    for eid, w in g.incident(v):
        key = (colors[w], w == v)
        prof[key] = prof.get(key, 0) + 1
    return tuple(sorted(prof.items()))


def _refine(g: MultiGraph, colors: dict[int, int]) -> dict[int, int]:
    """Refine colors until stable.  Color values are dense ints ordered by
    an isomorphism-invariant structural key, so they compare the same way in
    any relabeling of g."""
    while True:
        keys = {v: (colors[v], _neighbor_profile(g, colors, v)) for v in g.vertices}
        order = sorted(set(keys.values()))
        rank = {k: i for i, k in enumerate(order)}
        new = {v: rank[keys[v]] for v in g.vertices}
        if new == colors:
            return colors
        colors = new


def _cells(g: MultiGraph, colors: dict[int, int]) -> list[list[int]]:
    by: dict[int, list[int]] = {}
    for v in g.vertices:
        by.setdefault(colors[v], []).append(v)
    return [sorted(by[c]) for c in sorted(by)]


def _encode(g: MultiGraph, position: dict[int, int]) -> bytes:
    classes: dict[tuple[int, int], int] = {}
    for _, u, v in g.edges:
        a, b = position[u], position[v]
        if a > b:
            a, b = b, a
        classes[(a, b)] = classes.get((a, b), 0) + 1
    body = ";".join(f"{a},{b},{m}" for (a, b), m in sorted(classes.items()))
    return f"{g.vertex_count}|{g.edge_count}|{body}".encode("ascii")


def _search(g: MultiGraph, colors: dict[int, int], best: list):
    colors = _refine(g, colors)
    cells = _cells(g, colors)
    target = next((c for c in cells if len(c) > 1), None)
    if target is None:
        position: dict[int, int] = {}
        for i, cell in enumerate(cells):
            position[cell[0]] = i
        blob = _encode(g, position)
        if best[0] is None or blob < best[0]:
            best[0] = blob
            best[1] = position
        return
    n_colors = max(colors.values()) + 1
    for v in target:
        branched = dict(colors)
        branched[v] = n_colors  # individualize, then refine again
        _search(g, branched, best)


def _canonical(g: MultiGraph) -> tuple[bytes, dict[int, int]]:
    if g.vertex_count == 0:
        return b"0|0|", {}
    init = {v: 0 for v in g.vertices}
    best: list = [None, None]
    _search(g, init, best)
    return best[0], best[1]


def canonical_form(g: MultiGraph) -> Certificate:
    cached = g._cert_cache
    if cached is None:
        blob, _ = _canonical(g)
        cached = Certificate(blob)
        g._cert_cache = cached
    return cached


def canonical_labeling(g: MultiGraph) -> dict[int, int]:
    """Vertex -> position in the canonical ordering (one witness of it)."""
    blob, position = _canonical(g)
    if g._cert_cache is None:
        g._cert_cache = Certificate(blob)
    return position


def is_isomorphic(g: MultiGraph, h: MultiGraph) -> Optional[dict[int, int]]:
    """A vertex bijection g -> h when the graphs are isomorphic, else None."""
    if g.vertex_count != h.vertex_count or g.edge_count != h.edge_count:
        return None
    if degree_sequence(g) != degree_sequence(h):
        return None
    if canonical_form(g) != canonical_form(h):
        return None
    pg = canonical_labeling(g)
    ph = canonical_labeling(h)
    inv_h = {pos: v for v, pos in ph.items()}
    witness = {v: inv_h[pos] for v, pos in pg.items()}
    _check_witness(g, h, witness)
    return witness


def _check_witness(g: MultiGraph, h: MultiGraph, witness: dict[int, int]) -> None:
    classes_g: dict[tuple[int, int], int] = {}
    for _, u, v in g.edges:
        a, b = witness[u], witness[v]
        if a > b:
            a, b = b, a
        classes_g[(a, b)] = classes_g.get((a, b), 0) + 1
    classes_h: dict[tuple[int, int], int] = {}
    for _, u, v in h.edges:
        key = (u, v) if u <= v else (v, u)
        classes_h[key] = classes_h.get(key, 0) + 1
    if classes_g != classes_h:
        raise AssertionError("internal error: certificate collision")
