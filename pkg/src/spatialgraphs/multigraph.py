"""Multigraphs with stable vertex labels and unique edge ids.

Parallel edges and loops are first class.  Every edge carries an integer id
that derived graphs never reuse: deleting or contracting other edges leaves
the id attached to the same piece of the original graph, so cycle edge sets
and minor bookkeeping stay meaningful across a whole reduction sequence.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Union


class GraphError(ValueError):
    """Structural misuse of a graph operation."""


class UnknownVertexError(GraphError):
    pass


class UnknownEdgeError(GraphError):
    pass


class LoopContractionError(GraphError):
    pass


class ScriptError(GraphError):
    """A reduction script step does not apply to the current graph."""


# (edge id, u, v) with u <= v
Edge = tuple[int, int, int]


class MultiGraph:
    """Immutable multigraph over integer vertex labels.

    Construct directly from (id, u, v) triples, or via :func:`from_pairs`
    when ids do not matter.  All mutating operations return new graphs.
    """

    __slots__ = ("_vertices", "_edges", "_incidence", "_cert_cache")

    def __init__(self, vertices: Iterable[int], edges: Iterable[tuple]):
        vs = tuple(sorted({int(v) for v in vertices}))
        vset = set(vs)
        triples = []
        seen_ids = set()
        for eid, u, v in edges:
            eid, u, v = int(eid), int(u), int(v)
            if eid in seen_ids:
                raise GraphError(f"duplicate edge id {eid}")
            seen_ids.add(eid)
            if u not in vset or v not in vset:
                raise UnknownVertexError(f"edge {eid} endpoint outside vertex set")
            if u > v:
                u, v = v, u
            triples.append((eid, u, v))
        triples.sort()
        self._vertices = vs
        self._edges = tuple(triples)
        inc: dict[int, list[tuple[int, int]]] = {v: [] for v in vs}
        for eid, u, v in triples:
            if u == v:
                inc[u].append((eid, u))  # loop listed once
            else:
                inc[u].append((eid, v))
                inc[v].append((eid, u))
        self._incidence = {v: tuple(sorted(pairs)) for v, pairs in inc.items()}
        self._cert_cache = None

    # -- accessors ---------------------------------------------------------

    @property
    def vertices(self) -> tuple[int, ...]:
        return self._vertices

    @property
    def edges(self) -> tuple[Edge, ...]:
        return self._edges

    @property
    def vertex_count(self) -> int:
        return len(self._vertices)

    @property
    def edge_count(self) -> int:
        return len(self._edges)

    def edge_ids(self) -> tuple[int, ...]:
        return tuple(e[0] for e in self._edges)

    def has_vertex(self, v: int) -> bool:
        return v in self._incidence

    def endpoints(self, eid: int) -> tuple[int, int]:
        for e, u, v in self._edges:
            if e == eid:
                return (u, v)
        raise UnknownEdgeError(f"no edge with id {eid}")

    def incident(self, v: int) -> tuple[tuple[int, int], ...]:
        """(edge id, other endpoint) pairs at v; a loop appears once with other == v."""
        try:
            return self._incidence[v]
        except KeyError:
            raise UnknownVertexError(f"no vertex {v}") from None

    def neighbors(self, v: int) -> tuple[int, ...]:
        return tuple(sorted({w for _, w in self.incident(v) if w != v}))

    def loops_at(self, v: int) -> tuple[int, ...]:
        return tuple(eid for eid, w in self.incident(v) if w == v)

    def degree(self, v: int) -> int:
        # a loop contributes 2
        return sum(2 if w == v else 1 for _, w in self.incident(v))

    def edges_between(self, u: int, v: int) -> tuple[int, ...]:
        if u > v:
            u, v = v, u
        return tuple(eid for eid, a, b in self._edges if a == u and b == v)

    def has_edge_between(self, u: int, v: int) -> bool:
        return bool(self.edges_between(u, v))

    def parallel_classes(self) -> dict[tuple[int, int], tuple[int, ...]]:
        out: dict[tuple[int, int], list[int]] = {}
        for eid, u, v in self._edges:
            out.setdefault((u, v), []).append(eid)
        return {k: tuple(ids) for k, ids in out.items()}

    def is_simple(self) -> bool:
        return all(u != v for _, u, v in self._edges) and all(
            len(ids) == 1 for ids in self.parallel_classes().values()
        )

    def isolated_vertices(self) -> tuple[int, ...]:
        return tuple(v for v in self._vertices if not self._incidence[v])

    def next_vertex_label(self) -> int:
        return (max(self._vertices) + 1) if self._vertices else 0

    def next_edge_id(self) -> int:
        return (max(e[0] for e in self._edges) + 1) if self._edges else 0

    def induced(self, keep: Iterable[int]) -> "MultiGraph":
        ks = set(keep)
        missing = ks - set(self._vertices)
        if missing:
            raise UnknownVertexError(f"not vertices: {sorted(missing)}")
        return MultiGraph(ks, [e for e in self._edges if e[1] in ks and e[2] in ks])

    def relabeled(self, mapping: dict[int, int]) -> "MultiGraph":
        """New graph with vertices renamed through a bijective mapping."""
        if len(set(mapping.values())) != len(mapping):
            raise GraphError("relabeling is not injective")
        mv = [mapping[v] for v in self._vertices]
        return MultiGraph(mv, [(e, mapping[u], mapping[v]) for e, u, v in self._edges])

    def __eq__(self, other) -> bool:
        if not isinstance(other, MultiGraph):
            return NotImplemented
        return self._vertices == other._vertices and self._edges == other._edges

    def __hash__(self) -> int:
        return hash((self._vertices, self._edges))

    def __repr__(self) -> str:
        return f"MultiGraph({self.vertex_count} vertices, {self.edge_count} edges)"


def from_pairs(pairs: Iterable[tuple[int, int]], vertices: Iterable[int] = ()) -> MultiGraph:
    """Build a graph from (u, v) pairs; edge ids follow input order from 0."""
    pairs = list(pairs)
    vs = set(vertices)
    for u, v in pairs:
        vs.add(u)
        vs.add(v)
    return MultiGraph(vs, [(i, u, v) for i, (u, v) in enumerate(pairs)])


def complete_graph(n: int, labels: Optional[Iterable[int]] = None) -> MultiGraph:
    vs = list(labels) if labels is not None else list(range(1, n + 1))
    if len(vs) != n:
        raise GraphError("label count does not match n")
    return from_pairs([(vs[i], vs[j]) for i in range(n) for j in range(i + 1, n)])


# -- elementary reductions --------------------------------------------------


def delete_edge(g: MultiGraph, eid: int) -> MultiGraph:
    if eid not in set(g.edge_ids()):
        raise UnknownEdgeError(f"no edge with id {eid}")
    return MultiGraph(g.vertices, [e for e in g.edges if e[0] != eid])


def delete_vertex(g: MultiGraph, v: int) -> MultiGraph:
    if not g.has_vertex(v):
        raise UnknownVertexError(f"no vertex {v}")
    return MultiGraph(
        (u for u in g.vertices if u != v),
        [e for e in g.edges if e[1] != v and e[2] != v],
    )


def contract_edge(g: MultiGraph, eid: int, keep: Optional[int] = None) -> MultiGraph:
    """Contract one edge; the merged vertex takes the ``keep`` label.

    Parallel copies of the contracted edge become loops and are retained.
    No implicit simplification happens here.
    """
    u, v = g.endpoints(eid)
    if u == v:
        raise LoopContractionError(f"edge {eid} is a loop")
    if keep is None:
        keep = u
    if keep not in (u, v):
        raise GraphError(f"keep={keep} is not an endpoint of edge {eid}")
    drop = v if keep == u else u
    new_edges = []
    for e, a, b in g.edges:
        if e == eid:
            continue
        if a == drop:
            a = keep
        if b == drop:
            b = keep
        new_edges.append((e, a, b))
    return MultiGraph((w for w in g.vertices if w != drop), new_edges)


def simplify(g: MultiGraph) -> MultiGraph:
    """Drop loops and collapse each parallel class to its smallest edge id.

    The vertex set is unchanged; a simple input comes back with the same
    edge id set.
    """
    kept = []
    for (u, v), ids in sorted(g.parallel_classes().items()):
        if u == v:
            continue
        kept.append((min(ids), u, v))
    return MultiGraph(g.vertices, kept)


def without_isolated(g: MultiGraph) -> MultiGraph:
    iso = set(g.isolated_vertices())
    if not iso:
        return g
    return MultiGraph((v for v in g.vertices if v not in iso), g.edges)


# -- reduction scripts -------------------------------------------------------


@dataclass(frozen=True)
class DeleteEdge:
    u: int
    v: int


@dataclass(frozen=True)
class ContractEdge:
    # the merged vertex keeps the label that u resolves to
    u: int
    v: int


@dataclass(frozen=True)
class DeleteVertex:
    v: int


Step = Union[DeleteEdge, ContractEdge, DeleteVertex]


@dataclass(frozen=True)
class ReductionScript:
    """Ordered deletions/contractions phrased against original vertex labels.

    Later steps may mention a label that has since been merged away; it is
    resolved through the running label map, so scripts read the way they are
    usually written down: against the labels of the starting graph.
    """

    steps: tuple[Step, ...]

    def __init__(self, steps: Iterable[Step]):
        object.__setattr__(self, "steps", tuple(steps))


@dataclass
class ScriptResult:
    graph: MultiGraph
    # original label -> surviving label, or None once deleted
    vertex_map: dict[int, Optional[int]]
    contracted_edges: tuple[int, ...]
    deleted_edges: tuple[int, ...]

    def branch_sets(self) -> dict[int, frozenset[int]]:
        """Surviving label -> set of original labels merged into it."""
        out: dict[int, set[int]] = {}
        for orig, cur in self.vertex_map.items():
            if cur is not None:
                out.setdefault(cur, set()).add(orig)
        return {k: frozenset(s) for k, s in out.items()}


def apply_script(g: MultiGraph, script: ReductionScript) -> ScriptResult:
    cur = g
    vmap: dict[int, Optional[int]] = {v: v for v in g.vertices}
    contracted: list[int] = []
    deleted: list[int] = []

    def resolve(orig: int, idx: int) -> int:
        if orig not in vmap:
            raise ScriptError(f"step {idx}: label {orig} was never a vertex")
        cur_label = vmap[orig]
        if cur_label is None:
            raise ScriptError(f"step {idx}: vertex {orig} was deleted earlier")
        return cur_label

    for idx, step in enumerate(script.steps):
        if isinstance(step, DeleteEdge):
            a, b = resolve(step.u, idx), resolve(step.v, idx)
            ids = cur.edges_between(a, b)
            if not ids:
                raise ScriptError(f"step {idx}: no edge between {step.u} and {step.v}")
            # with parallels present the smallest id goes first
            cur = delete_edge(cur, min(ids))
            deleted.append(min(ids))
        elif isinstance(step, ContractEdge):
            a, b = resolve(step.u, idx), resolve(step.v, idx)
            if a == b:
                raise ScriptError(f"step {idx}: {step.u} and {step.v} already merged")
            ids = cur.edges_between(a, b)
            if not ids:
                raise ScriptError(f"step {idx}: no edge between {step.u} and {step.v}")
            eid = min(ids)
            cur = contract_edge(cur, eid, keep=a)
            contracted.append(eid)
            for orig, lab in vmap.items():
                if lab == b:
                    vmap[orig] = a
        elif isinstance(step, DeleteVertex):
            a = resolve(step.v, idx)
            cur = delete_vertex(cur, a)
            for orig, lab in vmap.items():
                if lab == a:
                    vmap[orig] = None
        else:
            raise ScriptError(f"step {idx}: unknown step {step!r}")
    return ScriptResult(cur, vmap, tuple(contracted), tuple(deleted))


# -- edge list text format ---------------------------------------------------
#
#   vertices <n>
#   u v          one edge per line; a repeated line is a parallel edge
#   u u          loop
#   vertex u     declares an isolated vertex
#   # comment


def parse_edge_list(text: str) -> MultiGraph:
    n_declared = None
    pairs: list[tuple[int, int]] = []
    extra: list[int] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "vertices":
            if n_declared is not None:
                raise GraphError(f"line {lineno}: duplicate vertices header")
            if len(parts) != 2 or not parts[1].lstrip("-").isdigit():
                raise GraphError(f"line {lineno}: expected 'vertices <n>'")
            n_declared = int(parts[1])
            continue
        if n_declared is None:
            raise GraphError(f"line {lineno}: missing 'vertices <n>' header")
        if parts[0] == "vertex":
            if len(parts) != 2:
                raise GraphError(f"line {lineno}: expected 'vertex <u>'")
            extra.append(int(parts[1]))
            continue
        if len(parts) != 2:
            raise GraphError(f"line {lineno}: expected 'u v'")
        pairs.append((int(parts[0]), int(parts[1])))
    if n_declared is None:
        raise GraphError("missing 'vertices <n>' header")
    g = from_pairs(pairs, vertices=extra)
    if g.vertex_count != n_declared:
        raise GraphError(
            f"header says {n_declared} vertices but {g.vertex_count} appear"
        )
    return g


def format_edge_list(g: MultiGraph, comment: str = "") -> str:
    lines = []
    if comment:
        for piece in comment.splitlines():
            lines.append(f"# {piece}")
    lines.append(f"vertices {g.vertex_count}")
    for v in g.isolated_vertices():
        lines.append(f"vertex {v}")
    for _, u, v in g.edges:
        lines.append(f"{u} {v}")
    return "\n".join(lines) + "\n"
