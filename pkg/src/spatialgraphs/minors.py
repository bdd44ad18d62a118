"""Minor containment with explicit witnesses.

``has_minor`` runs a memoized reduction search (edge deletions and edge
contractions, isolated vertices dropped along the way) from the host toward
the pattern's vertex/edge counts.  States are deduplicated by canonical
form; intermediate graphs are normalized so parallel multiplicities never
exceed what the pattern could use, which keeps the state space finite for
multigraph patterns such as the doubled square.

A successful search returns a ``MinorModel`` assembled from the contraction
history, so callers can lift cycles through it or validate it independently.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .canon import canonical_form, degree_sequence, is_isomorphic
from .cycles import MinorModel
from .multigraph import (
    GraphError,
    MultiGraph,
    ReductionScript,
    ScriptResult,
    apply_script,
    contract_edge,
    delete_edge,
    delete_vertex,
    simplify,
    without_isolated,
)


def _multiplicity_caps(h: MultiGraph) -> tuple[int, int]:
    loop_cap = 0
    par_cap = 1
    for (u, v), ids in h.parallel_classes().items():
        if u == v:
            loop_cap = max(loop_cap, len(ids))
        else:
            par_cap = max(par_cap, len(ids))
    return par_cap, loop_cap


def _normalize(g: MultiGraph, par_cap: int, loop_cap: int, drop_isolated: bool) -> MultiGraph:
    """Trim parallel classes/loops beyond what the pattern can use."""
    kept = []
    for (u, v), ids in sorted(g.parallel_classes().items()):
        cap = loop_cap if u == v else par_cap
        for eid in sorted(ids)[:cap]:
            kept.append((eid, u, v))
    out = MultiGraph(g.vertices, kept)
    if drop_isolated:
        out = without_isolated(out)
    return out


def _degree_dominates(g: MultiGraph, h: MultiGraph) -> bool:
    """Needed when only deletions remain: h's sorted degrees fit under g's."""
    dg = degree_sequence(g)
    dh = degree_sequence(h)
    if len(dh) > len(dg):
        return False
    return all(a >= b for a, b in zip(dg, dh))


@dataclass
class _State:
    graph: MultiGraph
    # current vertex -> original vertices merged into it
    merged: dict[int, frozenset[int]]


def has_minor(g: MultiGraph, h: MultiGraph, max_states: int = 2_000_000) -> Optional[MinorModel]:
    """A MinorModel of h inside g, or None. Absence means the memoized
    search exhausted every reduction order."""
    if h.vertex_count == 0:
        raise GraphError("empty pattern")
    if any(not h.incident(v) for v in h.vertices):
        raise GraphError("patterns with isolated vertices are not supported")
    par_cap, loop_cap = _multiplicity_caps(h)
    start = _normalize(g, par_cap, loop_cap, drop_isolated=True)
    init = _State(start, {v: frozenset([v]) for v in start.vertices})
    seen: set[bytes] = set()
    budget = [max_states]

    found = _search(init, h, par_cap, loop_cap, seen, budget)
    if found is None:
        return None
    model = _build_model(g, h, found)
    model.validate()
    return model


def _search(
    state: _State,
    h: MultiGraph,
    par_cap: int,
    loop_cap: int,
    seen: set[bytes],
    budget: list,
) -> Optional[tuple[_State, dict[int, int]]]:
    g = state.graph
    nh, mh = h.vertex_count, h.edge_count
    if g.vertex_count < nh or g.edge_count < mh:
        return None
    if g.vertex_count == nh:
        if not _degree_dominates(g, h):
            return None
        if g.edge_count == mh:
            witness = is_isomorphic(h, g)
            if witness is None:
                return None
            return (state, witness)
    cert = canonical_form(g).blob
    if cert in seen:
        return None
    seen.add(cert)
    if budget[0] <= 0:
        raise GraphError("minor search exceeded its state budget")
    budget[0] -= 1

    children: list[_State] = []
    can_contract = g.vertex_count > nh
    for eid, u, v in g.edges:
        if can_contract and u != v:
            child = contract_edge(g, eid, keep=min(u, v))
            child = _normalize(child, par_cap, loop_cap, drop_isolated=True)
            merged = dict(state.merged)
            keep, drop = min(u, v), max(u, v)
            merged[keep] = merged[keep] | merged[drop]
            del merged[drop]
            merged = {v2: s for v2, s in merged.items() if child.has_vertex(v2)}
            children.append(_State(child, merged))
        if g.edge_count > mh:
            child = _normalize(delete_edge(g, eid), par_cap, loop_cap, drop_isolated=True)
            merged = {v2: s for v2, s in state.merged.items() if child.has_vertex(v2)}
            children.append(_State(child, merged))

    for child in children:
        hit = _search(child, h, par_cap, loop_cap, seen, budget)
        if hit is not None:
            return hit
    return None


def _build_model(g: MultiGraph, h: MultiGraph, found) -> MinorModel:
    state, witness = found  # witness: h vertex -> reduced vertex
    reduced = state.graph
    branch_sets = {hv: state.merged[rv] for hv, rv in witness.items()}
    # group pattern edges per endpoint pair, then hand out surviving host
    # edges (ids are original ids) between the matching branch sets
    edge_map: dict[int, int] = {}
    by_pair: dict[tuple[int, int], list[int]] = {}
    for eid, u, v in h.edges:
        key = (u, v) if u <= v else (v, u)
        by_pair.setdefault(key, []).append(eid)
    for (hu, hv), pattern_ids in sorted(by_pair.items()):
        ru, rv = witness[hu], witness[hv]
        avail = sorted(reduced.edges_between(ru, rv))
        if len(avail) < len(pattern_ids):
            raise GraphError("internal error: missing parallel copies in reduced graph")
        for peid, heid in zip(sorted(pattern_ids), avail):
            edge_map[peid] = heid
    return MinorModel(g, h, branch_sets, edge_map)


def one_step_reductions(g: MultiGraph) -> list[tuple[str, MultiGraph]]:
    """All single-edge deletions, single-edge contractions (simplified) and
    single-vertex deletions, deduplicated by certificate."""
    out: list[tuple[str, MultiGraph]] = []
    seen: set[bytes] = set()

    def push(label: str, graph: MultiGraph):
        cert = canonical_form(graph).blob
        if cert not in seen:
            seen.add(cert)
            out.append((label, graph))

    for eid, u, v in g.edges:
        push(f"delete edge {u}-{v} (id {eid})", delete_edge(g, eid))
    for eid, u, v in g.edges:
        if u != v:
            push(f"contract edge {u}-{v} (id {eid})", simplify(contract_edge(g, eid)))
    for v in g.vertices:
        push(f"delete vertex {v}", delete_vertex(g, v))
    return out


@dataclass
class ScriptCheck:
    ok: bool
    result: MultiGraph
    script_result: ScriptResult
    model: Optional[MinorModel]


def verify_minor_script(g: MultiGraph, script: ReductionScript, target: MultiGraph) -> ScriptCheck:
    """Run a reduction script and check the outcome against a target graph.

    The comparison simplifies the result and discards vertices the script
    left isolated (reading a script as a minor derivation allows dropping
    them).  On success the returned model maps the target into the original
    graph, ready for cycle lifting.
    """
    sr = apply_script(g, script)
    reduced = without_isolated(simplify(sr.graph))
    target_s = simplify(target)
    witness = is_isomorphic(target_s, reduced)
    if witness is None:
        return ScriptCheck(False, reduced, sr, None)
    branch_all = sr.branch_sets()
    branch_sets = {tv: branch_all[rv] for tv, rv in witness.items()}
    edge_map: dict[int, int] = {}
    for teid, tu, tv in target_s.edges:
        ru, rv = witness[tu], witness[tv]
        avail = sorted(reduced.edges_between(ru, rv))
        if not avail:
            return ScriptCheck(False, reduced, sr, None)
        edge_map[teid] = avail[0]
    model = MinorModel(g, target_s, branch_sets, edge_map)
    model.validate()
    return ScriptCheck(True, reduced, sr, model)
