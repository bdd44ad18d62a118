"""Triangle-star exchanges and closure under them."""

import json

import pytest

from spatialgraphs.canon import is_isomorphic
from spatialgraphs.catalog import family_member
from spatialgraphs.exchange import (
    ExchangeSiteError,
    closure,
    delta_y,
    replay_provenance,
    triangles,
    write_manifest,
    y_delta,
    y_delta_preserves_edges,
)
from spatialgraphs.multigraph import complete_graph, from_pairs, parse_edge_list, simplify


def test_triangle_enumeration():
    assert len(triangles(complete_graph(4))) == 4
    assert len(triangles(complete_graph(6))) == 20
    star = from_pairs([(1, 2), (1, 3), (1, 4)])
    assert triangles(star) == ()


def test_delta_y_shape():
    g = delta_y(complete_graph(4), (1, 2, 3))
    assert g.vertex_count == 5
    assert g.edge_count == 6
    k23 = from_pairs([(1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5)])
    assert is_isomorphic(g, k23) is not None


def test_delta_y_k6_is_the_flagged_member():
    g = delta_y(complete_graph(6), (1, 2, 3))
    assert is_isomorphic(g, family_member("Y7")) is not None


def test_delta_y_rejects_missing_triangle():
    path = from_pairs([(1, 2), (2, 3)])
    with pytest.raises(ExchangeSiteError):
        delta_y(path, (1, 2, 3))


def test_y_delta_undoes_delta_y():
    k6 = complete_graph(6)
    g = delta_y(k6, (1, 2, 3))
    fresh = max(g.vertices)
    back = y_delta(g, fresh)
    assert is_isomorphic(simplify(back), k6) is not None


def test_y_delta_needs_degree_three():
    with pytest.raises(ExchangeSiteError):
        y_delta(complete_graph(5), 1)


def test_y_delta_edge_count_predicate():
    k6 = complete_graph(6)
    g = delta_y(k6, (1, 2, 3))
    fresh = max(g.vertices)
    # reversing right away recreates no parallel edge, so counts survive
    assert y_delta_preserves_edges(g, fresh)
    h = delta_y(complete_graph(4), (1, 2, 3))
    # here vertex 4 still sees all three corners, so the reverse at the
    # fresh vertex duplicates nothing either, but the corner stars overlap
    assert y_delta_preserves_edges(h, max(h.vertices))


def test_closure_of_k6():
    res = closure(complete_graph(6))
    assert len(res.records) == 7
    assert sorted(r.graph.vertex_count for r in res.records) == [6, 7, 7, 8, 8, 9, 10]
    assert all(r.graph.edge_count == 15 for r in res.records)


def test_closure_dy_only_is_smaller():
    res = closure(complete_graph(7), moves=("dy",))
    assert len(res.records) == 14


def test_closure_records_replayable_provenance():
    k6 = complete_graph(6)
    res = closure(k6)
    for rec in res.records:
        g = replay_provenance(k6, rec.provenance)
        assert is_isomorphic(g, rec.graph) is not None


def test_manifest_round_trip(tmp_path, petersen):
    out = tmp_path / "family"
    write_manifest(petersen, out)
    manifest = json.loads((out / "manifest.json").read_text())
    assert manifest["collapse_convention"] == "skip"
    assert len(manifest["members"]) == 7
    for rec in petersen.records:
        text = (out / f"{rec.name}.edges").read_text()
        g = parse_edge_list(text)
        assert is_isomorphic(g, rec.graph) is not None


def test_manifest_fallback_names_stay_distinct(tmp_path):
    # unnamed records with equal vertex counts must not share a file
    res = closure(complete_graph(6))
    out = tmp_path / "raw"
    write_manifest(res, out)
    edge_files = sorted(p.name for p in out.glob("*.edges"))
    assert len(edge_files) == 7
