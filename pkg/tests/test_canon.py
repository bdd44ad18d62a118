"""Canonical forms and isomorphism checking."""

from spatialgraphs.canon import (
    canonical_form,
    canonical_labeling,
    degree_sequence,
    is_isomorphic,
)
from spatialgraphs.catalog import petersen_family
from spatialgraphs.multigraph import complete_graph, from_pairs


def cycle_graph(labels):
    pairs = list(zip(labels, labels[1:] + labels[:1]))
    return from_pairs(pairs)


def test_certificate_is_relabel_invariant():
    g = from_pairs([(1, 2), (2, 3), (3, 1), (3, 4)])
    h = g.relabeled({1: 9, 2: 7, 3: 5, 4: 3})
    assert canonical_form(g) == canonical_form(h)


def test_certificate_separates_same_degree_sequence():
    hexagon = cycle_graph([1, 2, 3, 4, 5, 6])
    two_triangles = from_pairs([(1, 2), (2, 3), (3, 1), (4, 5), (5, 6), (6, 4)])
    assert degree_sequence(hexagon) == degree_sequence(two_triangles)
    assert canonical_form(hexagon) != canonical_form(two_triangles)


def test_certificate_sees_multiplicity():
    single = from_pairs([(1, 2)])
    double = from_pairs([(1, 2), (1, 2)])
    assert canonical_form(single) != canonical_form(double)


def test_isomorphism_witness_is_a_real_map():
    g = cycle_graph([1, 2, 3, 4, 5])
    h = cycle_graph([10, 30, 50, 20, 40])
    phi = is_isomorphic(g, h)
    assert phi is not None
    for _, u, v in g.edges:
        assert h.has_edge_between(phi[u], phi[v])


def test_isomorphism_rejects():
    assert is_isomorphic(cycle_graph([1, 2, 3, 4]), complete_graph(4)) is None


def test_canonical_labeling_realizes_certificate():
    g = from_pairs([(1, 2), (2, 3), (3, 1), (1, 4)])
    lab = canonical_labeling(g)
    assert sorted(lab.keys()) == sorted(g.vertices)


def test_family_certificates_pairwise_distinct(petersen):
    certs = [rec.certificate for rec in petersen.records]
    assert len(set(certs)) == len(certs) == 7


def test_degree_sequence_descending():
    g = from_pairs([(1, 2), (2, 3), (2, 4)])
    assert degree_sequence(g) == (3, 1, 1, 1)
