"""Cycle enumeration, disjoint cycle systems, and cycle arithmetic."""

import pytest

from spatialgraphs.catalog import family_member, fixture
from spatialgraphs.cycles import (
    all_cycles,
    cycle_order,
    cycle_vertices,
    disjoint_cycle_tuples,
    format_cycle,
    gamma3_empty,
    has_disjoint_cycles,
    parse_cycle,
    phi_map,
    z2_decompose,
)
from spatialgraphs.multigraph import complete_graph, from_pairs


def tuples_as_text(g, tuples):
    return {frozenset(format_cycle(g, c) for c in t) for t in tuples}


def test_k4_cycle_count():
    assert len(all_cycles(complete_graph(4))) == 7


def test_k7_cycle_count():
    assert len(all_cycles(complete_graph(7))) == 1172


def test_k7_hamiltonian_cycle_count():
    k7 = complete_graph(7)
    assert sum(1 for c in all_cycles(k7) if len(cycle_vertices(k7, c)) == 7) == 360


def test_disjoint_pair_counts():
    assert len(disjoint_cycle_tuples(complete_graph(6), 2)) == 10
    assert len(disjoint_cycle_tuples(complete_graph(7), 2)) == 175


def test_k7_has_no_disjoint_triple():
    k7 = complete_graph(7)
    assert gamma3_empty(k7)
    assert not has_disjoint_cycles(k7, 3)
    assert disjoint_cycle_tuples(k7, 3) == frozenset()


def test_multigraph_cycles_include_bigons():
    d4 = fixture("D4")
    cycles = all_cycles(d4)
    assert len(cycles) == 20
    bigons = [c for c in cycles if len(cycle_vertices(d4, c)) == 2]
    assert len(bigons) == 4
    assert len(disjoint_cycle_tuples(d4, 2)) == 2


def test_disjoint_pair_counts_across_family():
    expected = {"P7": 9, "Y7": 9, "K44me": 9, "P8": 8, "P9": 7, "P10": 6}
    for name, count in expected.items():
        assert len(disjoint_cycle_tuples(family_member(name), 2)) == count


def test_n9_has_a_disjoint_triple(n9):
    triples = tuples_as_text(n9, disjoint_cycle_tuples(n9, 3))
    assert frozenset(["[1 2 3]", "[4 5 6]", "[7 8 9]"]) in triples


def test_cycle_text_round_trip(n9):
    for cyc in sorted(all_cycles(n9))[:40]:
        text = format_cycle(n9, cyc)
        assert parse_cycle(n9, text) == cyc


def test_cycle_order_starts_at_smallest(n9):
    cyc = parse_cycle(n9, "[1 2 8 5]")
    order = cycle_order(n9, cyc)
    assert order[0] == 1
    # tie between the two neighbors is broken toward the smaller label
    assert order[1] < order[-1]


def test_parse_cycle_rejects_non_cycles(n9):
    with pytest.raises(Exception):
        parse_cycle(n9, "[1 2 4]")


def test_z2_decompose_examples(n9):
    checks = [
        ("[1 2 4 5]", ["[1 2 6 5]", "[4 2 6 5]"]),
        ("[2 6 9 3 4]", ["[4 3 2]", "[6 9 3 2]"]),
        ("[1 5 3 4 2 6]", ["[3 4 5]", "[4 5 6]", "[1 5 6]", "[2 4 6]"]),
        ("[1 5 3 4 2 6]", ["[1 2 6]", "[1 2 3]", "[2 3 4]", "[1 3 5]"]),
    ]
    for target, parts in checks:
        assert z2_decompose(
            n9, parse_cycle(n9, target), [parse_cycle(n9, p) for p in parts]
        )


def test_z2_decompose_trivial_and_failing(n9):
    gamma = parse_cycle(n9, "[1 2 3]")
    other = parse_cycle(n9, "[4 5 6]")
    assert z2_decompose(n9, gamma, [gamma])
    assert not z2_decompose(n9, gamma, [other])


def test_phi_map_small_example():
    k4 = complete_graph(4)
    res = phi_map(k4, (1, 2, 3), 1)
    assert res.surjective
    assert res.max_fiber == 2
    assert len(res.fibers) == 3


def test_phi_map_on_k7_triangles_bounded_fibers():
    k7 = complete_graph(7)
    for n in (1, 2):
        res = phi_map(k7, (1, 2, 3), n)
        assert res.surjective
        assert res.max_fiber <= 2


def test_phi_map_counts_match_exchange():
    # pairs of the source that avoid the full triangle map onto pairs of the
    # exchanged graph; the one triangle-containing pair of K6 is dropped
    k6 = complete_graph(6)
    res = phi_map(k6, (1, 2, 3), 2)
    assert len(res.mapping) == len(disjoint_cycle_tuples(k6, 2)) - 1
    assert res.surjective
    assert len(res.fibers) == len(disjoint_cycle_tuples(res.exchanged, 2)) == 9
    assert sum(len(f) for f in res.fibers.values()) == len(res.mapping)
