import math

import networkx as nx
import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from dicolor.digraph import (
    INFINITE, Digraph, acyclic_subset_table, count_cycles_of_length, degree_sequence,
    enumerate_induced_cycles, find_cycle, girth, is_acyclic, is_strongly_connected,
    iter_subsets, mask_of, parse_edge_list, shortest_cycle,
    strongly_connected_components, to_dot, to_edge_list, vertices,
)
from dicolor.errors import CapacityError, DigraphError, EdgeListError
from dicolor.families import (
    d_tournament, directed_cycle, random_digraph, random_tournament, transitive_tournament,
)

from conftest import C3, DIGON, all_digraphs, nx_acyclic, to_nx


@st.composite
def digraphs(draw, max_n=8):
    n = draw(st.integers(0, max_n))
    pairs = [(u, v) for u in range(n) for v in range(n) if u != v]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True) if pairs else st.just([]))
    return Digraph(n, chosen)


class TestParse:
    def test_three_cycle(self):
        assert parse_edge_list("3 3\n0 1\n1 2\n2 0") == C3

    def test_single_vertex(self):
        d = parse_edge_list("1 0")
        assert d.n == 1 and d.arcs() == []

    def test_digon(self):
        assert parse_edge_list("2 2\n0 1\n1 0") == DIGON

    def test_comments_skipped(self):
        assert parse_edge_list("# header\n3 3\n# arc list\n0 1\n1 2\n2 0\n") == C3

    @pytest.mark.parametrize("text, lineno", [
        ("3 1\n0 0", 2),
        ("3 1\n0 3", 2),
        ("3 2\n0 1\n0 1", 3),
        ("3 1\n0 x", 2),
        ("3 1\n0 1 2", 2),
        ("2 1\n0 1\n1 0", 3),
    ])
    def test_errors_name_line(self, text, lineno):
        with pytest.raises(EdgeListError) as exc:
            parse_edge_list(text)
        assert exc.value.lineno == lineno
        assert f"line {lineno}" in str(exc.value)

    def test_too_few_arcs(self):
        with pytest.raises(EdgeListError):
            parse_edge_list("3 2\n0 1\n")

    def test_missing_header(self):
        with pytest.raises(EdgeListError):
            parse_edge_list("# nothing\n")

    @given(digraphs())
    def test_round_trip(self, d):
        assert parse_edge_list(to_edge_list(d)) == d


def test_dot_output():
    assert "0 -> 1" in to_dot(Digraph(2, [(0, 1)]))
    text = to_dot(Digraph(1))
    assert "->" not in text and "  0;" in text


def test_construction_rejects_loops_and_capacity():
    with pytest.raises(DigraphError):
        Digraph(2, [(1, 1)])
    with pytest.raises(CapacityError):
        Digraph(64)
    Digraph(63)


def test_immutable():
    with pytest.raises(AttributeError):
        C3.n = 4


@given(digraphs())
def test_transpose_consistency(d):
    for u in range(d.n):
        for v in range(d.n):
            assert bool(d.out_adj[u] >> v & 1) == bool(d.in_adj[v] >> u & 1)


class TestAcyclic:
    def test_examples(self):
        assert not is_acyclic(C3, 0b111)
        assert is_acyclic(C3, 0b011)
        assert not is_acyclic(DIGON, 0b11)

    def test_agrees_with_dfs_on_all_small_digraphs(self):
        # every digraph on 3 vertices plus a sample on 4: all subsets
        checked = 0
        for d in all_digraphs(3):
            for s in range(8):
                assert is_acyclic(d, s) == nx_acyclic(d, s)
                assert is_acyclic(d, s) == (find_cycle(d, s) is None)
                checked += 1
        assert checked == 64 * 8

    def test_agrees_with_dfs_random_up_to_8(self, rng):
        for _ in range(60):
            n = int(rng.integers(1, 9))
            d = random_digraph(n, float(rng.uniform(0.1, 0.6)), rng)
            for s in range(1 << n):
                assert is_acyclic(d, s) == nx_acyclic(d, s)

    def test_out_of_range_mask(self):
        with pytest.raises(DigraphError):
            is_acyclic(C3, 0b1000)

    @given(digraphs(max_n=7), st.data())
    def test_monotone(self, d, data):
        s = data.draw(st.integers(0, d.full))
        if is_acyclic(d, s):
            for sub in iter_subsets(s):
                assert is_acyclic(d, sub)


class TestTable:
    def test_three_cycle_has_one_cyclic_subset(self):
        table = acyclic_subset_table(C3)
        # oracle: direct enumeration of all 8 subsets
        assert [s for s in range(8) if not table[s]] == [0b111]

    def test_transitive_all_acyclic(self):
        assert acyclic_subset_table(transitive_tournament(4)).all()

    def test_digon_plus_isolated(self):
        d = Digraph(3, [(0, 1), (1, 0)])
        table = acyclic_subset_table(d)
        assert [s for s in range(8) if not table[s]] == [s for s in range(8) if s & 0b11 == 0b11]

    def test_matches_is_acyclic_random(self, rng):
        for _ in range(40):
            n = int(rng.integers(1, 11))
            d = random_digraph(n, float(rng.uniform(0.05, 0.5)), rng)
            table = acyclic_subset_table(d)
            assert all(table[s] == is_acyclic(d, s) for s in range(1 << n))

    def test_capacity(self):
        with pytest.raises(CapacityError):
            acyclic_subset_table(Digraph(6), limit=5)


class TestSCC:
    def test_examples(self):
        assert strongly_connected_components(C3) == [0b111]
        assert sorted(strongly_connected_components(transitive_tournament(3))) == [1, 2, 4]
        assert is_strongly_connected(d_tournament(4))

    def test_reverse_topological_order(self):
        comps = strongly_connected_components(transitive_tournament(4))
        # vertex 0 reaches everything, so its component is emitted last
        assert comps == [8, 4, 2, 1]

    @given(digraphs())
    def test_matches_networkx(self, d):
        ours = sorted(strongly_connected_components(d))
        theirs = sorted(mask_of(c) for c in nx.strongly_connected_components(to_nx(d)))
        assert ours == theirs

    @given(digraphs())
    def test_condensation_order(self, d):
        comps = strongly_connected_components(d)
        where = {v: i for i, c in enumerate(comps) for v in vertices(c)}
        for u, v in d.arcs():
            assert where[u] >= where[v]


class TestGirth:
    def test_examples(self):
        assert girth(DIGON) == 2
        assert girth(directed_cycle(5)) == 5
        assert girth(transitive_tournament(4)) is INFINITE
        assert girth(Digraph(0)) == math.inf

    @given(digraphs(max_n=6))
    def test_matches_networkx_girth(self, d):
        lengths = [len(c) for c in nx.simple_cycles(to_nx(d))]
        assert girth(d) == (min(lengths) if lengths else INFINITE)

    @given(digraphs(max_n=6))
    def test_shortest_cycles_are_induced(self, d):
        cycles = enumerate_induced_cycles(d)
        g = girth(d)
        assert g == (min(c.bit_count() for c in cycles) if cycles else INFINITE)
        c = shortest_cycle(d)
        assert (c is None) == (g == INFINITE)
        if c is not None:
            assert len(c) == g


def brute_induced_cycles(d):
    """Vertex sets whose induced subgraph is exactly one directed cycle (networkx)."""
    out = set()
    g = to_nx(d)
    for cyc in nx.simple_cycles(g):
        h = g.subgraph(cyc)
        if h.number_of_edges() == len(cyc):
            out.add(mask_of(cyc))
    return sorted(out)


class TestInducedCycles:
    def test_c5(self):
        assert enumerate_induced_cycles(directed_cycle(5)) == [0b11111]

    def test_three_cycle(self):
        assert enumerate_induced_cycles(C3) == [0b111]

    def test_tournament_triangles(self):
        from dicolor.families import count_directed_triangles

        d = random_tournament(5, 7)
        assert len(enumerate_induced_cycles(d)) == count_directed_triangles(d)
        assert all(c.bit_count() == 3 for c in enumerate_induced_cycles(d))

    @settings(max_examples=150)
    @given(digraphs(max_n=7))
    def test_both_methods_match_networkx(self, d):
        expected = brute_induced_cycles(d)
        assert enumerate_induced_cycles(d, "subsets") == expected
        assert enumerate_induced_cycles(d, "paths") == expected

    def test_large_uses_paths(self):
        d = directed_cycle(25)
        assert enumerate_induced_cycles(d) == [(1 << 25) - 1]


@given(digraphs(max_n=6), st.integers(2, 6))
def test_count_cycles_of_length(d, length):
    expected = sum(1 for c in nx.simple_cycles(to_nx(d)) if len(c) == length)
    assert count_cycles_of_length(d, length) == expected


class TestDegrees:
    def test_three_cycle(self):
        assert degree_sequence(C3) == [(1, 1, 2)] * 3

    def test_digon(self):
        assert degree_sequence(DIGON) == [(1, 1, 1)] * 2

    def test_transitive_source(self):
        assert degree_sequence(transitive_tournament(3))[0] == (2, 0, 2)

    @given(digraphs())
    def test_triple_invariants(self, d):
        digon_vertices = {v for e in d.digons() for v in e}
        for v, (dout, din, du) in enumerate(degree_sequence(d)):
            assert max(dout, din) <= du <= dout + din
            assert (du == dout + din) == (v not in digon_vertices)


def test_vertices_and_mask_round_trip():
    assert vertices(mask_of([5, 0, 3])) == [0, 3, 5]
    assert sorted(iter_subsets(0b101)) == [0, 1, 4, 5]
