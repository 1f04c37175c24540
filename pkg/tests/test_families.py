import itertools

import networkx as nx
import numpy as np
import pytest

from dicolor.coloring import exact_chromatic_number
from dicolor.digraph import (
    INFINITE, Digraph, girth, is_acyclic, is_strongly_connected,
    strongly_connected_components,
)
from dicolor.errors import CapacityError, DigraphError, NotATournamentError
from dicolor.families import (
    count_directed_triangles, d_tournament, directed_cycle, enumerate_tournaments,
    find_isomorphism, knn_cycle_property, layered_digraph, oriented_multipartite,
    random_digraph, random_orientation, random_tournament, s_tournament,
    search_knn_orientation, tournament_code, tournament_from_code,
    tournaments_isomorphic, transitive_tournament,
)
from dicolor.independence import alpha

from conftest import C3, DIGON, to_nx


class TestNamedFamilies:
    def test_transitive(self):
        assert transitive_tournament(2).arcs() == [(0, 1)]
        t4 = transitive_tournament(4)
        assert t4.num_arcs == 6 and girth(t4) is INFINITE
        assert alpha(transitive_tournament(5)) == 5
        with pytest.raises(DigraphError):
            transitive_tournament(0)

    def test_s_tournament_small(self):
        assert s_tournament(1) == Digraph(1)
        assert s_tournament(2).num_arcs == 1
        assert s_tournament(3) == C3
        with pytest.raises(DigraphError):
            s_tournament(0)

    def test_s_tournament_structure(self):
        # vertex i beats every j < i - 1, and i - 1 beats i
        d = s_tournament(6)
        for i in range(6):
            for j in range(i):
                assert d.has_arc(i, j) == (j < i - 1)

    def test_d_tournament(self):
        assert find_isomorphism(d_tournament(3), C3) is not None
        d4 = d_tournament(4)
        assert is_strongly_connected(d4)
        assert count_directed_triangles(d4) == 2
        assert is_strongly_connected(d_tournament(5))
        assert d4.has_arc(3, 0) and not d4.has_arc(0, 3)

    def test_d_tournament_degenerate_warns(self):
        with pytest.warns(UserWarning):
            assert d_tournament(2) == transitive_tournament(2)

    @pytest.mark.parametrize("n", range(3, 13))
    def test_tournament_families(self, n):
        for d in (s_tournament(n), d_tournament(n)):
            assert d.is_tournament()
        dn = d_tournament(n)
        assert is_strongly_connected(dn)
        assert is_acyclic(dn.without_arc(n - 1, 0), dn.full)

    def test_three_cycles_pairwise_isomorphic(self):
        ds = [s_tournament(3), d_tournament(3), directed_cycle(3)]
        for a, b in itertools.combinations(ds, 2):
            assert tournaments_isomorphic(a, b)

    def test_directed_cycle(self):
        assert directed_cycle(2) == DIGON
        assert directed_cycle(3) == C3
        assert girth(directed_cycle(5)) == 5
        with pytest.raises(DigraphError):
            directed_cycle(1)


class TestRandom:
    def test_random_tournament_shape(self, rng):
        for n in range(1, 9):
            d = random_tournament(n, rng)
            assert d.num_arcs == n * (n - 1) // 2 and d.is_digon_free() and d.is_tournament()

    def test_determinism(self):
        assert random_tournament(7, 99) == random_tournament(7, 99)
        assert random_digraph(8, 0.3, 5) == random_digraph(8, 0.3, 5)

    def test_mean_triangles(self):
        # each triple is cyclic with probability 1/4: mean C(6,3)/4 = 5
        rng = np.random.default_rng(2024)
        counts = [count_directed_triangles(random_tournament(6, rng)) for _ in range(1000)]
        assert abs(np.mean(counts) - 5.0) <= 0.5

    def test_random_digraph_extremes(self):
        assert random_digraph(5, 0.0, 1).num_arcs == 0
        full = random_digraph(5, 1.0, 1)
        assert full.num_arcs == 20 and len(full.digons()) == 10
        with pytest.raises(DigraphError):
            random_digraph(3, 1.5, 1)

    def test_random_orientation_digon_free(self, rng):
        for _ in range(20):
            assert random_orientation(8, 0.7, rng).is_digon_free()

    def test_layered_cycle_lengths(self, rng):
        for k in (2, 3, 4):
            for _ in range(10):
                d = layered_digraph(9, k, 0.5, rng)
                assert all(len(c) % k == 0 for c in nx.simple_cycles(to_nx(d)))


def brute_knn_success(n, t):
    """Fraction of all 2^(n*n) orientations of K_{n,n} with the cycle property (networkx)."""
    good = 0
    for bits in range(1 << (n * n)):
        g = nx.DiGraph()
        for i in range(n):
            for j in range(n):
                g.add_edge(*((i, n + j) if bits >> (i * n + j) & 1 else (n + j, i)))
        if all(not nx.is_directed_acyclic_graph(g.subgraph(I + J))
               for I in itertools.combinations(range(n), t)
               for J in itertools.combinations(range(n, 2 * n), t)):
            good += 1
    return good, 1 << (n * n)


class TestKnn:
    def test_k22_success_probability(self):
        # brute force over the 16 orientations: only the two directed 4-cycles
        assert brute_knn_success(2, 2) == (2, 16)

    def test_k22_search(self):
        d = search_knn_orientation(2, 2, 200, 3)
        assert d is not None and not is_acyclic(d, d.full)

    def test_no_witness_for_n3_t2(self):
        # in any row, two of three columns agree, which gives a transitive K_{2,2}
        assert brute_knn_success(3, 2) == (0, 512)

    @pytest.mark.slow
    def test_no_witness_for_n4_t2(self):
        assert brute_knn_success(4, 2)[0] == 0

    def test_search_reports_failure(self):
        assert search_knn_orientation(4, 2, 500, 0) is None

    def test_n4_t3_witness_verified(self):
        d = search_knn_orientation(4, 3, 5000, 1)
        assert d is not None
        g = to_nx(d)
        for I in itertools.combinations(range(4), 3):
            for J in itertools.combinations(range(4, 8), 3):
                assert not nx.is_directed_acyclic_graph(g.subgraph(I + J))

    def test_preconditions(self):
        with pytest.raises(DigraphError):
            search_knn_orientation(2, 3, 1, 0)
        with pytest.raises(CapacityError):
            search_knn_orientation(20, 10, 1, 0)

    def test_multipartite(self):
        assert oriented_multipartite(1, 3, 2, 0) == Digraph(3)
        d = oriented_multipartite(2, 4, 3, 0, attempts=5000)
        assert d is not None
        assert knn_cycle_property(d, 4, 3, range(4), range(4, 8))
        assert oriented_multipartite(2, 4, 2, 0, attempts=50) is None

    def test_multipartite_three_parts_chi(self):
        d = oriented_multipartite(3, 3, 2, 0, attempts=500)
        # no K_{3,3} orientation has all K_{2,2} cyclic, so the search fails
        assert d is None
        d = oriented_multipartite(3, 2, 2, 0, attempts=500)
        assert d is not None
        chi = exact_chromatic_number(d)
        assert 1 <= chi <= 3


class TestTournaments:
    def test_counts(self):
        assert len(list(enumerate_tournaments(1))) == 1
        t3 = list(enumerate_tournaments(3))
        assert len(t3) == 8
        strong3 = [t for t in t3 if len(strongly_connected_components(t)) == 1]
        assert len(strong3) == 2
        assert all(tournaments_isomorphic(t, C3) for t in strong3)
        t4 = list(enumerate_tournaments(4))
        assert len(t4) == 64
        assert sum(is_strongly_connected(t) for t in t4) == 24

    @pytest.mark.parametrize("n", range(1, 6))
    def test_distinct_and_digon_free(self, n):
        ts = list(enumerate_tournaments(n))
        assert len(ts) == 2 ** (n * (n - 1) // 2) == len(set(ts))
        assert all(t.is_digon_free() and t.is_tournament() for t in ts)

    def test_sharded_ranges_cover(self):
        whole = list(enumerate_tournaments(4))
        parts = list(enumerate_tournaments(4, codes=range(0, 30))) + \
            list(enumerate_tournaments(4, codes=range(30, 64)))
        assert parts == whole

    def test_limit(self):
        with pytest.raises(CapacityError):
            next(enumerate_tournaments(7))

    def test_code_round_trip(self):
        for code in range(64):
            assert tournament_code(tournament_from_code(4, code)) == code

    def test_isomorphism_examples(self):
        relabelled = C3.relabel([2, 0, 1])
        assert tournaments_isomorphic(C3, relabelled)
        assert not tournaments_isomorphic(transitive_tournament(3), C3)
        d4 = d_tournament(4)
        assert tournaments_isomorphic(d4, d4.relabel([3, 1, 0, 2]))

    def test_isomorphism_errors(self):
        with pytest.raises(NotATournamentError):
            tournaments_isomorphic(DIGON, DIGON)
        with pytest.raises(DigraphError):
            tournaments_isomorphic(C3, d_tournament(4))

    def test_isomorphism_matches_networkx(self):
        rng = np.random.default_rng(7)
        for _ in range(60):
            a = random_tournament(6, rng)
            b = random_tournament(6, rng) if rng.random() < 0.5 else a.relabel(rng.permutation(6))
            expected = nx.is_isomorphic(to_nx(a), to_nx(b))
            assert tournaments_isomorphic(a, b) == expected
            p = find_isomorphism(a, b)
            if p is not None:
                assert a.relabel(p) == b

    def test_pinned_isomorphism(self):
        d4 = d_tournament(4)
        assert find_isomorphism(d4, d4, pin={3: 3, 0: 0}) is not None
        assert find_isomorphism(d4, d4, pin={0: 3}) is None

    def test_triangle_count_oracle(self):
        for t in enumerate_tournaments(5):
            expected = sum(1 for c in nx.simple_cycles(to_nx(t)) if len(c) == 3)
            assert count_directed_triangles(t) == expected

