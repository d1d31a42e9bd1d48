"""Exact and budgeted rainbow path finding, report plumbing, brute-force rc."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from rainbowconn.coloring import EdgeColoring, random_coloring
from rainbowconn.errors import GuardError, NotConnected
from rainbowconn.graphs import Graph, graph_from_edges
from rainbowconn.verify import (
    PathWitness,
    brute_force_rc,
    rainbow_path_exact,
    rainbow_path_search,
    report_csv_header,
    report_csv_row,
    report_text,
    verify_all_pairs,
    verify_sampled,
    witness_lines,
    witness_ok,
)
from strategies import graphs


def path_graph(n):
    return graph_from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n):
    return graph_from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(leaves):
    return graph_from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def complete_graph(n):
    return graph_from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def mono(g, color=0, palette=1):
    return EdgeColoring((color,) * g.m, palette, ("random",) * g.m)


def distinct(g):
    return EdgeColoring(tuple(range(g.m)), g.m, ("random",) * g.m)


# C4 as 0-1-2-3-0; canonical edge order (0,1) (0,3) (1,2) (2,3)
C4 = cycle_graph(4)
C4_ALTERNATING = EdgeColoring((0, 1, 1, 0), 2, ("random",) * 4)


class TestWitnessOk:
    def test_valid(self):
        w = PathWitness((0, 1, 2), (0, 2), frozenset({0, 1}))
        assert witness_ok(C4, C4_ALTERNATING, w)

    def test_trivial_single_vertex(self):
        assert witness_ok(C4, C4_ALTERNATING, PathWitness((0,), (), frozenset()))

    def test_rejects_wrong_edge(self):
        w = PathWitness((0, 1, 2), (0, 3), frozenset({0}))
        assert not witness_ok(C4, C4_ALTERNATING, w)

    def test_rejects_repeated_vertex(self):
        w = PathWitness((0, 1, 0), (0, 0), frozenset({0}))
        assert not witness_ok(C4, C4_ALTERNATING, w)

    def test_rejects_repeated_color(self):
        g = path_graph(3)
        c = mono(g)
        w = PathWitness((0, 1, 2), (0, 1), frozenset({0}))
        assert not witness_ok(g, c, w)

    def test_rejects_stale_color_set(self):
        w = PathWitness((0, 1, 2), (0, 2), frozenset({0, 5}))
        assert not witness_ok(C4, C4_ALTERNATING, w)


class TestRainbowPathExact:
    def test_c4_alternating(self):
        w = rainbow_path_exact(C4, C4_ALTERNATING, 0, 2)
        assert w is not None
        assert w.vertices == (0, 1, 2)
        assert w.color_set == {0, 1}

    def test_c4_monochromatic_opposite_pair(self):
        assert rainbow_path_exact(C4, mono(C4), 0, 2) is None
        adj = rainbow_path_exact(C4, mono(C4), 0, 1)
        assert adj is not None and adj.length == 1

    def test_k5_one_color_all_adjacent(self):
        g = complete_graph(5)
        c = mono(g)
        for u in range(5):
            for v in range(u + 1, 5):
                w = rainbow_path_exact(g, c, u, v)
                assert w is not None and w.length == 1

    def test_identity_pair(self):
        w = rainbow_path_exact(C4, mono(C4), 3, 3)
        assert w is not None and w.length == 0 and w.vertices == (3,)

    def test_max_len_cuts_off(self):
        g = path_graph(4)
        c = distinct(g)
        assert rainbow_path_exact(g, c, 0, 3, max_len=2) is None
        assert rainbow_path_exact(g, c, 0, 3, max_len=3) is not None

    def test_finds_longer_detour_when_short_path_clashes(self):
        # direct 0-1-2 repeats a color; the 3-edge detour is rainbow
        # edge ids in sorted order: (0,1) (0,3) (1,2) (2,4) (3,4)
        g = graph_from_edges(5, [(0, 1), (1, 2), (0, 3), (3, 4), (2, 4)])
        c = EdgeColoring((0, 1, 0, 3, 2), 4, ("random",) * 5)
        w = rainbow_path_exact(g, c, 0, 2)
        assert w is not None
        assert w.vertices == (0, 3, 4, 2)

    def test_guard_on_wide_palette_and_length(self):
        g = path_graph(26)
        c = distinct(g)
        with pytest.raises(GuardError):
            rainbow_path_exact(g, c, 0, 25)
        # either bound alone staying small keeps it tractable
        assert rainbow_path_exact(g, c, 0, 10, max_len=24) is not None
        narrow = random_coloring(g, 24, seed=0)
        rainbow_path_exact(g, narrow, 0, 25)

    @given(graphs(min_n=2, max_n=6), st.integers(min_value=1, max_value=5),
           st.integers(min_value=0, max_value=10**6))
    @settings(max_examples=80, deadline=None)
    def test_existence_matches_naive_enumeration(self, g, q, seed):
        c = random_coloring(g, q, seed=seed) if g.m else EdgeColoring((), q, ())
        edges = list(g.edges)
        cols = list(c.colors)
        for x in range(g.n):
            for y in range(x + 1, g.n):
                got = rainbow_path_exact(g, c, x, y)
                want = oracles.has_rainbow_path(g.n, edges, cols, x, y)
                assert (got is not None) == want
                if got is not None:
                    assert witness_ok(g, c, got)


class TestRainbowPathSearch:
    def test_distinct_tree_yields_tree_path(self):
        g = path_graph(5)
        w = rainbow_path_search(g, distinct(g), 0, 4)
        assert w is not None
        assert w.vertices == (0, 1, 2, 3, 4)

    def test_star_center_detour(self):
        g = star_graph(4)
        w = rainbow_path_search(g, distinct(g), 1, 4)
        assert w is not None and w.vertices == (1, 0, 4)

    def test_budget_zero_returns_none(self):
        g = path_graph(4)
        assert rainbow_path_search(g, distinct(g), 0, 3, budget=0) is None

    def test_disconnected_pair(self):
        g = graph_from_edges(4, [(0, 1), (2, 3)])
        assert rainbow_path_search(g, distinct(g), 0, 3) is None

    def test_palette_caps_depth(self):
        # pair at hop distance 5 can never be joined with 3 colors
        g = path_graph(6)
        c = random_coloring(g, 3, seed=1)
        assert rainbow_path_search(g, c, 0, 5) is None

    def test_identity_pair(self):
        g = path_graph(3)
        w = rainbow_path_search(g, mono(g), 2, 2)
        assert w is not None and w.length == 0

    def test_determinism(self):
        g = cycle_graph(8)
        c = random_coloring(g, 6, seed=3)
        a = rainbow_path_search(g, c, 0, 4, seed=9)
        b = rainbow_path_search(g, c, 0, 4, seed=9)
        assert a == b

    @given(graphs(min_n=2, max_n=6, force_connected=True),
           st.integers(min_value=1, max_value=5),
           st.integers(min_value=0, max_value=10**6),
           st.integers(min_value=0, max_value=50))
    @settings(max_examples=80, deadline=None)
    def test_sound_under_any_budget(self, g, q, seed, budget):
        c = random_coloring(g, q, seed=seed)
        w = rainbow_path_search(g, c, 0, g.n - 1, budget=budget, seed=seed)
        if w is not None:
            assert witness_ok(g, c, w)
            assert w.vertices[0] == 0 and w.vertices[-1] == g.n - 1

    @given(graphs(min_n=2, max_n=6, force_connected=True),
           st.integers(min_value=1, max_value=6),
           st.integers(min_value=0, max_value=10**6))
    @settings(max_examples=60, deadline=None)
    def test_complete_at_small_depth_with_full_budget(self, g, q, seed):
        c = random_coloring(g, q, seed=seed)
        for y in range(1, g.n):
            exact = rainbow_path_exact(g, c, 0, y)
            if exact is not None and exact.length <= 4:
                assert rainbow_path_search(g, c, 0, y, seed=seed) is not None


class TestVerifyDrivers:
    def test_k4_one_color(self):
        g = complete_graph(4)
        rep = verify_all_pairs(g, mono(g))
        assert (rep.pairs_checked, rep.pairs_connected) == (6, 6)
        assert rep.max_witness_length == 1

    def test_p4_monochromatic_adjacent_only(self):
        g = path_graph(4)
        rep = verify_all_pairs(g, mono(g))
        assert (rep.pairs_checked, rep.pairs_connected) == (6, 3)

    def test_star_distinct_pendants(self):
        g = star_graph(5)
        rep = verify_all_pairs(g, distinct(g))
        assert (rep.pairs_checked, rep.pairs_connected) == (15, 15)
        assert rep.max_witness_length == 2

    def test_guard_propagates(self):
        g = path_graph(26)
        with pytest.raises(GuardError):
            verify_all_pairs(g, distinct(g))

    def test_unknown_mode(self):
        g = path_graph(3)
        with pytest.raises(ValueError):
            verify_all_pairs(g, mono(g), mode="psychic")

    def test_search_mode_counts(self):
        g = cycle_graph(6)
        c = random_coloring(g, 6, seed=2)
        exact = verify_all_pairs(g, c, mode="exact")
        search = verify_all_pairs(g, c, mode="search")
        # search is sound, so it can only miss pairs, never invent them
        assert search.pairs_connected <= exact.pairs_connected

    def test_witnesses_optional(self):
        g = path_graph(4)
        rep = verify_all_pairs(g, distinct(g), keep_witnesses=False)
        assert rep.witnesses is None
        assert rep.pairs_connected == 6

    def test_sampled_clamps_and_repeats(self):
        g = cycle_graph(7)
        c = random_coloring(g, 7, seed=4)
        rep = verify_sampled(g, c, num_pairs=100, seed=5)
        assert rep.pairs_checked == 21
        assert rep.mode == "search"
        again = verify_sampled(g, c, num_pairs=100, seed=5)
        assert (rep.pairs_checked, rep.pairs_connected) == (again.pairs_checked,
                                                            again.pairs_connected)

    def test_sampled_subset(self):
        g = cycle_graph(10)
        c = distinct(g)
        rep = verify_sampled(g, c, num_pairs=5, seed=0, keep_witnesses=True)
        assert rep.pairs_checked == 5
        assert rep.pairs_connected == 5
        assert len(rep.witnesses) == 5


class TestReports:
    def make_report(self):
        g = path_graph(4)
        return verify_all_pairs(g, distinct(g))

    def test_text_na_without_timing(self):
        rep = self.make_report()
        text = report_text(rep)
        lines = dict(line.split("=", 1) for line in text.strip().splitlines())
        assert lines["mode"] == "exact"
        assert lines["pairs_checked"] == "6"
        assert lines["pairs_connected"] == "6"
        assert lines["success_rate"] == "1.000000"
        assert lines["elapsed"] == "NA"

    def test_text_with_timing(self):
        rep = self.make_report()
        lines = dict(line.split("=", 1)
                     for line in report_text(rep, include_timing=True).strip().splitlines())
        assert lines["elapsed"] != "NA"
        float(lines["elapsed"])

    def test_csv_row_matches_header(self):
        rep = self.make_report()
        header = report_csv_header()
        assert header == ("mode,pairs_checked,pairs_connected,"
                          "success_rate,max_witness_length,elapsed")
        row = report_csv_row(rep)
        assert len(row.split(",")) == len(header.split(","))
        assert row.endswith(",NA")

    def test_witness_lines_format(self):
        g = path_graph(3)
        rep = verify_all_pairs(g, distinct(g))
        lines = witness_lines(rep)
        assert lines == ["0 1: 0 1", "0 2: 0 1 2", "1 2: 1 2"]

    def test_witness_lines_empty_without_witnesses(self):
        g = path_graph(3)
        rep = verify_all_pairs(g, distinct(g), keep_witnesses=False)
        assert witness_lines(rep) == []


class TestBruteForceRc:
    @pytest.mark.parametrize("n", [3, 4, 5])
    def test_cliques_are_one(self, n):
        rc, coloring = brute_force_rc(complete_graph(n))
        assert rc == 1
        assert coloring.palette_size == 1

    @pytest.mark.parametrize("n,want", [(4, 3), (5, 4), (6, 5)])
    def test_paths_need_n_minus_one(self, n, want):
        rc, _ = brute_force_rc(path_graph(n))
        assert rc == want

    @pytest.mark.parametrize("n,want", [(5, 3), (6, 3)])
    def test_cycles(self, n, want):
        rc, _ = brute_force_rc(cycle_graph(n))
        assert rc == want

    def test_star_needs_all_pendant_colors(self):
        rc, _ = brute_force_rc(star_graph(4))
        assert rc == 4

    def test_witness_coloring_revalidates(self):
        g = cycle_graph(6)
        rc, coloring = brute_force_rc(g)
        assert coloring.palette_size == rc
        rep = verify_all_pairs(g, coloring)
        assert rep.pairs_connected == rep.pairs_checked

    def test_unresolved_when_cap_too_low(self):
        assert brute_force_rc(cycle_graph(5), q_max=2) is None

    def test_not_connected(self):
        with pytest.raises(NotConnected):
            brute_force_rc(graph_from_edges(4, [(0, 1), (2, 3)]))

    def test_single_vertex(self):
        rc, coloring = brute_force_rc(Graph(1, []))
        assert rc == 0 and coloring.m == 0

    @given(graphs(min_n=3, max_n=6, force_connected=True),
           st.integers(min_value=0, max_value=10**6))
    @settings(max_examples=15, deadline=None)
    def test_matches_naive_oracle(self, g, seed):
        if g.m > 8:
            return
        rc, _ = brute_force_rc(g)
        assert rc == oracles.naive_rc(g.n, list(g.edges))

    @given(graphs(min_n=3, max_n=6, force_connected=True),
           st.integers(min_value=2, max_value=6),
           st.integers(min_value=0, max_value=10**6))
    @settings(max_examples=15, deadline=None)
    def test_monotone_under_connected_colorings(self, g, q, seed):
        if g.m > 8:
            return
        c = random_coloring(g, q, seed=seed)
        rep = verify_all_pairs(g, c)
        if rep.pairs_connected == rep.pairs_checked:
            rc, _ = brute_force_rc(g)
            assert rc <= q
