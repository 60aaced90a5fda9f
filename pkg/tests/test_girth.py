import random

import pytest

from hypergirth import (
    BergeCycle,
    BipartiteGraph,
    Hypergraph,
    PreconditionError,
    ResourceBudgetError,
    VerificationError,
    girth_bipartite,
    girth_hypergraph,
    girth_oracle,
    incidence_graph,
)
from hypergirth.girth import BipartiteCycle


def bipartite_as_pairs(g: BipartiteGraph) -> Hypergraph:
    """A bipartite graph as a 2-uniform hypergraph (independent oracle route:
    its cycles are exactly the graph cycles)."""
    edges = tuple(sorted((u, g.n_left + v) for u, v in g.incidences))
    return Hypergraph(g.n_left + g.n_right, edges)


def even_cycle(k: int) -> BipartiteGraph:
    # vertices alternate left 0..k-1 and right 0..k-1: l_i - r_i - l_{i+1}
    pairs = []
    for i in range(k):
        pairs.append((i, i))
        pairs.append(((i + 1) % k, i))
    return BipartiteGraph.from_incidences(k, k, pairs)


HEAWOOD = BipartiteGraph.from_incidences(
    7, 7, [(p, l) for l in range(7) for p in (l, (l + 1) % 7, (l + 3) % 7)]
)


class TestGirthBipartite:
    def test_four_cycle(self):
        g = even_cycle(2)
        rep = girth_bipartite(g)
        assert rep.girth == 4
        assert rep.witness is not None and len(rep.witness) == 4

    @pytest.mark.parametrize("k", [3, 4, 5, 7])
    def test_even_cycles(self, k):
        assert girth_bipartite(even_cycle(k)).girth == 2 * k

    def test_tree_infinite(self):
        g = BipartiteGraph.from_incidences(3, 2, [(0, 0), (1, 0), (1, 1), (2, 1)])
        rep = girth_bipartite(g)
        assert rep.girth is None and rep.is_infinite
        assert rep.girth_str() == "inf"

    def test_complete_bipartite(self):
        g = BipartiteGraph.from_incidences(3, 3, [(i, j) for i in range(3) for j in range(3)])
        assert girth_bipartite(g).girth == 4

    def test_heawood(self):
        # frozen from the brute-force oracle on the 2-uniform view
        assert girth_oracle(bipartite_as_pairs(HEAWOOD), 8).girth == 6
        rep = girth_bipartite(HEAWOOD)
        assert rep.girth == 6
        rep.witness.check(HEAWOOD)

    def test_always_even(self):
        rng = random.Random(5)
        for _ in range(40):
            nl, nr = rng.randint(1, 7), rng.randint(1, 7)
            pairs = set()
            for _ in range(rng.randint(0, 18)):
                pairs.add((rng.randrange(nl), rng.randrange(nr)))
            g = BipartiteGraph(nl, nr, tuple(sorted(pairs)))
            rep = girth_bipartite(g)
            assert rep.girth is None or (rep.girth % 2 == 0 and rep.girth >= 4)

    def test_matches_oracle_randomized(self):
        rng = random.Random(11)
        for _ in range(60):
            nl, nr = rng.randint(1, 8), rng.randint(1, 8)
            pairs = set()
            for _ in range(rng.randint(0, 20)):
                pairs.add((rng.randrange(nl), rng.randrange(nr)))
            g = BipartiteGraph(nl, nr, tuple(sorted(pairs)))
            fast = girth_bipartite(g).girth
            slow = girth_oracle(bipartite_as_pairs(g), 16).girth
            assert fast == slow


class TestGirthHypergraph:
    def test_fano(self, fano):
        rep = girth_hypergraph(fano)
        assert rep.girth == 3
        rep.witness.check(fano)

    def test_two_edge_overlap(self):
        h = Hypergraph(4, ((0, 1, 2), (1, 2, 3)))
        rep = girth_hypergraph(h)
        assert rep.girth == 2

    def test_matching_infinite(self):
        h = Hypergraph(6, ((0, 1), (2, 3), (4, 5)))
        assert girth_hypergraph(h).is_infinite

    def test_single_and_empty(self):
        assert girth_hypergraph(Hypergraph(3, ((0, 1, 2),))).is_infinite
        assert girth_hypergraph(Hypergraph(3, ())).is_infinite

    def test_halving_identity_randomized(self):
        rng = random.Random(23)
        for _ in range(50):
            n = rng.randint(2, 10)
            edges = set()
            for _ in range(rng.randint(1, 10)):
                size = rng.randint(1, min(4, n))
                edges.add(tuple(sorted(rng.sample(range(n), size))))
            h = Hypergraph(n, tuple(sorted(edges)))
            hg = girth_hypergraph(h)
            bg = girth_bipartite(incidence_graph(h))
            if hg.girth is None:
                assert bg.girth is None
            else:
                assert bg.girth == 2 * hg.girth


class TestGirthOracle:
    def test_fano_exact(self, fano):
        rep = girth_oracle(fano, 6)
        assert rep.girth == 3
        assert rep.searched_to is None
        rep.witness.check(fano)

    def test_bounded_report(self):
        h = Hypergraph(6, ((0, 1), (2, 3), (4, 5)))
        rep = girth_oracle(h, 10)
        assert rep.girth is None
        assert rep.searched_to == 10
        assert not rep.is_infinite
        assert rep.girth_str() == ">10"

    def test_hexagon_budget_vs_maxlen(self, hex2):
        from hypergirth import neighborhood_hypergraph

        h = neighborhood_hypergraph(hex2)
        at5 = girth_oracle(h, 5)
        assert at5.girth is None and at5.searched_to == 5
        assert girth_oracle(h, 6).girth == 6

    def test_two_cycle(self):
        h = Hypergraph(4, ((0, 1, 2), (1, 2, 3)))
        assert girth_oracle(h, 4).girth == 2

    def test_agrees_with_fast_path_randomized(self):
        rng = random.Random(37)
        for _ in range(50):
            n = rng.randint(2, 9)
            edges = set()
            for _ in range(rng.randint(1, 9)):
                size = rng.randint(2, min(4, n))
                edges.add(tuple(sorted(rng.sample(range(n), size))))
            h = Hypergraph(n, tuple(sorted(edges)))
            fast = girth_hypergraph(h).girth
            slow = girth_oracle(h, 16).girth
            assert fast == slow

    def test_incidence_budget(self, fano):
        with pytest.raises(ResourceBudgetError, match="exceed budget"):
            girth_oracle(fano, 6, incidence_budget=20)

    def test_env_budget_override(self, fano, monkeypatch):
        monkeypatch.setenv("HYPERGIRTH_ORACLE_BUDGET", "20")
        with pytest.raises(ResourceBudgetError):
            girth_oracle(fano, 6)
        monkeypatch.setenv("HYPERGIRTH_ORACLE_BUDGET", "junk")
        with pytest.raises(PreconditionError):
            girth_oracle(fano, 6)

    def test_max_len_validation(self, fano):
        with pytest.raises(PreconditionError, match="max_len"):
            girth_oracle(fano, 1)


class TestConcurrentReads:
    def test_shared_values_thread_safe(self, hex2, fano):
        from concurrent.futures import ThreadPoolExecutor

        def bipartite_job(_):
            return girth_bipartite(hex2).girth

        def hyper_job(_):
            return girth_hypergraph(fano).girth

        with ThreadPoolExecutor(max_workers=8) as pool:
            assert set(pool.map(bipartite_job, range(16))) == {12}
            assert set(pool.map(hyper_job, range(16))) == {3}


class TestWitnessValidation:
    def test_berge_rejects_repeats(self, fano):
        with pytest.raises(VerificationError, match="repeats"):
            BergeCycle((0, 0), (0, 1)).check(fano)

    def test_berge_rejects_noncontaining_edge(self, fano):
        with pytest.raises(VerificationError):
            BergeCycle((0, 1, 2), (0, 1, 2)).check(fano)

    def test_bipartite_rejects_odd_or_short(self):
        g = even_cycle(2)
        with pytest.raises(VerificationError, match="even"):
            BipartiteCycle((("l", 0), ("r", 0), ("l", 1))).check(g)

    def test_bipartite_rejects_non_incidence(self):
        g = BipartiteGraph.from_incidences(2, 2, [(0, 0), (1, 1)])
        with pytest.raises(VerificationError, match="not an incidence"):
            BipartiteCycle((("l", 0), ("r", 0), ("l", 1), ("r", 1))).check(g)

    def test_all_reports_validate(self, fano, plane2, quad2):
        for obj, fn in ((fano, girth_hypergraph), (plane2, girth_bipartite), (quad2, girth_bipartite)):
            rep = fn(obj)
            rep.witness.check(obj)
            assert len(rep.witness) == rep.girth
