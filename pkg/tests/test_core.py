import pytest

from hypergirth import (
    BipartiteGraph,
    Hypergraph,
    ValidationError,
    incidence_graph,
    validate,
)


class TestHypergraphInvariants:
    def test_canonical_construction(self):
        h = Hypergraph(4, ((0, 1), (0, 1, 2), (1, 2, 3)))
        assert h.num_edges == 3
        assert h.incidence_count == 8

    def test_from_edges_canonicalizes(self):
        h = Hypergraph.from_edges(5, [[4, 2, 0], [1, 3]])
        assert h.edges == ((0, 2, 4), (1, 3))

    def test_empty_edge_rejected(self):
        with pytest.raises(ValidationError, match="edge 0 is empty"):
            Hypergraph(3, ((),))

    def test_duplicate_edge_rejected(self):
        with pytest.raises(ValidationError, match="duplicate edge"):
            Hypergraph(3, ((0, 1), (0, 1)))
        with pytest.raises(ValidationError, match="duplicate edge"):
            Hypergraph.from_edges(3, [(0, 1), (1, 0)])

    def test_out_of_range_rejected(self):
        with pytest.raises(ValidationError, match=r"edge 0 \(0, 3\)"):
            Hypergraph(3, ((0, 3),))
        with pytest.raises(ValidationError, match="outside"):
            Hypergraph(2, ((-1, 0),))

    def test_unsorted_edge_rejected(self):
        with pytest.raises(ValidationError, match="not strictly increasing"):
            Hypergraph(3, ((1, 0),))
        with pytest.raises(ValidationError, match="repeats a vertex"):
            Hypergraph.from_edges(3, [(1, 1)])

    def test_edge_order_enforced(self):
        with pytest.raises(ValidationError, match="lexicographic"):
            Hypergraph(3, ((1, 2), (0, 1)))

    def test_immutable(self, fano):
        with pytest.raises(AttributeError):
            fano.num_vertices = 8

    def test_degrees(self, fano):
        assert fano.degrees == (3,) * 7
        assert fano.vertex_edges[0] == (0, 1, 2)


class TestBipartiteInvariants:
    def test_roundtrip_adjacency(self):
        g = BipartiteGraph.from_incidences(2, 3, [(1, 2), (0, 0), (1, 0)])
        assert g.incidences == ((0, 0), (1, 0), (1, 2))
        assert g.left_neighbors == ((0,), (0, 2))
        assert g.right_neighbors == ((0, 1), (), (1,))

    def test_range_checks(self):
        with pytest.raises(ValidationError, match="left id out of"):
            BipartiteGraph(1, 1, ((1, 0),))
        with pytest.raises(ValidationError, match="right id out of"):
            BipartiteGraph(1, 1, ((0, 1),))

    def test_order_and_duplicates(self):
        with pytest.raises(ValidationError, match="duplicate incidence"):
            BipartiteGraph(2, 2, ((0, 0), (0, 0)))
        with pytest.raises(ValidationError, match="lexicographic"):
            BipartiteGraph(2, 2, ((1, 0), (0, 0)))


class TestValidate:
    def test_fano_uniform_regular(self, fano):
        # independent degree count straight off the triple list
        degrees = [0] * 7
        for e in fano.edges:
            for v in e:
                degrees[v] += 1
        assert degrees == [3] * 7
        rep = validate(fano)
        assert rep.uniformity == 3
        assert rep.regularity == 3
        assert rep.isolated == 0
        assert not rep.uniformity_vacuous

    def test_empty_edge_set_is_vacuous(self):
        rep = validate(Hypergraph(5, ()))
        assert rep.uniformity is None
        assert rep.uniformity_vacuous
        assert rep.regularity == 0
        assert rep.isolated == 5

    def test_mixed_sizes(self):
        rep = validate(Hypergraph(3, ((0, 1), (0, 1, 2))))
        assert rep.uniformity is None
        assert not rep.uniformity_vacuous
        assert rep.regularity is None

    def test_vertexless(self):
        rep = validate(Hypergraph(0, ()))
        assert rep.regularity == 0
        assert rep.isolated == 0


class TestIncidenceGraph:
    def test_fano(self, fano):
        g = incidence_graph(fano)
        assert (g.n_left, g.n_right) == (7, 7)
        assert g.num_incidences == 21 == fano.incidence_count

    def test_single_edge(self):
        g = incidence_graph(Hypergraph(2, ((0, 1),)))
        assert (g.n_left, g.n_right, g.num_incidences) == (2, 1, 2)
        assert g.incidences == ((0, 0), (1, 0))

    def test_empty(self):
        g = incidence_graph(Hypergraph(4, ()))
        assert (g.n_left, g.n_right, g.num_incidences) == (4, 0, 0)

    def test_incidence_count_preserved_random(self):
        import random

        rng = random.Random(7)
        for _ in range(25):
            n = rng.randint(1, 12)
            edges = set()
            for _ in range(rng.randint(0, 10)):
                size = rng.randint(1, min(4, n))
                edges.add(tuple(sorted(rng.sample(range(n), size))))
            h = Hypergraph(n, tuple(sorted(edges)))
            assert incidence_graph(h).num_incidences == h.incidence_count
