"""Hypergraph and bipartite-graph value types plus basic structure analysis.

A hypergraph is a vertex count together with a duplicate-free set of
nonempty vertex-id edges.  A cycle of length k >= 2 is a pair of sequences
of k distinct vertices v_0..v_{k-1} and k distinct edges e_0..e_{k-1} with
{v_i, v_{i+1 mod k}} contained in e_i; girth is the minimum cycle length.

Both value types are immutable, store their content in canonical order
(edges and incidences sorted lexicographically) and are safe to share
between threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

from .errors import ValidationError


@dataclass(frozen=True)
class Hypergraph:
    """Immutable hypergraph in canonical form.

    ``edges`` must be a lexicographically strictly increasing tuple of
    strictly increasing vertex-id tuples; use :meth:`from_edges` to build
    one from unordered data.
    """

    num_vertices: int
    edges: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if not isinstance(self.num_vertices, int) or self.num_vertices < 0:
            raise ValidationError(f"num_vertices must be a nonnegative integer, got {self.num_vertices!r}")
        prev: tuple[int, ...] | None = None
        for idx, edge in enumerate(self.edges):
            if len(edge) == 0:
                raise ValidationError(f"edge {idx} is empty")
            for a, b in zip(edge, edge[1:]):
                if a >= b:
                    raise ValidationError(f"edge {idx} {edge} is not strictly increasing")
            if edge[0] < 0 or edge[-1] >= self.num_vertices:
                raise ValidationError(
                    f"edge {idx} {edge} has a vertex id outside [0, {self.num_vertices})"
                )
            if prev is not None:
                if prev == edge:
                    raise ValidationError(f"duplicate edge {edge} at position {idx}")
                if prev > edge:
                    raise ValidationError(f"edge {idx} {edge} breaks lexicographic edge order")
            prev = edge

    @classmethod
    def from_edges(cls, num_vertices: int, edges: Iterable[Iterable[int]]) -> "Hypergraph":
        """Canonicalize arbitrary edge iterables: sort within edges, sort the
        edge list, and reject duplicate vertices or duplicate edges."""
        canon: list[tuple[int, ...]] = []
        for edge in edges:
            raw = tuple(edge)
            tup = tuple(sorted(raw))
            if len(set(tup)) != len(tup):
                raise ValidationError(f"edge {raw} repeats a vertex")
            canon.append(tup)
        canon.sort()
        for a, b in zip(canon, canon[1:]):
            if a == b:
                raise ValidationError(f"duplicate edge {a}")
        return cls(num_vertices, tuple(canon))

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    @cached_property
    def incidence_count(self) -> int:
        return sum(len(e) for e in self.edges)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        deg = [0] * self.num_vertices
        for edge in self.edges:
            for v in edge:
                deg[v] += 1
        return tuple(deg)

    @cached_property
    def vertex_edges(self) -> tuple[tuple[int, ...], ...]:
        """For each vertex, the sorted indices of the edges containing it."""
        inc: list[list[int]] = [[] for _ in range(self.num_vertices)]
        for j, edge in enumerate(self.edges):
            for v in edge:
                inc[v].append(j)
        return tuple(tuple(js) for js in inc)


@dataclass(frozen=True)
class BipartiteGraph:
    """Immutable bipartite graph with classes of size ``n_left``/``n_right``
    and a duplicate-free, lexicographically sorted incidence tuple."""

    n_left: int
    n_right: int
    incidences: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        if self.n_left < 0 or self.n_right < 0:
            raise ValidationError("class sizes must be nonnegative")
        prev: tuple[int, int] | None = None
        for idx, pair in enumerate(self.incidences):
            u, v = pair
            if not (0 <= u < self.n_left):
                raise ValidationError(f"incidence {idx} {pair}: left id out of [0, {self.n_left})")
            if not (0 <= v < self.n_right):
                raise ValidationError(f"incidence {idx} {pair}: right id out of [0, {self.n_right})")
            if prev is not None:
                if prev == pair:
                    raise ValidationError(f"duplicate incidence {pair} at position {idx}")
                if prev > pair:
                    raise ValidationError(f"incidence {idx} {pair} breaks lexicographic order")
            prev = pair

    @classmethod
    def from_incidences(
        cls, n_left: int, n_right: int, incidences: Iterable[tuple[int, int]]
    ) -> "BipartiteGraph":
        pairs = sorted(set((int(u), int(v)) for u, v in incidences))
        return cls(n_left, n_right, tuple(pairs))

    @property
    def num_incidences(self) -> int:
        return len(self.incidences)

    @cached_property
    def left_neighbors(self) -> tuple[tuple[int, ...], ...]:
        adj: list[list[int]] = [[] for _ in range(self.n_left)]
        for u, v in self.incidences:
            adj[u].append(v)
        return tuple(tuple(sorted(a)) for a in adj)

    @cached_property
    def right_neighbors(self) -> tuple[tuple[int, ...], ...]:
        adj: list[list[int]] = [[] for _ in range(self.n_right)]
        for u, v in self.incidences:
            adj[v].append(u)
        return tuple(tuple(sorted(a)) for a in adj)

    @cached_property
    def left_degrees(self) -> tuple[int, ...]:
        return tuple(len(a) for a in self.left_neighbors)

    @cached_property
    def right_degrees(self) -> tuple[int, ...]:
        return tuple(len(a) for a in self.right_neighbors)


@dataclass(frozen=True)
class StructureReport:
    """Uniformity/regularity/isolation summary of a hypergraph.

    ``uniformity`` is r when every edge has exactly r vertices, else None;
    ``uniformity_vacuous`` flags the no-edges case, where uniformity is
    reported absent by convention.  ``regularity`` is d when every vertex
    has degree d (0 for vertexless or edgeless structures), else None.
    """

    uniformity: int | None
    uniformity_vacuous: bool
    regularity: int | None
    isolated: int


def validate(h: Hypergraph) -> StructureReport:
    """Analyze uniformity, regularity and isolated-vertex count of ``h``."""
    if h.num_edges == 0:
        uniformity = None
        vacuous = True
    else:
        sizes = set(len(e) for e in h.edges)
        uniformity = sizes.pop() if len(sizes) == 1 else None
        vacuous = False
    degs = set(h.degrees)
    if h.num_vertices == 0:
        regularity: int | None = 0
    else:
        regularity = degs.pop() if len(degs) == 1 else None
    isolated = sum(1 for d in h.degrees if d == 0)
    return StructureReport(uniformity, vacuous, regularity, isolated)


def incidence_graph(h: Hypergraph) -> BipartiteGraph:
    """Bipartite incidence graph: left class = vertices of ``h``, right
    class = edges of ``h`` in canonical order, adjacency = containment."""
    pairs = [(u, j) for j, edge in enumerate(h.edges) for u in edge]
    pairs.sort()
    return BipartiteGraph(h.num_vertices, h.num_edges, tuple(pairs))
