"""Girth-preserving hypergraph operators.

Two facts drive everything here:

* the girth of a bipartite graph with pairwise distinct right-vertex
  neighborhoods is exactly twice the girth of the hypergraph whose edges
  are those neighborhoods (:func:`neighborhood_hypergraph`);
* replacing every edge of a host hypergraph by vertex-disjoint copies of
  a template placed inside that edge never creates a cycle shorter than
  min(girth(host), girth(template)) (:func:`substitute_edges`).

Copy placement is deterministic: copy j of the template maps template
vertex t to the (j * |V_template| + t)-th smallest vertex of the host
edge, so identical inputs always produce bit-identical outputs.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

from .core import BipartiteGraph, Hypergraph
from .errors import PreconditionError


class EmptySplitWarning(UserWarning):
    """Splitting left no edges (every host edge was smaller than r)."""


def neighborhood_hypergraph(g: BipartiteGraph) -> Hypergraph:
    """Hypergraph on the left class whose edges are the distinct nonempty
    right-vertex neighborhoods.

    Empty neighborhoods are dropped; two right vertices with the same
    nonempty neighborhood violate the precondition and raise, naming both.
    """
    seen: dict[tuple[int, ...], int] = {}
    for v, nbhd in enumerate(g.right_neighbors):
        if not nbhd:
            continue
        if nbhd in seen:
            raise PreconditionError(
                f"right vertices {seen[nbhd]} and {v} have the same neighborhood {nbhd}"
            )
        seen[nbhd] = v
    return Hypergraph(g.n_left, tuple(sorted(seen)))


@dataclass(frozen=True)
class SubstitutionPlan:
    """Host hypergraph, template hypergraph, and disjoint copies per edge."""

    host: Hypergraph
    template: Hypergraph
    copies_per_edge: int

    def __post_init__(self) -> None:
        if self.copies_per_edge < 1:
            raise PreconditionError(f"copies_per_edge must be >= 1, got {self.copies_per_edge}")
        need = self.copies_per_edge * self.template.num_vertices
        for idx, edge in enumerate(self.host.edges):
            if len(edge) < need:
                raise PreconditionError(
                    f"host edge {idx} has {len(edge)} vertices but "
                    f"{self.copies_per_edge} template copies need {need}"
                )


def substitute_edges(plan: SubstitutionPlan) -> Hypergraph:
    """Replace every host edge with vertex-disjoint template copies.

    The output keeps the host vertex set.  Producing the same edge twice
    (possible only when two host edges overlap in >= 2 vertices, i.e. host
    girth 2) is a hard error rather than a silent merge.
    """
    t_nv = plan.template.num_vertices
    out: dict[tuple[int, ...], int] = {}
    for idx, edge in enumerate(plan.host.edges):
        for j in range(plan.copies_per_edge):
            base = j * t_nv
            for t_edge in plan.template.edges:
                mapped = tuple(edge[base + t] for t in t_edge)
                if mapped in out:
                    raise PreconditionError(
                        f"host edges {out[mapped]} and {idx} both produce edge {mapped}; "
                        "substitution requires host girth >= 3"
                    )
                out[mapped] = idx
    return Hypergraph(plan.host.num_vertices, tuple(sorted(out)))


def split_edges(h: Hypergraph, r: int) -> Hypergraph:
    """Cut every edge into floor(|edge| / r) disjoint r-element edges.

    Edges smaller than r contribute nothing (silent skip by design); the
    output is r-uniform whenever any edge survives, and an all-skipped
    result is flagged with EmptySplitWarning.  Girth never decreases.
    """
    if r < 2:
        raise PreconditionError(f"split size must be >= 2, got {r}")
    out: dict[tuple[int, ...], int] = {}
    for idx, edge in enumerate(h.edges):
        for j in range(len(edge) // r):
            sub = edge[j * r : (j + 1) * r]
            if sub in out:
                raise PreconditionError(
                    f"host edges {out[sub]} and {idx} both produce edge {sub}; "
                    "splitting requires host girth >= 3"
                )
            out[sub] = idx
    if h.num_edges > 0 and not out:
        warnings.warn(f"every edge is smaller than r={r}; output has no edges", EmptySplitWarning)
    return Hypergraph(h.num_vertices, tuple(sorted(out)))


def build_recursive(bases: list[BipartiteGraph], copy_counts: list[int]) -> Hypergraph:
    """Nested edge substitution over a tower of bipartite base graphs.

    Stage 1 takes the neighborhood hypergraph of bases[0]; stage i >= 2
    substitutes the previous result, copy_counts[i-2] times per edge, into
    the neighborhood hypergraph of bases[i-1].  The final girth is at
    least the minimum over stages of the halved base girths.
    """
    if not bases:
        raise PreconditionError("at least one base graph is required")
    if len(copy_counts) != len(bases) - 1:
        raise PreconditionError(
            f"{len(bases)} bases need {len(bases) - 1} copy counts, got {len(copy_counts)}"
        )
    current = neighborhood_hypergraph(bases[0])
    for stage, (base, k) in enumerate(zip(bases[1:], copy_counts), start=2):
        host = neighborhood_hypergraph(base)
        need = k * current.num_vertices
        smallest = min((len(e) for e in host.edges), default=0)
        if smallest < need:
            raise PreconditionError(
                f"stage {stage}: host edges of size {smallest} cannot hold "
                f"{k} copies of a {current.num_vertices}-vertex hypergraph (need {need})"
            )
        current = substitute_edges(SubstitutionPlan(host, current, k))
    return current


def loose_path(num_edges: int, r: int = 3) -> Hypergraph:
    """Acyclic chain of r-element edges, consecutive edges sharing one
    vertex; the classic girth-infinite substitution template."""
    if num_edges < 1 or r < 2:
        raise PreconditionError("loose_path needs num_edges >= 1 and r >= 2")
    step = r - 1
    edges = [tuple(range(i * step, i * step + r)) for i in range(num_edges)]
    return Hypergraph(num_edges * step + 1, tuple(edges))
