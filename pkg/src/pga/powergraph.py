"""Power graphs on the nontrivial elements of a finite group.

Vertex v (0-based) stands for group element v + 1; the identity is excluded.
Two vertices are adjacent exactly when one element is a positive power of the
other, equivalently when one of the two cyclic subgroups contains the other.
Graphs are immutable after construction.
"""

from __future__ import annotations

import numpy as np

from .groups import FiniteGroup
from .oracle import WeightedGraph


class PowerGraph:
    def __init__(self, group: FiniteGroup, adj: np.ndarray) -> None:
        self.group = group
        self.group_description = group.description
        self.n_vertices = int(adj.shape[0])
        self.adj = adj
        self.adj.flags.writeable = False
        self.neighbors = tuple(
            tuple(int(u) for u in np.flatnonzero(adj[v])) for v in range(self.n_vertices)
        )
        self.edge_count = int(adj.sum()) // 2

    def __repr__(self) -> str:
        return (
            f"PowerGraph({self.group_description!r}, vertices={self.n_vertices}, "
            f"edges={self.edge_count})"
        )

    @property
    def vertices(self) -> range:
        """The element indices carried by the vertices (identity excluded)."""
        return range(1, self.group.size)

    def element_of(self, v: int) -> int:
        return v + 1

    def vertex_of(self, element: int) -> int:
        if element < 1 or element >= self.group.size:
            raise ValueError(f"element {element} is not a vertex")
        return element - 1

    def degree(self, v: int) -> int:
        return len(self.neighbors[v])

    def closed_neighborhood(self, v: int) -> frozenset[int]:
        return frozenset(self.neighbors[v]) | {v}

    def connected_components(self) -> list[list[int]]:
        """Maximal connected vertex sets, ordered by smallest vertex."""
        seen = [False] * self.n_vertices
        components: list[list[int]] = []
        for start in range(self.n_vertices):
            if seen[start]:
                continue
            stack = [start]
            seen[start] = True
            comp = []
            while stack:
                v = stack.pop()
                comp.append(v)
                for u in self.neighbors[v]:
                    if not seen[u]:
                        seen[u] = True
                        stack.append(u)
            components.append(sorted(comp))
        return components

    def edges(self) -> list[tuple[int, int]]:
        return [
            (v, u)
            for v in range(self.n_vertices)
            for u in self.neighbors[v]
            if u > v
        ]

    def to_weighted_graph(self) -> WeightedGraph:
        return WeightedGraph(self.n_vertices, self.edges())


def build_power_graph(g: FiniteGroup) -> PowerGraph:
    """Adjacency from cyclic-subgroup membership; rejects the trivial group."""
    if g.size < 2:
        raise ValueError("the power graph is defined on nontrivial elements; the trivial group has none")
    n = g.size
    member = np.zeros((n, n), dtype=bool)  # member[x, y]: y lies in <x>
    for x in range(n):
        member[x, list(g.cyclic_subgroup(x))] = True
    adj = member | member.T
    adj = adj[1:, 1:].copy()
    np.fill_diagonal(adj, False)
    return PowerGraph(g, adj)
