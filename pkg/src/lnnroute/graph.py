"""Qubit-line adjacency graph.

Vertices are circuit lines; an edge joins two lines whenever they appear as
control and target of one gate, with the weight counting how many gates pair
them. NOT gates contribute nothing; a Toffoli contributes one edge per
control.
"""

from __future__ import annotations

from .circuit import Circuit, GateKind, MustDecomposeError


class AdjacencyGraph:
    """Undirected weighted graph over ``num_vertices`` qubit lines."""

    def __init__(self, num_vertices: int, edges=()):
        if num_vertices < 1:
            raise ValueError("graph needs at least one vertex")
        self.num_vertices = num_vertices
        self.adj: list[dict[int, int]] = [{} for _ in range(num_vertices)]
        for u, v, w in edges:
            self.add_edge(u, v, w)

    def add_edge(self, u: int, v: int, weight: int = 1) -> None:
        if u == v:
            raise ValueError(f"self-loop on vertex {u}")
        if not (0 <= u < self.num_vertices and 0 <= v < self.num_vertices):
            raise ValueError(f"edge ({u},{v}) outside 0..{self.num_vertices - 1}")
        if weight < 1:
            raise ValueError("edge weights are positive counts")
        self.adj[u][v] = self.adj[u].get(v, 0) + weight
        self.adj[v][u] = self.adj[v].get(u, 0) + weight

    def weight(self, u: int, v: int) -> int:
        return self.adj[u].get(v, 0)

    def neighbors(self, u: int) -> dict[int, int]:
        return self.adj[u]

    def edges(self):
        """Iterate (u, v, weight) with u < v."""
        for u in range(self.num_vertices):
            for v, w in self.adj[u].items():
                if u < v:
                    yield u, v, w

    @property
    def num_edges(self) -> int:
        return sum(1 for _ in self.edges())

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, AdjacencyGraph)
            and self.num_vertices == other.num_vertices
            and self.adj == other.adj
        )

    def __repr__(self) -> str:
        return f"AdjacencyGraph({self.num_vertices}, {sorted(self.edges())})"


def build_graph(circuit: Circuit) -> AdjacencyGraph:
    """Adjacency graph of an NCT (+SWAP) circuit."""
    graph = AdjacencyGraph(circuit.num_lines)
    for gate in circuit.gates:
        if gate.kind is GateKind.MCT:
            raise MustDecomposeError("adjacency graph is defined on NCT gates; decompose MCT first")
        if gate.kind is GateKind.NOT:
            continue
        for c in gate.controls:
            graph.add_edge(c, gate.target, 1)
    return graph


def arrangement_cost(graph: AdjacencyGraph, perm, weighted: bool = True) -> int:
    """Total edge stretch of a linear arrangement: sum over edges of
    |position(u) - position(v)|, weighted by edge weight unless disabled."""
    total = 0
    for u, v, w in graph.edges():
        total += (w if weighted else 1) * abs(perm[u] - perm[v])
    return total


def format_adjacency(graph: AdjacencyGraph) -> str:
    """Plain-text dump: one vertex per line, ``v: neighbor:weight ...``."""
    rows = []
    for u in range(graph.num_vertices):
        pairs = " ".join(f"{v}:{w}" for v, w in sorted(graph.adj[u].items()))
        rows.append(f"{u}: {pairs}".rstrip())
    return "\n".join(rows) + "\n"
