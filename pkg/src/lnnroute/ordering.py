"""Qubit-line reordering.

Orders the lines of a circuit so that gates act on nearby lines, shrinking
the SWAP overhead of LNN conversion. The main strategy lists the leaves of a
recursive balanced bisection of the line adjacency graph; `labels` reproduces
the partition-then-stable-sort post-processing instead; `exhaustive` is the
small-circuit oracle that tries every permutation.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

from .circuit import CapacityError, Circuit, GateKind, apply_ordering, identity_ordering
from .graph import AdjacencyGraph, arrangement_cost, build_graph
from .lnn import SwapCount, circuit_swap_pairs, toffoli_pairs
from .partition import bisect

STRATEGIES = ("recursive", "labels", "exhaustive", "identity")


def linear_order(graph: AdjacencyGraph, *, seed: int = 0, weighted: bool = True) -> tuple[int, ...]:
    """Arrange all lines by recursive balanced bisection.

    Returns ``perm`` with perm[line] = position. Each split's two blocks are
    concatenated in whichever order and orientation gives the least edge
    stretch inside the merged block; ties fall back to lowest line index.
    """
    rng = random.Random(seed)
    sequence = _order_subset(graph, list(range(graph.num_vertices)), rng, weighted)
    perm = [0] * graph.num_vertices
    for pos, line in enumerate(sequence):
        perm[line] = pos
    return tuple(perm)


def _order_subset(graph: AdjacencyGraph, verts: list[int], rng: random.Random, weighted: bool) -> list[int]:
    if len(verts) <= 2:
        return sorted(verts)
    left, right = bisect(graph, verts, seed=rng.getrandbits(32), weighted=weighted)
    seq_l = _order_subset(graph, left, rng, weighted)
    seq_r = _order_subset(graph, right, rng, weighted)
    candidates = []
    for a, b in ((seq_l, seq_r), (seq_r, seq_l)):
        for fa in (a, a[::-1]):
            for fb in (b, b[::-1]):
                candidates.append(fa + fb)
    return min(candidates, key=lambda seq: (_block_stretch(graph, seq, weighted), seq))


def _block_stretch(graph: AdjacencyGraph, seq: list[int], weighted: bool) -> int:
    pos = {v: i for i, v in enumerate(seq)}
    total = 0
    for v in seq:
        for u, w in graph.neighbors(v).items():
            if u in pos and u < v:
                total += (w if weighted else 1) * abs(pos[u] - pos[v])
    return total


def partition_labels(graph: AdjacencyGraph, parts: int | None = None, *, seed: int = 0,
                     weighted: bool = True) -> list[int]:
    """Partition lines into ``parts`` groups (default: one per line) by
    recursive bisection; labels increase left-to-right over the leaves."""
    n = graph.num_vertices
    parts = n if parts is None else parts
    if not 1 <= parts <= n:
        raise ValueError(f"parts must be in 1..{n}, got {parts}")
    rng = random.Random(seed)
    labels = [0] * n
    counter = itertools.count()

    def split(verts: list[int], budget: int) -> None:
        if budget <= 1 or len(verts) <= 1:
            label = next(counter)
            for v in verts:
                labels[v] = label
            return
        left, right = bisect(graph, verts, seed=rng.getrandbits(32), weighted=weighted)
        split(left, (budget + 1) // 2)
        split(right, budget // 2)

    split(list(range(n)), parts)
    return labels


def order_from_labels(labels) -> tuple[int, ...]:
    """Linearize partition labels: stable sort of lines by label, ties by
    line index; perm[line] = rank in that sort."""
    order = sorted(range(len(labels)), key=lambda i: (labels[i], i))
    perm = [0] * len(labels)
    for pos, line in enumerate(order):
        perm[line] = pos
    return tuple(perm)


def best_ordering_exhaustive(circuit: Circuit, max_lines: int = 8) -> tuple[int, ...]:
    """Try every line permutation and return the one minimizing the circuit's
    SWAP-pair count; ties go to the lexicographically first permutation."""
    n = circuit.num_lines
    if n > max_lines:
        raise CapacityError(f"exhaustive ordering of {n} lines exceeds the guard of {max_lines}")
    twos: list[tuple[int, int]] = []
    threes: list[tuple[int, int, int]] = []
    for g in circuit.gates:
        if g.kind is GateKind.TOFFOLI:
            threes.append((g.controls[0], g.controls[1], g.target))
        elif g.kind in (GateKind.CNOT, GateKind.SWAP):
            twos.append((g.controls[0], g.target))

    best_perm = identity_ordering(n)
    best_cost = _ordered_pairs(best_perm, twos, threes, None)
    for perm in itertools.permutations(range(n)):
        cost = _ordered_pairs(perm, twos, threes, best_cost)
        if cost is not None and cost < best_cost:
            best_cost, best_perm = cost, perm
    return tuple(best_perm)


def _ordered_pairs(perm, twos, threes, limit) -> int | None:
    """Swap pairs of the relabeled circuit; None once ``limit`` is reached."""
    cost = 0
    for a, b in twos:
        cost += abs(perm[a] - perm[b]) - 1
        if limit is not None and cost >= limit:
            return None
    for c1, c2, t in threes:
        cost += toffoli_pairs(perm[c1], perm[c2], perm[t])
        if limit is not None and cost >= limit:
            return None
    return cost


@dataclass(frozen=True)
class ReorderOutcome:
    """Reordering result: the relabeled circuit plus both SWAP tallies."""

    circuit: Circuit
    ordering: tuple[int, ...]
    pairs_before: SwapCount
    pairs_after: SwapCount


def reorder_pipeline(circuit: Circuit, strategy: str = "recursive", *, seed: int = 0,
                     weighted: bool = True, parts: int | None = None) -> ReorderOutcome:
    """Count SWAP pairs, reorder the lines, count again.

    The reordered circuit is returned even when it is worse; callers decide
    whether to keep it. The circuit must be NCT-only (decompose MCT first).
    """
    pairs_before = circuit_swap_pairs(circuit)
    if strategy == "identity":
        perm = identity_ordering(circuit.num_lines)
    elif strategy == "recursive":
        perm = linear_order(build_graph(circuit), seed=seed, weighted=weighted)
    elif strategy == "labels":
        labels = partition_labels(build_graph(circuit), parts, seed=seed, weighted=weighted)
        perm = order_from_labels(labels)
    elif strategy == "exhaustive":
        perm = best_ordering_exhaustive(circuit)
    else:
        raise ValueError(f"unknown ordering strategy {strategy!r}; pick one of {STRATEGIES}")
    reordered = apply_ordering(circuit, perm)
    return ReorderOutcome(reordered, perm, pairs_before, circuit_swap_pairs(reordered))
