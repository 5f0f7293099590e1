"""Multilevel balanced graph bisection.

The classic three-phase scheme: coarsen by heavy-edge matching, split the
coarsest graph by greedy region growing, then project back level by level
with Fiduccia-Mattheyses boundary refinement under a balance constraint.
Splits are into halves of ceil(n/2) and floor(n/2) vertices; everything is
deterministic for a fixed seed.
"""

from __future__ import annotations

import random

from .graph import AdjacencyGraph

_COARSEN_BELOW = 16  # stop coarsening once a level is this small
_FM_PASSES = 8
_RESTARTS = 4


class _Level:
    """One coarsening level: adjacency dicts plus per-vertex cluster weights."""

    def __init__(self, adj: list[dict[int, int]], node_w: list[int]):
        self.adj = adj
        self.node_w = node_w
        self.n = len(adj)


def bisect(graph: AdjacencyGraph, vertices=None, *, seed: int = 0, weighted: bool = True):
    """Split a vertex subset into balanced halves with a small edge cut.

    Returns ``(left, right)`` as sorted lists of ceil(n/2) and floor(n/2)
    vertices; ties everywhere prefer lower vertex indices.
    """
    verts = sorted(range(graph.num_vertices) if vertices is None else set(vertices))
    n = len(verts)
    if n < 2:
        raise ValueError("bisection needs at least two vertices")
    index = {v: i for i, v in enumerate(verts)}
    adj: list[dict[int, int]] = [{} for _ in range(n)]
    for v in verts:
        for u, w in graph.neighbors(v).items():
            if u in index:
                adj[index[v]][index[u]] = w if weighted else 1
    level = _Level(adj, [1] * n)
    target_left = (n + 1) // 2

    rng = random.Random(seed)
    best: tuple[int, list[int]] | None = None
    for restart in range(_RESTARTS):
        in_left = _multilevel(level, target_left, random.Random(rng.getrandbits(32)), restart == 0)
        cut = _cut(level, in_left)
        left = [verts[i] for i in range(n) if in_left[i]]
        if best is None or (cut, left) < best:
            best = (cut, left)
    left = best[1]
    right = [v for v in verts if v not in set(left)]
    return left, right


def _multilevel(level: _Level, target_left: int, rng: random.Random, canonical: bool) -> list[bool]:
    levels = [level]
    maps: list[list[int]] = []
    while levels[-1].n > _COARSEN_BELOW:
        coarse, vmap = _contract(levels[-1], _heavy_edge_matching(levels[-1], rng))
        if coarse.n > 0.95 * levels[-1].n:  # no progress, give up coarsening
            break
        levels.append(coarse)
        maps.append(vmap)

    coarsest = levels[-1]
    in_left = _greedy_grow(coarsest, target_left, rng, canonical)
    _rebalance(coarsest, in_left, target_left)
    _fm_refine(coarsest, in_left, target_left)
    for lvl, vmap in zip(levels[-2::-1], maps[::-1]):
        in_left = [in_left[vmap[v]] for v in range(lvl.n)]
        _rebalance(lvl, in_left, target_left)
        _fm_refine(lvl, in_left, target_left)
    return in_left


# --- coarsening --------------------------------------------------------------


def _heavy_edge_matching(level: _Level, rng: random.Random) -> list[int]:
    """match[v] = partner vertex, or v itself when unmatched."""
    order = list(range(level.n))
    rng.shuffle(order)
    match = list(range(level.n))
    taken = [False] * level.n
    for v in order:
        if taken[v]:
            continue
        taken[v] = True
        best, best_w = -1, 0
        for u, w in level.adj[v].items():
            if not taken[u] and (w > best_w or (w == best_w and (best < 0 or u < best))):
                best, best_w = u, w
        if best >= 0:
            taken[best] = True
            match[v] = best
            match[best] = v
    return match


def _contract(level: _Level, match: list[int]) -> tuple[_Level, list[int]]:
    """Merge matched pairs; returns the coarse level and vertex -> cluster map."""
    vmap = [-1] * level.n
    nxt = 0
    for v in range(level.n):
        if vmap[v] >= 0:
            continue
        vmap[v] = nxt
        if match[v] != v:
            vmap[match[v]] = nxt
        nxt += 1
    adj: list[dict[int, int]] = [{} for _ in range(nxt)]
    node_w = [0] * nxt
    for v in range(level.n):
        node_w[vmap[v]] += level.node_w[v]
        cv = vmap[v]
        for u, w in level.adj[v].items():
            cu = vmap[u]
            if cu != cv:
                adj[cv][cu] = adj[cv].get(cu, 0) + w
    return _Level(adj, node_w), vmap


# --- initial bisection --------------------------------------------------------


def _greedy_grow(level: _Level, target_left: int, rng: random.Random, canonical: bool) -> list[bool]:
    """Grow the left side from a seed vertex, always absorbing the frontier
    vertex most connected to it; unreachable vertices join lowest-index first."""
    in_left = [False] * level.n
    start = 0 if canonical else rng.randrange(level.n)
    in_left[start] = True
    left_w = level.node_w[start]
    attach = [0] * level.n  # connection weight to the growing region
    for u, w in level.adj[start].items():
        attach[u] += w
    while left_w < target_left:
        best = -1
        for v in range(level.n):
            if in_left[v] or left_w + level.node_w[v] > target_left:
                continue
            if best < 0 or attach[v] > attach[best]:
                best = v
        if best < 0:
            # nothing fits under the target: take the lightest leftover
            rest = [v for v in range(level.n) if not in_left[v]]
            if not rest:
                break
            best = min(rest, key=lambda v: (level.node_w[v], v))
        in_left[best] = True
        left_w += level.node_w[best]
        for u, w in level.adj[best].items():
            attach[u] += w
    return in_left


# --- refinement ---------------------------------------------------------------


def _cut(level: _Level, in_left: list[bool]) -> int:
    total = 0
    for v in range(level.n):
        if in_left[v]:
            total += sum(w for u, w in level.adj[v].items() if not in_left[u])
    return total


def _left_weight(level: _Level, in_left: list[bool]) -> int:
    return sum(w for w, flag in zip(level.node_w, in_left) if flag)


def _rebalance(level: _Level, in_left: list[bool], target_left: int) -> None:
    """Move lowest-cut-damage vertices off the heavy side until the left
    weight is as close to its target as node granularity allows."""
    while True:
        left_w = _left_weight(level, in_left)
        imbalance = abs(left_w - target_left)
        from_left = left_w > target_left
        best, best_key = -1, None
        for v in range(level.n):
            if in_left[v] != from_left:
                continue
            moved = left_w - level.node_w[v] if from_left else left_w + level.node_w[v]
            if abs(moved - target_left) >= imbalance:
                continue
            gain = _gain(level, in_left, v)
            key = (-gain, v)
            if best_key is None or key < best_key:
                best, best_key = v, key
        if best < 0:
            return
        in_left[best] = not in_left[best]


def _gain(level: _Level, in_left: list[bool], v: int) -> int:
    ext = sum(w for u, w in level.adj[v].items() if in_left[u] != in_left[v])
    return 2 * ext - sum(level.adj[v].values())  # ext - int


def _fm_refine(level: _Level, in_left: list[bool], target_left: int) -> None:
    """Fiduccia-Mattheyses passes: move the best-gain movable vertex, lock it,
    keep the best balanced prefix; repeat while a pass improves the cut."""
    slack = max(level.node_w)
    for _ in range(_FM_PASSES):
        gains = [_gain(level, in_left, v) for v in range(level.n)]
        locked = [False] * level.n
        left_w = _left_weight(level, in_left)
        cut = _cut(level, in_left)
        start_key = (abs(left_w - target_left), cut)
        best_key, best_step = start_key, 0
        trail: list[int] = []
        for _step in range(level.n):
            imbalance = abs(left_w - target_left)
            best_v, best_gain = -1, None
            for v in range(level.n):
                if locked[v]:
                    continue
                moved = left_w - level.node_w[v] if in_left[v] else left_w + level.node_w[v]
                new_imb = abs(moved - target_left)
                if new_imb > slack and new_imb >= imbalance:
                    continue
                if best_gain is None or gains[v] > best_gain or (gains[v] == best_gain and v < best_v):
                    best_v, best_gain = v, gains[v]
            if best_v < 0:
                break
            v = best_v
            left_w += -level.node_w[v] if in_left[v] else level.node_w[v]
            cut -= gains[v]
            for u, w in level.adj[v].items():
                gains[u] += 2 * w if in_left[u] == in_left[v] else -2 * w
            gains[v] = -gains[v]
            in_left[v] = not in_left[v]
            locked[v] = True
            trail.append(v)
            key = (abs(left_w - target_left), cut)
            if key < best_key:
                best_key, best_step = key, len(trail)
        for v in trail[best_step:]:  # drop the tail beyond the best prefix
            in_left[v] = not in_left[v]
        if best_key >= start_key:
            break
