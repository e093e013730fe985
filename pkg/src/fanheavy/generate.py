"""Small-graph corpora: exhaustive labeled enumeration, isomorphism-
reduced representatives, and seeded random graphs.

The labeled enumerator walks every upper-triangle bitmask, so it is exact
but exponential; it is the ground-truth corpus for n <= 6-7.  For larger
n the representative corpus (one graph per isomorphism class, built by
vertex augmentation with invariant-bucketed dedup) verifies the same
isomorphism-invariant statements at a fraction of the cost.
"""

from __future__ import annotations

import random
from itertools import combinations
from typing import Iterator

from .graph import Graph
from .patterns import is_isomorphic_small

DEFAULT_SEED = 1729


def _pairs(n: int) -> list[tuple[int, int]]:
    return list(combinations(range(n), 2))


def labeled_graphs(n: int) -> Iterator[Graph]:
    """All 2^(n choose 2) labeled graphs on n vertices, by edge bitmask."""
    pairs = _pairs(n)
    for mask in range(1 << len(pairs)):
        rows = [0] * n
        m = mask
        while m:
            low = m & -m
            u, v = pairs[low.bit_length() - 1]
            rows[u] |= 1 << v
            rows[v] |= 1 << u
            m ^= low
        yield Graph.from_rows(tuple(rows))


def two_connected_labeled(n: int) -> Iterator[Graph]:
    for g in labeled_graphs(n):
        if g.is_two_connected():
            yield g


def refinement_key(g: Graph, rounds: int = 3) -> tuple:
    """Isomorphism-invariant bucket key via iterated color refinement.

    Colors start as degrees; each round replaces a color with its rank in
    the sorted list of (color, sorted neighbor colors) signatures, which
    is canonical across isomorphic graphs.
    """
    colors = [g.degree(v) for v in range(g.n)]
    for _ in range(rounds):
        sigs = [(colors[v], tuple(sorted(colors[w] for w in g.neighbors(v))))
                for v in range(g.n)]
        ranking = {s: i for i, s in enumerate(sorted(set(sigs)))}
        colors = [ranking[s] for s in sigs]
    return (g.n, g.num_edges(), tuple(sorted(colors)))


def nonisomorphic_graphs(n: int) -> list[Graph]:
    """One representative per isomorphism class of graphs on n vertices.

    Built by augmenting the (n-1)-vertex representatives with every
    possible neighborhood for a new vertex, then deduplicating inside
    refinement-key buckets with the exact isomorphism test.
    """
    if n == 0:
        return [Graph(0)]
    reps: dict[tuple, list[Graph]] = {}
    for base in nonisomorphic_graphs(n - 1):
        for nbhd in range(1 << (n - 1)):
            rows = list(base.adj) + [0]
            rest = nbhd
            while rest:
                low = rest & -rest
                v = low.bit_length() - 1
                rows[v] |= 1 << (n - 1)
                rows[n - 1] |= 1 << v
                rest ^= low
            g = Graph.from_rows(tuple(rows))
            key = refinement_key(g)
            bucket = reps.setdefault(key, [])
            if not any(is_isomorphic_small(g, h) for h in bucket):
                bucket.append(g)
    return [g for bucket in reps.values() for g in bucket]


def two_connected_representatives(n: int) -> list[Graph]:
    return [g for g in nonisomorphic_graphs(n) if g.is_two_connected()]


def random_graph(rng: random.Random, n: int, p: float | None = None) -> Graph:
    if p is None:
        p = rng.uniform(0.1, 0.9)
    edges = [(u, v) for u, v in _pairs(n) if rng.random() < p]
    return Graph(n, edges)


def random_graphs(count: int, max_n: int, seed: int = DEFAULT_SEED,
                  min_n: int = 1) -> Iterator[Graph]:
    """Deterministic stream of `count` random graphs with min_n <= n <= max_n."""
    rng = random.Random(seed)
    for _ in range(count):
        n = rng.randint(min_n, max_n)
        yield random_graph(rng, n)


def random_o_cycle(rng: random.Random, g: Graph):
    """Random valid o-cycle grown greedily over the Ore-extended edge set,
    or None when the random walk cannot close into a cycle."""
    from .cycles import make_o_cycle
    if g.n < 3:
        return None
    start = rng.randrange(g.n)
    seq = [start]
    target = rng.randint(3, g.n)
    while len(seq) < target:
        opts = [v for v in range(g.n) if v not in seq
                and g.ore_adjacent(seq[-1], v)]
        if not opts:
            break
        seq.append(rng.choice(opts))
    while len(seq) >= 3:
        if g.ore_adjacent(seq[-1], seq[0]):
            return make_o_cycle(g, tuple(seq))
        seq.pop()
    return None
