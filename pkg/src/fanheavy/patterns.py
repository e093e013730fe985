"""Catalog of the small pattern graphs and induced-copy enumeration.

Canonical pattern numbering (frozen so fixtures stay stable):
  claw       center 0, ends 1..3
  p4..p7     path order 0..k-1
  deer       triangle 0,1,2; pendant paths 0-3-4 and 1-5-6
  hourglass  shared vertex 0, triangles {0,1,2} and {0,3,4}
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, iter_bits, path_graph

ISO_MAX_N = 10


@dataclass(frozen=True)
class Pattern:
    name: str
    graph: Graph


def _claw() -> Graph:
    return Graph(4, [(0, 1), (0, 2), (0, 3)])


def _deer() -> Graph:
    return Graph(7, [(0, 1), (0, 2), (1, 2), (0, 3), (3, 4), (1, 5), (5, 6)])


def _hourglass() -> Graph:
    return Graph(5, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)])


_CATALOG = {
    "claw": _claw,
    "p4": lambda: path_graph(4),
    "p5": lambda: path_graph(5),
    "p6": lambda: path_graph(6),
    "p7": lambda: path_graph(7),
    "deer": _deer,
    "hourglass": _hourglass,
}

CATALOG_NAMES = tuple(_CATALOG)


def pattern(name: str, custom: Graph | None = None) -> Pattern:
    key = name.lower()
    if key == "custom":
        if custom is None:
            raise ValueError("custom pattern requires a graph")
        return Pattern("custom", custom)
    if key not in _CATALOG:
        raise ValueError(f"unknown pattern {name!r} (known: {', '.join(CATALOG_NAMES)})")
    return Pattern(key, _CATALOG[key]())


def custom_pattern(name: str, graph: Graph) -> Pattern:
    return Pattern(name, graph)


def pattern_from_spec(token: str) -> Pattern:
    """Catalog name, or a graph6 string for a custom pattern."""
    key = token.lower()
    if key in _CATALOG:
        return pattern(key)
    from .graphio import GraphFormatError, decode_graph6
    try:
        return Pattern(f"g6:{token}", decode_graph6(token))
    except GraphFormatError:
        raise ValueError(
            f"unknown pattern {token!r}: not a catalog name "
            f"({', '.join(CATALOG_NAMES)}) and not valid graph6")


def distance2_pairs(h: Graph) -> list[tuple[int, int]]:
    """All unordered pairs at distance exactly 2: non-adjacent with a common neighbor."""
    out = []
    for u in range(h.n):
        for v in range(u + 1, h.n):
            if not (h.adj[u] >> v) & 1 and h.adj[u] & h.adj[v]:
                out.append((u, v))
    return out


def is_isomorphic_small(g1: Graph, g2: Graph) -> bool:
    """Backtracking isomorphism test with degree pruning, for n <= 10."""
    if g1.n > ISO_MAX_N or g2.n > ISO_MAX_N:
        raise ValueError(f"isomorphism test limited to n <= {ISO_MAX_N}")
    if g1.n != g2.n or g1.num_edges() != g2.num_edges():
        return False
    deg1 = [g1.degree(v) for v in range(g1.n)]
    deg2 = [g2.degree(v) for v in range(g2.n)]
    if sorted(deg1) != sorted(deg2):
        return False
    n = g1.n
    # map vertices of g1 in decreasing-degree order; ties by index
    order = sorted(range(n), key=lambda v: (-deg1[v], v))
    image = [-1] * n
    used = 0

    def extend(pos: int) -> bool:
        nonlocal used
        if pos == n:
            return True
        v = order[pos]
        for w in range(n):
            if (used >> w) & 1 or deg2[w] != deg1[v]:
                continue
            ok = True
            for prev in order[:pos]:
                if ((g1.adj[v] >> prev) & 1) != ((g2.adj[w] >> image[prev]) & 1):
                    ok = False
                    break
            if not ok:
                continue
            image[v] = w
            used |= 1 << w
            if extend(pos + 1):
                return True
            used ^= 1 << w
            image[v] = -1
        return False

    return extend(0)


def _search_order(p: Graph) -> list[int]:
    """Pattern-vertex order: max degree first, then always adjacent to a
    mapped vertex when possible (patterns are connected)."""
    if p.n == 0:
        return []
    order = [max(range(p.n), key=lambda v: (p.degree(v), -v))]
    placed = 1 << order[0]
    while len(order) < p.n:
        best = None
        for v in range(p.n):
            if (placed >> v) & 1:
                continue
            anchored = (p.adj[v] & placed).bit_count()
            key = (anchored, p.degree(v), -v)
            if best is None or key > best[0]:
                best = (key, v)
        order.append(best[1])
        placed |= 1 << best[1]
    return order


def enumerate_induced_copies(g: Graph, p: Pattern) -> list[tuple[int, ...]]:
    """All vertex subsets of `g` inducing a copy of the pattern.

    Returns each copy once as a sorted tuple; the list is sorted
    lexicographically.  Pattern-guided backtracking: pattern vertices are
    mapped one at a time and candidates are pruned with bitset masks from
    the adjacency/non-adjacency to already-mapped vertices.
    """
    pg = p.graph
    k = pg.n
    if k == 0 or k > g.n:
        return []
    order = _search_order(pg)
    full = g.full_mask()
    found: set[tuple[int, ...]] = set()
    image = [0] * k

    def extend(pos: int, used: int) -> None:
        if pos == k:
            found.add(tuple(sorted(image)))
            return
        pv = order[pos]
        mask = full & ~used
        for prev_pos in range(pos):
            host = image[prev_pos]
            if (pg.adj[pv] >> order[prev_pos]) & 1:
                mask &= g.adj[host]
            else:
                mask &= ~g.adj[host]
        for cand in iter_bits(mask):
            image[pos] = cand
            extend(pos + 1, used | (1 << cand))

    extend(0, 0)
    return sorted(found)


def has_induced_copy(g: Graph, p: Pattern) -> tuple[int, ...] | None:
    """Early-exit variant of enumerate_induced_copies.

    Returns the first copy hit by the deterministic search order (not
    necessarily the lexicographically smallest subset), or None when the
    host is pattern-free.
    """
    pg = p.graph
    k = pg.n
    if k == 0 or k > g.n:
        return None
    order = _search_order(pg)
    full = g.full_mask()
    image = [0] * k
    hit: list[tuple[int, ...]] = []

    def extend(pos: int, used: int) -> bool:
        if pos == k:
            hit.append(tuple(sorted(image[:k])))
            return True
        pv = order[pos]
        mask = full & ~used
        for prev_pos in range(pos):
            host = image[prev_pos]
            if (pg.adj[pv] >> order[prev_pos]) & 1:
                mask &= g.adj[host]
            else:
                mask &= ~g.adj[host]
        for cand in iter_bits(mask):
            image[pos] = cand
            if extend(pos + 1, used | (1 << cand)):
                return True
        return False

    if extend(0, 0):
        return hit[0]
    return None
