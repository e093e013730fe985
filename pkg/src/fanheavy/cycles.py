"""Exact cycle search: Hamilton cycles, cycles through a required vertex
set (heavy cycles), and Ore-cycle expansion to real cycles.

All solvers are deterministic: extension starts from the lowest-numbered
admissible vertex and neighbors are tried in ascending order.  Returned
cycles are normalized (minimum vertex first, second element smaller than
the last) so fixtures compare by equality.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, iter_bits


class LemmaViolationError(RuntimeError):
    """Ore-cycle expansion found no covering real cycle.

    Either the supplied o-cycle was invalid, or a counterexample to the
    expansion lemma has been found; both must be reported loudly.
    """


def normalize_cycle(seq: tuple[int, ...] | list[int]) -> tuple[int, ...]:
    """Rotate to start at the minimum vertex; orient so seq[1] < seq[-1]."""
    seq = tuple(seq)
    k = len(seq)
    i = seq.index(min(seq))
    rot = seq[i:] + seq[:i]
    if k >= 3 and rot[1] > rot[-1]:
        rot = (rot[0],) + tuple(reversed(rot[1:]))
    return rot


def is_valid_cycle(g: Graph, seq: tuple[int, ...]) -> bool:
    k = len(seq)
    if k < 3 or len(set(seq)) != k:
        return False
    return all(g.has_edge(seq[i], seq[(i + 1) % k]) for i in range(k))


@dataclass(frozen=True)
class OCycle:
    """Cyclic vertex sequence whose consecutive pairs are Ore-adjacent;
    `virtual[i]` flags the pair (seq[i], seq[i+1 mod k]) being a non-edge."""
    seq: tuple[int, ...]
    virtual: tuple[bool, ...]


def make_o_cycle(g: Graph, seq: tuple[int, ...] | list[int]) -> OCycle:
    seq = tuple(seq)
    k = len(seq)
    if k < 3:
        raise ValueError("o-cycle needs at least 3 vertices")
    if len(set(seq)) != k:
        raise ValueError("o-cycle vertices must be distinct")
    flags = []
    for i in range(k):
        u, v = seq[i], seq[(i + 1) % k]
        if not g.ore_adjacent(u, v):
            raise ValueError(f"pair ({u},{v}) is not Ore-adjacent")
        flags.append(not g.has_edge(u, v))
    return OCycle(seq, tuple(flags))


def heavy_vertices(g: Graph) -> tuple[int, ...]:
    return tuple(v for v in range(g.n) if 2 * g.degree(v) >= g.n)


def find_hamilton_cycle(g: Graph) -> tuple[int, ...] | None:
    """Exact backtracking Hamilton-cycle search; None iff non-Hamiltonian."""
    n = g.n
    if n < 3:
        return None
    # necessary conditions, checked up front
    if any(g.degree(v) < 2 for v in range(n)):
        return None
    if not g.is_two_connected():
        return None
    full = g.full_mask()
    path = [0]

    def extend(current: int, visited: int) -> bool:
        if visited == full:
            return (g.adj[current] >> 0) & 1 == 1
        remaining = full & ~visited
        # prune: every unvisited vertex still needs 2 usable connections
        # (to other unvisited vertices, the path head 0, or `current`)
        usable = remaining | (1 << 0) | (1 << current)
        for v in iter_bits(remaining):
            if (g.adj[v] & usable).bit_count() < 2:
                return False
        # prune: all unvisited vertices reachable from current without
        # re-entering the path
        if g.reachable_from(1 << current, remaining | (1 << current)) \
                != remaining | (1 << current):
            return False
        for w in iter_bits(g.adj[current] & remaining):
            path.append(w)
            if extend(w, visited | (1 << w)):
                return True
            path.pop()
        return False

    if extend(0, 1):
        return normalize_cycle(path)
    return None


def find_cycle_through(g: Graph, required: set[int] | tuple[int, ...]) -> tuple[int, ...] | None:
    """Some cycle whose vertex set contains `required`, or None.

    Exact search: Hamiltonicity-style backtracking in which vertices
    outside the required set are optional.
    """
    req = sorted(set(required))
    for v in req:
        g._check(v)
    if g.n < 3:
        return None
    if not req:
        # any cycle at all: anchor on each vertex in turn
        for v in range(g.n):
            c = find_cycle_through(g, {v})
            if c is not None:
                return c
        return None
    start = req[0]
    req_mask = 0
    for v in req:
        req_mask |= 1 << v
    full = g.full_mask()
    path = [start]

    def extend(current: int, visited: int) -> tuple[int, ...] | None:
        missing = req_mask & ~visited
        if not missing and len(path) >= 3 and (g.adj[current] >> start) & 1:
            return normalize_cycle(path)
        # prune: all missing required vertices and the start must be
        # reachable from current through unvisited territory
        allowed = (full & ~visited) | (1 << current) | (1 << start)
        reach = g.reachable_from(1 << current, allowed)
        if missing & ~reach:
            return None
        if not (reach >> start) & 1:
            return None
        for w in iter_bits(g.adj[current] & full & ~visited):
            path.append(w)
            got = extend(w, visited | (1 << w))
            if got is not None:
                return got
            path.pop()
        return None

    return extend(start, 1 << start)


def expand_o_cycle(g: Graph, oc: OCycle) -> tuple[int, ...]:
    """Real cycle covering the o-cycle's vertex set.

    The expansion lemma guarantees existence for any valid o-cycle, so
    failure raises LemmaViolationError rather than returning None.
    """
    # re-validate the input so a junk o-cycle cannot masquerade as a
    # lemma counterexample
    oc = make_o_cycle(g, oc.seq)
    if not any(oc.virtual):
        return normalize_cycle(oc.seq)
    cycle = find_cycle_through(g, set(oc.seq))
    if cycle is None:
        raise LemmaViolationError(
            f"no real cycle covers o-cycle {oc.seq} (n={g.n}); "
            "invalid input or lemma counterexample")
    return cycle


def hamiltonian_brute_force(g: Graph) -> bool:
    """Permutation-based Hamiltonicity oracle (independent of the solver)."""
    from itertools import permutations
    n = g.n
    if n < 3:
        return False
    for perm in permutations(range(1, n)):
        seq = (0,) + perm
        if all((g.adj[seq[i]] >> seq[(i + 1) % n]) & 1 for i in range(n)):
            return True
    return False
