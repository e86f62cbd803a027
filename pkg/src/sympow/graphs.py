"""Finite simple graphs, edge ideals, and the odd-girth equality threshold.

For the edge ideal of a graph, symbolic and ordinary powers agree up to n
exactly when the graph has no odd cycle of length at most 2n-1.  So the
least exponent where they part ways is read off the odd girth: it is
(odd_girth + 1) / 2, infinite exactly for bipartite graphs.  A shortest odd
cycle also certifies the failure: the product of its vertices lies in the
symbolic power but is too small in degree to lie in the ordinary one.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import SizeGuardExceeded
from .monomials import Monomial, MonomialIdeal
from .symbolic import EqualityResult, equals_ordinary

DEFAULT_MAX_VERIFY = 6


@dataclass(frozen=True)
class Graph:
    """A finite simple graph: no loops, no multi-edges, vertices 0..n-1."""

    num_vertices: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        if self.num_vertices <= 0:
            raise ValueError("num_vertices must be positive")
        canon = set()
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < self.num_vertices and 0 <= v < self.num_vertices):
                raise ValueError(f"edge ({u}, {v}) out of range")
            canon.add((min(u, v), max(u, v)))
        object.__setattr__(self, "edges", tuple(sorted(canon)))

    @classmethod
    def from_edges(cls, num_vertices: int, edges: Iterable[Sequence[int]]) -> Graph:
        return cls(num_vertices, tuple((int(u), int(v)) for u, v in edges))

    @classmethod
    def cycle(cls, n: int) -> Graph:
        return cls(n, tuple((i, (i + 1) % n) for i in range(n)))

    def adjacency(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in range(self.num_vertices)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        for nbrs in adj:
            nbrs.sort()
        return adj


def edge_ideal(graph: Graph) -> MonomialIdeal:
    """The square-free quadric ideal (x_i x_j : ij an edge)."""
    if not graph.edges:
        raise ValueError("graph has no edges")
    gens = []
    for u, v in graph.edges:
        vec = [0] * graph.num_vertices
        vec[u] = vec[v] = 1
        gens.append(tuple(vec))
    return MonomialIdeal.from_generators(graph.num_vertices, gens)


def is_bipartite(graph: Graph) -> bool:
    """Two-colorability, by breadth-first search per component."""
    color = [-1] * graph.num_vertices
    adj = graph.adjacency()
    for start in range(graph.num_vertices):
        if color[start] != -1:
            continue
        color[start] = 0
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for w in adj[u]:
                if color[w] == -1:
                    color[w] = 1 - color[u]
                    queue.append(w)
                elif color[w] == color[u]:
                    return False
    return True


def _canonical_cycle(cycle: Sequence[int]) -> tuple[int, ...]:
    """Least rotation/reflection of a cyclic vertex sequence."""
    n = len(cycle)
    best: tuple[int, ...] | None = None
    for seq in (tuple(cycle), tuple(reversed(cycle))):
        for shift in range(n):
            rotated = seq[shift:] + seq[:shift]
            if best is None or rotated < best:
                best = rotated
    assert best is not None
    return best


def shortest_odd_cycle(graph: Graph) -> tuple[int, ...] | None:
    """A shortest odd cycle as a canonical vertex sequence, or None.

    Breadth-first search from every vertex; an edge inside one layer closes
    an odd walk through the root, and the minimum such walk is a simple
    cycle of minimum odd length (a shorter odd cycle would embed in any
    non-simple or non-minimal candidate).  Among equally short cycles the
    lexicographically least rotation/reflection is returned.
    """
    adj = graph.adjacency()
    best_len = math.inf
    best_cycle: tuple[int, ...] | None = None
    for root in range(graph.num_vertices):
        dist = {root: 0}
        parent = {root: -1}
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in adj[u]:
                if w not in dist:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
        for u, v in graph.edges:
            if u in dist and v in dist and dist[u] == dist[v]:
                length = dist[u] + dist[v] + 1
                if length > best_len:
                    continue
                path_u = _walk_to_root(parent, u)
                path_v = _walk_to_root(parent, v)
                cycle = tuple(reversed(path_u)) + tuple(path_v[:-1])
                if len(set(cycle)) != len(cycle):
                    continue
                candidate = _canonical_cycle(cycle)
                if length < best_len or (best_cycle is not None and candidate < best_cycle):
                    best_len = length
                    best_cycle = candidate
    return best_cycle


def _walk_to_root(parent: dict[int, int], v: int) -> list[int]:
    path = [v]
    while parent[path[-1]] != -1:
        path.append(parent[path[-1]])
    return path


def odd_girth(graph: Graph) -> float:
    """Length of a shortest odd cycle; math.inf exactly when bipartite."""
    cycle = shortest_odd_cycle(graph)
    return math.inf if cycle is None else len(cycle)


def equality_threshold(graph: Graph) -> float:
    """Least t with I^(t) != I^t for the edge ideal, read off the odd girth."""
    if not graph.edges:
        raise ValueError("graph has no edges")
    g = odd_girth(graph)
    return math.inf if g == math.inf else (int(g) + 1) // 2


def _cycle_of_length(graph: Graph, length: int) -> tuple[int, ...] | None:
    """Lexicographically least simple cycle of the exact given length."""
    adj = graph.adjacency()

    def extend(path: list[int], seen: set[int]) -> tuple[int, ...] | None:
        if len(path) == length:
            return tuple(path) if path[0] in adj[path[-1]] else None
        for w in adj[path[-1]]:
            # keep path[0] minimal so each cycle is found from its least vertex
            if w in seen or w < path[0]:
                continue
            path.append(w)
            seen.add(w)
            found = extend(path, seen)
            if found is not None:
                return found
            seen.discard(w)
            path.pop()
        return None

    for start in range(graph.num_vertices):
        found = extend([start], {start})
        if found is not None:
            return found
    return None


def odd_cycle_witness(graph: Graph, t: int) -> Monomial:
    """Product of the vertices of an odd cycle of length 2t-1.

    Such a monomial has degree 2t-1, too small for a product of t edges, yet
    every vertex cover contains at least t of the cycle's vertices, so it
    lies in I^(t) but outside I^t.
    """
    if t < 1:
        raise ValueError("t must be a positive integer")
    length = 2 * t - 1
    if length < 3:
        raise ValueError("no odd cycle of length 1 exists in a simple graph")
    girth = odd_girth(graph)
    if girth == length:
        cycle = shortest_odd_cycle(graph)
    else:
        cycle = _cycle_of_length(graph, length)
    if cycle is None:
        raise ValueError(f"graph has no odd cycle of length {length}")
    vec = [0] * graph.num_vertices
    for v in cycle:
        vec[v] = 1
    return Monomial(tuple(vec))


def verify_threshold(
    graph: Graph, up_to: int, force: bool = False
) -> list[dict[str, object]]:
    """Compare the combinatorial equality prediction with real computation.

    For each k up to the bound, predicts I^(k) = I^k from the odd girth and
    computes the truth through the symbolic machinery.  Symbolic powers of
    edge ideals grow quickly, so bounds above 6 require force=True.
    """
    if up_to < 1:
        raise ValueError("up_to must be a positive integer")
    if up_to > DEFAULT_MAX_VERIFY and not force:
        raise SizeGuardExceeded(
            f"verification up to {up_to} exceeds the default bound "
            f"{DEFAULT_MAX_VERIFY}; pass force=True to proceed"
        )
    ideal = edge_ideal(graph)
    threshold = equality_threshold(graph)
    report = []
    for k in range(1, up_to + 1):
        predicted = k < threshold
        result: EqualityResult = equals_ordinary(ideal, k)
        entry: dict[str, object] = {
            "k": k,
            "predicted_equal": predicted,
            "computed_equal": result.equal,
            "agree": predicted == result.equal,
        }
        if result.witness is not None:
            entry["witness"] = list(result.witness.exponents)
        report.append(entry)
    return report
