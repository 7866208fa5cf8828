"""Simple finite digraphs and their elementary queries.

Vertices are dense integer ids 0..n-1.  Arcs are ordered (tail, head) pairs
with no loops and no repeated pairs; two opposite arcs between the same pair
of vertices are allowed and act as an undirected edge of the underlying
graph.  The underlying graph is treated as a multigraph for girth purposes:
an opposite arc pair counts as a cycle of length 2.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass

from .errors import InputError


class Digraph:
    """Immutable digraph with sorted adjacency precomputed in both directions."""

    __slots__ = ("n", "arcs", "out_adj", "in_adj")

    def __init__(self, n: int, arcs=()):
        if n < 1:
            raise InputError(f"vertex count must be >= 1, got {n}")
        arc_set = set()
        for u, v in arcs:
            if u == v:
                raise InputError(f"loop ({u}, {u}) is not allowed")
            if not (0 <= u < n and 0 <= v < n):
                raise InputError(f"arc ({u}, {v}) is out of range for n={n}")
            arc_set.add((u, v))
        outs = [[] for _ in range(n)]
        ins = [[] for _ in range(n)]
        for u, v in sorted(arc_set):
            outs[u].append(v)
            ins[v].append(u)
        self.n = n
        self.arcs = frozenset(arc_set)
        self.out_adj = tuple(tuple(vs) for vs in outs)
        self.in_adj = tuple(tuple(us) for us in ins)

    @property
    def arc_count(self) -> int:
        return len(self.arcs)

    def has_arc(self, u: int, v: int) -> bool:
        return (u, v) in self.arcs

    def out_degree(self, v: int) -> int:
        return len(self.out_adj[v])

    def in_degree(self, v: int) -> int:
        return len(self.in_adj[v])

    def neighbors(self, v: int) -> tuple[int, ...]:
        """Underlying neighbors of v, sorted; each neighbor listed once."""
        return tuple(sorted(set(self.out_adj[v]) | set(self.in_adj[v])))

    def degree(self, v: int) -> int:
        """Degree of v in the underlying simple graph."""
        return len(set(self.out_adj[v]) | set(self.in_adj[v]))

    def __eq__(self, other):
        return (
            isinstance(other, Digraph)
            and self.n == other.n
            and self.arcs == other.arcs
        )

    def __hash__(self):
        return hash((self.n, self.arcs))

    def __repr__(self):
        return f"Digraph(n={self.n}, arcs={self.arc_count})"


def _check_vertex(d: Digraph, v: int) -> None:
    if not (0 <= v < d.n):
        raise InputError(f"vertex {v} is out of range for n={d.n}")


@dataclass(frozen=True)
class NeighborhoodPartition:
    """Split of a vertex's underlying neighbors by arc direction.

    in_only holds neighbors with only an arc into the vertex, out_only those
    with only an arc out of it, both those joined in both directions.
    """

    in_only: frozenset
    out_only: frozenset
    both: frozenset


def neighborhood_partition(d: Digraph, v: int) -> NeighborhoodPartition:
    """Classify every underlying neighbor of v by the direction of its arcs."""
    _check_vertex(d, v)
    outs = set(d.out_adj[v])
    ins = set(d.in_adj[v])
    return NeighborhoodPartition(
        in_only=frozenset(ins - outs),
        out_only=frozenset(outs - ins),
        both=frozenset(ins & outs),
    )


def _reachable(adj, start: int) -> int:
    """Number of vertices reachable from start along the given adjacency."""
    seen = [False] * len(adj)
    seen[start] = True
    queue = deque([start])
    count = 1
    while queue:
        u = queue.popleft()
        for w in adj[u]:
            if not seen[w]:
                seen[w] = True
                count += 1
                queue.append(w)
    return count


def is_strongly_connected(d: Digraph) -> bool:
    """True when every vertex reaches every other along directed arcs.

    A single vertex is strongly connected.
    """
    return _reachable(d.out_adj, 0) == d.n and _reachable(d.in_adj, 0) == d.n


def is_weakly_connected(d: Digraph) -> bool:
    """True when the underlying graph is connected."""
    und = [set(d.out_adj[v]) | set(d.in_adj[v]) for v in range(d.n)]
    return _reachable(und, 0) == d.n


def count_sources(d: Digraph) -> int:
    """Number of vertices with in-degree zero."""
    return sum(1 for v in range(d.n) if not d.in_adj[v])


def underlying_girth(d: Digraph):
    """Length of a shortest cycle of the underlying multigraph.

    An opposite arc pair is a 2-cycle.  Returns math.inf when the underlying
    graph is acyclic (a forest).
    """
    for u, v in d.arcs:
        if u < v and (v, u) in d.arcs:
            return 2
    # No multi-edges remain, so ordinary BFS girth on the simple graph works.
    und = [d.neighbors(v) for v in range(d.n)]
    best = math.inf
    for s in range(d.n):
        dist = [-1] * d.n
        parent = [-1] * d.n
        dist[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in und[u]:
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif parent[u] != w:
                    cand = dist[u] + dist[w] + 1
                    if cand < best:
                        best = cand
    return best


def parse_arc_list(text: str, source: str = "<string>") -> Digraph:
    """Parse the plain arc-list format.

    First non-empty line is "n m"; the next m lines are "tail head" pairs,
    0-indexed.  Duplicate arcs and loops are rejected.
    """
    lines = [
        (i + 1, line.strip())
        for i, line in enumerate(text.splitlines())
        if line.strip()
    ]
    if not lines:
        raise InputError(f"{source}: empty input")
    lineno, header = lines[0]
    parts = header.split()
    if len(parts) != 2:
        raise InputError(f"{source}: line {lineno}: header must be 'n m'")
    try:
        n, m = int(parts[0]), int(parts[1])
    except ValueError:
        raise InputError(f"{source}: line {lineno}: header must be two integers") from None
    body = lines[1:]
    if len(body) != m:
        raise InputError(
            f"{source}: expected {m} arc lines after the header, found {len(body)}"
        )
    arcs = []
    seen = set()
    for lineno, line in body:
        parts = line.split()
        if len(parts) != 2:
            raise InputError(f"{source}: line {lineno}: expected 'tail head'")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise InputError(f"{source}: line {lineno}: expected two integers") from None
        if u == v:
            raise InputError(f"{source}: line {lineno}: loop ({u}, {v})")
        if not (0 <= u < n and 0 <= v < n):
            raise InputError(f"{source}: line {lineno}: arc ({u}, {v}) out of range")
        if (u, v) in seen:
            raise InputError(f"{source}: line {lineno}: duplicate arc ({u}, {v})")
        seen.add((u, v))
        arcs.append((u, v))
    return Digraph(n, arcs)


def format_arc_list(d: Digraph) -> str:
    """Serialize to the arc-list format with arcs sorted, LF line endings."""
    out = [f"{d.n} {d.arc_count}"]
    out.extend(f"{u} {v}" for u, v in sorted(d.arcs))
    return "\n".join(out) + "\n"


def to_dot(d: Digraph) -> str:
    """Graphviz rendering with default styling."""
    out = ["digraph G {"]
    out.extend(f"  {v};" for v in range(d.n))
    out.extend(f"  {u} -> {v};" for u, v in sorted(d.arcs))
    out.append("}")
    return "\n".join(out) + "\n"
