"""Forbidden-pattern searches on digraphs.

Three related notions of containing a directed path, from strictest to
loosest host condition:

* a P_k subgraph is any k distinct vertices carrying the k - 1 consecutive
  arcs, extra arcs welcome;
* a P_k* tuple additionally forbids forward shortcuts: among the ordered
  tuple, the arcs pointing forward are exactly the consecutive ones, while
  backward arcs are unconstrained;
* an induced copy requires the adjacency inside the tuple to match the path
  exactly in both directions.

Hence subgraph-free implies P_k*-free implies induced-free, the containment
chain replayed by the verification suites.
"""

from __future__ import annotations

from dataclasses import dataclass

from .digraph import Digraph
from .errors import InputError

INDUCED_ISO = "induced-iso"
PK_SUBGRAPH = "pk-subgraph"
PK_STAR = "pk-star"


@dataclass(frozen=True)
class PatternWitness:
    """An ordered host-vertex tuple certifying a pattern occurrence."""

    vertices: tuple
    kind: str


def find_induced(host: Digraph, pattern: Digraph):
    """First induced embedding of pattern into host, or None.

    The witness maps pattern vertex i to witness.vertices[i]; adjacency
    inside the image matches the pattern exactly in both directions.  The
    search assigns pattern vertices in id order trying host candidates in
    ascending order, so the returned tuple is the lexicographically first.
    """
    p = pattern.n
    if p > host.n:
        return None
    has = host.has_arc
    phas = pattern.has_arc
    mapping = []
    used = [False] * host.n

    def extend(i):
        if i == p:
            return True
        for c in range(host.n):
            if used[c]:
                continue
            if host.out_degree(c) < pattern.out_degree(i):
                continue
            if host.in_degree(c) < pattern.in_degree(i):
                continue
            ok = True
            for j in range(i):
                mj = mapping[j]
                if phas(i, j) != has(c, mj) or phas(j, i) != has(mj, c):
                    ok = False
                    break
            if ok:
                mapping.append(c)
                used[c] = True
                if extend(i + 1):
                    return True
                mapping.pop()
                used[c] = False
        return False

    if extend(0):
        return PatternWitness(tuple(mapping), INDUCED_ISO)
    return None


def _check_k(k: int) -> None:
    if k < 2:
        raise InputError(f"path pattern length must be >= 2, got {k}")


def find_pk_subgraph(host: Digraph, k: int):
    """First directed path on k distinct vertices, extra arcs allowed."""
    _check_k(k)
    if host.n < k:
        return None
    tup = []
    used = [False] * host.n

    def extend(i):
        if i == k:
            return True
        candidates = range(host.n) if i == 0 else host.out_adj[tup[-1]]
        for c in candidates:
            if used[c]:
                continue
            tup.append(c)
            used[c] = True
            if extend(i + 1):
                return True
            tup.pop()
            used[c] = False
        return False

    if extend(0):
        return PatternWitness(tuple(tup), PK_SUBGRAPH)
    return None


def find_pk_star(host: Digraph, k: int):
    """First ordered k-tuple whose forward arcs are exactly the consecutive
    path arcs.

    Arcs from later tuple vertices back to earlier ones are unconstrained;
    any forward shortcut disqualifies the tuple.
    """
    _check_k(k)
    if host.n < k:
        return None
    has = host.has_arc
    tup = []
    used = [False] * host.n

    def extend(i):
        if i == k:
            return True
        candidates = range(host.n) if i == 0 else host.out_adj[tup[-1]]
        for c in candidates:
            if used[c]:
                continue
            if any(has(tup[j], c) for j in range(i - 1)):
                continue
            tup.append(c)
            used[c] = True
            if extend(i + 1):
                return True
            tup.pop()
            used[c] = False
        return False

    if extend(0):
        return PatternWitness(tuple(tup), PK_STAR)
    return None


def containment_chain_check(d: Digraph, k: int) -> tuple[bool, bool, bool]:
    """Compute (subgraph-free, star-free, induced-free) for paths of length k
    and assert the implication chain between them.

    A chain failure would mean one of the searches is wrong, so it raises
    AssertionError rather than returning.
    """
    _check_k(k)
    from .constructions import gen_directed_path

    sub_free = find_pk_subgraph(d, k) is None
    star_free = find_pk_star(d, k) is None
    induced_free = find_induced(d, gen_directed_path(k)) is None
    assert not sub_free or star_free, "subgraph-free host contains a star tuple"
    assert not star_free or induced_free, "star-free host contains an induced path"
    return (sub_free, star_free, induced_free)
