"""Paths of a quiver as semigroup elements: composition with a zero,
bounded enumeration, first-return cycles, and free factorization."""

from __future__ import annotations

from dataclasses import dataclass

from .quiver import Quiver, sccs


@dataclass(frozen=True)
class Path:
    """A trivial path at a vertex, a composable arrow run, or the zero path.

    ``arrows`` holds arrow indices in traversal order (the first arrow
    walked comes first); tail and head are vertex indices.  The zero path
    is the unique instance with ``tail is None`` and has no endpoints and
    no length.
    """

    tail: int | None
    head: int | None
    arrows: tuple[int, ...] = ()

    @property
    def is_zero(self) -> bool:
        return self.tail is None

    @property
    def is_trivial(self) -> bool:
        return self.tail is not None and not self.arrows

    @property
    def length(self) -> int:
        if self.is_zero:
            raise ValueError("the zero path has no length")
        return len(self.arrows)


ZERO = Path(None, None)


def trivial(q: Quiver, vertex: str) -> Path:
    x = q.vertex_of(vertex)
    return Path(x, x)


def arrow_path(q: Quiver, name: str) -> Path:
    i = q.arrow_of(name)
    a = q.arrows[i]
    return Path(a.tail, a.head, (i,))


def make_path(q: Quiver, names) -> Path:
    """Build a path from arrow names listed in traversal order."""
    names = list(names)
    if not names:
        raise ValueError("make_path needs at least one arrow; use trivial() otherwise")
    idxs = [q.arrow_of(n) for n in names]
    for prev, nxt in zip(idxs, idxs[1:]):
        if q.arrows[prev].head != q.arrows[nxt].tail:
            raise ValueError(f"arrows {q.arrows[prev].name!r} and {q.arrows[nxt].name!r} do not compose")
    return Path(q.arrows[idxs[0]].tail, q.arrows[idxs[-1]].head, tuple(idxs))


def path_str(q: Quiver, p: Path) -> str:
    """Serialize: ``z``, ``e(<vertex>)``, or ``<arrowK>*...*<arrow1>``."""
    if p.is_zero:
        return "z"
    if p.is_trivial:
        return f"e({q.vertices[p.tail]})"
    return "*".join(q.arrows[i].name for i in reversed(p.arrows))


def compose(p: Path, q: Path) -> Path:
    """The product pq: first q, then p; zero when the endpoints mismatch.

    Trivial paths act as one-sided identities and the zero path absorbs.
    """
    if p.tail is None or q.tail is None:
        return ZERO
    if q.head != p.tail:
        return ZERO
    return Path(q.tail, p.head, q.arrows + p.arrows)


def enumerate_paths(q: Quiver, max_len: int) -> list[Path]:
    """All nonzero paths of length at most ``max_len``, each exactly once.

    Output order is (length, lexicographic by arrow index); trivial paths
    come first, in vertex declaration order.
    """
    if max_len < 0:
        raise ValueError("max_len must be >= 0")
    level = [Path(v, v) for v in range(q.n)]
    out = list(level)
    for _ in range(max_len):
        nxt = []
        for p in level:
            for ai in q.out_arrows[p.head]:
                nxt.append(Path(p.tail, q.arrows[ai].head, p.arrows + (ai,)))
        if not nxt:
            break
        # extensions come out grouped by source vertex, which is not lex
        # order at length one; a sort of the nearly-sorted level is cheap
        nxt.sort(key=lambda p: p.arrows)
        out.extend(nxt)
        level = nxt
    return out


@dataclass(frozen=True)
class CycleBasis:
    """First-return cycles at a vertex, possibly truncated at a length bound.

    ``complete`` is True only when graph analysis proves the listed cycles
    are all the irreducible generators of the cycle monoid at the vertex.
    """

    vertex: str
    cycles: tuple[Path, ...]
    complete: bool


def first_return_cycles(q: Quiver, vertex: str, max_len: int) -> CycleBasis:
    """Cycles at ``vertex`` of length <= max_len with no intermediate visit.

    These are exactly the irreducible generators of the cycle monoid at the
    vertex, where every cycle factors uniquely.
    """
    if max_len < 1:
        raise ValueError("max_len must be >= 1")
    x = q.vertex_of(vertex)
    found: list[Path] = []
    frontier: list[tuple[int, tuple[int, ...]]] = [(x, ())]
    for _ in range(max_len):
        nxt = []
        for head, seq in frontier:
            for ai in q.out_arrows[head]:
                h2 = q.arrows[ai].head
                if h2 == x:
                    found.append(Path(x, x, seq + (ai,)))
                else:
                    nxt.append((h2, seq + (ai,)))
        if not nxt:
            break
        frontier = nxt
    return CycleBasis(vertex, tuple(found), _first_return_complete(q, x, max_len))


def _first_return_complete(q: Quiver, x: int, max_len: int) -> bool:
    """Decide whether length <= max_len provably exhausts the first-return cycles.

    Every first-return cycle stays inside the strongly connected component
    of x and visits the other component vertices via internal arrows only.
    If that punctured subgraph has a cycle, the generator set is infinite;
    otherwise the longest first-return length is 2 plus the longest path in
    the punctured DAG (or 1 when the component is a single vertex).
    """
    part = sccs(q)
    comp = part.components[part.component_of[q.vertices[x]]]
    if not comp.has_cycle:
        return True
    members = {q.vertex_of(v) for v in comp.vertices}
    if len(members) == 1:
        return True  # only self-loops, all of length 1 <= max_len
    punctured = members - {x}
    inner = [
        a
        for a in q.arrows
        if a.tail in punctured and a.head in punctured
    ]
    order = _topo_order(punctured, inner)
    if order is None:
        return False  # a cycle avoiding x: unboundedly long first returns
    dist = {v: -1 for v in punctured}
    for ai in q.out_arrows[x]:
        w = q.arrows[ai].head
        if w in punctured:
            dist[w] = 0
    for v in order:
        if dist[v] < 0:
            continue
        for a in inner:
            if a.tail == v:
                dist[a.head] = max(dist[a.head], dist[v] + 1)
    longest = -1
    for ai in q.in_arrows[x]:
        w = q.arrows[ai].tail
        if w in punctured and dist[w] >= 0:
            longest = max(longest, dist[w])
    if longest < 0:
        # No route back that avoids x entirely; only self-loops at x remain.
        return True
    return max_len >= longest + 2


def _topo_order(nodes: set[int], arcs) -> list[int] | None:
    """Kahn topological order of the induced subgraph, or None on a cycle."""
    indeg = {v: 0 for v in nodes}
    for a in arcs:
        indeg[a.head] += 1
    ready = sorted(v for v, d in indeg.items() if d == 0)
    order = []
    while ready:
        v = ready.pop(0)
        order.append(v)
        for a in arcs:
            if a.tail == v:
                indeg[a.head] -= 1
                if indeg[a.head] == 0:
                    ready.append(a.head)
    return order if len(order) == len(nodes) else None


def factorize_cycle(q: Quiver, p: Path) -> list[Path]:
    """Split a cycle at each intermediate visit to its base vertex.

    Returns the unique sequence of first-return cycles (in traversal order)
    whose concatenation is ``p``; the trivial path factors as the empty
    sequence.
    """
    if p.is_zero or p.tail != p.head:
        raise ValueError("factorize_cycle needs a nonzero cycle at a single vertex")
    x = p.tail
    factors: list[Path] = []
    begin = 0
    for i, ai in enumerate(p.arrows):
        if q.arrows[ai].head == x:
            factors.append(Path(x, x, p.arrows[begin : i + 1]))
            begin = i + 1
    return factors


def is_commutative_at(q: Quiver, vertex: str) -> bool:
    """Whether the monoid of cycles at ``vertex`` is commutative.

    Decided via strongly connected structure: the monoid is noncommutative
    exactly when the vertex sits in a component that has a cycle but is not
    a single simple directed cycle (then two distinct first-return cycles
    exist, and the monoid is free over at least two generators).
    """
    part = sccs(q)
    q.vertex_of(vertex)
    comp = part.components[part.component_of[vertex]]
    return not (comp.has_cycle and not comp.is_simple_cycle)
