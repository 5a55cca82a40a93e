"""Finite quivers: text-format parsing, validation, strongly connected
structure, and extremal path lengths with a saturating infinity."""

from __future__ import annotations

import math
import re
from dataclasses import dataclass

# Extended length value: a non-negative int, or INF.  math.inf already
# saturates under addition/subtraction of finite values and compares
# totally with ints, so min/max/+ work without a sentinel wrapper.
INF = math.inf
ExtLen = int | float

_VERTEX_RE = re.compile(r"vertex\s+([A-Za-z0-9_]+)\Z")
_ARROW_RE = re.compile(r"arrow\s+([A-Za-z0-9_]+)\s*:\s*([A-Za-z0-9_]+)\s*->\s*([A-Za-z0-9_]+)\Z")
_ID_RE = re.compile(r"[A-Za-z0-9_]+\Z")


class QuiverError(ValueError):
    """Malformed quiver text or structurally invalid quiver data."""


@dataclass(frozen=True)
class Arrow:
    """An arrow; tail and head are vertex indices into the owning quiver."""

    name: str
    tail: int
    head: int


class Quiver:
    """A finite directed multigraph with named vertices and arrows.

    Declaration order of vertices and arrows is canonical: it fixes the
    index order used by enumeration, variable and prime allocation, and
    every JSON output.  Parallel arrows and self-loops are permitted, the
    vertex set must be nonempty.  Instances are immutable after
    construction.
    """

    def __init__(self, vertices, arrows=()):
        vertices = list(vertices)
        if not vertices:
            raise QuiverError("quiver needs at least one vertex")
        vindex: dict[str, int] = {}
        for v in vertices:
            if not isinstance(v, str) or not _ID_RE.match(v):
                raise QuiverError(f"bad vertex id {v!r}")
            if v in vindex:
                raise QuiverError(f"duplicate vertex id {v!r}")
            vindex[v] = len(vindex)
        built: list[Arrow] = []
        aindex: dict[str, int] = {}
        for name, tail, head in arrows:
            if not isinstance(name, str) or not _ID_RE.match(name):
                raise QuiverError(f"bad arrow id {name!r}")
            if name in aindex:
                raise QuiverError(f"duplicate arrow id {name!r}")
            for v in (tail, head):
                if v not in vindex:
                    raise QuiverError(f"arrow {name!r} uses undeclared vertex {v!r}")
            aindex[name] = len(built)
            built.append(Arrow(name, vindex[tail], vindex[head]))
        self.vertices: tuple[str, ...] = tuple(vindex)
        self.vertex_index: dict[str, int] = vindex
        self.arrows: tuple[Arrow, ...] = tuple(built)
        self.arrow_index: dict[str, int] = aindex
        out_: list[list[int]] = [[] for _ in self.vertices]
        in_: list[list[int]] = [[] for _ in self.vertices]
        for i, a in enumerate(self.arrows):
            out_[a.tail].append(i)
            in_[a.head].append(i)
        self.out_arrows: tuple[tuple[int, ...], ...] = tuple(map(tuple, out_))
        self.in_arrows: tuple[tuple[int, ...], ...] = tuple(map(tuple, in_))

    @property
    def n(self) -> int:
        return len(self.vertices)

    def vertex_of(self, vid: str) -> int:
        try:
            return self.vertex_index[vid]
        except KeyError:
            raise QuiverError(f"unknown vertex {vid!r}") from None

    def arrow_of(self, name: str) -> int:
        try:
            return self.arrow_index[name]
        except KeyError:
            raise QuiverError(f"unknown arrow {name!r}") from None

    def arrow_names(self) -> tuple[str, ...]:
        return tuple(a.name for a in self.arrows)

    def __eq__(self, other):
        return (
            isinstance(other, Quiver)
            and self.vertices == other.vertices
            and self.arrows == other.arrows
        )

    def __hash__(self):
        return hash((self.vertices, self.arrows))

    def __repr__(self):
        return f"Quiver({self.n} vertices, {len(self.arrows)} arrows)"

    def to_json(self) -> dict:
        return {
            "vertices": list(self.vertices),
            "arrows": [
                {"id": a.name, "tail": self.vertices[a.tail], "head": self.vertices[a.head]}
                for a in self.arrows
            ],
        }


def parse_quiver(text: str) -> Quiver:
    """Parse the line-based quiver format.

    Lines are ``vertex <id>`` or ``arrow <id>: <tail> -> <head>``; ``#``
    starts a comment, blank lines are ignored, ids match ``[A-Za-z0-9_]+``.
    Arrows may reference vertices declared later in the file.  Errors name
    the offending line.
    """
    vlines: list[tuple[int, str]] = []
    alines: list[tuple[int, str, str, str]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        m = _VERTEX_RE.match(line)
        if m:
            vlines.append((lineno, m.group(1)))
            continue
        m = _ARROW_RE.match(line)
        if m:
            alines.append((lineno, m.group(1), m.group(2), m.group(3)))
            continue
        raise QuiverError(f"line {lineno}: cannot parse {line!r}")
    declared: dict[str, int] = {}
    for lineno, v in vlines:
        if v in declared:
            raise QuiverError(f"line {lineno}: duplicate vertex id {v!r}")
        declared[v] = lineno
    seen_arrows: dict[str, int] = {}
    for lineno, name, tail, head in alines:
        if name in seen_arrows:
            raise QuiverError(f"line {lineno}: duplicate arrow id {name!r}")
        seen_arrows[name] = lineno
        for v in (tail, head):
            if v not in declared:
                raise QuiverError(f"line {lineno}: arrow {name!r} uses undeclared vertex {v!r}")
    if not declared:
        raise QuiverError("no vertices declared")
    return Quiver([v for _, v in vlines], [(n, t, h) for _, n, t, h in alines])


@dataclass(frozen=True)
class SccComponent:
    vertices: tuple[str, ...]
    has_cycle: bool
    is_simple_cycle: bool


@dataclass(frozen=True)
class SccPartition:
    """Mutual-reachability classes with cycle flags and the condensation DAG.

    Components are listed in the order Tarjan's algorithm completes them,
    i.e. every successor component precedes its predecessors; condensation
    edges are deduplicated pairs of component indices in arrow order.
    """

    component_of: dict[str, int]
    components: tuple[SccComponent, ...]
    condensation: tuple[tuple[int, int], ...]

    def to_json(self) -> dict:
        return {
            "components": [
                {
                    "vertices": list(c.vertices),
                    "has_cycle": c.has_cycle,
                    "is_simple_cycle": c.is_simple_cycle,
                }
                for c in self.components
            ],
            "condensation": [list(e) for e in self.condensation],
        }


def sccs(q: Quiver) -> SccPartition:
    """Partition the vertices into strongly connected components.

    Two vertices fall in one component when each is reachable from the
    other; a component "has a cycle" when it spans more than one vertex or
    contains a self-loop, and it is a simple cycle exactly when its internal
    arrow count equals its vertex count.
    """
    n = q.n
    index = [-1] * n
    low = [0] * n
    on_stack = [False] * n
    stack: list[int] = []
    comp_of = [-1] * n
    comps: list[list[int]] = []
    counter = 0
    for root in range(n):
        if index[root] != -1:
            continue
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack[root] = True
        call_stack = [(root, iter(q.out_arrows[root]))]
        while call_stack:
            v, it = call_stack[-1]
            advanced = False
            for ai in it:
                w = q.arrows[ai].head
                if index[w] == -1:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack[w] = True
                    call_stack.append((w, iter(q.out_arrows[w])))
                    advanced = True
                    break
                if on_stack[w]:
                    low[v] = min(low[v], index[w])
            if advanced:
                continue
            call_stack.pop()
            if call_stack:
                u = call_stack[-1][0]
                low[u] = min(low[u], low[v])
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp_of[w] = len(comps)
                    comp.append(w)
                    if w == v:
                        break
                comp.sort()
                comps.append(comp)

    k = len(comps)
    internal = [0] * k
    loop_inside = [False] * k
    cond: list[tuple[int, int]] = []
    cond_seen: set[tuple[int, int]] = set()
    for a in q.arrows:
        ct, ch = comp_of[a.tail], comp_of[a.head]
        if ct == ch:
            internal[ct] += 1
            if a.tail == a.head:
                loop_inside[ct] = True
        else:
            edge = (ct, ch)
            if edge not in cond_seen:
                cond_seen.add(edge)
                cond.append(edge)
    components = []
    for c, members in enumerate(comps):
        has_cycle = len(members) > 1 or loop_inside[c]
        simple = has_cycle and internal[c] == len(members)
        components.append(
            SccComponent(tuple(q.vertices[v] for v in members), has_cycle, simple)
        )
    component_of = {q.vertices[v]: comp_of[v] for v in range(n)}
    return SccPartition(component_of, tuple(components), tuple(cond))


def length_profile(q: Quiver) -> dict[str, tuple[ExtLen, ExtLen]]:
    """Per vertex, the supremum of lengths of paths ending / starting there.

    The supremum is INF exactly when some cyclic component can feed into
    (resp. be reached from) the vertex; otherwise it is a longest-path value
    over the condensation, which is finite and at most n - 1 because any
    longer path would contain a subcycle.
    """
    part = sccs(q)
    comp_of = [part.component_of[v] for v in q.vertices]
    k = len(part.components)
    cyclic = [c.has_cycle for c in part.components]
    out_comp: list[list[int]] = [[] for _ in range(k)]
    in_comp: list[list[int]] = [[] for _ in range(k)]
    for a, b in part.condensation:
        out_comp[a].append(b)
        in_comp[b].append(a)
    # Component order: successors carry smaller indices, so one ascending
    # and one descending sweep settle both reachability closures.
    reaches_cycle = list(cyclic)
    for c in range(k):
        if not reaches_cycle[c]:
            reaches_cycle[c] = any(reaches_cycle[b] for b in out_comp[c])
    from_cycle = list(cyclic)
    for c in range(k - 1, -1, -1):
        if not from_cycle[c]:
            from_cycle[c] = any(from_cycle[a] for a in in_comp[c])

    n = q.n
    l_plus: list[ExtLen] = [0] * n
    l_minus: list[ExtLen] = [0] * n
    order = sorted(range(n), key=lambda v: comp_of[v])
    for v in order:  # successors first
        if reaches_cycle[comp_of[v]]:
            l_plus[v] = INF
            continue
        best = 0
        for ai in q.out_arrows[v]:
            best = max(best, 1 + l_plus[q.arrows[ai].head])
        l_plus[v] = best
    for v in reversed(order):  # predecessors first
        if from_cycle[comp_of[v]]:
            l_minus[v] = INF
            continue
        best = 0
        for ai in q.in_arrows[v]:
            best = max(best, 1 + l_minus[q.arrows[ai].tail])
        l_minus[v] = best
    return {q.vertices[v]: (l_minus[v], l_plus[v]) for v in range(n)}


def ext_to_json(value: ExtLen):
    """Render an extended length for JSON: ints stay ints, INF becomes "inf"."""
    return "inf" if value == INF else int(value)
