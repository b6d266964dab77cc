"""Strong components, Menger connectivity and separations."""

from __future__ import annotations

import heapq
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable

from .digraph import Digraph, DigraphError


class SeparationError(DigraphError):
    """The given vertex set is not a separator of the digraph."""


@dataclass(frozen=True)
class SccDecomposition:
    """Strong components in acyclic order (no arc from a later to an earlier set)."""

    components: tuple[tuple[int, ...], ...]
    component_of: dict[int, int] = field(compare=False)

    def __len__(self) -> int:
        return len(self.components)


def _tarjan(digraph: Digraph) -> list[list[int]]:
    index: dict[int, int] = {}
    low: dict[int, int] = {}
    on_stack: set[int] = set()
    stack: list[int] = []
    comps: list[list[int]] = []
    counter = 0
    for root in range(digraph.n):
        if root in index:
            continue
        work = [(root, iter(digraph.out_neighbors(root)))]
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack.add(root)
        while work:
            v, it = work[-1]
            advanced = False
            for w in it:
                if w not in index:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack.add(w)
                    work.append((w, iter(digraph.out_neighbors(w))))
                    advanced = True
                    break
                if w in on_stack:
                    low[v] = min(low[v], index[w])
            if advanced:
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[v])
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack.discard(w)
                    comp.append(w)
                    if w == v:
                        break
                comps.append(sorted(comp))
    return comps


def strong_components(digraph: Digraph) -> SccDecomposition:
    """Strong components ordered topologically; ties go to the smallest vertex."""
    comps = _tarjan(digraph)
    comp_of = {v: i for i, comp in enumerate(comps) for v in comp}
    succ: list[set[int]] = [set() for _ in comps]
    indeg = [0] * len(comps)
    for u, v in digraph.arcs():
        a, b = comp_of[u], comp_of[v]
        if a != b and b not in succ[a]:
            succ[a].add(b)
            indeg[b] += 1
    heap = [(comps[i][0], i) for i in range(len(comps)) if indeg[i] == 0]
    heapq.heapify(heap)
    order = []
    while heap:
        _, i = heapq.heappop(heap)
        order.append(i)
        for j in succ[i]:
            indeg[j] -= 1
            if indeg[j] == 0:
                heapq.heappush(heap, (comps[j][0], j))
    components = tuple(tuple(comps[i]) for i in order)
    component_of = {v: pos for pos, comp in enumerate(components) for v in comp}
    return SccDecomposition(components, component_of)


def is_strongly_connected(digraph: Digraph) -> bool:
    if digraph.n <= 1:
        return True
    full = (1 << digraph.n) - 1

    def reach(masks: tuple[int, ...]) -> int:
        seen = frontier = 1
        while frontier:
            nxt = 0
            while frontier:
                low = frontier & -frontier
                nxt |= masks[low.bit_length() - 1]
                frontier ^= low
            frontier = nxt & ~seen
            seen |= frontier
        return seen

    return reach(digraph.out_masks) == full and reach(digraph.in_masks) == full


def is_separator(digraph: Digraph, separator: Iterable[int]) -> bool:
    """``D - S`` is not strongly connected or is trivial."""
    rest = digraph.remove_vertices(separator)
    return rest.n <= 1 or not is_strongly_connected(rest)


# -- Menger / max-flow ---------------------------------------------------


class _FlowNetwork:
    """Vertex-split network for internally disjoint ``(s, t)``-dipaths.

    Vertex ``w`` becomes ``2w`` (in) and ``2w+1`` (out).  The source is
    ``s_out`` and the sink ``t_in``; the arc ``(s, t)`` itself, if present,
    carries one unit because it is a single path without internal vertices.
    """

    def __init__(self, digraph: Digraph, s: int, t: int):
        n = digraph.n
        self.source = 2 * s + 1
        self.sink = 2 * t
        self.cap: list[dict[int, int]] = [dict() for _ in range(2 * n)]
        for w in range(n):
            if w != s and w != t:
                self._add(2 * w, 2 * w + 1, 1)
        for a, b in digraph.arcs():
            if b == s or a == t:
                continue
            self._add(2 * a + 1, 2 * b, 1 if (a, b) == (s, t) else n)

    def _add(self, a: int, b: int, c: int) -> None:
        self.cap[a][b] = self.cap[a].get(b, 0) + c
        self.cap[b].setdefault(a, 0)

    def _augment(self) -> bool:
        parent = {self.source: -1}
        queue = deque([self.source])
        while queue:
            x = queue.popleft()
            for y, c in self.cap[x].items():
                if c > 0 and y not in parent:
                    parent[y] = x
                    if y == self.sink:
                        while y != self.source:
                            x = parent[y]
                            self.cap[x][y] -= 1
                            self.cap[y][x] += 1
                            y = x
                        return True
                    queue.append(y)
        return False

    def max_flow(self, limit: int | None = None) -> int:
        flow = 0
        while (limit is None or flow < limit) and self._augment():
            flow += 1
        return flow

    def source_side(self) -> set[int]:
        seen = {self.source}
        queue = deque([self.source])
        while queue:
            x = queue.popleft()
            for y, c in self.cap[x].items():
                if c > 0 and y not in seen:
                    seen.add(y)
                    queue.append(y)
        return seen


def local_connectivity(digraph: Digraph, u: int, v: int, limit: int | None = None) -> int:
    """Maximum number of internally vertex-disjoint ``(u, v)``-dipaths.

    With ``limit`` the search stops once that many paths are found.
    """
    if u == v:
        raise DigraphError("local connectivity needs two distinct vertices")
    for w in (u, v):
        if not 0 <= w < digraph.n:
            raise DigraphError(f"vertex {w} out of range for n={digraph.n}")
    return _FlowNetwork(digraph, u, v).max_flow(limit)


def _min_cut(digraph: Digraph, u: int, v: int) -> tuple[int, frozenset[int]]:
    net = _FlowNetwork(digraph, u, v)
    flow = net.max_flow()
    side = net.source_side()
    cut = frozenset(
        w for w in range(digraph.n)
        if w not in (u, v) and 2 * w in side and 2 * w + 1 not in side
    )
    return flow, cut


def kappa(digraph: Digraph) -> int:
    """Vertex-strong connectivity.

    A complete digraph on n vertices has connectivity ``n - 1``; otherwise the
    minimum local connectivity over ordered pairs ``(u, v)`` with no arc
    ``u -> v``.  Only sources ``i <= best`` need scanning: some vertex of
    index at most ``|S|`` lies outside any minimum separator ``S``.
    """
    n = digraph.n
    if n == 0:
        raise DigraphError("connectivity of the empty digraph is undefined")
    if digraph.is_complete():
        return n - 1
    best = n - 2
    i = 0
    while i <= best and i < n:
        for j in range(i + 1, n):
            for a, b in ((i, j), (j, i)):
                if not digraph.has_arc(a, b):
                    best = min(best, local_connectivity(digraph, a, b, limit=best))
                    if best == 0:
                        return 0
        i += 1
    return best


def min_separator(digraph: Digraph) -> frozenset[int]:
    """A minimum separator, taken from the lexicographically first optimal pair.

    For a complete digraph this is ``{0, .., n-2}`` (``D - S`` is trivial).
    """
    n = digraph.n
    if n == 0:
        raise DigraphError("separator of the empty digraph is undefined")
    if digraph.is_complete():
        return frozenset(range(n - 1))
    k = kappa(digraph)
    for u in range(n):
        for v in range(n):
            if u != v and not digraph.has_arc(u, v):
                flow, cut = _min_cut(digraph, u, v)
                if flow == k:
                    return cut
    raise AssertionError("no pair attains the connectivity")  # pragma: no cover


@dataclass(frozen=True)
class Lobe:
    """Induced subdigraph on ``vertices`` (ascending); vertex i maps to vertices[i]."""

    vertices: tuple[int, ...]
    digraph: Digraph


@dataclass(frozen=True)
class Separation:
    separator: frozenset[int]
    components: tuple[tuple[int, ...], ...]
    lobes: tuple[Lobe, ...]
    source_lobe_index: int = 0

    def two_block(self, digraph: Digraph) -> tuple[frozenset[int], Lobe, Lobe]:
        """``(S, D1, D2)`` with ``D1 = D[S + B1]`` and ``D2 = D - V(B1)``."""
        first = set(self.components[0])
        d1 = self.lobes[0]
        rest = tuple(v for v in range(digraph.n) if v not in first)
        return self.separator, d1, Lobe(rest, digraph.induced(rest))


def separation(digraph: Digraph, separator: Iterable[int]) -> Separation:
    sep = frozenset(separator)
    for v in sep:
        if not 0 <= v < digraph.n:
            raise SeparationError(f"vertex {v} out of range for n={digraph.n}")
    rest_vertices = [v for v in range(digraph.n) if v not in sep]
    rest = digraph.induced(rest_vertices)
    if rest.n > 1 and is_strongly_connected(rest):
        raise SeparationError(f"{sorted(sep)} is not a separator")
    scc = strong_components(rest) if rest.n else SccDecomposition((), {})
    components = tuple(tuple(rest_vertices[i] for i in comp) for comp in scc.components)
    lobes = []
    for comp in components:
        verts = tuple(sorted(sep.union(comp)))
        lobes.append(Lobe(verts, digraph.induced(verts)))
    return Separation(sep, components, tuple(lobes))


def min_separation(digraph: Digraph) -> Separation:
    return separation(digraph, min_separator(digraph))


def connectivity_report(digraph: Digraph) -> dict:
    return {
        "n": digraph.n,
        "kappa": kappa(digraph),
        "min_separator": sorted(min_separator(digraph)),
        "complete": digraph.is_complete(),
    }


def scc_report(digraph: Digraph) -> dict:
    scc = strong_components(digraph)
    return {
        "n": digraph.n,
        "components": [list(c) for c in scc.components],
        "strongly_connected": len(scc) <= 1,
    }
