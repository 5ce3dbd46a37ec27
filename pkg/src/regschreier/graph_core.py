"""Arc/involution multigraph model.

A graph is a vertex count plus a tuple of arcs. Each arc knows its initial
vertex, terminal vertex and inverse arc. Ordinary edges and non-degenerate
loops are pairs of mutually inverse arcs; a half-edge is a single arc that is
its own inverse.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Optional, Sequence


class Arc(NamedTuple):
    iota: int
    tau: int
    inv: int


@dataclass(frozen=True)
class Graph:
    vertex_count: int
    arcs: tuple[Arc, ...]

    def __post_init__(self):
        object.__setattr__(self, "arcs", tuple(Arc(*a) for a in self.arcs))

    @property
    def arc_count(self) -> int:
        return len(self.arcs)

    def is_half_edge(self, a: int) -> bool:
        return self.arcs[a].inv == a

    def is_loop(self, a: int) -> bool:
        return self.arcs[a].iota == self.arcs[a].tau

    def edges(self) -> list[int]:
        """Canonical arc (the smaller of each inverse pair) of every edge."""
        return [a for a, arc in enumerate(self.arcs) if a <= arc.inv]

    def has_half_edges(self) -> bool:
        return any(arc.inv == a for a, arc in enumerate(self.arcs))

    def has_loops(self) -> bool:
        return any(arc.iota == arc.tau for arc in self.arcs)


def edge_id(g: Graph, a: int) -> int:
    return min(a, g.arcs[a].inv)


class GraphBuilder:
    """Append-only construction helper; arcs of one edge are consecutive."""

    def __init__(self, vertex_count: int = 0):
        self.vertex_count = vertex_count
        self.arcs: list[Arc] = []

    def add_vertex(self) -> int:
        self.vertex_count += 1
        return self.vertex_count - 1

    def edge(self, u: int, v: int) -> int:
        a = len(self.arcs)
        self.arcs.append(Arc(u, v, a + 1))
        self.arcs.append(Arc(v, u, a))
        return a

    def loop(self, v: int) -> int:
        return self.edge(v, v)

    def half(self, v: int) -> int:
        a = len(self.arcs)
        self.arcs.append(Arc(v, v, a))
        return a

    def build(self) -> Graph:
        return Graph(self.vertex_count, tuple(self.arcs))


def from_records(
    vertex_count: int,
    edges: Iterable[tuple[int, int]] = (),
    loops: Iterable[int] = (),
    halves: Iterable[int] = (),
) -> Graph:
    b = GraphBuilder(vertex_count)
    for u, v in edges:
        b.edge(u, v)
    for v in loops:
        b.loop(v)
    for v in halves:
        b.half(v)
    return b.build()


def validate(g: Graph) -> list[str]:
    """Every violated structural invariant, one message per offending arc."""
    out = []
    n, m = g.vertex_count, g.arc_count
    if n < 0:
        out.append(f"negative vertex count {n}")
    for a, (i, t, inv) in enumerate(g.arcs):
        if not (0 <= i < n) or not (0 <= t < n):
            out.append(f"arc {a}: endpoint out of range")
            continue
        if not 0 <= inv < m:
            out.append(f"arc {a}: inverse {inv} out of range")
            continue
        if g.arcs[inv].inv != a:
            out.append(f"arc {a}: inverse is not an involution")
        if g.arcs[inv].iota != t or g.arcs[inv].tau != i:
            out.append(f"arc {a}: inverse endpoints do not match")
        if inv == a and i != t:
            out.append(f"arc {a}: half-edge endpoints differ ({i} != {t})")
    return out


def _check_vertex(g: Graph, v: int) -> None:
    if not 0 <= v < g.vertex_count:
        raise IndexError(f"vertex {v} out of range [0, {g.vertex_count})")


def star(g: Graph, v: int) -> list[int]:
    _check_vertex(g, v)
    return [a for a, arc in enumerate(g.arcs) if arc.iota == v]


def stars(g: Graph) -> list[list[int]]:
    """All stars at once, in linear time."""
    out: list[list[int]] = [[] for _ in range(g.vertex_count)]
    for a, arc in enumerate(g.arcs):
        out[arc.iota].append(a)
    return out


def degree(g: Graph, v: int) -> int:
    _check_vertex(g, v)
    return sum(1 for arc in g.arcs if arc.iota == v)


def degrees(g: Graph) -> list[int]:
    out = [0] * g.vertex_count
    for arc in g.arcs:
        out[arc.iota] += 1
    return out


def regularity(g: Graph) -> Optional[int]:
    if g.vertex_count == 0:
        raise ValueError("regularity is undefined for the empty graph")
    ds = set(degrees(g))
    return ds.pop() if len(ds) == 1 else None


def connected_components(g: Graph) -> list[list[int]]:
    adj = stars(g)
    seen = [False] * g.vertex_count
    comps = []
    for s in range(g.vertex_count):
        if seen[s]:
            continue
        seen[s] = True
        comp, queue = [s], deque([s])
        while queue:
            u = queue.popleft()
            for a in adj[u]:
                w = g.arcs[a].tau
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    queue.append(w)
        comps.append(sorted(comp))
    return comps


def is_connected(g: Graph) -> bool:
    return len(connected_components(g)) == 1


@dataclass(frozen=True)
class Bipartition:
    side: tuple[int, ...]

    def part(self, s: int) -> list[int]:
        return [v for v, x in enumerate(self.side) if x == s]


def bipartition(g: Graph) -> Optional[Bipartition]:
    """2-colouring with each component's least vertex on side 0, or None.

    Any loop or half-edge rules a bipartition out.
    """
    if g.has_loops():
        return None
    adj = stars(g)
    side = [-1] * g.vertex_count
    for s in range(g.vertex_count):
        if side[s] != -1:
            continue
        side[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for a in adj[u]:
                w = g.arcs[a].tau
                if side[w] == -1:
                    side[w] = 1 - side[u]
                    queue.append(w)
                elif side[w] == side[u]:
                    return None
    return Bipartition(tuple(side))


def check_bipartition(g: Graph, b: Bipartition) -> None:
    if len(b.side) != g.vertex_count:
        raise ValueError("bipartition size does not match the graph")
    for a, arc in enumerate(g.arcs):
        if b.side[arc.iota] == b.side[arc.tau]:
            raise ValueError(f"arc {a} does not cross the bipartition")


def subgraph_without(g: Graph, drop_edges: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Delete the given edges, keep all vertices, re-index remaining arcs densely.

    Returns the new graph and the old-arc -> new-arc correspondence. The
    re-indexing preserves arc order, so canonical arcs map to canonical arcs.
    """
    dropped = set()
    for e in drop_edges:
        dropped.add(e)
        dropped.add(g.arcs[e].inv)
    keep = [a for a in range(g.arc_count) if a not in dropped]
    new_id = {a: i for i, a in enumerate(keep)}
    arcs = tuple(Arc(g.arcs[a].iota, g.arcs[a].tau, new_id[g.arcs[a].inv]) for a in keep)
    return Graph(g.vertex_count, arcs), new_id


def normalize(g: Graph) -> tuple[Graph, list[int]]:
    """Reorder arcs so each edge occupies consecutive ids, canonical arc first.

    Edges keep the order of their canonical arcs. This is exactly the arc
    layout produced by parsing a serialized graph. Returns the normalized
    graph and the old-arc -> new-arc map as a list.
    """
    b = GraphBuilder(g.vertex_count)
    perm = [0] * g.arc_count
    for e in g.edges():
        arc = g.arcs[e]
        if arc.inv == e:
            perm[e] = b.half(arc.iota)
        else:
            a = b.edge(arc.iota, arc.tau)
            perm[e], perm[arc.inv] = a, a + 1
    return b.build(), perm


def permute_arcs(g: Graph, perm: Sequence[int]) -> Graph:
    """Relabel arc a as perm[a]."""
    arcs: list[Optional[Arc]] = [None] * g.arc_count
    for a, arc in enumerate(g.arcs):
        arcs[perm[a]] = Arc(arc.iota, arc.tau, perm[arc.inv])
    return Graph(g.vertex_count, tuple(arcs))  # type: ignore[arg-type]
