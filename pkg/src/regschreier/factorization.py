"""Euler circuits, 2-factorizations of even-regular multigraphs, and
coverings onto one-vertex bouquets."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .cover import CoveringMap
from .graph_core import Bipartition, Graph, GraphBuilder, degrees, edge_id, is_connected, regularity, stars
from .matching import Matching, matching_violations, orthogonal_matchings


@dataclass(frozen=True)
class EulerOrientation:
    forward: frozenset[int]


@dataclass(frozen=True)
class TwoFactor:
    # successor[v] is the arc leaving v in this factor
    successor: tuple[int, ...]

    def permutation(self, g: Graph) -> list[int]:
        return [g.arcs[a].tau for a in self.successor]


def _require_even_no_half(g: Graph) -> None:
    if g.has_half_edges():
        raise ValueError("graph has half-edges")
    for v, d in enumerate(degrees(g)):
        if d % 2:
            raise ValueError(f"vertex {v} has odd degree {d}")


def _circuit(g: Graph, start: int, adj: list[list[int]], ptr: list[int], used: list[bool]) -> list[int]:
    # Hierholzer; a loop is always traversed along its lower arc
    stack: list[tuple[int, int]] = [(start, -1)]
    out = []
    while stack:
        v, a_in = stack[-1]
        row = adj[v]
        while ptr[v] < len(row) and used[edge_id(g, row[ptr[v]])]:
            ptr[v] += 1
        if ptr[v] < len(row):
            a = row[ptr[v]]
            e = edge_id(g, a)
            used[e] = True
            if g.is_loop(a):
                a = e
            stack.append((g.arcs[a].tau, a))
        else:
            stack.pop()
            if a_in != -1:
                out.append(a_in)
    out.reverse()
    return out


def _incidence(g: Graph) -> list[list[int]]:
    return [sorted(st, key=lambda a: (edge_id(g, a), a)) for st in stars(g)]


def euler_circuit(g: Graph) -> list[int]:
    """Closed walk from vertex 0 using every edge once, as a list of arcs."""
    _require_even_no_half(g)
    if g.vertex_count == 0:
        raise ValueError("empty graph")
    if not is_connected(g):
        raise ValueError("graph is disconnected")
    used = [False] * g.arc_count
    return _circuit(g, 0, _incidence(g), [0] * g.vertex_count, used)


def orient_by_euler(g: Graph) -> EulerOrientation:
    """Orient every edge along an Euler circuit of its component."""
    _require_even_no_half(g)
    adj = _incidence(g)
    ptr = [0] * g.vertex_count
    used = [False] * g.arc_count
    forward: set[int] = set()
    for v in range(g.vertex_count):
        if ptr[v] < len(adj[v]) and not all(used[edge_id(g, a)] for a in adj[v]):
            forward.update(_circuit(g, v, adj, ptr, used))
    return EulerOrientation(frozenset(forward))


def two_factorization(g: Graph) -> list[TwoFactor]:
    """Split a 2d-regular graph into d spanning 2-factors.

    Euler-orient, then take d orthogonal perfect matchings of the
    d-regular bipartite graph with one edge out(iota(a)) -- in(tau(a)) per
    forward arc a. Out-copies are [0, n), in-copies [n, 2n).
    """
    if g.vertex_count == 0:
        return []
    deg = regularity(g)
    if deg is None or deg % 2:
        raise ValueError("graph is not regular of even degree")
    _require_even_no_half(g)
    n = g.vertex_count
    fwd = sorted(orient_by_euler(g).forward)
    b = GraphBuilder(2 * n)
    for a in fwd:
        b.edge(g.arcs[a].iota, n + g.arcs[a].tau)
    split = b.build()
    sides = Bipartition(tuple([0] * n + [1] * n))
    factors = []
    for m in orthogonal_matchings(split, sides, deg // 2):
        succ = [0] * n
        for e in m.edges:
            succ[split.arcs[e].iota] = fwd[e // 2]
        factors.append(TwoFactor(tuple(succ)))
    return factors


def bouquet(d: int, n: int) -> Graph:
    """One vertex carrying d loops (arcs 2i, 2i+1) then n half-edges (arc 2d+j)."""
    if d < 0 or n < 0:
        raise ValueError("negative loop count")
    b = GraphBuilder(1)
    for _ in range(d):
        b.loop(0)
    for _ in range(n):
        b.half(0)
    return b.build()


def partition_violations(g: Graph, factors: Sequence[TwoFactor], matchings: Sequence[Matching]) -> list[str]:
    """Check that the factors and perfect matchings split the edge set exactly."""
    out = []
    n = g.vertex_count
    if g.has_half_edges():
        out.append("graph has half-edges")
    owner: dict[int, str] = {}

    def claim(e: int, who: str) -> None:
        if e in owner:
            out.append(f"edge {e} used by both {owner[e]} and {who}")
        else:
            owner[e] = who

    for i, f in enumerate(factors):
        if len(f.successor) != n:
            out.append(f"factor {i}: successor map has wrong length")
            continue
        for v, a in enumerate(f.successor):
            if not 0 <= a < g.arc_count or g.arcs[a].iota != v:
                out.append(f"factor {i}: successor of {v} does not start at {v}")
                continue
            claim(edge_id(g, a), f"factor {i}")
        if sorted(g.arcs[a].tau for a in f.successor if 0 <= a < g.arc_count) != list(range(n)):
            out.append(f"factor {i}: successor map is not a permutation")
    for j, m in enumerate(matchings):
        out.extend(f"matching {j}: {msg}" for msg in matching_violations(g, m))
        if 2 * len(m) != n:
            out.append(f"matching {j}: not perfect")
        for e in m.edges:
            claim(e, f"matching {j}")
    missing = [e for e in g.edges() if e not in owner]
    if missing:
        out.append(f"edges not covered: {missing[:10]}")
    return out


def cover_to_bouquet(g: Graph, factors: Sequence[TwoFactor], matchings: Sequence[Matching]) -> CoveringMap:
    problems = partition_violations(g, factors, matchings)
    if problems:
        raise ValueError("; ".join(problems))
    d = len(factors)
    amap = [0] * g.arc_count
    for i, f in enumerate(factors):
        for a in f.successor:
            amap[a] = 2 * i
            amap[g.arcs[a].inv] = 2 * i + 1
    for j, m in enumerate(matchings):
        for e in m.edges:
            amap[e] = amap[g.arcs[e].inv] = 2 * d + j
    return CoveringMap(g, bouquet(d, len(matchings)), (0,) * g.vertex_count, tuple(amap))
