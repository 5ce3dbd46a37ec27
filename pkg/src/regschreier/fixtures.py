"""Named small graphs used in tests, scripts and the data/ directory."""

from __future__ import annotations

from itertools import combinations

from .graph_core import Graph, GraphBuilder, from_records


def cycle(n: int) -> Graph:
    return from_records(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    return from_records(n, combinations(range(n), 2))


def complete_bipartite(p: int, q: int) -> Graph:
    return from_records(p + q, [(i, p + j) for i in range(p) for j in range(q)])


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return from_records(10, outer + spokes + inner)


def parallel_edges(k: int) -> Graph:
    return from_records(2, [(0, 1)] * k)


def loop_vertex() -> Graph:
    return from_records(1, loops=[0])


def half_vertex() -> Graph:
    return from_records(1, halves=[0])


def figure2_left() -> Graph:
    """Simple 3-regular graph on 16 vertices with no perfect matching.

    Hub 0 joined to three 5-vertex gadgets; gadget k has vertices
    B, C, D, E, F = 1+5k .. 5+5k with B adjacent to the hub.
    """
    b = GraphBuilder(16)
    for k in range(3):
        B, C, D, E, F = range(1 + 5 * k, 6 + 5 * k)
        b.edge(0, B)
        for u, v in [(B, C), (C, F), (F, D), (D, B), (C, E), (E, D), (E, F)]:
            b.edge(u, v)
    return b.build()


def figure2_right() -> Graph:
    """4-regular graph on 10 vertices with four half-edges.

    Hub 0 carries a half-edge and joins three triangles B, C, D =
    1+3k .. 3+3k; B carries a half-edge, C and D a loop each.
    """
    b = GraphBuilder(10)
    for k in range(3):
        B, C, D = range(1 + 3 * k, 4 + 3 * k)
        b.edge(0, B)
        b.edge(B, C)
        b.edge(C, D)
        b.edge(D, B)
    for k in range(3):
        B, C, D = range(1 + 3 * k, 4 + 3 * k)
        b.loop(C)
        b.loop(D)
    b.half(0)
    for k in range(3):
        b.half(1 + 3 * k)
    return b.build()


NAMED = {
    "c4": lambda: cycle(4),
    "k4": lambda: complete(4),
    "k5": lambda: complete(5),
    "k33": lambda: complete_bipartite(3, 3),
    "petersen": petersen,
    "loop": loop_vertex,
    "half": half_vertex,
    "figure2-left": figure2_left,
    "figure2-right": figure2_right,
}
