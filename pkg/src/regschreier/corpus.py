"""Seeded and exhaustive generators of regular multigraphs for testing."""

from __future__ import annotations

import random
from typing import Iterator

from .graph_core import Graph, GraphBuilder, is_connected


def _build(n, loops, halves, multi) -> Graph:
    b = GraphBuilder(n)
    for (i, j), k in sorted(multi.items()):
        for _ in range(k):
            b.edge(i, j)
    for v in range(n):
        for _ in range(loops[v]):
            b.loop(v)
    for v in range(n):
        for _ in range(halves[v]):
            b.half(v)
    return b.build()


def regular_multigraphs(
    n: int, r: int, loops: bool = True, halves: bool = False, connected: bool = True
) -> Iterator[Graph]:
    """Every labelled r-regular multigraph on n vertices (no isomorphism reduction)."""
    rem = [r] * n
    lp = [0] * n
    hf = [0] * n
    multi: dict[tuple[int, int], int] = {}

    def spread(i: int, j: int) -> Iterator[None]:
        # distribute rem[i] over partners j, j+1, ...
        if rem[i] == 0:
            yield
            return
        if j >= n:
            return
        for k in range(min(rem[i], rem[j]), -1, -1):
            if k:
                multi[(i, j)] = k
            rem[i] -= k
            rem[j] -= k
            yield from spread(i, j + 1)
            rem[i] += k
            rem[j] += k
            multi.pop((i, j), None)

    def vertex(i: int) -> Iterator[None]:
        if i == n:
            yield
            return
        for l in range(rem[i] // 2 if loops else 0, -1, -1):
            for h in range(rem[i] - 2 * l if halves else 0, -1, -1):
                lp[i], hf[i] = l, h
                rem[i] -= 2 * l + h
                for _ in spread(i, i + 1):
                    yield from vertex(i + 1)
                rem[i] += 2 * l + h
        lp[i] = hf[i] = 0

    for _ in vertex(0):
        g = _build(n, lp, hf, multi)
        if not connected or is_connected(g):
            yield g


def random_regular(
    n: int, r: int, rng: random.Random, half_prob: float = 0.0, max_tries: int = 200
) -> Graph:
    """Connected r-regular multigraph from the configuration model.

    Each stub independently becomes a half-edge with probability half_prob;
    parity of the remaining stubs is fixed by turning one more into a
    half-edge. Degree 2 without half-edges is drawn as a random cycle.
    """
    if r == 2 and half_prob == 0:
        order = list(range(n))
        rng.shuffle(order)
        b = GraphBuilder(n)
        for i in range(n):
            b.edge(order[i], order[(i + 1) % n])
        return b.build()
    for _ in range(max_tries):
        stubs = [v for v in range(n) for _ in range(r)]
        halves = [s for s in stubs if rng.random() < half_prob]
        rest = list(stubs)
        for s in halves:
            rest.remove(s)
        if len(rest) % 2:
            if half_prob == 0 and not halves:
                raise ValueError("n * r must be even without half-edges")
            halves.append(rest.pop(rng.randrange(len(rest))))
        rng.shuffle(rest)
        b = GraphBuilder(n)
        for k in range(0, len(rest), 2):
            b.edge(rest[k], rest[k + 1])
        for v in halves:
            b.half(v)
        g = b.build()
        if is_connected(g):
            return g
    raise RuntimeError(f"no connected {r}-regular sample on {n} vertices")


def random_regular_bipartite(side: int, d: int, rng: random.Random, max_tries: int = 200) -> Graph:
    """Connected d-regular bipartite multigraph on 2*side vertices (left = [0, side))."""
    for _ in range(max_tries):
        b = GraphBuilder(2 * side)
        if d == 2:
            left, right = list(range(side)), list(range(side, 2 * side))
            rng.shuffle(left)
            rng.shuffle(right)
            for i in range(side):
                b.edge(left[i], right[i])
                b.edge(left[(i + 1) % side], right[i])
        else:
            for _ in range(d):
                perm = list(range(side))
                rng.shuffle(perm)
                for i in range(side):
                    b.edge(i, side + perm[i])
        g = b.build()
        if is_connected(g):
            return g
    raise RuntimeError(f"no connected {d}-regular bipartite sample on {2 * side} vertices")


def random_multigraph(n: int, m: int, rng: random.Random, loop_prob: float = 0.1, half_prob: float = 0.1) -> Graph:
    """Unconstrained multigraph with m records; used as a matching corpus."""
    b = GraphBuilder(n)
    for _ in range(m):
        x = rng.random()
        v = rng.randrange(n)
        if x < half_prob:
            b.half(v)
        elif x < half_prob + loop_prob:
            b.loop(v)
        else:
            b.edge(v, rng.randrange(n))
    return b.build()


def random_unmatchable(r: int, gadget_size: int, rng: random.Random, max_tries: int = 500) -> Graph:
    """Connected r-regular graph (r odd, >= 3) with no perfect matching.

    A hub is joined to r gadgets of odd size; removing the hub leaves r odd
    components, so at least r - 1 vertices stay unmatched.
    """
    if r % 2 == 0 or r < 3 or gadget_size % 2 == 0 or gadget_size < 3:
        raise ValueError("need odd r >= 3 and odd gadget_size >= 3")
    b = GraphBuilder(1 + r * gadget_size)
    for k in range(r):
        base = 1 + k * gadget_size
        for _ in range(max_tries):
            stubs = [base + i for i in range(gadget_size) for _ in range(r - (i == 0))]
            rng.shuffle(stubs)
            pairs = [(stubs[i], stubs[i + 1]) for i in range(0, len(stubs), 2)]
            gadget = GraphBuilder(gadget_size)
            for u, v in pairs:
                gadget.edge(u - base, v - base)
            if is_connected(gadget.build()):
                break
        else:
            raise RuntimeError("could not draw a connected gadget")
        b.edge(0, base)
        for u, v in pairs:
            b.edge(u, v)
    return b.build()
