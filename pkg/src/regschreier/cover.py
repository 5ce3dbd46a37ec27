"""Coverings between graphs and the canonical double cover G x K2."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .graph_core import Arc, Graph, stars


@dataclass(frozen=True)
class CoveringMap:
    source: Graph
    target: Graph
    vertex_map: tuple[int, ...]
    arc_map: tuple[int, ...]


def canonical_double_cover(g: Graph) -> tuple[Graph, CoveringMap]:
    """Tensor product with K2.

    Vertex (v, i) is encoded as v + i*|V|. Source arc e yields cover arcs
    2e (from copy 0) and 2e+1 (from copy 1). A half-edge at v becomes the
    single edge {(v,0), (v,1)}; its two arcs are mutually inverse.
    """
    n = g.vertex_count
    arcs = []
    for i, t, inv in g.arcs:
        # (i,0)->(t,1) is inverse to (t,1)->(i,0), the copy-1 lift of inv;
        # for a half-edge inv == e, so its two lifts pair with each other.
        arcs.append(Arc(i, t + n, 2 * inv + 1))
        arcs.append(Arc(i + n, t, 2 * inv))
    cover = Graph(2 * n, tuple(arcs))
    vmap = tuple(v % n for v in range(2 * n)) if n else ()
    amap = tuple(a // 2 for a in range(2 * g.arc_count))
    return cover, CoveringMap(cover, g, vmap, amap)


def verify_covering(m: CoveringMap) -> list[str]:
    src, tgt = m.source, m.target
    if len(m.vertex_map) != src.vertex_count or len(m.arc_map) != src.arc_count:
        raise ValueError("covering map size does not match its source graph")
    out = []
    for v, w in enumerate(m.vertex_map):
        if not 0 <= w < tgt.vertex_count:
            out.append(f"vertex {v}: image {w} out of range")
    for a, b in enumerate(m.arc_map):
        if not 0 <= b < tgt.arc_count:
            out.append(f"arc {a}: image {b} out of range")
    if out:
        return out
    for a, arc in enumerate(src.arcs):
        img = tgt.arcs[m.arc_map[a]]
        if img.iota != m.vertex_map[arc.iota]:
            out.append(f"arc {a}: initial vertex does not commute")
        if img.tau != m.vertex_map[arc.tau]:
            out.append(f"arc {a}: terminal vertex does not commute")
        if m.arc_map[arc.inv] != img.inv:
            out.append(f"arc {a}: inverse does not commute")
    tstars = stars(tgt)
    for v, st in enumerate(stars(src)):
        w = m.vertex_map[v]
        images = Counter(m.arc_map[a] for a in st)
        if sorted(images) != tstars[w] or any(c != 1 for c in images.values()):
            out.append(f"vertex {v}: star map onto star of {w} is not a bijection")
    return out


def is_double_cover(m: CoveringMap) -> bool:
    if verify_covering(m):
        raise ValueError("not a covering map")
    sizes = Counter(m.vertex_map)
    return all(sizes[w] == 2 for w in range(m.target.vertex_count))


def fiber(m: CoveringMap, v: int) -> list[int]:
    if not 0 <= v < m.target.vertex_count:
        raise IndexError(f"vertex {v} out of range")
    return [u for u, w in enumerate(m.vertex_map) if w == v]


def identity_covering(g: Graph) -> CoveringMap:
    return CoveringMap(g, g, tuple(range(g.vertex_count)), tuple(range(g.arc_count)))


def disjoint_copies_covering(g: Graph, copies: int = 2) -> CoveringMap:
    """Projection of `copies` disjoint copies of g onto g."""
    n, m = g.vertex_count, g.arc_count
    arcs = []
    for k in range(copies):
        arcs.extend(Arc(i + k * n, t + k * n, inv + k * m) for i, t, inv in g.arcs)
    src = Graph(copies * n, tuple(arcs))
    return CoveringMap(
        src,
        g,
        tuple(v % n for v in range(copies * n)),
        tuple(a % m for a in range(copies * m)),
    )


def relabel_source(m: CoveringMap, new_source: Graph, perm: list[int]) -> CoveringMap:
    """Transport a covering onto an arc-relabelled copy of its source."""
    amap = [0] * len(perm)
    for a, b in enumerate(m.arc_map):
        amap[perm[a]] = b
    return CoveringMap(new_source, m.target, m.vertex_map, tuple(amap))
