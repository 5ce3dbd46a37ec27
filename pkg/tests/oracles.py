"""Brute-force reference implementations, independent of the library code paths."""

from itertools import product


def simple_edges(g):
    """Distinct unordered non-loop vertex pairs."""
    pairs = set()
    for a, (i, t, inv) in enumerate(g.arcs):
        if i != t:
            pairs.add((min(i, t), max(i, t)))
    return sorted(pairs)


def brute_max_matching(g):
    n = g.vertex_count
    adj = {v: set() for v in range(n)}
    for u, v in simple_edges(g):
        adj[u].add(v)
        adj[v].add(u)

    best = 0

    def go(free, size):
        nonlocal best
        best = max(best, size)
        if size + len(free) // 2 <= best:
            return
        if not free:
            return
        v = min(free)
        rest = free - {v}
        for w in adj[v] & rest:
            go(rest - {w}, size + 1)
        go(rest, size)

    go(frozenset(range(n)), 0)
    return best


def count_perfect_matchings(g):
    n = g.vertex_count
    edges = simple_edges(g)

    def go(free):
        if not free:
            return 1
        v = min(free)
        return sum(go(free - {a, b}) for a, b in edges if v in (a, b) and a in free and b in free)

    return go(frozenset(range(n)))


def brute_bipartite(g):
    n = g.vertex_count
    if any(i == t for i, t, _ in g.arcs):
        return False
    for colors in product((0, 1), repeat=n):
        if all(colors[i] != colors[t] for i, t, _ in g.arcs):
            return True
    return n == 0


def has_augmenting_path(g, matched_pairs):
    """Search every simple alternating path between two free vertices."""
    mate = {}
    for u, v in matched_pairs:
        mate[u], mate[v] = v, u
    adj = {v: set() for v in range(g.vertex_count)}
    for u, v in simple_edges(g):
        adj[u].add(v)
        adj[v].add(u)

    def dfs(v, seen):
        # v is reached by a non-matching edge; continue along the matching edge
        if v not in mate:
            return True
        w = mate[v]
        if w in seen:
            return False
        for x in adj[w]:
            if x not in seen and x != w and mate.get(w) != x:
                if dfs(x, seen | {w, x}):
                    return True
        return False

    for s in range(g.vertex_count):
        if s in mate:
            continue
        for x in adj[s]:
            if x != s and dfs(x, {s, x}):
                return True
    return False


def is_covering_brute(src, tgt, vmap, amap):
    if len(vmap) != src.vertex_count or len(amap) != src.arc_count:
        return False
    for a, (i, t, inv) in enumerate(src.arcs):
        b = amap[a]
        if not 0 <= b < tgt.arc_count:
            return False
        if tgt.arcs[b][0] != vmap[i] or tgt.arcs[b][1] != vmap[t] or amap[inv] != tgt.arcs[b][2]:
            return False
    for v in range(src.vertex_count):
        mine = [amap[a] for a, arc in enumerate(src.arcs) if arc[0] == v]
        theirs = [b for b, arc in enumerate(tgt.arcs) if arc[0] == vmap[v]]
        if sorted(mine) != sorted(theirs):
            return False
    return True
