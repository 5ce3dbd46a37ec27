"""Maximum matchings on multigraphs.

Loops and half-edges never belong to a matching. Parallel edges are
collapsed while searching and the least edge id of a parallel class is the
one returned.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .graph_core import Bipartition, Graph, check_bipartition, regularity, subgraph_without


@dataclass(frozen=True)
class Matching:
    edges: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "edges", tuple(sorted(self.edges)))

    def __len__(self) -> int:
        return len(self.edges)


@dataclass(frozen=True)
class MatchabilityCertificate:
    matchable: bool
    matching: Matching
    deficiency: int


def matching_violations(g: Graph, m: Matching) -> list[str]:
    out = []
    covered: dict[int, int] = {}
    for e in m.edges:
        if not 0 <= e < g.arc_count or g.arcs[e].inv < e:
            out.append(f"edge {e}: not a canonical arc of the graph")
            continue
        arc = g.arcs[e]
        if arc.iota == arc.tau:
            out.append(f"edge {e}: loops and half-edges cannot be matched")
            continue
        for v in (arc.iota, arc.tau):
            if v in covered:
                out.append(f"edge {e}: vertex {v} already covered by edge {covered[v]}")
            else:
                covered[v] = e
    return out


def matched_vertices(g: Graph, m: Matching) -> set[int]:
    return {v for e in m.edges for v in (g.arcs[e].iota, g.arcs[e].tau)}


def _simple_support(g: Graph) -> list[list[tuple[int, int]]]:
    """Per vertex: (least edge id, neighbour) pairs, ordered by edge id."""
    best: dict[tuple[int, int], int] = {}
    for e in g.edges():
        u, v = g.arcs[e].iota, g.arcs[e].tau
        if u == v:
            continue
        key = (min(u, v), max(u, v))
        if key not in best:
            best[key] = e
    adj: list[list[tuple[int, int]]] = [[] for _ in range(g.vertex_count)]
    for (u, v), e in sorted(best.items(), key=lambda kv: kv[1]):
        adj[u].append((e, v))
        adj[v].append((e, u))
    return adj


def max_matching_bipartite(g: Graph, b: Bipartition) -> Matching:
    """Hopcroft-Karp: BFS layering from free left vertices, then disjoint
    shortest augmenting paths found by DFS in increasing vertex / edge id.
    """
    check_bipartition(g, b)
    adj = _simple_support(g)
    left = b.part(0)
    INF = float("inf")
    mate_l: dict[int, tuple[int, int]] = {}  # left -> (edge, right)
    mate_r: dict[int, int] = {}  # right -> left
    while True:
        dist: dict[int, float] = {}
        queue = deque()
        for u in left:
            if u not in mate_l:
                dist[u] = 0
                queue.append(u)
        found = INF
        while queue:
            u = queue.popleft()
            if dist[u] >= found:
                continue
            for _, w in adj[u]:
                x = mate_r.get(w)
                if x is None:
                    found = min(found, dist[u] + 1)
                elif x not in dist:
                    dist[x] = dist[u] + 1
                    queue.append(x)
        if found == INF:
            break
        ptr = {u: 0 for u in dist}
        for root in left:
            if root in mate_l:
                continue
            # iterative DFS over layered graph; path holds (left, edge, right)
            path: list[tuple[int, int, int]] = []
            u = root
            while True:
                advanced = False
                while ptr[u] < len(adj[u]):
                    e, w = adj[u][ptr[u]]
                    ptr[u] += 1
                    x = mate_r.get(w)
                    if x is None:
                        if dist[u] + 1 == found:
                            path.append((u, e, w))
                            for pu, pe, pw in path:
                                mate_l[pu] = (pe, pw)
                                mate_r[pw] = pu
                            path = []
                            advanced = None  # augmented
                            break
                    elif dist.get(x) == dist[u] + 1:
                        path.append((u, e, w))
                        u = x
                        advanced = True
                        break
                if advanced is None:
                    break
                if not advanced:
                    dist[u] = INF  # dead end
                    if not path:
                        break
                    u = path.pop()[0]
    return Matching(tuple(e for e, _ in mate_l.values()))


def max_matching_general(g: Graph) -> Matching:
    """Edmonds' blossom algorithm on the simple support of g, O(V^3)."""
    n = g.vertex_count
    adj_e = _simple_support(g)
    adj = [[w for _, w in row] for row in adj_e]
    match = [-1] * n
    # greedy start; the blossom phase only augments from the remaining free vertices
    for v in range(n):
        if match[v] == -1:
            for w in adj[v]:
                if match[w] == -1:
                    match[v], match[w] = w, v
                    break

    def find_path(root: int) -> tuple[int, list[int]]:
        used = [False] * n
        parent = [-1] * n
        base = list(range(n))
        used[root] = True
        queue = deque([root])

        def lca(a: int, b: int) -> int:
            seen = [False] * n
            while True:
                a = base[a]
                seen[a] = True
                if match[a] == -1:
                    break
                a = parent[match[a]]
            while True:
                b = base[b]
                if seen[b]:
                    return b
                b = parent[match[b]]

        def mark_path(v: int, b: int, child: int, blossom: list[bool]) -> None:
            while base[v] != b:
                blossom[base[v]] = blossom[base[match[v]]] = True
                parent[v] = child
                child = match[v]
                v = parent[match[v]]

        while queue:
            v = queue.popleft()
            for to in adj[v]:
                if base[v] == base[to] or match[v] == to:
                    continue
                if to == root or (match[to] != -1 and parent[match[to]] != -1):
                    cur = lca(v, to)
                    blossom = [False] * n
                    mark_path(v, cur, to, blossom)
                    mark_path(to, cur, v, blossom)
                    for i in range(n):
                        if blossom[base[i]]:
                            base[i] = cur
                            if not used[i]:
                                used[i] = True
                                queue.append(i)
                elif parent[to] == -1:
                    parent[to] = v
                    if match[to] == -1:
                        return to, parent
                    used[match[to]] = True
                    queue.append(match[to])
        return -1, parent

    for root in range(n):
        if match[root] != -1:
            continue
        v, parent = find_path(root)
        # flip the alternating path ending at v
        while v != -1:
            pv = parent[v]
            ppv = match[pv]
            match[v], match[pv] = pv, v
            v = ppv

    least = {}
    for u, row in enumerate(adj_e):
        for e, w in row:
            least[(u, w)] = e
    return Matching(tuple(least[(u, match[u])] for u in range(n) if match[u] > u))


def is_matchable(g: Graph) -> MatchabilityCertificate:
    m = max_matching_general(g)
    deficiency = g.vertex_count - 2 * len(m)
    return MatchabilityCertificate(deficiency == 0, m, deficiency)


def remove_matching(g: Graph, m: Matching) -> tuple[Graph, dict[int, int]]:
    """Delete the edges of m. Returns the remainder and the old -> new arc map
    for surviving arcs (restricted to canonical arcs it is the edge map)."""
    for e in m.edges:
        if not 0 <= e < g.arc_count or g.arcs[e].inv < e:
            raise ValueError(f"edge {e} is not an edge of the graph")
    return subgraph_without(g, m.edges)


def orthogonal_matchings(g: Graph, b: Bipartition, k: int) -> list[Matching]:
    """k pairwise edge-disjoint perfect matchings of a regular bipartite graph.

    Peels one perfect matching at a time; what is left stays regular and
    bipartite, so the next one always exists.
    """
    check_bipartition(g, b)
    d = regularity(g)
    if d is None:
        raise ValueError("graph is not regular")
    if k > d:
        raise ValueError(f"asked for {k} orthogonal perfect matchings of a {d}-regular graph")
    out = []
    cur, back = g, list(range(g.arc_count))
    for _ in range(k):
        m = max_matching_bipartite(cur, b)
        if 2 * len(m) != g.vertex_count:
            raise RuntimeError("regular bipartite graph without a perfect matching")
        out.append(Matching(tuple(back[e] for e in m.edges)))
        cur, fwd = remove_matching(cur, m)
        new_back = [0] * cur.arc_count
        for old, new in fwd.items():
            new_back[new] = back[old]
        back = new_back
    return out
