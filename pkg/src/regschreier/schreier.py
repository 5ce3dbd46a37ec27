"""Schreier labelings over F_d * (Z/2Z)^{*n} and the classification of
connected regular graphs.

A labeling assigns to every arc a generator letter: ``a<i>+`` / ``a<i>-``
for the two directions of free generator i, ``t<j>`` for involution j. It
certifies a Schreier graph exactly when each vertex sees every letter once
and inverse arcs carry inverse letters.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import NamedTuple, Optional, Sequence, Union

from .cover import CoveringMap, canonical_double_cover, is_double_cover, verify_covering
from .factorization import TwoFactor, bouquet, cover_to_bouquet, two_factorization
from .graph_core import (
    Bipartition,
    Graph,
    GraphBuilder,
    bipartition,
    check_bipartition,
    is_connected,
    regularity,
    stars,
    validate,
)
from .matching import (
    MatchabilityCertificate,
    Matching,
    is_matchable,
    matching_violations,
    orthogonal_matchings,
    remove_matching,
)


class PreconditionError(ValueError):
    """Input graph is valid but outside the classifiable class."""


class Letter(NamedTuple):
    kind: str  # "a" free, "t" involution
    index: int
    sign: int = 0  # +1 / -1 for free letters, 0 for involutions

    def inverse(self) -> "Letter":
        return Letter(self.kind, self.index, -self.sign)

    def __str__(self) -> str:
        if self.kind == "t":
            return f"t{self.index}"
        return f"a{self.index}{'+' if self.sign > 0 else '-'}"

    @classmethod
    def parse(cls, text: str) -> "Letter":
        m = re.fullmatch(r"a(\d+)([+-])|t(\d+)", text)
        if not m:
            raise ValueError(f"bad generator letter {text!r}")
        if m.group(3) is not None:
            return cls("t", int(m.group(3)))
        return cls("a", int(m.group(1)), 1 if m.group(2) == "+" else -1)


def free(i: int, sign: int = 1) -> Letter:
    return Letter("a", i, sign)


def inv(j: int) -> Letter:
    return Letter("t", j)


@dataclass(frozen=True)
class GroupSignature:
    """F_d * (Z/2Z)^{*n}, written e.g. ``F2``, ``F1*Z2``, ``Z2^3`` (free power)."""

    free_rank: int
    involution_count: int

    @property
    def degree(self) -> int:
        return 2 * self.free_rank + self.involution_count

    def letters(self) -> list[Letter]:
        out = []
        for i in range(self.free_rank):
            out += [free(i, 1), free(i, -1)]
        return out + [inv(j) for j in range(self.involution_count)]

    def __str__(self) -> str:
        d, n = self.free_rank, self.involution_count
        parts = [f"F{d}"] if d or not n else []
        if n == 1:
            parts.append("Z2")
        elif n > 1:
            parts.append(f"Z2^{n}")
        return "*".join(parts)

    @classmethod
    def parse(cls, text: str) -> "GroupSignature":
        m = re.fullmatch(r"(?:F(\d+))?\*?(?:Z2(?:\^(\d+))?)?", text)
        if not m or not text or text.startswith("*") or text.endswith("*"):
            raise ValueError(f"bad group signature {text!r}")
        d = int(m.group(1)) if m.group(1) else 0
        if "Z2" in text:
            n = int(m.group(2)) if m.group(2) else 1
        else:
            n = 0
        return cls(d, n)


@dataclass(frozen=True)
class SchreierLabeling:
    signature: GroupSignature
    labels: tuple[Letter, ...]


@dataclass(frozen=True)
class PermutationAction:
    set_size: int
    free_gens: tuple[tuple[int, ...], ...] = ()
    inv_gens: tuple[tuple[int, ...], ...] = ()

    def violations(self) -> list[str]:
        out = []
        ident = list(range(self.set_size))
        for k, p in enumerate(self.free_gens + self.inv_gens):
            if sorted(p) != ident:
                out.append(f"generator {k} is not a permutation of {self.set_size} points")
        for j, p in enumerate(self.inv_gens):
            if sorted(p) == ident and any(p[p[x]] != x for x in ident):
                out.append(f"involution generator {j} does not square to the identity")
        return out


@dataclass(frozen=True)
class DirectSchreier:
    signature: GroupSignature
    labeling: SchreierLabeling
    verdict = "direct"


@dataclass(frozen=True)
class NotSchreierWithCover:
    certificate: MatchabilityCertificate
    cover: CoveringMap
    cover_labeling: SchreierLabeling
    verdict = "not-schreier"


@dataclass(frozen=True)
class CoverOnly:
    cover: CoveringMap
    cover_labeling: SchreierLabeling
    verdict = "cover-only"


ClassificationResult = Union[DirectSchreier, NotSchreierWithCover, CoverOnly]


def verify_labeling(g: Graph, lab: SchreierLabeling) -> list[str]:
    if len(lab.labels) != g.arc_count:
        return [f"labeling has {len(lab.labels)} letters for {g.arc_count} arcs"]
    sig = lab.signature
    alphabet = sig.letters()
    valid = set(alphabet)
    out = []
    for a, x in enumerate(lab.labels):
        if x not in valid:
            out.append(f"arc {a}: letter {x} not in {sig}")
            continue
        e = g.arcs[a].inv
        if e == a:
            if x.kind != "t":
                out.append(f"arc {a}: half-edge needs involution letter, got {x}")
        elif lab.labels[e] != x.inverse():
            out.append(f"arc {a}: inverse arc {e} carries {lab.labels[e]}, expected {x.inverse()}")
    for v, st in enumerate(stars(g)):
        seen: dict[Letter, int] = {}
        for a in st:
            x = lab.labels[a]
            if x in seen:
                out.append(f"vertex {v}: duplicate letter {x} at vertex (arcs {seen[x]}, {a})")
            seen[x] = a
        missing = [str(x) for x in alphabet if x not in seen]
        if missing:
            out.append(f"vertex {v}: missing letters {' '.join(missing)}")
    return out


def labeling_to_covering(g: Graph, lab: SchreierLabeling) -> CoveringMap:
    """The map onto bouquet(d, n) sending each arc to the loop of its letter."""
    d = lab.signature.free_rank
    target = bouquet(d, lab.signature.involution_count)
    amap = []
    for x in lab.labels:
        if x.kind == "a":
            amap.append(2 * x.index + (0 if x.sign > 0 else 1))
        else:
            amap.append(2 * d + x.index)
    return CoveringMap(g, target, (0,) * g.vertex_count, tuple(amap))


def label_from_factorization(
    g: Graph, factors: Sequence[TwoFactor], matchings: Sequence[Matching]
) -> SchreierLabeling:
    cov = cover_to_bouquet(g, factors, matchings)
    d = len(factors)
    sig = GroupSignature(d, len(matchings))
    letters = []
    for b in cov.arc_map:
        if b < 2 * d:
            letters.append(free(b // 2, 1 if b % 2 == 0 else -1))
        else:
            letters.append(inv(b - 2 * d))
    return SchreierLabeling(sig, tuple(letters))


def _factor_remainder(g: Graph, matchings: Sequence[Matching]) -> list[TwoFactor]:
    """2-factorize g minus the given matchings, with arcs expressed in g."""
    cur, back = g, list(range(g.arc_count))
    for m in matchings:
        # matchings are in g's edge ids; translate into the current remainder
        fwd_ids = {b: a for a, b in enumerate(back)}
        cur, fwd = remove_matching(cur, Matching(tuple(fwd_ids[e] for e in m.edges)))
        new_back = [0] * cur.arc_count
        for old, new in fwd.items():
            new_back[new] = back[old]
        back = new_back
    return [TwoFactor(tuple(back[a] for a in f.successor)) for f in two_factorization(cur)]


def label_regular(g: Graph, matchings: Sequence[Matching] = ()) -> SchreierLabeling:
    """Label a (2d+n)-regular half-edge-free graph from n orthogonal perfect matchings."""
    return label_from_factorization(g, _factor_remainder(g, matchings), matchings)


def label_bipartite_involutions(g: Graph, b: Bipartition) -> SchreierLabeling:
    check_bipartition(g, b)
    d = regularity(g) if g.vertex_count else 0
    if d is None:
        raise PreconditionError("graph is not regular")
    return label_from_factorization(g, [], orthogonal_matchings(g, b, d))


def action_from_labeling(g: Graph, lab: SchreierLabeling) -> PermutationAction:
    problems = verify_labeling(g, lab)
    if problems:
        raise ValueError("invalid labeling: " + "; ".join(problems[:5]))
    if g.vertex_count and not is_connected(g):
        raise PreconditionError("graph is disconnected; the action would not be transitive")
    sig = lab.signature
    n = g.vertex_count
    free_gens = [[0] * n for _ in range(sig.free_rank)]
    inv_gens = [[0] * n for _ in range(sig.involution_count)]
    for a, x in enumerate(lab.labels):
        arc = g.arcs[a]
        if x.kind == "t":
            inv_gens[x.index][arc.iota] = arc.tau
        elif x.sign > 0:
            free_gens[x.index][arc.iota] = arc.tau
    return PermutationAction(n, tuple(map(tuple, free_gens)), tuple(map(tuple, inv_gens)))


def orbital_graph(act: PermutationAction) -> tuple[Graph, SchreierLabeling]:
    problems = act.violations()
    if problems:
        raise ValueError("; ".join(problems))
    b = GraphBuilder(act.set_size)
    labels: list[Letter] = []
    for i, p in enumerate(act.free_gens):
        for x in range(act.set_size):
            b.edge(x, p[x])
            labels += [free(i, 1), free(i, -1)]
    for j, p in enumerate(act.inv_gens):
        for x in range(act.set_size):
            if p[x] == x:
                b.half(x)
                labels.append(inv(j))
            elif x < p[x]:
                b.edge(x, p[x])
                labels += [inv(j), inv(j)]
    sig = GroupSignature(len(act.free_gens), len(act.inv_gens))
    return b.build(), SchreierLabeling(sig, tuple(labels))


def letter_endpoints(g: Graph, lab: SchreierLabeling) -> dict[tuple[int, Letter], int]:
    """(vertex, letter) -> endpoint of the unique arc with that letter at the vertex."""
    return {(g.arcs[a].iota, x): g.arcs[a].tau for a, x in enumerate(lab.labels)}


def _require_classifiable(g: Graph) -> int:
    problems = validate(g)
    if problems:
        raise ValueError("invalid graph: " + "; ".join(problems[:5]))
    if g.vertex_count == 0:
        raise PreconditionError("empty graph")
    if not is_connected(g):
        raise PreconditionError("graph is disconnected; a Schreier graph is necessarily connected")
    r = regularity(g)
    if r is None:
        raise PreconditionError("graph is not regular")
    return r


def _parity_labeling(k: Graph, b: Optional[Bipartition]) -> SchreierLabeling:
    """Parity-minimal labeling of a half-edge-free regular graph that is known
    to have a perfect matching when its degree is odd."""
    r = regularity(k)
    if r % 2 == 0:
        return label_regular(k)
    if b is not None:
        m = orthogonal_matchings(k, b, 1)[0]
    else:
        cert = is_matchable(k)
        assert cert.matchable
        m = cert.matching
    return label_regular(k, [m])


def _labeled_cover(g: Graph) -> tuple[CoveringMap, SchreierLabeling]:
    cover, cmap = canonical_double_cover(g)
    n = g.vertex_count
    sides = Bipartition(tuple([0] * n + [1] * n))
    return cmap, _parity_labeling(cover, sides)


def classify(g: Graph) -> ClassificationResult:
    """Either a Schreier labeling of g, or a Schreier-labeled double cover.

    Even degree without half-edges: 2-factorize (free group of rank d).
    Odd degree without half-edges: one perfect matching plus a
    2-factorization of the rest, if a perfect matching exists; otherwise
    the maximum matching is the witness and the canonical double cover
    (bipartite, hence matchable) is labeled instead. Graphs with half-edges
    only get the labeled cover.
    """
    r = _require_classifiable(g)
    if g.has_half_edges():
        cmap, lab = _labeled_cover(g)
        return CoverOnly(cmap, lab)
    if r % 2 == 0:
        lab = label_regular(g)
        return DirectSchreier(lab.signature, lab)
    cert = is_matchable(g)
    if cert.matchable:
        lab = label_regular(g, [cert.matching])
        return DirectSchreier(lab.signature, lab)
    # regular bipartite graphs are matchable, so g is not bipartite and its cover is connected
    assert bipartition(g) is None
    cmap, lab = _labeled_cover(g)
    assert is_connected(cmap.source)
    return NotSchreierWithCover(cert, cmap, lab)


def verify_classification(g: Graph, res: ClassificationResult) -> list[str]:
    """Independent re-check of a classification certificate."""
    if isinstance(res, DirectSchreier):
        out = verify_labeling(g, res.labeling)
        if res.signature != res.labeling.signature:
            out.append("signature does not match labeling")
        if not is_connected(g):
            out.append("graph is not connected")
        return out
    out = [f"cover: {p}" for p in verify_covering(res.cover)]
    if res.cover.target != g:
        out.append("cover target is not the input graph")
    if out:
        return out
    if not is_double_cover(res.cover):
        out.append("cover is not a double cover")
    if not is_connected(res.cover.source):
        out.append("cover is not connected")
    out += [f"cover labeling: {p}" for p in verify_labeling(res.cover.source, res.cover_labeling)]
    if isinstance(res, NotSchreierWithCover):
        cert = res.certificate
        out += [f"matching: {p}" for p in matching_violations(g, cert.matching)]
        if cert.deficiency != g.vertex_count - 2 * len(cert.matching):
            out.append("deficiency does not match the matching size")
        if cert.deficiency <= 0 or cert.matchable:
            out.append("certificate claims no deficiency")
        if len(is_matchable(g).matching) != len(cert.matching):
            out.append("stored matching is not maximum")
    return out
