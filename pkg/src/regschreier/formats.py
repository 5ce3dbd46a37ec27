"""Line-oriented text formats: ``heg`` graphs, certificates, permutation
actions, and DOT export.

heg::

    heg 1
    vertices 3
    edge 0 1
    loop 2
    half 2

Records are read in order; ``edge u v`` appends the arcs u->v, v->u,
``loop v`` a mutually inverse pair at v, ``half v`` one self-inverse arc.
Serialization walks edges by canonical arc, so a parsed graph serializes
back to the identical text and arc ids survive the round trip.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .cover import CoveringMap, relabel_source
from .graph_core import Graph, GraphBuilder, normalize, validate
from .matching import MatchabilityCertificate, Matching
from .schreier import (
    ClassificationResult,
    CoverOnly,
    DirectSchreier,
    GroupSignature,
    Letter,
    NotSchreierWithCover,
    PermutationAction,
    SchreierLabeling,
)

FORMAT_VERSION = 1


class FormatError(ValueError):
    def __init__(self, msg: str, line: Optional[int] = None):
        super().__init__(f"line {line}: {msg}" if line is not None else msg)
        self.line = line


def _lines(text: str):
    for no, raw in enumerate(text.splitlines(), 1):
        s = raw.split("#", 1)[0].strip()
        if s:
            yield no, s.split()


def _int(tok: str, no: int) -> int:
    try:
        v = int(tok)
    except ValueError:
        raise FormatError(f"expected an integer, got {tok!r}", no) from None
    if v < 0:
        raise FormatError(f"negative index {v}", no)
    return v


def _parse_graph_lines(lines) -> Graph:
    it = iter(lines)
    try:
        no, toks = next(it)
    except StopIteration:
        raise FormatError("empty graph document") from None
    if toks[0] != "heg" or len(toks) != 2:
        raise FormatError("expected header 'heg <version>'", no)
    if toks[1] != str(FORMAT_VERSION):
        raise FormatError(f"unsupported heg version {toks[1]}", no)
    try:
        no, toks = next(it)
    except StopIteration:
        raise FormatError("missing 'vertices N' record") from None
    if toks[0] != "vertices" or len(toks) != 2:
        raise FormatError("expected 'vertices N'", no)
    n = _int(toks[1], no)
    b = GraphBuilder(n)
    for no, toks in it:
        kind, args = toks[0], [_int(t, no) for t in toks[1:]]
        want = {"edge": 2, "loop": 1, "half": 1}.get(kind)
        if want is None:
            raise FormatError(f"unknown record {kind!r}", no)
        if len(args) != want:
            raise FormatError(f"'{kind}' takes {want} vertex indices", no)
        for v in args:
            if v >= n:
                raise FormatError(f"vertex {v} out of range [0, {n})", no)
        if kind == "half":
            b.half(args[0])
        elif kind == "loop":
            b.loop(args[0])
        else:
            b.edge(*args)
    return b.build()


def parse_graph(text: str) -> Graph:
    return _parse_graph_lines(list(_lines(text)))


def serialize_graph(g: Graph) -> str:
    problems = validate(g)
    if problems:
        raise ValueError("cannot serialize invalid graph: " + problems[0])
    out = [f"heg {FORMAT_VERSION}", f"vertices {g.vertex_count}"]
    for e in g.edges():
        arc = g.arcs[e]
        if arc.inv == e:
            out.append(f"half {arc.iota}")
        elif arc.iota == arc.tau:
            out.append(f"loop {arc.iota}")
        else:
            out.append(f"edge {arc.iota} {arc.tau}")
    return "\n".join(out) + "\n"


def is_normal(g: Graph) -> bool:
    return normalize(g)[0] == g


# ---------------------------------------------------------------- certificates


@dataclass
class Certificate:
    kind: str  # labeling | covering | classification
    verdict: Optional[str] = None
    labeling: Optional[SchreierLabeling] = None
    source: Optional[Graph] = None
    vertex_map: list[int] = field(default_factory=list)
    arc_map: list[int] = field(default_factory=list)
    deficiency: Optional[int] = None
    matching: Optional[Matching] = None


def _labeling_lines(lab: SchreierLabeling) -> list[str]:
    out = [f"signature {lab.signature}"]
    out += [f"arc {a} {x}" for a, x in enumerate(lab.labels)]
    return out


def _covering_lines(m: CoveringMap) -> list[str]:
    out = ["source"] + serialize_graph(m.source).splitlines() + ["end"]
    out += [f"v {u} {w}" for u, w in enumerate(m.vertex_map)]
    out += [f"a {a} {b}" for a, b in enumerate(m.arc_map)]
    return out


def normalized_cover(m: CoveringMap, lab: SchreierLabeling) -> tuple[CoveringMap, SchreierLabeling]:
    """Re-index the cover's arcs into the layout its serialization parses to."""
    src, perm = normalize(m.source)
    labels: list[Optional[Letter]] = [None] * len(perm)
    for a, x in enumerate(lab.labels):
        labels[perm[a]] = x
    return relabel_source(m, src, perm), SchreierLabeling(lab.signature, tuple(labels))  # type: ignore[arg-type]


def labeling_document(lab: SchreierLabeling) -> str:
    return "\n".join(["cert labeling"] + _labeling_lines(lab)) + "\n"


def covering_document(m: CoveringMap) -> str:
    if not is_normal(m.source):
        src, perm = normalize(m.source)
        m = relabel_source(m, src, perm)
    return "\n".join(["cert covering"] + _covering_lines(m)) + "\n"


def classification_document(res: ClassificationResult) -> str:
    out = ["cert classification", f"verdict {res.verdict}"]
    if isinstance(res, DirectSchreier):
        out += _labeling_lines(res.labeling)
        return "\n".join(out) + "\n"
    cover, lab = normalized_cover(res.cover, res.cover_labeling)
    if isinstance(res, NotSchreierWithCover):
        out.append(f"deficiency {res.certificate.deficiency}")
        out.append("matching " + " ".join(map(str, res.certificate.matching.edges)))
    out += _covering_lines(cover)
    out += _labeling_lines(lab)
    return "\n".join(out) + "\n"


def parse_certificate(text: str) -> Certificate:
    lines = list(_lines(text))
    if not lines or lines[0][1][0] != "cert" or len(lines[0][1]) != 2:
        raise FormatError("expected header 'cert <kind>'", lines[0][0] if lines else None)
    kind = lines[0][1][1]
    if kind not in ("labeling", "covering", "classification"):
        raise FormatError(f"unknown certificate kind {kind!r}", lines[0][0])
    cert = Certificate(kind)
    sig = None
    labels: dict[int, Letter] = {}
    vmap: dict[int, int] = {}
    amap: dict[int, int] = {}
    i = 1
    while i < len(lines):
        no, toks = lines[i]
        key = toks[0]
        i += 1
        if key == "source":
            j = i
            while j < len(lines) and lines[j][1][0] != "end":
                j += 1
            if j == len(lines):
                raise FormatError("'source' block without 'end'", no)
            cert.source = _parse_graph_lines(lines[i:j])
            i = j + 1
        elif key == "verdict" and len(toks) == 2:
            cert.verdict = toks[1]
        elif key == "deficiency" and len(toks) == 2:
            cert.deficiency = _int(toks[1], no)
        elif key == "matching":
            cert.matching = Matching(tuple(_int(t, no) for t in toks[1:]))
        elif key == "signature" and len(toks) == 2:
            try:
                sig = GroupSignature.parse(toks[1])
            except ValueError as exc:
                raise FormatError(str(exc), no) from None
        elif key == "arc" and len(toks) == 3:
            try:
                labels[_int(toks[1], no)] = Letter.parse(toks[2])
            except ValueError as exc:
                raise FormatError(str(exc), no) from None
        elif key in ("v", "a") and len(toks) == 3:
            (vmap if key == "v" else amap)[_int(toks[1], no)] = _int(toks[2], no)
        else:
            raise FormatError(f"unexpected record {' '.join(toks)!r}", no)
    if labels or sig is not None:
        if sig is None:
            raise FormatError("labeling without 'signature'")
        if sorted(labels) != list(range(len(labels))):
            raise FormatError("arc letters must cover ids 0..m-1 exactly once")
        cert.labeling = SchreierLabeling(sig, tuple(labels[a] for a in range(len(labels))))
    for name, mp in (("v", vmap), ("a", amap)):
        if sorted(mp) != list(range(len(mp))):
            raise FormatError(f"'{name}' records must cover ids 0..k-1 exactly once")
    cert.vertex_map = [vmap[k] for k in range(len(vmap))]
    cert.arc_map = [amap[k] for k in range(len(amap))]
    if kind == "labeling" and cert.labeling is None:
        raise FormatError("labeling certificate without letters")
    if kind == "covering" and cert.source is None:
        raise FormatError("covering certificate without 'source' graph")
    if kind == "classification":
        if cert.verdict not in ("direct", "not-schreier", "cover-only"):
            raise FormatError(f"unknown verdict {cert.verdict!r}")
        if cert.labeling is None:
            raise FormatError("classification certificate without letters")
        if cert.verdict != "direct" and cert.source is None:
            raise FormatError("cover verdict without 'source' graph")
        if cert.verdict == "not-schreier" and (cert.deficiency is None or cert.matching is None):
            raise FormatError("not-schreier verdict needs 'deficiency' and 'matching'")
    return cert


def certificate_to_result(cert: Certificate, g: Graph) -> ClassificationResult:
    """Rebuild the in-memory classification a certificate describes, against g."""
    assert cert.kind == "classification" and cert.labeling is not None
    if cert.verdict == "direct":
        return DirectSchreier(cert.labeling.signature, cert.labeling)
    assert cert.source is not None
    cmap = cert_covering(cert, g)
    if cert.verdict == "cover-only":
        return CoverOnly(cmap, cert.labeling)
    assert cert.matching is not None and cert.deficiency is not None
    mc = MatchabilityCertificate(cert.deficiency == 0, cert.matching, cert.deficiency)
    return NotSchreierWithCover(mc, cmap, cert.labeling)


def cert_covering(cert: Certificate, target: Graph) -> CoveringMap:
    assert cert.source is not None
    return CoveringMap(cert.source, target, tuple(cert.vertex_map), tuple(cert.arc_map))


# ---------------------------------------------------------------- actions


def parse_action(text: str) -> PermutationAction:
    """One generator per line: ``name: i0 i1 ... [inv]``, images in one-line notation."""
    free, invs = [], []
    size = None
    for no, toks in _lines(text):
        if not toks[0].endswith(":"):
            raise FormatError("expected '<name>: <images> [inv]'", no)
        flag = toks[-1] == "inv"
        images = [_int(t, no) for t in toks[1 : len(toks) - flag]]
        if size is None:
            size = len(images)
        elif len(images) != size:
            raise FormatError(f"permutation has {len(images)} points, expected {size}", no)
        (invs if flag else free).append(tuple(images))
    if size is None:
        raise FormatError("no generators")
    return PermutationAction(size, tuple(free), tuple(invs))


def serialize_action(act: PermutationAction) -> str:
    out = [f"a{i}: " + " ".join(map(str, p)) for i, p in enumerate(act.free_gens)]
    out += [f"t{j}: " + " ".join(map(str, p)) + " inv" for j, p in enumerate(act.inv_gens)]
    return "\n".join(out) + "\n"


# ---------------------------------------------------------------- DOT


def export_dot(g: Graph, lab: Optional[SchreierLabeling] = None) -> str:
    """Undirected DOT; half-edges are dotted self-arcs, free letters point
    along their + direction."""
    out = ["graph G {"]
    out += [f"  {v};" for v in range(g.vertex_count)]
    for e in g.edges():
        arc = g.arcs[e]
        u, v = arc.iota, arc.tau
        attrs = []
        if lab is not None:
            x = lab.labels[e]
            if x.kind == "a":
                if x.sign < 0:
                    u, v = v, u
                attrs += [f'label="a{x.index}"', "dir=forward"]
            else:
                attrs.append(f'label="t{x.index}"')
        if arc.inv == e:
            attrs.append("style=dotted")
        suffix = f" [{', '.join(attrs)}]" if attrs else ""
        out.append(f"  {u} -- {v}{suffix};")
    out.append("}")
    return "\n".join(out) + "\n"
