"""Command line interface.

Exit codes: 0 success / direct Schreier verdict, 1 verification failed,
2 malformed input, 3 unmet precondition (disconnected, non-regular, ...),
10 not a Schreier graph (labeled double cover emitted), 11 half-edge input
(labeled double cover emitted, no direct verdict).
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .cover import canonical_double_cover, is_double_cover, verify_covering
from .factorization import two_factorization
from .formats import (
    FormatError,
    cert_covering,
    certificate_to_result,
    classification_document,
    covering_document,
    export_dot,
    labeling_document,
    parse_action,
    parse_certificate,
    parse_graph,
    serialize_graph,
)
from .graph_core import bipartition, is_connected, validate
from .matching import is_matchable
from .schreier import (
    CoverOnly,
    DirectSchreier,
    PreconditionError,
    classify,
    label_bipartite_involutions,
    label_from_factorization,
    orbital_graph,
    verify_classification,
    verify_labeling,
)

EXIT_OK = 0
EXIT_VIOLATIONS = 1
EXIT_INPUT = 2
EXIT_PRECONDITION = 3
EXIT_NOT_SCHREIER = 10
EXIT_COVER_ONLY = 11


class CertificateDefect(RuntimeError):
    pass


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text()


def _write(text: str, out: str | None) -> None:
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        Path(out).write_text(text)


def _load_graph(path: str):
    g = parse_graph(_read(path))
    problems = validate(g)
    if problems:
        raise FormatError("; ".join(problems))
    return g


def _violations_for(g, doc: str) -> list[str]:
    cert = parse_certificate(doc)
    if cert.kind == "labeling":
        out = verify_labeling(g, cert.labeling)
        if g.vertex_count and not is_connected(g):
            out.append("graph is not connected")
        return out
    if cert.kind == "covering":
        try:
            return verify_covering(cert_covering(cert, g))
        except ValueError as exc:
            return [str(exc)]
    try:
        return verify_classification(g, certificate_to_result(cert, g))
    except ValueError as exc:
        return [str(exc)]


def _checked(g, doc: str) -> str:
    # every certificate is re-parsed and re-verified before it leaves the process
    problems = _violations_for(g, doc)
    if problems:
        raise CertificateDefect("emitted certificate does not verify: " + problems[0])
    return doc


def cmd_classify(args) -> int:
    g = _load_graph(args.graph)
    res = classify(g)
    _write(_checked(g, classification_document(res)), args.out)
    print(_summary(res), file=sys.stderr)
    if isinstance(res, DirectSchreier):
        return EXIT_OK
    return EXIT_COVER_ONLY if isinstance(res, CoverOnly) else EXIT_NOT_SCHREIER


def _summary(res) -> str:
    if isinstance(res, DirectSchreier):
        return f"verdict: direct, signature {res.signature}"
    extra = ""
    if not isinstance(res, CoverOnly):
        extra = f", deficiency {res.certificate.deficiency}"
    return (
        f"verdict: {res.verdict}{extra}, cover vertices {res.cover.source.vertex_count},"
        f" signature {res.cover_labeling.signature}"
    )


def cmd_verify(args) -> int:
    g = _load_graph(args.graph)
    problems = _violations_for(g, _read(args.certificate))
    for p in problems:
        print(p)
    return EXIT_VIOLATIONS if problems else EXIT_OK


def cmd_cover(args) -> int:
    g = _load_graph(args.graph)
    cover, cmap = canonical_double_cover(g)
    doc = _checked(g, covering_document(cmap))
    # the covering document embeds the normalized cover, which is what we print
    _write(serialize_graph(parse_certificate(doc).source), args.out)
    if args.cert:
        Path(args.cert).write_text(doc)
    assert is_double_cover(cmap)
    return EXIT_OK


def cmd_match(args) -> int:
    g = _load_graph(args.graph)
    cert = is_matchable(g)
    text = (
        f"matchable: {str(cert.matchable).lower()}, max: {len(cert.matching)},"
        f" deficiency: {cert.deficiency}\n"
        "edges: " + " ".join(map(str, cert.matching.edges)) + "\n"
    )
    _write(text, args.out)
    return EXIT_OK


def cmd_factor(args) -> int:
    g = _load_graph(args.graph)
    if g.has_half_edges():
        raise PreconditionError("graph has half-edges")
    factors = two_factorization(g)
    lines = [f"factor {i}: " + " ".join(map(str, f.successor)) for i, f in enumerate(factors)]
    _write("\n".join(lines) + ("\n" if lines else ""), args.out)
    if args.cert:
        Path(args.cert).write_text(_checked(g, labeling_document(label_from_factorization(g, factors, []))))
    return EXIT_OK


def cmd_label(args) -> int:
    g = _load_graph(args.graph)
    if args.involutions:
        b = bipartition(g)
        if b is None:
            raise PreconditionError("graph is not bipartite")
        lab = label_bipartite_involutions(g, b)
    else:
        res = classify(g)
        if not isinstance(res, DirectSchreier):
            raise PreconditionError(f"no direct labeling (verdict {res.verdict}); use 'classify'")
        lab = res.labeling
    _write(_checked(g, labeling_document(lab)), args.out)
    return EXIT_OK


def cmd_orbital(args) -> int:
    act = parse_action(_read(args.action))
    problems = act.violations()
    if problems:
        raise FormatError("; ".join(problems))
    g, lab = orbital_graph(act)
    if g.vertex_count and not is_connected(g):
        print("warning: action is not transitive; graph is disconnected", file=sys.stderr)
    _write(serialize_graph(g), args.out)
    if verify_labeling(g, lab):
        raise CertificateDefect("orbital labeling does not verify")
    if args.cert:
        Path(args.cert).write_text(labeling_document(lab))
    return EXIT_OK


def cmd_dot(args) -> int:
    g = _load_graph(args.graph)
    lab = None
    if args.labeling:
        cert = parse_certificate(_read(args.labeling))
        if cert.kind != "labeling":
            raise FormatError("dot expects a labeling certificate")
        lab = cert.labeling
        if len(lab.labels) != g.arc_count:
            raise FormatError("labeling does not match the graph")
    _write(export_dot(g, lab), args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="regschreier", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, func, help, graph=True, out=True):
        sp = sub.add_parser(name, help=help)
        if graph:
            sp.add_argument("graph", help="heg graph file ('-' for stdin)")
        if out:
            sp.add_argument("--out", help="output path (default stdout)")
        sp.set_defaults(func=func)
        return sp

    add("classify", cmd_classify, "Schreier labeling or labeled double cover")
    sp = add("verify", cmd_verify, "check a certificate against a graph", out=False)
    sp.add_argument("certificate")
    sp = add("cover", cmd_cover, "canonical double cover")
    sp.add_argument("--cert", help="also write the covering certificate here")
    add("match", cmd_match, "maximum matching and deficiency")
    sp = add("factor", cmd_factor, "2-factorization of an even-regular graph")
    sp.add_argument("--cert", help="also write the free-group labeling here")
    sp = add("label", cmd_label, "labeling certificate for a Schreier graph")
    sp.add_argument("--involutions", action="store_true", help="bipartite all-involution labeling")
    sp = add("orbital", cmd_orbital, "orbital graph of a permutation action", graph=False)
    sp.add_argument("action", help="one generator per line: 'name: images [inv]'")
    sp.add_argument("--cert", help="also write the labeling here")
    sp = add("dot", cmd_dot, "DOT rendering")
    sp.add_argument("--labeling", help="labeling certificate to render as edge labels")
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (FormatError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ValueError as exc:
        # PreconditionError and the wrapped operations' own precondition errors
        print(f"precondition: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION


if __name__ == "__main__":
    sys.exit(main())
