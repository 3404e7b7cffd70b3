"""Command-line front end.

One JSON problem document in, exact JSON (or DOT/SVG) out.  Exit codes:
0 success, 1 invalid cluster under `validate`, 2 schema/cluster errors,
3 violated mathematical preconditions.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import cluster as cl
from . import okbody, zariski
from .document import (
    ProblemDocument,
    SchemaError,
    body_to_json,
    fraction_to_json,
    parse_document,
    scalar_to_json,
)
from .errors import BranchSlopeUnrecognized, ClusterError, MathError, OkbodiesError
from .flagval import build_flag, extend_cluster
from .invariants import maximal_contact_values, puiseux_exponents
from .render import body_to_svg, graph_to_dot

EXIT_INVALID = 1
EXIT_SCHEMA = 2
EXIT_MATH = 3


def _fail(code: int, error: str, message: str) -> int:
    json.dump({"error": error, "message": message}, sys.stderr)
    sys.stderr.write("\n")
    return code


def _emit(text: str, out_path: str | None) -> None:
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _load_document(path: str) -> ProblemDocument:
    try:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise SchemaError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise SchemaError(f"not valid JSON: {exc}") from exc
    return parse_document(data)


def _require_flag(doc: ProblemDocument):
    if doc.flag is None:
        raise SchemaError("this command needs a 'flag' entry")
    return build_flag(doc.cluster, doc.flag)


def cmd_validate(doc: ProblemDocument, args) -> int:
    rows = []
    for rec in doc.cluster.points:
        rows.append(
            {
                "id": rec.id,
                "kind": "satellite" if rec.satellite_of is not None else "free",
                "proximate_to": list(doc.cluster.proximities(rec.id)),
            }
        )
    _emit(json.dumps({"valid": True, "points": rows}, indent=2) + "\n", args.out)
    return 0


def cmd_invariants(doc: ProblemDocument, args) -> int:
    n = doc.cluster.size
    mc = maximal_contact_values(doc.cluster, n)
    pe = puiseux_exponents(mc)
    payload = {
        "multiplicities": list(cl.multiplicity_sequence(doc.cluster, n)),
        "betabar": list(mc.betabar),
        "e": list(mc.e),
        "n_factors": list(mc.n_factors),
        "g": mc.g,
        "volume": fraction_to_json(mc.volume),
        "beta_prime": [fraction_to_json(b) for b in pe.beta_prime],
        "continued_fractions": [list(cf) for cf in pe.cf],
    }
    _emit(json.dumps(payload, indent=2) + "\n", args.out)
    return 0


def cmd_dualgraph(doc: ProblemDocument, args) -> int:
    n = doc.cluster.size
    curve_attach: tuple[int, ...] = ()
    graph = cl.dual_graph(doc.cluster, n)
    if doc.mu_kind == "curve":
        curve_attach = tuple(sorted({b.top_index() for b in doc.curve.branches}))
        top = max(curve_attach + (n,))
        if top > n:
            if doc.flag is None:
                raise SchemaError("branches beyond the cluster need a 'flag' entry")
            build_flag(doc.cluster, doc.flag)  # validates eta adjacency
            ext = extend_cluster(doc.cluster, doc.flag, top)
            graph = cl.dual_graph(ext, top)
    if args.dot:
        _emit(graph_to_dot(graph, curve_attach), args.out)
    else:
        payload = {
            "vertices": list(range(1, graph.n + 1)),
            "edges": [list(e) for e in sorted(graph.edges)],
        }
        if curve_attach:
            payload["curve_vertex"] = "C"
            payload["curve_edges"] = [["C", v] for v in curve_attach]
        _emit(json.dumps(payload, indent=2) + "\n", args.out)
    return 0


def _compute_body(doc: ProblemDocument):
    val = _require_flag(doc)
    if doc.mu_kind == "minimal":
        return val, okbody.body_minimal(val)
    if doc.mu_kind == "npi":
        return val, okbody.body_npi(val, doc.line_support)
    if doc.mu_kind == "curve":
        cert = okbody.certificate_from_curve(val, doc.curve)
        return val, okbody.body_nonminimal(val, cert)
    raise SchemaError("this command needs a 'mu_source' entry")


def cmd_body(doc: ProblemDocument, args) -> int:
    val, body = _compute_body(doc)
    if doc.mu_kind == "curve":
        report = okbody.classify_shape(val, doc.curve)
        if report.shape != body.shape:
            raise BranchSlopeUnrecognized("hull shape disagrees with branch classification")
    if args.svg:
        with open(args.svg, "w", encoding="utf-8") as fh:
            fh.write(body_to_svg(body))
    _emit(json.dumps(body_to_json(body), indent=2) + "\n", args.out)
    return 0


def cmd_zariski(doc: ProblemDocument, args) -> int:
    if doc.mu_kind != "npi":
        raise SchemaError("'zariski' works on npi documents only")
    if args.t is None:
        raise SchemaError("'zariski' needs --t P/Q")
    try:
        t = Fraction(args.t)
    except (ValueError, ZeroDivisionError) as exc:
        raise SchemaError(f"bad --t value {args.t!r}") from exc
    val = _require_flag(doc)
    pair = zariski.decompose_npi(val, doc.line_support, t)

    def dc(d: zariski.DivisorClass) -> dict:
        return {
            "h": fraction_to_json(d.h),
            "e_star": [fraction_to_json(c) for c in d.e_star],
        }

    payload = {
        "t": fraction_to_json(pair.t),
        "regime": pair.regime.value,
        "positive": dc(pair.positive),
        "negative": dc(pair.negative),
        "negative_components": [
            {"label": lbl, "coefficient": fraction_to_json(c), "class": dc(comp)}
            for lbl, c, comp in pair.components
        ],
    }
    _emit(json.dumps(payload, indent=2) + "\n", args.out)
    return 0


COMMANDS = {
    "validate": cmd_validate,
    "invariants": cmd_invariants,
    "dualgraph": cmd_dualgraph,
    "body": cmd_body,
    "zariski": cmd_zariski,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="okbodies",
        description="Exact invariants and Newton-Okounkov bodies of plane valuation flags.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name, help_text in [
        ("validate", "check a proximity cluster and print its report"),
        ("invariants", "multiplicities, maximal contact values, Puiseux exponents"),
        ("dualgraph", "dual graph as JSON or DOT"),
        ("body", "the Newton-Okounkov body of the flag"),
        ("zariski", "Zariski decomposition of H - t*E_r (npi documents)"),
    ]:
        p = sub.add_parser(name, help=help_text)
        p.add_argument("document", help="path to the JSON problem document")
        p.add_argument("--out", help="write the output to a file instead of stdout")
        if name == "dualgraph":
            p.add_argument("--dot", action="store_true", help="emit DOT instead of JSON")
        if name == "body":
            p.add_argument("--svg", help="also write an SVG rendering to this path")
        if name == "zariski":
            p.add_argument("--t", help="parameter t as P/Q")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        doc = _load_document(args.document)
    except SchemaError as exc:
        return _fail(EXIT_SCHEMA, exc.code, str(exc))
    except ClusterError as exc:
        code = EXIT_INVALID if args.command == "validate" else EXIT_SCHEMA
        return _fail(code, exc.code, str(exc))
    try:
        return COMMANDS[args.command](doc, args)
    except MathError as exc:
        return _fail(EXIT_MATH, exc.code, str(exc))
    except OkbodiesError as exc:
        return _fail(EXIT_SCHEMA, exc.code, str(exc))


if __name__ == "__main__":
    sys.exit(main())
