"""Command line: ``lanternkit {generate,verify,cf,blowdown-report,rho}``.

JSON goes to stdout and a one-line summary to stderr.  Exit codes: 0 on
success, 1 when a relation is refuted or a check fails, 2 on bad input.
"""

import argparse
import json
import logging
import sys
from dataclasses import replace
from concurrent.futures import ProcessPoolExecutor

from . import families, section4, topology
from .contfrac import cf_expand
from .conventions import LEDGER, PINNED
from .planar import verify_relation
from .serialize import SchemaError, dumps, loads, relation_to_dict

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

FAMILY_ARITY = {"lantern": 0, "daisy": 1, "wfam": 3, "nfam": 3, "linear": 2}


class UsageError(Exception):
    pass


def _emit(payload, summary: str):
    sys.stdout.write(json.dumps(payload, sort_keys=True, indent=2) + "\n")
    sys.stderr.write(summary + "\n")


def build_family(family: str, params):
    if family not in FAMILY_ARITY:
        raise UsageError(f"unknown family {family!r}")
    if len(params) != FAMILY_ARITY[family]:
        raise UsageError(f"{family} takes {FAMILY_ARITY[family]} parameter(s), got {len(params)}")
    ctor = {"lantern": families.lantern, "daisy": families.daisy, "wfam": families.w_family,
            "nfam": families.n_family, "linear": families.linear_family}[family]
    try:
        return ctor(*params)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def family_graph(family: str, params):
    if family == "lantern":
        return topology.linear_chain(2, 1)
    if family == "daisy":
        return topology.linear_chain(params[0], 1)
    if family == "wfam":
        return topology.gamma_w(*params)
    if family == "nfam":
        return topology.delta_n(*params)
    return topology.linear_chain(*params)


def cmd_generate(args):
    rel = build_family(args.family, args.params)
    props = families.properties_check(rel)
    rel = replace(rel, metadata=dict(rel.metadata, properties=props))
    sys.stdout.write(dumps(rel) + "\n")
    sys.stderr.write(f"{args.family} {' '.join(map(str, args.params))}: "
                     f"{rel.certificate.status}, n={rel.surface.n}, "
                     f"|lhs|={len(rel.lhs)}, |rhs|={len(rel.rhs)}\n")
    return EXIT_OK if rel.verified else EXIT_FAIL


def _verify_file(path):
    try:
        with open(path) as fh:
            rel = loads(fh.read())
    except (OSError, SchemaError) as exc:
        return path, None, str(exc)
    return path, verify_relation(rel), None


def cmd_verify(args):
    if args.jobs > 1 and len(args.files) > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            results = list(pool.map(_verify_file, args.files))
    else:
        results = [_verify_file(f) for f in args.files]
    out, code = [], EXIT_OK
    for path, rel, err in results:
        if err is not None:
            out.append({"file": path, "error": err})
            code = EXIT_USAGE
            continue
        cert = relation_to_dict(rel)["certificate"]
        out.append({"file": path, "certificate": cert})
        if not rel.verified and code == EXIT_OK:
            code = EXIT_FAIL
    payload = out[0] if len(out) == 1 else out
    statuses = ", ".join(r.get("certificate", {}).get("status", "error") for r in out)
    _emit(payload, f"verify: {statuses}")
    return code


def cmd_cf(args):
    try:
        e = cf_expand(args.p, args.q)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    payload = e.to_dict()
    payload["theta_chain"] = topology.theta_chain(args.p, args.q).to_dict()
    moves = " ".join(f"{m}{c}" for m, c in e.moves) or "(none)"
    _emit(payload, f"cf {args.p} {args.q}: {list(e.coefficients)} moves {moves}")
    return EXIT_OK


def cmd_blowdown_report(args):
    rel = build_family(args.family, args.params)
    graph = family_graph(args.family, args.params)
    match = topology.matches_plumbing(rel.lhs, graph)
    hom = topology.fibration_homology(rel.rhs)
    payload = {
        "family": args.family, "params": list(args.params),
        "certificate": rel.certificate.status,
        "graph": graph.to_dict(),
        "dot": graph.to_dot(),
        "intersection_matrix": topology.intersection_matrix(graph).tolist(),
        "graph_det": topology.graph_det(graph),
        "negative_definite": topology.is_negative_definite(graph),
        "vertex_count": len(graph),
        "lhs_length": len(rel.lhs), "rhs_length": len(rel.rhs),
        "length_difference": len(rel.lhs) - len(rel.rhs),
        "plumbing_match": match,
        "rhs_homology": {"b1": hom.b1, "b2": hom.b2, "torsion_order": hom.torsion_order,
                         "rational_ball": hom.rational_ball},
    }
    if (args.chi is None) != (args.sigma is None):
        raise UsageError("--chi and --sigma go together")
    if args.chi is not None:
        try:
            chi2, sig2 = topology.blowdown_invariants(args.chi, args.sigma, graph)
            payload["blowdown"] = {"chi": chi2, "sigma": sig2,
                                   "type": topology.homeo_type(chi2, sig2)}
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    ok = rel.verified and match["verdict"] != topology.MISMATCH and hom.rational_ball
    _emit(payload, f"blowdown-report {args.family}: {match['verdict']}, "
                   f"|V|={len(graph)}, det={payload['graph_det']}")
    return EXIT_OK if ok else EXIT_FAIL


def cmd_rho(args):
    if not 2 <= args.g <= args.max_genus:
        raise UsageError(f"genus must be in [2, {args.max_genus}]")
    checks = section4.verify_rho(args.g)
    report = section4.section4_report(args.g)
    report["verify"] = checks
    report["embedding"] = section4.embed_daisy(args.g)
    ok = checks["all_passed"] and report["all_passed"]
    _emit(report, f"rho {args.g}: {'pass' if ok else 'FAIL'}, "
                  f"type ({report['b2plus']}, {report['b2minus']})")
    return EXIT_OK if ok else EXIT_FAIL


def _int_arg(text):
    try:
        return int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None


def make_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="lanternkit", description=__doc__.splitlines()[0])
    ap.add_argument("--convention-ledger", action="store_true",
                    help="print the pinned curve and composition conventions and exit")
    ap.add_argument("-v", "--verbose", action="store_true")
    sub = ap.add_subparsers(dest="command")

    g = sub.add_parser("generate", help="build and verify a family relation")
    g.add_argument("family", choices=sorted(FAMILY_ARITY))
    g.add_argument("params", nargs="*", type=_int_arg)
    g.set_defaults(func=cmd_generate)

    v = sub.add_parser("verify", help="re-run the oracle on relation JSON files")
    v.add_argument("files", nargs="+")
    v.add_argument("--jobs", type=int, default=1)
    v.set_defaults(func=cmd_verify)

    c = sub.add_parser("cf", help="continued fraction data for p^2/(pq-1)")
    c.add_argument("p", type=_int_arg)
    c.add_argument("q", type=_int_arg)
    c.set_defaults(func=cmd_cf)

    b = sub.add_parser("blowdown-report", help="plumbing, lattice and blowdown arithmetic")
    b.add_argument("family", choices=sorted(FAMILY_ARITY))
    b.add_argument("params", nargs="*", type=_int_arg)
    b.add_argument("--chi", type=int)
    b.add_argument("--sigma", type=int)
    b.set_defaults(func=cmd_blowdown_report)

    r = sub.add_parser("rho", help="closed genus-g construction and substitution arithmetic")
    r.add_argument("g", type=_int_arg)
    r.add_argument("--max-genus", type=int, default=section4.MAX_GENUS)
    r.set_defaults(func=cmd_rho)
    return ap


def main(argv=None) -> int:
    ap = make_parser()
    args = ap.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    if args.convention_ledger:
        ledger = dict(LEDGER, pinned={k: v._asdict() for k, v in PINNED.items()})
        _emit(ledger, "conventions printed")
        return EXIT_OK
    if not args.command:
        ap.print_usage(sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except UsageError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
