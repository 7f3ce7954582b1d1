"""Command-line front end: build, verify, search, bounds, pad, export."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import algebra
from .algebra import Subgroup, group_from_string
from .bounds import format_table, table
from .constructions import (ConstructionError, build_construction1, build_construction2,
                            build_example31, pad_generators)
from .covering import check_cover, construction1_config, format_search_table, search_cover
from .diffsets import GdsDescriptor, GdsParams, check_type_equation, verify_gds
from .graph import (CertificateError, DisconnectedGraphError, certify, certify_spec,
                    export_certificate, export_edges, load_certificate, verify_certificate)


def _ints(text):
    return [int(x) for x in text.split(",") if x.strip()]


def _degree_range(text):
    if ":" in text:
        lo, hi = text.split(":")
        return list(range(int(lo), int(hi) + 1))
    return _ints(text)


def _write_outputs(cert, args):
    if args.out:
        export_certificate(cert, args.out)
    if getattr(args, "edges", None):
        n = export_edges(cert, args.edges, args.max_group_order)
        print(f"wrote {n} edges to {args.edges}")


def _summary(cert):
    prov = cert.provenance or {}
    print(f"construction: {prov.get('construction', '-')} {prov.get('params', {})}")
    print(f"order: {cert.order}  degree: {cert.degree}  diameter: {cert.diameter}"
          f"  claimed_degree: {cert.claimed_degree}")
    print(f"methods: {','.join(cert.methods)}")
    for note in prov.get("notes", []):
        print(f"note: {note}")


def cmd_build(args):
    try:
        if args.construction == "neofield":
            if args.use_literal_paper_config:
                ok, uncovered = check_cover(construction1_config(literal=True))
                print(f"literal covering config: covers={ok} uncovered={uncovered}")
            spec = build_construction1(args.q, literal=args.use_literal_paper_config)
        elif args.construction == "rds4":
            spec = build_construction2(args.m, pad=not args.no_pad)
        else:
            spec = build_example31(args.q)
    except ConstructionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    cert = certify_spec(spec)
    _summary(cert)
    _write_outputs(cert, args)
    return 0 if cert.diameter == 2 else 1


def cmd_verify(args):
    if args.cert:
        cert = load_certificate(args.cert)
        ok = verify_certificate(cert, args.max_group_order)
        print(f"certificate {args.cert}: {'ok' if ok else 'FAILED'}")
        return 0 if ok else 1
    if not (args.group and args.set is not None):
        print("error: need --cert or --group and --set", file=sys.stderr)
        return 2
    group = group_from_string(args.group, max_order=args.max_group_order)
    subgroups = [Subgroup(group, _ints(s)) for s in args.subgroup]
    claim = _ints(args.claim) if args.claim else None
    elements = _ints(args.set)
    if claim is None:
        claim = [group.order, len(elements), 0]
    lambdas = _ints(args.lambdas) if args.lambdas else [0] * len(subgroups)
    params = GdsParams(claim[0], claim[1], claim[2],
                       tuple((s.order, lam) for s, lam in zip(subgroups, lambdas)))
    desc = GdsDescriptor(group, elements, subgroups, params)
    report = check_type_equation(desc, args.type) if args.type else verify_gds(desc)
    if args.report:
        Path(args.report).write_text(report.to_text())
    print("ok" if report.ok else "FAILED")
    print(f"measured lambda: {report.measured_lambda}  lambda_i: {report.measured_lambdas}")
    for w in report.witnesses[:20]:
        print(f"witness: element {w[0]} occurs {w[1]} times, expected {w[2]}")
    for p in report.problems:
        print(f"problem: {p}")
    for label, size in report.deficiency_sizes().items():
        print(f"|{label}| = {size}")
    return 0 if report.ok else 1


def cmd_search(args):
    max_order = 50 if args.extended else args.max_order
    results = search_cover(max_order, args.k, args.psi, args.theta)
    text = format_search_table(results)
    if args.out:
        Path(args.out).write_text(text)
    sys.stdout.write(text)
    return 0


def cmd_bounds(args):
    certs = []
    if args.certs:
        for path in sorted(Path(args.certs).glob("*.json")):
            certs.append(load_certificate(path))
    text = format_table(table(_degree_range(args.d), certs))
    if args.out:
        Path(args.out).write_text(text)
    sys.stdout.write(text)
    return 0


def cmd_pad(args):
    cert = load_certificate(args.cert)
    group = cert.build_group(args.max_group_order)
    try:
        gens = pad_generators(group, cert.generators, args.d)
    except ConstructionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    prov = dict(cert.provenance or {})
    prov["notes"] = list(prov.get("notes", [])) + [f"padded from {cert.degree} to {args.d}"]
    new = certify(group, gens, provenance=prov, claimed_degree=cert.claimed_degree)
    _summary(new)
    _write_outputs(new, args)
    return 0 if new.diameter == 2 else 1


def cmd_export(args):
    cert = load_certificate(args.cert)
    if not verify_certificate(cert, args.max_group_order):
        print("error: certificate does not verify", file=sys.stderr)
        return 1
    n = export_edges(cert, args.edges, args.max_group_order)
    print(f"wrote {n} edges to {args.edges}")
    return 0


def make_parser():
    parser = argparse.ArgumentParser(prog="dscayley", description=__doc__)
    parser.add_argument("--max-group-order", type=int, default=None,
                        help=f"size guard (default {algebra.DEFAULT_MAX_ORDER})")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="build and certify a construction")
    p.add_argument("--construction", choices=["neofield", "rds4", "example31"], required=True)
    p.add_argument("--q", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--use-literal-paper-config", action="store_true",
                   help="use the printed d = a_1 = (1,0) covering values")
    p.add_argument("--no-pad", action="store_true", help="rds4: keep the 3q-1 identity-free set")
    p.add_argument("--out", help="certificate path")
    p.add_argument("--edges", help="edge list path")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("verify", help="verify a certificate or a difference set")
    p.add_argument("--cert")
    p.add_argument("--group", help="e.g. z7, z4xz4, add5xunits5, tw3")
    p.add_argument("--set", help="comma-separated element indices")
    p.add_argument("--claim", help="v,k,lambda")
    p.add_argument("--subgroup", action="append", default=[],
                   help="exceptional subgroup elements, repeatable")
    p.add_argument("--lambdas", help="lambda_i for the subgroups (default zeros)")
    p.add_argument("--type", choices=["I", "II", "III", "IV", "V"])
    p.add_argument("--report", help="write the structured report here")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("search", help="search covering configurations")
    p.add_argument("--max-order", type=int, default=25)
    p.add_argument("--k", type=int, default=3)
    p.add_argument("--psi", type=int, default=1)
    p.add_argument("--theta", type=int, default=2)
    p.add_argument("--extended", action="store_true", help="search up to |H| = 50")
    p.add_argument("--out")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("bounds", help="bound table against certificates")
    p.add_argument("--d", required=True, help="degree range lo:hi or list")
    p.add_argument("--certs", help="directory of certificate .json files")
    p.add_argument("--out")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("pad", help="pad a certificate to a larger degree")
    p.add_argument("--cert", required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--out")
    p.add_argument("--edges")
    p.set_defaults(func=cmd_pad)

    p = sub.add_parser("export", help="write the edge list of a certificate")
    p.add_argument("--cert", required=True)
    p.add_argument("--edges", required=True)
    p.set_defaults(func=cmd_export)
    return parser


def main(argv=None):
    args = make_parser().parse_args(argv)
    if args.max_group_order is not None:
        algebra.DEFAULT_MAX_ORDER = args.max_group_order
    if args.command == "build":
        need = "m" if args.construction == "rds4" else "q"
        if getattr(args, need) is None:
            print(f"error: --{need} is required for {args.construction}", file=sys.stderr)
            return 2
    try:
        return args.func(args)
    except (CertificateError, DisconnectedGraphError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
