"""Command line interface.

    nkdl profile FILE [--k K]
    nkdl compare A B --metric {ds,ndl,n2dl,nkdl:K}
    nkdl transform A B [--metric {ndl,n2dl}] [--fallback-bound B]
    nkdl verify --n N [--max-n M] [--jobs J] [--no-transform]
    nkdl enumerate --n N [--diameter D]
    nkdl anomaly FILE --k K

Files ending in ``.g6``/``.graph6`` are read as graph6 (first record),
anything else as an edge list.  JSON goes to stdout, diagnostics to stderr.
"""
from __future__ import annotations

import argparse
import json
import math
import sys

from . import anomaly, oracle, transform
from .errors import (
    DiameterViolationError,
    FallbackExhaustedError,
    GraphError,
    NotEquivalentError,
    ParseError,
    SizeLimitError,
)
from .formats import read_graph_file, write_graph6
from .graph_core import bfs_distances, diameter, eccentricity_and_diameter
from .profiles import degree_sequence, labeled_profile, nkdl_graph

EX_OK = 0
EX_UNEQUAL = 1
EX_DOMAIN = 2
EX_USAGE = 64
EX_DATAERR = 65
EX_IOERR = 74


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EX_USAGE, f"{self.prog}: error: {message}\n")


def _dump(obj) -> None:
    sys.stdout.write(json.dumps(obj) + "\n")


def _finite(x):
    return None if x == math.inf else x


def cmd_profile(args) -> int:
    g = read_graph_file(args.file)
    ecc, diam = eccentricity_and_diameter(g)
    if args.k is not None:
        ks = [args.k]
    else:
        # largest finite distance, so disconnected inputs still get every nonempty shell
        reach = max((d for v in range(g.n) for d in bfs_distances(g, v) if d is not None), default=0)
        ks = list(range(1, max(reach, 1) + 1))
    profiles = []
    for k in ks:
        per_vertex = labeled_profile(g, k)
        profiles.append({
            "k": k,
            "vertices": [list(x) for x in per_vertex],
            "graph": [list(x) for x in nkdl_graph(g, k)],
        })
    _dump({
        "n": g.n,
        "m": g.m,
        "degree_sequence": list(degree_sequence(g)),
        "diameter": _finite(diam),
        "eccentricities": [_finite(e) for e in ecc],
        "profiles": profiles,
    })
    return EX_OK


def _metric_value(g, metric: str):
    if metric == "ds":
        return degree_sequence(g)
    if metric == "ndl":
        return nkdl_graph(g, 1)
    if metric == "n2dl":
        return nkdl_graph(g, 2)
    return nkdl_graph(g, int(metric.split(":", 1)[1]))


def _metric(text: str) -> str:
    if text in ("ds", "ndl", "n2dl"):
        return text
    if text.startswith("nkdl:"):
        try:
            if int(text[5:]) >= 1:
                return text
        except ValueError:
            pass
    raise argparse.ArgumentTypeError(f"unknown metric {text!r} (ds, ndl, n2dl, nkdl:K)")


def cmd_compare(args) -> int:
    a = read_graph_file(args.a)
    b = read_graph_file(args.b)
    equal = a.n == b.n and _metric_value(a, args.metric) == _metric_value(b, args.metric)
    print("EQUAL" if equal else "UNEQUAL")
    return EX_OK if equal else EX_UNEQUAL


def cmd_transform(args) -> int:
    g = read_graph_file(args.a)
    h = read_graph_file(args.b)
    fn = transform.transform_by_n2dl if args.metric == "n2dl" else transform.transform_by_ndl
    try:
        result = fn(g, h, fallback_bound=args.fallback_bound)
    except NotEquivalentError as exc:
        _dump({"status": "NOT_EQUIVALENT", "detail": str(exc)})
        return EX_UNEQUAL
    except DiameterViolationError as exc:
        _dump({"status": "DIAMETER_VIOLATION", "detail": str(exc)})
        return EX_DOMAIN
    except FallbackExhaustedError as exc:
        _dump({"status": "FALLBACK_EXHAUSTED", "detail": str(exc)})
        return EX_DOMAIN
    out = {"status": "EQUIVALENT", "metric": args.metric}
    out.update(result.to_json())
    out["single_path"] = [list(s) for s in transform.single_path(result)]
    _dump(out)
    return EX_OK


def cmd_verify(args) -> int:
    top = args.max_n if args.max_n is not None else args.n
    ok = True
    for n in range(args.n, top + 1):
        rep = oracle.verify_all(n, check_transform=not args.no_transform, jobs=args.jobs)
        ok &= rep.ok
        sys.stdout.write(json.dumps(rep.to_json()) + "\n")
        sys.stdout.flush()
    return EX_OK if ok else EX_UNEQUAL


def cmd_enumerate(args) -> int:
    for g in oracle.enumerate_graphs(args.n):
        if args.diameter is None or diameter(g) == args.diameter:
            sys.stdout.write(write_graph6(g) + "\n")
    return EX_OK


def cmd_anomaly(args) -> int:
    g = read_graph_file(args.file)
    scores = anomaly.anomaly_scores(g, args.k)
    _dump([s.to_json() for s in scores])
    return EX_OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="nkdl", description="k-neighborhood degree lists and degree-restricted 2-switches")
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("profile", help="per-vertex and graph-level N_kDL")
    sp.add_argument("file")
    sp.add_argument("--k", type=int, help="single k (default: 1..diameter)")
    sp.set_defaults(func=cmd_profile)

    sp = sub.add_parser("compare", help="compare two graphs under an invariant")
    sp.add_argument("a")
    sp.add_argument("b")
    sp.add_argument("--metric", type=_metric, default="ndl")
    sp.set_defaults(func=cmd_compare)

    sp = sub.add_parser("transform", help="degree-restricted switch certificate")
    sp.add_argument("a")
    sp.add_argument("b")
    sp.add_argument("--metric", choices=["ndl", "n2dl"], default="ndl")
    sp.add_argument("--fallback-bound", type=int, default=transform.FALLBACK_BOUND)
    sp.set_defaults(func=cmd_transform)

    sp = sub.add_parser("verify", help="exhaustive verification on all graphs with n vertices")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--max-n", type=int)
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--no-transform", action="store_true", help="skip the constructive cross-check")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("enumerate", help="graph6 line per isomorphism class")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--diameter", type=int)
    sp.set_defaults(func=cmd_enumerate)

    sp = sub.add_parser("anomaly", help="same-degree N_kDL anomaly scores")
    sp.add_argument("file")
    sp.add_argument("--k", type=int, required=True)
    sp.set_defaults(func=cmd_anomaly)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    for name in ("k", "jobs"):
        if getattr(args, name, None) is not None and getattr(args, name) < 1:
            parser.error(f"--{name} must be positive")
    try:
        return args.func(args)
    except OSError as exc:
        print(f"nkdl: {exc}", file=sys.stderr)
        return EX_IOERR
    except SizeLimitError as exc:
        print(f"nkdl: {exc}", file=sys.stderr)
        return EX_USAGE
    except (ParseError, GraphError) as exc:
        print(f"nkdl: {exc}", file=sys.stderr)
        return EX_DATAERR


if __name__ == "__main__":
    sys.exit(main())
