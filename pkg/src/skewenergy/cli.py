"""Command-line entry point.

Exit codes: 0 all checks verified, 1 counterexample found, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional

from .enumeration import enumerate_B_nd, enumerate_bicyclic
from .families import FamilyError, build, parse_family_or_none
from .graph import GraphError, OrientedGraph, classify_bicyclic, diameter, in_class_B
from .io import from_arc_list, from_graph6, to_graph6
from .spectrum import ROUTES, QuadratureError, char_poly, skew_energy_integral, skew_energy_spectral
from .verify import COUNTEREXAMPLE, cmd_check_lemmas, cmd_minimality


class UsageError(Exception):
    pass


def load_input(text: str) -> OrientedGraph:
    """A family spec, a path to an arc-list or graph6 file, or a graph6 string."""
    try:
        spec = parse_family_or_none(text)
        if spec is not None:
            return build(spec)
        if os.path.exists(text):
            with open(text) as fh:
                content = fh.read()
            first = content.strip().splitlines()[0].split() if content.strip() else []
            if len(first) == 2 and all(tok.lstrip("-").isdigit() for tok in first):
                return from_arc_list(content)
            return OrientedGraph.low_to_high(from_graph6(content.strip().splitlines()[0]))
        return OrientedGraph.low_to_high(from_graph6(text))
    except (FamilyError, GraphError) as exc:
        raise UsageError(f"cannot parse input {text!r}: {exc}") from None


def _emit_reports(reports, json_path: Optional[str]) -> int:
    for r in reports:
        print(r.summary())
    if json_path:
        with open(json_path, "w") as fh:
            for r in reports:
                fh.write(r.to_json() + "\n")
    return 1 if any(r.status == COUNTEREXAMPLE for r in reports) else 0


def run_verify(args) -> int:
    if args.what == "minimality":
        if args.n is None or args.d is None:
            raise UsageError("verify minimality needs --n and --d")
        try:
            report = cmd_minimality(args.n, args.d)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        return _emit_reports([report], args.json)
    try:
        reports = cmd_check_lemmas(args.max_n)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    return _emit_reports(reports, args.json)


def run_poly(args) -> int:
    og = load_input(args.input)
    routes = list(ROUTES) if args.route == "all" else [args.route]
    results = {r: char_poly(og, r) for r in routes}
    for r, p in results.items():
        print(f"{r:<10} {[int(c) for c in p.coeffs]}  {p}")
    if len({p.coeffs for p in results.values()}) > 1:
        print("routes disagree", file=sys.stderr)
        return 1
    if args.json:
        print(json.dumps(next(iter(results.values())).to_json()))
    return 0


def run_energy(args) -> int:
    og = load_input(args.input)
    spectral = skew_energy_spectral(og)
    try:
        integral = skew_energy_integral(og, args.tol)
    except QuadratureError as exc:
        print(f"spectral   {spectral:.12f}")
        print(f"integral   failed: {exc}", file=sys.stderr)
        return 1
    print(f"spectral   {spectral:.12f}")
    print(f"integral   {integral:.12f}")
    print(f"difference {abs(spectral - integral):.3e}")
    return 0


def run_enumerate(args) -> int:
    try:
        if args.d is not None:
            graphs = enumerate_B_nd(args.n, args.d)
            if not args.class_b:
                graphs = [g for g in enumerate_bicyclic(args.n) if diameter(g) == args.d]
        else:
            graphs = enumerate_bicyclic(args.n)
            if args.class_b:
                graphs = [g for g in graphs if in_class_B(g)]
    except GraphError as exc:
        raise UsageError(str(exc)) from None
    lines = [to_graph6(g) for g in graphs]
    if args.out:
        with open(args.out, "w") as fh:
            fh.write("".join(line + "\n" for line in lines))
    else:
        for line in lines:
            print(line)
    if args.sidecar:
        meta = []
        for g, line in zip(graphs, lines):
            s = classify_bicyclic(g)
            meta.append(
                {"graph6": line, "diameter": diameter(g), "class_b": in_class_B(g),
                 "t": s.t, "a": s.a, "b": s.b, "c": s.c, "l": s.l}
            )
        with open(args.sidecar, "w") as fh:
            json.dump(meta, fh, indent=1, sort_keys=True)
    print(f"{len(graphs)} graphs", file=sys.stderr)
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="skewenergy", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="exhaustive verification reports")
    v.add_argument("what", choices=["minimality", "lemmas"])
    v.add_argument("--n", type=int)
    v.add_argument("--d", type=int)
    v.add_argument("--max-n", type=int, default=8)
    v.add_argument("--json", help="write JSON lines to this path")
    v.set_defaults(func=run_verify)

    q = sub.add_parser("poly", help="skew characteristic polynomial")
    q.add_argument("--input", required=True, help="family spec, graph6 string, or arc-list/graph6 file")
    q.add_argument("--route", default="expansion", choices=[*ROUTES, "all"])
    q.add_argument("--json", action="store_true", help="also print the JSON serialization")
    q.set_defaults(func=run_poly)

    e = sub.add_parser("energy", help="skew energy by eigenvalues and by quadrature")
    e.add_argument("--input", required=True)
    e.add_argument("--tol", type=float, default=1e-9)
    e.set_defaults(func=run_energy)

    c = sub.add_parser("enumerate", help="bicyclic graph census in graph6")
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--d", type=int)
    c.add_argument("--class-b", action="store_true")
    c.add_argument("--out")
    c.add_argument("--sidecar", help="JSON file with shape metadata")
    c.set_defaults(func=run_enumerate)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
