"""Command-line front end: ``dicolor {gen,bounds,alpha,chi,color,poly,verify}``.

Reports are JSON by default and carry the seed, limits and package version.
Exit status: 0 on success, 1 when a verification suite finds violations,
2 on usage, parse or capacity errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .coloring import (
    dfs_mod_k_coloring, exact_coloring, greedy_girth_coloring, is_proper_coloring,
    partition_coloring, exact_chromatic_number,
)
from .digraph import TABLE_LIMIT, parse_edge_list, to_dot, to_edge_list, vertices
from .errors import DigraphError, PartColoringError
from .families import (
    d_tournament, directed_cycle, random_digraph, random_tournament, s_tournament,
    search_knn_orientation, transitive_tournament,
)
from .independence import all_bounds, exact_max_acyclic_set
from .polynomial import POLY_LIMIT, dichromatic_polynomial
from .suites import SUITES

FAMILIES = ["transitive", "sn", "dn", "cycle", "random-tournament",
            "random-digraph", "knn"]
METHODS = ["exact", "dfs-mod-k", "greedy-girth", "partition"]


class UsageError(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--dp-limit", type=int, default=POLY_LIMIT,
                        help="vertex limit for the 3^n partition DP")

    p = argparse.ArgumentParser(prog="dicolor", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", parents=[common], help="emit a digraph family")
    g.add_argument("--family", choices=FAMILIES, required=True)
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--t", type=int, default=2)
    g.add_argument("--p", type=float, default=0.5)
    g.add_argument("--attempts", type=int, default=10000)
    g.add_argument("--format", choices=["edges", "json", "dot"], default="edges")

    for name, help_ in [("bounds", "lower bounds on alpha"), ("alpha", "exact alpha"),
                        ("chi", "exact chromatic number"), ("poly", "dichromatic polynomial")]:
        s = sub.add_parser(name, parents=[common], help=help_)
        s.add_argument("input", nargs="?", default="-")
        s.add_argument("--format", choices=["json", "text"], default="json")

    c = sub.add_parser("color", parents=[common], help="colour a digraph")
    c.add_argument("input", nargs="?", default="-")
    c.add_argument("--method", choices=METHODS, default="exact")
    c.add_argument("--k", type=int, default=2, help="modulus for dfs-mod-k")
    c.add_argument("--format", choices=["json", "text", "dot"], default="json")

    v = sub.add_parser("verify", parents=[common], help="run verification suites")
    grp = v.add_mutually_exclusive_group(required=True)
    grp.add_argument("--suite", choices=sorted(SUITES))
    grp.add_argument("--all", action="store_true")
    v.add_argument("--max-n", type=int, default=None)
    v.add_argument("--format", choices=["json", "text"], default="json")
    return p


def _read_digraph(path):
    text = sys.stdin.read() if path == "-" else open(path, encoding="utf-8").read()
    return parse_edge_list(text)


def _gen(args):
    n, rng = args.n, args.seed
    if args.family == "transitive":
        return transitive_tournament(n)
    if args.family == "sn":
        return s_tournament(n)
    if args.family == "dn":
        return d_tournament(n)
    if args.family == "cycle":
        return directed_cycle(n)
    if args.family == "random-tournament":
        return random_tournament(n, rng)
    if args.family == "random-digraph":
        return random_digraph(n, args.p, rng)
    d = search_knn_orientation(n, args.t, args.attempts, rng)
    if d is None:
        raise LookupError(f"no K_{{{n},{n}}} orientation found in {args.attempts} attempts")
    return d


def run(argv=None, stdout=None) -> int:
    stdout = stdout or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    base = {"command": args.command, "seed": args.seed, "version": __version__,
            "limits": {"dp_limit": args.dp_limit, "table_limit": TABLE_LIMIT}}
    try:
        status, payload, text = _dispatch(args)
    except LookupError as e:
        print(f"dicolor: {e}", file=sys.stderr)
        return 1
    except (DigraphError, OSError, UsageError) as e:
        print(f"dicolor: {e}", file=sys.stderr)
        return 2
    if text is not None:
        stdout.write(text)
    elif args.format == "text":
        stdout.write(_as_text({**base, **payload}))
    else:
        stdout.write(json.dumps({**base, **payload}, sort_keys=True, indent=2) + "\n")
    return status


def _as_text(obj, indent=0):
    lines = []
    for key, val in obj.items():
        if isinstance(val, dict):
            lines.append(" " * indent + f"{key}:")
            lines.append(_as_text(val, indent + 2).rstrip("\n"))
        else:
            lines.append(" " * indent + f"{key}: {val}")
    return "\n".join(lines) + "\n"


def _dispatch(args):
    """Return ``(exit status, JSON payload, raw text or None)``."""
    if args.command == "gen":
        d = _gen(args)
        if args.format == "json":
            return 0, {"n": d.n, "arcs": d.arcs()}, None
        return 0, {}, to_dot(d) if args.format == "dot" else to_edge_list(d)

    if args.command == "verify":
        names = sorted(SUITES) if args.all else [args.suite]
        reports = []
        for name in names:
            kwargs = {"seed": args.seed}
            if args.max_n is not None:
                kwargs["max_n"] = args.max_n
            reports.append(SUITES[name](**kwargs).to_dict())
        ok = all(r["ok"] for r in reports)
        return (0 if ok else 1), {"ok": ok, "suites": reports}, None

    d = _read_digraph(args.input)
    if args.command == "bounds":
        payload = {"n": d.n, "m": d.num_arcs,
                   "bounds": {b.formula_id: b.to_dict() for b in all_bounds(d)}}
        payload["alpha"] = (exact_max_acyclic_set(d).bit_count()
                            if d.n <= TABLE_LIMIT else None)
        return 0, payload, None
    if args.command == "alpha":
        s = exact_max_acyclic_set(d)
        return 0, {"n": d.n, "alpha": s.bit_count(), "set": vertices(s)}, None
    if args.command == "chi":
        return 0, {"n": d.n, "chi": exact_chromatic_number(d)}, None
    if args.command == "poly":
        p = dichromatic_polynomial(d, args.dp_limit)
        return 0, {"n": d.n, "coeffs": [str(c) for c in p.coeffs],
                   "polynomial": str(p)}, None
    if args.command == "color":
        try:
            c = _color(d, args)
        except PartColoringError as e:
            raise UsageError(str(e)) from e
        if args.format == "dot":
            return 0, {}, to_dot(d, c.colors)
        return 0, {"n": d.n, "method": args.method, "colors": list(c.colors),
                   "k": c.k, "proper": is_proper_coloring(d, c)}, None
    raise UsageError(f"unknown command {args.command}")


def _color(d, args):
    if args.method == "exact":
        return exact_coloring(d, args.dp_limit)
    if args.method == "dfs-mod-k":
        return dfs_mod_k_coloring(d, args.k)
    if args.method == "greedy-girth":
        return greedy_girth_coloring(d)
    return partition_coloring(d)


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
