"""Command-line front end.

Subcommands: invariants, construct, enumerate, characterize,
check-theorem, verify-bound, audit.  Output is UTF-8 text or JSON
(--json); JSON is byte-deterministic for identical inputs.  Exit codes:
0 success, 1 discrepancy findings under --strict-paper, 2 usage errors
(bad input files, malformed graph6, guard violations).
"""

import argparse
import json
import sys

from .catalog import canonical_names, checked_catalog
from .connectivity import vertex_connectivity
from .domination import gamma_k
from .enumeration import connected_graphs
from .families import FamilyParseError, build_family
from .graphs import graph6_decode, graph6_encode, max_degree, min_degree, parse_edge_list
from .verifier import (
    DEFAULT_N_MAX,
    audit_small_theorems,
    characterize,
    check_theorem,
    verify_bound,
)

USAGE_ERROR = 2


def _emit(text):
    sys.stdout.write(text)


def _emit_json(obj):
    _emit(json.dumps(obj, indent=2, sort_keys=True) + "\n")


def _load_graphs(args):
    """Graphs named by --family / --graph6 / --file flags, in order."""
    out = []
    if args.family:
        out.append(build_family(args.family))
    if args.graph6:
        out.append(graph6_decode(args.graph6))
    if args.file:
        with open(args.file, encoding="utf-8") as handle:
            text = handle.read()
        if args.format == "edgelist":
            out.append(parse_edge_list(text))
        else:
            for line in text.splitlines():
                if line.strip():
                    out.append(graph6_decode(line))
    if not out:
        raise ValueError("no input graph; pass --family, --graph6 or --file")
    return out


def _domination_jsonable(res):
    if not res.feasible:
        return {"feasible": False}
    return {"number": res.number, "witness": list(res.witness)}


def _cmd_invariants(args):
    rows = []
    for g in _load_graphs(args):
        gamma = gamma_k(g, 1, "k-domination")
        g3 = gamma_k(g, 3, "k-domination")
        double = gamma_k(g, 2, "k-tuple")
        cut = vertex_connectivity(g)
        rows.append(
            {
                "graph6": graph6_encode(g),
                "n": g.n,
                "edges": g.edge_count(),
                "min_degree": min_degree(g) if g.n else 0,
                "max_degree": max_degree(g) if g.n else 0,
                "gamma": _domination_jsonable(gamma),
                "gamma3": _domination_jsonable(g3),
                "double_domination": _domination_jsonable(double),
                "kappa": {
                    "kappa": cut.kappa,
                    "cut": list(cut.cut),
                    "separated": list(cut.separated) if cut.separated else None,
                },
            }
        )
    if args.json:
        _emit_json(rows if len(rows) > 1 else rows[0])
        return 0
    for row in rows:
        _emit(f"graph6: {row['graph6']}\n")
        _emit(f"n: {row['n']}\nedges: {row['edges']}\n")
        _emit(f"min_degree: {row['min_degree']}\nmax_degree: {row['max_degree']}\n")
        for key in ("gamma", "gamma3", "double_domination"):
            val = row[key]
            if not val.get("feasible", True):
                _emit(f"{key}: infeasible\n")
            else:
                witness = ",".join(map(str, val["witness"]))
                _emit(f"{key}: {val['number']} witness: {{{witness}}}\n")
        cut = row["kappa"]
        _emit(f"kappa: {cut['kappa']} cut: {{{','.join(map(str, cut['cut']))}}}\n")
    return 0


def _cmd_construct(args):
    g = build_family(args.family)
    if args.json:
        _emit_json({"family": args.family, "graph6": graph6_encode(g), "n": g.n, "edges": g.edge_count()})
    else:
        _emit(graph6_encode(g) + "\n")
    return 0


def _cmd_enumerate(args):
    level = connected_graphs(args.n, allow_large=args.allow_large)
    strings = [graph6_encode(g) for g in level]
    if args.json:
        _emit_json({"n": args.n, "count": len(strings), "graphs": strings})
    else:
        _emit("".join(s + "\n" for s in strings))
    return 0


def _entry_names(g6, lookup):
    return ",".join(lookup.get(g6, [g6]))


def _cmd_characterize(args):
    per_level = characterize(args.offset, args.max_n)
    entries, _ = checked_catalog()
    lookup = canonical_names(entries)
    if args.json:
        _emit_json(
            {
                "target_offset": args.offset,
                "n_max": args.max_n,
                "levels": [
                    {"n": n, "extremal": [r.to_jsonable() for r in recs]}
                    for n, recs in sorted(per_level.items())
                ],
            }
        )
        return 0
    _emit(f"gamma3+kappa = 2n-{args.offset}, n = 3..{args.max_n}\n")
    for n in sorted(per_level):
        recs = per_level[n]
        if not recs:
            _emit(f"n={n}: (none)\n")
            continue
        line = " ".join(f"{r.g6}[{_entry_names(r.g6, lookup)}]" for r in recs)
        _emit(f"n={n}: {line}\n")
    return 0


def _cmd_check_theorem(args):
    rep = check_theorem(args.theorem, args.max_n)
    if args.json:
        _emit_json(rep.to_jsonable())
    else:
        _emit(f"theorem {rep.theorem} (gamma3+kappa = 2n-{rep.target_offset}), n <= {rep.n_max}\n")
        _emit(f"confirmed ({len(rep.confirmed)}): {', '.join(rep.confirmed) or '(none)'}\n")
        extra = ", ".join(f"{e.name} (computed sum {e.computed_sum})" for e in rep.extra)
        _emit(f"extra ({len(rep.extra)}): {extra or '(none)'}\n")
        _emit(f"missing ({len(rep.missing)}): {', '.join(rep.missing) or '(none)'}\n")
        for nt in rep.notes:
            _emit(f"note {nt.entry}: {nt.kind}: {nt.detail}\n")
        for caveat in rep.caveats:
            _emit(f"caveat: {caveat}\n")
    if args.strict_paper and (rep.extra or rep.missing):
        return 1
    return 0


def _cmd_verify_bound(args):
    rep = verify_bound(args.max_n)
    entries, _ = checked_catalog()
    lookup = canonical_names(entries)
    names = [_entry_names(g6, lookup) for g6 in rep.equality]
    if args.json:
        _emit_json(rep.to_jsonable())
    else:
        _emit(f"{len(rep.violations)} violations, equality: {', '.join(names) or '(none)'}\n")
    expected_equality = len(rep.equality) == 1 and names == ["K3"]
    if args.strict_paper and (rep.violations or not expected_equality):
        return 1
    return 0


def _cmd_audit(args):
    rep = audit_small_theorems(args.max_n)
    if args.json:
        _emit_json(rep.to_jsonable())
    else:
        _emit(f"graphs checked (n=3..{rep.n_max}): {rep.graphs_checked}\n")
        _emit(f"gamma3=n iff max_degree<=2: {len(rep.delta_equivalence_failures)} failures\n")
        _emit(f"3 <= gamma3 <= n: {len(rep.observation_failures)} failures\n")
        _emit(f"kappa <= min_degree: {len(rep.kappa_failures)} failures\n")
        _emit(f"gamma+kappa <= n: {len(rep.gamma_kappa_bound_failures)} failures\n")
        for sweep in rep.matching_sweeps:
            _emit(
                f"K{sweep.n} minus matchings ({sweep.matchings}): "
                f"{len(sweep.failures)} failures\n"
            )
        _emit(f"example graphs: gamma3(G1)={rep.example_g1_gamma3} gamma3(G2)={rep.example_g2_gamma3}\n")
        for nt in rep.notes:
            _emit(f"note {nt.entry}: {nt.kind}: {nt.detail}\n")
    if args.strict_paper and (not rep.clean or rep.notes):
        return 1
    return 0


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="kdom",
        description="Exact 3-domination and connectivity solvers with an exhaustive "
        "extremal-graph verifier.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, strict=False):
        p.add_argument("--json", action="store_true", help="emit JSON instead of text")
        if strict:
            p.add_argument(
                "--strict-paper",
                action="store_true",
                help="exit 1 when the source's verbatim claims do not hold",
            )

    p = sub.add_parser("invariants", help="gamma, gamma3, double domination, kappa, degrees")
    p.add_argument("--family", help="family DSL expression, e.g. 'C4(P2,2P3,P4,P3)'")
    p.add_argument("--graph6", help="a graph6 string")
    p.add_argument("--file", help="input file (graph6 lines, or an edge list)")
    p.add_argument("--format", choices=("graph6", "edgelist"), default="graph6")
    add_common(p)
    p.set_defaults(func=_cmd_invariants)

    p = sub.add_parser("construct", help="evaluate a family DSL expression to graph6")
    p.add_argument("--family", required=True)
    add_common(p)
    p.set_defaults(func=_cmd_construct)

    p = sub.add_parser("enumerate", help="dump one enumeration level as canonical graph6")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--allow-large", action="store_true", help="lift the n<=8 guard")
    add_common(p)
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("characterize", help="extremal sets gamma3+kappa = 2n-offset")
    p.add_argument("--offset", type=int, required=True, choices=(1, 2, 3, 4, 5))
    p.add_argument("--max-n", type=int, default=DEFAULT_N_MAX)
    add_common(p)
    p.set_defaults(func=_cmd_characterize)

    p = sub.add_parser("check-theorem", help="diff one theorem's list against the computation")
    p.add_argument("theorem", choices=("3.1", "3.2", "3.3", "3.4", "3.5"))
    p.add_argument("--max-n", type=int, default=DEFAULT_N_MAX)
    add_common(p, strict=True)
    p.set_defaults(func=_cmd_check_theorem)

    p = sub.add_parser("verify-bound", help="check gamma3+kappa <= 2n-1 exhaustively")
    p.add_argument("--max-n", type=int, default=DEFAULT_N_MAX)
    add_common(p, strict=True)
    p.set_defaults(func=_cmd_verify_bound)

    p = sub.add_parser("audit", help="sweep the small structural facts")
    p.add_argument("--max-n", type=int, default=7)
    add_common(p, strict=True)
    p.set_defaults(func=_cmd_audit)

    return parser


def main(argv=None):
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors and 0 on --help; keep both
        return exc.code if isinstance(exc.code, int) else USAGE_ERROR
    try:
        return args.func(args)
    except (FamilyParseError, ValueError, OSError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
