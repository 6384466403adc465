"""Command-line interface.

Subcommands: sort | orbit | fertility | vhc | preimages | enumerate |
sort-b | orbit-b | census-b | affine ... | verify ... | experiment ...

Permutations travel as comma-separated one-line notation ("4,7,2,3,1,6,5"),
affine permutations as bracketed windows ("[3,-1,2,-2,7,12]"), decorations
as words over n/u/d/b.  Reports print as a table by default; --out json and
--out csv emit machine-readable forms with exact integers (decimal strings
beyond 2^53).
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import affine, congruence, harness, hooks, perm, permutree, signed


def _emit(obj, out: str) -> None:
    if out == "json":
        print(json.dumps(harness.jsonable(obj), indent=2, sort_keys=True))
    else:
        if isinstance(obj, dict):
            for key, val in obj.items():
                print(f"{key}: {val}")
        else:
            print(obj)


def _perm_arg(text: str):
    return perm.parse_perm(text)


def _emit_report(report, out: str, timings: bool) -> int:
    if out == "json":
        print(json.dumps(report.to_json_obj(timings), indent=2, sort_keys=True))
    elif out == "csv":
        rows = report.csv_rows(timings)
        writer = csv.DictWriter(sys.stdout, fieldnames=list(rows[0].keys()))
        writer.writeheader()
        writer.writerows(rows)
    else:
        for line in report.table_lines():
            print(line)
    return 0 if report.ok else 1


def _cmd_sort(args) -> int:
    w = _perm_arg(args.perm)
    if args.decoration:
        result = permutree.permutree_sort(
            permutree.check_decoration(args.decoration, len(w)), w)
    else:
        result = perm.stack_sort(w)
    _emit({"input": perm.format_perm(w), "result": perm.format_perm(result)}
          if args.out == "json" else perm.format_perm(result), args.out)
    return 0


def _cmd_orbit(args) -> int:
    w = _perm_arg(args.perm)
    if args.decoration:
        dec = permutree.check_decoration(args.decoration, len(w))
        orbit = perm.forward_orbit(lambda v: permutree.permutree_sort(dec, v), w)
    else:
        orbit = perm.forward_orbit(perm.stack_sort, w)
    if args.out == "json":
        _emit({"orbit": [perm.format_perm(v) for v in orbit],
               "size": len(orbit)}, "json")
    else:
        for v in orbit:
            print(perm.format_perm(v))
    return 0


def _cmd_fertility(args) -> int:
    w = _perm_arg(args.perm)
    _emit({"perm": perm.format_perm(w), "fertility": hooks.fertility(w)}
          if args.out == "json" else hooks.fertility(w), args.out)
    return 0


def _cmd_vhc(args) -> int:
    w = _perm_arg(args.perm)
    configs = []
    for config in hooks.enumerate_vhcs(w):
        configs.append({
            "hooks": [{"sw": list(h[0]), "ne": list(h[1])} for h in config],
            "composition": list(hooks.q_composition(w, config)),
        })
    if args.emit == "json":
        print(json.dumps(harness.jsonable(
            {"perm": perm.format_perm(w), "configurations": configs}),
            indent=2))
    else:
        print(f"{len(configs)} valid hook configuration(s)")
        for cfg in configs:
            arms = " ".join(f"{h['sw']}->{h['ne']}" for h in cfg["hooks"])
            print(f"  q={tuple(cfg['composition'])}  {arms}")
    return 0


def _cmd_preimages(args) -> int:
    w = _perm_arg(args.perm)
    pre = hooks.preimages(w)
    if args.out == "json":
        _emit({"perm": perm.format_perm(w),
               "preimages": [perm.format_perm(u) for u in pre]}, "json")
    else:
        for u in pre:
            print(perm.format_perm(u))
    return 0


def _cmd_enumerate(args) -> int:
    if args.what == "avoiders":
        items = [str(w) for w in affine.enumerate_231_avoiders(args.n)]
    elif args.what == "fences":
        items = [str(f) for f in congruence.all_fences(args.n)]
    else:  # group
        items = [perm.format_perm(w) for w in signed.iter_hyperoctahedral(args.n)]
    if args.out == "json":
        _emit({"what": args.what, "n": args.n, "count": len(items),
               "items": items}, "json")
    else:
        for item in items:
            print(item)
    return 0


def _signed_arg(args):
    if args.window:
        return signed.from_signed_window(
            tuple(int(x) for x in args.window.strip("[]").split(",")))
    if not args.perm:
        raise ValueError("need --perm (full word) or --window (signed window)")
    return signed.check_signed(_perm_arg(args.perm))


def _cmd_sort_b(args) -> int:
    w = _signed_arg(args)
    v = signed.stack_b(w)
    _emit({"input": perm.format_perm(w), "result": perm.format_perm(v),
           "signed_window": list(signed.to_signed_window(v))}
          if args.out == "json" else perm.format_perm(v), args.out)
    return 0


def _cmd_orbit_b(args) -> int:
    w = _signed_arg(args)
    orbit = signed.orbit_b(w)
    if args.out == "json":
        _emit({"orbit": [perm.format_perm(v) for v in orbit],
               "size": len(orbit)}, "json")
    else:
        for v in orbit:
            print(perm.format_perm(v))
    return 0


def _cmd_census_b(args) -> int:
    rows = signed.census_rows(args.n)
    if args.out == "json":
        _emit([{**r, "element": perm.format_perm(r["element"])} for r in rows],
              "json")
    else:
        writer = csv.writer(sys.stdout)
        writer.writerow(["element", "descents", "orbit_size", "preimages"])
        for r in rows:
            writer.writerow([perm.format_perm(r["element"]), r["descents"],
                             r["orbit_size"], r["preimages"]])
    return 0


def _cmd_affine(args) -> int:
    if args.action in ("sort", "fertility", "preimages") and not args.window:
        raise ValueError(f"affine {args.action} needs --window")
    if args.action == "sort":
        w = affine.parse_window(args.window)
        _emit({"input": str(w), "result": str(affine.affine_stack(w))}
              if args.out == "json" else str(affine.affine_stack(w)), args.out)
    elif args.action == "fertility":
        w = affine.parse_window(args.window)
        _emit({"window": str(w), "fertility": affine.affine_fertility(w)}
              if args.out == "json" else affine.affine_fertility(w), args.out)
    elif args.action == "preimages":
        w = affine.parse_window(args.window)
        pre = affine.affine_preimages(w)
        if args.out == "json":
            _emit({"window": str(w), "preimages": [str(p) for p in pre]}, "json")
        else:
            for p in pre:
                print(p)
    elif args.action == "count-2ss":
        counts = {m: affine.count_2ss(m) for m in range(1, args.n + 1)}
        _emit({"counts": counts} if args.out == "json" else counts, args.out)
    elif args.action == "uniquely-sorted-classes":
        counts = {2 * j: affine.uniquely_sorted_class_count(j)
                  for j in range(1, args.k + 1)}
        _emit({"counts_by_rank": counts} if args.out == "json" else counts,
              args.out)
    return 0


def _cmd_verify(args) -> int:
    if args.suite == "all":
        code = 0
        for name in harness.SUITES:
            report = harness.run_suite(name, n=args.n, k=args.k,
                                       slow=args.slow, seed=args.seed)
            code |= _emit_report(report, args.out, args.timings)
        return code
    report = harness.run_suite(args.suite, n=args.n, k=args.k,
                               slow=args.slow, seed=args.seed)
    return _emit_report(report, args.out, args.timings)


def _cmd_experiment(args) -> int:
    report = harness.experiment(args.name, n=args.n, samples=args.samples,
                                seed=args.seed)
    _emit_report(report, args.out, args.timings)
    return 0  # experiments never fail the build


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="coxsort",
        description="Stack-sorting operators on symmetric, hyperoctahedral, "
                    "and affine symmetric groups.")
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", choices=("human", "json", "csv"),
                        default="human")

    p = sub.add_parser("sort", parents=[common],
                       help="one sorting pass (West's, or a decoration's)")
    p.add_argument("--perm", required=True)
    p.add_argument("--decoration")
    p.set_defaults(fn=_cmd_sort)

    p = sub.add_parser("orbit", parents=[common],
                       help="iterate the pass to the identity")
    p.add_argument("--perm", required=True)
    p.add_argument("--decoration")
    p.set_defaults(fn=_cmd_orbit)

    p = sub.add_parser("fertility", parents=[common],
                       help="preimage count under one pass")
    p.add_argument("--perm", required=True)
    p.set_defaults(fn=_cmd_fertility)

    p = sub.add_parser("vhc", parents=[common],
                       help="valid hook configurations of a plot")
    p.add_argument("--perm", required=True)
    p.add_argument("--emit", choices=("human", "json"), default="human")
    p.set_defaults(fn=_cmd_vhc)

    p = sub.add_parser("preimages", parents=[common],
                       help="explicit preimages under one pass")
    p.add_argument("--perm", required=True)
    p.set_defaults(fn=_cmd_preimages)

    p = sub.add_parser("enumerate", parents=[common],
                       help="enumerate avoiders, fences, or a signed group")
    p.add_argument("what", choices=("avoiders", "fences", "group-b"))
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(fn=_cmd_enumerate)

    for name, fn in (("sort-b", _cmd_sort_b), ("orbit-b", _cmd_orbit_b)):
        p = sub.add_parser(name, parents=[common],
                           help=f"type-B {name.split('-')[0]}")
        p.add_argument("--perm", help="full centrally symmetric word")
        p.add_argument("--window", help="signed window like 3,-1,4,2")
        p.set_defaults(fn=fn)

    p = sub.add_parser("census-b", parents=[common],
                       help="per-element census of B_n (CSV by default)")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(fn=_cmd_census_b)

    p = sub.add_parser("affine", parents=[common], help="affine operations")
    p.add_argument("action", choices=("sort", "fertility", "preimages",
                                      "count-2ss", "uniquely-sorted-classes"))
    p.add_argument("--window")
    p.add_argument("--n", type=int, default=4)
    p.add_argument("--k", type=int, default=2)
    p.set_defaults(fn=_cmd_affine)

    p = sub.add_parser("verify", parents=[common],
                       help="run a verification suite")
    p.add_argument("suite", choices=harness.SUITES + ("all",))
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--slow", action="store_true")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--timings", action="store_true")
    p.set_defaults(fn=_cmd_verify)

    p = sub.add_parser("experiment", parents=[common],
                       help="evidence-only conjecture runs")
    p.add_argument("name", choices=harness.EXPERIMENTS)
    p.add_argument("--n", type=int)
    p.add_argument("--samples", type=int, default=50)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--timings", action="store_true")
    p.set_defaults(fn=_cmd_experiment)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except (ValueError, RuntimeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
