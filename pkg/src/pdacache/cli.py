"""Command-line front end.

stdout carries data, stderr carries diagnostics.  Exit codes: 0 success,
1 the input is an invalid PDA or a simulated user failed to decode,
2 usage or format errors.
"""

from __future__ import annotations

import argparse
import sys
import warnings
from typing import Optional, Sequence

from . import constructions, tables
from .caching_sim import Demand, FileLibrary, sweep_demands
from .constructions import Scheme1Params, Scheme2Params
from .hypergraph import pda_to_hypergraph
from .pda_core import PdaError, params, validate
from .tables import format_fraction
from .textfmt import parse_pda, serialize_pda

CONSTRUCT_PARAMS = {"s1": ("n", "a", "b"), "s2": ("q", "m", "t"), "an": ("K", "t")}


def _keyvals(tokens: Sequence[str]) -> dict[str, str]:
    out = {}
    for tok in tokens:
        key, sep, value = tok.partition("=")
        if not sep or not key or not value:
            raise PdaError(f"expected key=value, got {tok!r}")
        out[key] = value
    return out


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path) as fh:
        return fh.read()


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_construct(args) -> int:
    kv = _keyvals((args.params or []) + args.kv)
    names = CONSTRUCT_PARAMS[args.scheme]
    missing = [n for n in names if n not in kv]
    extra = sorted(set(kv) - set(names))
    if missing or extra:
        raise PdaError(f"scheme {args.scheme} takes exactly {' '.join(n + '=' for n in names)}")
    v = {n: int(kv[n]) for n in names}
    if args.scheme == "s1":
        pda = constructions.scheme1(Scheme1Params(**v))
    elif args.scheme == "s2":
        pda = constructions.scheme2(Scheme2Params(**v))
    else:
        pda = constructions.ali_niesen(v["K"], v["t"])
    _emit(serialize_pda(pda), args.out)
    return 0


def cmd_verify(args) -> int:
    pda = parse_pda(_read(args.file))
    report = validate(pda)
    for name, ok in (("C1", report.c1_ok), ("C2", report.c2_ok), ("C3", report.c3_ok)):
        print(f"{name}: {'ok' if ok else 'FAIL'}")
    for w in report.witnesses:
        print(f"  {w.describe()}")
    if report.c1_ok:
        p = params(pda)
        fmt = lambda x: format_fraction(x, args.decimal)  # noqa: E731
        print(f"(K,F,Z,S)=({p.k_users},{p.f_div},{p.z_stars},{p.s_symbols})")
        print(f"rate={fmt(p.rate)} mem_ratio={fmt(p.mem_ratio)} "
              f"regularity={p.regularity if p.regularity is not None else '-'}")
    print(f"valid: {'yes' if report.overall_valid else 'no'}")
    return 0 if report.overall_valid else 1


def cmd_dualize(args) -> int:
    pda = parse_pda(_read(args.file))
    report = validate(pda)
    if not report.overall_valid:
        print(f"invalid PDA: {report.first_witness().describe()}", file=sys.stderr)
        return 1
    _emit(serialize_pda(constructions.dualize(pda)), args.out)
    return 0


def cmd_simulate(args) -> int:
    pda = parse_pda(_read(args.file))
    report = validate(pda)
    if not report.overall_valid:
        print(f"invalid PDA: {report.first_witness().describe()}", file=sys.stderr)
        return 1
    lib = FileLibrary.random(args.files, pda.f, size=args.size, seed=args.seed)
    demands = None
    if args.demand:
        d = Demand(tuple(int(x) for x in args.demand.split(",")))
        d.check(lib.n_files, pda.k)
        demands = [d]
    ok = True
    for d, rep in sweep_demands(pda, lib, demands):
        ok &= rep.all_ok
        print(f"{rep.summary()} demand={','.join(map(str, d.d))}")
    return 0 if ok else 1


def cmd_export_hypergraph(args) -> int:
    pda = parse_pda(_read(args.file))
    _emit(pda_to_hypergraph(pda).to_edge_list(), args.out)
    return 0


def cmd_table(args) -> int:
    kv = _keyvals((args.range or []) + args.kv)
    ranges = {k: tables.parse_range(v) for k, v in kv.items()}
    names, _ = tables.SCHEMES[args.scheme]
    found = list(tables.rows(args.scheme, ranges))
    if not found:
        raise PdaError("no parameter point in range is admissible")
    shown = [n for n in names if n != "K"]
    print(" ".join(shown + ["K", "M/N", "F", "R"]))
    for r in found:
        cells = [str(v) for n, v in r.params if n != "K"]
        cells += [str(r.k_users), format_fraction(r.mem_ratio, args.decimal), str(r.f_div),
                  format_fraction(r.rate, args.decimal)]
        print(" ".join(cells))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="pdacache", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="build a PDA from a scheme")
    p.add_argument("--scheme", required=True, choices=sorted(CONSTRUCT_PARAMS))
    p.add_argument("--params", nargs="+", metavar="KEY=VALUE")
    p.add_argument("kv", nargs="*", metavar="KEY=VALUE")
    p.add_argument("--out")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="check C1-C3 and print parameters")
    p.add_argument("file", help="PDA file, or - for stdin")
    p.add_argument("--decimal", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("dualize", help="swap rows and symbols")
    p.add_argument("file")
    p.add_argument("--out")
    p.set_defaults(func=cmd_dualize)

    p = sub.add_parser("simulate", help="placement, delivery and decoding on random files")
    p.add_argument("file")
    p.add_argument("--files", type=int, required=True, help="number of files N")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--size", type=int, default=64, help="bytes per file")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--demand", help="comma-separated file index per user")
    g.add_argument("--all-demands", action="store_true")
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("export-hypergraph", help="print the edge list")
    p.add_argument("file")
    p.add_argument("--out")
    p.set_defaults(func=cmd_export_hypergraph)

    p = sub.add_parser("table", help="exact K, M/N, F, R for a scheme family")
    p.add_argument("--scheme", required=True, choices=sorted(tables.SCHEMES))
    p.add_argument("--range", nargs="+", metavar="KEY=RANGE")
    p.add_argument("kv", nargs="*", metavar="KEY=RANGE", help="e.g. q=2 m=2..10 t=2")
    p.add_argument("--decimal", action="store_true")
    p.set_defaults(func=cmd_table)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        try:
            code = args.func(args)
        except (PdaError, ValueError, OSError) as exc:
            print(f"error: {exc}", file=sys.stderr)
            code = 2
    for w in caught:
        print(f"warning: {w.message}", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
