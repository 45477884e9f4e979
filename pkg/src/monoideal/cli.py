"""Command line front end.

Exit codes: 0 success, 1 a verification failed, 2 usage or input error,
3 resource cap hit (or a fit that did not stabilize inside the window).
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import asymptotics as asy
from .core import IdealError, MonomialIdeal, VariableSet, parse_ideal
from .decomposition import (
    associated_primes,
    bight,
    canonical_primary_decomposition,
    embedded_primes,
    irreducible_decomposition,
    minimal_primes,
)
from .harness import STATEMENTS, CorpusSpec, default_variables, random_monomial_ideal, run_suite, summarize
from .io import CorpusFile, dump_corpus, emit_report_json, load_corpus
from .socle import ir, socle_profile

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3

IDEAL_COMMANDS = ("parse", "decompose", "assoc", "ir", "socle", "scan", "ell", "bight", "symbolic")


class UsageError(Exception):
    pass


def _head(I: MonomialIdeal) -> dict:
    return {"vars": list(I.ambient.names), "ideal": str(I)}


def _primes(ps, amb):
    return [p.names(amb) for p in ps]


def cmd_parse(I, args):
    obj = {**_head(I), "gens": [str(MonomialIdeal(I.ambient, (g,))) for g in I.gens]}
    return obj, str(I)


def cmd_decompose(I, args):
    comps = irreducible_decomposition(I)
    dec = canonical_primary_decomposition(I)
    obj = {**_head(I), "irreducible": [str(c) for c in comps], "primary": dec.to_json()}
    text = "\n".join(f"({c})" for c in comps)
    return obj, text


def cmd_assoc(I, args):
    amb = I.ambient
    ass, mn, emb = associated_primes(I), minimal_primes(I), embedded_primes(I)
    obj = {**_head(I), "associated": _primes(ass, amb), "minimal": _primes(mn, amb),
           "embedded": _primes(emb, amb)}
    text = "\n".join(("embedded " if p in emb else "minimal ") + ",".join(p.names(amb)) for p in ass)
    return obj, text


def cmd_ir(I, args):
    value = ir(I, verify=args.check)
    obj = {**_head(I), "ir": str(value), "checked": bool(args.check)}
    return obj, str(value)


def cmd_socle(I, args):
    amb = I.ambient
    prof = socle_profile(I)
    rows = [{"prime": p.names(amb), "dimension": str(prof[p])}
            for p in sorted(prof, key=lambda q: q.sort_key())]
    obj = {**_head(I), "socle": rows, "total": str(sum(prof.values()))}
    text = "\n".join(f"{','.join(r['prime']) or '(0)'}: {r['dimension']}" for r in rows)
    return obj, text


def cmd_scan(I, args):
    rep = asy.ir_polynomial(I, args.max_n, args.cap)
    if args.csv:
        Path(args.csv).write_text(rep.to_csv(), encoding="utf-8")
    lines = [f"n={args.max_n} ir={rep.ir_values} mu={rep.mu_values}",
             f"Ir(n) = {rep.fitted_ir if rep.fitted_ir else 'not stabilized'}",
             f"bight={rep.bight} analytic_spread={rep.analytic_spread or 'not stabilized'} "
             f"bounds_ok={rep.bounds_ok}"]
    return rep.to_json(), "\n".join(lines)


def cmd_ell(I, args):
    value = asy.analytic_spread(I, max(args.max_n, asy.DEFAULT_N_MAX), args.cap)
    return {**_head(I), "analytic_spread": str(value)}, str(value)


def cmd_bight(I, args):
    value = bight(I)
    return {**_head(I), "bight": str(value)}, str(value)


def cmd_symbolic(I, args):
    rep = asy.symbolic_ir_polynomial(I, args.max_n)
    powers = [str(asy.symbolic_power(I, n)) for n in range(1, args.max_n + 1)]
    obj = {**_head(I), "powers": powers, "scan": rep.to_json()}
    text = "\n".join(f"I^({n}) = {s}" for n, s in enumerate(powers, start=1))
    text += f"\nir = {rep.ir_values}\np(n) = {rep.fitted_ir or 'not stabilized'}"
    return obj, text


HANDLERS = {
    "parse": cmd_parse, "decompose": cmd_decompose, "assoc": cmd_assoc, "ir": cmd_ir,
    "socle": cmd_socle, "scan": cmd_scan, "ell": cmd_ell, "bight": cmd_bight,
    "symbolic": cmd_symbolic,
}


def _ideals(args) -> list[tuple[str, MonomialIdeal]]:
    if args.file:
        corpus = load_corpus(args.file)
        if args.vars:
            raise UsageError("--vars is taken from the corpus header when --file is used")
        items = list(corpus.entries.items())
        if args.name:
            items = [(n, I) for n, I in items if n == args.name]
            if not items:
                raise UsageError(f"no entry named {args.name!r}")
        return items
    if not args.vars or args.ideal is None:
        raise UsageError("give --vars and --ideal, or --file")
    return [("", parse_ideal(args.ideal, VariableSet.parse(args.vars)))]


def _emit(args, obj, text, out):
    payload = emit_report_json(obj) if args.json else text + "\n"
    if args.output:
        Path(args.output).write_text(payload, encoding="utf-8")
    else:
        out.write(payload)


def run_ideal_command(args, out) -> int:
    items = _ideals(args)
    handler = HANDLERS[args.command]
    if len(items) == 1 and not args.file:
        obj, text = handler(items[0][1], args)
        _emit(args, obj, text, out)
        return EXIT_OK
    results, texts = [], []
    for name, I in items:
        obj, text = handler(I, args)
        results.append({"name": name, "result": obj})
        texts.append(f"[{name}]\n{text}")
    _emit(args, {"entries": results}, "\n".join(texts), out)
    return EXIT_OK


def run_fit(args, out) -> int:
    try:
        values = [int(v) for v in args.values.split(",") if v.strip()]
    except ValueError:
        raise UsageError("--values must be comma separated integers") from None
    fit = asy.fit_tail(values, args.n_start)
    obj = {"values": [str(v) for v in values], "n_start": str(args.n_start),
           "tail_start": str(fit.tail_start), "polynomial": fit.poly.to_json()}
    _emit(args, obj, str(fit.poly), out)
    return EXIT_OK


def run_verify(args, out) -> int:
    if args.suite == "all":
        statements = list(STATEMENTS)
    else:
        statements = [s.strip() for s in args.suite.split(",") if s.strip()]
        bad = [s for s in statements if s not in STATEMENTS]
        if bad:
            raise UsageError(f"unknown statements {bad}; choose from {', '.join(STATEMENTS)}")
    spec = CorpusSpec(args.seed, args.arity, args.n_gens, args.max_exp, args.count)
    reports = run_suite(spec, statements)
    summary = summarize(reports)
    obj = {"seed": str(args.seed), "statements": statements,
           "corpus": {"arity": str(spec.arity), "n_gens": str(spec.n_gens),
                      "max_exp": str(spec.max_exp), "count": str(spec.count)},
           "summary": {k: str(v) for k, v in summary.items()},
           "reports": [r.to_json() for r in reports]}
    payload = emit_report_json(obj)
    if args.output:
        Path(args.output).write_text(payload, encoding="utf-8")
    else:
        out.write(payload)
    return EXIT_FAIL if summary["fail"] else EXIT_OK


def run_gen_random(args, out) -> int:
    spec = CorpusSpec(args.seed, args.arity, args.n_gens, args.max_exp, args.count)
    ideals = random_monomial_ideal(spec)
    if args.json:
        obj = {"seed": str(spec.seed), "vars": list(default_variables(spec.arity).names),
               "ideals": [str(I) for I in ideals]}
        payload = emit_report_json(obj)
    else:
        corpus = CorpusFile(default_variables(spec.arity))
        width = len(str(max(spec.count - 1, 0)))
        for k, I in enumerate(ideals):
            corpus.add(f"r{k:0{width}d}", I)
        payload = dump_corpus(corpus)
    if args.output:
        Path(args.output).write_text(payload, encoding="utf-8")
    else:
        out.write(payload)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="monoideal",
        description="Decompositions, socles and index of reducibility of monomial ideals.")
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit JSON instead of text")
    common.add_argument("--output", "-o", help="write the report here instead of stdout")

    ideal_args = argparse.ArgumentParser(add_help=False)
    ideal_args.add_argument("--vars", help="comma separated variable names, e.g. x,y")
    ideal_args.add_argument("--ideal", help='generators, e.g. "x^2, x*y"')
    ideal_args.add_argument("--file", help="corpus file (vars header + name: ideal lines)")
    ideal_args.add_argument("--name", help="pick one entry of --file")
    ideal_args.add_argument("--max-n", type=int, default=6, dest="max_n")
    ideal_args.add_argument("--cap", type=int, default=asy.DEFAULT_CAP,
                            help="generator-count limit for powers")

    helps = {
        "parse": "print the minimal generators",
        "decompose": "irreducible and canonical primary decomposition",
        "assoc": "associated, minimal and embedded primes",
        "ir": "index of reducibility (socle route)",
        "socle": "socle dimension at every associated prime",
        "scan": "ir and mu of powers, fitted polynomials, degree bounds",
        "ell": "analytic spread from the growth of mu(I^n)",
        "bight": "big height",
        "symbolic": "symbolic powers and the fitted ir polynomial",
    }
    for name in IDEAL_COMMANDS:
        p = sub.add_parser(name, parents=[common, ideal_args], help=helps[name])
        if name == "ir":
            p.add_argument("--check", action="store_true",
                           help="also count components of the irreducible decomposition")
        if name == "scan":
            p.add_argument("--csv", help="write n,ir,mu rows to this file")

    p = sub.add_parser("fit", parents=[common], help="exact polynomial fit of an integer sequence")
    p.add_argument("--values", required=True, help="comma separated integers")
    p.add_argument("--n-start", type=int, default=1, dest="n_start")

    for name in ("verify", "gen-random"):
        p = sub.add_parser(name, parents=[common],
                           help="run the theorem checks" if name == "verify" else "seeded random ideals")
        p.add_argument("--seed", type=int, default=42)
        p.add_argument("--arity", type=int, default=3)
        p.add_argument("--n-gens", type=int, default=4, dest="n_gens")
        p.add_argument("--max-exp", type=int, default=3, dest="max_exp")
        p.add_argument("--count", type=int, default=10)
        if name == "verify":
            p.add_argument("--suite", default="all",
                           help="'all' or comma separated: " + ",".join(STATEMENTS))
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else EXIT_OK
    try:
        if args.command in HANDLERS:
            return run_ideal_command(args, out)
        if args.command == "fit":
            return run_fit(args, out)
        if args.command == "verify":
            return run_verify(args, out)
        return run_gen_random(args, out)
    except (UsageError, IdealError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except asy.ResourceCapExceeded as exc:
        print(f"resource cap: {exc}", file=sys.stderr)
        return EXIT_CAP
    except asy.NotStabilized as exc:
        print(f"not stabilized: {exc}", file=sys.stderr)
        return EXIT_CAP


def main_entry():
    sys.exit(main())


if __name__ == "__main__":
    main_entry()
