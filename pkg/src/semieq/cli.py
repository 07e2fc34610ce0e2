"""Command-line front end.  Exit codes: 0 true / clean, 1 false / discrepancies, 2 error."""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from . import classes, closure, corpus, natsolve, transforms
from .eqdsl import EquationSystem, parse, parse_file, parse_word, render
from .errors import BudgetExceeded, SemieqError
from .evaluate import DEFAULT_BUDGET, evaluate
from .green import green_data

EXIT_TRUE, EXIT_FALSE, EXIT_ERROR = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _global_flags(parser: argparse.ArgumentParser, suppress: bool) -> None:
    d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    parser.add_argument("--format", choices=("json", "text"), default=d("text"))
    parser.add_argument("--budget", type=int, default=d(DEFAULT_BUDGET),
                        help="evaluation node cap")
    parser.add_argument("--seed", type=int, default=d(0), help="seed for randomised suites")
    parser.add_argument("--corpus", default=d(None), help="corpus manifest file")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="semieq", description="Equation systems over finite semigroups.")
    _global_flags(p, suppress=False)
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)
    common = _Parser(add_help=False)
    _global_flags(common, suppress=True)

    def add(name, help_):
        return sub.add_parser(name, help=help_, parents=[common])

    c = add("check", "decide whether a semigroup satisfies an equation system")
    c.add_argument("--semigroup", required=True, help="family descriptor or table file")
    c.add_argument("--system", required=True, help="catalogue class id, file, or inline text")
    c.add_argument("--samples", type=int, default=8)
    c = add("classify", "run every catalogue oracle and basis on one semigroup")
    c.add_argument("--semigroup", required=True)
    c = add("crossval", "compare a class oracle and basis over a corpus")
    c.add_argument("--class", dest="class_id", required=True)
    c = add("closure", "closure of a class under quotients and products")
    c.add_argument("--class", dest="class_id", required=True)
    c.add_argument("--op", choices=("H", "P", "both"), default="both")
    c.add_argument("--via", choices=("oracle", "basis"), default="oracle")
    c.add_argument("--max-order", type=int, default=5)
    c = add("skolemize", "replace existentials by fresh operation symbols")
    c.add_argument("--system", required=True)
    c.add_argument("--names", default=None, help="comma-separated Skolem symbol names")
    c.add_argument("--style", choices=("dsl", "math"), default="dsl")
    c = add("localize", "localised form of a system")
    c.add_argument("--system", required=True)
    c = add("psolve", "solvability of a word equation in the positive integers")
    c.add_argument("--eq", required=True, help="'params: a b; vars: x y; eq: p = q'")
    c.add_argument("--params", default=None, help="comma-separated positive parameter values")
    c = add("universal", "is a parameterless equation solvable in every semigroup")
    c.add_argument("--eq", required=True, help="'p = q'")
    c = add("green", "eggbox rendering of Green's relations")
    c.add_argument("--semigroup", required=True)
    return p


# ---------------------------------------------------------------------------
# helpers

def load_system(text: str) -> EquationSystem:
    if text in classes.class_ids():
        return classes.get_class(text).basis
    path = Path(text)
    if path.is_file():
        systems = parse_file(path.read_text())
        if len(systems) != 1:
            raise UsageError(f"{text}: expected one system, found {len(systems)}")
        return systems[0]
    return parse(text)


def _labels(S, asg: dict) -> dict:
    return {k: S.label(v) for k, v in asg.items()}


def _corpus(args) -> corpus.Corpus:
    if args.corpus:
        return corpus.load_manifest(args.corpus)
    return corpus.builtin_corpus()


def eggbox(S) -> str:
    g = green_data(S)
    lines = []
    for k, dcls in enumerate(g.classes("D")):
        rs = sorted({g.r_class[a] for a in dcls})
        ls = sorted({g.l_class[a] for a in dcls})
        cells = [[" ".join(S.label(a) + ("*" if a in g.idempotents else "")
                           for a in dcls if g.r_class[a] == r and g.l_class[a] == l)
                  for l in ls] for r in rs]
        width = max(len(c) for row in cells for c in row)
        sep = "+" + "+".join("-" * (width + 2) for _ in ls) + "+"
        lines.append(f"D-class {k} ({len(dcls)} elements, {len(rs)} R x {len(ls)} L)")
        lines.append(sep)
        for row in cells:
            lines.append("|" + "|".join(f" {c.ljust(width)} " for c in row) + "|")
            lines.append(sep)
    lines.append("* marks idempotents")
    return "\n".join(lines)


# ---------------------------------------------------------------------------
# commands: each returns (exit code, report dict, text)

def cmd_check(args):
    S, prov = corpus.resolve_semigroup(args.semigroup)
    sys_ = load_system(args.system)
    rep = evaluate(S, sys_, budget=args.budget, samples=args.samples)
    witnesses = [_labels(S, w) for w in rep.witness_trace]
    report = {"verdict": rep.verdict, "rationale": "exhaustive-search",
              "witnesses": witnesses, "discrepancies": [],
              "failure": None if rep.failure_trace is None else _labels(S, rep.failure_trace),
              "nodes": rep.nodes, "order": S.order, "system": render(sys_)}
    text = [f"{prov} (order {S.order}) satisfies: {render(sys_)}", f"verdict: {rep.verdict}"]
    if rep.failure_trace is not None:
        text.append(f"failing universal assignment: {report['failure']}")
    for w in witnesses[:4]:
        text.append(f"witness: {w}")
    return (EXIT_TRUE if rep.verdict else EXIT_FALSE), report, "\n".join(text)


def cmd_classify(args):
    S, prov = corpus.resolve_semigroup(args.semigroup)
    rows, disc = [], []
    for e in classes.catalogue():
        o = bool(e.oracle(S))
        try:
            b = evaluate(S, e.basis, budget=args.budget, traces=False).verdict
        except BudgetExceeded as exc:
            b = None
            disc.append({"class": e.class_id, "note": f"budget exceeded: {exc.estimated_cost}"})
        rows.append({"class": e.class_id, "oracle": o, "basis": b})
        if b is not None and o != b:
            disc.append({"class": e.class_id, "oracle": o, "basis": b,
                         "expected": not e.cross_validated})
    unexpected = [d for d in disc if not d.get("expected")]
    report = {"verdict": not unexpected, "rationale": "oracle-vs-basis", "witnesses": [],
              "discrepancies": disc, "classes": rows, "order": S.order}
    text = [f"{prov} (order {S.order})", f"{'class':<12} {'oracle':<7} basis"]
    for r in rows:
        mark = "" if r["oracle"] == r["basis"] else "  <- differs"
        text.append(f"{r['class']:<12} {str(r['oracle']):<7} {r['basis']}{mark}")
    return (EXIT_TRUE if not unexpected else EXIT_FALSE), report, "\n".join(text)


def cmd_crossval(args):
    C = _corpus(args)
    disc = classes.cross_validate(args.class_id, C, budget=args.budget)
    items = [{"name": d.name, "oracle": d.oracle, "basis": d.basis, "note": d.note} for d in disc]
    report = {"verdict": not disc, "rationale": "oracle-vs-basis", "witnesses": [],
              "discrepancies": items, "corpus_size": len(C)}
    text = [f"{args.class_id}: {len(C)} semigroups, {len(disc)} discrepancies"]
    text += [f"  {d['name']}: oracle={d['oracle']} basis={d['basis']} {d['note']}" for d in items]
    return (EXIT_TRUE if not disc else EXIT_FALSE), report, "\n".join(text)


def cmd_closure(args):
    C = _corpus(args).up_to(args.max_order)
    found = []
    if args.op in ("H", "both"):
        found += [("H", v) for v in closure.closed_under_H(args.class_id, C, via=args.via,
                                                            budget=args.budget)]
    if args.op in ("P", "both"):
        found += [("P", v) for v in closure.closed_under_P(args.class_id, C, via=args.via,
                                                            budget=args.budget)]
    items = [{"op": op, "source": v.source, "image": v.image, "detail": v.detail}
             for op, v in found]
    report = {"verdict": not items, "rationale": f"closure-via-{args.via}", "witnesses": [],
              "discrepancies": items, "corpus_size": len(C)}
    text = [f"{args.class_id} closure ({args.op}, via {args.via}) over {len(C)} semigroups: "
            f"{len(items)} violations"]
    text += [f"  {d['op']}: {d['image'] or d['source']} {d['detail']}" for d in items]
    return (EXIT_TRUE if not items else EXIT_FALSE), report, "\n".join(text)


def cmd_skolemize(args):
    sys_ = load_system(args.system)
    names = args.names.split(",") if args.names else None
    ids, sig = transforms.skolemize(sys_, names)
    out = transforms.render_identities(ids, args.style)
    report = {"verdict": True, "rationale": "skolemisation", "witnesses": [], "discrepancies": [],
              "signature": [{"name": n, "arity": a} for n, a in sig.symbols],
              "identities": out}
    return EXIT_TRUE, report, out


def cmd_localize(args):
    sys_ = load_system(args.system)
    out = render(transforms.localise(sys_))
    report = {"verdict": True, "rationale": "localisation", "witnesses": [], "discrepancies": [],
              "system": out}
    return EXIT_TRUE, report, out


def cmd_psolve(args):
    prof = natsolve.parse_additive(args.eq)
    dec = natsolve.decide_solvable_in_P(prof)
    report = {"m": list(prof.m), "n": list(prof.n), "d": prof.d, "dprime": prof.dprime,
              "structure_m": dec.structure_m.describe(), "structure_n": dec.structure_n.describe(),
              "solvable": dec.solvable, "verdict": dec.solvable, "rationale": dec.rationale,
              "witnesses": [], "discrepancies": []}
    text = [f"m = {list(prof.m)}  n = {list(prof.n)}  d = {prof.d}  d' = {prof.dprime}",
            f"S(m) = {dec.structure_m.describe()}", f"S(n) = {dec.structure_n.describe()}",
            f"solvable for all parameters: {dec.solvable} ({dec.rationale})"]
    code = EXIT_TRUE if dec.solvable else EXIT_FALSE
    if args.params is not None:
        try:
            values = [int(v) for v in args.params.split(",") if v.strip()]
        except ValueError:
            raise UsageError("--params takes comma-separated integers") from None
        w = natsolve.find_witness(prof, values)
        report["witness"] = None if w is None else list(w)
        if w is None:
            text.append(f"parameters {values}: no witness")
            code = EXIT_FALSE
        else:
            left, right = natsolve.substitution_value(prof, w, values)
            report["witnesses"] = [dict(zip(prof.variables, w))]
            report["value"] = left
            text.append(f"parameters {values}: witness {dict(zip(prof.variables, w))}, "
                        f"both sides {left}" + ("" if left == right else f" != {right}"))
        report["verdict"] = w is not None
    return code, report, "\n".join(text)


def cmd_universal(args):
    if args.eq.count("=") != 1:
        raise UsageError("--eq needs exactly one '='")
    lhs, rhs = (parse_word(s) for s in args.eq.split("="))
    res = natsolve.classify_universal(lhs, rhs)
    report = {"verdict": res.universal, "rationale": res.condition, "witnesses": [],
              "discrepancies": []}
    text = f"{'universal' if res.universal else 'not universal'} ({res.condition})"
    return (EXIT_TRUE if res.universal else EXIT_FALSE), report, text


def cmd_green(args):
    S, prov = corpus.resolve_semigroup(args.semigroup)
    g = green_data(S)
    report = {"verdict": True, "rationale": "green-relations", "witnesses": [],
              "discrepancies": [], "order": S.order,
              "classes": {rel: [[S.label(a) for a in c] for c in g.classes(rel)]
                          for rel in ("R", "L", "H", "D")},
              "idempotents": [S.label(a) for a in sorted(g.idempotents)]}
    return EXIT_TRUE, report, f"{prov} (order {S.order})\n" + eggbox(S)


COMMANDS = {"check": cmd_check, "classify": cmd_classify, "crossval": cmd_crossval,
            "closure": cmd_closure, "skolemize": cmd_skolemize, "localize": cmd_localize,
            "psolve": cmd_psolve, "universal": cmd_universal, "green": cmd_green}


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    start = time.perf_counter()
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        print(exc, file=stderr)
        return EXIT_ERROR
    except SystemExit as exc:   # --help
        return EXIT_TRUE if exc.code in (0, None) else EXIT_ERROR
    inputs = {k: v for k, v in vars(args).items() if k not in ("command", "format")}
    try:
        code, report, text = COMMANDS[args.command](args)
    except BudgetExceeded as exc:
        msg = f"budget exceeded: estimated cost {exc.estimated_cost} > budget {exc.budget}"
        code, report, text = EXIT_ERROR, {"verdict": None, "rationale": "budget-exceeded",
                                          "error": msg, "witnesses": [], "discrepancies": []}, msg
        print(msg, file=stderr)
    except (UsageError, SemieqError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_ERROR
    full = {"command": args.command, "inputs": inputs, **report,
            "elapsed_ms": round((time.perf_counter() - start) * 1000, 3)}
    if args.format == "json":
        print(json.dumps(full, indent=2, default=str), file=stdout)
    elif code != EXIT_ERROR:
        print(text, file=stdout)
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
