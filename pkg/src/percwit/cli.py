"""Command-line interface and report generator.

Subcommands:
  functions                      list the 14 implementable functions
  witness <fn>                   print a function's witness structure
  bound <fn> <mode>              one bound for one function
  report [--json PATH]           all bounds for all non-constant functions

Functions are addressed by canonical id (and, x1, imp_1to2, ...) or by
4-bit truth table string.  Exit codes: 0 success, 2 unknown function or
bad input, 3 trivial (constant) function, 4 not implementable
(XOR/XNOR), 5 unwritable output path.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from fractions import Fraction

from .classical import behavior_of, optimal_deterministic, paper_strategy
from .optimize import OptimizerConfig, search
from .perceptron import (AND_OR, ASYMMETRIC, CONSTANT, EXAMPLE_PARAMS,
                         FUNCTION_IDS, NON_SEPARABLE, SINGLE_VARIABLE,
                         FunctionClass, TruthTable, UnknownFunctionError,
                         classify, enumerate_separable, id_of,
                         resolve_function)
from .quantum import (behavior_of_quantum, paper_quantum_strategy,
                      strategy_from_json, strategy_to_json)
from .witness import Witness, build_witness, evaluate, witness_text

EXIT_UNKNOWN = 2
EXIT_TRIVIAL = 3
EXIT_NOT_IMPLEMENTABLE = 4
EXIT_UNWRITABLE = 5

FLAG_ENUM_EXCEEDS = "ENUM_EXCEEDS_PAPER_CLASSICAL"
FLAG_NO_ADVANTAGE = "NO_QUANTUM_ADVANTAGE_OVER_ENUM"
FLAG_SEARCH_EXCEEDS = "SEARCH_EXCEEDS_PAPER_QUANTUM"

REPORT_IDS = [fid for fid in FUNCTION_IDS if not fid.startswith("const")]


def fmt_fraction(fr: Fraction) -> str:
    return f"{fr.numerator}/{fr.denominator}"


def fmt_float(x: float) -> float:
    """Round to 12 significant digits (stable report formatting)."""
    return float(f"{x:.12g}")


def quantum_family(cls: FunctionClass) -> str:
    if cls.tag == SINGLE_VARIABLE:
        return "single1" if 1 in cls.dependent_vars else "single2"
    return "and"


def relabel_record(table: TruthTable, cls: FunctionClass) -> str:
    """How the function arises from the base case (x1 or AND) by relabeling."""
    ops = []
    if cls.tag == SINGLE_VARIABLE:
        party = next(iter(cls.dependent_vars))
        if party == 2:
            ops.append("swap_parties")
        g = (lambda y: table(y, 0)) if party == 1 else (lambda y: table(0, y))
        if g(1) == 0:
            ops.append("negate_output")
        return ",".join(ops) or "identity"
    for negate in (0, 1):
        for d1 in (0, 1):
            for d2 in (0, 1):
                if all(table(y1, y2) == negate ^ ((y1 ^ d1) & (y2 ^ d2))
                       for y1 in (0, 1) for y2 in (0, 1)):
                    if negate:
                        ops.append("negate_output")
                    if d1:
                        ops.append("flip_x1")
                    if d2:
                        ops.append("flip_x2")
                    return ",".join(ops) or "identity"
    raise AssertionError(f"{table} is not a relabeling of AND")


@dataclass
class ReportRow:
    function: str
    cls: str
    truth_table: str
    witness_n: int
    beta_c_paper: Fraction
    beta_c_enumerated: Fraction
    beta_q_paper: float
    beta_q_search: float
    relabeling: str
    flags: list
    notes: list

    def to_json_dict(self) -> dict:
        return {
            "function": self.function,
            "class": self.cls,
            "truth_table": self.truth_table,
            "witness_n": self.witness_n,
            "beta_c_paper": fmt_fraction(self.beta_c_paper),
            "beta_c_enumerated": fmt_fraction(self.beta_c_enumerated),
            "beta_q_paper": fmt_float(self.beta_q_paper),
            "beta_q_search": fmt_float(self.beta_q_search),
            "relabeling": self.relabeling,
            "flags": list(self.flags),
            "notes": list(self.notes),
        }


_PARITY_NOTE = None


def _parity_note() -> str:
    """Both reference values under the parity reading of the OR/NOR correct set."""
    global _PARITY_NOTE
    if _PARITY_NOTE is None:
        xor_witness = build_witness(TruthTable((0, 1, 1, 0)))
        c = evaluate(xor_witness, behavior_of(
            paper_strategy(FunctionClass(AND_OR, frozenset({1, 2}))), xor_witness))
        q = evaluate(xor_witness, behavior_of_quantum(
            paper_quantum_strategy("and"), xor_witness))
        _PARITY_NOTE = (
            f"parity reading of the correct set gives N={xor_witness.term_count}, "
            f"reference classical {fmt_fraction(c)}, "
            f"reference quantum {fmt_float(q):.12g}: no separation")
    return _PARITY_NOTE


def compute_row(fid: str, cfg: OptimizerConfig) -> ReportRow:
    table = FUNCTION_IDS[fid]
    cls = classify(table)
    w = build_witness(table)
    beta_c_paper = evaluate(w, behavior_of(paper_strategy(cls), w))
    cert = optimal_deterministic(w)
    beta_q_paper = evaluate(w, behavior_of_quantum(
        paper_quantum_strategy(quantum_family(cls)), w))
    result = search(w, cfg, paper_value=beta_q_paper)

    flags = []
    if cert.value > beta_c_paper:
        flags.append(FLAG_ENUM_EXCEEDS)
    if float(cert.value) >= result.best_value:
        flags.append(FLAG_NO_ADVANTAGE)
    if result.flag_exceeds_paper:
        flags.append(FLAG_SEARCH_EXCEEDS)
    notes = [_parity_note()] if fid in ("or", "nor") else []
    return ReportRow(
        function=fid, cls=cls.tag, truth_table=str(table),
        witness_n=w.term_count,
        beta_c_paper=beta_c_paper, beta_c_enumerated=cert.value,
        beta_q_paper=float(beta_q_paper), beta_q_search=result.best_value,
        relabeling=relabel_record(table, cls), flags=flags, notes=notes)


def _resolve(token: str):
    """(id or None, table, class), or an exit code on rejection."""
    try:
        table = resolve_function(token)
    except UnknownFunctionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_UNKNOWN
    cls = classify(table)
    if cls.tag == CONSTANT:
        print(f"trivial function: {table} is constant, its witness is 1",
              file=sys.stderr)
        return EXIT_TRIVIAL
    if cls.tag == NON_SEPARABLE:
        print(f"not implementable: {table} is not linearly separable",
              file=sys.stderr)
        return EXIT_NOT_IMPLEMENTABLE
    return id_of(table), table, cls


def cmd_functions(args) -> int:
    canonical = {t.outputs: p for t, p, _ in enumerate_separable()}
    print(f"{'id':<10} {'type':<15} {'table':<6} {'canonical':<18} example")
    for fid, table in FUNCTION_IDS.items():
        cls = classify(table)
        print(f"{fid:<10} {cls.tag:<15} {table!s:<6} "
              f"{canonical[table.outputs]!s:<18} {EXAMPLE_PARAMS[fid]}")
    return 0


def cmd_witness(args) -> int:
    resolved = _resolve(args.function)
    if isinstance(resolved, int):
        return resolved
    _, table, _ = resolved
    print(witness_text(build_witness(table)))
    return 0


def _print_classical_strategy(st) -> None:
    print(f"  encoder1 (pairs 00,01,10,11 -> message): {st.encoder1}")
    print(f"  encoder2 (pairs 00,01,10,11 -> message): {st.encoder2}")
    for s in (0, 1):
        cells = []
        for m1 in (0, 1):
            for m2 in (0, 1):
                dist = st.decoder[(m1, m2, s)]
                y = max(dist, key=dist.get)
                cells.append(f"{m1}{m2}->{y[0]}{y[1]}")
        print(f"  decoder s={s}: " + "  ".join(cells))


def cmd_bound(args) -> int:
    resolved = _resolve(args.function)
    if isinstance(resolved, int):
        return resolved
    fid, table, cls = resolved
    name = fid or str(table)
    w = build_witness(table)

    if args.mode == "classical-paper":
        st = paper_strategy(cls)
        value = evaluate(w, behavior_of(st, w))
        print(f"{name} classical witness value = {fmt_fraction(value)}"
              f" (= {fmt_float(float(value)):.12g})")
        print("provenance: paper strategy (forward slot-0 bits; s=0 identity,"
              " s=1 uniform guess)")
    elif args.mode == "classical-optimal":
        cert = optimal_deterministic(w)
        print(f"{name} classical optimum = {fmt_fraction(cert.value)}"
              f" (= {fmt_float(float(cert.value)):.12g})")
        print(f"provenance: enumerated ({cert.enumeration_size} deterministic"
              " strategies)")
        _print_classical_strategy(cert.strategy)
    elif args.mode == "quantum-paper":
        value = evaluate(w, behavior_of_quantum(
            paper_quantum_strategy(quantum_family(cls)), w))
        print(f"{name} quantum witness value = {fmt_float(value):.12g}")
        print(f"provenance: paper strategy (family {quantum_family(cls)},"
              f" relabeling {relabel_record(table, cls)})")
    else:  # quantum-search
        cfg = OptimizerConfig(restarts=args.restarts, max_iters=args.max_iters,
                              seed=args.seed)
        warm = None
        if args.warm_start:
            try:
                with open(args.warm_start) as fh:
                    warm = strategy_from_json(json.load(fh))
            except (OSError, ValueError, KeyError) as exc:
                print(f"error: bad warm start file: {exc}", file=sys.stderr)
                return EXIT_UNKNOWN
        ref = evaluate(w, behavior_of_quantum(
            paper_quantum_strategy(quantum_family(cls)), w))
        result = search(w, cfg, paper_value=ref, warm_start=warm)
        print(f"{name} quantum search value = {fmt_float(result.best_value):.12g}")
        print(f"provenance: numerical search, {result.restarts_run} restarts,"
              f" seed {cfg.seed} (lower bound, not certified)")
        if result.flag_exceeds_paper:
            print(f"flag: search exceeds the reference value"
                  f" {fmt_float(result.paper_value):.12g}")
        print("strategy:")
        print(json.dumps(strategy_to_json(result.best_strategy), indent=2))
    return 0


def cmd_report(args) -> int:
    if args.json:
        try:
            with open(args.json, "a", encoding="utf-8"):
                pass
        except OSError as exc:
            print(f"error: cannot write {args.json}: {exc}", file=sys.stderr)
            return EXIT_UNWRITABLE
    cfg = OptimizerConfig(restarts=args.restarts, max_iters=args.max_iters,
                          seed=args.seed)
    rows = [compute_row(fid, cfg) for fid in REPORT_IDS]

    header = (f"{'function':<10} {'class':<15} {'N':>3} {'beta_c_paper':>13} "
              f"{'beta_c_enum':>12} {'beta_q_paper':>14} {'beta_q_search':>14} flags")
    print(header)
    for row in rows:
        print(f"{row.function:<10} {row.cls:<15} {row.witness_n:>3} "
              f"{fmt_fraction(row.beta_c_paper):>13} "
              f"{fmt_fraction(row.beta_c_enumerated):>12} "
              f"{row.beta_q_paper:>14.12g} {row.beta_q_search:>14.12g} "
              f"{','.join(row.flags) or '-'}")
    for row in rows:
        for note in row.notes:
            print(f"note [{row.function}]: {note}")

    if args.json:
        doc = {"schema_version": 1, "seed": cfg.seed,
               "rows": [row.to_json_dict() for row in rows]}
        try:
            with open(args.json, "w", encoding="utf-8") as fh:
                json.dump(doc, fh, indent=2)
                fh.write("\n")
        except OSError as exc:
            print(f"error: cannot write {args.json}: {exc}", file=sys.stderr)
            return EXIT_UNWRITABLE
        print(f"wrote {args.json}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="percwit",
        description="prediction witnesses for informationally restricted perceptrons")
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("functions", help="list the 14 implementable functions")

    p_wit = sub.add_parser("witness", help="print a function's witness")
    p_wit.add_argument("function")

    p_bound = sub.add_parser("bound", help="compute one bound")
    p_bound.add_argument("function")
    p_bound.add_argument("mode", choices=["classical-paper", "classical-optimal",
                                          "quantum-paper", "quantum-search"])
    _add_search_flags(p_bound)
    p_bound.add_argument("--warm-start", metavar="PATH",
                         help="strategy JSON to seed restart 0 of quantum-search")

    p_rep = sub.add_parser("report", help="all bounds for all non-constant functions")
    p_rep.add_argument("--json", metavar="PATH", help="also write a JSON document")
    _add_search_flags(p_rep)
    return parser


def _add_search_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--restarts", type=int, default=64)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-iters", type=int, default=2000)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    handlers = {"functions": cmd_functions, "witness": cmd_witness,
                "bound": cmd_bound, "report": cmd_report}
    try:
        return handlers[args.command](args)
    except BrokenPipeError:
        # Downstream consumer (head, less) closed the pipe; not an error.
        os.dup2(os.open(os.devnull, os.O_WRONLY), sys.stdout.fileno())
        return 0


if __name__ == "__main__":
    sys.exit(main())
