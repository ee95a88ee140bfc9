"""Brute-force oracles for the test suite.

These recompute quantities the main modules produce through shortcuts,
using the dumbest correct procedure available, so agreement tests
validate the shortcuts instead of trusting them.  Minutes-scale costs
are acceptable here; nothing in the CLI path imports this module.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import _core
from .perceptron import TruthTable
from .witness import PAIRS, Setting, Witness, correct_output


@dataclass(frozen=True)
class OracleResult:
    value: object
    method: str

    def __post_init__(self):
        if not self.method:
            raise ValueError("method description must be nonempty")


def oracle_classical(w: Witness) -> OracleResult:
    """Exact deterministic optimum by full enumeration.

    Every one of the 16 x 16 encoder pairs is combined with every one of
    the 4^8 decoder tables (16,777,216 strategies); no per-cell argmax
    shortcut.  Integer arithmetic throughout.
    """
    weights, denominator = w.weight_grid()
    totals = _core.oracle_max_totals(np.ascontiguousarray(weights))
    return OracleResult(
        value=Fraction(int(totals.max()), denominator),
        method="full enumeration of 16x16 encoder pairs x 4^8 decoder tables",
    )


def oracle_witness_count(f: TruthTable) -> int:
    """Recount the witness term count N directly from the function.

    Iterates raw settings and outcome membership, bypassing the witness
    module's bookkeeping: single-variable functions score one output bit
    over 8 settings, two-variable functions score joint outcomes over all
    32 settings.
    """
    depends1 = any(f(0, x2) != f(1, x2) for x2 in (0, 1))
    depends2 = any(f(x1, 0) != f(x1, 1) for x1 in (0, 1))
    if not (depends1 or depends2):
        raise ValueError("constant functions have no witness")
    count = 0
    if depends1 and depends2:
        for s in (0, 1):
            for p1 in PAIRS:
                for p2 in PAIRS:
                    setting = Setting(s, (p1[0], p1[1], p2[0], p2[1]))
                    z = correct_output(f, setting)
                    count += sum(1 for y1 in (0, 1) for y2 in (0, 1)
                                 if f(y1, y2) == z)
    else:
        party = 1 if depends1 else 2
        for s in (0, 1):
            for pair in PAIRS:
                x = (pair[0], pair[1], 0, 0) if party == 1 else (0, 0, pair[0], pair[1])
                z = correct_output(f, Setting(s, x))
                g = (lambda y: f(y, 0)) if party == 1 else (lambda y: f(0, y))
                count += sum(1 for y in (0, 1) if g(y) == z)
    return count
