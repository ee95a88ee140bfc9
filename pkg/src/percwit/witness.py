"""Prediction witnesses: correct-output sets and the p_cor functional.

For a Boolean function f and a node query s, the node's outcome is
"correct" when f applied to the outcome bits equals f applied to the true
input slots.  The witness value of a behavior is the normalized sum of
correct-outcome probabilities over all settings,

    p_cor = (1/N) sum_settings sum_{y in K(setting)} p(y | setting),

with N the number of (setting, outcome) terms.  Functions depending on
both inputs score both output bits over all 32 settings (N = 80 for the
linearly separable ones); single-variable functions reduce to the
relevant party alone (N = 8), with the other party marginalized out.

Every witness also compiles to an integer weight grid over joint
settings and outcomes (denominator N, or 32 for reduced witnesses,
which absorbs the uniform 1/4 marginal over the unscored party's input
pairs).  Classical enumeration, Born-rule evaluation, and the optimizer
objective all consume this one grid.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .perceptron import CONSTANT, TruthTable, classify

# Input pairs (x_{i,0}, x_{i,1}) in index order 2*x0 + x1.
PAIRS = ((0, 0), (0, 1), (1, 0), (1, 1))

SUM_TOL = 1e-12
NEG_TOL = -1e-14


class TrivialFunctionError(ValueError):
    """Raised for constant functions: their witness is identically 1."""


@dataclass(frozen=True)
class Setting:
    """A node query s and the four input bits (x_{1,0}, x_{1,1}, x_{2,0}, x_{2,1})."""

    s: int
    x: tuple[int, int, int, int]

    def __post_init__(self):
        if self.s not in (0, 1) or any(b not in (0, 1) for b in self.x):
            raise ValueError(f"invalid setting ({self.s}, {self.x})")
        object.__setattr__(self, "x", tuple(self.x))

    def slot(self, party: int) -> int:
        """The bit party `party` (1 or 2) holds in slot s."""
        return self.x[self.s] if party == 1 else self.x[2 + self.s]


def correct_output(f: TruthTable, setting: Setting) -> int:
    """The output the perceptron should produce: f on the true s-slots."""
    return f(setting.slot(1), setting.slot(2))


@dataclass(frozen=True)
class Behavior:
    """Conditional outcome distributions, one per scored setting.

    Keys are (s, pair1, pair2) for two-party witnesses and (s, pair) for
    reduced ones; outcomes are (y1, y2) tuples, or a single bit when
    reduced.  Entries may be exact Fractions (classical strategies) or
    floats (Born-rule values); evaluate() preserves exactness.
    """

    probabilities: dict

    def __post_init__(self):
        for key, dist in self.probabilities.items():
            total = sum(dist.values())
            if abs(float(total) - 1.0) > SUM_TOL:
                raise ValueError(f"distribution at {key} sums to {float(total)}")
            low = min(dist.values())
            if float(low) < NEG_TOL:
                raise ValueError(f"negative probability {float(low)} at {key}")


@dataclass(frozen=True, eq=False)
class Witness:
    function: TruthTable
    reduced_parties: frozenset[int]
    correct_sets: dict
    term_count: int
    _weights: np.ndarray = field(repr=False)
    _denominator: int = field(repr=False)

    @property
    def reduced(self) -> bool:
        return len(self.reduced_parties) == 1

    @property
    def scored_party(self) -> int | None:
        """The single scored party for reduced witnesses, else None."""
        return next(iter(self.reduced_parties)) if self.reduced else None

    def setting_keys(self) -> list:
        """Scored settings in the fixed enumeration order."""
        if self.reduced:
            return [(s, p) for s in (0, 1) for p in PAIRS]
        return [(s, p1, p2) for s in (0, 1) for p1 in PAIRS for p2 in PAIRS]

    def weight_grid(self) -> tuple[np.ndarray, int]:
        """Integer weights W[s, pair1, pair2, 2*y1+y2] and denominator.

        p_cor of a joint behavior q equals sum(W * q) / denominator; the
        caller must not mutate the returned array.
        """
        return self._weights, self._denominator


def build_witness(f: TruthTable) -> Witness:
    """Construct the prediction witness of a non-constant function."""
    cls = classify(f)
    if cls.tag == CONSTANT:
        raise TrivialFunctionError(f"constant function {f} admits no witness")

    weights = np.zeros((2, 4, 4, 4), dtype=np.int64)
    correct_sets = {}

    if len(cls.dependent_vars) == 1:
        party = next(iter(cls.dependent_vars))
        # Projection of f onto its one relevant input.
        g = (lambda v: f(v, 0)) if party == 1 else (lambda v: f(0, v))
        for s in (0, 1):
            for ip, pair in enumerate(PAIRS):
                z = g(pair[s])
                k = frozenset(y for y in (0, 1) if g(y) == z)
                correct_sets[(s, pair)] = k
                for jp in range(4):
                    for y1 in (0, 1):
                        for y2 in (0, 1):
                            yp = y1 if party == 1 else y2
                            if yp in k:
                                i1, i2 = (ip, jp) if party == 1 else (jp, ip)
                                weights[s, i1, i2, 2 * y1 + y2] = 1
        n = sum(len(k) for k in correct_sets.values())
        assert n == 8, f"reduced witness should have 8 terms, got {n}"
        denominator = 32  # 8 terms x 4 marginal cells for the unscored party
        reduced_parties = frozenset({party})
    else:
        for s in (0, 1):
            for i1, p1 in enumerate(PAIRS):
                for i2, p2 in enumerate(PAIRS):
                    z = f(p1[s], p2[s])
                    k = frozenset((y1, y2) for y1 in (0, 1) for y2 in (0, 1)
                                  if f(y1, y2) == z)
                    correct_sets[(s, p1, p2)] = k
                    for (y1, y2) in k:
                        weights[s, i1, i2, 2 * y1 + y2] = 1
        n = sum(len(k) for k in correct_sets.values())
        ones = sum(f.outputs)
        assert n == 8 * (ones ** 2 + (4 - ones) ** 2), \
            f"two-party witness term count {n} inconsistent with {f}"
        denominator = n
        reduced_parties = frozenset({1, 2})

    return Witness(function=f, reduced_parties=reduced_parties,
                   correct_sets=correct_sets, term_count=n,
                   _weights=weights, _denominator=denominator)


def evaluate(w: Witness, b: Behavior):
    """p_cor of a behavior: (1/N) * sum of correct-outcome probabilities.

    Exact (Fraction) when the behavior's entries are exact; float
    otherwise.  The result is asserted to lie in [0, 1] up to 1e-12.
    """
    if set(b.probabilities) != set(w.correct_sets):
        raise ValueError("behavior settings do not match the witness")
    total = 0
    for key, k in w.correct_sets.items():
        dist = b.probabilities[key]
        for y in k:
            total += dist[y]
    value = total / w.term_count if isinstance(total, Fraction) \
        else total / float(w.term_count)
    assert -1e-12 <= float(value) <= 1 + 1e-12, f"witness value {value} out of range"
    return value


def witness_text(w: Witness) -> str:
    """Fixed-layout text serialization (header plus one line per setting)."""
    parties = ",".join(str(p) for p in sorted(w.reduced_parties))
    lines = [f"function={w.function} scored_parties={parties} N={w.term_count}"]
    for key in w.setting_keys():
        k = w.correct_sets[key]
        if w.reduced:
            s, pair = key
            where = f"s={s} x={pair[0]}{pair[1]}"
            outs = ",".join(str(y) for y in sorted(k))
        else:
            s, p1, p2 = key
            where = f"s={s} x1={p1[0]}{p1[1]} x2={p2[0]}{p2[1]}"
            outs = ",".join(f"{y1}{y2}" for y1, y2 in sorted(k))
        lines.append(f"{where} K={{{outs}}}")
    return "\n".join(lines)
