"""Threshold perceptron over two binary inputs.

A function f: {0,1}^2 -> {0,1} is realizable iff it is linearly
separable; exactly 14 of the 16 two-bit functions qualify (XOR and XNOR
do not).  All threshold comparisons are exact rational arithmetic: the
decision boundary is closed (>= 0), so float rounding at the boundary
would silently change the realized function.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

# Classification tags.
CONSTANT = "Constant"
SINGLE_VARIABLE = "SingleVariable"
AND_OR = "AndOr"
ASYMMETRIC = "Asymmetric"
NON_SEPARABLE = "NonSeparable"

_RationalLike = int | Fraction | str


def _half_integer(value: _RationalLike) -> Fraction:
    f = Fraction(value)
    if f.denominator not in (1, 2):
        raise ValueError(f"{f} is not a half-integer")
    return f


@dataclass(frozen=True)
class PerceptronParams:
    """Weights and bias (w1, w2, b), half-integer valued."""

    w1: Fraction
    w2: Fraction
    b: Fraction

    def __post_init__(self):
        object.__setattr__(self, "w1", _half_integer(self.w1))
        object.__setattr__(self, "w2", _half_integer(self.w2))
        object.__setattr__(self, "b", _half_integer(self.b))

    def __str__(self):
        return f"({self.w1}, {self.w2}, {self.b})"


@dataclass(frozen=True)
class TruthTable:
    """Outputs of a two-bit Boolean function on (00, 01, 10, 11)."""

    outputs: tuple[int, int, int, int]

    def __post_init__(self):
        if len(self.outputs) != 4 or any(o not in (0, 1) for o in self.outputs):
            raise ValueError(f"invalid truth table {self.outputs}")
        object.__setattr__(self, "outputs", tuple(self.outputs))

    @classmethod
    def from_string(cls, bits: str) -> "TruthTable":
        if len(bits) != 4 or any(c not in "01" for c in bits):
            raise ValueError(f"expected a 4-bit string, got {bits!r}")
        return cls(tuple(int(c) for c in bits))

    def __call__(self, x1: int, x2: int) -> int:
        return self.outputs[2 * x1 + x2]

    def __str__(self):
        return "".join(str(o) for o in self.outputs)


@dataclass(frozen=True)
class FunctionClass:
    tag: str
    dependent_vars: frozenset[int]

    def __post_init__(self):
        object.__setattr__(self, "dependent_vars", frozenset(self.dependent_vars))
        if (self.tag == CONSTANT) != (not self.dependent_vars):
            raise ValueError("dependent_vars must be empty exactly for constants")


def eval_threshold(p: PerceptronParams, x1: int, x2: int) -> int:
    """Step activation: 1 iff w1*x1 + w2*x2 + b >= 0, exact comparison."""
    return 1 if p.w1 * x1 + p.w2 * x2 + p.b >= 0 else 0


def truth_table(p: PerceptronParams) -> TruthTable:
    return TruthTable(tuple(eval_threshold(p, x1, x2)
                            for x1 in (0, 1) for x2 in (0, 1)))


def classify(t: TruthTable) -> FunctionClass:
    """Assign the function family and the set of inputs it depends on."""
    o = t.outputs
    dep = set()
    if (o[0], o[1]) != (o[2], o[3]):
        dep.add(1)
    if (o[0], o[2]) != (o[1], o[3]):
        dep.add(2)
    if not dep:
        return FunctionClass(CONSTANT, frozenset())
    if len(dep) == 1:
        return FunctionClass(SINGLE_VARIABLE, frozenset(dep))
    if o in ((0, 1, 1, 0), (1, 0, 0, 1)):
        return FunctionClass(NON_SEPARABLE, frozenset(dep))
    if o in ((0, 0, 0, 1), (1, 1, 1, 0), (0, 1, 1, 1), (1, 0, 0, 0)):
        return FunctionClass(AND_OR, frozenset(dep))
    return FunctionClass(ASYMMETRIC, frozenset(dep))


# Half-integer grid {-2, -3/2, ..., 3/2, 2} scanned in ascending order.
GRID = [Fraction(k, 2) for k in range(-4, 5)]


def enumerate_separable() -> list[tuple[TruthTable, PerceptronParams, FunctionClass]]:
    """All linearly separable two-bit functions with a canonical parameter witness.

    Scans the half-integer grid lexicographically in (w1, w2, b); the first
    parameter triple realizing each truth table becomes its canonical
    witness.  The four points of {0,1}^2 admit separating hyperplanes with
    half-integer coefficients in this range, so the scan is exhaustive; the
    count is asserted to be exactly 14.
    """
    seen: dict[tuple, tuple[TruthTable, PerceptronParams, FunctionClass]] = {}
    for w1, w2, b in itertools.product(GRID, GRID, GRID):
        p = PerceptronParams(w1, w2, b)
        t = truth_table(p)
        if t.outputs not in seen:
            seen[t.outputs] = (t, p, classify(t))
    result = list(seen.values())
    assert len(result) == 14, f"expected 14 separable functions, found {len(result)}"
    assert all(c.tag != NON_SEPARABLE for _, _, c in result)
    return result


# Canonical CLI ids, in report order.  Constants first, then the twelve
# non-constant functions grouped by class.
FUNCTION_IDS: dict[str, TruthTable] = {
    "const0": TruthTable((0, 0, 0, 0)),
    "const1": TruthTable((1, 1, 1, 1)),
    "x1": TruthTable((0, 0, 1, 1)),
    "not_x1": TruthTable((1, 1, 0, 0)),
    "x2": TruthTable((0, 1, 0, 1)),
    "not_x2": TruthTable((1, 0, 1, 0)),
    "and": TruthTable((0, 0, 0, 1)),
    "nand": TruthTable((1, 1, 1, 0)),
    "or": TruthTable((0, 1, 1, 1)),
    "nor": TruthTable((1, 0, 0, 0)),
    "imp_1to2": TruthTable((1, 1, 0, 1)),
    "imp_2to1": TruthTable((1, 0, 1, 1)),
    "and_not2": TruthTable((0, 0, 1, 0)),
    "and_not1": TruthTable((0, 1, 0, 0)),
}

# Published example parameters for the 14 functions (the canonical grid
# witness from enumerate_separable is generally a different triple).
EXAMPLE_PARAMS: dict[str, PerceptronParams] = {
    "const0": PerceptronParams(0, 0, -1),
    "const1": PerceptronParams(0, 0, 1),
    "x1": PerceptronParams(1, 0, Fraction(-1, 2)),
    "not_x1": PerceptronParams(-1, 0, Fraction(1, 2)),
    "x2": PerceptronParams(0, 1, Fraction(-1, 2)),
    "not_x2": PerceptronParams(0, -1, Fraction(1, 2)),
    "and": PerceptronParams(1, 1, Fraction(-3, 2)),
    "nand": PerceptronParams(-1, -1, Fraction(3, 2)),
    "or": PerceptronParams(1, 1, Fraction(-1, 2)),
    "nor": PerceptronParams(-1, -1, Fraction(1, 2)),
    "imp_1to2": PerceptronParams(-1, 1, Fraction(1, 2)),
    "imp_2to1": PerceptronParams(1, -1, Fraction(1, 2)),
    "and_not2": PerceptronParams(1, -1, Fraction(-1, 2)),
    "and_not1": PerceptronParams(-1, 1, Fraction(-1, 2)),
}


class UnknownFunctionError(ValueError):
    pass


def resolve_function(token: str) -> TruthTable:
    """Map a CLI token (canonical id or 4-bit truth table string) to a function."""
    if token in FUNCTION_IDS:
        return FUNCTION_IDS[token]
    try:
        return TruthTable.from_string(token)
    except ValueError:
        raise UnknownFunctionError(f"unknown function {token!r}") from None


def id_of(t: TruthTable) -> str | None:
    for name, table in FUNCTION_IDS.items():
        if table == t:
            return name
    return None
