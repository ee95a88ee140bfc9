from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, strategies as st

from percwit import perceptron as pc

# All 16 output columns, the two parity columns excluded.
SEPARABLE_OUTPUTS = {
    (0, 0, 0, 0), (1, 1, 1, 1),
    (0, 0, 1, 1), (1, 1, 0, 0), (0, 1, 0, 1), (1, 0, 1, 0),
    (0, 0, 0, 1), (1, 1, 1, 0), (0, 1, 1, 1), (1, 0, 0, 0),
    (1, 1, 0, 1), (1, 0, 1, 1), (0, 0, 1, 0), (0, 1, 0, 0),
}


def test_enumeration_finds_exactly_the_separable_functions():
    rows = pc.enumerate_separable()
    assert len(rows) == 14
    assert {t.outputs for t, _, _ in rows} == SEPARABLE_OUTPUTS


def test_enumeration_is_deterministic():
    a = pc.enumerate_separable()
    b = pc.enumerate_separable()
    assert [(t.outputs, p, c.tag) for t, p, c in a] == \
        [(t.outputs, p, c.tag) for t, p, c in b]


def test_canonical_params_are_first_on_the_grid():
    # Independent re-scan: the stored triple must be the lexicographically
    # first realizer over the half-integer grid.
    grid = [Fraction(k, 2) for k in range(-4, 5)]
    for table, params, _ in pc.enumerate_separable():
        found = next(
            trip for trip in product(grid, repeat=3)
            if pc.truth_table(pc.PerceptronParams(*trip)) == table)
        assert (params.w1, params.w2, params.b) == found


def test_example_params_realize_their_functions():
    for fid, params in pc.EXAMPLE_PARAMS.items():
        assert pc.truth_table(params) == pc.FUNCTION_IDS[fid], fid


def test_threshold_convention_at_zero():
    # w1*y1 + w2*y2 + b >= 0 fires the output, boundary included.
    params = pc.PerceptronParams(Fraction(1), Fraction(1), Fraction(-2))
    assert pc.eval_threshold(params, 1, 1) == 1
    assert pc.eval_threshold(params, 0, 1) == 0


def test_params_validation():
    with pytest.raises(ValueError):
        pc.PerceptronParams(Fraction(1, 3), Fraction(0), Fraction(0))
    with pytest.raises(ValueError):
        pc.PerceptronParams(Fraction(1), "2/3", Fraction(0))
    # Any half-integer is allowed; only the enumeration grid is bounded.
    assert pc.PerceptronParams(3, 0, "-7/2").b == Fraction(-7, 2)


def test_classify_tags():
    assert pc.classify(pc.TruthTable((0, 0, 0, 0))).tag == pc.CONSTANT
    assert pc.classify(pc.TruthTable((0, 0, 1, 1))).tag == pc.SINGLE_VARIABLE
    assert pc.classify(pc.TruthTable((0, 0, 0, 1))).tag == pc.AND_OR
    assert pc.classify(pc.TruthTable((1, 1, 0, 1))).tag == pc.ASYMMETRIC
    assert pc.classify(pc.TruthTable((0, 1, 1, 0))).tag == pc.NON_SEPARABLE
    assert pc.classify(pc.TruthTable((0, 1, 0, 1))).dependent_vars == \
        frozenset({2})


@given(st.tuples(*[st.integers(0, 1)] * 4))
def test_classify_dependence_matches_brute_force(outputs):
    table = pc.TruthTable(outputs)
    cls = pc.classify(table)
    dep1 = any(table(0, y2) != table(1, y2) for y2 in (0, 1))
    dep2 = any(table(y1, 0) != table(y1, 1) for y1 in (0, 1))
    expected = frozenset(p for p, d in ((1, dep1), (2, dep2)) if d)
    assert cls.dependent_vars == expected
    assert (cls.tag == pc.CONSTANT) == (not expected)


def test_resolve_function_accepts_ids_and_bitstrings():
    assert pc.resolve_function("and") == pc.FUNCTION_IDS["and"]
    assert pc.resolve_function("0001") == pc.FUNCTION_IDS["and"]
    assert pc.resolve_function("0110") == pc.TruthTable((0, 1, 1, 0))
    with pytest.raises(pc.UnknownFunctionError):
        pc.resolve_function("andd")
    with pytest.raises(pc.UnknownFunctionError):
        pc.resolve_function("00011")


def test_id_round_trip():
    for fid, table in pc.FUNCTION_IDS.items():
        assert pc.id_of(table) == fid
    assert pc.id_of(pc.TruthTable((0, 1, 1, 0))) is None


def test_truth_table_string_form():
    t = pc.TruthTable.from_string("1101")
    assert str(t) == "1101"
    assert t(0, 0) == 1 and t(1, 0) == 0
    with pytest.raises(ValueError):
        pc.TruthTable.from_string("12a0")
