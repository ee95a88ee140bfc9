from fractions import Fraction

import pytest

from percwit.classical import (ClassicalStrategy, behavior_of,
                               optimal_deterministic, paper_strategy)
from percwit.perceptron import FUNCTION_IDS, classify
from percwit.witness import PAIRS, build_witness, evaluate

POINT = {(y1, y2): Fraction(0) for y1 in (0, 1) for y2 in (0, 1)}


def point_mass(y):
    dist = dict(POINT)
    dist[y] = Fraction(1)
    return dist


def guess_strategy(y_guess):
    """Forward slot-0 bits, decode to the messages at s=0, guess at s=1."""
    decoder = {}
    for m1 in (0, 1):
        for m2 in (0, 1):
            decoder[(m1, m2, 0)] = point_mass((m1, m2))
            decoder[(m1, m2, 1)] = point_mass(y_guess)
    return ClassicalStrategy((0, 0, 1, 1), (0, 0, 1, 1), decoder)


def test_reference_strategy_values_are_exact():
    for fid in FUNCTION_IDS:
        if fid.startswith("const"):
            continue
        table = FUNCTION_IDS[fid]
        w = build_witness(table)
        value = evaluate(w, behavior_of(paper_strategy(classify(table)), w))
        expected = Fraction(3, 4) if w.reduced else Fraction(13, 40)
        assert value == expected, fid


def test_reference_strategy_rejects_constants():
    with pytest.raises(ValueError):
        paper_strategy(classify(FUNCTION_IDS["const0"]))


def test_reference_behavior_structure():
    w = build_witness(FUNCTION_IDS["and"])
    b = behavior_of(paper_strategy(classify(FUNCTION_IDS["and"])), w)
    for p1 in PAIRS:
        for p2 in PAIRS:
            dist0 = b.probabilities[(0, p1, p2)]
            assert dist0[(p1[0], p2[0])] == 1
            dist1 = b.probabilities[(1, p1, p2)]
            assert all(v == Fraction(1, 4) for v in dist1.values())


def test_optimum_for_and_beats_the_reference():
    w = build_witness(FUNCTION_IDS["and"])
    cert = optimal_deterministic(w)
    assert cert.value == Fraction(7, 20)
    assert cert.enumeration_size == 16 * 16 * 4 ** 8
    # The certificate strategy must reproduce the claimed value exactly.
    assert evaluate(w, behavior_of(cert.strategy, w)) == cert.value


def test_explicit_guessing_strategy_value():
    w = build_witness(FUNCTION_IDS["and"])
    st = guess_strategy((0, 0))
    assert evaluate(w, behavior_of(st, w)) == Fraction(7, 20)
    st_or = guess_strategy((1, 1))
    w_or = build_witness(FUNCTION_IDS["or"])
    assert evaluate(w_or, behavior_of(st_or, w_or)) == Fraction(7, 20)


def test_single_variable_optimum():
    w = build_witness(FUNCTION_IDS["x2"])
    cert = optimal_deterministic(w)
    assert cert.value == Fraction(3, 4)


def test_optimum_is_deterministic_across_runs():
    w = build_witness(FUNCTION_IDS["nand"])
    a = optimal_deterministic(w)
    b = optimal_deterministic(w)
    assert a.strategy.encoder1 == b.strategy.encoder1
    assert a.strategy.encoder2 == b.strategy.encoder2
    assert a.strategy.decoder == b.strategy.decoder


def test_behavior_of_reduced_witness_marginalizes_uniformly():
    w = build_witness(FUNCTION_IDS["x1"])
    st = guess_strategy((0, 1))
    b = behavior_of(st, w)
    # s=0: the node echoes party 1's forwarded slot-0 bit.
    for pair in PAIRS:
        assert b.probabilities[(0, pair)][pair[0]] == 1
    # s=1: the fixed guess y1=0 is echoed whatever the input.
    for pair in PAIRS:
        assert b.probabilities[(1, pair)][0] == 1


def test_strategy_validation():
    with pytest.raises(ValueError):
        ClassicalStrategy((0, 0, 1), (0, 0, 1, 1), {})
    with pytest.raises(ValueError):
        ClassicalStrategy((0, 0, 1, 2), (0, 0, 1, 1), {})
    decoder = {(m1, m2, s): point_mass((0, 0))
               for m1 in (0, 1) for m2 in (0, 1) for s in (0, 1)}
    bad = dict(decoder)
    bad[(0, 0, 0)] = {k: Fraction(1, 2) for k in POINT}
    with pytest.raises(ValueError):
        ClassicalStrategy((0, 0, 1, 1), (0, 0, 1, 1), bad)
    ok = ClassicalStrategy((0, 0, 1, 1), (0, 0, 1, 1), decoder)
    assert ok.deterministic
