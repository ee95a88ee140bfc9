import math
from fractions import Fraction

import numpy as np
import pytest

from percwit.classical import behavior_of, optimal_deterministic, paper_strategy
from percwit.perceptron import FUNCTION_IDS, classify
from percwit.quantum import (Povm, bloch_density, bloch_vector,
                             behavior_of_quantum, embed_classical,
                             paper_measurement, paper_quantum_strategy,
                             paper_state, strategy_from_json, strategy_to_json)
from percwit.witness import PAIRS, build_witness, evaluate

SQ = 1.0 / math.sqrt(2.0)


def test_reference_states_bloch_vectors():
    for x0 in (0, 1):
        for x1 in (0, 1):
            n = bloch_vector(paper_state(x0, x1).density)
            expected = np.array([(-1) ** x1 * SQ, 0.0, (-1) ** x0 * SQ])
            assert np.allclose(n, expected, atol=1e-12), (x0, x1)


def test_reference_states_are_pure():
    for pair in PAIRS:
        rho = paper_state(*pair).density
        assert np.allclose(rho @ rho, rho, atol=1e-12)


def test_measurement_families_are_valid_povms():
    for family in ("and", "single1", "single2"):
        for s in (0, 1):
            paper_measurement(family, s)  # validates in the constructor


def test_unknown_family_rejected():
    with pytest.raises(ValueError):
        paper_measurement("both", 0)


def test_single_party_family_halves_the_dummy_outcome():
    povm = paper_measurement("single1", 0)
    m00 = povm.effect((0, 0))
    m01 = povm.effect((0, 1))
    assert np.allclose(m00, m01, atol=1e-15)
    assert np.allclose(m00, np.diag([0.5, 0.5, 0.0, 0.0]), atol=1e-15)


def test_povm_validation_rejects_bad_sets():
    good = paper_measurement("and", 0)
    with pytest.raises(ValueError):
        Povm(good.effects[:3])
    scaled = tuple((y, 1.5 * m) for y, m in good.effects)
    with pytest.raises(ValueError):
        Povm(scaled)
    signed = tuple((y, -m if y == (0, 0) else m) for y, m in good.effects)
    with pytest.raises(ValueError):
        Povm(signed)


def test_single_variable_value():
    w = build_witness(FUNCTION_IDS["x1"])
    b = behavior_of_quantum(paper_quantum_strategy("single1"), w)
    v = evaluate(w, b)
    assert abs(v - (2 + math.sqrt(2)) / 4) <= 1e-12
    # Per-setting success is the same for every pair and both queries.
    for key in w.setting_keys():
        s, pair = key
        assert abs(b.probabilities[key][pair[s]] - (2 + math.sqrt(2)) / 4) <= 1e-12


def test_two_variable_value():
    w = build_witness(FUNCTION_IDS["and"])
    v = evaluate(w, behavior_of_quantum(paper_quantum_strategy("and"), w))
    assert abs(v - (11 + 2 * math.sqrt(2)) / 40) <= 1e-12


def test_joint_behavior_factorizes():
    w = build_witness(FUNCTION_IDS["and"])
    b = behavior_of_quantum(paper_quantum_strategy("and"), w)
    hi = (1 + SQ) / 2
    lo = (1 - SQ) / 2
    dist = b.probabilities[(0, (0, 0), (1, 1))]
    assert abs(dist[(0, 0)] - hi * lo) <= 1e-12
    assert abs(dist[(0, 1)] - hi * hi) <= 1e-12
    assert abs(dist[(1, 0)] - lo * lo) <= 1e-12
    assert abs(dist[(1, 1)] - lo * hi) <= 1e-12


def test_embedding_reproduces_classical_behavior_exactly():
    for fid in ("x1", "and", "imp_2to1"):
        table = FUNCTION_IDS[fid]
        w = build_witness(table)
        cert = optimal_deterministic(w)
        cb = behavior_of(cert.strategy, w)
        qb = behavior_of_quantum(embed_classical(cert.strategy), w)
        for key, dist in cb.probabilities.items():
            for y, p in dist.items():
                assert float(p) == qb.probabilities[key][y], (fid, key, y)
        assert float(cert.value) == evaluate(w, qb)


def test_embedding_requires_deterministic_decoder():
    cls = classify(FUNCTION_IDS["and"])
    with pytest.raises(ValueError):
        embed_classical(paper_strategy(cls))


def test_strategy_json_round_trip():
    st = paper_quantum_strategy("and")
    doc = strategy_to_json(st)
    back = strategy_from_json(doc)
    w = build_witness(FUNCTION_IDS["and"])
    v1 = evaluate(w, behavior_of_quantum(st, w))
    v2 = evaluate(w, behavior_of_quantum(back, w))
    assert abs(v1 - v2) <= 1e-12


def test_bloch_round_trip():
    n = np.array([0.3, -0.4, 0.5])
    assert np.allclose(bloch_vector(bloch_density(n)), n, atol=1e-12)
