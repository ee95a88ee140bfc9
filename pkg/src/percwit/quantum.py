"""Qubit strategies: reference states and measurements, Born-rule behaviors.

The reference preparation tilts the computational basis by pi/8 and maps
each party's input pair (x0, x1) to sigma_x^x0 sigma_z^x1 applied to
cos(pi/8)|0> + sin(pi/8)|1>, i.e. Bloch vectors ((-1)^x1/sqrt2, 0,
(-1)^x0/sqrt2).  The node measures per query s: computational bases at
s=0, Hadamard bases at s=1, with sign convention outcome 0 <-> |+>.
(The published appendix table swaps the |+>/|-> assignment on two of the
single-variable rows; under the correct-set definition used here that
swap would score exactly 1/2 instead of (2+sqrt2)/4, so the main
convention is used for all four single-variable functions.)
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import qmath
from .classical import OUTCOMES, ClassicalStrategy
from .qmath import (I2, KET0, KET1, KET_MINUS, KET_PLUS, QubitState,
                    hermitian_eigenvalues, is_hermitian, projector, tensor,
                    trace_product)
from .witness import PAIRS, Behavior, Witness


@dataclass(frozen=True)
class Povm:
    """A 4-outcome measurement on the two incoming qubits.

    Effects are Hermitian PSD operators summing to the identity, labeled
    by the joint outcomes (y1, y2), each exactly once.
    """

    effects: tuple

    def __post_init__(self):
        object.__setattr__(self, "effects",
                           tuple((tuple(y), np.asarray(m, dtype=complex))
                                 for y, m in self.effects))
        validate_povm(self)

    def effect(self, y: tuple[int, int]) -> np.ndarray:
        for label, m in self.effects:
            if label == y:
                return m
        raise KeyError(y)


def validate_povm(p: Povm) -> None:
    labels = [y for y, _ in p.effects]
    if sorted(labels) != sorted(OUTCOMES):
        raise ValueError(f"outcome labels {labels} must cover {OUTCOMES} once")
    total = np.zeros((4, 4), dtype=complex)
    for y, m in p.effects:
        if m.shape != (4, 4):
            raise ValueError(f"effect {y} has shape {m.shape}, expected 4x4")
        if not is_hermitian(m):
            raise ValueError(f"effect {y} is not Hermitian")
        if hermitian_eigenvalues(m)[0] < qmath.PSD_TOL:
            raise ValueError(f"effect {y} is not positive semidefinite")
        total += m
    if np.max(np.abs(total - qmath.I4)) > qmath.HERMITIAN_TOL:
        raise ValueError("effects do not sum to the identity")


@dataclass(frozen=True)
class QuantumStrategy:
    """Four states per party and one 4-outcome POVM per node query."""

    states1: dict
    states2: dict
    measurements: dict

    def __post_init__(self):
        for states in (self.states1, self.states2):
            if sorted(states) != sorted(PAIRS):
                raise ValueError("states must be keyed by the four input pairs")
        if sorted(self.measurements) != [0, 1]:
            raise ValueError("measurements must be keyed by s in {0, 1}")


def bloch_density(n: np.ndarray) -> np.ndarray:
    """Density operator (I + n.sigma)/2 of a Bloch vector, |n| <= 1."""
    nx, ny, nz = (float(v) for v in n)
    return (I2 + nx * qmath.SX + ny * qmath.SY + nz * qmath.SZ) / 2


def bloch_vector(rho: np.ndarray) -> np.ndarray:
    return np.array([trace_product(rho, qmath.SX),
                     trace_product(rho, qmath.SY),
                     trace_product(rho, qmath.SZ)])


def paper_state(x0: int, x1: int) -> QubitState:
    """Reference encoding of the input pair (x0, x1)."""
    vec = np.cos(np.pi / 8) * KET0 + np.sin(np.pi / 8) * KET1
    if x1:
        vec = qmath.SZ @ vec
    if x0:
        vec = qmath.SX @ vec
    return QubitState(projector(vec))


def paper_states() -> dict:
    return {pair: paper_state(*pair) for pair in PAIRS}


_HADAMARD_KETS = (KET_PLUS, KET_MINUS)  # |+_0>, |+_1>
_COMP_KETS = (KET0, KET1)


def paper_measurement(family: str, s: int) -> Povm:
    """Reference POVM of a measurement family at query s.

    family "and": full product bases, effects |i><i| x |j><j| at s=0 and
    |+_i><+_i| x |+_j><+_j| at s=1 (|+_0>, |+_1> the Hadamard basis).
    family "single1"/"single2": the scored party measures the same bases
    while the other factor is the identity; the unscored outcome bit is a
    fair coin, realized as two half-weight copies of each effect so the
    POVM keeps a uniform 4-outcome type.
    """
    kets = _COMP_KETS if s == 0 else _HADAMARD_KETS
    effects = []
    if family == "and":
        for y1, y2 in OUTCOMES:
            effects.append(((y1, y2), tensor(projector(kets[y1]),
                                             projector(kets[y2]))))
    elif family in ("single1", "single2"):
        for y1, y2 in OUTCOMES:
            scored = y1 if family == "single1" else y2
            half = projector(kets[scored]) / 2
            mat = tensor(half, I2) if family == "single1" else tensor(I2, half)
            effects.append(((y1, y2), mat))
    else:
        raise ValueError(f"unknown measurement family {family!r}")
    return Povm(tuple(effects))


def paper_quantum_strategy(family: str) -> QuantumStrategy:
    return QuantumStrategy(paper_states(), paper_states(),
                           {s: paper_measurement(family, s) for s in (0, 1)})


def behavior_of_quantum(st: QuantumStrategy, w: Witness) -> Behavior:
    """Born-rule compilation of a quantum strategy onto a witness's settings."""
    for povm in st.measurements.values():
        validate_povm(povm)
    joint = {}
    for s in (0, 1):
        for p1 in PAIRS:
            for p2 in PAIRS:
                rho = tensor(st.states1[p1].density, st.states2[p2].density)
                joint[(s, p1, p2)] = {
                    y: trace_product(m, rho) for y, m in st.measurements[s].effects}
    if not w.reduced:
        return Behavior(joint)
    party = w.scored_party
    probs = {}
    for s in (0, 1):
        for pair in PAIRS:
            dist = {0: 0.0, 1: 0.0}
            for other in PAIRS:
                p1, p2 = (pair, other) if party == 1 else (other, pair)
                for (y1, y2), p in joint[(s, p1, p2)].items():
                    dist[y1 if party == 1 else y2] += p / 4
            probs[(s, pair)] = dist
    return Behavior(probs)


def embed_classical(st: ClassicalStrategy) -> QuantumStrategy:
    """Represent a deterministic classical strategy as a quantum one.

    Message bits become computational-basis states; the decoder becomes a
    diagonal projective measurement whose effect for outcome y sums the
    basis projectors of all message pairs the decoder maps to y.
    """
    if not st.deterministic:
        raise ValueError("only deterministic strategies embed")
    states1 = {pair: QubitState(projector(_COMP_KETS[st.encoder1[2 * pair[0] + pair[1]]]))
               for pair in PAIRS}
    states2 = {pair: QubitState(projector(_COMP_KETS[st.encoder2[2 * pair[0] + pair[1]]]))
               for pair in PAIRS}
    measurements = {}
    for s in (0, 1):
        mats = {y: np.zeros((4, 4), dtype=complex) for y in OUTCOMES}
        for m1 in (0, 1):
            for m2 in (0, 1):
                image = next(y for y, p in st.decoder[(m1, m2, s)].items() if p == 1)
                mats[image] += tensor(projector(_COMP_KETS[m1]),
                                      projector(_COMP_KETS[m2]))
        measurements[s] = Povm(tuple(mats.items()))
    return QuantumStrategy(states1, states2, measurements)


def strategy_to_json(st: QuantumStrategy) -> dict:
    """Interchange form: states as Bloch vectors, effects as [re, im] entries."""
    def key(pair):
        return f"{pair[0]}{pair[1]}"

    return {
        "states1": {key(p): [round(v, 15) for v in bloch_vector(st.states1[p].density)]
                    for p in PAIRS},
        "states2": {key(p): [round(v, 15) for v in bloch_vector(st.states2[p].density)]
                    for p in PAIRS},
        "measurements": {
            str(s): {key(y): [[v.real, v.imag] for v in m.ravel()]
                     for y, m in st.measurements[s].effects}
            for s in (0, 1)},
    }


def strategy_from_json(doc: dict) -> QuantumStrategy:
    def unkey(text):
        return (int(text[0]), int(text[1]))

    states = []
    for field in ("states1", "states2"):
        states.append({unkey(k): QubitState(bloch_density(np.asarray(v)))
                       for k, v in doc[field].items()})
    measurements = {}
    for s_text, effects in doc["measurements"].items():
        effs = []
        for y_text, entries in effects.items():
            mat = np.array([complex(re, im) for re, im in entries]).reshape(4, 4)
            effs.append((unkey(y_text), mat))
        measurements[int(s_text)] = Povm(tuple(effs))
    return QuantumStrategy(states[0], states[1], measurements)
