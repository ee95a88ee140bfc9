"""Classical strategies under the one-bit channel restriction.

Each input party maps its two bits to a single message bit; the node maps
the two messages and its query s to an outcome distribution.  The exact
deterministic optimum of a witness is found by enumerating all 16 x 16
encoder pairs and, for each, choosing the best outcome per decoder cell
(m1, m2, s).  Cells partition the settings, so per-cell argmax realizes
the global decoder optimum; the slow full enumeration in the oracles
module validates this shortcut rather than trusting it.

All values are exact rationals: deterministic behaviors have entries in
{0, 1} and the published randomized strategy has entries in {0, 1/4, 1},
so claims like beta_C = 13/40 are checked with exact equality.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .perceptron import CONSTANT, FunctionClass
from .witness import PAIRS, Behavior, Witness

OUTCOMES = ((0, 0), (0, 1), (1, 0), (1, 1))


@dataclass(frozen=True)
class ClassicalStrategy:
    """Two 2-bit -> 1-bit encoders and a node decoder.

    encoder tables are indexed by input pair (order 00, 01, 10, 11); the
    decoder maps (m1, m2, s) to a distribution over joint outcomes,
    represented exactly as Fractions.
    """

    encoder1: tuple[int, int, int, int]
    encoder2: tuple[int, int, int, int]
    decoder: dict

    def __post_init__(self):
        for enc in (self.encoder1, self.encoder2):
            if len(enc) != 4 or any(m not in (0, 1) for m in enc):
                raise ValueError(f"invalid encoder table {enc}")
        for m1 in (0, 1):
            for m2 in (0, 1):
                for s in (0, 1):
                    dist = self.decoder[(m1, m2, s)]
                    total = sum(dist.values())
                    if abs(float(total) - 1.0) > 1e-12 or min(dist.values()) < 0:
                        raise ValueError(f"invalid decoder cell ({m1},{m2},{s})")

    @property
    def deterministic(self) -> bool:
        return all(p in (0, 1) for dist in self.decoder.values()
                   for p in dist.values())


@dataclass(frozen=True)
class BoundCertificate:
    """An exact optimal value plus the strategy achieving it.

    enumeration_size counts the deterministic strategies the certificate
    dominates (16 encoders each side x 4^8 decoders), not the number of
    evaluations the cell decomposition performed.
    """

    value: Fraction
    strategy: ClassicalStrategy
    enumeration_size: int

    def __post_init__(self):
        if not (0 <= self.value <= 1):
            raise ValueError(f"bound {self.value} outside [0, 1]")
        if not self.strategy.deterministic:
            raise ValueError("certificate strategy must be deterministic")


def behavior_of(st: ClassicalStrategy, w: Witness) -> Behavior:
    """Compile a strategy into the witness's conditional distributions.

    Reduced witnesses marginalize: the scored party's outcome bit is kept
    and the unscored party's input pair is averaged uniformly.
    """
    probs = {}
    if w.reduced:
        party = w.scored_party
        for s in (0, 1):
            for pair in PAIRS:
                dist = {0: Fraction(0), 1: Fraction(0)}
                for other in PAIRS:
                    p1, p2 = (pair, other) if party == 1 else (other, pair)
                    cell = st.decoder[(st.encoder1[2 * p1[0] + p1[1]],
                                       st.encoder2[2 * p2[0] + p2[1]], s)]
                    for (y1, y2), p in cell.items():
                        dist[y1 if party == 1 else y2] += Fraction(p) / 4
                probs[(s, pair)] = dist
    else:
        for s in (0, 1):
            for p1 in PAIRS:
                for p2 in PAIRS:
                    cell = st.decoder[(st.encoder1[2 * p1[0] + p1[1]],
                                       st.encoder2[2 * p2[0] + p2[1]], s)]
                    probs[(s, p1, p2)] = {y: Fraction(p) for y, p in cell.items()}
    return Behavior(probs)


def paper_strategy(cls: FunctionClass) -> ClassicalStrategy:
    """The published reference strategy: forward the slot-0 bits.

    Both encoders send x_{i,0}; at s=0 the node outputs the messages
    verbatim, at s=1 it guesses uniformly.
    """
    if cls.tag == CONSTANT:
        raise ValueError("constant functions have no witness strategy")
    decoder = {}
    for m1 in (0, 1):
        for m2 in (0, 1):
            decoder[(m1, m2, 0)] = {y: Fraction(1 if y == (m1, m2) else 0)
                                    for y in OUTCOMES}
            decoder[(m1, m2, 1)] = {y: Fraction(1, 4) for y in OUTCOMES}
    return ClassicalStrategy((0, 0, 1, 1), (0, 0, 1, 1), decoder)


# Encoder tables in lexicographic order; index doubles as the lex rank.
ENCODERS = list(itertools.product((0, 1), repeat=4))


def optimal_deterministic(w: Witness) -> BoundCertificate:
    """Exact deterministic optimum with a lexicographically-first certificate.

    For every encoder pair the witness weights route to the eight decoder
    cells; the best decoder picks, per cell, the outcome with the largest
    routed weight.  Ties break lexicographically on (encoder1, encoder2,
    decoder table), with outcomes ordered (0,0) < (0,1) < (1,0) < (1,1).
    """
    weights, denominator = w.weight_grid()
    # masks[e, m, i] = 1 iff encoder table e sends pair i to message m
    masks = np.zeros((16, 2, 4), dtype=np.int64)
    for e, table in enumerate(ENCODERS):
        for i, m in enumerate(table):
            masks[e, m, i] = 1
    # cell[e1, e2, s, m1, m2, y] = total witness weight routed to the cell
    cell = np.einsum("ami,bnj,sijy->absmny", masks, masks, weights)
    totals = cell.max(axis=5).sum(axis=(2, 3, 4))
    best = int(totals.max())
    e1, e2 = np.argwhere(totals == best)[0]  # row-major argwhere = lex-first

    decoder = {}
    for m1 in (0, 1):
        for m2 in (0, 1):
            for s in (0, 1):
                y = int(np.argmax(cell[e1, e2, s, m1, m2]))  # first max = lex-first
                decoder[(m1, m2, s)] = {out: Fraction(1 if idx == y else 0)
                                        for idx, out in enumerate(OUTCOMES)}
    strategy = ClassicalStrategy(ENCODERS[e1], ENCODERS[e2], decoder)
    return BoundCertificate(value=Fraction(best, denominator),
                            strategy=strategy,
                            enumeration_size=16 * 16 * 4 ** 8)
