"""Numpy reference implementations of the two hot kernels.

Shapes and semantics are the contract for the compiled backend:

witness_value(wr, n1, n2, m1, m2)
    wr: float64 (2, 4, 4, 2, 2), witness weights / denominator, indexed
        [s, pair1, pair2, y1, y2].
    n1, n2: float64 (4, 3) Bloch vectors per input pair.
    m1, m2: float64 (2, 3) measurement directions per query s
        (outcome 0 along +direction).
    Returns p_cor: each party's outcome probability is
    (1 + (-1)^y n.m)/2 and the joint factorizes.

oracle_max_totals(weights)
    weights: int64 (2, 4, 4, 4) witness grid, [s, pair1, pair2, 2*y1+y2].
    For every encoder pair, enumerates all 4^8 deterministic decoders and
    records the best total routed weight.  Returns int64 (16, 16) in
    lexicographic encoder-table order.  Exact integer arithmetic.
"""
import itertools

import numpy as np

ENCODERS = list(itertools.product((0, 1), repeat=4))


def witness_value(wr, n1, n2, m1, m2):
    a1 = n1 @ m1.T  # (pair, s)
    a2 = n2 @ m2.T
    q1 = np.empty((4, 2, 2))
    q1[:, :, 0] = (1 + a1) / 2
    q1[:, :, 1] = (1 - a1) / 2
    q2 = np.empty((4, 2, 2))
    q2[:, :, 0] = (1 + a2) / 2
    q2[:, :, 1] = (1 - a2) / 2
    return float(np.einsum("sijab,isa,jsb->", wr, q1, q2))


def oracle_max_totals(weights):
    masks = np.zeros((16, 2, 4), dtype=np.int64)
    for e, table in enumerate(ENCODERS):
        for i, m in enumerate(table):
            masks[e, m, i] = 1
    totals = np.empty((16, 16), dtype=np.int64)
    for e1 in range(16):
        for e2 in range(16):
            cells = np.einsum("mi,nj,sijy->smny", masks[e1], masks[e2],
                              weights).reshape(8, 4)
            # running vector of totals over all decoders of the cells so far
            v = np.zeros(1, dtype=np.int64)
            for c in range(8):
                v = (v[:, None] + cells[c]).ravel()
            totals[e1, e2] = v.max()
    return totals
