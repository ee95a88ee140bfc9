"""Derivative-free search over parameterized qubit strategies.

The search space is pure product states with product rank-1 projective
measurements: one Bloch direction per input pair per party (8 pairs of
angles) and one measurement direction per party per query (4 pairs),
24 reals total.  A Nelder-Mead simplex with random restarts maximizes
the witness value; every restart derives its own pseudorandom stream
from (seed, restart index), so results are reproducible.

Reported best values are numerical lower bounds on the quantum optimum,
never certified maxima.  Note the space does not contain every classical
embedding: effects here have rank exactly 1, while a decoder that merges
message pairs embeds to a higher-rank projector, so classical optima
that need constant decoders may exceed anything reachable here.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _core
from .qmath import QubitState
from .quantum import (Povm, QuantumStrategy, behavior_of_quantum,
                      bloch_density, bloch_vector)
from .witness import PAIRS, Witness, evaluate

VECTOR_LENGTH = 24

# Vector layout: 8 state angle pairs (party 1 pairs 00,01,10,11, then
# party 2), then 4 measurement angle pairs in query-major order
# ((s=0, party 1), (s=0, party 2), (s=1, party 1), (s=1, party 2)).
# Each pair is (theta, phi).
_MEAS_ROWS_P1 = (8, 10)  # rows of the direction table, per query
_MEAS_ROWS_P2 = (9, 11)


@dataclass(frozen=True)
class StrategyParams:
    """A 24-vector of Bloch angles; any real values are accepted and wrap."""

    vector: np.ndarray

    def __post_init__(self):
        v = np.asarray(self.vector, dtype=float)
        if v.shape != (VECTOR_LENGTH,) or not np.all(np.isfinite(v)):
            raise ValueError("expected 24 finite angle values")
        object.__setattr__(self, "vector", v)

    @property
    def state_angles(self) -> np.ndarray:
        return self.vector[:16].reshape(8, 2)

    @property
    def meas_angles(self) -> np.ndarray:
        return self.vector[16:].reshape(4, 2)


@dataclass(frozen=True)
class OptimizerConfig:
    restarts: int = 64
    max_iters: int = 2000
    tol: float = 1e-10
    seed: int = 0

    def __post_init__(self):
        if self.restarts <= 0 or self.max_iters <= 0:
            raise ValueError("restarts and max_iters must be positive")
        if not 0 < self.tol < 1:
            raise ValueError("tolerance must lie in (0, 1)")


@dataclass(frozen=True)
class SearchResult:
    best_value: float
    best_params: StrategyParams
    best_strategy: QuantumStrategy
    restarts_run: int
    paper_value: float | None
    flag_exceeds_paper: bool


def _directions(vec: np.ndarray) -> np.ndarray:
    """Unit vectors of the 12 (theta, phi) pairs; total in the angles."""
    pairs = np.asarray(vec, dtype=float).reshape(12, 2)
    theta, phi = pairs[:, 0], pairs[:, 1]
    sin_t = np.sin(theta)
    return np.stack([sin_t * np.cos(phi), sin_t * np.sin(phi),
                     np.cos(theta)], axis=1)


def _split(dirs: np.ndarray):
    n1 = np.ascontiguousarray(dirs[0:4])
    n2 = np.ascontiguousarray(dirs[4:8])
    m1 = np.ascontiguousarray(dirs[list(_MEAS_ROWS_P1)])
    m2 = np.ascontiguousarray(dirs[list(_MEAS_ROWS_P2)])
    return n1, n2, m1, m2


def realize(p: StrategyParams) -> QuantumStrategy:
    """Compile angles to states and product-projector POVMs.

    Out-of-range angles wrap deterministically through the direction map
    (theta, phi) -> (sin t cos p, sin t sin p, cos t).
    """
    n1, n2, m1, m2 = _split(_directions(p.vector))
    states1 = {pair: QubitState(bloch_density(n1[i])) for i, pair in enumerate(PAIRS)}
    states2 = {pair: QubitState(bloch_density(n2[i])) for i, pair in enumerate(PAIRS)}
    measurements = {}
    for s in (0, 1):
        locals1 = (bloch_density(m1[s]), bloch_density(-m1[s]))
        locals2 = (bloch_density(m2[s]), bloch_density(-m2[s]))
        effects = tuple(((y1, y2), np.kron(locals1[y1], locals2[y2]))
                        for y1 in (0, 1) for y2 in (0, 1))
        measurements[s] = Povm(effects)
    return QuantumStrategy(states1, states2, measurements)


def objective(w: Witness):
    """Negated witness value as a total function of the 24-vector."""
    weights, den = w.weight_grid()
    wr = np.ascontiguousarray(weights.reshape(2, 4, 4, 2, 2).astype(float) / den)

    def f(vec: np.ndarray) -> float:
        n1, n2, m1, m2 = _split(_directions(vec))
        return -_core.witness_value(wr, n1, n2, m1, m2)

    return f


def nelder_mead(f, x0: np.ndarray, max_iters: int, tol: float):
    """Simplex minimization: reflect 1, expand 2, contract 1/2, shrink 1/2.

    Stops when the simplex f-spread drops below tol or after max_iters
    iterations; returns (best point, best value, iterations used).
    """
    n = len(x0)
    simplex = np.empty((n + 1, n))
    simplex[0] = x0
    for i in range(n):
        simplex[i + 1] = x0
        simplex[i + 1, i] += 0.25
    fvals = np.array([f(x) for x in simplex])

    iters = 0
    for iters in range(1, max_iters + 1):
        order = np.argsort(fvals, kind="stable")
        simplex, fvals = simplex[order], fvals[order]
        if fvals[-1] - fvals[0] <= tol:
            break
        centroid = simplex[:-1].mean(axis=0)
        xr = centroid + (centroid - simplex[-1])
        fr = f(xr)
        if fr < fvals[0]:
            xe = centroid + 2.0 * (xr - centroid)
            fe = f(xe)
            if fe < fr:
                simplex[-1], fvals[-1] = xe, fe
            else:
                simplex[-1], fvals[-1] = xr, fr
        elif fr < fvals[-2]:
            simplex[-1], fvals[-1] = xr, fr
        else:
            if fr < fvals[-1]:  # outside contraction
                xc = centroid + 0.5 * (xr - centroid)
                fc = f(xc)
                accept = fc <= fr
            else:  # inside contraction
                xc = centroid - 0.5 * (centroid - simplex[-1])
                fc = f(xc)
                accept = fc < fvals[-1]
            if accept:
                simplex[-1], fvals[-1] = xc, fc
            else:  # shrink toward the best vertex
                for i in range(1, n + 1):
                    simplex[i] = simplex[0] + 0.5 * (simplex[i] - simplex[0])
                    fvals[i] = f(simplex[i])
    order = np.argsort(fvals, kind="stable")
    return simplex[order[0]], fvals[order[0]], iters


def _initial_point(rng: np.random.Generator) -> np.ndarray:
    """Haar-uniform directions: uniform in cos(theta) and phi per pair."""
    theta = np.arccos(rng.uniform(-1.0, 1.0, 12))
    phi = rng.uniform(0.0, 2.0 * np.pi, 12)
    vec = np.empty(VECTOR_LENGTH)
    vec[0::2] = theta
    vec[1::2] = phi
    return vec


def params_of_strategy(st: QuantumStrategy) -> StrategyParams:
    """Angles of a pure-product-projective strategy (for warm starts).

    Raises if a state is mixed or a measurement is not a product of
    rank-1 projectors, since such strategies have no 24-angle preimage.
    """
    def angles_of(n: np.ndarray) -> tuple[float, float]:
        if abs(np.linalg.norm(n) - 1.0) > 1e-9:
            raise ValueError("state or effect is not pure")
        theta = float(np.arccos(np.clip(n[2], -1.0, 1.0)))
        phi = float(np.arctan2(n[1], n[0]) % (2 * np.pi))
        return theta, phi

    vec = np.empty(VECTOR_LENGTH)
    k = 0
    for states in (st.states1, st.states2):
        for pair in PAIRS:
            vec[k], vec[k + 1] = angles_of(bloch_vector(states[pair].density))
            k += 2
    meas_dirs = {}
    for s in (0, 1):
        e00 = st.measurements[s].effect((0, 0)).reshape(2, 2, 2, 2)
        t1 = np.einsum("acbc->ab", e00)
        t2 = np.einsum("cacb->ab", e00)
        locals1 = (t1, np.eye(2) - t1)
        locals2 = (t2, np.eye(2) - t2)
        for (y1, y2) in ((0, 0), (0, 1), (1, 0), (1, 1)):
            expected = np.kron(locals1[y1], locals2[y2])
            if np.max(np.abs(st.measurements[s].effect((y1, y2)) - expected)) > 1e-9:
                raise ValueError("measurement is not a rank-1 product projector")
        meas_dirs[(s, 1)] = angles_of(bloch_vector(t1))
        meas_dirs[(s, 2)] = angles_of(bloch_vector(t2))
    for s in (0, 1):
        for party in (1, 2):
            vec[k], vec[k + 1] = meas_dirs[(s, party)]
            k += 2
    return StrategyParams(vec)


def search(w: Witness, cfg: OptimizerConfig,
           paper_value: float | None = None,
           warm_start: QuantumStrategy | None = None) -> SearchResult:
    """Restarted Nelder-Mead maximization of the witness value.

    Restart r starts from a pseudorandom point derived from
    (cfg.seed, r); a warm-start strategy, when given, replaces restart
    0's initial point.  The maximum over restarts is returned, lower
    restart index winning ties.  flag_exceeds_paper is set when a
    reference value is supplied and beaten by more than 1e-7.
    """
    f = objective(w)
    best_value = -np.inf
    best_x = None
    for r in range(cfg.restarts):
        if r == 0 and warm_start is not None:
            x0 = params_of_strategy(warm_start).vector
        else:
            x0 = _initial_point(np.random.default_rng([cfg.seed, r]))
        x, fx, _ = nelder_mead(f, x0, cfg.max_iters, cfg.tol)
        if -fx > best_value:
            best_value, best_x = -fx, x

    best_params = StrategyParams(best_x)
    best_strategy = realize(best_params)
    check = evaluate(w, behavior_of_quantum(best_strategy, w))
    assert abs(check - best_value) <= 1e-9, \
        f"strategy recompilation drifted: {check} vs {best_value}"
    exceeds = paper_value is not None and best_value > paper_value + 1e-7
    return SearchResult(best_value=best_value, best_params=best_params,
                        best_strategy=best_strategy, restarts_run=cfg.restarts,
                        paper_value=paper_value, flag_exceeds_paper=exceeds)
