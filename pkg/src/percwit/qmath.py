"""Dense complex linear algebra for 2x2 and 4x4 Hermitian operators.

Everything downstream (Born-rule evaluation, POVM validation) funnels
through the handful of operations here, so the validation rules live
here too: algebraic identities are checked at 1e-12, eigenvalue
positivity at -1e-10.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

HERMITIAN_TOL = 1e-12
PSD_TOL = -1e-10

I2 = np.eye(2, dtype=complex)
I4 = np.eye(4, dtype=complex)
SX = np.array([[0, 1], [1, 0]], dtype=complex)
SY = np.array([[0, -1j], [1j, 0]], dtype=complex)
SZ = np.array([[1, 0], [0, -1]], dtype=complex)

KET0 = np.array([1, 0], dtype=complex)
KET1 = np.array([0, 1], dtype=complex)
KET_PLUS = np.array([1, 1], dtype=complex) / np.sqrt(2)
KET_MINUS = np.array([1, -1], dtype=complex) / np.sqrt(2)


def projector(vec: np.ndarray) -> np.ndarray:
    """Rank-1 projector |v><v| of a normalized state vector."""
    v = np.asarray(vec, dtype=complex)
    return np.outer(v, v.conj())


def check_matrix(a: np.ndarray) -> np.ndarray:
    """Validate an operator argument: square, dim 2 or 4, finite entries."""
    a = np.asarray(a, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    if a.shape[0] not in (2, 4):
        raise ValueError(f"expected dimension 2 or 4, got {a.shape[0]}")
    if not np.all(np.isfinite(a)):
        raise ValueError("matrix entries must be finite")
    return a


def is_hermitian(a: np.ndarray, tol: float = HERMITIAN_TOL) -> bool:
    a = np.asarray(a, dtype=complex)
    return bool(np.max(np.abs(a - a.conj().T)) <= tol)


def tensor(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Kronecker product of two single-qubit operators.

    Index convention: row a*2 + row b, so the first factor is party 1 and
    the two-qubit basis label is y1*2 + y2.
    """
    a = check_matrix(a)
    b = check_matrix(b)
    if a.shape[0] != 2 or b.shape[0] != 2:
        raise ValueError("tensor expects two 2x2 operators")
    return np.kron(a, b)


def trace_product(a: np.ndarray, b: np.ndarray) -> float:
    """Re Tr(a b) for Hermitian a, b of equal dimension.

    The imaginary part is a numerical residue for Hermitian inputs and is
    asserted to stay below 1e-12.
    """
    a = check_matrix(a)
    b = check_matrix(b)
    if a.shape != b.shape:
        raise ValueError(f"dimension mismatch: {a.shape} vs {b.shape}")
    if not (is_hermitian(a) and is_hermitian(b)):
        raise ValueError("trace_product expects Hermitian operators")
    t = np.trace(a @ b)
    if abs(t.imag) > HERMITIAN_TOL:
        raise AssertionError(f"imaginary residue {t.imag} exceeds tolerance")
    return float(t.real)


def hermitian_eigenvalues(a: np.ndarray) -> list[float]:
    """Real eigenvalues of a Hermitian operator, ascending."""
    a = check_matrix(a)
    if not is_hermitian(a):
        raise ValueError("hermitian_eigenvalues expects a Hermitian operator")
    return [float(v) for v in np.linalg.eigvalsh(a)]


def min_eigenvalue(a: np.ndarray) -> float:
    return hermitian_eigenvalues(a)[0]


@dataclass(frozen=True)
class QubitState:
    """A single-qubit density operator, validated on construction."""

    density: np.ndarray

    def __post_init__(self):
        rho = check_matrix(self.density)
        if rho.shape[0] != 2:
            raise ValueError("QubitState expects a 2x2 density operator")
        if not is_hermitian(rho):
            raise ValueError("density operator must be Hermitian")
        if abs(np.trace(rho).real - 1.0) > HERMITIAN_TOL:
            raise ValueError(f"density trace {np.trace(rho).real} != 1")
        if min_eigenvalue(rho) < PSD_TOL:
            raise ValueError("density operator must be positive semidefinite")
        object.__setattr__(self, "density", rho)
