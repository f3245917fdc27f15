"""Physically typed states over factored Hilbert spaces."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .linalg import InvalidStateError, hermitian_part, partial_trace, partial_transpose

NORM_TOL = 1e-12
TRACE_TOL = 1e-10
PSD_TOL = 1e-10


def _as_dims(dims, size: int) -> tuple[int, ...]:
    dims = tuple(int(d) for d in dims)
    if any(d < 1 for d in dims):
        raise ValueError(f"subsystem dimensions must be positive, got {dims}")
    if int(np.prod(dims)) != size:
        raise ValueError(f"factors {dims} multiply to {int(np.prod(dims))}, state has dimension {size}")
    return dims


@dataclass
class StateVector:
    """Normalized pure state over a factored Hilbert space."""

    amplitudes: np.ndarray
    dims: tuple[int, ...]

    def __post_init__(self):
        self.amplitudes = np.asarray(self.amplitudes, dtype=complex).reshape(-1)
        self.dims = _as_dims(self.dims, self.amplitudes.size)
        nrm = float(np.linalg.norm(self.amplitudes))
        if abs(nrm - 1.0) > NORM_TOL:
            raise InvalidStateError(f"state vector norm {nrm!r} differs from 1 by more than {NORM_TOL:.1e}")

    @property
    def dim(self) -> int:
        return self.amplitudes.size

    def density(self) -> "DensityMatrix":
        return density_from_pure(self)

    def probabilities(self) -> np.ndarray:
        return np.abs(self.amplitudes) ** 2


@dataclass
class DensityMatrix:
    """Hermitian, positive-semidefinite, unit-trace operator over a factored Hilbert space."""

    matrix: np.ndarray
    dims: tuple[int, ...]

    def __post_init__(self):
        m = np.asarray(self.matrix, dtype=complex)
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise InvalidStateError(f"density matrix must be square, got shape {m.shape}")
        self.dims = _as_dims(self.dims, m.shape[0])
        herm_dev = float(np.max(np.abs(m - m.conj().T)))
        if herm_dev > TRACE_TOL:
            raise InvalidStateError(f"not Hermitian: max|m - m†| = {herm_dev:.3e} exceeds {TRACE_TOL:.1e}")
        tr = complex(np.trace(m))
        if abs(tr - 1.0) > TRACE_TOL:
            raise InvalidStateError(f"trace is {tr.real!r}, differs from 1 by more than {TRACE_TOL:.1e}")
        lo = float(np.linalg.eigvalsh(hermitian_part(m))[0])
        if lo < -PSD_TOL:
            raise InvalidStateError(f"not positive semidefinite: lowest eigenvalue {lo:.3e} below -{PSD_TOL:.1e}")
        self.matrix = hermitian_part(m)

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    def eigenvalues(self) -> np.ndarray:
        return np.linalg.eigvalsh(self.matrix)

    def reduced(self, keep) -> "DensityMatrix":
        """Marginal state on the kept factors (partial trace over the rest)."""
        keep = sorted(set(int(k) for k in keep))
        sub = partial_trace(self.matrix, self.dims, keep)
        return DensityMatrix(sub, tuple(self.dims[k] for k in keep))

    def transposed_factor(self, subsystem: int) -> np.ndarray:
        """Partial transpose over one factor; returned raw since it may not be PSD."""
        return partial_transpose(self.matrix, self.dims, subsystem)


def density_from_pure(psi: StateVector) -> DensityMatrix:
    """Rank-one projector |psi><psi| carrying the factorization of psi."""
    amp = psi.amplitudes
    return DensityMatrix(np.outer(amp, amp.conj()), psi.dims)


def basis_state(index: int, dims) -> StateVector:
    """Computational basis vector |index> over the given factors."""
    dims = tuple(int(d) for d in dims)
    total = int(np.prod(dims))
    amp = np.zeros(total, dtype=complex)
    amp[index] = 1.0
    return StateVector(amp, dims)


def bell_state() -> StateVector:
    """(|00> + |11>)/sqrt(2): maximally entangled two-qubit pure state."""
    amp = np.zeros(4, dtype=complex)
    amp[0] = amp[3] = 1 / math.sqrt(2)
    return StateVector(amp, (2, 2))


def nplet_state(m: int, d: int = 2) -> StateVector:
    """(|0...0> + |(d-1)...(d-1)>)/sqrt(2) over m factors of dimension d."""
    if m < 2:
        raise ValueError("an n-plet needs at least 2 factors")
    total = d**m
    amp = np.zeros(total, dtype=complex)
    amp[0] = amp[-1] = 1 / math.sqrt(2)
    return StateVector(amp, (d,) * m)


def ghz_state() -> StateVector:
    """Three-qubit (|000> + |111>)/sqrt(2)."""
    return nplet_state(3)


def independent_pair() -> DensityMatrix:
    """Two uncorrelated maximally mixed qubits (case I)."""
    return DensityMatrix(np.eye(4, dtype=complex) / 4, (2, 2))


def correlated_pair() -> DensityMatrix:
    """Uniform classical mixture of |00> and |11> (case II)."""
    m = np.zeros((4, 4), dtype=complex)
    m[0, 0] = m[3, 3] = 0.5
    return DensityMatrix(m, (2, 2))
