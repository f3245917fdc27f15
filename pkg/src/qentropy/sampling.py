"""Seeded random states and unitaries for property sweeps and trials."""

from __future__ import annotations

import numpy as np

from .states import DensityMatrix, StateVector


def rng_for_trial(seed: int, trial: int) -> np.random.Generator:
    """Independent per-trial stream so trials can be partitioned across workers."""
    return np.random.default_rng((int(seed), int(trial)))


def random_unitary(n: int, rng: np.random.Generator) -> np.ndarray:
    """Haar-distributed n x n unitary (QR of a complex Ginibre matrix, phase fixed)."""
    z = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    q, r = np.linalg.qr(z)
    d = np.diagonal(r)
    return q * (d / np.abs(d))


def random_pure_state(dims, rng: np.random.Generator) -> StateVector:
    """Uniform (Haar) pure state over the given factors."""
    dims = tuple(int(d) for d in dims)
    total = int(np.prod(dims))
    amp = rng.normal(size=total) + 1j * rng.normal(size=total)
    return StateVector(amp / np.linalg.norm(amp), dims)


def random_density_matrix(dims, rng: np.random.Generator, ancilla_dim: int | None = None) -> DensityMatrix:
    """Induced-measure random mixed state: Haar pure state on an enlarged space, ancilla traced out.

    The default ancilla dimension equals the system dimension, i.e. the pure
    state lives on a space of the squared dimension; ``ancilla_dim=1`` yields
    pure samples.
    """
    dims = tuple(int(d) for d in dims)
    total = int(np.prod(dims))
    anc = total if ancilla_dim is None else int(ancilla_dim)
    psi = random_pure_state((total, anc), rng)
    amp = psi.amplitudes.reshape(total, anc)
    rho = amp @ amp.conj().T
    return DensityMatrix(rho, dims)
