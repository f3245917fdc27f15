"""Unitary measurement machinery: entangling chains, repeated and incompatible measurements.

A measurement is modeled as the shift permutation |i, k> -> |i, (k+i) mod N>
entangling the system with a fresh |0> ancilla; no collapse ever happens.
Randomness appears only in reduced views, balanced by the negative
conditional entropy of the traced-out system, so the global state stays pure
through every stage.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .entropy import shannon_entropy, von_neumann_entropy
from .linalg import MemoryGuardError
from .states import DensityMatrix, StateVector

QUBIT_BUDGET = 20  # log2 of the largest dense state vector we will build


@dataclass
class MeasurementBasisMap:
    """Unitary overlap matrix u[i, j] = <second-basis j | first-basis i>.

    Row i squared gives the outcome distribution of the second measurement
    on the i-th eigenstate of the first observable.
    """

    u: np.ndarray

    def __post_init__(self):
        u = np.asarray(self.u, dtype=complex)
        if u.ndim != 2 or u.shape[0] != u.shape[1]:
            raise ValueError(f"basis map must be square, got shape {u.shape}")
        dev = float(np.max(np.abs(u.conj().T @ u - np.eye(u.shape[0]))))
        if dev > 1e-10:
            raise ValueError(f"basis map is not unitary: max|u†u - 1| = {dev:.3e}")
        self.u = u

    @property
    def dim(self) -> int:
        return self.u.shape[0]

    def outcome_probabilities(self) -> np.ndarray:
        """q[i, j] = |u[i, j]|**2, a row-stochastic (in fact doubly stochastic) matrix."""
        return np.abs(self.u) ** 2


def rotation_basis(theta: float) -> MeasurementBasisMap:
    """Two-dimensional basis map with overlap angle theta (0 = compatible, pi/4 = complementary)."""
    c, s = math.cos(theta), math.sin(theta)
    return MeasurementBasisMap(np.array([[c, -s], [s, c]], dtype=complex))


@dataclass
class ChainState:
    """Pure state of a system plus m same-dimension ancillas, after the entangling chain."""

    psi: StateVector
    m: int
    probabilities: np.ndarray


def cnot_general(n: int) -> np.ndarray:
    """Permutation unitary |i, k> -> |i, (k+i) mod n> on system x ancilla."""
    if n < 2:
        raise ValueError(f"dimension must be at least 2, got {n}")
    gate = np.zeros((n * n, n * n), dtype=complex)
    for i in range(n):
        for k in range(n):
            gate[i * n + (k + i) % n, i * n + k] = 1.0
    return gate


def apply_gate(psi: StateVector, gate: np.ndarray, targets: tuple[int, int]) -> StateVector:
    """Apply a two-factor gate to the named factors of a multi-factor pure state."""
    f0, f1 = targets
    dims = psi.dims
    d_pair = dims[f0] * dims[f1]
    if gate.shape != (d_pair, d_pair):
        raise ValueError(f"gate shape {gate.shape} does not match target factors {d_pair}")
    tensor = psi.amplitudes.reshape(dims)
    tensor = np.moveaxis(tensor, (f0, f1), (0, 1))
    moved_shape = tensor.shape
    out = gate @ tensor.reshape(d_pair, -1)
    out = np.moveaxis(out.reshape(moved_shape), (0, 1), (f0, f1))
    return StateVector(out.reshape(-1), dims)


def _check_budget(dims):
    qubits = sum(math.log2(d) for d in dims)
    if qubits > QUBIT_BUDGET + 1e-9:
        raise MemoryGuardError(
            f"state of {qubits:.1f} qubits-equivalent exceeds the {QUBIT_BUDGET}-qubit budget"
        )


def _normalized_amplitudes(alpha) -> np.ndarray:
    alpha = np.asarray(alpha, dtype=complex).reshape(-1)
    nrm = float(np.linalg.norm(alpha))
    if abs(nrm - 1.0) > 1e-10:
        raise ValueError(f"amplitudes have norm {nrm!r}, expected 1")
    return alpha


def measurement_chain(alpha, m: int) -> ChainState:
    """Entangle the system with m fresh |0> ancillas, one shift gate at a time.

    The result is the n-plet sum_i alpha_i |i, i, ..., i>; tracing the system
    leaves the ancillas classically correlated with weights |alpha_i|**2.
    """
    alpha = _normalized_amplitudes(alpha)
    n = alpha.size
    if n < 2:
        raise ValueError("system dimension must be at least 2")
    if m < 1:
        raise ValueError("ancilla count must be at least 1")
    dims = (n,) * (m + 1)
    _check_budget(dims)
    amp = np.zeros(n ** (m + 1), dtype=complex)
    amp.reshape(dims)[(slice(None),) + (0,) * m] = alpha  # factor 0 is the system
    psi = StateVector(amp, dims)
    gate = cnot_general(n)
    for j in range(1, m + 1):
        psi = apply_gate(psi, gate, (0, j))
    return ChainState(psi=psi, m=m, probabilities=np.abs(alpha) ** 2)


def chain_ledger(chain: ChainState) -> dict[str, float]:
    """Entropy bookkeeping of a chain: global, ancilla block, and system-given-ancillas."""
    rho = chain.psi.density()
    ancillas = list(range(1, chain.m + 1))
    s_anc = von_neumann_entropy(rho.reduced(ancillas))
    s_global = von_neumann_entropy(rho)
    return {
        "s_global": s_global,
        "s_ancillas": s_anc,
        "s_system_given_ancillas": s_global - s_anc,
        "shannon_outcomes": shannon_entropy(chain.probabilities),
    }


def repeat_measurement(chain: ChainState, m2: int) -> np.ndarray:
    """Entangle the system with a second ancilla pack; return the pack-pair outcome distribution.

    Entry [i, j] is the probability of reading value i on the first pack and
    j on the second; all the weight sits on the diagonal.
    """
    if m2 < 1:
        raise ValueError("second ancilla pack must contain at least 1 ancilla")
    n = chain.psi.dims[0]
    m1 = chain.m
    dims = (n,) * (m1 + m2 + 1)
    _check_budget(dims)
    amp = np.zeros(n ** (m1 + m2 + 1), dtype=complex)
    block = amp.reshape(chain.psi.dims + (n,) * m2)
    block[(Ellipsis,) + (0,) * m2] = chain.psi.amplitudes.reshape(chain.psi.dims)
    psi = StateVector(amp, dims)
    gate = cnot_general(n)
    for j in range(m1 + 1, m1 + m2 + 1):
        psi = apply_gate(psi, gate, (0, j))
    weights = np.abs(psi.amplitudes.reshape((n, n**m1, n**m2))) ** 2
    aligned1 = [int(sum(i * n**p for p in range(m1))) for i in range(n)]
    aligned2 = [int(sum(j * n**p for p in range(m2))) for j in range(n)]
    joint = np.zeros((n, n))
    for i, a1 in enumerate(aligned1):
        for j, a2 in enumerate(aligned2):
            joint[i, j] = float(weights[:, a1, a2].sum())
    return joint


@dataclass
class UncertaintyRecord:
    """Entropies of two consecutive measurements and the matching lower bounds, in bits."""

    s_a: float
    s_b: float
    h_q: float
    bound_ours: float
    bound_dk: float

    def as_dict(self) -> dict[str, float]:
        return {
            "s_a": self.s_a,
            "s_b": self.s_b,
            "h_q": self.h_q,
            "bound_ours": self.bound_ours,
            "bound_dk": self.bound_dk,
        }


def consecutive_measurement(alpha, basis: MeasurementBasisMap) -> tuple[DensityMatrix, UncertaintyRecord]:
    """Measure two observables in sequence with separate ancillas.

    Builds the pure three-factor state sum_ij alpha_i u_ij |j, i, j> (system
    expressed in the second eigenbasis), reduces to the two-ancilla marginal,
    and records the resulting entropies against both uncertainty bounds.
    """
    alpha = _normalized_amplitudes(alpha)
    n = alpha.size
    if n != basis.dim:
        raise ValueError(f"state dimension {n} does not match basis map dimension {basis.dim}")
    u = basis.u
    tensor = np.zeros((n, n, n), dtype=complex)
    for j in range(n):
        tensor[j, :, j] = alpha * u[:, j]
    psi = StateVector(tensor.reshape(-1), (n, n, n))
    rho_ab = psi.density().reduced([1, 2])
    p = np.abs(alpha) ** 2
    q = p @ basis.outcome_probabilities()
    s_a = von_neumann_entropy(rho_ab.reduced([0]))
    s_b = von_neumann_entropy(rho_ab.reduced([1]))
    s_ab = von_neumann_entropy(rho_ab)
    h_q = shannon_entropy(q)
    # S(A) + S(B|A) telescopes to S(AB), which must equal the mixture entropy H[q]
    if abs(s_ab - h_q) > 1e-6:
        raise ArithmeticError(
            f"entropy bookkeeping violated: S(A) + S(B|A) = {s_ab!r} but H[q] = {h_q!r}"
        )
    record = UncertaintyRecord(
        s_a=s_a,
        s_b=s_b,
        h_q=h_q,
        bound_ours=entropic_bound(basis),
        bound_dk=deutsch_kraus_bound(basis),
    )
    return rho_ab, record


def entropic_bound(basis: MeasurementBasisMap) -> float:
    """min_i H[|u_ij|**2] over rows: the entropic uncertainty lower bound, in bits."""
    rows = basis.outcome_probabilities()
    return float(min(shannon_entropy(row) for row in rows))


def deutsch_kraus_bound(basis: MeasurementBasisMap) -> float:
    """-log2 max_ij |u_ij|**2: the exclusion-principle bound, never above :func:`entropic_bound`."""
    c = float(np.max(basis.outcome_probabilities()))
    return float(-math.log2(c))


def theta_sweep(grid) -> list[tuple[float, float, float]]:
    """Both uncertainty bounds across two-dimensional basis maps of angle theta."""
    rows = []
    for theta in grid:
        basis = rotation_basis(float(theta))
        rows.append((float(theta), entropic_bound(basis), deutsch_kraus_bound(basis)))
    return rows
