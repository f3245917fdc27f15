import math

import numpy as np
import pytest

from qentropy.entropy import shannon_entropy, von_neumann_entropy
from qentropy.linalg import MemoryGuardError
from qentropy.measurement import (
    MeasurementBasisMap,
    apply_gate,
    chain_ledger,
    cnot_general,
    consecutive_measurement,
    deutsch_kraus_bound,
    entropic_bound,
    measurement_chain,
    repeat_measurement,
    rotation_basis,
    theta_sweep,
)
from qentropy.sampling import random_unitary

rng = np.random.default_rng(31415)


def h2(p):
    if p in (0.0, 1.0):
        return 0.0
    return -(p * math.log2(p) + (1 - p) * math.log2(1 - p))


def aligned_state(alpha, m):
    # independent oracle: sum_i alpha_i |i,i,...,i| built by direct indexing
    alpha = np.asarray(alpha, dtype=complex)
    n = alpha.size
    out = np.zeros(n ** (m + 1), dtype=complex)
    for i in range(n):
        out[np.ravel_multi_index((i,) * (m + 1), (n,) * (m + 1))] = alpha[i]
    return out


def test_cnot_qubit_case():
    expected = np.eye(4)[:, [0, 1, 3, 2]]
    assert np.array_equal(cnot_general(2), expected)


def test_cnot_is_unitary_permutation():
    for n in (2, 3, 5):
        gate = cnot_general(n)
        assert np.array_equal(gate @ gate.conj().T, np.eye(n * n))
        assert np.all(gate.sum(axis=0) == 1) and np.all(gate.sum(axis=1) == 1)


def test_cnot_creates_aligned_pair():
    plus = np.array([2**-0.5, 0, 2**-0.5, 0], dtype=complex)  # (|0>+|1>)/sqrt2 x |0>
    out = cnot_general(2) @ plus
    expected = np.array([2**-0.5, 0, 0, 2**-0.5])
    assert np.allclose(out, expected, atol=1e-15)


def test_cnot_qutrit_shift():
    gate = cnot_general(3)
    inp = np.zeros(9)
    inp[6] = 1.0  # |2,0>
    out = gate @ inp
    assert out[8] == 1.0 and np.count_nonzero(out) == 1  # |2,2>


def test_cnot_rejects_small_dimension():
    with pytest.raises(ValueError):
        cnot_general(1)


def test_chain_eigenstate_input_stays_product():
    chain = measurement_chain([1.0, 0.0], 2)
    ledger = chain_ledger(chain)
    assert abs(ledger["s_global"]) < 1e-9
    assert abs(ledger["s_ancillas"]) < 1e-9
    assert abs(ledger["s_system_given_ancillas"]) < 1e-9
    assert np.allclose(chain.psi.amplitudes, aligned_state([1, 0], 2), atol=1e-15)


def test_chain_balanced_input_gives_one_bit():
    chain = measurement_chain([2**-0.5, 2**-0.5], 2)
    ledger = chain_ledger(chain)
    assert abs(ledger["s_ancillas"] - 1.0) < 1e-7
    assert abs(ledger["s_system_given_ancillas"] + 1.0) < 1e-7
    assert abs(ledger["s_global"]) < 1e-7


def test_chain_matches_direct_construction():
    alpha = np.array([math.sqrt(0.8), math.sqrt(0.2)])
    chain = measurement_chain(alpha, 3)
    assert np.max(np.abs(chain.psi.amplitudes - aligned_state(alpha, 3))) < 1e-12
    ledger = chain_ledger(chain)
    assert abs(ledger["s_ancillas"] - h2(0.8)) < 1e-7
    # any ancilla pair is classically correlated with the outcome weights
    pair = chain.psi.density().reduced([1, 3])
    assert np.allclose(pair.matrix, np.diag([0.8, 0, 0, 0.2]), atol=1e-10)
    alpha3 = np.array([0.6, 0.0, 0.8])
    chain3 = measurement_chain(alpha3, 2)
    assert np.max(np.abs(chain3.psi.amplitudes - aligned_state(alpha3, 2))) < 1e-12


def test_chain_global_state_stays_pure():
    for m in range(1, 5):
        alpha = rng.normal(size=3) + 1j * rng.normal(size=3)
        alpha /= np.linalg.norm(alpha)
        ledger = chain_ledger(measurement_chain(alpha, m))
        assert abs(ledger["s_global"]) < 1e-7


def test_chain_memory_guard():
    with pytest.raises(MemoryGuardError):
        measurement_chain([2**-0.5, 2**-0.5], 20)


def test_chain_rejects_unnormalized():
    with pytest.raises(ValueError):
        measurement_chain([1.0, 1.0], 2)


def test_chain_inverse_restores_input():
    alpha = np.array([0.6, 0.8j])
    chain = measurement_chain(alpha, 2)
    gate = cnot_general(2)
    psi = chain.psi
    for j in (2, 1):  # undo in reverse order
        psi = apply_gate(psi, gate.conj().T, (0, j))
    expected = np.zeros(8, dtype=complex)
    expected.reshape(2, 2, 2)[:, 0, 0] = alpha
    fidelity = abs(np.vdot(expected, psi.amplitudes)) ** 2
    assert fidelity >= 1 - 1e-12


def test_repeat_measurement_balanced():
    chain = measurement_chain([2**-0.5, 2**-0.5], 2)
    joint = repeat_measurement(chain, 2)
    assert np.allclose(joint, np.diag([0.5, 0.5]), atol=1e-12)


def test_repeat_measurement_eigenstate_deterministic():
    joint = repeat_measurement(measurement_chain([0.0, 1.0], 1), 1)
    assert np.allclose(joint, np.diag([0.0, 1.0]), atol=1e-15)


def test_repeat_measurement_skewed_weights():
    chain = measurement_chain([math.sqrt(0.9), math.sqrt(0.1)], 2)
    joint = repeat_measurement(chain, 3)
    assert abs(joint[0, 0] - 0.9) < 1e-12
    assert abs(joint[1, 1] - 0.1) < 1e-12
    off_diagonal = joint - np.diag(np.diag(joint))
    assert np.max(np.abs(off_diagonal)) < 1e-10
    assert abs(joint.sum() - 1.0) < 1e-12


def test_basis_map_validates_unitarity():
    with pytest.raises(ValueError):
        MeasurementBasisMap(np.array([[1.0, 0.0], [1.0, 0.0]]))
    u = random_unitary(4, rng)
    basis = MeasurementBasisMap(u)
    q = basis.outcome_probabilities()
    assert np.allclose(q.sum(axis=0), 1.0, atol=1e-10)
    assert np.allclose(q.sum(axis=1), 1.0, atol=1e-10)


def test_consecutive_commuting_basis():
    alpha = np.array([math.sqrt(0.7), math.sqrt(0.3)])
    rho_ab, record = consecutive_measurement(alpha, MeasurementBasisMap(np.eye(2)))
    assert abs(record.s_b - record.s_a) < 1e-9
    s_b_given_a = von_neumann_entropy(rho_ab) - record.s_a
    assert abs(s_b_given_a) < 1e-9
    assert record.bound_ours == 0.0 and record.bound_dk == 0.0


def test_consecutive_eigenstate_with_complementary_basis():
    rho_ab, record = consecutive_measurement([1.0, 0.0], rotation_basis(math.pi / 4))
    assert abs(record.s_a) < 1e-9
    assert abs(record.s_b - 1.0) < 1e-9
    assert abs(record.h_q - 1.0) < 1e-9


def test_consecutive_mixture_probability_routes_agree():
    alpha = np.array([math.sqrt(0.7), math.sqrt(0.3)])
    basis = rotation_basis(math.pi / 6)
    rho_ab, record = consecutive_measurement(alpha, basis)
    # scalar mixture oracle for the second-outcome distribution
    p = np.abs(alpha) ** 2
    q = p @ (np.abs(basis.u) ** 2)
    rho_b = rho_ab.reduced([1]).matrix
    assert np.max(np.abs(np.diag(rho_b).real - q)) < 1e-10
    assert abs(record.h_q - shannon_entropy(q)) < 1e-12


def test_consecutive_marginal_matches_formula():
    alpha = rng.normal(size=3) + 1j * rng.normal(size=3)
    alpha /= np.linalg.norm(alpha)
    basis = MeasurementBasisMap(random_unitary(3, rng))
    rho_ab, record = consecutive_measurement(alpha, basis)
    n = 3
    u = basis.u
    expected = np.zeros((n * n, n * n), dtype=complex)
    for i in range(n):
        for ip in range(n):
            for j in range(n):
                expected[i * n + j, ip * n + j] = alpha[i] * alpha[ip].conj() * u[i, j] * u[ip, j].conj()
    assert np.max(np.abs(rho_ab.matrix - expected)) < 1e-10
    rho_a = rho_ab.reduced([0]).matrix
    assert np.max(np.abs(rho_a - np.diag(np.abs(alpha) ** 2))) < 1e-10
    s_ab = von_neumann_entropy(rho_ab)
    assert abs(record.s_a + (s_ab - record.s_a) - record.h_q) < 1e-6


def test_consecutive_identity_and_bounds_random_draws():
    for _ in range(60):
        n = int(rng.integers(2, 6))
        alpha = rng.normal(size=n) + 1j * rng.normal(size=n)
        alpha /= np.linalg.norm(alpha)
        basis = MeasurementBasisMap(random_unitary(n, rng))
        rho_ab, record = consecutive_measurement(alpha, basis)
        assert abs(von_neumann_entropy(rho_ab) - record.h_q) < 1e-6
        assert record.s_a + record.s_b >= record.h_q - 1e-9
        assert record.s_a + record.s_b >= record.bound_ours - 1e-9
        assert record.bound_ours >= record.bound_dk - 1e-12


def test_consecutive_loss_of_coherence():
    # outcomes mix incoherently: q_j = sum_i p_i |u_ij|^2, not |sum_i alpha_i u_ij|^2
    alpha = np.array([2**-0.5, 2**-0.5])
    basis = rotation_basis(math.pi / 4)
    rho_ab, _ = consecutive_measurement(alpha, basis)
    q = np.diag(rho_ab.reduced([1]).matrix).real
    p = np.abs(alpha) ** 2
    incoherent = p @ (np.abs(basis.u) ** 2)
    coherent = np.abs(alpha @ basis.u) ** 2
    assert np.max(np.abs(q - incoherent)) < 1e-10
    assert np.max(np.abs(q - coherent)) > 0.4  # visibly different route


def test_consecutive_saturation_for_eigenstate():
    basis = rotation_basis(math.pi / 6)
    _, record = consecutive_measurement([1.0, 0.0], basis)
    q_row = np.abs(basis.u[0]) ** 2
    assert abs(record.s_a) < 1e-12
    assert abs(record.s_a + record.s_b - shannon_entropy(q_row)) < 1e-9


def test_entropic_bound_golden_values():
    assert entropic_bound(MeasurementBasisMap(np.eye(2))) == 0.0
    assert abs(entropic_bound(rotation_basis(math.pi / 4)) - 1.0) < 1e-12
    assert abs(entropic_bound(rotation_basis(math.pi / 6)) - h2(0.75)) < 1e-12
    assert abs(entropic_bound(rotation_basis(math.pi / 6)) - 0.811278) < 1e-6


def test_deutsch_kraus_bound_golden_values():
    assert deutsch_kraus_bound(rotation_basis(0.0)) == 0.0
    assert abs(deutsch_kraus_bound(rotation_basis(math.pi / 4)) - 1.0) < 1e-12
    expected = -math.log2(0.75)
    assert abs(deutsch_kraus_bound(rotation_basis(math.pi / 6)) - expected) < 1e-12
    assert abs(expected - 0.415037) < 1e-6


def test_bound_dominance_random_unitaries():
    for _ in range(1000):
        n = int(rng.integers(2, 7))
        basis = MeasurementBasisMap(random_unitary(n, rng))
        assert entropic_bound(basis) >= deutsch_kraus_bound(basis) - 1e-12


def test_theta_sweep_golden_points():
    rows = dict((round(t, 12), (ours, dk)) for t, ours, dk in
                theta_sweep([0.0, math.pi / 8, math.pi / 4]))
    assert rows[0.0] == (0.0, 0.0)
    ours, dk = rows[round(math.pi / 4, 12)]
    assert abs(ours - 1.0) < 1e-12 and abs(dk - 1.0) < 1e-12
    ours, dk = rows[round(math.pi / 8, 12)]
    c2 = math.cos(math.pi / 8) ** 2
    assert abs(ours - h2(c2)) < 1e-12
    assert abs(dk - (-math.log2(c2))) < 1e-12
    # frozen from the scalar closed-form oracle
    assert abs(ours - 0.6008760366928562) < 1e-12
    assert abs(dk - 0.22844669683638807) < 1e-12


def test_theta_sweep_dominance_and_equality_points():
    grid = np.linspace(0, math.pi / 2, 201)
    for theta, ours, dk in theta_sweep(grid):
        assert ours >= dk - 1e-9
        at_special = min(abs(theta), abs(theta - math.pi / 4), abs(theta - math.pi / 2)) < 1e-9
        assert (abs(ours - dk) <= 1e-9) == at_special
