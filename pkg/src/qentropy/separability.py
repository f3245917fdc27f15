"""Separability diagnostics: conditional-spectrum criterion, PPT, the Werner family, random trials.

A separable mixed state always has conditional operators with spectrum inside
[0, 1] and non-negative conditional entropies, so either property failing
witnesses entanglement. On two qubits the Werner family makes both criteria
flip at singlet fraction 1/3.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .entropy import conditional_density, conditional_entropy
from .linalg import kron
from .sampling import random_density_matrix, rng_for_trial
from .states import DensityMatrix

CRITERION_TOL = 1e-8

SWEEP_COLUMNS = ("x", "cond_eig_max", "ppt_eig_min", "spectrum_classical", "ppt_pass")


@dataclass
class SeparabilityReport:
    """Criterion verdicts plus the supporting spectra for one bipartite state."""

    max_cond_eig_ab: float
    max_cond_eig_ba: float
    spectrum_classical: bool
    min_ppt_eig: float
    ppt_pass: bool
    cond_entropy_ab: float
    cond_entropy_ba: float
    nonneg_cond_entropy: bool

    def as_dict(self) -> dict:
        return {
            "max_cond_eig_ab": self.max_cond_eig_ab,
            "max_cond_eig_ba": self.max_cond_eig_ba,
            "spectrum_classical": self.spectrum_classical,
            "min_ppt_eig": self.min_ppt_eig,
            "ppt_pass": self.ppt_pass,
            "cond_entropy_ab": self.cond_entropy_ab,
            "cond_entropy_ba": self.cond_entropy_ba,
            "nonneg_cond_entropy": self.nonneg_cond_entropy,
        }


def conditional_spectra(rho_ab: DensityMatrix) -> tuple[np.ndarray, np.ndarray]:
    """Eigenvalues (ascending) of the conditional operators in both orientations."""
    eig_ab = conditional_density(rho_ab, condition_on=1).eigenvalues()
    eig_ba = conditional_density(rho_ab, condition_on=0).eigenvalues()
    return eig_ab, eig_ba


def analyze(rho_ab: DensityMatrix, tol: float = CRITERION_TOL) -> SeparabilityReport:
    """Evaluate the conditional-spectrum and PPT criteria on a 2-factor state."""
    eig_ab, eig_ba = conditional_spectra(rho_ab)
    max_ab = float(eig_ab[-1])
    max_ba = float(eig_ba[-1])
    ppt_eigs = np.linalg.eigvalsh(rho_ab.transposed_factor(1))
    min_ppt = float(ppt_eigs[0])
    s_ab = conditional_entropy(rho_ab, condition_on=1)
    s_ba = conditional_entropy(rho_ab, condition_on=0)
    return SeparabilityReport(
        max_cond_eig_ab=max_ab,
        max_cond_eig_ba=max_ba,
        spectrum_classical=bool(max_ab <= 1.0 + tol and max_ba <= 1.0 + tol),
        min_ppt_eig=min_ppt,
        ppt_pass=bool(min_ppt >= -tol),
        cond_entropy_ab=s_ab,
        cond_entropy_ba=s_ba,
        nonneg_cond_entropy=bool(s_ab >= -1e-9 and s_ba >= -1e-9),
    )


def werner(x: float) -> DensityMatrix:
    """Two-qubit mixture of a singlet fraction x with a random fraction 1 - x.

    Explicit 4x4 form: diagonal ((1-x)/4, (1+x)/4, (1+x)/4, (1-x)/4) with
    -x/2 on the inner anti-diagonal.
    """
    if not 0.0 <= x <= 1.0:
        raise ValueError(f"singlet fraction must lie in [0, 1], got {x}")
    m = np.zeros((4, 4), dtype=complex)
    m[0, 0] = m[3, 3] = (1 - x) / 4
    m[1, 1] = m[2, 2] = (1 + x) / 4
    m[1, 2] = m[2, 1] = -x / 2
    return DensityMatrix(m, (2, 2))


def werner_threshold_sweep(grid, tol: float = CRITERION_TOL) -> list[dict]:
    """Per-x verdict table over the Werner family; both criteria flip at x = 1/3."""
    rows = []
    for x in grid:
        report = analyze(werner(float(x)), tol)
        rows.append({
            "x": float(x),
            "cond_eig_max": max(report.max_cond_eig_ab, report.max_cond_eig_ba),
            "ppt_eig_min": report.min_ppt_eig,
            "spectrum_classical": report.spectrum_classical,
            "ppt_pass": report.ppt_pass,
        })
    return rows


def sample_separable(dims, k: int, rng: np.random.Generator,
                     ancilla_dim: int | None = None) -> tuple[DensityMatrix, dict]:
    """Random separable state: Dirichlet(1,...,1)-weighted sum of k random product states.

    Factors are induced-measure mixed states (``ancilla_dim=1`` makes them
    pure). Returns the state plus the provenance needed to reconstruct it.
    """
    if k < 1:
        raise ValueError("component count k must be >= 1")
    d_a, d_b = (int(d) for d in dims)
    weights = rng.dirichlet(np.ones(k))
    factors_a = [random_density_matrix((d_a,), rng, ancilla_dim) for _ in range(k)]
    factors_b = [random_density_matrix((d_b,), rng, ancilla_dim) for _ in range(k)]
    total = np.zeros((d_a * d_b, d_a * d_b), dtype=complex)
    for w, fa, fb in zip(weights, factors_a, factors_b):
        total += w * kron(fa.matrix, fb.matrix)
    provenance = {
        "weights": weights,
        "factors_a": [f.matrix for f in factors_a],
        "factors_b": [f.matrix for f in factors_b],
    }
    return DensityMatrix(total, (d_a, d_b)), provenance


def _conjecture_chunk(lo: int, hi: int, dims, k_range, seed: int, tol: float) -> list[dict]:
    k_lo, k_hi = (int(k) for k in k_range)
    violations = []
    for trial in range(lo, hi):
        rng = rng_for_trial(seed, trial)
        k = int(rng.integers(k_lo, k_hi + 1))
        rho, provenance = sample_separable(dims, k, rng)
        eig_ab, eig_ba = conditional_spectra(rho)
        worst = float(max(eig_ab[-1], eig_ba[-1]))
        if worst > 1.0 + tol:
            violations.append({
                "trial": trial,
                "seed": seed,
                "k": k,
                "max_conditional_eigenvalue": worst,
                "spectrum_ab": eig_ab.tolist(),
                "spectrum_ba": eig_ba.tolist(),
                "weights": provenance["weights"].tolist(),
                "factors_a": [f.tolist() for f in provenance["factors_a"]],
                "factors_b": [f.tolist() for f in provenance["factors_b"]],
            })
    return violations


def conjecture_trial(trials: int, dims=(2, 2), k_range=(1, 4), seed: int = 0,
                     tol: float = CRITERION_TOL, jobs: int = 1) -> list[dict]:
    """Hunt for separable states whose conditional spectrum leaves [0, 1 + tol].

    Every violation (none expected) is returned with full provenance: trial
    index, component weights and factors, and the offending spectra. Each
    trial draws from its own (seed, trial) substream, so the result is
    deterministic for a fixed seed and independent of ``jobs``.
    """
    trials = int(trials)
    if trials <= 0:
        return []
    if jobs <= 1 or trials < 4 * jobs:
        return _conjecture_chunk(0, trials, dims, k_range, seed, tol)
    from concurrent.futures import ProcessPoolExecutor

    bounds = np.linspace(0, trials, jobs + 1, dtype=int)
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        parts = pool.map(
            _conjecture_chunk,
            bounds[:-1], bounds[1:],
            [dims] * jobs, [k_range] * jobs, [seed] * jobs, [tol] * jobs,
        )
    merged = [v for part in parts for v in part]
    return sorted(merged, key=lambda v: v["trial"])
