"""Entropy calculus: conditional and mutual density operators, entropies in bits, Venn diagrams.

The conditional operator exp2(log2 rho_AB - log2(1 x rho_B)) is the operator
analogue of a conditional probability; unlike a density matrix it may carry
eigenvalues above one, which is exactly what makes conditional entropies of
entangled states negative. Entropy *values* of record are always computed
from eigenvalue sums/differences, which are immune to the kernel
regularization applied inside the operator construction.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

import numpy as np

from .linalg import (
    EIG_FLOOR,
    hermitian_part,
    kron,
    matrix_exp2,
    matrix_log2,
)
from .states import DensityMatrix

SUPPORT_LEAK_TOL = 1e-9


def shannon_entropy(probs) -> float:
    """Classical entropy -sum p log2 p in bits, with the 0*log0 = 0 convention."""
    p = np.asarray(probs, dtype=float).reshape(-1)
    p = p[p > 0.0]
    return float(-(p @ np.log2(p))) + 0.0  # normalizes -0.0


def _entropy_of_matrix(matrix: np.ndarray) -> float:
    w = np.linalg.eigvalsh(hermitian_part(matrix))
    return shannon_entropy(np.clip(w, 0.0, None))


def von_neumann_entropy(rho: DensityMatrix) -> float:
    """S(rho) = -Tr[rho log2 rho] in bits; zero for pure states."""
    return _entropy_of_matrix(rho.matrix)


@dataclass
class ConditionalOperator:
    """Hermitian PSD operator on a bipartite space; not unit-trace, eigenvalues may exceed 1.

    ``log2_matrix`` holds the exact Hermitian logarithm used to build the
    operator, so trace-form entropies avoid a lossy round trip. ``ill_defined``
    is set when the joint state leaks outside the support of the conditioning
    marginal beyond tolerance.
    """

    matrix: np.ndarray
    dims: tuple[int, ...]
    kind: str  # "conditional" or "mutual"
    support_projector: np.ndarray
    log2_matrix: np.ndarray
    ill_defined: bool = False

    def eigenvalues(self) -> np.ndarray:
        return np.linalg.eigvalsh(hermitian_part(self.matrix))

    def max_eigenvalue(self) -> float:
        return float(self.eigenvalues()[-1])


def _embed_marginal(rho_ab: DensityMatrix, factor: int) -> np.ndarray:
    """1 x rho_factor (or rho_factor x 1) on the joint space."""
    d0, d1 = rho_ab.dims
    marg = rho_ab.reduced([factor]).matrix
    if factor == 1:
        return kron(np.eye(d0), marg)
    return kron(marg, np.eye(d1))


def _require_two_factors(rho: DensityMatrix):
    if len(rho.dims) != 2:
        raise ValueError(f"operation requires a 2-factor state, got {len(rho.dims)} factors")


def conditional_density(rho_ab: DensityMatrix, condition_on: int = 1,
                        eps: float = EIG_FLOOR) -> ConditionalOperator:
    """exp2(log2 rho_AB - log2(1 x rho_B)), conditioning on the given factor.

    Reduces to rho_AB (1 x rho_B)^-1 when the two commute. If the joint state
    has weight outside the support of the conditioning marginal (beyond
    tolerance) the result is flagged ill-defined rather than silently
    regularized.
    """
    _require_two_factors(rho_ab)
    if condition_on not in (0, 1):
        raise ValueError(f"condition_on must be 0 or 1, got {condition_on}")
    sigma = _embed_marginal(rho_ab, condition_on)
    log_joint, _ = matrix_log2(rho_ab.matrix, eps)
    log_sigma, sigma_support = matrix_log2(sigma, eps)
    complement = np.eye(rho_ab.dim) - sigma_support
    leak = float(np.real(np.trace(rho_ab.matrix @ complement)))
    log_cond = hermitian_part(log_joint - log_sigma)
    return ConditionalOperator(
        matrix=matrix_exp2(log_cond),
        dims=rho_ab.dims,
        kind="conditional",
        support_projector=sigma_support,
        log2_matrix=log_cond,
        ill_defined=leak > SUPPORT_LEAK_TOL,
    )


def mutual_density(rho_ab: DensityMatrix, eps: float = EIG_FLOOR) -> ConditionalOperator:
    """exp2(log2(rho_A x rho_B) - log2 rho_AB); identity for product states."""
    _require_two_factors(rho_ab)
    product = kron(rho_ab.reduced([0]).matrix, rho_ab.reduced([1]).matrix)
    log_joint, joint_support = matrix_log2(rho_ab.matrix, eps)
    log_product, _ = matrix_log2(product, eps)
    log_mut = hermitian_part(log_product - log_joint)
    return ConditionalOperator(
        matrix=matrix_exp2(log_mut),
        dims=rho_ab.dims,
        kind="mutual",
        support_projector=joint_support,
        log2_matrix=log_mut,
        ill_defined=False,
    )


def conditional_entropy(rho_ab: DensityMatrix, condition_on: int = 1) -> float:
    """S(AB) - S(conditioning marginal), in bits; negative for entangled pure states."""
    _require_two_factors(rho_ab)
    s_joint = von_neumann_entropy(rho_ab)
    s_cond = von_neumann_entropy(rho_ab.reduced([condition_on]))
    return s_joint - s_cond


def conditional_entropy_from_operator(rho_ab: DensityMatrix, condition_on: int = 1) -> float:
    """-Tr[rho_AB log2 rho_cond]: the trace form, kept as an independent diagnostic route.

    Falls back to the subtraction form when the conditional operator is
    flagged ill-defined.
    """
    cond = conditional_density(rho_ab, condition_on)
    if cond.ill_defined:
        warnings.warn(
            "conditional operator is ill-defined (joint support leaks past the "
            "conditioning marginal); returning the subtraction form",
            RuntimeWarning,
            stacklevel=2,
        )
        return conditional_entropy(rho_ab, condition_on)
    return float(-np.real(np.trace(rho_ab.matrix @ cond.log2_matrix)))


def mutual_entropy(rho_ab: DensityMatrix) -> float:
    """S(A) + S(B) - S(AB): entropy shared between the two factors, in bits."""
    _require_two_factors(rho_ab)
    s_a = von_neumann_entropy(rho_ab.reduced([0]))
    s_b = von_neumann_entropy(rho_ab.reduced([1]))
    return s_a + s_b - von_neumann_entropy(rho_ab)


def mutual_entropy_from_operator(rho_ab: DensityMatrix) -> float:
    """-Tr[rho_AB log2 rho_mut]: trace-form counterpart of :func:`mutual_entropy`."""
    mut = mutual_density(rho_ab)
    return float(-np.real(np.trace(rho_ab.matrix @ mut.log2_matrix)))


@dataclass
class VennDiagram2:
    """Bipartite entropy decomposition in bits."""

    s_a: float
    s_b: float
    s_ab: float
    s_a_given_b: float
    s_b_given_a: float
    s_a_mutual_b: float

    def as_dict(self) -> dict[str, float]:
        return {
            "s_a": self.s_a,
            "s_b": self.s_b,
            "s_ab": self.s_ab,
            "s_a_given_b": self.s_a_given_b,
            "s_b_given_a": self.s_b_given_a,
            "s_a_mutual_b": self.s_a_mutual_b,
        }


@dataclass
class VennDiagram3:
    """Tripartite entropy decomposition: seven regions plus all marginal/joint entropies."""

    s_a: float
    s_b: float
    s_c: float
    s_ab: float
    s_ac: float
    s_bc: float
    s_abc: float
    s_a_given_bc: float
    s_b_given_ac: float
    s_c_given_ab: float
    s_a_mutual_b_given_c: float
    s_a_mutual_c_given_b: float
    s_b_mutual_c_given_a: float
    s_center: float

    def as_dict(self) -> dict[str, float]:
        return {
            "s_a": self.s_a,
            "s_b": self.s_b,
            "s_c": self.s_c,
            "s_ab": self.s_ab,
            "s_ac": self.s_ac,
            "s_bc": self.s_bc,
            "s_abc": self.s_abc,
            "s_a_given_bc": self.s_a_given_bc,
            "s_b_given_ac": self.s_b_given_ac,
            "s_c_given_ab": self.s_c_given_ab,
            "s_a_mutual_b_given_c": self.s_a_mutual_b_given_c,
            "s_a_mutual_c_given_b": self.s_a_mutual_c_given_b,
            "s_b_mutual_c_given_a": self.s_b_mutual_c_given_a,
            "s_center": self.s_center,
        }


def venn2(rho_ab: DensityMatrix) -> VennDiagram2:
    """Full bipartite entropy diagram of a 2-factor state."""
    _require_two_factors(rho_ab)
    s_a = von_neumann_entropy(rho_ab.reduced([0]))
    s_b = von_neumann_entropy(rho_ab.reduced([1]))
    s_ab = von_neumann_entropy(rho_ab)
    return VennDiagram2(
        s_a=s_a,
        s_b=s_b,
        s_ab=s_ab,
        s_a_given_b=s_ab - s_b,
        s_b_given_a=s_ab - s_a,
        s_a_mutual_b=s_a + s_b - s_ab,
    )


def venn3(rho_abc: DensityMatrix) -> VennDiagram3:
    """Full tripartite entropy diagram of a 3-factor state.

    Conditional mutual regions come out non-negative (strong subadditivity);
    the center vanishes whenever the joint state is pure.
    """
    if len(rho_abc.dims) != 3:
        raise ValueError(f"venn3 requires a 3-factor state, got {len(rho_abc.dims)} factors")
    s = {}
    for keep, name in [
        ((0,), "a"), ((1,), "b"), ((2,), "c"),
        ((0, 1), "ab"), ((0, 2), "ac"), ((1, 2), "bc"),
    ]:
        s[name] = von_neumann_entropy(rho_abc.reduced(keep))
    s["abc"] = von_neumann_entropy(rho_abc)
    return VennDiagram3(
        s_a=s["a"], s_b=s["b"], s_c=s["c"],
        s_ab=s["ab"], s_ac=s["ac"], s_bc=s["bc"], s_abc=s["abc"],
        s_a_given_bc=s["abc"] - s["bc"],
        s_b_given_ac=s["abc"] - s["ac"],
        s_c_given_ab=s["abc"] - s["ab"],
        s_a_mutual_b_given_c=s["ac"] + s["bc"] - s["c"] - s["abc"],
        s_a_mutual_c_given_b=s["ab"] + s["bc"] - s["b"] - s["abc"],
        s_b_mutual_c_given_a=s["ab"] + s["ac"] - s["a"] - s["abc"],
        s_center=s["a"] + s["b"] + s["c"] - s["ab"] - s["ac"] - s["bc"] + s["abc"],
    )
