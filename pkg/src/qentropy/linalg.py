"""Dense complex-matrix substrate: Hermitian spectral functions and tensor-product plumbing.

Everything here operates on plain ``numpy`` arrays; physical typing (density
matrices, state vectors) lives in :mod:`qentropy.states`. All logarithms are
base 2 so that downstream entropies come out in bits.
"""

from __future__ import annotations

import numpy as np

HERMITICITY_TOL = 1e-10
EIG_FLOOR = 1e-12  # eigenvalue floor used by the regularized matrix logarithm


class InvalidStateError(ValueError):
    """Input violates a physical-state invariant (Hermiticity, trace, or positivity)."""


class MemoryGuardError(RuntimeError):
    """Requested construction exceeds the dense-statevector memory budget."""


def hermitian_part(a: np.ndarray) -> np.ndarray:
    """Return (a + a†)/2."""
    return (a + a.conj().T) / 2


def kron(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Kronecker (tensor) product of two operators."""
    return np.kron(np.asarray(a, dtype=complex), np.asarray(b, dtype=complex))


def kron_all(*factors: np.ndarray) -> np.ndarray:
    """Kronecker product of any number of operators, left to right."""
    out = np.asarray(factors[0], dtype=complex)
    for f in factors[1:]:
        out = np.kron(out, np.asarray(f, dtype=complex))
    return out


def _check_square(m: np.ndarray, dims: tuple[int, ...]) -> np.ndarray:
    m = np.asarray(m, dtype=complex)
    total = int(np.prod(dims))
    if m.shape != (total, total):
        raise ValueError(f"matrix has shape {m.shape}, expected {(total, total)} for factors {tuple(dims)}")
    return m


def partial_trace(m: np.ndarray, dims, keep) -> np.ndarray:
    """Trace out every subsystem not listed in ``keep``.

    ``dims`` are the subsystem dimensions in tensor order; the kept factors
    retain their original relative order. Trace is preserved.
    """
    dims = tuple(int(d) for d in dims)
    m = _check_square(m, dims)
    keep = sorted(set(int(k) for k in keep))
    n = len(dims)
    if any(k < 0 or k >= n for k in keep):
        raise ValueError(f"keep indices {keep} out of range for {n} factors")
    t = m.reshape(dims + dims)
    removed = 0
    for i in range(n):
        if i in keep:
            continue
        ax = i - removed
        t = np.trace(t, axis1=ax, axis2=ax + t.ndim // 2)
        removed += 1
    d_keep = int(np.prod([dims[k] for k in keep])) if keep else 1
    return t.reshape(d_keep, d_keep)


def partial_transpose(m: np.ndarray, dims, subsystem: int) -> np.ndarray:
    """Transpose the indices of one factor of a bipartite operator.

    Only two-factor spaces are supported; the spectrum of the result is
    invariant under local basis changes.
    """
    dims = tuple(int(d) for d in dims)
    if len(dims) != 2:
        raise ValueError(f"partial transpose requires exactly 2 factors, got {len(dims)}")
    m = _check_square(m, dims)
    d0, d1 = dims
    t = m.reshape(d0, d1, d0, d1)
    if subsystem == 0:
        t = t.transpose(2, 1, 0, 3)
    elif subsystem == 1:
        t = t.transpose(0, 3, 2, 1)
    else:
        raise ValueError(f"subsystem must be 0 or 1, got {subsystem}")
    return t.reshape(d0 * d1, d0 * d1)


def herm_eig(m: np.ndarray, tol: float = HERMITICITY_TOL) -> tuple[np.ndarray, np.ndarray]:
    """Eigendecomposition of a Hermitian matrix with a reproducible phase convention.

    Returns ``(w, v)`` with eigenvalues ascending and each eigenvector's first
    non-negligible component made real positive, so repeated runs and golden
    tests see identical vectors.
    """
    m = np.asarray(m, dtype=complex)
    dev = float(np.max(np.abs(m - m.conj().T))) if m.size else 0.0
    if dev > tol:
        raise InvalidStateError(f"matrix is not Hermitian: max|m - m†| = {dev:.3e} exceeds {tol:.1e}")
    w, v = np.linalg.eigh(hermitian_part(m))
    for j in range(v.shape[1]):
        col = v[:, j]
        idx = int(np.argmax(np.abs(col) > 1e-8))
        pivot = col[idx]
        if pivot != 0:
            v[:, j] = col * (abs(pivot) / pivot)
    return w, v


def _spectral_apply(m: np.ndarray, fn, tol: float = HERMITICITY_TOL) -> np.ndarray:
    w, v = herm_eig(m, tol)
    return hermitian_part((v * fn(w)) @ v.conj().T)


def matrix_log2(m: np.ndarray, eps: float = EIG_FLOOR, tol: float = HERMITICITY_TOL):
    """Base-2 logarithm of a Hermitian PSD matrix, with kernel regularization.

    Eigenvalues below ``eps`` are treated as structural zeros and floored at
    ``eps``; entropy formulas downstream rely on the 0·log0 = 0 convention so
    these directions never contribute. Returns ``(log, support)`` where
    ``support`` projects onto the eigendirections at or above the floor.
    """
    w, v = herm_eig(m, tol)
    if w.size and w[0] < -tol:
        raise InvalidStateError(
            f"matrix has negative eigenvalue {w[0]:.3e}; not a valid positive-semidefinite operator"
        )
    on_support = w >= eps
    lw = np.log2(np.where(on_support, np.maximum(w, eps), eps))
    log = hermitian_part((v * lw) @ v.conj().T)
    vs = v[:, on_support]
    support = hermitian_part(vs @ vs.conj().T)
    return log, support


def matrix_exp2(m: np.ndarray, tol: float = HERMITICITY_TOL) -> np.ndarray:
    """2**m for Hermitian m, computed spectrally; inverse of :func:`matrix_log2`."""
    return _spectral_apply(m, lambda w: np.exp2(w), tol)


def lie_trotter_product(a: np.ndarray, b: np.ndarray, n: int,
                        eps: float = EIG_FLOOR, tol: float = HERMITICITY_TOL) -> np.ndarray:
    """Finite-n product [a^(1/n) · b^(-1/n)]^n with spectral fractional powers.

    ``a`` must be PSD and ``b`` positive definite on the support of ``a``
    (directions where ``b`` vanishes away from that support use pseudo-inverse
    powers). Serves as a convergence oracle for exp2(log2 a - log2 b).
    """
    if n < 1:
        raise ValueError("n must be a positive integer")
    wa, va = herm_eig(a, tol)
    wb, vb = herm_eig(b, tol)
    if wa.size and wa[0] < -tol:
        raise InvalidStateError(f"first factor has negative eigenvalue {wa[0]:.3e}")
    if wb.size and wb[0] < -tol:
        raise InvalidStateError(f"second factor has negative eigenvalue {wb[0]:.3e}")
    a_supp = va[:, wa >= eps]
    b_kernel = vb[:, wb < eps]
    if b_kernel.shape[1] and a_supp.shape[1]:
        overlap = float(np.max(np.abs(b_kernel.conj().T @ a_supp)))
        if overlap > 1e-8:
            raise InvalidStateError(
                f"second factor is singular on the support of the first (overlap {overlap:.3e})"
            )
    frac_a = (va * np.maximum(wa, 0.0) ** (1.0 / n)) @ va.conj().T
    inv_pow = np.where(wb >= eps, np.maximum(wb, eps), 1.0) ** (-1.0 / n)
    inv_pow = np.where(wb >= eps, inv_pow, 0.0)
    frac_b = (vb * inv_pow) @ vb.conj().T
    return np.linalg.matrix_power(frac_a @ frac_b, n)
