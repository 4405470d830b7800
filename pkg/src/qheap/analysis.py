"""Entanglement and distance measures on density matrices.

Entropy is in bits. Negativity is the absolute sum of the negative
eigenvalues of the partial transpose, so a Bell pair has negativity 0.5.
"""
from __future__ import annotations

import numpy as np
import scipy.sparse as sp

from . import kernels
from . import matrixcore as mc
from .gates import register, sy

_SPIN_FLIP = np.kron(sy, sy)


def partialtranspose(rho: mc.ComplexMatrix, target) -> mc.ComplexMatrix:
    tgt = register(target)
    if not mc.issparse(rho):
        return kernels.partial_transpose(rho, tgt)
    n = kernels.qubit_count(rho.shape[0])
    if any(q > n for q in tgt):
        raise ValueError(f"target {tgt} outside 1..{n}")
    mask = sum(1 << (n - q) for q in tgt)
    coo = sp.coo_array(rho)
    i, j = coo.row.astype(np.int64), coo.col.astype(np.int64)
    new_i = (i & ~mask) | (j & mask)
    new_j = (j & ~mask) | (i & mask)
    return mc.canonical(sp.coo_array((coo.data, (new_i, new_j)), shape=rho.shape))


def negativity(rho: mc.ComplexMatrix, qubits) -> float:
    w, _ = mc.hermitian_eig(partialtranspose(rho, qubits))
    return float(-w[w < 0].sum())


def entropy(rho: mc.ComplexMatrix) -> float:
    w, _ = mc.hermitian_eig(rho)
    w = np.clip(w, 0.0, 1.0)
    w = w[w > 0]
    return float(-np.sum(w * np.log2(w)) + 0.0)


def concurrence(rho: mc.ComplexMatrix) -> float:
    if rho.shape != (4, 4):
        raise mc.DimensionError("concurrence is defined for two-qubit states only")
    r = mc.to_dense(rho)
    flipped = r @ _SPIN_FLIP @ r.conj() @ _SPIN_FLIP
    # spectrum of rho * rho~ is real and non-negative for a valid state
    mu = np.sort(np.clip(np.linalg.eigvals(flipped).real, 0.0, None))[::-1]
    s = np.sqrt(mu)
    return float(max(0.0, s[0] - s[1] - s[2] - s[3]))


def _root(rho: mc.ComplexMatrix) -> np.ndarray:
    w, v = mc.hermitian_eig(rho)
    if w[0] < -mc.PSD_CLAMP:
        raise ValueError(f"state has negative eigenvalue {w[0]:.3g}")
    # roundoff eigenvalues near 1e-17 would become 3e-9 after the root
    floor = rho.shape[0] * np.finfo(float).eps * max(1.0, w[-1])
    w = np.where(w > floor, w, 0.0)
    return (v * np.sqrt(w)) @ v.conj().T


def fidelity(rho: mc.ComplexMatrix, sigma: mc.ComplexMatrix) -> float:
    """Tr sqrt(sqrt(rho) sigma sqrt(rho)), evaluated as the trace norm of sqrt(rho) sqrt(sigma)."""
    if rho.shape != sigma.shape:
        raise mc.DimensionError(f"states have shapes {rho.shape} and {sigma.shape}")
    s = np.linalg.svd(_root(rho) @ _root(sigma), compute_uv=False)
    return float(np.clip(s.sum(), 0.0, 1.0))


def fidelitypuremixed(psi, rho: mc.ComplexMatrix) -> float:
    v = np.asarray(psi, dtype=np.complex128).reshape(-1, 1)
    if v.shape[0] != rho.shape[0]:
        raise mc.DimensionError(f"ket of length {v.shape[0]} vs state of shape {rho.shape}")
    overlap = (v.conj().T @ (rho @ v)).real.item()
    return float(np.sqrt(max(overlap, 0.0)))


def tracenorm(a: mc.ComplexMatrix) -> float:
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise mc.DimensionError(f"square matrix required, got shape {a.shape}")
    return float(np.linalg.svd(mc.to_dense(a), compute_uv=False).sum())
