"""Complex matrix backbone shared by every other module.

Matrices are either dense ``numpy.ndarray`` objects or canonical
``scipy.sparse.csr_array`` objects. Every function here accepts both and
returns a sparse result whenever one of its operands is sparse, so the two
backends can be swapped without changing any calling code.
"""
from __future__ import annotations

from typing import Union

import numpy as np
import scipy.sparse as sp

ComplexMatrix = Union[np.ndarray, sp.sparray, sp.spmatrix]

ATOL = 1e-12
SPECTRAL_ATOL = 1e-10
PSD_CLAMP = 1e-10


class DimensionError(ValueError):
    """Operand shapes are incompatible."""


def issparse(a) -> bool:
    return sp.issparse(a)


def canonical(a: ComplexMatrix) -> sp.csr_array:
    """CSR with sorted indices, no duplicates and no stored zeros."""
    m = sp.csr_array(a, dtype=np.complex128)
    m.sum_duplicates()
    m.eliminate_zeros()
    m.sort_indices()
    return m


def to_sparse(a: ComplexMatrix) -> sp.csr_array:
    return canonical(a)


def to_dense(a: ComplexMatrix) -> np.ndarray:
    if sp.issparse(a):
        return a.toarray().astype(np.complex128, copy=False)
    return np.asarray(a, dtype=np.complex128)


def as_backend(a: ComplexMatrix, sparse: bool) -> ComplexMatrix:
    return to_sparse(a) if sparse else to_dense(a)


def asmatrix(a) -> ComplexMatrix:
    """Coerce array-likes to a complex matrix, keeping the backend."""
    if sp.issparse(a):
        return canonical(a)
    a = np.asarray(a, dtype=np.complex128)
    if a.ndim == 1:
        a = a.reshape(-1, 1)
    if a.ndim != 2:
        raise DimensionError(f"expected a 2-d matrix, got shape {a.shape}")
    return a


def kron(a: ComplexMatrix, b: ComplexMatrix) -> ComplexMatrix:
    if sp.issparse(a) or sp.issparse(b):
        return canonical(sp.kron(to_sparse(a), to_sparse(b), format="csr"))
    return np.kron(to_dense(a), to_dense(b))


def kron_all(mats) -> ComplexMatrix:
    out = None
    for m in mats:
        out = m if out is None else kron(out, m)
    if out is None:
        return np.ones((1, 1), dtype=np.complex128)
    return out


def dagger(a: ComplexMatrix) -> ComplexMatrix:
    if sp.issparse(a):
        return canonical(a.conj().T)
    return np.asarray(a).conj().T.copy()


def matmul(a: ComplexMatrix, b: ComplexMatrix) -> ComplexMatrix:
    if a.shape[1] != b.shape[0]:
        raise DimensionError(f"cannot multiply {a.shape} by {b.shape}")
    if sp.issparse(a) or sp.issparse(b):
        return canonical(to_sparse(a) @ to_sparse(b))
    return np.asarray(a) @ np.asarray(b)


def _require_square(a: ComplexMatrix) -> None:
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise DimensionError(f"square matrix required, got shape {a.shape}")


def trace(a: ComplexMatrix) -> complex:
    _require_square(a)
    return complex(a.diagonal().sum())


def identity(dim: int, sparse: bool = False) -> ComplexMatrix:
    if sparse:
        return canonical(sp.identity(dim, dtype=np.complex128, format="csr"))
    return np.eye(dim, dtype=np.complex128)


def max_abs(a: ComplexMatrix) -> float:
    if sp.issparse(a):
        a = canonical(a)
        return float(np.max(np.abs(a.data))) if a.nnz else 0.0
    return float(np.max(np.abs(a))) if a.size else 0.0


def allclose(a: ComplexMatrix, b: ComplexMatrix, atol: float = ATOL) -> bool:
    if a.shape != b.shape:
        return False
    if sp.issparse(a) or sp.issparse(b):
        return max_abs(to_sparse(a) - to_sparse(b)) <= atol
    return bool(np.max(np.abs(np.asarray(a) - np.asarray(b)), initial=0.0) <= atol)


def is_hermitian(a: ComplexMatrix, atol: float = SPECTRAL_ATOL) -> bool:
    _require_square(a)
    return allclose(a, dagger(a), atol=atol)


def hermitian_eig(a: ComplexMatrix, atol: float = SPECTRAL_ATOL):
    """Eigenvalues (ascending, real) and orthonormal eigenvectors of a Hermitian matrix.

    Sparse input is densified; the simulator never diagonalises anything
    larger than a few thousand rows.
    """
    _require_square(a)
    if not is_hermitian(a, atol):
        raise ValueError("hermitian_eig requires a Hermitian matrix")
    dense = to_dense(a)
    # symmetrise so roundoff asymmetry does not leak into the spectrum
    w, v = np.linalg.eigh(0.5 * (dense + dense.conj().T))
    return w, v


def psd_sqrt(a: ComplexMatrix, clamp: float = PSD_CLAMP) -> ComplexMatrix:
    w, v = hermitian_eig(a)
    if w.size and w[0] < -clamp:
        raise ValueError(f"matrix is not positive semidefinite (eigenvalue {w[0]:.3g})")
    root = (v * np.sqrt(np.clip(w, 0.0, None))) @ v.conj().T
    return to_sparse(root) if sp.issparse(a) else root
