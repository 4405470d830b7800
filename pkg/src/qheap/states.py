"""Kets, bras, density matrices and a catalogue of well-known states.

Binary strings are MSB first: the first bit is qubit 1, the leftmost tensor
factor. Kets are column vectors of shape ``(2**n, 1)``.
"""
from __future__ import annotations

from typing import Iterable, Sequence

import numpy as np

from . import matrixcore as mc

NORM_TOL = 1e-8
WEIGHT_TOL = 1e-10

_SQRT_HALF = 1 / np.sqrt(2)


def ket(binvec: Sequence[int]) -> np.ndarray:
    bits = list(binvec)
    if not bits:
        raise ValueError("ket needs at least one bit")
    if any(b not in (0, 1) for b in bits):
        raise ValueError(f"not a binary string: {bits}")
    index = int("".join(str(int(b)) for b in bits), 2)
    return _basis(index, len(bits))


def _basis(index: int, size: int) -> np.ndarray:
    v = np.zeros((1 << size, 1), dtype=np.complex128)
    v[index, 0] = 1.0
    return v


def ketn(value: int, size: int) -> np.ndarray:
    if size < 1:
        raise ValueError("size must be positive")
    if not 0 <= value < (1 << size):
        raise ValueError(f"{value} does not fit in {size} qubits")
    return _basis(value, size)


def bran(value: int, size: int) -> np.ndarray:
    return ketn(value, size).conj().T


def state(pure: np.ndarray) -> np.ndarray:
    """Density matrix ``|psi><psi|`` of a normalised ket."""
    psi = np.asarray(pure, dtype=np.complex128).reshape(-1, 1)
    norm = np.linalg.norm(psi)
    if abs(norm - 1.0) > NORM_TOL:
        raise ValueError(f"ket is not normalised (norm {norm:.12g})")
    return psi @ psi.conj().T


def mixstates(pairs: Iterable[tuple[float, mc.ComplexMatrix]]) -> mc.ComplexMatrix:
    pairs = list(pairs)
    if not pairs:
        raise ValueError("mixstates needs at least one component")
    weights = [float(w) for w, _ in pairs]
    if any(w < 0 for w in weights):
        raise ValueError("mixture weights must be non-negative")
    if abs(sum(weights) - 1.0) > WEIGHT_TOL:
        raise ValueError(f"mixture weights sum to {sum(weights)!r}, not 1")
    shape = pairs[0][1].shape
    out = None
    for w, rho in pairs:
        if rho.shape != shape:
            raise mc.DimensionError("all mixed states must have the same dimension")
        out = w * rho if out is None else out + w * rho
    return mc.canonical(out) if mc.issparse(out) else out


def ghz(n: int) -> np.ndarray:
    if n < 1:
        raise ValueError("ghz needs n >= 1")
    v = np.zeros((1 << n, 1), dtype=np.complex128)
    v[0, 0] = v[-1, 0] = _SQRT_HALF
    return v


_BELL = {
    "phip": (0, 3, 1),
    "phim": (0, 3, -1),
    "psip": (1, 2, 1),
    "psim": (1, 2, -1),
}


def bell(which: str) -> np.ndarray:
    try:
        a, b, sign = _BELL[which]
    except KeyError:
        raise ValueError(f"unknown Bell state {which!r}; expected one of {sorted(_BELL)}") from None
    v = np.zeros((4, 1), dtype=np.complex128)
    v[a, 0] = _SQRT_HALF
    v[b, 0] = sign * _SQRT_HALF
    return v


def maximallymixed(n: int) -> np.ndarray:
    """``I/n`` for an ``n``-dimensional space (``n`` a power of two)."""
    if n < 1 or n & (n - 1):
        raise ValueError(f"dimension {n} is not a positive power of two")
    return np.eye(n, dtype=np.complex128) / n


def wernersinglet(a: float) -> np.ndarray:
    if not 0.0 <= a <= 1.0:
        raise ValueError("Werner parameter must lie in [0, 1]")
    return a * state(bell("phim")) + (1 - a) * np.eye(4, dtype=np.complex128) / 4


def is_density_matrix(rho: mc.ComplexMatrix, atol: float = 1e-10) -> bool:
    """Hermitian, unit trace and no eigenvalue below ``-atol``."""
    if rho.ndim != 2 or rho.shape[0] != rho.shape[1]:
        return False
    dim = rho.shape[0]
    if dim & (dim - 1):
        return False
    if not mc.is_hermitian(rho, atol) or abs(mc.trace(rho) - 1) > atol:
        return False
    w, _ = mc.hermitian_eig(rho, atol)
    return bool(w[0] >= -atol)
