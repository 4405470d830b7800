"""Gate constructors: elementary one-qubit gates, permutations, the QFT
matrix, and composed / controlled gates over quantum registers.

Registers are collections of 1-based qubit indices; qubit 1 is the leftmost
tensor factor. All constructors return dense ``numpy`` matrices.
"""
from __future__ import annotations

from typing import Iterable, Sequence

import numpy as np

from . import matrixcore as mc

UNITARY_TOL = 1e-10

_I2 = np.eye(2, dtype=np.complex128)
_P1 = np.array([[0, 0], [0, 1]], dtype=np.complex128)

_PAULI = {
    "x": np.array([[0, 1], [1, 0]], dtype=np.complex128),
    "y": np.array([[0, -1j], [1j, 0]], dtype=np.complex128),
    "z": np.array([[1, 0], [0, -1]], dtype=np.complex128),
}


def register(qubits: int | Iterable[int]) -> tuple[int, ...]:
    """Normalise an int or iterable of qubit indices into a register tuple."""
    if isinstance(qubits, (int, np.integer)):
        qubits = (int(qubits),)
    reg = tuple(int(q) for q in qubits)
    if len(set(reg)) != len(reg):
        raise ValueError(f"register {reg} repeats a qubit")
    if any(q < 1 for q in reg):
        raise ValueError(f"register {reg} has an index below 1")
    return reg


def _check_range(reg: Sequence[int], size: int) -> None:
    if any(q > size for q in reg):
        raise ValueError(f"register {tuple(reg)} exceeds gate size {size}")


def pauli(which: str) -> np.ndarray:
    try:
        return _PAULI[which].copy()
    except KeyError:
        raise ValueError(f"unknown Pauli axis {which!r}") from None


sx = _PAULI["x"]
sy = _PAULI["y"]
sz = _PAULI["z"]


def identity(n: int = 1) -> np.ndarray:
    """Identity on ``n`` qubits."""
    if n < 0:
        raise ValueError("qubit count must be non-negative")
    return np.eye(1 << n, dtype=np.complex128)


def hadamard() -> np.ndarray:
    return np.array([[1, 1], [1, -1]], dtype=np.complex128) / np.sqrt(2)


def rot(axis: str, a: float) -> np.ndarray:
    """exp(-i a sigma_axis / 2)."""
    s = pauli(axis)
    return np.cos(a / 2) * _I2 - 1j * np.sin(a / 2) * s


def phase2(p0: float, p1: float) -> np.ndarray:
    return np.diag([np.exp(1j * p0), np.exp(1j * p1)]).astype(np.complex128)


def rphase(phi: float) -> np.ndarray:
    return phase2(0.0, phi)


def qft(n: int) -> np.ndarray:
    if n < 1:
        raise ValueError("qft needs n >= 1")
    dim = 1 << n
    jk = np.outer(np.arange(dim), np.arange(dim)) % dim
    return np.exp(2j * np.pi * jk / dim) / np.sqrt(dim)


def qubitpermutation(perm: Sequence[int]) -> np.ndarray:
    """Gate moving the value of qubit ``i`` to position ``perm[i-1]``."""
    perm = [int(p) for p in perm]
    n = len(perm)
    if sorted(perm) != list(range(1, n + 1)):
        raise ValueError(f"{perm} is not a permutation of 1..{n}")
    dim = 1 << n
    src = np.arange(dim)
    dst = np.zeros(dim, dtype=np.intp)
    for i, p in enumerate(perm, start=1):
        bit = (src >> (n - i)) & 1
        dst |= bit << (n - p)
    u = np.zeros((dim, dim), dtype=np.complex128)
    u[dst, src] = 1.0
    return u


def swap(size: int, qubits: Sequence[int]) -> np.ndarray:
    reg = register(qubits)
    if len(reg) != 2:
        raise ValueError("swap needs exactly two qubits")
    _check_range(reg, size)
    perm = list(range(1, size + 1))
    a, b = reg
    perm[a - 1], perm[b - 1] = b, a
    return qubitpermutation(perm)


def flip(n: int) -> np.ndarray:
    """Reverse the order of ``n`` qubits."""
    return qubitpermutation(list(range(n, 0, -1)))


def productgate(g: np.ndarray, target, size: int) -> np.ndarray:
    reg = register(target)
    _check_range(reg, size)
    return mc.kron_all(g if i in reg else _I2 for i in range(1, size + 1))


def controlledgate(g: np.ndarray, control, target, size: int) -> np.ndarray:
    """``g`` on every target qubit when all control qubits are |1>, else identity."""
    ctrl = register(control)
    tgt = register(target)
    if set(ctrl) & set(tgt):
        raise ValueError("control and target registers overlap")
    _check_range(ctrl + tgt, size)
    if not ctrl:
        return productgate(g, tgt, size)
    ys = (g if i in tgt else _P1 if i in ctrl else _I2 for i in range(1, size + 1))
    # the kron of |0><0| factors only covers "all controls 0"; with several
    # controls the untouched subspace is "any control 0"
    return _all_ones_complement(ctrl, size) + mc.kron_all(ys)


def _all_ones_complement(ctrl: Sequence[int], size: int) -> np.ndarray:
    """Projector onto basis states where at least one control qubit is |0>."""
    dim = 1 << size
    idx = np.arange(dim)
    all_one = np.ones(dim, dtype=bool)
    for q in ctrl:
        all_one &= ((idx >> (size - q)) & 1).astype(bool)
    return np.diag((~all_one).astype(np.complex128))


def cphase(phi: float, control: int, target: int, size: int) -> np.ndarray:
    return controlledgate(rphase(phi), control, target, size)


def circuit(*gates) -> mc.ComplexMatrix:
    """Compose gates so the first one listed acts first on the state."""
    if len(gates) == 1 and isinstance(gates[0], (list, tuple)):
        gates = tuple(gates[0])
    if not gates:
        raise ValueError("circuit needs at least one gate")
    out = gates[0]
    for g in gates[1:]:
        if g.shape != out.shape:
            raise mc.DimensionError(f"gate sizes differ: {out.shape} vs {g.shape}")
        out = mc.matmul(g, out)
    return out


def isunitary(g: mc.ComplexMatrix, atol: float = UNITARY_TOL) -> bool:
    if g.ndim != 2 or g.shape[0] != g.shape[1]:
        raise mc.DimensionError(f"square matrix required, got shape {g.shape}")
    prod = mc.matmul(g, mc.dagger(g))
    return mc.allclose(prod, mc.identity(g.shape[0], mc.issparse(prod)), atol)
