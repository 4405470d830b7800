"""Dense density-matrix kernels with a compiled core and a numpy fallback.

The compiled extension ``qheap._kernels`` is used when it imports; otherwise,
or when ``QHEAP_PURE_PYTHON=1`` is set, the numpy versions in
``qheap._fallback`` are used. ``BACKEND`` names the active implementation.

Qubits are 1-based and qubit 1 is the most significant bit of a basis index.
"""
from __future__ import annotations

import importlib
import os
from types import ModuleType

import numpy as np

from . import _fallback


def load(name: str) -> ModuleType:
    """Return the kernel module for ``"cython"`` or ``"python"``."""
    if name == "python":
        return _fallback
    if name == "cython":
        return importlib.import_module("qheap._kernels")
    raise ValueError(f"unknown kernel backend {name!r}")


def _select() -> tuple[str, ModuleType]:
    if os.environ.get("QHEAP_PURE_PYTHON", "") not in ("", "0"):
        return "python", _fallback
    try:
        return "cython", load("cython")
    except ImportError:
        return "python", _fallback


BACKEND, _impl = _select()


def _dense(rho) -> np.ndarray:
    return np.ascontiguousarray(rho, dtype=np.complex128)


def qubit_count(dim: int) -> int:
    n = dim.bit_length() - 1
    if dim < 1 or (1 << n) != dim:
        raise ValueError(f"dimension {dim} is not a power of two")
    return n


def apply_local_kraus(rho, ops, qubit: int, impl: ModuleType | None = None) -> np.ndarray:
    """Apply the one-qubit Kraus operators ``ops`` to ``qubit`` of a dense state."""
    rho = _dense(rho)
    n = qubit_count(rho.shape[0])
    if not 1 <= qubit <= n:
        raise ValueError(f"qubit {qubit} outside 1..{n}")
    ops = np.ascontiguousarray(np.asarray(ops, dtype=np.complex128).reshape(-1, 2, 2))
    return (impl or _impl).apply_local_kraus(rho, ops, qubit, n)


def apply_local_unitary(rho, gate, qubit: int, impl: ModuleType | None = None) -> np.ndarray:
    return apply_local_kraus(rho, [gate], qubit, impl)


def _offsets(qubits, n: int) -> np.ndarray:
    """Basis-index offsets for every assignment of ``qubits`` (ascending, MSB first)."""
    offs = np.zeros(1, dtype=np.intp)
    for q in sorted(qubits):
        bit = 1 << (n - q)
        offs = (offs[:, None] + np.array([0, bit], dtype=np.intp)).reshape(-1)
    return offs


def ptrace(rho, traced, impl: ModuleType | None = None) -> np.ndarray:
    """Reduced state of a dense ``rho`` with the ``traced`` qubits removed."""
    rho = _dense(rho)
    n = qubit_count(rho.shape[0])
    traced = set(traced)
    if any(not 1 <= q <= n for q in traced):
        raise ValueError(f"traced qubits {sorted(traced)} outside 1..{n}")
    keep = [q for q in range(1, n + 1) if q not in traced]
    return (impl or _impl).ptrace_indexed(rho, _offsets(keep, n), _offsets(traced, n))


def partial_transpose(rho, target, impl: ModuleType | None = None) -> np.ndarray:
    rho = _dense(rho)
    n = qubit_count(rho.shape[0])
    mask = 0
    for q in target:
        if not 1 <= q <= n:
            raise ValueError(f"qubit {q} outside 1..{n}")
        mask |= 1 << (n - q)
    return (impl or _impl).partial_transpose_masked(rho, mask)
