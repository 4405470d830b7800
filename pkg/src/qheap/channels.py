"""Kraus channels: the named one-qubit channels, their extension to a
register, validity checks and application to a density matrix."""
from __future__ import annotations

from collections.abc import Sequence

import numpy as np

from . import kernels
from . import matrixcore as mc
from .gates import _check_range, register, sx, sy, sz

CHANNEL_TOL = 1e-10

_I2 = np.eye(2, dtype=np.complex128)


class KrausSet(Sequence):
    """A list of equally sized Kraus operators.

    Sets produced by :func:`localchannel` remember their factorisation into
    one-qubit channels on distinct qubits. ``operators`` materialises the
    full product set on first access, but :func:`applychannel` and
    :func:`ischannel` work qubit by qubit and never need it.
    """

    def __init__(self, operators=None, *, local=None, size=None):
        if operators is None and local is None:
            raise ValueError("KrausSet needs operators or a local factorisation")
        self._ops = None if operators is None else [mc.asmatrix(k) for k in operators]
        self.local = None if local is None else [(q, np.asarray(ops)) for q, ops in local]
        self.size = size
        if self._ops is not None:
            if not self._ops:
                raise ValueError("a channel needs at least one Kraus operator")
            shape = self._ops[0].shape
            if shape[0] != shape[1] or any(k.shape != shape for k in self._ops):
                raise mc.DimensionError("Kraus operators must be square and of equal size")
            self.dim = shape[0]
        else:
            self.dim = 1 << size

    @property
    def operators(self) -> list:
        if self._ops is None:
            self._ops = _expand(self.local, self.size)
        return self._ops

    def __len__(self):
        if self._ops is None:
            return int(np.prod([len(ops) for _, ops in self.local], dtype=np.int64))
        return len(self._ops)

    def __getitem__(self, i):
        return self.operators[i]

    def __repr__(self):
        return f"KrausSet(dim={self.dim}, count={len(self)})"


def _expand(local, size) -> list[np.ndarray]:
    ops = [np.eye(1 << size, dtype=np.complex128)]
    for q, factor in local:
        embedded = [_embed(k, q, size) for k in factor]
        ops = [e @ k for k in ops for e in embedded]
    return ops


def _embed(k: np.ndarray, qubit: int, size: int, sparse: bool = False) -> mc.ComplexMatrix:
    left = mc.identity(1 << (qubit - 1), sparse)
    right = mc.identity(1 << (size - qubit), sparse)
    return mc.kron(mc.kron(left, mc.as_backend(k, sparse)), right)


def _as_kraus(k) -> KrausSet:
    return k if isinstance(k, KrausSet) else KrausSet(list(k))


def _pauli_mix(p: float, paulis) -> list[np.ndarray]:
    return [np.sqrt(1 - p) * _I2] + [np.sqrt(p) * s for s in paulis]


def channel(name: str, p: float) -> KrausSet:
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"channel parameter {p!r} outside [0, 1]")
    if name == "depolarizing":
        ops = [np.sqrt(1 - 3 * p / 4) * _I2] + [np.sqrt(p / 4) * s for s in (sx, sy, sz)]
    elif name == "bitflip":
        ops = _pauli_mix(p, [sx])
    elif name == "phaseflip":
        ops = _pauli_mix(p, [sz])
    elif name == "bitphaseflip":
        ops = _pauli_mix(p, [sy])
    elif name == "amplitudedamping":
        ops = [
            np.array([[1, 0], [0, np.sqrt(1 - p)]], dtype=np.complex128),
            np.array([[0, np.sqrt(p)], [0, 0]], dtype=np.complex128),
        ]
    elif name == "phasedamping":
        ops = [
            np.array([[1, 0], [0, np.sqrt(1 - p)]], dtype=np.complex128),
            np.array([[0, 0], [0, np.sqrt(p)]], dtype=np.complex128),
        ]
    else:
        raise ValueError(f"unknown channel {name!r}; expected one of {sorted(CHANNELS)}")
    return KrausSet(ops)


CHANNELS = ("depolarizing", "amplitudedamping", "phasedamping", "bitflip", "phaseflip", "bitphaseflip")


def localchannel(k, target, size: int) -> KrausSet:
    """Extend a one-qubit channel to act independently on every target qubit."""
    k = _as_kraus(k)
    if k.dim != 2:
        raise mc.DimensionError("localchannel needs a one-qubit channel")
    tgt = register(target)
    _check_range(tgt, size)
    factor = np.stack([mc.to_dense(op) for op in k.operators])
    return KrausSet(local=[(q, factor) for q in sorted(tgt)], size=size)


def ischannel(k, atol: float = CHANNEL_TOL) -> bool:
    k = _as_kraus(k)
    if k.local is not None and k._ops is None:
        return all(_complete(list(ops), atol) for _, ops in k.local)
    return _complete(k.operators, atol)


def _complete(ops, atol: float) -> bool:
    total = None
    for op in ops:
        term = mc.matmul(mc.dagger(op), op)
        total = term if total is None else total + term
    return mc.allclose(total, mc.identity(total.shape[0], mc.issparse(total)), atol)


def applychannel(k, rho: mc.ComplexMatrix, check: bool = True) -> mc.ComplexMatrix:
    """rho -> sum_i K_i rho K_i^dagger, keeping the backend of ``rho``."""
    k = _as_kraus(k)
    if k.dim != rho.shape[0] or rho.shape[0] != rho.shape[1]:
        raise mc.DimensionError(f"channel of dimension {k.dim} cannot act on {rho.shape}")
    if check and not ischannel(k):
        raise ValueError("operators do not form a valid quantum channel")
    if k.local is not None and k._ops is None:
        return _apply_local(k, rho)
    sparse = mc.issparse(rho)
    out = None
    for op in k.operators:
        op = mc.as_backend(op, sparse)
        term = mc.matmul(mc.matmul(op, rho), mc.dagger(op))
        out = term if out is None else out + term
    return mc.canonical(out) if sparse else out


def _apply_local(k: KrausSet, rho):
    if mc.issparse(rho):
        out = rho
        for q, ops in k.local:
            acc = None
            for op in ops:
                e = _embed(op, q, k.size, sparse=True)
                term = e @ out @ e.conj().T
                acc = term if acc is None else acc + term
            out = mc.canonical(acc)
        return out
    out = np.asarray(rho)
    for q, ops in k.local:
        out = kernels.apply_local_kraus(out, ops, q)
    return out
