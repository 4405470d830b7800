"""The quantum heap: a global density matrix plus a register table.

New qubits are appended at the highest indices, so qubit 1 stays the most
significant bit of the basis index. Clearing a register traces its qubits
out and renumbers the survivors contiguously; register ids never change.
"""
from __future__ import annotations

from typing import Iterable

import numpy as np
import scipy.sparse as sp

from . import channels as ch
from . import kernels
from . import matrixcore as mc
from .gates import isunitary, register

PROB_CLAMP = 1e-12
PROB_SUM_TOL = 1e-9


class SessionError(RuntimeError):
    pass


def ptrace(rho: mc.ComplexMatrix, target: Iterable[int]) -> mc.ComplexMatrix:
    """Reduced density matrix with the ``target`` qubits traced out."""
    tgt = register(target)
    if not mc.issparse(rho):
        return kernels.ptrace(rho, tgt)
    n = kernels.qubit_count(rho.shape[0])
    if any(q > n for q in tgt):
        raise ValueError(f"traced qubits {tgt} outside 1..{n}")
    tmask = sum(1 << (n - q) for q in tgt)
    keep = [q for q in range(1, n + 1) if q not in tgt]
    coo = sp.coo_array(rho)
    rows, cols = coo.row.astype(np.int64), coo.col.astype(np.int64)
    sel = (rows & tmask) == (cols & tmask)
    out = sp.coo_array(
        (coo.data[sel], (_compress(rows[sel], keep, n), _compress(cols[sel], keep, n))),
        shape=(1 << len(keep), 1 << len(keep)),
    )
    return mc.canonical(out)


def _compress(idx: np.ndarray, keep: list[int], n: int) -> np.ndarray:
    """Map global basis indices onto the index space of the ``keep`` qubits."""
    out = np.zeros_like(idx)
    m = len(keep)
    for pos, q in enumerate(keep):
        out |= ((idx >> (n - q)) & 1) << (m - 1 - pos)
    return out


def collapse(distribution, rng: np.random.Generator) -> int:
    p = _validated(distribution)
    return int(rng.choice(len(p), p=p))


def _validated(distribution) -> np.ndarray:
    p = np.asarray(distribution, dtype=float).ravel()
    if p.size == 0 or np.any(p < -PROB_CLAMP) or abs(p.sum() - 1.0) > PROB_SUM_TOL:
        raise ValueError("not a probability distribution")
    p = np.clip(p, 0.0, None)
    return p / p.sum()


class Session:
    """Single-owner simulator state. Not safe for concurrent mutation."""

    def __init__(self, sparse: bool = False, seed: int | None = None):
        self.sparse = bool(sparse)
        self.seed = seed
        self.rng = np.random.default_rng(seed)
        self._state = mc.as_backend(np.ones((1, 1)), self.sparse)
        self._registers: dict[int, tuple[int, ...]] = {}
        self._next_id = 1

    @property
    def qubit_count(self) -> int:
        return kernels.qubit_count(self._state.shape[0])

    @property
    def registers(self) -> dict[int, tuple[int, ...]]:
        return dict(self._registers)

    def getstate(self) -> mc.ComplexMatrix:
        return self._state.copy()

    def qureg(self, regid: int) -> tuple[int, ...]:
        try:
            return self._registers[regid]
        except KeyError:
            raise SessionError(f"unknown register id {regid!r}") from None

    def set_sparse(self, on: bool = True) -> None:
        self.sparse = bool(on)
        self._state = mc.as_backend(self._state, self.sparse)

    def newregister(self, size: int) -> int:
        if size < 1:
            raise ValueError("register size must be positive")
        start = self.qubit_count + 1
        zero = np.zeros((1 << size, 1 << size), dtype=np.complex128)
        zero[0, 0] = 1.0
        self._state = mc.kron(self._state, mc.as_backend(zero, self.sparse))
        regid = self._next_id
        self._next_id += 1
        self._registers[regid] = tuple(range(start, start + size))
        return regid

    def clearregister(self, regid: int) -> None:
        removed = set(self.qureg(regid))
        self._state = ptrace(self._state, removed)
        del self._registers[regid]
        for rid, reg in self._registers.items():
            self._registers[rid] = tuple(q - sum(1 for r in removed if r < q) for q in reg)

    def evolve(self, u: mc.ComplexMatrix) -> None:
        if u.shape != self._state.shape:
            raise mc.DimensionError(f"gate of shape {u.shape} does not fit {self.qubit_count} qubits")
        u = mc.as_backend(u, self.sparse)
        if not isunitary(u):
            raise ValueError("evolution operator is not unitary")
        self._state = mc.matmul(mc.matmul(u, self._state), mc.dagger(u))

    def applychannel(self, k) -> None:
        self._state = ch.applychannel(k, self._state)

    def measurecompbasis(self) -> np.ndarray:
        """Probabilities of every basis state; the state is dephased in place."""
        if self.qubit_count == 0:
            raise SessionError("nothing allocated to measure")
        diag = np.real(np.asarray(self._state.diagonal())).copy()
        diag[(diag < 0) & (diag >= -PROB_CLAMP)] = 0.0
        p = _validated(diag)
        dephased = np.diag(diag.astype(np.complex128))
        self._state = mc.as_backend(dephased, self.sparse)
        return p

    def collapse(self, distribution) -> int:
        return collapse(distribution, self.rng)

    def validate(self, atol: float = 1e-10) -> None:
        """Raise ``SessionError`` if any heap invariant is broken."""
        n = self.qubit_count
        seen: set[int] = set()
        for rid, reg in self._registers.items():
            if seen & set(reg):
                raise SessionError(f"register {rid} overlaps another register")
            if any(not 1 <= q <= n for q in reg):
                raise SessionError(f"register {rid} points outside 1..{n}")
            seen |= set(reg)
        rho = self._state
        if not mc.is_hermitian(rho, atol):
            raise SessionError("state is not Hermitian")
        if abs(mc.trace(rho) - 1) > atol:
            raise SessionError("state trace is not 1")
        w, _ = mc.hermitian_eig(rho, atol)
        if w[0] < -atol:
            raise SessionError(f"state has negative eigenvalue {w[0]:.3g}")


def init(sparse: bool = False, seed: int | None = None) -> Session:
    return Session(sparse=sparse, seed=seed)
