"""Pure numpy implementations of the hot kernels.

Signatures match ``qheap._kernels`` exactly; ``qheap.kernels`` picks one of
the two at import time.
"""
import numpy as np


def apply_local_kraus(rho, ops, qubit, n):
    left = 1 << (qubit - 1)
    right = 1 << (n - qubit)
    t = rho.reshape(left, 2, right, left, 2, right)
    out = np.zeros_like(t)
    for k in ops:
        kt = np.einsum("ab,ibjkcl->iajkcl", k, t)
        out += np.einsum("iajkcl,dc->iajkdl", kt, k.conj())
    return out.reshape(rho.shape)


def ptrace_indexed(rho, keep_off, trace_off):
    rows = keep_off[:, None] + trace_off[None, :]
    # sum_t rho[keep[a] + t, keep[b] + t]
    block = rho[rows[:, None, :], rows[None, :, :]]
    return block.sum(axis=2)


def partial_transpose_masked(rho, mask):
    idx = np.arange(rho.shape[0], dtype=np.intp)
    i = idx[:, None]
    j = idx[None, :]
    src_i = (i & ~mask) | (j & mask)
    src_j = (j & ~mask) | (i & mask)
    return rho[src_i, src_j]
