# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels for the density-matrix inner loops.

All inputs are C-contiguous complex128 / intp arrays; validation happens in
``qheap.kernels``.
"""
import numpy as np


def apply_local_kraus(const double complex[:, ::1] rho,
                      const double complex[:, :, ::1] ops,
                      int qubit, int n):
    """sum_k K_k rho K_k^dagger with every K_k acting on one qubit."""
    cdef Py_ssize_t dim = rho.shape[0]
    cdef Py_ssize_t stride = (<Py_ssize_t>1) << (n - qubit)
    cdef Py_ssize_t m = ops.shape[0]
    cdef Py_ssize_t i0, i1, j0, j1, k
    cdef double complex b00, b01, b10, b11
    cdef double complex k00, k01, k10, k11, c00, c01, c10, c11
    cdef double complex t00, t01, t10, t11
    out = np.zeros((dim, dim), dtype=np.complex128)
    cdef double complex[:, ::1] o = out

    for i0 in range(dim):
        if i0 & stride:
            continue
        i1 = i0 | stride
        for j0 in range(dim):
            if j0 & stride:
                continue
            j1 = j0 | stride
            b00 = rho[i0, j0]
            b01 = rho[i0, j1]
            b10 = rho[i1, j0]
            b11 = rho[i1, j1]
            for k in range(m):
                k00 = ops[k, 0, 0]
                k01 = ops[k, 0, 1]
                k10 = ops[k, 1, 0]
                k11 = ops[k, 1, 1]
                c00 = k00.conjugate()
                c01 = k01.conjugate()
                c10 = k10.conjugate()
                c11 = k11.conjugate()
                t00 = k00 * b00 + k01 * b10
                t01 = k00 * b01 + k01 * b11
                t10 = k10 * b00 + k11 * b10
                t11 = k10 * b01 + k11 * b11
                o[i0, j0] += t00 * c00 + t01 * c01
                o[i0, j1] += t00 * c10 + t01 * c11
                o[i1, j0] += t10 * c00 + t11 * c01
                o[i1, j1] += t10 * c10 + t11 * c11
    return out


def ptrace_indexed(const double complex[:, ::1] rho,
                   const Py_ssize_t[::1] keep_off,
                   const Py_ssize_t[::1] trace_off):
    cdef Py_ssize_t nk = keep_off.shape[0]
    cdef Py_ssize_t nt = trace_off.shape[0]
    cdef Py_ssize_t a, b, t, ra, rb
    cdef double complex acc
    out = np.empty((nk, nk), dtype=np.complex128)
    cdef double complex[:, ::1] o = out

    for a in range(nk):
        ra = keep_off[a]
        for b in range(nk):
            rb = keep_off[b]
            acc = 0
            for t in range(nt):
                acc = acc + rho[ra + trace_off[t], rb + trace_off[t]]
            o[a, b] = acc
    return out


def partial_transpose_masked(const double complex[:, ::1] rho, Py_ssize_t mask):
    cdef Py_ssize_t dim = rho.shape[0]
    cdef Py_ssize_t i, j
    cdef Py_ssize_t keep = ~mask
    out = np.empty((dim, dim), dtype=np.complex128)
    cdef double complex[:, ::1] o = out

    for i in range(dim):
        for j in range(dim):
            o[i, j] = rho[(i & keep) | (j & mask), (j & keep) | (i & mask)]
    return out
