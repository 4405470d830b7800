"""Shared fixtures and brute-force oracles.

The oracles work basis state by basis state with plain Python bit
arithmetic, so they share no code path with the library constructors they
check.
"""
import itertools

import numpy as np
import pytest


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


def random_density(n, rng, rank=None):
    dim = 1 << n
    rank = rank or dim
    a = rng.normal(size=(dim, rank)) + 1j * rng.normal(size=(dim, rank))
    rho = a @ a.conj().T
    return rho / np.trace(rho)


def random_unitary(dim, rng):
    a = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    q, r = np.linalg.qr(a)
    return q * (np.diag(r) / np.abs(np.diag(r)))


def bits_of(index, n):
    """MSB-first bits: bits[0] is qubit 1."""
    return [(index >> (n - 1 - i)) & 1 for i in range(n)]


def index_of(bits):
    out = 0
    for b in bits:
        out = 2 * out + b
    return out


def reg_value(bits, register):
    """Value of a register: lowest qubit index is the least significant bit."""
    return sum(bits[q - 1] << pos for pos, q in enumerate(sorted(register)))


def apply_per_qubit(bits, ops):
    """Tensor product of single-qubit columns; ``ops[q]`` acts on qubit q."""
    vec = np.ones(1, dtype=complex)
    for q, b in enumerate(bits, start=1):
        col = np.eye(2, dtype=complex)[:, b]
        if q in ops:
            col = ops[q] @ col
        vec = np.kron(vec, col)
    return vec


def brute_gate(n, choose):
    """Assemble a gate column by column.

    ``choose(bits)`` returns a mapping qubit -> one-qubit gate to apply to that
    basis state.
    """
    dim = 1 << n
    u = np.zeros((dim, dim), dtype=complex)
    for col in range(dim):
        bits = bits_of(col, n)
        u[:, col] = apply_per_qubit(bits, choose(bits))
    return u


def brute_controlled(g, control, target, n):
    def choose(bits):
        if all(bits[c - 1] == 1 for c in control):
            return {t: g for t in target}
        return {}

    return brute_gate(n, choose)


def brute_qif(pred, control, ifpart, elsepart, n):
    def choose(bits):
        g, tgt = ifpart if pred(reg_value(bits, control)) else elsepart
        return {t: g for t in tgt}

    return brute_gate(n, choose)


def brute_pointer(g, control, target, n):
    tgt = sorted(target)

    def choose(bits):
        return {tgt[reg_value(bits, control)]: g}

    return brute_gate(n, choose)


def brute_ptrace(rho, traced, n):
    keep = [q for q in range(1, n + 1) if q not in traced]
    dk = 1 << len(keep)
    out = np.zeros((dk, dk), dtype=complex)
    for a, b in itertools.product(range(dk), repeat=2):
        ka, kb = bits_of(a, len(keep)), bits_of(b, len(keep))
        for t in itertools.product((0, 1), repeat=len(traced)):
            ra, rb = [0] * n, [0] * n
            for q, v1, v2 in zip(keep, ka, kb):
                ra[q - 1], rb[q - 1] = v1, v2
            for q, v in zip(sorted(traced), t):
                ra[q - 1] = rb[q - 1] = v
            out[a, b] += rho[index_of(ra), index_of(rb)]
    return out


def brute_partial_transpose(rho, target, n):
    dim = 1 << n
    out = np.zeros_like(rho)
    for i, j in itertools.product(range(dim), repeat=2):
        bi, bj = bits_of(i, n), bits_of(j, n)
        for q in target:
            bi[q - 1], bj[q - 1] = bj[q - 1], bi[q - 1]
        out[i, j] = rho[index_of(bi), index_of(bj)]
    return out


def statevector_grover(n, marked, iterations):
    """Amplitude-level Grover: sign flip, then inversion about the mean."""
    amps = np.full(1 << n, 1 / np.sqrt(1 << n))
    for _ in range(iterations):
        amps[marked] = -amps[marked]
        amps = 2 * amps.mean() - amps
    return amps**2


ACCEPTANCE = pytest.StashKey[dict]()


@pytest.fixture
def verdict(request):
    """Record one acceptance line; the terminal summary prints them in order."""
    table = request.config.stash.setdefault(ACCEPTANCE, {})

    def record(number, label, ok, detail=""):
        table[number] = f"{'PASS' if ok else 'FAIL'}  criterion {number:>2}: {label}" + (f" ({detail})" if detail else "")
        assert ok, table[number]

    return record


def pytest_terminal_summary(terminalreporter, config):
    table = config.stash.get(ACCEPTANCE, None)
    if not table:
        return
    terminalreporter.section("acceptance")
    for number in sorted(table):
        terminalreporter.write_line(table[number])
