"""Reference algorithms built on the session API: the QFT circuit, Deutsch's
algorithm and Grover search with optional per-iteration noise."""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import matrixcore as mc
from .channels import channel, localchannel
from .gates import circuit, cphase, flip, hadamard, identity, productgate, sx
from .qcond import qif, qreq
from .session import Session
from .states import bran, ketn


def dft(n: int, sparse: bool = False) -> mc.ComplexMatrix:
    """QFT assembled from Hadamards and controlled phases, ending with a qubit reversal."""
    if n < 1:
        raise ValueError("dft needs n >= 1")

    def b(g):
        return mc.as_backend(g, sparse)

    cir = b(identity(n))
    for i in range(1, n + 1):
        for j in range(1, i):
            cir = circuit(cir, b(cphase(math.pi / 2 ** (i - j), j, i, n)))
        cir = circuit(cir, b(productgate(hadamard(), i, n)))
    return circuit(cir, b(flip(n)))


def deutsch_oracle(oracle_id: int, r1, r2) -> np.ndarray:
    """The four one-bit functions: f=0, f=1, f(x)=x, f(x)=not x."""
    id1 = identity(1)
    if oracle_id == 1:
        return identity(2)
    if oracle_id == 2:
        return productgate(sx, r2, 2)
    if oracle_id == 3:
        return qif(qreq(r1, 1), (sx, r2), (id1, r2), 2)
    if oracle_id == 4:
        return qif(qreq(r1, 0), (sx, r2), (id1, r2), 2)
    raise ValueError(f"oracle id must be 1..4, got {oracle_id!r}")


def deutsch(oracle_id: int, sparse: bool = False) -> np.ndarray:
    """Distribution of the first qubit; (1, 0) for constant f, (0, 1) for balanced f."""
    if oracle_id not in (1, 2, 3, 4):
        raise ValueError(f"oracle id must be 1..4, got {oracle_id!r}")
    s = Session(sparse=sparse)
    r1 = s.newregister(1)
    r2 = s.newregister(1)
    f = deutsch_oracle(oracle_id, s.qureg(r1), s.qureg(r2))
    s.evolve(productgate(sx, s.qureg(r2), 2))
    s.evolve(productgate(hadamard(), s.qureg(r1) + s.qureg(r2), 2))
    s.evolve(f)
    s.evolve(productgate(hadamard(), s.qureg(r1), 2))
    s.clearregister(r2)
    return s.measurecompbasis()


@dataclass(frozen=True)
class OracleSpec:
    marked: int
    n_qubits: int

    def __post_init__(self):
        if self.n_qubits < 1:
            raise ValueError("oracle needs at least one qubit")
        if not 0 <= self.marked < (1 << self.n_qubits):
            raise ValueError(f"marked element {self.marked} outside 0..{(1 << self.n_qubits) - 1}")


def grover_oracle(spec: OracleSpec) -> np.ndarray:
    u = identity(spec.n_qubits)
    u[spec.marked, spec.marked] = -1
    return u


def grover_oracle_ancilla(spec: OracleSpec) -> np.ndarray:
    """|x>|q> -> |x>|q xor f(x)> with the ancilla as the last qubit."""
    dim = 1 << (spec.n_qubits + 1)
    src = np.arange(dim)
    dst = np.where((src >> 1) == spec.marked, src ^ 1, src)
    u = np.zeros((dim, dim), dtype=np.complex128)
    u[dst, src] = 1.0
    return u


def grover_diffusion(n: int) -> np.ndarray:
    hn = productgate(hadamard(), range(1, n + 1), n)
    return circuit(hn, 2 * ketn(0, n) @ bran(0, n) - identity(n), hn)


def iterations(n: int) -> int:
    return math.floor(math.pi / 4 * math.sqrt(2**n))


def grover(
    spec: OracleSpec,
    noise: tuple[str, float] | None = None,
    session: Session | None = None,
) -> np.ndarray:
    """Measured distribution after Grover search for ``spec.marked``.

    With ``noise=(name, p)`` the named channel acts on every qubit of the
    register after each oracle+diffusion round.
    """
    s = session if session is not None else Session()
    if s.qubit_count:
        raise ValueError("grover needs an empty session")
    n = spec.n_qubits
    reg = s.qureg(s.newregister(n))
    noisy = None
    if noise is not None:
        noisy = localchannel(channel(*noise), reg, n)
    oracle = grover_oracle(spec)
    diffuse = grover_diffusion(n)
    s.evolve(productgate(hadamard(), reg, n))
    for _ in range(iterations(n)):
        s.evolve(oracle)
        s.evolve(diffuse)
        if noisy is not None:
            s.applychannel(noisy)
    return s.measurecompbasis()


@dataclass(frozen=True)
class GroverPrediction:
    n_qubits: int
    N: int
    theta: float
    k: int
    alpha_k: float
    beta_k: float

    @property
    def success(self) -> float:
        return self.beta_k**2


def grover_prediction(n: int) -> GroverPrediction:
    if n < 1:
        raise ValueError("n must be positive")
    N = 1 << n
    theta = math.asin(1 / math.sqrt(N))
    k = iterations(n)
    angle = (2 * k + 1) * theta
    return GroverPrediction(n, N, theta, k, math.cos(angle) / math.sqrt(N - 1), math.sin(angle))
