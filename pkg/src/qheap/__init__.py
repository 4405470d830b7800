"""Density-matrix simulation of a quantum heap with high-level gate,
conditional and channel constructors."""
from . import analysis, algorithms, channels, gates, matrixcore, qcond, session, states
from .kernels import BACKEND
from .session import Session, init, ptrace

__all__ = [
    "BACKEND",
    "Session",
    "algorithms",
    "analysis",
    "channels",
    "gates",
    "init",
    "matrixcore",
    "ptrace",
    "qcond",
    "session",
    "states",
]
__version__ = "0.1.0"
