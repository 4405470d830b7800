"""Quantum conditionals: predicates over control registers, if/else gates and
quantum pointers.

A predicate (``QExpr``) is stored extensionally as the set of control-register
values that satisfy it. Register values use the positional convention of
``qvalueof``: the lowest qubit index of the ascending register is the least
significant bit. That is the opposite of global basis indexing (qubit 1 is the
MSB), and ``register_values`` is the only place the two meet.
"""
from __future__ import annotations

import operator
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

import numpy as np

from .gates import _check_range, productgate, register

_RELATIONS: dict[str, Callable[[int, int], bool]] = {
    "eq": operator.eq,
    "ne": operator.ne,
    "ge": operator.ge,
    "gt": operator.gt,
    "le": operator.le,
    "lt": operator.lt,
}


@dataclass(frozen=True)
class QExpr:
    control: tuple[int, ...]
    satisfying: frozenset[int]

    def __post_init__(self):
        ctrl = tuple(sorted(register(self.control)))
        object.__setattr__(self, "control", ctrl)
        top = 1 << len(ctrl)
        sat = frozenset(int(v) for v in self.satisfying)
        if any(not 0 <= v < top for v in sat):
            raise ValueError(f"satisfying values must lie in 0..{top - 1}")
        object.__setattr__(self, "satisfying", sat)

    @property
    def falsifying(self) -> frozenset[int]:
        return frozenset(range(1 << len(self.control))) - self.satisfying

    def __call__(self, value: int) -> bool:
        return value in self.satisfying


def qvalueof(x: Iterable[int], r: Iterable[int]) -> int:
    """Value of the sub-register ``x`` read against the ascending register ``r``."""
    order = sorted(register(r))
    pos = {q: i for i, q in enumerate(order)}
    value = 0
    for q in set(x):
        if q not in pos:
            raise ValueError(f"qubit {q} is not in register {tuple(order)}")
        value |= 1 << pos[q]
    return value


def register_values(control: Sequence[int], size: int) -> np.ndarray:
    """Control-register value (qvalueof convention) for each global basis index."""
    idx = np.arange(1 << size)
    values = np.zeros(1 << size, dtype=np.int64)
    for pos, q in enumerate(sorted(control)):
        values |= ((idx >> (size - q)) & 1) << pos
    return values


def qrel(op: str, r, n: int) -> QExpr:
    try:
        rel = _RELATIONS[op]
    except KeyError:
        raise ValueError(f"unknown relation {op!r}; expected one of {sorted(_RELATIONS)}") from None
    reg = register(r)
    return QExpr(reg, frozenset(v for v in range(1 << len(reg)) if rel(v, n)))


def qreq(r, n: int) -> QExpr:
    return qrel("eq", r, n)


def qrne(r, n: int) -> QExpr:
    return qrel("ne", r, n)


def qrge(r, n: int) -> QExpr:
    return qrel("ge", r, n)


def qrgt(r, n: int) -> QExpr:
    return qrel("gt", r, n)


def qrle(r, n: int) -> QExpr:
    return qrel("le", r, n)


def qrlt(r, n: int) -> QExpr:
    return qrel("lt", r, n)


def qrin(r, values: Iterable[int]) -> QExpr:
    reg = register(r)
    top = 1 << len(reg)
    return QExpr(reg, frozenset(v for v in values if 0 <= v < top))


def qrnot(e: QExpr) -> QExpr:
    return QExpr(e.control, e.falsifying)


def _combine(e1: QExpr, e2: QExpr, join: Callable[[bool, bool], bool]) -> QExpr:
    if set(e1.control) & set(e2.control):
        raise ValueError("combined expressions must use disjoint control registers")
    joint = tuple(sorted(e1.control + e2.control))
    pos = {q: i for i, q in enumerate(joint)}

    def restrict(value: int, ctrl: tuple[int, ...]) -> int:
        return sum(((value >> pos[q]) & 1) << i for i, q in enumerate(ctrl))

    sat = frozenset(
        v
        for v in range(1 << len(joint))
        if join(restrict(v, e1.control) in e1.satisfying, restrict(v, e2.control) in e2.satisfying)
    )
    return QExpr(joint, sat)


def qrand(e1: QExpr, e2: QExpr) -> QExpr:
    return _combine(e1, e2, lambda a, b: a and b)


def qror(e1: QExpr, e2: QExpr) -> QExpr:
    return _combine(e1, e2, lambda a, b: a or b)


def _branch(part, ctrl: set[int], size: int) -> np.ndarray:
    g, target = part
    tgt = register(target)
    if ctrl & set(tgt):
        raise ValueError(f"target {tgt} overlaps the control register")
    _check_range(tgt, size)
    return productgate(g, tgt, size)


def qif(e: QExpr, ifpart, elsepart, size: int) -> np.ndarray:
    """Apply ``ifpart`` where the predicate holds and ``elsepart`` elsewhere.

    ``ifpart`` and ``elsepart`` are ``(gate, target_register)`` pairs. The
    branch gates never touch the control qubits, so each one commutes with
    the diagonal projector selecting its control values.
    """
    _check_range(e.control, size)
    ctrl = set(e.control)
    on_true = _branch(ifpart, ctrl, size)
    on_false = _branch(elsepart, ctrl, size)
    values = register_values(e.control, size)
    mask = np.isin(values, list(e.satisfying))
    return np.where(mask[:, None], on_true, on_false)


def qpointer(g: np.ndarray, control, target, size: int) -> np.ndarray:
    """Apply ``g`` to the target qubit addressed by the control register value."""
    ctrl = tuple(sorted(register(control)))
    tgt = tuple(sorted(register(target)))
    if set(ctrl) & set(tgt):
        raise ValueError("control and target registers overlap")
    if len(tgt) != 1 << len(ctrl):
        raise ValueError(f"a {len(ctrl)}-qubit pointer needs {1 << len(ctrl)} targets, got {len(tgt)}")
    _check_range(ctrl + tgt, size)
    values = register_values(ctrl, size)
    out = np.zeros((1 << size, 1 << size), dtype=np.complex128)
    for v, q in enumerate(tgt):
        rows = values == v
        out[rows] = productgate(g, q, size)[rows]
    return out
