"""Command-line front end.

    qheap deutsch --oracle 3
    qheap grover --qubits 3 --target 5 [--channel depolarizing --p 0.1] [--samples 100 --seed 7]
    qheap sweep --qubits 3,4,5,6 --channel depolarizing --p-start 0 --p-end 1 --steps 21 --out sweep.csv

Exit status is 0 on success, 2 on usage errors and 1 on runtime errors.
"""
from __future__ import annotations

import argparse
import csv
import io
import logging
import sys
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .algorithms import OracleSpec, deutsch, grover
from .channels import CHANNELS
from .session import Session

log = logging.getLogger("qheap")

MAX_SWEEP_QUBITS = 8


def fmt(x: float) -> str:
    """Shortest round-trip repr of ``x`` after rounding to 12 significant digits."""
    v = float(f"{float(x):.12g}")
    return repr(v + 0.0)


def bitstring(index: int, n: int) -> str:
    return format(index, f"0{n}b") if n else ""


@dataclass(frozen=True)
class SweepConfig:
    qubit_sizes: tuple[int, ...]
    channel_name: str
    p_start: float
    p_end: float
    steps: int
    sparse: bool = False
    seed: int | None = None
    output_path: Path | None = None
    target: int = 0

    def __post_init__(self):
        if not self.qubit_sizes or any(not 1 <= n <= MAX_SWEEP_QUBITS for n in self.qubit_sizes):
            raise ValueError(f"qubit sizes must lie in 1..{MAX_SWEEP_QUBITS}")
        if self.channel_name not in CHANNELS:
            raise ValueError(f"unknown channel {self.channel_name!r}")
        if not 0.0 <= self.p_start <= self.p_end <= 1.0:
            raise ValueError("need 0 <= p-start <= p-end <= 1")
        if self.steps < 1:
            raise ValueError("steps must be positive")
        if self.steps == 1 and self.p_start != self.p_end:
            raise ValueError("a single-step grid needs p-start == p-end")
        if self.steps >= 2 and not self.p_start < self.p_end:
            raise ValueError("p-start must be below p-end when steps >= 2")

    def grid(self) -> np.ndarray:
        return np.linspace(self.p_start, self.p_end, self.steps)


def run_sweep(cfg: SweepConfig) -> list[tuple[int, float, float]]:
    rows = []
    for n in sorted(cfg.qubit_sizes):
        marked = cfg.target % (1 << n)
        for p in cfg.grid():
            session = Session(sparse=cfg.sparse, seed=cfg.seed)
            dist = grover(OracleSpec(marked, n), noise=(cfg.channel_name, float(p)), session=session)
            rows.append((n, float(p), float(dist[marked])))
    return rows


def sweep_csv(rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["qubits", "p", "success_prob"])
    for n, p, prob in rows:
        w.writerow([n, fmt(p), fmt(prob)])
    return buf.getvalue()


def cmd_deutsch(args) -> int:
    dist = deutsch(args.oracle, sparse=args.sparse)
    print("index, bitstring, probability")
    for i, p in enumerate(dist):
        print(f"{i}, {bitstring(i, 1)}, {fmt(p)}")
    return 0


def cmd_grover(args) -> int:
    n = args.qubits
    if not 0 <= args.target < (1 << n):
        raise UsageError(f"--target must lie in 0..{(1 << n) - 1}")
    if (args.channel is None) != (args.p is None):
        raise UsageError("--channel and --p must be given together")
    noise = None if args.channel is None else (args.channel, args.p)
    session = Session(sparse=args.sparse, seed=args.seed)
    dist = grover(OracleSpec(args.target, n), noise=noise, session=session)
    out = csv.writer(sys.stdout, lineterminator="\n")
    out.writerow(["index", "bitstring", "probability"])
    for i, p in enumerate(dist):
        out.writerow([i, bitstring(i, n), fmt(p)])
    print(f"success_prob={dist[args.target]:.6f}")
    if args.samples:
        counts = np.zeros(len(dist), dtype=np.int64)
        for _ in range(args.samples):
            counts[session.collapse(dist)] += 1
        out.writerow(["index", "bitstring", "count"])
        for i in np.flatnonzero(counts):
            out.writerow([int(i), bitstring(int(i), n), int(counts[i])])
    return 0


def cmd_sweep(args) -> int:
    try:
        sizes = tuple(int(s) for s in args.qubits.split(",") if s.strip())
        cfg = SweepConfig(
            qubit_sizes=sizes,
            channel_name=args.channel,
            p_start=args.p_start,
            p_end=args.p_end,
            steps=args.steps,
            sparse=args.sparse,
            seed=args.seed,
            output_path=Path(args.out),
            target=args.target,
        )
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    text = sweep_csv(run_sweep(cfg))
    with open(cfg.output_path, "w", encoding="utf-8", newline="") as fh:
        fh.write(text)
    log.info("wrote %d rows to %s", text.count("\n") - 1, cfg.output_path)
    return 0


class UsageError(Exception):
    pass


def _probability(text: str) -> float:
    v = float(text)
    if not 0.0 <= v <= 1.0:
        raise argparse.ArgumentTypeError(f"{text} is not in [0, 1]")
    return v


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"{text} is not a positive integer")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--sparse", action="store_true", default=argparse.SUPPRESS,
                        help="use the sparse matrix backend")
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS)

    parser = argparse.ArgumentParser(prog="qheap", parents=[common], description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("deutsch", parents=[common], help="run Deutsch's algorithm")
    p.add_argument("--oracle", type=int, choices=(1, 2, 3, 4), required=True)
    p.set_defaults(func=cmd_deutsch)

    p = sub.add_parser("grover", parents=[common], help="run Grover search once")
    p.add_argument("--qubits", type=_positive, required=True)
    p.add_argument("--target", type=int, required=True)
    p.add_argument("--channel", choices=CHANNELS)
    p.add_argument("--p", type=_probability)
    p.add_argument("--samples", type=int, default=0, help="draw this many measurement outcomes")
    p.set_defaults(func=cmd_grover)

    p = sub.add_parser("sweep", parents=[common], help="noisy Grover success probability over a p grid")
    p.add_argument("--qubits", required=True, help="comma-separated sizes, e.g. 3,4,5,6")
    p.add_argument("--channel", choices=CHANNELS, default="depolarizing")
    p.add_argument("--p-start", type=float, default=0.0)
    p.add_argument("--p-end", type=float, default=1.0)
    p.add_argument("--steps", type=int, default=21)
    p.add_argument("--target", type=int, default=0)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_sweep)
    return parser


def main(argv=None) -> int:
    logging.basicConfig(level=logging.WARNING, stream=sys.stderr, format="%(name)s: %(message)s")
    parser = build_parser()
    args = parser.parse_args(argv)
    args.sparse = getattr(args, "sparse", False)
    args.seed = getattr(args, "seed", None)
    try:
        return args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"qheap: error: {exc}", file=sys.stderr)
        return 2
    except (OSError, ValueError, RuntimeError) as exc:
        print(f"qheap: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
