"""Time the compiled kernels against the numpy fallback.

    python3 benchmarks/bench_kernels.py [--qubits 6 8 10] [--repeat 5]

Each row reports the best of ``--repeat`` runs per call, in milliseconds,
and checks that both implementations agree.
"""
import argparse
import timeit

import numpy as np

from qheap import kernels
from qheap.channels import channel


def random_density(n, rng):
    dim = 1 << n
    a = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    rho = a @ a.conj().T
    return rho / np.trace(rho)


def cases(n, rng):
    rho = random_density(n, rng)
    ops = np.asarray(channel("amplitudedamping", 0.3).operators)
    mid = n // 2 + 1
    half = list(range(1, n // 2 + 1))
    return {
        "apply_local_kraus": lambda impl: kernels.apply_local_kraus(rho, ops, mid, impl=impl),
        "ptrace": lambda impl: kernels.ptrace(rho, half, impl=impl),
        "partial_transpose": lambda impl: kernels.partial_transpose(rho, half, impl=impl),
    }


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--qubits", type=int, nargs="+", default=[6, 8, 10])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args(argv)

    impls = {"python": kernels.load("python")}
    try:
        impls["cython"] = kernels.load("cython")
    except ImportError:
        print("compiled kernels not built; timing the fallback only")

    rng = np.random.default_rng(0)
    print(f"{'kernel':<20}{'n':>4}" + "".join(f"{name + ' ms':>14}" for name in impls) + f"{'speedup':>10}")
    for n in args.qubits:
        for name, call in cases(n, rng).items():
            results = {k: call(m) for k, m in impls.items()}
            if "cython" in results:
                assert np.allclose(results["python"], results["cython"], atol=1e-12), name
            times = {}
            for k, m in impls.items():
                number = max(1, int(2e5 / 4**n))
                best = min(timeit.repeat(lambda m=m: call(m), number=number, repeat=args.repeat))
                times[k] = 1e3 * best / number
            speed = f"{times['python'] / times['cython']:>9.1f}x" if "cython" in times else ""
            print(f"{name:<20}{n:>4}" + "".join(f"{t:>14.3f}" for t in times.values()) + speed)


if __name__ == "__main__":
    main()
