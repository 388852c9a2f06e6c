"""Compare the compiled kernels with the pure-Python fallback.

    python benchmarks/bench_kernels.py [--repeat 5]

Both implementations are imported directly, so the comparison does not
depend on ``MDPART_PURE_PYTHON``.  Results are checked for agreement first.
"""

from __future__ import annotations

import argparse
import random
import timeit
from array import array

from mdpart import _pykernels
from mdpart.generators import gen_random

try:
    from mdpart import _ckernels
except ImportError:  # extension not built
    _ckernels = None


def cases(seed: int = 0):
    rnd = random.Random(seed)
    G_big = gen_random(2000, 0.01, 3, seed)
    indptr, indices, mults = G_big.csr()
    member = bytearray([1]) * G_big.n
    budget = array("q", (max(0, d - rnd.randint(0, 6)) for d in G_big.degrees))
    yield "peel n=2000", lambda k: k.peel(indptr, indices, mults, member, budget)

    # Infeasible on purpose so the whole subset space is walked.
    G_split = gen_random(16, 0.5, 2, seed + 1)
    hi = [d + 1 for d in G_split.degrees]
    yield "find_feasible_split n=16", lambda k: k.find_feasible_split(G_split.n, G_split.dense(), hi, hi)

    G_nice = gen_random(18, 0.5, 2, seed + 2)
    thresh = [d + 1 for d in G_nice.degrees]
    xmask = (1 << G_nice.n) - 1
    yield "find_nice_subset n=18", lambda k: k.find_nice_subset(G_nice.n, G_nice.dense(), xmask, thresh)


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()
    impls = [("python", _pykernels)] + ([("cython", _ckernels)] if _ckernels else [])
    if _ckernels is None:
        print("compiled extension not available; timing the fallback only")
    print(f"{'kernel':28s} " + " ".join(f"{name:>12s}" for name, _ in impls) + ("     speedup" if len(impls) == 2 else ""))
    for label, call in cases():
        results = [call(k) for _, k in impls]
        assert all(r == results[0] for r in results), f"{label}: implementations disagree"
        times = [min(timeit.repeat(lambda: call(k), number=1, repeat=args.repeat)) for _, k in impls]
        row = f"{label:28s} " + " ".join(f"{t * 1e3:10.2f}ms" for t in times)
        if len(times) == 2:
            row += f" {times[0] / times[1]:10.1f}x"
        print(row)


if __name__ == "__main__":
    main()
