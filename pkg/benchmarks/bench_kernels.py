"""Compare the numba kernels with their pure-numpy fallbacks.

Usage: python3 benchmarks/bench_kernels.py [--repeat N] [--states N] [--words N] [--max-len N]

Every kernel is first checked for identical output on both paths, then
timed after a warm-up call (so numba compilation is excluded).
"""
import argparse
import time

import numpy as np

from preact import _kernels
from preact.preaction import z_machine
from preact.words import Alphabet


def best_of(func, args, repeat):
    func(*args)  # warm-up
    times = []
    for _ in range(repeat):
        start = time.perf_counter()
        func(*args)
        times.append(time.perf_counter() - start)
    return min(times)


def random_dfa(rng, n_states, k):
    table = rng.integers(0, n_states, size=(n_states, k), dtype=np.int32)
    accepting = rng.random(n_states) < 0.3
    return table, accepting


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5)
    parser.add_argument("--states", type=int, default=400)
    parser.add_argument("--words", type=int, default=200_000)
    parser.add_argument("--max-len", type=int, default=10, help="axiom scan bound")
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()
    rng = np.random.default_rng(args.seed)

    print(f"numba enabled by default: {_kernels.USE_NUMBA}")
    print(f"{'kernel':<14} {'numpy (s)':>12} {'numba (s)':>12} {'speedup':>9}")

    table, accepting = random_dfa(rng, args.states, 2)
    lengths = rng.integers(0, 16, size=args.words).astype(np.int32)
    codes = rng.integers(0, 2, size=(args.words, 16)).astype(np.int32)
    starts = rng.integers(0, args.states, size=args.words).astype(np.int32)
    cases = [
        ("run_batch", _kernels.run_batch_numpy, _kernels.run_batch_numba,
         (table, starts, codes, lengths), lambda a, b: np.array_equal(a, b)),
        ("moore_blocks", _kernels.moore_blocks_numpy, _kernels.moore_blocks_numba,
         (table, accepting), lambda a, b: np.array_equal(a, b)),
    ]
    m = z_machine()
    words = Alphabet("ab").words_upto(args.max_len)
    evaltab = m.eval_table(words)
    cases.append(("axiom_scan", _kernels.axiom_scan_numpy, _kernels.axiom_scan_numba,
                  (evaltab, 2, args.max_len),
                  lambda a, b: sorted(map(tuple, a.tolist())) == sorted(map(tuple, b.tolist()))))

    for name, slow, fast, inputs, same in cases:
        if not same(slow(*inputs), fast(*inputs)):
            raise SystemExit(f"{name}: numpy and numba results differ")
        t_np = best_of(slow, inputs, args.repeat)
        t_nb = best_of(fast, inputs, args.repeat)
        print(f"{name:<14} {t_np:>12.5f} {t_nb:>12.5f} {t_np / t_nb:>8.1f}x")


if __name__ == "__main__":
    main()
