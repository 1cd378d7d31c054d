"""Compare the compiled and pure-Python table kernels.

    python benchmarks/bench_kernels.py [--words 20000] [--length 40] [--repeat 5]
"""
import argparse
import random
import timeit
from array import array

from eventdfa import _pykernels
from eventdfa.classroom import emotional_model

try:
    from eventdfa import _ckernels
except ImportError:
    _ckernels = None


def workloads(n_words, length, seed):
    rng = random.Random(seed)
    dfa = emotional_model().machine
    k = len(dfa.alphabet)
    table = array("i", [t for row in dfa.table for t in row])
    codes = array("i", [rng.randrange(k) for _ in range(n_words * length)])
    offsets = array("i", range(0, n_words * length + 1, length))
    big_n, big_k = 200_000, 4
    big = array("i", [rng.randrange(big_n) for _ in range(big_n * big_k)])
    accepting = [rng.random() < 0.001 for _ in range(big_n)]
    return {
        "walk (one long word)": lambda m: m.walk(table, k, 0, codes),
        "walk_many (batch)": lambda m: m.walk_many(table, k, 0, codes, offsets),
        "trajectory (one long word)": lambda m: m.trajectory(table, k, 0, codes),
        "live_states (200k states)": lambda m: m.live_states(big, big_n, big_k, accepting),
    }


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--words", type=int, default=20000)
    parser.add_argument("--length", type=int, default=40)
    parser.add_argument("--repeat", type=int, default=5)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    backends = [("python", _pykernels)]
    if _ckernels is not None:
        backends.append(("cython", _ckernels))
    else:
        print("compiled kernels not built; timing the pure-Python backend only")

    print(f"{'kernel':30s}" + "".join(f"{name:>12s}" for name, _ in backends) + f"{'speedup':>10s}")
    for label, fn in workloads(args.words, args.length, args.seed).items():
        results = [fn(impl) for _, impl in backends]
        results = [list(r) if isinstance(r, list) else r for r in results]
        assert all(r == results[0] for r in results), f"{label}: backends disagree"
        times = [min(timeit.repeat(lambda: fn(impl), number=1, repeat=args.repeat)) for _, impl in backends]
        speedup = f"{times[0] / times[-1]:9.1f}x" if len(times) > 1 else ""
        print(f"{label:30s}" + "".join(f"{t * 1e3:10.2f}ms" for t in times) + speedup)


if __name__ == "__main__":
    main()
