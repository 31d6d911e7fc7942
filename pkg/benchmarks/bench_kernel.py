"""Benchmark the compiled candidate-filter kernel against the pure
fallback on the exhaustive minimal-NFA search workload.

Run with ``python3 benchmarks/bench_kernel.py``.
"""

import statistics
import time

from sfnfa._kernel import _pure
from sfnfa.automata import accepts
from sfnfa.bounds import _sample_trie
from sfnfa.witnesses import Family, WitnessSpec, build

try:
    from sfnfa._kernel import _speed
except ImportError:
    _speed = None


def workload():
    """k=3 search over the two-letter alphabet: 262144 candidate tables
    against the 127-node sample trie of a 3-state witness language."""
    nfa = build(WitnessSpec(Family.LEMMA_L1, 3))
    k, sigma = 3, nfa.alphabet.size
    parents, symbols, node_words = _sample_trie(sigma, 2 * k)
    labels = [accepts(nfa, w) for w in node_words]
    return k, sigma, parents, symbols, labels


def bench(impl, args, repeats=5):
    times = []
    for _ in range(repeats):
        t0 = time.perf_counter()
        out = impl.filter_tables(*args)
        times.append(time.perf_counter() - t0)
    return min(times), statistics.median(times), out


def main():
    args = workload()
    pure_min, pure_med, pure_out = bench(_pure, args)
    print(f"pure   (numpy): min {pure_min * 1e3:8.1f} ms  median {pure_med * 1e3:8.1f} ms"
          f"  survivors {len(pure_out)}")
    if _speed is None:
        print("compiled kernel not built; install with Cython to compare")
        return
    fast_min, fast_med, fast_out = bench(_speed, args)
    print(f"compiled       : min {fast_min * 1e3:8.1f} ms  median {fast_med * 1e3:8.1f} ms"
          f"  survivors {len(fast_out)}")
    assert fast_out == pure_out, "kernel implementations disagree"
    print(f"speedup (min over min): {pure_min / fast_min:.1f}x")


if __name__ == "__main__":
    main()
