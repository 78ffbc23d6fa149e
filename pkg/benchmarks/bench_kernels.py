"""Benchmark the compiled counting kernel against the pure-Python fallback.

Run:  python3 benchmarks/bench_kernels.py

The workload is the hot path of the verification suites: subrepresentation
counting over a range of primes for the modules whose Grassmannians dominate
runtime (a Kronecker double, the two-cycle module, and a fat type A middle
term)."""

from __future__ import annotations

import time
from itertools import product

from clusterchar.catalog import kronecker_rep, loop_module_2, two_cycle_module
from clusterchar.grassmann import available_backends, count_subreps, set_backend
from clusterchar.quivers import linear_an
from clusterchar.reps import direct_sum, interval_module


def workload_cases():
    a5 = linear_an(5)
    fat_middle = direct_sum(interval_module(a5, 1, 5), interval_module(a5, 2, 4))
    cases = []
    kron2 = direct_sum(kronecker_rep(), kronecker_rep())
    for e in [(1, 1), (2, 2), (2, 3)]:
        for q in (2, 3, 5, 7, 11):
            cases.append(("kronecker+kronecker", kron2, e, q))
    tc = two_cycle_module()
    for e in product(*(range(d + 1) for d in tc.dims)):
        for q in (2, 3, 5, 7, 11, 13):
            cases.append(("two-cycle", tc, e, q))
    for q in (2, 3, 5, 7, 11, 13):
        cases.append(("loop^2", direct_sum(loop_module_2(), loop_module_2()), (2,), q))
    for e in product(range(2), repeat=5):
        for q in (2, 3, 5):
            cases.append(("a5-middle", fat_middle, e, q))
    return cases


def run(backend: str, cases) -> tuple:
    set_backend(backend)
    per_group: dict = {}
    start = time.perf_counter()
    results = []
    for group, v, e, q in cases:
        t0 = time.perf_counter()
        results.append(count_subreps(v, e, q))
        per_group[group] = per_group.get(group, 0.0) + time.perf_counter() - t0
    return time.perf_counter() - start, per_group, results


def main() -> None:
    backends = available_backends()
    cases = workload_cases()
    print(f"workload: {len(cases)} counts")
    timings = {}
    baselines = None
    for name in sorted(backends):
        total, per_group, results = run(name, cases)
        timings[name] = (total, per_group)
        if baselines is None:
            baselines = results
        elif results != baselines:
            raise SystemExit("backends disagree; run the test suite")
        print(f"\n{name}: {total:.3f}s total")
        for group, t in sorted(per_group.items()):
            print(f"  {group:22} {t:.3f}s")
    if "compiled" in timings and "pure" in timings:
        speedup = timings["pure"][0] / timings["compiled"][0]
        print(f"\nspeedup compiled vs pure: {speedup:.1f}x")
    else:
        print("\ncompiled kernel not available; only the pure backend was timed")


if __name__ == "__main__":
    main()
