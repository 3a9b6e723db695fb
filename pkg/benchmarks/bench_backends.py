"""Benchmark the pure-Python kernels against the compiled extension.

Usage: python benchmarks/bench_backends.py [--repeat N]

Workloads are the hot paths of the exhaustive sweeps: subframe
enumeration on the 16-element Boolean frame, brute sublocale filtering
on a 12-chain, sublocale generation, the bilocale generation-axiom pair
filter, distributivity checking and Heyting-table construction.
"""

import argparse
import time

from biloc import _kernel_py as pure
from biloc.lattice import build_lattice
from biloc.suite.generators import downset_lattice, generate_posets

try:
    from biloc import _speedups as fast
except ImportError:
    fast = None


def boolean_16():
    antichain4 = tuple(1 << i for i in range(4))
    return downset_lattice(antichain4, name="B16")


def chain(n):
    labels = [f"e{i}" for i in range(n)]
    return build_lattice(labels, [(f"e{i}", f"e{i + 1}") for i in range(n - 1)])


def workloads():
    b16 = boolean_16()
    c12 = chain(12)
    req = (1 << b16.bottom) | (1 << b16.top)
    subframes = pure.closed_subsets(b16.n, list(b16.meet), list(b16.join), req)
    seeds = sorted(set([1 << b16.top] + list(b16.b_masks)))
    yield ("closed_subsets B16", lambda k: k.closed_subsets(
        b16.n, list(b16.meet), list(b16.join), req))
    yield ("brute_sublocales C12", lambda k: k.brute_sublocales(
        c12.n, list(c12.meet), list(c12.hey), c12.top))
    yield ("generated_sublocales B16", lambda k: k.generated_sublocales(
        b16.n, list(b16.meet), seeds))
    yield ("generation_pairs B16", lambda k: k.generation_pairs(
        b16.n, list(b16.meet), list(b16.join), list(b16.down),
        subframes, b16.join_irreducible_mask))
    yield ("distributivity B16", lambda k: k.distributivity_witness(
        b16.n, list(b16.meet), list(b16.join)))
    yield ("heyting_table B16", lambda k: k.heyting_table(
        b16.n, list(b16.meet), list(b16.join), list(b16.down)))


def run(repeat):
    poset_check = generate_posets(2)
    assert len(poset_check) == 4
    print(f"{'workload':32s} {'pure':>10s} {'compiled':>10s} {'speedup':>8s}")
    for name, fn in workloads():
        t0 = time.perf_counter()
        for _ in range(repeat):
            result_pure = fn(pure)
        t_pure = (time.perf_counter() - t0) / repeat
        if fast is None:
            print(f"{name:32s} {t_pure * 1e3:9.1f}ms {'n/a':>10s}")
            continue
        t0 = time.perf_counter()
        for _ in range(repeat):
            result_fast = fn(fast)
        t_fast = (time.perf_counter() - t0) / repeat
        assert result_pure == result_fast, f"backends disagree on {name}"
        print(f"{name:32s} {t_pure * 1e3:9.1f}ms {t_fast * 1e3:9.1f}ms "
              f"{t_pure / t_fast:7.1f}x")
    if fast is None:
        print("\ncompiled kernel not built; install with Cython available "
              "to compare")


if __name__ == "__main__":
    parser = argparse.ArgumentParser()
    parser.add_argument("--repeat", type=int, default=3)
    run(parser.parse_args().repeat)
