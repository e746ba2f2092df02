"""Benchmark the compiled kernels against the pure-Python fallback.

Times the three hot sweeps on both backends and prints a speedup table:

    python benchmarks/compare_backends.py [--scan-len N] [--sweep-len N]
"""

import argparse
import time

from geofellow.automata import build_geodesic_acceptor
from geofellow.kernels import available_backends, dfa_tables


def timed(fn, *args):
    started = time.perf_counter()
    result = fn(*args)
    return time.perf_counter() - started, result


def bench(scan_len, sweep_len):
    backends = available_backends()
    if "cython" not in backends:
        print("compiled backend not importable; timing the fallback only")
    tables = dfa_tables(build_geodesic_acceptor())

    workloads = []

    def sweep(mod):
        return mod.theorem5_mismatches(sweep_len, *tables)

    workloads.append((f"theorem5 sweep (len<={sweep_len})", sweep))

    def witness_family(mod):
        out = []
        for n in range(1, 6):
            word = bytes([2] + [0] * n + [2] + [0] * n + [2])
            out.append(mod.min_fftp(word))
        return out

    workloads.append(("min_fftp witness family n=1..5", witness_family))

    def scan(mod):
        return [mod.min_fftp(w) for w in mod.nongeodesic_words(scan_len)]

    workloads.append((f"fftp scan core (len<={scan_len})", scan))

    name_width = max(len(name) for name, _ in workloads)
    header = f"{'workload':<{name_width}}  " + "".join(
        f"{name:>12}" for name in backends
    )
    print(header)
    print("-" * len(header))
    for name, fn in workloads:
        times = {}
        results = {}
        for backend, mod in backends.items():
            times[backend], results[backend] = timed(fn, mod)
        reference = next(iter(results.values()))
        for value in results.values():
            assert value == reference, f"backends disagree on {name}"
        row = f"{name:<{name_width}}  " + "".join(
            f"{times[backend]:>11.4f}s" for backend in backends
        )
        if "cython" in times and "python" in times and times["cython"] > 0:
            row += f"   ({times['python'] / times['cython']:.1f}x)"
        print(row)


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--scan-len", type=int, default=8)
    parser.add_argument("--sweep-len", type=int, default=10)
    args = parser.parse_args()
    bench(args.scan_len, args.sweep_len)


if __name__ == "__main__":
    main()
