"""Time the compiled and pure-Python kernels on identical workloads.

    python3 benchmarks/bench_kernel.py            # quick workloads
    python3 benchmarks/bench_kernel.py --full     # adds the full n=5, k=2 scan (~1 min in Python)
"""

import argparse
import random
import time

from kstrong.kernel import available_backends


def workloads(full: bool):
    rng = random.Random(0)
    masks = []
    for _ in range(2000):
        n = 7
        p = rng.uniform(0.2, 1.0)
        out = [sum(1 << v for v in range(n) if v != u and rng.random() < p) for u in range(n)]
        masks.append(out)

    def detect(mod):
        return sum(bool(mod.contains_k_strong(m, k)) for m in masks for k in (2, 3, 4))

    def kappas(mod):
        return sum(mod.kappa(m) for m in masks)

    jobs = [
        ("detect n=7 x6000", detect),
        ("kappa n=7 x2000", kappas),
        ("scan_saturated n=4 k=2", lambda mod: mod.scan_saturated(4, 2, 0, 1 << 12)[:2]),
        ("scan_free n=4 k=3", lambda mod: mod.scan_free(4, 3, 0, 1 << 12)[:2]),
        ("scan_saturated n=5 k=2 (1/16)", lambda mod: mod.scan_saturated(5, 2, 0, 1 << 16)[:2]),
    ]
    if full:
        jobs.append(("scan_saturated n=5 k=2", lambda mod: mod.scan_saturated(5, 2, 0, 1 << 20)[:2]))
    return jobs


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--full", action="store_true")
    args = parser.parse_args()
    backends = available_backends()
    names = sorted(backends)
    print(f"{'workload':32}" + "".join(f"{n:>12}" for n in names) + ("     speedup" if len(names) > 1 else ""))
    for label, job in workloads(args.full):
        times, results = {}, {}
        for name in names:
            start = time.perf_counter()
            results[name] = job(backends[name])
            times[name] = time.perf_counter() - start
        if len(set(map(repr, results.values()))) != 1:
            raise SystemExit(f"backends disagree on {label}: {results}")
        row = f"{label:32}" + "".join(f"{times[n]:11.3f}s" for n in names)
        if "cython" in times and "python" in times:
            row += f"{times['python'] / times['cython']:11.0f}x"
        print(row, flush=True)


if __name__ == "__main__":
    main()
