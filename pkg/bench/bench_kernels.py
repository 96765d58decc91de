"""Compare the compiled and pure-Python polynomial kernels.

Kernel timings call both backends on identical inputs in one process.
End-to-end timings run a Groebner basis in a subprocess per backend, since
the backend is fixed at import time (AGCERT_PURE=1 selects pure Python).

    python bench/bench_kernels.py [--repeat N] [--skip-e2e]
"""

from __future__ import annotations

import argparse
import os
import random
import statistics
import subprocess
import sys
import time

from agcert._kernels import backends
from agcert.arith import QQ, Rat
from agcert.ideals import _reducer, groebner
from agcert.poly import make_ring

def katsura(n):
    R = make_ring(" ".join(f"u{i}" for i in range(n + 1)), QQ)
    u = R.gens()

    def U(i):
        return u[abs(i)] if abs(i) <= n else R.zero()

    eqs = [sum((U(i) for i in range(-n, n + 1)), R.zero()) - 1]
    for m in range(n):
        eqs.append(sum((U(k) * U(m - k) for k in range(-n, n + 1)), R.zero()) - U(m))
    return eqs


def cyclic(n):
    R = make_ring(" ".join(f"u{i}" for i in range(n)), QQ)
    u = R.gens()
    eqs = []
    for k in range(1, n):
        s = R.zero()
        for i in range(n):
            p = R.one()
            for j in range(k):
                p = p * u[(i + j) % n]
            s = s + p
        eqs.append(s)
    p = R.one()
    for x in u:
        p = p * x
    return eqs + [p - 1]


SYSTEMS = {"katsura5": lambda: katsura(5), "katsura6": lambda: katsura(6), "cyclic5": lambda: cyclic(5)}


def random_poly(R, rng, terms, deg):
    return R.from_terms(
        (tuple(rng.randint(0, deg) for _ in R.vars), Rat(rng.randint(-99, 99), rng.randint(1, 9))) for _ in range(terms)
    )


def timed(fn, repeat):
    samples = []
    for _ in range(repeat):
        t = time.perf_counter()
        fn()
        samples.append(time.perf_counter() - t)
    return statistics.median(samples)


def kernel_cases(rng):
    R = make_ring("x y z", QQ)
    f, g = random_poly(R, rng, 60, 8), random_poly(R, rng, 60, 8)
    x, y, z = R.gens()
    G = groebner([x + y * 2 + z * 2 - 1, x * x + y * y * 2 + z * z * 2 - x, x * y * 2 + y * z * 2 - y])
    reducers = [_reducer(b) for b in G.basis]
    h = random_poly(R, rng, 40, 6)
    return {
        "poly_mul 60x60 terms": lambda k: k.poly_mul(f.terms, g.terms),
        "poly_add_scaled": lambda k: k.poly_add_scaled(f.terms, g.terms, Rat(-3, 7), 0),
        "normal_form mod katsura3": lambda k: k.normal_form(h.terms, reducers, R.low_mask, R.guard),
    }


def e2e_worker(name, repeat):
    from agcert._kernels import BACKEND

    gens = SYSTEMS[name]()
    best = min(timed(lambda: groebner(gens), 1) for _ in range(repeat))
    print(BACKEND, best)


def run_e2e(name, repeat, pure):
    env = dict(os.environ)
    env.pop("AGCERT_PURE", None)
    if pure:
        env["AGCERT_PURE"] = "1"
    cmd = [sys.executable, __file__, "--worker", name, "--repeat", str(repeat)]
    out = subprocess.run(cmd, env=env, capture_output=True, text=True, check=True).stdout.split()
    return out[0], float(out[1])


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--seed", type=int, default=7)
    ap.add_argument("--skip-e2e", action="store_true")
    ap.add_argument("--worker", help=argparse.SUPPRESS)
    args = ap.parse_args(argv)
    if args.worker:
        return e2e_worker(args.worker, args.repeat)

    bk = backends()
    if "cython" not in bk:
        print("compiled backend not built; only pure Python is available")
    print(f"{'kernel':32} " + " ".join(f"{n:>10}" for n in bk) + "   speedup")
    for label, fn in kernel_cases(random.Random(args.seed)).items():
        ts = {n: timed(lambda: fn(m), args.repeat) for n, m in bk.items()}
        ratio = ts["python"] / ts["cython"] if "cython" in ts else float("nan")
        print(f"{label:32} " + " ".join(f"{t * 1e3:9.2f}ms" for t in ts.values()) + f"   {ratio:6.2f}x")

    if args.skip_e2e:
        return
    print()
    print(f"{'groebner (best of %d)' % args.repeat:32} {'python':>10} {'compiled':>10}   speedup")
    for name in SYSTEMS:
        _, tp = run_e2e(name, args.repeat, pure=True)
        backend, tc = run_e2e(name, args.repeat, pure=False)
        print(f"{name:32} {tp * 1e3:8.1f}ms {tc * 1e3:8.1f}ms   {tp / tc:6.2f}x  [{backend}]")


if __name__ == "__main__":
    main()
