"""Compare the compiled and numpy backends on the hot loops.

    python3 benchmarks/bench_core.py [--samples 100000] [--repeat 3]
"""
import argparse
import timeit

import numpy as np

from chebprob._backend import compiled_core, python_core
from chebprob.densities import ConjugatePairs, DensityParams, fourier_coeffs


def cases(n):
    rng = np.random.default_rng(0)
    x = rng.uniform(-1, 1, n)
    theta = np.arccos(x)
    u = rng.uniform(1e-9, 1 - 1e-9, n)
    for label, d in (("f_3T(0.9,-0.5,0.2)", DensityParams.of(0.9, -0.5, 0.2)),
                     ("f2(0.97,0.3)", ConjugatePairs.of(0.97, 0.3))):
        c = fourier_coeffs(d)
        yield f"clenshaw   {label} J={c.size}", lambda core, c=c: core.clenshaw(c, 1, x)
        yield f"sine       {label} J={c.size}", lambda core, c=c: core.sine_series(c, theta)
        yield f"invert     {label} J={c.size}", \
            lambda core, c=c: core.invert_theta(c, u, 1e-12, 200)
    yield "uniforms", lambda core: core.uniforms(1, n)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--samples", type=int, default=100_000)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if compiled_core is None:
        raise SystemExit("compiled core not built; run pip install -e . --no-build-isolation")
    print(f"{'case':<40} {'python [s]':>11} {'cython [s]':>11} {'speedup':>8}")
    for name, fn in cases(args.samples):
        tp = min(timeit.repeat(lambda: fn(python_core), number=1, repeat=args.repeat))
        tc = min(timeit.repeat(lambda: fn(compiled_core), number=1, repeat=args.repeat))
        print(f"{name:<40} {tp:11.4f} {tc:11.4f} {tp / tc:7.1f}x")


if __name__ == "__main__":
    main()
