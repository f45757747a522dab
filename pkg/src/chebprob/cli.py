"""Command-line front end: ``chebprob {eval,kernel,coeffs,verify,sample,table}``.

CSV goes to stdout (or ``--out``) with a header row and 17 significant
digits, so every value re-parses to the same double. Exit status is 0 on
success, 1 when a verification check fails, 2 for usage errors and 3 for
parameters outside the supported domain.
"""
from __future__ import annotations

import argparse
import json
import re
import sys
from contextlib import contextmanager

import numpy as np

from .densities import (
    ConjugatePairs,
    DensityParams,
    arcsine_pdf,
    fourier_coeffs,
    marginal_fC,
    marginal_fW,
    pdf,
    semicircle_pdf,
)
from .errors import DomainError, IllConditioned, Unsupported
from .kernels import RHO_MAX, KernelId, kernel_grid
from .coeffs import ParamVector, b_coeffs, big_B, t_coeffs
from .sampler import SampleConfig, sample
from .verify import SUITES, run_suite

EXIT_VERIFY = 1
EXIT_USAGE = 2
EXIT_DOMAIN = 3

#: densities are singular at +-1, so density grids are clipped to this margin
EDGE = 1e-12

FAMILIES = ("fnT", "f2", "f4", "arcsine", "semicircle", "marginal-fC", "marginal-fW")
_NUMBER = re.compile(r"^-(\d|\.\d)")


class UsageError(Exception):
    pass


def parse_floats(text: str) -> list[float]:
    try:
        return [float(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise UsageError(f"expected comma-separated numbers, got {text!r}") from None


def parse_grid(text: str) -> np.ndarray:
    """``lo:hi:count``, endpoints included."""
    parts = text.split(":")
    if len(parts) != 3:
        raise UsageError(f"grid must look like lo:hi:count, got {text!r}")
    try:
        lo, hi, count = float(parts[0]), float(parts[1]), int(parts[2])
    except ValueError:
        raise UsageError(f"grid must look like lo:hi:count, got {text!r}") from None
    if count < 1:
        raise UsageError("grid count must be >= 1")
    if not (np.isfinite(lo) and np.isfinite(hi)) or lo > hi:
        raise UsageError(f"grid needs finite lo <= hi, got {lo}:{hi}")
    return np.linspace(lo, hi, count)


def merge_negative_values(argv: list[str]) -> list[str]:
    """Turn ``--opt -0.5,...`` into ``--opt=-0.5,...`` so argparse accepts it."""
    out: list[str] = []
    for tok in argv:
        prev = out[-1] if out else ""
        if _NUMBER.match(tok) and prev.startswith("--") and "=" not in prev:
            out[-1] = f"{prev}={tok}"
        else:
            out.append(tok)
    return out


def _add_density_args(p):
    p.add_argument("--family", choices=FAMILIES, default="fnT")
    p.add_argument("--a", help="comma-separated real parameters for fnT")
    p.add_argument("--rho", type=float, help="rho of the (first) conjugate pair")
    p.add_argument("--y", type=float, help="y of the (first) conjugate pair")
    p.add_argument("--rho2", type=float, help="rho of the second pair (f4)")
    p.add_argument("--y2", type=float, help="y of the second pair (f4)")


def _require(args, *names):
    missing = [f"--{n.replace('_', '-')}" for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError(f"--family {args.family} needs {', '.join(missing)}")


def density_from_args(args):
    """A Density for fnT/f2/f4, or None for families without parameters."""
    fam = args.family
    if fam == "fnT":
        _require(args, "a")
        return DensityParams(ParamVector(tuple(parse_floats(args.a))))
    if fam == "f2":
        _require(args, "rho", "y")
        return ConjugatePairs.of(args.rho, args.y)
    if fam == "f4":
        _require(args, "rho", "y", "rho2", "y2")
        return ConjugatePairs.of(args.rho, args.y, args.rho2, args.y2)
    if fam == "arcsine":
        return DensityParams.of(0.0)
    return None


def density_values(args, x):
    fam = args.family
    if fam == "semicircle":
        return semicircle_pdf(x)
    if fam == "arcsine":
        return arcsine_pdf(x)
    if fam in ("marginal-fC", "marginal-fW"):
        _require(args, "rho")
        f = marginal_fC if fam == "marginal-fC" else marginal_fW
        return f(args.rho, x)
    return pdf(density_from_args(args), x)


@contextmanager
def _sink(path):
    if path in (None, "-"):
        yield sys.stdout
    else:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            yield fh


def write_csv(path, header, keys, values):
    with _sink(path) as fh:
        fh.write(f"{header}\n")
        for k, v in zip(keys, values):
            fh.write(f"{k:.17g},{v:.17g}\n")


def cmd_eval(args):
    x = np.clip(parse_grid(args.grid), -1.0 + EDGE, 1.0 - EDGE)
    write_csv(args.out, "x,value", x, np.atleast_1d(density_values(args, x)))
    return 0


def cmd_kernel(args):
    x = parse_grid(args.grid)
    kid = KernelId(args.id)
    y = x if kid.diagonal else np.full_like(x, args.y)
    write_csv(args.out, "x,value", x, kernel_grid(kid, x, y, np.full_like(x, args.rho)))
    return 0


def cmd_coeffs(args):
    pv = ParamVector(tuple(parse_floats(args.a)))
    if args.max_j < 0:
        raise UsageError("--max-j must be >= 0")
    doc = {"B": big_B(pv), "b": b_coeffs(pv), "t": t_coeffs(pv, args.max_j).tolist()}
    with _sink(args.out) as fh:
        fh.write(json.dumps(doc, indent=2) + "\n")
    return 0


def cmd_table(args):
    d = density_from_args(args)
    if d is None:
        raise UsageError("table needs --family fnT, f2, f4 or arcsine")
    c = fourier_coeffs(d)[: args.max_j]
    c = np.concatenate(([1.0], c, np.zeros(args.max_j - c.size)))
    write_csv(args.out, "j,value", range(c.size), c)
    return 0


def cmd_sample(args):
    d = density_from_args(args)
    if d is None:
        raise UsageError("sample needs --family fnT, f2, f4 or arcsine")
    try:
        cfg = SampleConfig(args.count, args.seed, args.tol)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    xs = sample(d, cfg)
    with _sink(args.out) as fh:
        fh.writelines(f"{v:.17g}\n" for v in xs)
    sidecar = args.sidecar or (f"{args.out}.json" if args.out not in (None, "-") else None)
    meta = {
        "seed": cfg.seed,
        "config": {
            "family": args.family,
            "count": cfg.count,
            "inversion_tolerance": cfg.inversion_tolerance,
            "params": _params_json(d),
            "generator": "splitmix64",
        },
    }
    text = json.dumps(meta, indent=2) + "\n"
    if sidecar:
        with open(sidecar, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stderr.write(text)
    return 0


def _params_json(d):
    if isinstance(d, DensityParams):
        return {"a": list(d.params.a)}
    return {"pairs": [{"rho": r, "y": y} for r, y in d.pairs]}


def cmd_verify(args):
    if args.rho_max is not None and not 0.0 < args.rho_max <= RHO_MAX:
        raise UsageError(f"--rho-max must lie in (0, {RHO_MAX}]")
    names = list(SUITES) if args.suite == "all" else [args.suite]
    failed = 0
    for name in names:
        print(f"[{name}]")
        for check in run_suite(name, rho_max=args.rho_max):
            print("  " + check.line())
            failed += not (check.passed or check.informational)
    print(f"{'FAILED' if failed else 'OK'}: {failed} check(s) out of tolerance")
    return EXIT_VERIFY if failed else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="chebprob", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("eval", help="evaluate a density on a grid (CSV)")
    _add_density_args(p)
    p.add_argument("--grid", required=True, help="lo:hi:count")
    p.add_argument("--out")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("kernel", help="evaluate a closed-form kernel on an x grid (CSV)")
    p.add_argument("--id", required=True, choices=[k.value for k in KernelId])
    p.add_argument("--rho", type=float, required=True)
    p.add_argument("--y", type=float, default=0.0, help="fixed y (ignored by diagonal kernels)")
    p.add_argument("--grid", required=True, help="lo:hi:count")
    p.add_argument("--out")
    p.set_defaults(func=cmd_kernel)

    p = sub.add_parser("coeffs", help="normalizer and partial-fraction data (JSON)")
    p.add_argument("--a", required=True)
    p.add_argument("--max-j", type=int, default=10)
    p.add_argument("--out")
    p.set_defaults(func=cmd_coeffs)

    p = sub.add_parser("table", help="T_j coefficients c_0..c_J of a density (CSV)")
    _add_density_args(p)
    p.add_argument("--max-j", type=int, default=20)
    p.add_argument("--out")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("sample", help="draw samples, one per line, plus a JSON sidecar")
    _add_density_args(p)
    p.add_argument("--count", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--tol", type=float, default=1e-12)
    p.add_argument("--out")
    p.add_argument("--sidecar", help="JSON path (default: OUT.json, or stderr)")
    p.set_defaults(func=cmd_sample)

    p = sub.add_parser("verify", help="run verification suites")
    p.add_argument("--suite", choices=(*SUITES, "all"), default="all")
    p.add_argument("--rho-max", type=float)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(merge_negative_values(sys.argv[1:] if argv is None else argv))
    try:
        return args.func(args)
    except UsageError as exc:
        parser.error(str(exc))
    except (DomainError, IllConditioned, Unsupported) as exc:
        print(f"chebprob: domain error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
