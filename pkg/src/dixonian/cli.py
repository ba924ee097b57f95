"""Command line front end.

Subcommands: eval, constants, invert, grid, selftest. Machine-readable JSON
goes to stdout (grid writes a PPM or CSV file instead); diagnostics go to
stderr. Exit status: 0 success, 1 failed checks or evaluation failure,
2 usage errors. The environment variable DIXON_SERIES_ORDER overrides the
default series order; an explicit --order flag wins over it.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import re
import sys

from . import render, selftest, series
from .constants import dixon_constants
from .errors import DixonError
from .evaluator import cm, sm, wp
from .inverse import sm_inverse

_NUMBER = r"(?:\d+(?:\.\d*)?|\.\d+)(?:[eE][-+]?\d+)?"
_COMPLEX = re.compile(rf"^([-+]?{_NUMBER})(([-+]{_NUMBER})i)?$")

_TOL_RANGE = (1e-14, 1e-2)


def parse_complex(text: str) -> complex:
    """Parse 'a', 'a+bi' or 'a-bi' with decimal or scientific reals."""
    m = _COMPLEX.match(text.strip())
    if m is None:
        raise argparse.ArgumentTypeError(f"not a complex literal: {text!r}")
    return complex(float(m.group(1)), float(m.group(3)) if m.group(3) else 0.0)


def _resolve_order(args) -> int:
    if getattr(args, "order", None) is not None:
        order = args.order
    else:
        env = os.environ.get("DIXON_SERIES_ORDER")
        if env is not None:
            try:
                order = int(env)
            except ValueError:
                raise ValueError(f"DIXON_SERIES_ORDER is not an integer: {env!r}")
        else:
            order = series.DEFAULT_ORDER
    if not 1 <= order <= series.MAX_ORDER:
        raise ValueError(f"series order must be in 1..{series.MAX_ORDER}, got {order}")
    return order


def _check_tol(tol: float) -> float:
    lo, hi = _TOL_RANGE
    if not lo <= tol <= hi:
        raise ValueError(f"tol must be in [{lo:g}, {hi:g}], got {tol:g}")
    return tol


def _cmd_eval(args) -> int:
    order = _resolve_order(args)
    fn = {"sm": sm, "cm": cm, "wp": wp}[args.fn]
    v = fn(args.z, order=order)
    if v.is_pole:
        print(json.dumps({"re": None, "im": None, "pole": True}))
    else:
        print(json.dumps({"re": v.value.real, "im": v.value.imag, "pole": False}))
    return 0


def _cmd_constants(args) -> int:
    k = dixon_constants(_resolve_order(args))
    print(
        json.dumps(
            {
                "K": k.K,
                "gamma": {"re": k.gamma.real, "im": k.gamma.imag},
                "periods": [{"re": p.real, "im": p.imag} for p in k.periods],
                "g2": k.g2,
                "g3": k.g3,
            }
        )
    )
    return 0


def _cmd_invert(args) -> int:
    result = sm_inverse(args.w, tol=_check_tol(args.tol), order=_resolve_order(args))
    print(json.dumps({"re": result.z.real, "im": result.z.imag, "residual": result.residual}))
    return 0


def _cell_preset() -> dict:
    k = dixon_constants()
    return {
        "center": complex(0.0),
        "width": 4.5 * k.K,
        "height": 1.5 * math.sqrt(3.0) * k.K,
        "nx": 181,
        "ny": 61,
    }


def _cmd_grid(args) -> int:
    _resolve_order(args)
    preset = _cell_preset() if args.preset == "cell" else {}

    def pick(name):
        value = getattr(args, name)
        if value is not None:
            return value
        if name in preset:
            return preset[name]
        raise ValueError(f"--{name} is required unless --preset supplies it")

    region = render.Region(
        center=pick("center"),
        width=pick("width"),
        height=pick("height"),
        nx=pick("nx"),
        ny=pick("ny"),
    )
    grid = render.sample_grid(region, args.fn, workers=args.threads)
    if args.format == "ppm":
        with open(args.out, "wb") as fh:
            fh.write(render.domain_color(grid))
    else:
        with open(args.out, "w", encoding="ascii") as fh:
            fh.write(render.grid_to_csv(grid))
    return 0


def _cmd_selftest(args) -> int:
    if args.list:
        for name in selftest.list_checks():
            print(name)
        return 0
    if args.tol is not None and args.tol <= 0.0:
        raise ValueError("tol must be positive")
    results = selftest.run_selftest(tol=args.tol)
    width = max(len(r.name) for r in results)
    passed = 0
    for r in results:
        passed += r.passed
        status = "PASS" if r.passed else "FAIL"
        print(f"{status}  {r.name:<{width}}  residual={r.residual:.3e}  tol={r.tol:.1e}")
    print(f"{passed}/{len(results)} checks passed")
    return 0 if passed == len(results) else 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dixonian",
        description="Dixonian elliptic functions sm and cm on the complex plane",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_eval = sub.add_parser("eval", help="evaluate sm, cm or wp at a point")
    p_eval.add_argument("--fn", choices=("sm", "cm", "wp"), required=True)
    p_eval.add_argument("--z", type=parse_complex, required=True, help="complex literal a, a+bi or a-bi")
    p_eval.add_argument("--order", type=int, help="series order (default 48, max 64)")
    p_eval.set_defaults(func=_cmd_eval)

    p_const = sub.add_parser("constants", help="print K, gamma, periods and invariants as JSON")
    p_const.add_argument("--order", type=int)
    p_const.set_defaults(func=_cmd_constants)

    p_inv = sub.add_parser("invert", help="principal preimage of sm")
    p_inv.add_argument("--w", type=parse_complex, required=True)
    p_inv.add_argument("--tol", type=float, default=1e-10, help="target residual (1e-14..1e-2)")
    p_inv.add_argument("--order", type=int)
    p_inv.set_defaults(func=_cmd_invert)

    p_grid = sub.add_parser("grid", help="sample a rectangle and write a PPM or CSV file")
    p_grid.add_argument("--fn", choices=("sm", "cm", "wp"), required=True)
    p_grid.add_argument("--preset", choices=("cell",), help="frame the fundamental cell")
    p_grid.add_argument("--center", type=parse_complex)
    p_grid.add_argument("--width", type=float)
    p_grid.add_argument("--height", type=float)
    p_grid.add_argument("--nx", type=int)
    p_grid.add_argument("--ny", type=int)
    p_grid.add_argument("--out", required=True)
    p_grid.add_argument("--format", choices=("ppm", "csv"), default="ppm")
    p_grid.add_argument("--threads", type=int, default=1)
    p_grid.add_argument("--order", type=int)
    p_grid.set_defaults(func=_cmd_grid)

    p_self = sub.add_parser("selftest", help="run the built-in verification suite")
    p_self.add_argument("--tol", type=float, help="override every check tolerance")
    p_self.add_argument("--list", action="store_true", help="list check names without running")
    p_self.set_defaults(func=_cmd_selftest)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except DixonError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
