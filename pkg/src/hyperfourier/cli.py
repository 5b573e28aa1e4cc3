"""Command line interface.

Subcommands:
    convert    read a grid (--kind csv|image|qf2d|st4d) and rewrite it in the
               format implied by the output extension (.qf2d, .st4d, .csv)
    transform  apply a transform (--kind qft|iqft|qftr|iqftr|vtft|ivtft|sft|isft)
               to a grid file, choosing the --path (auto|direct|fast)
    verify     run a seeded check suite and print the deviation table
    bench      time fast against direct paths on power-of-two sizes, after
               asserting that their outputs agree

Exit codes: 0 on success, 1 when a verification or benchmark assertion
fails, 2 for usage and file errors.
"""

from __future__ import annotations

import argparse
import os
import sys
import time

import numpy as np

from . import gridio
from .qft2d import (
    QSpectrum2D,
    QuaternionField2D,
    qft_forward,
    qft_forward_direct,
    qft_forward_fast,
    qft_inverse,
    qftr_forward,
    qftr_forward_direct,
    qftr_forward_fast,
    qftr_inverse,
)
from .spacetime import (
    STSpectrum4D,
    sft_forward,
    sft_inverse,
    vtft_forward,
    vtft_inverse,
)
from .verify import SUITE_NAMES, run_suite

__all__ = ["main"]


def _cmd_convert(args) -> int:
    readers = {
        "csv": gridio.read_csv_2d,
        "image": gridio.read_image,
        "qf2d": gridio.read_qf2d,
        "st4d": gridio.read_st4d,
    }
    grid = readers[args.kind](args.input)
    _write_by_extension(args.out, grid)
    if args.mag_csv:
        gridio.write_magnitude_csv(args.mag_csv, grid)
    return 0


def _write_by_extension(path: str, grid) -> None:
    ext = os.path.splitext(path)[1].lower()
    is_4d = grid.data.ndim == 5
    if ext == ".csv":
        (gridio.write_csv_4d if is_4d else gridio.write_csv_2d)(path, grid)
    elif ext == ".qf2d" and not is_4d:
        gridio.write_qf2d(path, grid)
    elif ext == ".st4d" and is_4d:
        gridio.write_st4d(path, grid)
    else:
        raise gridio.GridFileError(
            f"cannot write a {'4D' if is_4d else '2D'} grid to {path!r}; "
            "use .csv, or .qf2d for 2D and .st4d for 4D grids"
        )


_TRANSFORMS_2D = {
    "qft": lambda g, p: qft_forward(g, p),
    "iqft": lambda g, p: qft_inverse(QSpectrum2D(g.data, g.dx, g.dy), p),
    "qftr": lambda g, p: qftr_forward(g, p),
    "iqftr": lambda g, p: qftr_inverse(QSpectrum2D(g.data, g.dx, g.dy), p),
}
_TRANSFORMS_4D = {
    "vtft": lambda g, p: vtft_forward(g, p),
    "ivtft": lambda g, p: vtft_inverse(_as_st_spectrum(g), p),
    "sft": lambda g, p: sft_forward(g, p),
    "isft": lambda g, p: sft_inverse(_as_st_spectrum(g), p),
}


def _as_st_spectrum(grid) -> STSpectrum4D:
    return STSpectrum4D(grid.data, grid.dt, grid.dx, grid.dy, grid.dz)


def _cmd_transform(args) -> int:
    kind = gridio.sniff_kind(args.input)
    if args.kind in _TRANSFORMS_2D:
        if kind != "qf2d":
            raise gridio.GridFileError(
                f"{args.input}: transform {args.kind} needs a QF2D file, got {kind}"
            )
        grid = gridio.read_qf2d(args.input)
        result = _TRANSFORMS_2D[args.kind](grid, args.path)
    else:
        if kind != "st4d":
            raise gridio.GridFileError(
                f"{args.input}: transform {args.kind} needs an ST4D file, got {kind}"
            )
        grid = gridio.read_st4d(args.input)
        result = _TRANSFORMS_4D[args.kind](grid, args.path)
    _write_by_extension(args.out, result)
    if args.mag_csv:
        gridio.write_magnitude_csv(args.mag_csv, result)
    return 0


def _cmd_verify(args) -> int:
    report = run_suite(args.suite, args.seed)
    print(report.table())
    return 0 if report.ok else 1


def _cmd_bench(args) -> int:
    try:
        sizes = [int(s) for s in args.sizes.split(",") if s]
    except ValueError:
        raise gridio.GridFileError(f"bad --sizes value {args.sizes!r}") from None
    if not sizes or any(s < 2 or s & (s - 1) for s in sizes):
        raise gridio.GridFileError("--sizes must be a comma list of powers of two")

    rng = np.random.default_rng(args.seed)
    pairs = [
        ("two-sided", qft_forward_direct, qft_forward_fast),
        ("right-sided", qftr_forward_direct, qftr_forward_fast),
    ]
    print(f"{'transform':<12} {'size':>9} {'direct':>10} {'fast':>10} {'speedup':>8}")
    failed = False
    for size in sizes:
        field = QuaternionField2D(rng.standard_normal((size, size, 4)))
        for label, direct, fast in pairs:
            t0 = time.perf_counter()
            ref = direct(field)
            t_direct = time.perf_counter() - t0
            t_fast = min(
                _timed(lambda: fast(field))[0] for _ in range(5)
            )
            got = fast(field)
            rel = float(
                np.max(np.abs(got.data - ref.data)) / np.max(np.abs(ref.data))
            )
            if rel > 1e-9:
                print(
                    f"{label} at {size}x{size}: fast deviates from direct "
                    f"by {rel:.2e} (> 1e-09)",
                    file=sys.stderr,
                )
                failed = True
                continue
            print(
                f"{label:<12} {size:>4}x{size:<4} {t_direct:>9.4f}s "
                f"{t_fast:>9.4f}s {t_direct / t_fast:>7.1f}x"
            )
    return 1 if failed else 0


def _timed(fn):
    start = time.perf_counter()
    out = fn()
    return time.perf_counter() - start, out


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hyperfourier",
        description="Quaternion and spacetime-algebra Fourier transforms on grids.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_convert = sub.add_parser("convert", help="convert between grid formats")
    p_convert.add_argument("--in", dest="input", required=True, metavar="PATH")
    p_convert.add_argument(
        "--kind", required=True, choices=("csv", "image", "qf2d", "st4d"),
        help="format of the input file",
    )
    p_convert.add_argument("--out", required=True, metavar="PATH")
    p_convert.add_argument("--mag-csv", metavar="PATH", default=None,
                           help="also write per-sample magnitudes as CSV")
    p_convert.set_defaults(func=_cmd_convert)

    p_tr = sub.add_parser("transform", help="apply a transform to a grid file")
    p_tr.add_argument("--in", dest="input", required=True, metavar="PATH")
    p_tr.add_argument(
        "--kind", required=True,
        choices=tuple(_TRANSFORMS_2D) + tuple(_TRANSFORMS_4D),
        help="transform to apply",
    )
    p_tr.add_argument("--path", default="auto", choices=("auto", "direct", "fast"))
    p_tr.add_argument("--out", required=True, metavar="PATH")
    p_tr.add_argument("--mag-csv", metavar="PATH", default=None,
                      help="also write per-sample magnitudes as CSV")
    p_tr.set_defaults(func=_cmd_transform)

    p_ver = sub.add_parser("verify", help="run a seeded verification suite")
    p_ver.add_argument("--suite", default="all", choices=SUITE_NAMES)
    p_ver.add_argument("--seed", type=int, default=0)
    p_ver.set_defaults(func=_cmd_verify)

    p_bench = sub.add_parser("bench", help="time fast paths against direct sums")
    p_bench.add_argument("--sizes", default="16,64",
                         help="comma list of power-of-two grid sizes")
    p_bench.add_argument("--seed", type=int, default=0)
    p_bench.set_defaults(func=_cmd_bench)

    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (gridio.GridFileError, OSError, ValueError) as exc:
        print(f"hyperfourier: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
