"""Command-line front end.

Subcommands emit JSON on stdout (SVG goes to files).  Exit codes:
0 success / certified pass, 1 certified fail, 2 usage error,
3 inconclusive.
"""

from __future__ import annotations

import argparse
import json
import sys

from .certificates import verify_quotient, verify_theorem
from .covering import build_cover, cover_cylinders
from .cylinders import Direction, decompose_retry
from .errors import VeechLabError
from .render import render_cover, render_infinite_window, render_surface
from .surface import build_base
from .zcover import (
    infinite_singularities,
    sigma_T_infinite,
    singularity_loops,
    std_infinite_monodromy,
    z_cover_structure,
)

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_INCONCLUSIVE = 3


def _emit(data) -> None:
    json.dump(data, sys.stdout, indent=2)
    sys.stdout.write("\n")


def _check_n(n: int) -> None:
    if n < 5 or n == 6:
        raise UsageError("n must be at least 5 and not 6")


class UsageError(Exception):
    pass


def cmd_surface(args) -> int:
    _check_n(args.n)
    _emit(build_base(args.n).to_json())
    return EXIT_PASS


def cmd_cylinders(args) -> int:
    _check_n(args.n)
    l = args.direction
    if args.d is not None:
        if args.d < 2:
            raise UsageError("degree must be at least 2")
        cover = build_cover(args.n, args.d)
        cyls = cover_cylinders(cover, l)
    else:
        surface = build_base(args.n)
        cyls = decompose_retry(surface, Direction.from_index(args.n, l))
    _emit(
        {
            "n": args.n,
            "d": args.d,
            "direction_index": l,
            "direction_note": "direction is v_l = R_n^l (1,0)^T at angle l*pi/n",
            "cylinders": [c.to_json() for c in cyls],
        }
    )
    return EXIT_PASS


def cmd_cover(args) -> int:
    _check_n(args.n)
    if args.d < 2:
        raise UsageError("degree must be at least 2")
    _emit(build_cover(args.n, args.d).to_json())
    return EXIT_PASS


def cmd_verify(args) -> int:
    _check_n(args.n)
    if args.infinite:
        cert = verify_theorem(args.n, infinite=True)
    else:
        if args.d is None:
            raise UsageError("verify needs --d or --infinite")
        if args.d < 2:
            raise UsageError("degree must be at least 2")
        cert = verify_theorem(args.n, args.d)
    _emit(cert.to_json())
    if cert.verdict == "pass":
        return EXIT_PASS
    if cert.verdict == "inconclusive":
        return EXIT_INCONCLUSIVE
    return EXIT_FAIL


def cmd_quotient(args) -> int:
    _check_n(args.n)
    _emit(verify_quotient(args.n).to_json())
    return EXIT_PASS


def cmd_infinite(args) -> int:
    _check_n(args.n)
    n = args.n
    zm = std_infinite_monodromy(n)
    report = {
        "n": n,
        "monodromy": {
            "k1": zm.k1,
            "k2": zm.k2,
            "sigma_k1": zm.image(zm.k1).to_json(),
            "sigma_k2": zm.image(zm.k2).to_json(),
        },
        "infinite_angle_singularities": infinite_singularities(n),
        "singularity_loops": [w.to_json() for w in singularity_loops(n)],
        "z_cover_of_Y_n2": z_cover_structure(n),
        "sigma_T": sigma_T_infinite().to_json(),
    }
    _emit(report)
    return EXIT_PASS


def cmd_render(args) -> int:
    _check_n(args.n)
    if args.infinite:
        svg = render_infinite_window(args.n, args.window, palette=args.palette)
    elif args.d is not None:
        if args.d < 2:
            raise UsageError("degree must be at least 2")
        cover = build_cover(args.n, args.d)
        svg = render_cover(cover, overlay_direction=args.direction, palette=args.palette)
    else:
        surface = build_base(args.n)
        svg = render_surface(surface, overlay_direction=args.direction, palette=args.palette)
    with open(args.out, "w", encoding="utf-8") as fh:
        fh.write(svg)
    _emit({"written": args.out})
    return EXIT_PASS


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="veechlab",
        description=(
            "Exact cylinder decompositions, covering monodromy and "
            "Veech-group certificates for regular n-gon translation surfaces. "
            "Directions are indexed by l with v_l = R_n^l (1,0)^T."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("surface", help="JSON dump of the base surface X_n")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_surface)

    p = sub.add_parser("cylinders", help="cylinder decomposition in direction v_l")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, default=None, help="covering degree (omit for the base)")
    p.add_argument("--direction", type=int, required=True, metavar="L")
    p.set_defaults(func=cmd_cylinders)

    p = sub.add_parser("cover", help="JSON descriptor of the cover Y_{n,d}")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.set_defaults(func=cmd_cover)

    p = sub.add_parser("verify", help="certify the Veech-group theorem for (n, d)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, default=None)
    p.add_argument("--infinite", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("quotient", help="invariants of the quotient H/Gamma_n")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_quotient)

    p = sub.add_parser("infinite", help="verification report for Y_{n,infinity}")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_infinite)

    p = sub.add_parser("render", help="SVG of a surface, cover or infinite window")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, default=None)
    p.add_argument("--infinite", action="store_true")
    p.add_argument("--window", type=int, default=2)
    p.add_argument("--direction", type=int, default=None, help="overlay cylinders in v_l")
    p.add_argument("--palette", default="default")
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_render)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_USAGE
    except VeechLabError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
