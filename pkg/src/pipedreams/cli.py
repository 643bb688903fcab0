"""Command-line surface: polynomials, enumeration, maps, and sweep checks.

Exit codes: 0 success or verified, 1 a check failed (witness printed),
2 usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .bvpd import bvpd_to_mvpd, bvpd_to_pd, enumerate_bvpd, mvpd_to_bvpd, pd_to_bvpd
from .checks import CHECKS, run_check
from .construct import construct_up
from .diagrams import Diagram, DiagramError, Kind
from .mvpd import enumerate_mvpd_direct, mvpd_set, mvpd_to_pd, pd_to_mvpd
from .permutations import Perm
from .pipedream import (
    double_grothendieck,
    grothendieck,
    max_cross_count,
    pd_set,
)
from .polynomials import Poly


class UsageError(Exception):
    pass


def _parse_w(text: str) -> Perm:
    try:
        return Perm.from_one_line(int(p) for p in text.split(","))
    except ValueError as exc:
        raise UsageError(f"bad permutation {text!r}: {exc}") from None


# The expected input species of each map, for bare-text files.
_MAP_INPUT_KIND = {
    "phi": Kind.PD,
    "phi-inv": Kind.MVPD,
    "mb": Kind.MVPD,
    "bm": Kind.BVPD,
    "psi": Kind.BVPD,
    "psi-inv": Kind.PD,
}

_MAPS = {
    "phi": pd_to_mvpd,
    "phi-inv": mvpd_to_pd,
    "mb": mvpd_to_bvpd,
    "bm": bvpd_to_mvpd,
    "psi": bvpd_to_pd,
    "psi-inv": pd_to_bvpd,
}


def _read_diagram(path: str, kind: Kind | None) -> Diagram:
    try:
        text = Path(path).read_text().rstrip("\n")
    except OSError as exc:
        raise UsageError(str(exc)) from None
    if text.lstrip().startswith("{"):
        try:
            return Diagram.from_json(json.loads(text))
        except (json.JSONDecodeError, KeyError, ValueError, DiagramError) as exc:
            raise UsageError(f"{path}: {exc}") from None
    if kind is None:
        raise UsageError(f"{path}: bare text needs a known diagram kind")
    lines = text.split("\n")
    n = len(lines)
    try:
        return Diagram.parse_text(kind, n, text)
    except DiagramError as exc:
        raise UsageError(f"{path}: {exc}") from None


def _poly_out(p: Poly, as_json: bool) -> str:
    return json.dumps(p.to_json()) if as_json else p.text()


def _cmd_poly(args) -> int:
    w = _parse_w(args.w)
    p = double_grothendieck(w) if args.double else grothendieck(w)
    print(_poly_out(p, args.json))
    return 0


def _cmd_top(args) -> int:
    w = _parse_w(args.w)
    if w.is_inverse_fireworks():
        from .bvpd import top_grothendieck_via_bvpd

        p = top_grothendieck_via_bvpd(w)
    else:
        print(
            "notice: not inverse fireworks; extracting the top component by enumeration",
            file=sys.stderr,
        )
        sign = -1 if (max_cross_count(w) - w.inversions()) % 2 else 1
        p = grothendieck(w).top_component().scale(sign)
    print(_poly_out(p, args.json))
    return 0


def _cmd_enumerate(args) -> int:
    from . import pipedream as engine

    w = _parse_w(args.w)
    if args.kind == "pd":
        ds = pd_set(w)
    elif args.kind == "mvpd":
        # Beyond the exhaustive-sweep bound, the backtracking oracle still works.
        ds = mvpd_set(w) if w.n <= engine.DEFAULT_MAX_N else enumerate_mvpd_direct(w)
    else:
        ds = enumerate_bvpd(w)
    if args.json:
        print(json.dumps([d.to_json() for d in ds]))
    else:
        print("\n\n".join(d.render_text() for d in ds))
    return 0


def _cmd_map(args) -> int:
    w = _parse_w(args.w)
    d = _read_diagram(args.infile, _MAP_INPUT_KIND[args.which])
    try:
        out = _MAPS[args.which](d, w)
    except (ValueError, DiagramError) as exc:
        raise UsageError(str(exc)) from None
    print(out.render_text())
    return 0


def _cmd_construct_up(args) -> int:
    w = _parse_w(args.w)
    d = _read_diagram(args.infile, Kind.MVPD)
    try:
        cert = construct_up(d, w)
    except (ValueError, DiagramError) as exc:
        raise UsageError(str(exc)) from None
    if args.trace:
        print("input:")
        print(d.render_text())
        replay = d
        from .diagrams import Tile

        for step in cert.steps:
            if step.op == "mark":
                replay = replay.with_tiles({step.cell: Tile.MARKED_SE})
            elif step.op == "bump_to_cross":
                replay = replay.with_tiles({step.cell: Tile.CROSS})
            else:
                from .construct import droop_prime

                replay = droop_prime(replay, step.cell[0], step.cell[1], w)
            print(f"after {step.op} at {step.cell}:")
            print(replay.render_text())
    print(json.dumps(cert.to_json()))
    return 0


def _cmd_check(args) -> int:
    from . import pipedream as engine

    if args.n > engine.DEFAULT_MAX_N:
        if not args.force:
            raise UsageError(
                f"n={args.n} above the default bound {engine.DEFAULT_MAX_N}; pass --force"
            )
        engine.DEFAULT_MAX_N = args.n
    report = run_check(args.what, args.n, args.inverse_fireworks_only)
    for line in report.lines():
        print(line)
    return 0 if report.ok else 1


def _cmd_render(args) -> int:
    text = Path(args.infile).read_text().rstrip("\n")
    if text.lstrip().startswith("{"):
        try:
            d = Diagram.from_json(json.loads(text))
        except (json.JSONDecodeError, KeyError, ValueError, DiagramError) as exc:
            raise UsageError(f"{args.infile}: {exc}") from None
        print(d.render_text())
    else:
        print(text)
    return 0


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="pipedreams", description="Pipe-dream calculus for Grothendieck polynomials"
    )
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("poly", help="signed weight sum of a permutation")
    p.add_argument("--w", required=True, help="one-line notation, comma separated")
    p.add_argument("--double", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_poly)

    p = sub.add_parser("top", help="top-degree component")
    p.add_argument("--w", required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_top)

    p = sub.add_parser("enumerate", help="list the diagrams of a permutation")
    p.add_argument("--kind", required=True, choices=["pd", "mvpd", "bvpd"])
    p.add_argument("--w", required=True)
    group = p.add_mutually_exclusive_group()
    group.add_argument("--json", action="store_true")
    group.add_argument("--text", action="store_true")
    p.set_defaults(fn=_cmd_enumerate)

    p = sub.add_parser("map", help="apply one of the bijections to a diagram file")
    p.add_argument("--which", required=True, choices=sorted(_MAPS))
    p.add_argument("--w", required=True)
    p.add_argument("--in", dest="infile", required=True)
    p.set_defaults(fn=_cmd_map)

    p = sub.add_parser("construct-up", help="raise a diagram's weight by one variable")
    p.add_argument("--w", required=True)
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--trace", action="store_true")
    p.set_defaults(fn=_cmd_construct_up)

    p = sub.add_parser("check", help="run a cross-validation sweep")
    p.add_argument("--what", required=True, choices=sorted(CHECKS))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--inverse-fireworks-only", action="store_true")
    p.add_argument("--force", action="store_true")
    p.set_defaults(fn=_cmd_check)

    p = sub.add_parser("render", help="normalize a diagram file to text")
    p.add_argument("--in", dest="infile", required=True)
    p.set_defaults(fn=_cmd_render)

    return top


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (UsageError, ValueError, DiagramError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
