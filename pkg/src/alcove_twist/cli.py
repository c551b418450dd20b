"""Command-line entry point.

Exit codes: 0 when every verification passed, 1 when one failed, 2 for
invalid input.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from fractions import Fraction

from . import report
from .lattice import ShapeError, parse_vector
from .newton import NotDominantError, NotInLatticeError
from .puiseux import RegularityError
from .rootsys import UnknownTypeError
from .weyl import DEFAULT_CAP, GroupTooLargeError

EXIT_OK, EXIT_FAILED, EXIT_INVALID = 0, 1, 2

INPUT_ERRORS = (UnknownTypeError, ShapeError, NotDominantError, NotInLatticeError,
                GroupTooLargeError, RegularityError, ValueError, OSError,
                json.JSONDecodeError, ZeroDivisionError)


@dataclass
class RunConfig:
    command: str
    type: str | None = None
    nu: tuple[Fraction, ...] | None = None
    x: int | None = None
    poly: str | None = None
    cap: int = DEFAULT_CAP
    denom_bound: int = 60
    samples: int = 100
    seed: int = 0
    format: str = "json"
    out: str | None = None
    max_rank: int = 4


def _need_type(config: RunConfig) -> str:
    if not config.type:
        raise ValueError(f"{config.command} needs --type")
    return config.type


def build_report(config: RunConfig) -> dict:
    cmd = config.command
    if cmd == "psi":
        return report.psi_report(_need_type(config), config.cap)
    if cmd == "alcove":
        return report.alcove_report(_need_type(config), config.cap)
    if cmd == "springer":
        return report.springer_report(_need_type(config), config.x, config.cap,
                                      config.denom_bound, config.samples, config.seed)
    if cmd == "newton":
        return report.newton_report(_need_type(config), config.nu, config.poly)
    if cmd == "witness":
        return report.witness_report(_need_type(config), config.nu, config.poly)
    if cmd == "table":
        return report.table_report(config.max_rank, config.cap)
    raise ValueError(f"unknown command {cmd!r}")


def emit_tables(max_rank: int, out_dir: str, cap: int = DEFAULT_CAP) -> list[str]:
    """Write ``table.json`` and ``table.csv`` into ``out_dir``."""
    rep = report.table_report(max_rank, cap)
    os.makedirs(out_dir, exist_ok=True)
    paths = [os.path.join(out_dir, "table.json"), os.path.join(out_dir, "table.csv")]
    with open(paths[0], "w") as fh:
        fh.write(report.dumps(rep))
    with open(paths[1], "w") as fh:
        fh.write(report.table_csv(rep["rows"]))
    return paths


def run(config: RunConfig) -> tuple[int, dict]:
    try:
        rep = build_report(config)
    except INPUT_ERRORS as exc:
        return EXIT_INVALID, {"command": config.command, "error": f"{type(exc).__name__}: {exc}", "ok": False}
    return (EXIT_OK if rep["ok"] else EXIT_FAILED), rep


def render(rep: dict, fmt: str) -> str:
    return report.render_text(rep) if fmt == "text" else report.dumps(rep)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="alcove-twist",
        description="Exact checks for alcove automorphisms, twisted torus fixed points and Newton twists.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, type_required=True):
        p.add_argument("--type", required=type_required,
                       help="root system (A1..A8, B2..B6, C2..C6, D4..D6, E6..E8, F4, G2) or GLn")
        p.add_argument("--cap", type=int, default=DEFAULT_CAP, help="largest Weyl group to enumerate")
        p.add_argument("--format", choices=("json", "text"), default="json")
        p.add_argument("--out", help="write the report here instead of stdout")

    common(sub.add_parser("psi", help="psi on every coset of the coweight lattice"))
    common(sub.add_parser("alcove", help="fundamental alcove and its barycenter"))
    p = sub.add_parser("springer", help="twisted fixed points and regular twists")
    common(p)
    p.add_argument("--x", type=int, help="coset label j (0 or a minuscule node); default all")
    p.add_argument("--denom-bound", type=int, default=60)
    p.add_argument("--samples", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    for name, text in (("newton", "Newton point twist w(nu)"), ("witness", "Newton stratum witness")):
        p = sub.add_parser(name, help=text)
        common(p)
        src = p.add_mutually_exclusive_group(required=True)
        src.add_argument("--nu", help="comma separated rational vector, e.g. 1/2,1/2")
        src.add_argument("--poly", help="polynomial JSON file (GLn only)")
    p = sub.add_parser("table", help="summary rows for every type up to a rank")
    common(p, type_required=False)
    p.add_argument("--max-rank", type=int, default=4)
    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    nu = getattr(args, "nu", None)
    return RunConfig(
        command=args.command,
        type=getattr(args, "type", None),
        nu=parse_vector(nu) if nu is not None else None,
        x=getattr(args, "x", None),
        poly=getattr(args, "poly", None),
        cap=args.cap,
        denom_bound=getattr(args, "denom_bound", 60),
        samples=getattr(args, "samples", 100),
        seed=getattr(args, "seed", 0),
        format=args.format,
        out=args.out,
        max_rank=getattr(args, "max_rank", 4),
    )


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        config = config_from_args(args)
    except (ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    if config.command == "table" and config.out:
        try:
            paths = emit_tables(config.max_rank, config.out, config.cap)
        except OSError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_INVALID
        with open(paths[0]) as fh:
            ok = json.load(fh)["ok"]
        print("\n".join(paths))
        return EXIT_OK if ok else EXIT_FAILED
    code, rep = run(config)
    text = render(rep, config.format)
    if config.out:
        with open(config.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    if code == EXIT_INVALID:
        print(f"error: {rep['error']}", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
