"""Command-line entry point.

Subcommands: spiral (CSV table), verify (claim checks), discover (JSON
report), render (SVG figure), report (reports + figures for the claims
divisors). Exit codes: 0 success, 1 claim mismatch, 2 bad arguments.
All files are written atomically (temp file + rename).
"""

from __future__ import annotations

import argparse
import os
import sys
import tempfile
from pathlib import Path
from typing import Sequence

from .claims import claimed_divisors
from .config import Config
from .discovery import DivisorReport, discover, verify_paper_table
from .errors import RootSpiralError
from .render import Scene, default_layers, export_report, render_svg
from .spiral import shared_table

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2

#: Figure extent: large enough to show every system's inner windings.
FIGURE_N_MAX = 2000


def _atomic_write(path: Path, data: bytes) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.")
    try:
        with os.fdopen(fd, "wb") as handle:
            handle.write(data)
        os.replace(tmp, path)
    except BaseException:
        os.unlink(tmp)
        raise


def _load_config(args: argparse.Namespace) -> Config:
    overrides = {}
    if getattr(args, "n_max", None) is not None:
        overrides["n_max"] = args.n_max
    if getattr(args, "mirror", False):
        overrides["mirror"] = True
    if args.config:
        return Config.from_file(args.config, **overrides)
    return Config(**overrides)


def _out_path(cfg: Config, out: str | None, default_name: str) -> Path:
    if out:
        return Path(out)
    return cfg.resolved_output_dir() / default_name


def _cmd_spiral(args: argparse.Namespace) -> int:
    cfg = _load_config(args)
    table = shared_table(cfg.n_max)
    path = _out_path(cfg, args.out, f"spiral_{cfg.n_max}.csv")
    import io

    buf = io.StringIO()
    table.write_csv(buf, cfg.n_max)
    _atomic_write(path, buf.getvalue().encode("utf-8"))
    print(f"wrote {path} ({cfg.n_max} points)")
    return EXIT_OK


def _cmd_verify(args: argparse.Namespace) -> int:
    cfg = _load_config(args)
    if args.divisor is not None and args.divisor not in claimed_divisors():
        print(
            f"error: no published data for divisor {args.divisor}; "
            f"use `discover` instead",
            file=sys.stderr,
        )
        return EXIT_USAGE
    reports = verify_paper_table(args.divisor, config=cfg)
    mismatched, flagged, lines = 0, 0, []
    for rep in reports:
        lines.append(f"divisor {rep.divisor}:")
        for check in rep.paper_match:
            lines.append(f"  [{check.status:>10}] {check.claim} -- {check.detail}")
            if check.status == "mismatched":
                mismatched += 1
            elif check.status == "flagged":
                flagged += 1
    if flagged:
        lines.append("")
        lines.append("known discrepancies (flagged, not failures):")
        for rep in reports:
            for check in rep.paper_match:
                if check.status == "flagged":
                    lines.append(f"  {check.claim} -- {check.detail}")
    lines.append("")
    lines.append(
        f"{mismatched} mismatched, {flagged} flagged, "
        f"{sum(len(r.paper_match) for r in reports)} checks total"
    )
    text = "\n".join(lines) + "\n"
    if args.out:
        _atomic_write(Path(args.out), text.encode("utf-8"))
        print(f"wrote {args.out}")
    else:
        print(text, end="")
    return EXIT_MISMATCH if mismatched else EXIT_OK


def _cmd_discover(args: argparse.Namespace) -> int:
    cfg = _load_config(args)
    report = discover(args.divisor, config=cfg)
    path = _out_path(cfg, args.out, f"report_d{args.divisor}.json")
    _atomic_write(path, export_report(report, "json"))
    print(f"wrote {path}")
    return EXIT_OK


def _figure(report: DivisorReport, cfg: Config, n_max: int) -> bytes:
    scene = Scene(
        n_max=n_max,
        highlight_divisor=report.divisor,
        arm_layers=default_layers(report),
        show_square_reference=True,
        mirror=cfg.mirror,
    )
    return render_svg(scene)


def _cmd_render(args: argparse.Namespace) -> int:
    cfg = _load_config(args)
    report = discover(args.divisor, config=cfg)
    path = _out_path(cfg, args.out, f"figure_d{args.divisor}.svg")
    _atomic_write(path, _figure(report, cfg, min(FIGURE_N_MAX, cfg.n_max)))
    print(f"wrote {path}")
    return EXIT_OK


def _cmd_report(args: argparse.Namespace) -> int:
    cfg = _load_config(args)
    out_dir = Path(args.out) if args.out else cfg.resolved_output_dir()
    table = shared_table(cfg.n_max)
    divisors = claimed_divisors() if args.all else [args.divisor]
    status = EXIT_OK
    for d in divisors:
        report = discover(d, table=table, config=cfg)
        _atomic_write(out_dir / f"report_d{d}.json", export_report(report, "json"))
        _atomic_write(out_dir / f"report_d{d}.txt", export_report(report, "text"))
        _atomic_write(
            out_dir / f"figure_d{d}.svg",
            _figure(report, cfg, min(FIGURE_N_MAX, cfg.n_max)),
        )
        if not report.all_matched:
            status = EXIT_MISMATCH
        print(f"divisor {d}: {'ok' if report.all_matched else 'MISMATCH'}")
    print(f"wrote reports and figures to {out_dir}")
    return status


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rootspiral",
        description="Square Root Spiral: construction, spiral-graph "
        "verification, discovery, and figures.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser, divisor: bool = False) -> None:
        p.add_argument("--config", help="JSON config file overriding defaults")
        p.add_argument("--out", help="output file (or directory for report)")
        p.add_argument(
            "--n-max", type=int, default=None, help="spiral table size (default 20000)"
        )
        if divisor:
            p.add_argument("--divisor", type=int, required=True, help="divisor d >= 2")

    p = sub.add_parser("spiral", help="write the spiral table as CSV")
    common(p)
    p.set_defaults(func=_cmd_spiral)

    p = sub.add_parser("verify", help="check every published claim")
    common(p)
    p.add_argument("--divisor", type=int, default=None, help="restrict to one divisor")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("discover", help="discover arm systems for a divisor")
    common(p, divisor=True)
    p.set_defaults(func=_cmd_discover)

    p = sub.add_parser("render", help="render the figure for a divisor")
    common(p, divisor=True)
    p.add_argument("--mirror", action="store_true", help="flip the y axis")
    p.set_defaults(func=_cmd_render)

    p = sub.add_parser("report", help="reports + figures for the claims divisors")
    common(p)
    p.add_argument("--all", action="store_true", help="all divisors with published data")
    p.add_argument("--divisor", type=int, default=None, help="a single divisor")
    p.add_argument("--mirror", action="store_true", help="flip the y axis")
    p.set_defaults(func=_cmd_report)

    return parser


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse exits 2 on bad usage, 0 on --help
        return int(exc.code or 0)
    if args.command == "report" and not args.all and args.divisor is None:
        print("error: report needs --all or --divisor", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except (ValueError, OSError, RootSpiralError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
