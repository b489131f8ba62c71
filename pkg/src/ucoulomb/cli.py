"""Command-line tables for the U-contour Coulomb model.

    ucoulomb contour      --eps 0.005 --s -0.05:0.05:201
    ucoulomb potential    --Z 1 --L 3.01 --eps 0.005 --s -5:5:1001
    ucoulomb scan         --Z 1 --L 3.75 --eps 0.005 --k 0.1:10:512 --format csv
    ucoulomb bound-states --Z 1 --L 0.25 --family both --n-max 5
    ucoulomb verify       --Z 1 --L 3.75 --eps 0.005 --k 1 --tol 1e-4

Grids are ``min:max:n`` with both ends included. CSV output carries a header
and 17 significant digits. JSON output is one object with "meta" and "rows".
Exit status is 0 on success, 1 when ``verify`` finds a residual at or above
``--tol`` and 2 for invalid input.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from dataclasses import dataclass, field
from typing import Any, Sequence

import numpy as np

from .contour import contour_point
from .errors import UCoulombError
from .model import PhysParams, potential, validate
from .oracle import verify_grid
from .scattering import FAMILIES, bound_state_poles, scan

COMMANDS = ("contour", "potential", "scan", "bound-states", "verify")
GRID_FLAGS = ("--s", "--k")
DEFAULT_GRIDS = {
    "contour": "-0.05:0.05:201",
    "potential": "-5:5:1001",
    "scan": "0.1:10:512",
    "verify": "1",
}


class ConfigError(ValueError):
    pass


@dataclass(frozen=True)
class Grid:
    lo: float
    hi: float
    n: int

    def values(self) -> np.ndarray:
        if self.n == 1:
            return np.array([self.lo])
        v = np.linspace(self.lo, self.hi, self.n)
        if self.lo == -self.hi:
            # make mirrored grid points exact negatives of each other
            v = 0.5 * (v - v[::-1])
        return v

    def __str__(self) -> str:
        return f"{self.lo!r}:{self.hi!r}:{self.n}"


def parse_grid(text: str, allow_single: bool = False) -> Grid:
    """``min:max:n`` (n >= 2, min < max) or, where allowed, a single number."""
    parts = text.split(":")
    try:
        if len(parts) == 1 and allow_single:
            v = float(parts[0])
            if not math.isfinite(v):
                raise ValueError
            return Grid(v, v, 1)
        if len(parts) != 3:
            raise ValueError
        lo, hi, n = float(parts[0]), float(parts[1]), int(parts[2])
    except ValueError:
        raise ConfigError(f"bad grid {text!r}; expected min:max:n") from None
    if n < 2:
        raise ConfigError(f"grid {text!r} needs n >= 2")
    if not (math.isfinite(lo) and math.isfinite(hi) and lo < hi):
        raise ConfigError(f"grid {text!r} needs finite min < max")
    return Grid(lo, hi, n)


@dataclass
class RunConfig:
    command: str
    params: PhysParams
    grid: Grid | None = None
    format: str = "csv"
    output: str | None = None
    tol: float = 1e-4
    family: str = "both"
    n_max: int = 5
    s_match: float | None = None
    extras: dict[str, Any] = field(default_factory=dict)

    def check(self) -> None:
        if self.command not in COMMANDS:
            raise ConfigError(f"unknown command {self.command!r}")
        if self.format not in ("csv", "json"):
            raise ConfigError(f"unknown format {self.format!r}")
        if not (self.tol > 0 and math.isfinite(self.tol)):
            raise ConfigError("tol must be a positive number")
        if self.command == "contour":
            if not self.params.eps > 0:
                raise ConfigError("eps must be positive")
        else:
            try:
                validate(self.params)
            except ValueError as exc:
                raise ConfigError(str(exc)) from None
        if self.command in ("scan", "verify") and self.grid is not None and self.grid.lo <= 0:
            raise ConfigError("k values must be positive")
        if self.n_max < 0:
            raise ConfigError("n-max must be nonnegative")


def _rows_contour(cfg: RunConfig) -> tuple[list[str], list[list[Any]]]:
    rows = []
    for s in cfg.grid.values():
        p = contour_point(cfg.params.eps, float(s))
        rows.append([p.s, p.x.real, p.x.imag, p.theta])
    return ["s", "re_x", "im_x", "theta"], rows


def _rows_potential(cfg: RunConfig) -> tuple[list[str], list[list[Any]]]:
    rows = []
    for s in cfg.grid.values():
        p = contour_point(cfg.params.eps, float(s))
        v = potential(cfg.params, p)
        rows.append([p.s, v.real, v.imag])
    return ["s", "re_v", "im_v"], rows


def _rows_scan(cfg: RunConfig) -> tuple[list[str], list[list[Any]]]:
    g = cfg.grid
    table = scan(cfg.params, g.lo, g.hi, g.n)
    rows = [[r.k, r.t_abs, r.t_arg, r.r_lr_abs, r.r_rl_abs, r.near_pole] for r in table]
    return ["k", "abs_t_lr", "arg_t_lr", "abs_r_lr", "abs_r_rl", "near_pole"], rows


def _rows_bound(cfg: RunConfig) -> tuple[list[str], list[list[Any]]]:
    families = FAMILIES if cfg.family == "both" else (cfg.family,)
    rows = []
    for fam in families:
        try:
            states = bound_state_poles(cfg.params, fam, cfg.n_max)
        except UCoulombError:
            if cfg.family != "both":
                raise
            continue
        rows.extend([b.family, b.n, b.k_n.imag, b.E_n] for b in states)
    return ["family", "n", "im_k", "energy"], rows


def _rows_verify(cfg: RunConfig) -> tuple[list[str], list[list[Any]]]:
    p = cfg.params
    points = [(p.Z, p.L, p.eps, float(k)) for k in cfg.grid.values()]
    results = verify_grid(points, s_match=cfg.s_match)
    rows = [
        [
            r.Z, r.L, r.eps, r.k,
            r.err_t_lr, r.err_r_lr, r.err_t_rl, r.err_r_rl,
            r.t_ratio, r.max_err, r.ok(cfg.tol),
        ]
        for r in results
    ]
    cols = ["Z", "L", "eps", "k", "err_t_lr", "err_r_lr", "err_t_rl", "err_r_rl",
            "t_ratio", "max_err", "ok"]
    return cols, rows


_DISPATCH = {
    "contour": _rows_contour,
    "potential": _rows_potential,
    "scan": _rows_scan,
    "bound-states": _rows_bound,
    "verify": _rows_verify,
}


def _fmt(v: Any) -> str:
    if isinstance(v, (bool, np.bool_)):
        return "true" if v else "false"
    if isinstance(v, (int, np.integer)):
        return str(int(v))
    if isinstance(v, str):
        return v
    return "%.17g" % float(v)


def _json_value(v: Any) -> Any:
    if isinstance(v, (bool, np.bool_)):
        return bool(v)
    if isinstance(v, (int, np.integer)):
        return int(v)
    if isinstance(v, complex):
        return [_json_value(v.real), _json_value(v.imag)]
    if isinstance(v, (float, np.floating)):
        v = float(v)
        return v if math.isfinite(v) else None
    return v


def render(cfg: RunConfig, cols: list[str], rows: list[list[Any]]) -> str:
    if cfg.format == "json":
        meta = {
            "command": cfg.command,
            "Z": cfg.params.Z,
            "L": cfg.params.L,
            "eps": cfg.params.eps,
        }
        if cfg.grid is not None:
            meta["grid"] = str(cfg.grid)
        if cfg.command == "verify":
            meta["tol"] = cfg.tol
        if cfg.command == "bound-states":
            meta["family"] = cfg.family
            meta["n_max"] = cfg.n_max
        body = {
            "meta": meta,
            "rows": [{c: _json_value(v) for c, v in zip(cols, r)} for r in rows],
        }
        return json.dumps(body, indent=1, allow_nan=False) + "\n"
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    header: list[str] = []
    for c, v in zip(cols, rows[0] if rows else [None] * len(cols)):
        header.extend([f"{c}_re", f"{c}_im"] if isinstance(v, complex) else [c])
    w.writerow(header)
    for r in rows:
        out: list[str] = []
        for v in r:
            out.extend([_fmt(v.real), _fmt(v.imag)] if isinstance(v, complex) else [_fmt(v)])
        w.writerow(out)
    return buf.getvalue()


def run(cfg: RunConfig) -> int:
    """Execute one command; returns the process exit code."""
    try:
        cfg.check()
        cols, rows = _DISPATCH[cfg.command](cfg)
    except (ConfigError, UCoulombError, ValueError) as exc:
        print(f"ucoulomb: error: {exc}", file=sys.stderr)
        return 2
    text = render(cfg, cols, rows)
    if cfg.output:
        with open(cfg.output, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    if cfg.command == "verify" and not all(r[-1] for r in rows):
        return 1
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ucoulomb", description="Coulomb scattering on a U-shaped complex contour."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser, physics: bool = True) -> None:
        if physics:
            p.add_argument("--Z", type=float, default=1.0, help="Coulomb strength")
            p.add_argument("--L", type=float, default=3.75, help="centrifugal parameter")
        p.add_argument("--eps", type=float, default=0.005, help="contour half-width")
        p.add_argument("--format", choices=("csv", "json"), default="csv")
        p.add_argument("--output", "-o", default=None, help="write here instead of stdout")

    p = sub.add_parser("contour", help="path samples (s, Re x, Im x, theta)")
    common(p, physics=False)
    p.add_argument("--s", default=DEFAULT_GRIDS["contour"], help="s grid min:max:n")

    p = sub.add_parser("potential", help="potential along the path (s, Re V, Im V)")
    common(p)
    p.add_argument("--s", default=DEFAULT_GRIDS["potential"], help="s grid min:max:n")

    p = sub.add_parser("scan", help="transmission and reflection over a k grid")
    common(p)
    p.add_argument("--k", default=DEFAULT_GRIDS["scan"], help="k grid min:max:n")

    p = sub.add_parser("bound-states", help="poles of the transmission amplitude")
    common(p)
    p.add_argument("--family", choices=FAMILIES + ("both",), default="both")
    p.add_argument("--n-max", type=int, default=5)

    p = sub.add_parser("verify", help="closed forms against direct integration")
    common(p)
    p.add_argument("--k", default=DEFAULT_GRIDS["verify"], help="k value or grid min:max:n")
    p.add_argument("--tol", type=float, default=1e-4, help="pass threshold on relative error")
    p.add_argument("--s-match", type=float, default=None, help="matching distance along each arm")
    return parser


def _join_grid_flags(argv: Sequence[str]) -> list[str]:
    # "--s -5:5:11" would otherwise be read as an option; glue value to flag.
    out: list[str] = []
    it = iter(argv)
    for tok in it:
        if tok in GRID_FLAGS:
            nxt = next(it, None)
            out.append(tok if nxt is None else f"{tok}={nxt}")
        else:
            out.append(tok)
    return out


def config_from_args(ns: argparse.Namespace) -> RunConfig:
    cmd = ns.command
    params = PhysParams(getattr(ns, "Z", 0.0), getattr(ns, "L", 0.0), ns.eps)
    grid = None
    if cmd in ("contour", "potential"):
        grid = parse_grid(ns.s)
    elif cmd == "scan":
        grid = parse_grid(ns.k)
    elif cmd == "verify":
        grid = parse_grid(ns.k, allow_single=True)
    return RunConfig(
        command=cmd,
        params=params,
        grid=grid,
        format=ns.format,
        output=ns.output,
        tol=getattr(ns, "tol", 1e-4),
        family=getattr(ns, "family", "both"),
        n_max=getattr(ns, "n_max", 5),
        s_match=getattr(ns, "s_match", None),
    )


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = _join_grid_flags(sys.argv[1:] if argv is None else argv)
    ns = parser.parse_args(args)
    try:
        cfg = config_from_args(ns)
    except ConfigError as exc:
        print(f"ucoulomb: error: {exc}", file=sys.stderr)
        return 2
    return run(cfg)


if __name__ == "__main__":
    sys.exit(main())
