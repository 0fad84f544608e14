"""Command-line front end.

Subcommands print CSV (default) or JSON to stdout or ``--out``::

    airywell spectrum --potential dwp --z0sq 9 --levels 9
    airywell tables --z0sq 4,9,16 --levels 9
    airywell splitting --z0sq 2:20:0.5 --pairs 1-0,3-2
    airywell wavefunction --potential sho --levels 0 --zmax 4 --points 801
    airywell compare --potential dwp --z0sq 4 --levels 0,1

Exit status is 0 on success, 2 for usage or domain errors and 3 when a
numerical search fails to converge.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from dataclasses import fields, replace

import numpy as np

from . import methods as M
from .errors import ConfigurationError, ConvergenceError, DomainError
from .model import Potential, SolverConfig
from .wavefunction import PiecewiseWavefunction, discontinuity_report

SCHEMA = 1
EXIT_USAGE = 2
EXIT_CONVERGENCE = 3


class UsageError(Exception):
    pass


# -- argument parsing ----------------------------------------------------------

def _float_list(text: str) -> list[float]:
    """Comma list of reals; ``a:b:step`` expands to an inclusive range."""
    out: list[float] = []
    for part in text.split(","):
        part = part.strip()
        if ":" in part:
            try:
                a, b, step = (float(x) for x in part.split(":"))
            except ValueError:
                raise argparse.ArgumentTypeError(f"bad range {part!r}, expected start:stop:step")
            if step <= 0 or b < a:
                raise argparse.ArgumentTypeError(f"bad range {part!r}")
            count = int(math.floor((b - a) / step + 1e-9)) + 1
            out.extend(round(a + i * step, 12) for i in range(count))
        else:
            try:
                out.append(float(part))
            except ValueError:
                raise argparse.ArgumentTypeError(f"not a number: {part!r}")
    return out


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _pairs(text: str) -> list[tuple[int, int]]:
    out = []
    for part in text.split(","):
        try:
            hi, lo = (int(x) for x in part.split("-"))
        except ValueError:
            raise argparse.ArgumentTypeError(f"bad pair {part!r}, expected e.g. 1-0")
        out.append((hi, lo))
    return out


def _methods(text: str) -> list[str]:
    items = [m.strip() for m in text.split(",") if m.strip()]
    bad = [m for m in items if m not in M.METHODS]
    if bad or not items:
        raise argparse.ArgumentTypeError(f"methods must be drawn from {','.join(M.METHODS)}")
    return list(dict.fromkeys(items))


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--methods", type=_methods, default=list(M.METHODS))
    common.add_argument("--format", choices=("csv", "json"), default=None)
    common.add_argument("--out", default=None, help="output file (default stdout)")
    common.add_argument("--config", default=None, help="key=value file of solver settings")
    common.add_argument("--zc", type=float, default=None, help="exact-solver box width")
    common.add_argument("--nmax", type=int, default=None, help="exact-solver basis size")
    common.add_argument("--delta-z", type=float, default=None, dest="delta_z")

    p = argparse.ArgumentParser(prog="airywell", description=__doc__.split("\n")[0])
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("spectrum", parents=[common], help="eigenvalues of one potential")
    sp.add_argument("--potential", choices=("sho", "dwp"), default="dwp")
    sp.add_argument("--z0sq", type=float, default=None)
    sp.add_argument("--levels", type=int, default=9, help="number of levels")

    tp = sub.add_parser("tables", parents=[common], help="double-well level tables")
    tp.add_argument("--z0sq", type=_float_list, default=[4.0, 9.0, 16.0])
    tp.add_argument("--levels", type=int, default=9, help="number of levels")
    tp.add_argument("--digits", type=int, default=9, help="decimal places in CSV")

    lp = sub.add_parser("splitting", parents=[common], help="tunneling splittings")
    lp.add_argument("--z0sq", type=_float_list, default=[4.0, 9.0, 16.0])
    lp.add_argument("--pairs", type=_pairs, default=[(1, 0), (3, 2)])

    for name, helptext in (("wavefunction", "wavefunction samples"),
                           ("compare", "accuracy report against the exact solver")):
        wp = sub.add_parser(name, parents=[common], help=helptext)
        wp.add_argument("--potential", choices=("sho", "dwp"), default="sho")
        wp.add_argument("--z0sq", type=float, default=None)
        wp.add_argument("--levels", type=_int_list, default=[0], help="level indices, e.g. 0,1,3")
        wp.add_argument("--zmax", type=float, default=None)
        wp.add_argument("--points", type=int, default=801)
        if name == "wavefunction":
            wp.add_argument("--symmetric", action="store_true",
                            help="sample [-zmax, zmax] instead of [0, zmax]")
    return p


def read_config(path: str) -> dict:
    """Parse a ``key = value`` file with SolverConfig field names; ``#`` starts a comment."""
    types = {f.name: f.type for f in fields(SolverConfig)}
    out = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise UsageError(f"{path}:{lineno}: expected key = value")
            key, value = (s.strip() for s in line.split("=", 1))
            if key not in types:
                raise UsageError(f"{path}:{lineno}: unknown setting {key!r}")
            try:
                if value.lower() == "none":
                    out[key] = None
                elif key in ("n_max", "scan_points"):
                    out[key] = int(value)
                else:
                    out[key] = float(value)
            except ValueError:
                raise UsageError(f"{path}:{lineno}: bad value for {key}: {value!r}")
    return out


def _overrides(args) -> dict:
    values = read_config(args.config) if args.config else {}
    for flag, key in (("zc", "z_c"), ("nmax", "n_max"), ("delta_z", "delta_z")):
        v = getattr(args, flag)
        if v is not None:
            values[key] = v
    return values


def _config(pot: Potential, overrides: dict) -> SolverConfig:
    return SolverConfig.default_for(pot, **overrides)


def _potential(kind: str, z0sq: float | None) -> Potential:
    if kind == "sho":
        return Potential.sho()
    if z0sq is None:
        raise UsageError("--z0sq is required for the double well")
    if not z0sq > 0:
        raise UsageError(f"--z0sq must be positive, got {z0sq:g}")
    return Potential.dwp_from_barrier(z0sq)


# -- output --------------------------------------------------------------------

def fmt(x) -> str:
    if x is None:
        return ""
    if isinstance(x, str):
        return x
    if isinstance(x, (int, np.integer)):
        return str(int(x))
    x = float(x)
    return "" if not math.isfinite(x) else format(x, ".17g")


def to_csv(header: list[str], rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for row in rows:
        w.writerow([fmt(v) for v in row])
    return buf.getvalue()


def to_json(doc: dict) -> str:
    return json.dumps(doc, indent=2, allow_nan=False) + "\n"


def _clean(x):
    x = float(x)
    return x if math.isfinite(x) else None


# -- commands ------------------------------------------------------------------

def cmd_spectrum(args) -> tuple[str, str]:
    pot = _potential(args.potential, args.z0sq)
    cfg = _config(pot, _overrides(args))
    if args.levels < 1:
        raise UsageError("--levels must be at least 1")
    rows = []
    for method in args.methods:
        for lv in M.levels(pot, method, args.levels, cfg):
            rows.append((method, lv.n, lv.parity, lv.eps))
    if args.format == "json":
        doc = {"schema": SCHEMA, "command": "spectrum", "potential": pot.kind,
               "z0sq": pot.barrier, "levels": [
                   {"method": m, "n": n, "parity": p, "eps": e} for m, n, p, e in rows]}
        return to_json(doc), "json"
    return to_csv(["method", "n", "parity", "eps"], rows), "csv"


def table_data(z0sq_list, count, methods, overrides) -> dict[str, dict[float, list[float | None]]]:
    """``{method: {z0sq: [eps_0, ..., eps_{count-1}]}}`` with ``None`` past the barrier."""
    out: dict[str, dict[float, list[float | None]]] = {}
    for method in methods:
        out[method] = {}
        for z0sq in z0sq_list:
            pot = _potential("dwp", z0sq)
            found = M.levels(pot, method, count, _config(pot, overrides))
            eps = [lv.eps for lv in found][:count]
            out[method][z0sq] = eps + [None] * (count - len(eps))
    return out


def cmd_tables(args) -> tuple[str, str]:
    if args.levels < 1:
        raise UsageError("--levels must be at least 1")
    if args.digits < 0:
        raise UsageError("--digits must be non-negative")
    for z in args.z0sq:
        if not z > 0:
            raise UsageError(f"--z0sq values must be positive, got {z:g}")
    data = table_data(args.z0sq, args.levels, args.methods, _overrides(args))
    if args.format == "json":
        doc = {"schema": SCHEMA, "command": "tables", "z0sq": args.z0sq, "tables": {
            m: {format(z, "g"): vals for z, vals in cols.items()} for m, cols in data.items()}}
        return to_json(doc), "json"
    header = ["method", "n"] + [f"z0sq={z:g}" for z in args.z0sq]
    rows = []
    for method, cols in data.items():
        for n in range(args.levels):
            cells = []
            for z in args.z0sq:
                e = cols[z][n]
                cells.append("N/A" if e is None else f"{e:.{args.digits}f}")
            rows.append([method, n] + cells)
    return to_csv(header, rows), "csv"


def cmd_splitting(args) -> tuple[str, str]:
    for hi, lo in args.pairs:
        if not (hi > lo >= 0 and hi % 2 == 1 and lo % 2 == 0):
            raise UsageError(f"pair {hi}-{lo} must be odd-even with odd above even")
    for z in args.z0sq:
        if not z > 0:
            raise UsageError(f"--z0sq values must be positive, got {z:g}")
    count = max(hi for hi, _ in args.pairs) + 1
    data = table_data(args.z0sq, count, args.methods, _overrides(args))
    rows = []
    for method, cols in data.items():
        for z in args.z0sq:
            for hi, lo in args.pairs:
                a, b = cols[z][hi], cols[z][lo]
                if a is None or b is None:
                    rows.append((method, z, f"{hi}-{lo}", None, "exhausted"))
                else:
                    rows.append((method, z, f"{hi}-{lo}", a - b, "ok"))
    if args.format == "json":
        doc = {"schema": SCHEMA, "command": "splitting", "rows": [
            {"method": m, "z0sq": z, "pair": p, "delta": d, "status": s}
            for m, z, p, d, s in rows]}
        return to_json(doc), "json"
    return to_csv(["method", "z0sq", "pair", "delta", "status"], rows), "csv"


def _wave_setup(args):
    pot = _potential(args.potential, args.z0sq)
    overrides = _overrides(args)
    if any(n < 0 for n in args.levels):
        raise UsageError("level indices must be non-negative")
    if args.points < 2:
        raise UsageError("--points must be at least 2")
    z_max = args.zmax if args.zmax is not None else M.default_zmax(pot, max(args.levels))
    if not z_max > 0:
        raise UsageError("--zmax must be positive")
    cfg = _config(pot, overrides)
    if "z_c" not in overrides:
        cfg = M.box_for(pot, cfg, z_max)
    elif cfg.z_c < 2 * z_max:
        raise ConfigurationError(f"box width {cfg.z_c:g} cannot hold the grid [-{z_max:g}, {z_max:g}]")
    return pot, cfg, z_max


def _overlap_sign(f, ref, z_max: float) -> float:
    # both functions share a parity, so the half-line overlap decides the sign
    grid = np.linspace(0.0, z_max, 4001)
    s = np.trapezoid(np.asarray(f(grid)) * np.asarray(ref(grid)), grid)
    return -1.0 if s < 0 else 1.0


def _wkb_extras(wf: PiecewiseWavefunction, z: np.ndarray, delta_z: float):
    """Bare-WKB values inside each patch and patch values within 2*delta_z of its turning point."""
    a = np.abs(z)
    bare = np.full(z.shape, np.nan)
    patch = np.full(z.shape, np.nan)
    regs = wf.regions
    for i, reg in enumerate(regs):
        if reg.kind != "patch":
            continue
        tp = 0.5 * (reg.lo + reg.hi)
        inside = (a >= reg.lo) & (a <= reg.hi)
        left = inside & (a < tp)
        right = inside & (a > tp)
        with np.errstate(all="ignore"):
            if np.any(left):
                bare[left] = wf.branch(regs[i - 1].label, a[left])
            if np.any(right):
                bare[right] = wf.branch(regs[i + 1].label, a[right])
            near = np.abs(a - tp) <= 2 * delta_z
            if np.any(near):
                patch[near] = wf.branch(reg.label, a[near])
    sign = np.where((z < 0) & (wf.parity == "odd"), -1.0, 1.0)
    return bare * sign, patch * sign


def _patch_width(wf: PiecewiseWavefunction) -> float:
    reg = next(r for r in wf.regions if r.kind == "patch")
    return 0.5 * (reg.hi - reg.lo)


def cmd_wavefunction(args) -> tuple[str, str]:
    pot, cfg, z_max = _wave_setup(args)
    lo = -z_max if args.symmetric else 0.0
    z = np.linspace(lo, z_max, args.points)
    header = ["n", "z"]
    for m in args.methods:
        header += [m, f"{m}_region"]
        if m == "wkb":
            header += ["wkb_bare", "wkb_patch"]
    rows = []
    records = []
    for n in args.levels:
        _, ref, _ = M.wavefunction(pot, "exact", n, cfg, z_max)
        cols = {}
        for m in args.methods:
            _, f, wf = M.wavefunction(pot, m, n, cfg, z_max)
            sign = 1.0 if m == "exact" else _overlap_sign(f, ref, z_max)
            cols[m] = sign * np.asarray(f(z))
            cols[f"{m}_region"] = wf.region_labels(z) if wf is not None else np.full(z.shape, "")
            if m == "wkb":
                bare, patch = _wkb_extras(wf, z, _patch_width(wf))
                cols["wkb_bare"], cols["wkb_patch"] = sign * bare, sign * patch
        for i in range(z.size):
            rows.append([n, z[i]] + [cols[h][i] for h in header[2:]])
        records.append({"n": n, "z": z.tolist(), **{
            h: ([str(v) for v in cols[h]] if h.endswith("_region")
                else [_clean(v) for v in cols[h]]) for h in header[2:]}})
    if args.format == "json":
        doc = {"schema": SCHEMA, "command": "wavefunction", "potential": pot.kind,
               "z0sq": pot.barrier, "levels": records}
        return to_json(doc), "json"
    return to_csv(header, rows), "csv"


def cmd_compare(args) -> tuple[str, str]:
    pot, cfg, z_max = _wave_setup(args)
    grid = np.linspace(0.0, z_max, args.points)
    report = []
    for n in args.levels:
        eps_ref, ref, _ = M.wavefunction(pot, "exact", n, cfg, z_max)
        psi_ref = np.asarray(ref(grid))
        peak = float(np.max(np.abs(psi_ref)))
        entry = {"n": n, "exact_eps": eps_ref, "methods": {}}
        for m in args.methods:
            if m == "exact":
                continue
            eps, f, wf = M.wavefunction(pot, m, n, cfg, z_max)
            sign = _overlap_sign(f, ref, z_max)
            dev = float(np.max(np.abs(sign * np.asarray(f(grid)) - psi_ref))) / peak
            jumps = discontinuity_report(wf)
            entry["methods"][m] = {
                "eps": eps,
                "eps_error": abs(eps - eps_ref),
                "max_deviation": dev,
                "max_jump": max((j.relative for j in jumps), default=0.0),
                "jumps": [{"z": j.z, "jump": j.jump, "relative": j.relative} for j in jumps],
            }
        report.append(entry)
    doc = {"schema": SCHEMA, "command": "compare", "potential": pot.kind,
           "z0sq": pot.barrier, "z_max": z_max, "points": args.points, "levels": report}
    return to_json(doc), "json"


COMMANDS = {
    "spectrum": cmd_spectrum,
    "tables": cmd_tables,
    "splitting": cmd_splitting,
    "wavefunction": cmd_wavefunction,
    "compare": cmd_compare,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        text, _ = COMMANDS[args.command](args)
    except (UsageError, DomainError, ConfigurationError) as exc:
        print(f"airywell: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ConvergenceError as exc:
        print(f"airywell: did not converge: {exc}", file=sys.stderr)
        return EXIT_CONVERGENCE
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
