"""Command-line front end: energies, sweeps, extremum search, validation.

Subcommands
-----------
energy           one geometry + material -> one energy row
sweep-eps        static-permittivity sweep (energies, or ratio curves
                 with ``--ratio``)
sweep-thickness  PWS/exact ratio against relative slab thickness at
                 fixed permittivity
find-max         golden-section maximum of a ratio curve over eps(0)
validate         run the twelve-criterion validation suite

Output rows share one schema (CSV header
``geometry,eps0,e_rel,l_over_r,method,L,value,ratio,quad_error,converged``;
JSON is an array of objects with the same keys).  Floating-point cells
are printed with 12 significant digits; missing or non-finite cells are
``NA`` in CSV and ``null`` in JSON.  Identical flags produce
byte-identical output: rows are emitted in grid order regardless of
``--jobs``, and no timestamps enter the data.

Lengths are reduced (multiples of the resonance wavelength scale) and
energies are in inverse-length units; ``--unit-length <meters>``
rescales energy cells to joules (or J/m^2 for the per-area geometries)
using hbar*c.  The ``L`` column stays in reduced units either way.

Exit status: 0 success, 1 flag/usage errors, 2 numerical
non-convergence or I/O failure, 3 validation-suite failure.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Dict, List, Optional, Sequence

import numpy as np

from . import exact, pws, ratios, validation
from .materials import MaterialModel, eps_iu
from .pws import GEOMETRY_KINDS, EnergyResult, GeometrySpec
from .quadrature import EvaluationError, QuadratureConfig

__all__ = ["build_parser", "main", "run"]

HBAR_J_S = 1.054571817e-34
C_M_PER_S = 299792458.0
HBARC_J_M = HBAR_J_S * C_M_PER_S

CSV_COLUMNS = ("geometry", "eps0", "e_rel", "l_over_r", "method", "L",
               "value", "ratio", "quad_error", "converged")

_RATIO_KINDS = ("atom-plate", "atom-slab", "plate-plate", "slab-slab",
                "sphere-slab", "sphere-plate")
_FIND_MAX_BRACKETS = {
    "atom-plate": (2.0, 100.0),
    "atom-slab": (2.0, 100.0),
    "plate-plate": (1.001, 1e6),
    "slab-slab": (1.001, 1e6),
}


# ---------------------------------------------------------------------------
# argument parsing


class _Parser(argparse.ArgumentParser):
    """ArgumentParser whose usage errors surface as exit status 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(1)


def _add_material_flags(p: argparse.ArgumentParser) -> None:
    g = p.add_argument_group("material (choose one model)")
    g.add_argument("--eps", type=float, metavar="EPS0",
                   help="static permittivity eps(icu) = EPS0 >= 1")
    g.add_argument("--eps-lorentz", metavar="EPS0,U_RES",
                   help="single-resonance permittivity "
                        "1 + (EPS0-1)/(1+(u/U_RES)^2)")
    g.add_argument("--alpha", type=float, metavar="A0",
                   help="static reduced polarizability a(icu) = A0")
    g.add_argument("--alpha-lorentz", metavar="A0,U_RES",
                   help="single-resonance polarizability "
                        "A0/(1+(u/U_RES)^2)")
    g.add_argument("--perfect-mirror", action="store_true",
                   help="idealized perfect reflector")
    g.add_argument("--nv", type=float, default=1.0, metavar="N",
                   help="atomic number density (default 1.0)")


def _add_geometry_flags(p: argparse.ArgumentParser) -> None:
    g = p.add_argument_group("geometry")
    g.add_argument("--geometry", required=True, choices=GEOMETRY_KINDS)
    g.add_argument("--L", type=float,
                   help="surface separation (atom-atom: interatomic "
                        "distance)")
    g.add_argument("--eA", type=float, help="thickness of slab A")
    g.add_argument("--eB", type=float, help="thickness of slab B")
    g.add_argument("--R", type=float, help="sphere radius")
    g.add_argument("--Lcenter", type=float,
                   help="sphere-center to surface distance")


def _add_output_flags(p: argparse.ArgumentParser) -> None:
    g = p.add_argument_group("output")
    g.add_argument("--out", metavar="PATH",
                   help="write to PATH instead of stdout")
    g.add_argument("--format", choices=("csv", "json"), default="csv")
    g.add_argument("--rel-tol", type=float, metavar="TOL",
                   help="quadrature relative tolerance override")
    g.add_argument("--jobs", type=int, default=1, metavar="N",
                   help="worker threads for sweeps (default 1)")
    g.add_argument("--unit-length", type=float, metavar="METERS",
                   help="emit SI energies, taking one reduced length "
                        "unit = METERS")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="casimir-pws",
        description="Pairwise-summation and exact dispersion "
                    "interaction energies, and their ratio curves.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_energy = sub.add_parser(
        "energy", help="single energy evaluation",
        description="Evaluate one interaction energy.")
    _add_material_flags(p_energy)
    _add_geometry_flags(p_energy)
    p_energy.add_argument(
        "--method", choices=("pws", "exact", "pws-long-range", "oracle"),
        default="pws",
        help="pws: closed-form pairwise summation; exact: "
             "scattering/Lifshitz reference (planar geometries); "
             "pws-long-range: static closed form; oracle: nested-"
             "quadrature volume integration")
    _add_output_flags(p_energy)

    p_sweep = sub.add_parser(
        "sweep-eps", help="sweep the static permittivity",
        description="Evaluate energies or PWS/exact ratios over a "
                    "logarithmic eps(0) grid.")
    _add_material_flags(p_sweep)
    _add_geometry_flags(p_sweep)
    p_sweep.add_argument("--ratio", action="store_true",
                         help="emit PWS/exact ratio curves instead of "
                              "energies")
    p_sweep.add_argument("--method",
                         choices=("pws", "exact", "pws-long-range"),
                         default="pws",
                         help="energy method when --ratio is absent")
    p_sweep.add_argument("--points", type=int, default=200)
    p_sweep.add_argument("--eps-min", type=float, default=1.001)
    p_sweep.add_argument("--eps-max", type=float, default=1e6)
    p_sweep.add_argument("--e-rel", type=float, metavar="E",
                         help="slab thickness / separation for ratio "
                              "sweeps of slab kinds")
    p_sweep.add_argument("--l-over-r", type=float, metavar="X",
                         help="gap / radius for sphere ratio sweeps")
    _add_output_flags(p_sweep)

    p_thick = sub.add_parser(
        "sweep-thickness", help="sweep the relative slab thickness",
        description="PWS/exact ratio against e/L at fixed "
                    "permittivity (atom-slab or slab-slab).")
    _add_material_flags(p_thick)
    p_thick.add_argument("--geometry", required=True,
                         choices=("atom-slab", "slab-slab"))
    p_thick.add_argument("--e-rel", required=True, metavar="E1,E2,...",
                         help="comma-separated relative thicknesses")
    _add_output_flags(p_thick)

    p_max = sub.add_parser(
        "find-max", help="locate a ratio-curve maximum",
        description="Golden-section maximum of the PWS/exact ratio "
                    "over eps(0).")
    p_max.add_argument("--geometry", required=True,
                       choices=tuple(_FIND_MAX_BRACKETS))
    p_max.add_argument("--bracket", metavar="LO,HI",
                       help="search bracket (defaults: [2,100] for "
                            "atom kinds, [1.001,1e6] for plate kinds)")
    p_max.add_argument("--e-rel", type=float, metavar="E",
                       help="slab thickness / separation for slab kinds")
    _add_output_flags(p_max)

    p_val = sub.add_parser(
        "validate", help="run the validation suite",
        description="Run the twelve quantitative self-checks; exit 0 "
                    "only if every criterion passes.")
    p_val.add_argument("--out", metavar="PATH",
                       help="write the report to PATH instead of stdout")

    return parser


# ---------------------------------------------------------------------------
# construction helpers


def _parse_pair(text: str, flag: str) -> Sequence[float]:
    try:
        parts = [float(tok) for tok in text.split(",")]
    except ValueError:
        raise ValueError(f"{flag} expects comma-separated numbers, "
                         f"got {text!r}")
    if len(parts) != 2:
        raise ValueError(f"{flag} expects exactly two values, got {text!r}")
    return parts


def _material_from_args(args: argparse.Namespace) -> MaterialModel:
    chosen = [name for name, given in (
        ("--eps", args.eps is not None),
        ("--eps-lorentz", args.eps_lorentz is not None),
        ("--alpha", args.alpha is not None),
        ("--alpha-lorentz", args.alpha_lorentz is not None),
        ("--perfect-mirror", args.perfect_mirror),
    ) if given]
    if len(chosen) != 1:
        raise ValueError("choose exactly one material model "
                         "(--eps, --eps-lorentz, --alpha, "
                         "--alpha-lorentz or --perfect-mirror); "
                         f"got {chosen or 'none'}")
    nv = args.nv
    if args.perfect_mirror:
        return MaterialModel.perfect_mirror(n_v=nv)
    if args.eps is not None:
        return MaterialModel.static(args.eps, n_v=nv)
    if args.eps_lorentz is not None:
        eps0, u_res = _parse_pair(args.eps_lorentz, "--eps-lorentz")
        return MaterialModel.lorentz_eps(eps0, u_res, n_v=nv)
    if args.alpha is not None:
        return MaterialModel.static_alpha(args.alpha, n_v=nv)
    a0, u_res = _parse_pair(args.alpha_lorentz, "--alpha-lorentz")
    return MaterialModel.lorentz_alpha(a0, u_res, n_v=nv)


def _require(args: argparse.Namespace, names: Sequence[str]) -> List[float]:
    values = []
    for name in names:
        v = getattr(args, name.lstrip("-").replace("-", "_"))
        if v is None:
            raise ValueError(f"--geometry {args.geometry} requires {name}")
        values.append(v)
    return values


def _geometry_from_args(args: argparse.Namespace) -> GeometrySpec:
    kind = args.geometry
    if kind == "atom-atom":
        (d,) = _require(args, ["--L"])
        return GeometrySpec.atom_atom(d)
    if kind == "atom-slab":
        L, eA = _require(args, ["--L", "--eA"])
        return GeometrySpec.atom_slab(L, eA)
    if kind == "atom-plate":
        (L,) = _require(args, ["--L"])
        return GeometrySpec.atom_plate(L)
    if kind == "slab-slab":
        L, eA, eB = _require(args, ["--L", "--eA", "--eB"])
        return GeometrySpec.slab_slab(L, eA, eB)
    if kind == "plate-plate":
        (L,) = _require(args, ["--L"])
        return GeometrySpec.plate_plate(L)
    if kind == "sphere-slab":
        Lc, R, eA = _require(args, ["--Lcenter", "--R", "--eA"])
        return GeometrySpec.sphere_slab(Lc, R, eA)
    Lc, R = _require(args, ["--Lcenter", "--R"])
    return GeometrySpec.sphere_plate(Lc, R)


def _cfg_from_args(args: argparse.Namespace) -> Optional[QuadratureConfig]:
    if getattr(args, "rel_tol", None) is None:
        return None
    return QuadratureConfig(rel_tol=args.rel_tol)


def _energy(m: MaterialModel, g: GeometrySpec, method: str,
            cfg: Optional[QuadratureConfig]) -> EnergyResult:
    if method == "pws-long-range":
        return pws.pws_long_range(m, m, g)
    if method == "oracle":
        return pws.oracle_pws(m, m, g, cfg=cfg)
    if method == "pws":
        closed: Dict[str, Callable[[], EnergyResult]] = {
            "atom-atom": lambda: pws.vdw_atom_atom(m, m, g.d, cfg=cfg),
            "atom-slab": lambda: pws.pws_atom_slab(m, m, g.L, g.e_A,
                                                   cfg=cfg),
            "atom-plate": lambda: pws.pws_atom_plate(m, m, g.L, cfg=cfg),
            "slab-slab": lambda: pws.pws_slab_slab(m, m, g.L, g.e_A,
                                                   g.e_B, cfg=cfg),
            "plate-plate": lambda: pws.pws_plate_plate(m, m, g.L,
                                                       cfg=cfg),
            "sphere-slab": lambda: pws.pws_sphere_slab(
                m, m, g.L_center, g.R, g.e_A, cfg=cfg),
            "sphere-plate": lambda: pws.pws_sphere_plate(
                m, m, g.L_center, g.R, cfg=cfg),
        }
        return closed[g.kind]()
    # exact: scattering/Lifshitz reference, planar geometries only
    exact_forms: Dict[str, Callable[[], EnergyResult]] = {
        "atom-plate": lambda: exact.exact_atom_plate(m, m, g.L, cfg=cfg),
        "atom-slab": lambda: exact.exact_atom_slab(m, m, g.L, g.e_A,
                                                   cfg=cfg),
        "plate-plate": lambda: exact.exact_plate_plate(m, g.L, cfg=cfg),
        "slab-slab": lambda: exact.exact_slab_slab(m, g.L, g.e_A, g.e_B,
                                                   cfg=cfg),
    }
    if g.kind not in exact_forms:
        raise ValueError(
            f"--method exact supports planar geometries only, not "
            f"{g.kind} (for atom-atom, pairwise summation is already "
            f"the exact result)")
    return exact_forms[g.kind]()


# ---------------------------------------------------------------------------
# row assembly and emission


def _row(geometry: str, eps0: Optional[float], e_rel: Optional[float],
         l_over_r: Optional[float], method: str, L: Optional[float],
         value: Optional[float], ratio: Optional[float],
         quad_error: Optional[float], converged: bool) -> Dict[str, object]:
    return {
        "geometry": geometry, "eps0": eps0, "e_rel": e_rel,
        "l_over_r": l_over_r, "method": method, "L": L, "value": value,
        "ratio": ratio, "quad_error": quad_error, "converged": converged,
    }


def _geometry_columns(g: GeometrySpec):
    """(eps-independent) separation, e_rel and gap/R columns for a row."""
    if g.kind == "atom-atom":
        return g.d, None, None
    if g.kind in ("atom-plate", "plate-plate"):
        return g.L, None, None
    if g.kind in ("atom-slab", "slab-slab"):
        return g.L, g.e_A / g.L, None
    gap = g.L_center - g.R
    return gap, None, gap / g.R


def _energy_row(m: MaterialModel, g: GeometrySpec, method: str,
                cfg: Optional[QuadratureConfig]) -> Dict[str, object]:
    res = _energy(m, g, method, cfg)
    eps0 = float(eps_iu(m, 0.0))
    L, e_rel, l_over_r = _geometry_columns(g)
    err = (res.quadrature.error_estimate
           if res.quadrature is not None else None)
    return _row(g.kind, eps0, e_rel, l_over_r, res.method, L, res.value,
                None, err, res.converged)


def _ratio_row(kind: str, point: "ratios.RatioPoint") -> Dict[str, object]:
    return _row(kind, point.eps0, point.e_rel, point.l_over_r,
                "PWS-long-range", ratios.REFERENCE_L, point.pws_value,
                point.ratio, None, True)


def _scale_to_si(rows: List[Dict[str, object]], unit_length: float,
                 per_unit: str) -> None:
    scale = HBARC_J_M / unit_length
    if per_unit == "per-area":
        scale /= unit_length ** 2
    for row in rows:
        for key in ("value", "quad_error"):
            if isinstance(row[key], float):
                row[key] = row[key] * scale


def _fmt_csv_cell(v: object) -> str:
    if v is None:
        return "NA"
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        if not math.isfinite(v):
            return "NA"
        return f"{v:.12g}"
    return str(v)


def _json_cell(v: object):
    if isinstance(v, float):
        if not math.isfinite(v):
            return None
        return float(f"{v:.12g}")
    return v


def emit(rows: List[Dict[str, object]], fmt: str,
         destination: Optional[str]) -> None:
    """Serialize rows (fixed column order, 12 significant digits)."""
    if not rows:
        print("warning: empty sweep, emitting header only",
              file=sys.stderr)
    if fmt == "csv":
        lines = [",".join(CSV_COLUMNS)]
        lines += [",".join(_fmt_csv_cell(row[c]) for c in CSV_COLUMNS)
                  for row in rows]
        text = "\n".join(lines) + "\n"
    else:
        payload = [{c: _json_cell(row[c]) for c in CSV_COLUMNS}
                   for row in rows]
        text = json.dumps(payload, indent=2, ensure_ascii=False,
                          allow_nan=False) + "\n"
    if destination is None:
        sys.stdout.write(text)
    else:
        with open(destination, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


def _map_ordered(fn: Callable, items: Sequence, jobs: int) -> List:
    """Apply fn over items, preserving order; threads when jobs > 1."""
    if jobs <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items))


# ---------------------------------------------------------------------------
# subcommand drivers


def _cmd_energy(args: argparse.Namespace) -> int:
    m = _material_from_args(args)
    g = _geometry_from_args(args)
    rows = [_energy_row(m, g, args.method, _cfg_from_args(args))]
    if args.unit_length is not None:
        _scale_to_si(rows, args.unit_length, g.per_unit)
    emit(rows, args.format, args.out)
    return 0 if all(r["converged"] for r in rows) else 2


def _sweep_grid(args: argparse.Namespace) -> np.ndarray:
    if args.points < 1:
        raise ValueError("--points must be >= 1")
    if not 1.0 < args.eps_min < args.eps_max:
        raise ValueError("need 1 < --eps-min < --eps-max")
    if args.points == 1:
        return np.asarray([args.eps_min])
    return np.geomspace(args.eps_min, args.eps_max, args.points)


def _cmd_sweep_eps(args: argparse.Namespace) -> int:
    cfg = _cfg_from_args(args)
    grid = _sweep_grid(args)
    kind = args.geometry
    mat_flags = (args.eps is not None or args.eps_lorentz is not None
                 or args.alpha is not None
                 or args.alpha_lorentz is not None or args.perfect_mirror)
    if mat_flags:
        raise ValueError("sweep-eps sets the static permittivity from "
                         "the grid; material model flags do not apply "
                         "(--nv is honoured for energy sweeps)")
    if args.ratio:
        if kind not in _RATIO_KINDS:
            raise ValueError(f"no ratio curve is defined for {kind} "
                             "(pairwise summation is exact there)")

        def one(eps0: float) -> Dict[str, object]:
            (point,) = ratios.sweep_eps(kind, [eps0], e_rel=args.e_rel,
                                        l_over_r=args.l_over_r, cfg=cfg)
            return _ratio_row(kind, point)

        rows = _map_ordered(one, [float(e) for e in grid], args.jobs)
    else:
        g = _geometry_from_args(args)

        def one(eps0: float) -> Dict[str, object]:
            m = MaterialModel.static(eps0, n_v=args.nv)
            return _energy_row(m, g, args.method, cfg)

        rows = _map_ordered(one, [float(e) for e in grid], args.jobs)
        if args.unit_length is not None:
            _scale_to_si(rows, args.unit_length, g.per_unit)
    emit(rows, args.format, args.out)
    return 0 if all(r["converged"] for r in rows) else 2


def _cmd_sweep_thickness(args: argparse.Namespace) -> int:
    m = _material_from_args(args)
    if m.is_perfect_mirror:
        eps0 = math.inf
    elif m.variant in ("static", "lorentz-eps"):
        eps0 = m.eps0
    else:
        raise ValueError("thickness sweeps take a permittivity model "
                         "(--eps, --eps-lorentz or --perfect-mirror)")
    try:
        e_values = [float(tok) for tok in args.e_rel.split(",")]
    except ValueError:
        raise ValueError(f"--e-rel expects comma-separated numbers, "
                         f"got {args.e_rel!r}")
    cfg = _cfg_from_args(args)

    def one(e_rel: float) -> Dict[str, object]:
        (point,) = ratios.sweep_thickness(args.geometry, eps0, [e_rel],
                                          cfg=cfg)
        return _ratio_row(args.geometry, point)

    rows = _map_ordered(one, e_values, args.jobs)
    emit(rows, args.format, args.out)
    return 0


def _cmd_find_max(args: argparse.Namespace) -> int:
    cfg = _cfg_from_args(args)
    kind = args.geometry
    if args.bracket is not None:
        lo, hi = _parse_pair(args.bracket, "--bracket")
    else:
        lo, hi = _FIND_MAX_BRACKETS[kind]
    if kind in ("atom-slab", "slab-slab") and args.e_rel is None:
        raise ValueError(f"--geometry {kind} requires --e-rel")
    curves: Dict[str, Callable[[float], float]] = {
        "atom-plate": lambda e: ratios.ratio_atom_plate_lr(e, cfg=cfg),
        "atom-slab": lambda e: ratios.ratio_atom_slab_lr(
            e, args.e_rel, cfg=cfg),
        "plate-plate": lambda e: ratios.ratio_plate_plate_lr(e, cfg=cfg),
        "slab-slab": lambda e: ratios.ratio_slab_slab_lr(
            e, args.e_rel, cfg=cfg),
    }
    eps_star, value = ratios.find_extremum(curves[kind], (lo, hi))
    rows = [_row(kind, eps_star, args.e_rel, None, "find-max",
                 ratios.REFERENCE_L, None, value, None, True)]
    emit(rows, args.format, args.out)
    return 0


def _cmd_validate(args: argparse.Namespace) -> int:
    if args.out is not None:
        with open(args.out, "w", encoding="utf-8") as fh:
            ok = validation.run_all(stream=fh)
    else:
        ok = validation.run_all()
    return 0 if ok else 3


# ---------------------------------------------------------------------------
# entry point


def run(argv: Optional[Sequence[str]] = None) -> int:
    """Parse argv and execute; returns the process exit status."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    handlers = {
        "energy": _cmd_energy,
        "sweep-eps": _cmd_sweep_eps,
        "sweep-thickness": _cmd_sweep_thickness,
        "find-max": _cmd_find_max,
        "validate": _cmd_validate,
    }
    try:
        return handlers[args.command](args)
    except ValueError as exc:
        print(f"casimir-pws: error: {exc}", file=sys.stderr)
        return 1
    except EvaluationError as exc:
        print(f"casimir-pws: numerical failure: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"casimir-pws: I/O failure: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    raise SystemExit(run())


if __name__ == "__main__":
    main()
