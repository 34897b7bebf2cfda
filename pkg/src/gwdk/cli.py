"""Command-line front end.

Subcommands: ``spectrum`` (noise-budget CSV + metadata JSON),
``efficiency`` (counting efficiency for a detector/source pair),
``table1`` (mean-response table for all detection chains and states),
``clicks`` (stochastic click-stream CSV), ``flux`` (graviton flux
functionals of a GW state).  Every command is deterministic given the
config and seed; invalid configs produce a machine-readable error JSON
on stderr and a nonzero exit code.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import sys
from pathlib import Path

import numpy as np

from . import bar as bar_mod
from . import counting, ifo as ifo_mod
from .bar import BarParams
from .config import (ConfigError, detector_from_config, grid_from_config,
                     load_config, source_from_config, state_from_config,
                     state_to_label)
from .gw_field import (Coherent, Fock, Vacuum, graviton_flux_broadband,
                       graviton_flux_narrowband, graviton_flux_source,
                       strain_psd)
from .ifo import IfoParams
from .source import SourceGeom


def _fmt(x: float) -> str:
    return f"{x:.17g}"


def _write(path: Path, text: str):
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text)


def _json_dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def _params_echo(params) -> dict:
    d = dataclasses.asdict(params)
    d.pop("const", None)
    return {k: v for k, v in d.items() if v is not None}


def _detector(cfg: dict):
    if "detector" not in cfg:
        raise ConfigError("config needs a 'detector' entry")
    return detector_from_config(cfg["detector"])


def _source(cfg: dict) -> SourceGeom:
    if "source" not in cfg:
        raise ConfigError("config needs a 'source' entry")
    return source_from_config(cfg["source"])


def _state_and_grid(cfg: dict):
    grid = grid_from_config(cfg.get("grid", {"omega_max_rad_per_s": 1.0e4,
                                             "n_half": 512}))
    if "state" in cfg:
        state = state_from_config(cfg["state"])
    else:
        state = Vacuum()
    return state, grid


def _eta(det, geom: SourceGeom) -> tuple[float, str]:
    if isinstance(det, IfoParams):
        return ifo_mod.eta_ifo(det, geom), "eta_ifo"
    if isinstance(det, BarParams):
        return bar_mod.eta_bar(det, geom), "eta_bar"
    raise ConfigError(f"unsupported detector type {type(det).__name__}")


def _rate_product(det, geom: SourceGeom) -> float:
    if isinstance(det, IfoParams):
        return counting.rate_product_ifo(det.alpha_sq, det.omega0,
                                         det.kappa, geom.h0)
    return counting.rate_product_bar(det.g, det.mass, det.length,
                                     geom.omega0, det.kappa, det.omega_m,
                                     det.gamma_m, geom.h0)


def cmd_efficiency(cfg: dict, out: Path, fmt: str, seed: int) -> int:
    det = _detector(cfg)
    geom = _source(cfg)
    eta, formula_id = _eta(det, geom)
    payload = {
        "eta": eta,
        "formula_id": formula_id,
        "params_echo": {
            "detector": _params_echo(det),
            "source": _params_echo(geom),
        },
    }
    text = _json_dump(payload)
    _write(out / "efficiency.json", text)
    sys.stdout.write(text)
    return 0


def cmd_spectrum(cfg: dict, out: Path, fmt: str, seed: int) -> int:
    det = _detector(cfg)
    state, grid = _state_and_grid(cfg)
    s_hh = strain_psd(state, grid)
    if isinstance(det, IfoParams):
        budget = ifo_mod.ifo_output_spectra(det, s_hh)
        columns = {"s1_out": budget.s1_out, **budget.components(),
                   "s2_out": budget.s2_out}
        total_name = "s2_out"
        integrals = {k: float(np.trapezoid(v.values, grid.omega))
                     / (2.0 * np.pi) for k, v in columns.items()}
    else:
        omega0 = state.omega0 if not isinstance(state, Vacuum) \
            else _source(cfg).omega0
        resp = bar_mod.bar_position_spectrum(det, s_hh, omega0)
        columns = {**resp.components(), "s_zz": resp.s_zz}
        total_name = "s_zz"
        integrals = {k: float(np.trapezoid(v.values, grid.omega))
                     / (2.0 * np.pi) for k, v in columns.items()}

    names = list(columns)
    lines = ["omega_rad_per_s," + ",".join(names)]
    for i, om in enumerate(grid.omega):
        row = [_fmt(om)] + [_fmt(columns[n].values[i]) for n in names]
        lines.append(",".join(row))
    _write(out / "spectrum_budget.csv", "\n".join(lines) + "\n")

    meta = {
        "detector": _params_echo(det),
        "state": state_to_label(state),
        "total_column": total_name,
        "integrals": integrals,
        "seed": seed,
    }
    _write(out / "spectrum_meta.json", _json_dump(meta))
    return 0


_TABLE1_ROWS = [
    ("ifo homodyne", "coherent"),
    ("bar homodyne", "coherent"),
    ("ifo absorptive", "coherent"),
    ("bar absorptive", "coherent"),
    ("ifo homodyne", "fock"),
    ("bar homodyne", "fock"),
    ("ifo absorptive", "fock"),
    ("bar absorptive", "fock"),
]


def table1_rows(eta_ifo: float, eta_bar: float, abar: float,
                n: int) -> list[dict]:
    """Mean-response scalings for all eight detection-chain/state rows.

    Homodyne responds as sqrt(eta) abar for coherent states and is blind
    to Fock states; absorptive (counting) readout responds as eta abar^2
    and eta n.
    """
    etas = {"ifo": eta_ifo, "bar": eta_bar}
    rows = []
    for chain, kind in _TABLE1_ROWS:
        det, readout = chain.split()
        eta = etas[det]
        if kind == "coherent":
            value = np.sqrt(eta) * abar if readout == "homodyne" \
                else eta * abar**2
            state = f"coherent abar={abar:g}"
        else:
            value = 0.0 if readout == "homodyne" else eta * n
            state = f"fock n={n}"
        rows.append({"detection": chain, "state": state,
                     "mean_response": float(value)})
    return rows


def cmd_table1(cfg: dict, out: Path, fmt: str, seed: int) -> int:
    geom = _source(cfg)
    det_ifo = detector_from_config(cfg.get("detector_ifo", "aligo-like.json"))
    det_bar = detector_from_config(cfg.get("detector_bar", "niobe-like.json"))
    if not isinstance(det_ifo, IfoParams) or not isinstance(det_bar, BarParams):
        raise ConfigError("table1 needs one ifo and one bar detector")
    abar = float(cfg.get("abar", 1.0))
    n = int(cfg.get("n", 1))
    if abar < 0.0 or n < 0:
        raise ConfigError("abar must be >= 0 and n a non-negative integer")
    rows = table1_rows(ifo_mod.eta_ifo(det_ifo, geom),
                       bar_mod.eta_bar(det_bar, geom), abar, n)
    if fmt == "json":
        text = _json_dump(rows)
        _write(out / "table1.json", text)
    else:
        lines = ["detection,state,mean_response"]
        lines += [f"{r['detection']},{r['state']},{_fmt(r['mean_response'])}"
                  for r in rows]
        text = "\n".join(lines) + "\n"
        _write(out / "table1.csv", text)
    sys.stdout.write(text)
    return 0


def cmd_clicks(cfg: dict, out: Path, fmt: str, seed: int) -> int:
    det = _detector(cfg)
    geom = _source(cfg)
    duration = float(cfg.get("duration_s", 1.0))
    rate = _rate_product(det, geom) / 4.0
    stream = counting.sample_click_stream(rate, duration, seed)
    dark_rate = float(cfg.get("dark_rate_hz", 0.0))
    if dark_rate > 0.0:
        dark = counting.sample_click_stream(dark_rate, duration,
                                            (seed + 1) % 2**64)
        stream = counting.superpose_streams(stream, dark)
    _write(out / "clicks.csv", counting.click_stream_to_csv(stream))
    meta = {"rate_hz": rate, "dark_rate_hz": dark_rate,
            "duration_s": duration, "seed": seed,
            "n_clicks": len(stream)}
    _write(out / "clicks_meta.json", _json_dump(meta))
    return 0


def cmd_flux(cfg: dict, out: Path, fmt: str, seed: int) -> int:
    state, grid = _state_and_grid(cfg)
    s_hh = strain_psd(state, grid)
    payload: dict = {"state": state_to_label(state)}
    if isinstance(state, (Coherent, Fock)):
        payload["narrowband"] = graviton_flux_narrowband(
            s_hh, state.omega0, state.area)
        payload["broadband"] = graviton_flux_broadband(s_hh, state.area)
    else:
        payload["narrowband"] = 0.0
        payload["broadband"] = 0.0
    if "source" in cfg:
        geom = _source(cfg)
        payload["source_referenced"] = graviton_flux_source(
            s_hh, geom.omega0, geom.distance, geom.antenna_factor)
    text = _json_dump(payload)
    _write(out / "flux.json", text)
    sys.stdout.write(text)
    return 0


_COMMANDS = {
    "spectrum": cmd_spectrum,
    "efficiency": cmd_efficiency,
    "table1": cmd_table1,
    "clicks": cmd_clicks,
    "flux": cmd_flux,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gwdk",
        description="quantized-GW measurement chain simulator")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in _COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("--config", required=True, help="JSON or TOML config")
        p.add_argument("--out", default=".", help="output directory")
        p.add_argument("--seed", type=int, default=None,
                       help="unsigned 64-bit RNG seed (overrides config)")
        p.add_argument("--format", choices=("csv", "json"), default="csv")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = load_config(args.config)
        if not isinstance(cfg, dict):
            raise ConfigError("top-level config must be an object")
        seed = args.seed if args.seed is not None else int(cfg.get("seed", 0))
        if not 0 <= seed < 2**64:
            raise ConfigError("seed must be an unsigned 64-bit integer")
        return _COMMANDS[args.command](cfg, Path(args.out), args.format, seed)
    except (ConfigError, ValueError, OSError, KeyError) as exc:
        err = {"error": type(exc).__name__, "message": str(exc)}
        sys.stderr.write(json.dumps(err, sort_keys=True) + "\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
