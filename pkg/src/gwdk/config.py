"""Configuration loading for the command-line front end.

Configs are JSON (TOML is accepted and converted at the boundary).  All
physical quantities carry explicit unit suffixes in their key names
(``kappa_hz``, ``mass_kg``, ``distance_mpc``, ...) and are converted to
the internal SI/angular-frequency convention exactly once, at load time.
Detector and source presets are JSON files resolved against the
``GWDK_PRESET_DIR`` environment variable and then the packaged presets.
"""

from __future__ import annotations

import json
import os
from importlib import resources
from pathlib import Path

import numpy as np

from .bar import BarParams
from .constants import MPC_M
from .gw_field import Coherent, Fock, GwState, Vacuum, state_from_dict
from .ifo import IfoParams
from .source import SourceGeom
from .spectra import FrequencyGrid

TWO_PI = 2.0 * np.pi


class ConfigError(ValueError):
    """Raised for malformed or inconsistent run configurations."""


def load_config(path: str | Path) -> dict:
    """Parse a JSON or TOML config file into a plain dict."""
    p = Path(path)
    if not p.is_file():
        raise ConfigError(f"config file not found: {p}")
    text = p.read_text()
    if p.suffix.lower() == ".toml":
        try:
            import tomllib
        except ModuleNotFoundError:
            import tomli as tomllib
        return tomllib.loads(text)
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigError(f"invalid JSON in {p}: {exc}") from exc


def resolve_preset(name: str | Path) -> Path:
    """Locate a preset file: literal path, then GWDK_PRESET_DIR, then the
    presets shipped with the package."""
    p = Path(name)
    if p.is_file():
        return p
    env_dir = os.environ.get("GWDK_PRESET_DIR")
    if env_dir:
        cand = Path(env_dir) / p.name
        if cand.is_file():
            return cand
    pkg_dir = resources.files("gwdk") / "presets"
    cand = Path(str(pkg_dir)) / p.name
    if cand.is_file():
        return cand
    raise ConfigError(f"preset not found: {name}")


# mapping of key suffixes to (converted suffix, multiplier); _hz keys are
# angular frequencies quoted in Hz and converted to rad/s here, once
_UNIT_SUFFIXES = [
    ("_rad_per_s", "", 1.0),
    ("_m_per_s", "", 1.0),
    ("_hz", "", TWO_PI),
    ("_mpc", "", MPC_M),
    ("_m2", "", 1.0),
    ("_kg", "", 1.0),
    ("_m", "", 1.0),
    ("_w", "", 1.0),
    ("_s", "", 1.0),
]


def strip_units(d: dict) -> dict:
    """Convert unit-suffixed keys to bare names in internal units."""
    out: dict = {}
    for key, val in d.items():
        for suffix, repl, mult in _UNIT_SUFFIXES:
            if key.endswith(suffix):
                base = key[: -len(suffix)] + repl
                if base in out:
                    raise ConfigError(f"duplicate quantity {base!r} "
                                      f"given with conflicting units")
                out[base] = mult * float(val)
                break
        else:
            if key in out:
                raise ConfigError(f"duplicate quantity {key!r}")
            out[key] = val
    return out


def detector_from_config(spec: str | dict) -> IfoParams | BarParams:
    """Build detector parameters from a preset name or an inline dict."""
    if isinstance(spec, str):
        spec = load_config(resolve_preset(spec))
    if not isinstance(spec, dict):
        raise ConfigError("detector must be a preset name or a dict")
    d = strip_units(spec)
    kind = d.pop("kind", None)
    try:
        if kind == "ifo":
            d["omega0"] = d.pop("laser_frequency", d.pop("omega0", None))
            if d["omega0"] is None:
                raise ConfigError("ifo detector needs a laser frequency")
            d.setdefault("omega_m", d.pop("suspension_f", None))
            if d["omega_m"] is None:
                raise ConfigError("ifo detector needs a suspension frequency")
            return IfoParams(**d)
        if kind == "bar":
            return BarParams(**d)
    except (TypeError, ValueError) as exc:
        raise ConfigError(f"bad {kind} detector parameters: {exc}") from exc
    raise ConfigError(f"unknown detector kind {kind!r}")


def source_from_config(spec: str | dict) -> SourceGeom:
    """Build the source geometry from a preset name or an inline dict."""
    if isinstance(spec, str):
        spec = load_config(resolve_preset(spec))
    if not isinstance(spec, dict):
        raise ConfigError("source must be a preset name or a dict")
    d = strip_units(spec)
    omega0 = d.get("f0", d.get("omega0"))
    if omega0 is None:
        raise ConfigError("source needs a carrier frequency "
                          "(f0_hz or omega0_rad_per_s)")
    try:
        return SourceGeom(
            distance=float(d["distance"]),
            antenna_factor=float(d.get("antenna_factor", 1.0)),
            omega0=float(omega0),
            h0=float(d.get("h0", 0.0)),
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise ConfigError(f"bad source parameters: {exc}") from exc


def grid_from_config(spec: dict) -> FrequencyGrid:
    """Build a frequency grid from a grid spec dict.

    Either a symmetric linspace (omega_max, n_half, optional omega_min)
    or a band around a carrier (center, half_width, n_half).
    """
    if not isinstance(spec, dict):
        raise ConfigError("grid must be a dict")
    d = strip_units(spec)
    try:
        n_half = int(d.get("n_half", 512))
        if "center" in d:
            return FrequencyGrid.band_around(float(d["center"]),
                                             float(d["half_width"]), n_half)
        return FrequencyGrid.symmetric_linspace(
            float(d["omega_max"]), n_half, float(d.get("omega_min", 0.0)))
    except (KeyError, TypeError, ValueError) as exc:
        raise ConfigError(f"bad grid spec: {exc}") from exc


def state_from_config(spec: dict) -> GwState:
    """Build a GW state from its JSON representation."""
    try:
        return state_from_dict(spec)
    except (KeyError, TypeError, ValueError) as exc:
        raise ConfigError(f"bad GW state: {exc}") from exc


def state_to_label(state: GwState) -> str:
    if isinstance(state, Vacuum):
        return "vacuum"
    if isinstance(state, Coherent):
        return "coherent"
    if isinstance(state, Fock):
        return f"fock(n={state.n})"
    return type(state).__name__
