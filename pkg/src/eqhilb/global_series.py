"""Global equivariant series assembled from strata of the quotient.

Each stratum carries the class [Y] of a piece of X/G with constant isotropy
data, the local series at one of its points, and the orbit index |G|/|H|.
The global series is

    prod_strata (local(T^scale))^[Y]

so disjoint strata multiply and strata with equal local data add classes.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

from .local import GroupAction, closed_form_theorem2, origin_local_series, smooth_point_series
from .motivic import L, MotivicClass
from .series import MotivicSeries, NonUnitConstantTerm, series_pow, series_substitute_power

__all__ = [
    "Stratum",
    "StratificationSpec",
    "ConfigError",
    "assemble",
    "corollary_surface",
    "example_cp2_z3",
    "CP2_Z3_FREE_CLASS",
    "load_config",
    "parse_config",
    "bundled_configs",
]

# class of (CP^2 minus the three fixed points)/Z_3: torus orbits give
# (L-1)^2 + 3(L-1) + 3 for the whole quotient, minus the 3 fixed points
CP2_Z3_FREE_CLASS = L * L + L - 2


@dataclass(frozen=True)
class Stratum:
    cls: MotivicClass
    local: MotivicSeries
    scale: int = 1

    def __post_init__(self):
        if self.scale < 1:
            raise ValueError("scale must be >= 1")


@dataclass
class StratificationSpec:
    strata: list = field(default_factory=list)
    order: int = 0


def assemble(spec: StratificationSpec) -> MotivicSeries:
    result = MotivicSeries.one(spec.order)
    for st in spec.strata:
        local = st.local.truncate(spec.order)
        if local.order < spec.order:
            raise ValueError(f"local series of order {local.order} is shorter than {spec.order}")
        if not local.has_unit_constant():
            raise NonUnitConstantTerm(f"stratum {st.cls}: local constant term is {local[0]}")
        if not st.cls:
            continue
        result = result * series_pow(series_substitute_power(local, st.scale), st.cls)
    return result


def corollary_surface(M: int, d: int, free_cls, variant: int, order: int) -> MotivicSeries:
    """Z_M on a smooth surface with d fixed points, all of type A_{M-1}."""
    if d < 0:
        raise ValueError("number of fixed points must be nonnegative")
    fixed = closed_form_theorem2(M, variant, "origin", order)
    return assemble(
        StratificationSpec(
            [Stratum(MotivicClass({0: d}), fixed), Stratum(_as_class(free_cls), smooth_point_series(M, order))],
            order,
        )
    )


def example_cp2_z3(order: int) -> MotivicSeries:
    """Variant-2 series of CP^2 with (x0 : x1 : x2) -> (x0 : s x1 : s^2 x2)."""
    if order < 3:
        raise ValueError("order must be at least 3")
    return corollary_surface(3, 3, CP2_Z3_FREE_CLASS, 2, order)


def _as_class(x) -> MotivicClass:
    if isinstance(x, MotivicClass):
        return x
    return MotivicClass({0: int(x)})


# -- config files -------------------------------------------------------------


class ConfigError(ValueError):
    """Malformed stratification config; message names the line or field."""


def _int(value, where: str, minimum: int | None = None) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ConfigError(f"{where}: expected an integer, got {json.dumps(value)}")
    if minimum is not None and value < minimum:
        raise ConfigError(f"{where}: must be >= {minimum}, got {value}")
    return value


def _int_list(value, where: str) -> list:
    if not isinstance(value, list):
        raise ConfigError(f"{where}: expected an array of integers")
    return [_int(v, f"{where}[{n}]") for n, v in enumerate(value)]


def _local(spec, where: str, order: int) -> MotivicSeries:
    if not isinstance(spec, dict):
        raise ConfigError(f"{where}: expected an object")
    if "series" in spec:
        rows = spec["series"]
        if not isinstance(rows, list) or not rows:
            raise ConfigError(f"{where}.series: expected a nonempty array of coefficient arrays")
        coeffs = [MotivicClass.from_list(_int_list(row, f"{where}.series[{k}]")) for k, row in enumerate(rows)]
        if len(coeffs) < order + 1:
            raise ConfigError(f"{where}.series: has {len(coeffs)} coefficients, order {order} needs {order + 1}")
        return MotivicSeries(coeffs, order)
    kind = spec.get("builtin")
    if kind == "origin":
        M = _int(spec.get("M"), f"{where}.M", 1)
        N = _int(spec.get("N"), f"{where}.N")
        variant = _int(spec.get("variant", 1), f"{where}.variant")
        if variant not in (1, 2):
            raise ConfigError(f"{where}.variant: must be 1 or 2, got {variant}")
        return origin_local_series(GroupAction(M, N, variant), order)
    if kind == "smooth-point-surface":
        M = _int(spec.get("M", 1), f"{where}.M", 1)
        return smooth_point_series(M, order)
    raise ConfigError(f"{where}: need 'series' or builtin 'origin' / 'smooth-point-surface', got {json.dumps(spec)}")


def parse_config(text: str, order: int | None = None) -> StratificationSpec:
    """Parse a JSON stratification config; ``order`` overrides the file's."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigError(f"line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    if not isinstance(doc, dict):
        raise ConfigError("top level: expected an object with 'order' and 'strata'")
    if order is None:
        if "order" not in doc:
            raise ConfigError("order: missing")
        order = _int(doc["order"], "order", 0)
    strata = doc.get("strata")
    if not isinstance(strata, list) or not strata:
        raise ConfigError("strata: expected a nonempty array")
    out = []
    for n, st in enumerate(strata):
        where = f"strata[{n}]"
        if not isinstance(st, dict):
            raise ConfigError(f"{where}: expected an object")
        for key in ("class", "local"):
            if key not in st:
                raise ConfigError(f"{where}.{key}: missing")
        cls = MotivicClass.from_list(_int_list(st["class"], f"{where}.class"))
        scale = _int(st.get("scale", 1), f"{where}.scale", 1)
        out.append(Stratum(cls, _local(st["local"], f"{where}.local", order), scale))
    return StratificationSpec(out, order)


def bundled_configs() -> dict:
    """Names of the configs shipped with the package, mapped to their text."""
    root = resources.files("eqhilb") / "configs"
    return {p.name[: -len(".json")]: p.read_text(encoding="utf-8") for p in root.iterdir() if p.name.endswith(".json")}


def load_config(path_or_name: str, order: int | None = None) -> StratificationSpec:
    """Load a config file, or a bundled config by name (e.g. ``cp2-z3``)."""
    path = Path(path_or_name)
    if path.is_file():
        try:
            text = path.read_text(encoding="utf-8")
        except (OSError, UnicodeDecodeError) as exc:
            raise ConfigError(f"{path}: {exc}") from None
        return parse_config(text, order)
    bundled = bundled_configs()
    if path_or_name in bundled:
        return parse_config(bundled[path_or_name], order)
    raise ConfigError(f"{path_or_name}: no such file or bundled config")
