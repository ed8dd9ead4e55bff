"""Run configuration: defaults, file loading, flag overrides, validation.

A config is a plain JSON document; command-line flags override file values,
which override the defaults below.  Validation failures raise ConfigError
(exit code 2 at the CLI), never DomainError: a bad config should be caught
before any mathematics runs.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field, replace

from .errors import ConfigError
from .irreps import DIM_CAP

_FORMATS = ("json", "csv", "both")

# dense cross-check stays tiny by design: (radial, angular, degree, levels)
_DENSE_DIM_CAP = 16
_DENSE_LEVEL_CAP = 6


@dataclass(frozen=True)
class RunConfig:
    q: float = 2.0
    q_grid: tuple = (0.5, 0.9, 1.1, 2.0)
    spin_max: float = 12.5
    bergman_degree: int = 64
    radial_order: int = 8
    angular_order: int = 12
    fd_step: float = 1e-3
    dense_check_dims: tuple = (1, 2, 3, 4)
    test_functions: tuple = ("constant:1", "radial_sq", "gaussian")
    tolerances: dict = field(default_factory=dict)
    seed: int = 1234
    out_dir: str = "reports"
    format: str = "both"
    plots: bool = True

    def validate(self) -> "RunConfig":
        def positive_real(name, v):
            if not isinstance(v, (int, float)) or isinstance(v, bool) or not v > 0:
                raise ConfigError(f"{name} must be a positive real, got {v!r}")

        def positive_int(name, v, low=1):
            if not isinstance(v, int) or isinstance(v, bool) or v < low:
                raise ConfigError(f"{name} must be an integer >= {low}, got {v!r}")

        positive_real("q", self.q)
        if not self.q_grid:
            raise ConfigError("q_grid must not be empty")
        for qv in self.q_grid:
            positive_real("q_grid entry", qv)
        two_s = 2.0 * self.spin_max
        if self.spin_max < 0 or two_s != round(two_s):
            raise ConfigError(f"spin_max must be a non-negative half-integer, got {self.spin_max}")
        if two_s + 1 > DIM_CAP:
            raise ConfigError(
                f"spin_max {self.spin_max} needs dimension {int(two_s) + 1}, cap is {DIM_CAP}")
        positive_int("bergman_degree", self.bergman_degree)
        positive_int("radial_order", self.radial_order)
        positive_int("angular_order", self.angular_order)
        positive_real("fd_step", self.fd_step)
        if self.fd_step >= 1.0:
            raise ConfigError(f"fd_step must be below 1, got {self.fd_step}")
        d = self.dense_check_dims
        if len(d) != 4:
            raise ConfigError("dense_check_dims must be (radial, angular, degree, levels)")
        dr, da, dd, dl = d
        for name, v in zip(("dense radial", "dense angular", "dense levels"), (dr, da, dl)):
            positive_int(name, v)
        positive_int("dense degree", dd, low=0)
        if dr * da * (dd + 1) > _DENSE_DIM_CAP:
            raise ConfigError(
                f"dense one-particle dimension {dr * da * (dd + 1)} exceeds cap {_DENSE_DIM_CAP}")
        if dl > _DENSE_LEVEL_CAP:
            raise ConfigError(f"dense level cutoff {dl} exceeds cap {_DENSE_LEVEL_CAP}")
        if not self.test_functions:
            raise ConfigError("test_functions must not be empty")
        from .current import test_function_preset
        from .errors import DomainError
        for spec in self.test_functions:
            try:
                test_function_preset(spec)
            except (DomainError, ValueError) as exc:
                raise ConfigError(f"bad test function {spec!r}: {exc}") from exc
        if not isinstance(self.tolerances, dict):
            raise ConfigError("tolerances must be a mapping of check name to bound")
        for k, v in self.tolerances.items():
            if not isinstance(v, (int, float)) or isinstance(v, bool) or v < 0:
                raise ConfigError(f"tolerance override {k!r} must be a nonnegative real")
        if not isinstance(self.seed, int) or isinstance(self.seed, bool) or self.seed < 0:
            raise ConfigError(f"seed must be a nonnegative integer, got {self.seed!r}")
        if not self.out_dir:
            raise ConfigError("out_dir must not be empty")
        if self.format not in _FORMATS:
            raise ConfigError(f"format must be one of {_FORMATS}, got {self.format!r}")
        if not isinstance(self.plots, bool):
            raise ConfigError("plots must be a boolean")
        return self

    def tolerance(self, name: str, default: float) -> float:
        return float(self.tolerances.get(name, default))

    def to_dict(self) -> dict:
        d = asdict(self)
        d["q_grid"] = list(self.q_grid)
        d["dense_check_dims"] = list(self.dense_check_dims)
        d["test_functions"] = list(self.test_functions)
        return d

    @classmethod
    def from_dict(cls, data: dict) -> "RunConfig":
        known = set(cls.__dataclass_fields__)
        unknown = set(data) - known
        if unknown:
            raise ConfigError(f"unknown config keys: {sorted(unknown)}")
        coerced = dict(data)
        for key in ("q_grid", "dense_check_dims", "test_functions"):
            if key in coerced:
                if not isinstance(coerced[key], (list, tuple)):
                    raise ConfigError(f"{key} must be a list")
                coerced[key] = tuple(coerced[key])
        for key in ("q", "spin_max", "fd_step"):
            if key in coerced and isinstance(coerced[key], int) and not isinstance(coerced[key], bool):
                coerced[key] = float(coerced[key])
        return cls(**coerced)

    @classmethod
    def from_file(cls, path) -> "RunConfig":
        try:
            with open(path, encoding="utf-8") as fh:
                data = json.load(fh)
        except OSError as exc:
            raise ConfigError(f"cannot read config file {path}: {exc}") from exc
        except json.JSONDecodeError as exc:
            raise ConfigError(f"config file {path} is not valid JSON: {exc}") from exc
        if not isinstance(data, dict):
            raise ConfigError("config file must contain a JSON object")
        return cls.from_dict(data)

    def with_overrides(self, **overrides) -> "RunConfig":
        """Apply non-None overrides; a bare q collapses the q grid to that value."""
        updates = {k: v for k, v in overrides.items() if v is not None}
        if "q" in updates and "q_grid" not in updates:
            updates["q_grid"] = (updates["q"],)
        return replace(self, **updates)
