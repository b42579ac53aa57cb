"""Synthetic single-lane traffic workload driving the PE array.

A column of vehicles starts at rest with fixed spacing; every step
feeds one velocity update per vehicle through ``dispatch_batch``, then
clamps each new velocity at the vehicle's desired speed and advances
positions by velocity * T.  Vehicles never interact: the point of the
workload is throughput and trace realism, not collision dynamics, so
gaps are recorded as they come (a fast follower behind a slow leader
will eventually close its gap through zero).

Fleet randomness comes from numpy's PCG64 generator, seeded from
``SimConfig.seed``; per vehicle, desired speed is drawn first, then
acceleration, both uniform over the configured ranges.  Same seed,
same fleet, bit for bit.
"""

from __future__ import annotations

import io
from dataclasses import dataclass, replace
from typing import Mapping, Sequence

import numpy as np

from . import fxp
from .fxp import Fx, OutOfRangeError, decode, encode
from .gipps import GippsOperands
from .pearray import BatchReport, PeArrayConfig, dispatch_batch

TRACE_HEADER = "step,vehicle_id,velocity,position_m,gap_to_leader_m"


class ConfigError(ValueError):
    """Rejected simulation configuration."""


@dataclass(frozen=True)
class SimConfig:
    step_t: Fx = encode(0.5)
    n_steps: int = 60
    n_vehicles: int = 100
    initial_spacing_m: float = 10.0
    seed: int = 42
    min_desired_speed: float = 10.0
    max_desired_speed: float = 35.0
    min_accel: float = 1.0
    max_accel: float = 3.0

    def __post_init__(self) -> None:
        if self.step_t.raw == 0:
            raise ConfigError("step_t must encode to a nonzero word")
        if self.n_steps < 1:
            raise ConfigError("n_steps must be >= 1")
        if self.n_vehicles < 1:
            raise ConfigError("n_vehicles must be >= 1")
        if self.initial_spacing_m < 0.0:
            raise ConfigError("initial_spacing_m must be >= 0")
        for lo, hi, what in (
            (self.min_desired_speed, self.max_desired_speed, "desired speed"),
            (self.min_accel, self.max_accel, "acceleration"),
        ):
            if lo > hi:
                raise ConfigError(f"{what} range is inverted: {lo} > {hi}")
            try:
                encode(lo), encode(hi)
            except OutOfRangeError as exc:
                raise ConfigError(f"{what} range not representable: {exc}") from None
        if encode(self.min_desired_speed).raw == 0:
            raise ConfigError("min_desired_speed quantizes to zero")


@dataclass(frozen=True)
class Vehicle:
    vehicle_id: int
    position_m: float
    velocity: Fx
    desired_speed: Fx
    max_accel: Fx


@dataclass(frozen=True)
class TraceRow:
    step: int
    vehicle_id: int
    velocity: float
    position_m: float
    gap_to_leader_m: float | None    # None for the lead vehicle

    def csv(self) -> str:
        gap = "" if self.gap_to_leader_m is None else f"{self.gap_to_leader_m:.6f}"
        return (
            f"{self.step},{self.vehicle_id},"
            f"{self.velocity:.6f},{self.position_m:.6f},{gap}"
        )


def init_fleet(cfg: SimConfig) -> list[Vehicle]:
    """Fleet at rest: index 0 is the leader at the largest position."""
    rng = np.random.Generator(np.random.PCG64(cfg.seed))
    fleet = []
    for i in range(cfg.n_vehicles):
        desired = encode(float(rng.uniform(cfg.min_desired_speed, cfg.max_desired_speed)))
        accel = encode(float(rng.uniform(cfg.min_accel, cfg.max_accel)))
        fleet.append(Vehicle(
            vehicle_id=i,
            position_m=(cfg.n_vehicles - 1 - i) * cfg.initial_spacing_m,
            velocity=fxp.ZERO,
            desired_speed=desired,
            max_accel=accel,
        ))
    return fleet


def step_sim(
    vehicles: Sequence[Vehicle],
    cfg: SimConfig,
    pe_cfg: PeArrayConfig = PeArrayConfig(),
) -> tuple[list[Vehicle], BatchReport]:
    """Advance every vehicle by one step of cfg.step_t seconds."""
    batch = [
        GippsOperands(v.max_accel, cfg.step_t, v.desired_speed, v.velocity)
        for v in vehicles
    ]
    results, report = dispatch_batch(batch, pe_cfg)
    dt = decode(cfg.step_t)
    advanced = []
    for veh, res in zip(vehicles, results):
        new_v = Fx(min(res.va.raw, veh.desired_speed.raw))   # clamp host-side
        advanced.append(replace(
            veh,
            velocity=new_v,
            position_m=veh.position_m + decode(new_v) * dt,
        ))
    return advanced, report


def run_sim(
    cfg: SimConfig,
    pe_cfg: PeArrayConfig = PeArrayConfig(),
) -> tuple[list[TraceRow], BatchReport]:
    """Run the whole workload; returns the trace and an aggregate report.

    Trace rows carry post-step state, step numbering from 1.  The
    aggregate report sums ops, cycles and modeled time over all steps.
    """
    vehicles = init_fleet(cfg)
    rows: list[TraceRow] = []
    ops = cycles = 0
    time_ns = 0.0
    per_op = 0
    for step in range(1, cfg.n_steps + 1):
        vehicles, report = step_sim(vehicles, cfg, pe_cfg)
        ops += report.ops
        cycles += report.cycles
        time_ns += report.modeled_time_ns
        per_op = max(per_op, report.per_op_cycles)
        for i, veh in enumerate(vehicles):
            gap = None if i == 0 else vehicles[i - 1].position_m - veh.position_m
            rows.append(TraceRow(step, veh.vehicle_id, decode(veh.velocity),
                                 veh.position_m, gap))
    return rows, BatchReport(ops, cycles, time_ns, per_op)


def format_trace(rows: Sequence[TraceRow]) -> str:
    buf = io.StringIO()
    buf.write(TRACE_HEADER + "\n")
    for row in rows:
        buf.write(row.csv() + "\n")
    return buf.getvalue()


def write_trace_csv(rows: Sequence[TraceRow], path: str) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(format_trace(rows))


# configuration files are plain "key = value" lines; '#' starts a comment
_FLOAT_KEYS = (
    "step_t", "initial_spacing_m",
    "min_desired_speed", "max_desired_speed", "min_accel", "max_accel",
)
_INT_KEYS = ("n_steps", "n_vehicles", "seed")


def parse_config_text(text: str) -> dict[str, float | int]:
    values: dict[str, float | int] = {}
    for lineno, raw_line in enumerate(text.splitlines(), start=1):
        line = raw_line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"line {lineno}: expected 'key = value'")
        key, _, val = line.partition("=")
        key, val = key.strip(), val.strip()
        if key not in _INT_KEYS and key not in _FLOAT_KEYS:
            raise ConfigError(f"line {lineno}: unknown key {key!r}")
        try:
            values[key] = int(val) if key in _INT_KEYS else float(val)
        except ValueError:
            raise ConfigError(f"line {lineno}: bad value {val!r} for {key!r}") from None
    return values


def load_sim_config(
    path: str | None = None,
    overrides: Mapping[str, float | int | None] | None = None,
) -> SimConfig:
    """Build a SimConfig from defaults, an optional file, and overrides.

    Precedence, lowest to highest: built-in defaults, file values,
    overrides (``None`` override entries are ignored, so CLI flags can
    be passed through directly).
    """
    values: dict[str, float | int] = {}
    if path is not None:
        with open(path, "r", encoding="utf-8") as fh:
            values.update(parse_config_text(fh.read()))
    for key, val in (overrides or {}).items():
        if val is None:
            continue
        if key not in _FLOAT_KEYS and key not in _INT_KEYS:
            raise ConfigError(f"unknown config key {key!r}")
        values[key] = val
    kwargs: dict = dict(values)
    if "step_t" in kwargs:
        try:
            kwargs["step_t"] = encode(float(kwargs["step_t"]))
        except OutOfRangeError as exc:
            raise ConfigError(f"step_t not representable: {exc}") from None
    return SimConfig(**kwargs)
