"""The accelerated instruction: one Q8.6 car-following velocity update.

The datapath evaluates

    va = v + 2.5 * a * T * (1 - v/V*) * sqrt(0.025 + v/V*)

with a fixed stage order: one divide, one subtract, one constant add,
the seeded square root, then a four-multiply chain and the final add.
``gipps_reference`` is the ideal real-arithmetic counterpart used for
accuracy sweeps.

Latency model: 1 cycle for divide/subtract/radicand add, the square
root's Newton passes (2 in the instruction's operating domain), and
1 cycle for the multiply chain plus final add, so cycles = 2 + passes
and every in-domain update costs 4 cycles.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import fxp
from .fxp import Fx, SqrtTrace

K1 = Fx(160)   # 2.5, exact in Q8.6
K2 = Fx(2)     # 0.025 quantized to the nearest word, 0.03125
ONE = fxp.ONE


class InvalidOperandsError(ValueError):
    """Operand set violates the instruction preconditions."""


@dataclass(frozen=True)
class GippsOperands:
    """One operand set: acceleration a, reaction time T, desired speed
    vstar (V*), current velocity v."""

    a: Fx
    T: Fx
    vstar: Fx
    v: Fx

    def validate(self) -> None:
        if self.vstar.raw == 0:
            raise InvalidOperandsError("desired speed must be positive")
        if self.T.raw == 0:
            raise InvalidOperandsError("reaction time must be positive")
        if self.v.raw > self.vstar.raw:
            raise InvalidOperandsError(
                f"velocity raw {self.v.raw} exceeds desired speed raw {self.vstar.raw}"
            )


@dataclass(frozen=True)
class PipelineTrace:
    """Raw view of every intermediate stage, for audits and the CLI."""

    q: Fx            # v / vstar
    f: Fx            # 1 - q
    r: Fx            # 0.03125 + q, the radicand
    s: Fx            # sqrt(r)
    p1: Fx           # 2.5 * a
    p2: Fx           # p1 * T
    p3: Fx           # p2 * f
    p4: Fx           # p3 * s
    sqrt_trace: SqrtTrace

    def stages(self) -> list[tuple[str, Fx]]:
        return [
            ("q", self.q), ("f", self.f), ("r", self.r), ("s", self.s),
            ("p1", self.p1), ("p2", self.p2), ("p3", self.p3), ("p4", self.p4),
        ]


@dataclass(frozen=True)
class GippsResult:
    va: Fx
    cycles: int
    trace: PipelineTrace


def gipps_step(ops: GippsOperands) -> GippsResult:
    """Run one velocity update through the fixed-point pipeline."""
    ops.validate()
    q, _ = fxp.div(ops.v, ops.vstar)       # q <= 1.0 since v <= vstar
    f, _ = fxp.sub(ONE, q)
    r, _ = fxp.add(K2, q)                  # radicand raw in 2..66
    s, strace = fxp.sqrt(r)
    p1, _ = fxp.mul(K1, ops.a)
    p2, _ = fxp.mul(p1, ops.T)
    p3, _ = fxp.mul(p2, f)
    p4, _ = fxp.mul(p3, s)
    va, _ = fxp.add(ops.v, p4)             # no clamp to vstar here
    cycles = 2 + strace.iterations
    return GippsResult(va, cycles, PipelineTrace(q, f, r, s, p1, p2, p3, p4, strace))


def gipps_reference(a: float, T: float, vstar: float, v: float) -> float:
    """Ideal acceleration-phase velocity update in real arithmetic."""
    if vstar <= 0.0:
        raise ValueError("desired speed must be positive")
    if T <= 0.0:
        raise ValueError("reaction time must be positive")
    if not 0.0 <= v <= vstar:
        raise ValueError("velocity must lie in [0, vstar]")
    ratio = v / vstar
    return v + 2.5 * a * T * (1.0 - ratio) * math.sqrt(0.025 + ratio)
