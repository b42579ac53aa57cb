"""Cycle model for an array of identical processing elements.

Each PE runs one velocity update at a time (no pipelining); a batch is
assigned round-robin, so a batch of N in-domain updates on P PEs costs
ceil(N / P) * 4 cycles.  PE count and clock only change the timing
model, never the arithmetic: results are computed in batch order and
are bit-identical whatever the host does for parallelism.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .gipps import GippsOperands, GippsResult, InvalidOperandsError, gipps_step

DEFAULT_CLOCK_HZ = 250_000_000


@dataclass(frozen=True)
class PeArrayConfig:
    num_pes: int = 1
    clock_hz: int = DEFAULT_CLOCK_HZ
    # fixed per-batch cost, off by default; kept for sensitivity studies
    overhead_cycles: int = 0

    def __post_init__(self) -> None:
        if self.num_pes < 1:
            raise ValueError("num_pes must be >= 1")
        if self.clock_hz <= 0:
            raise ValueError("clock_hz must be positive")
        if self.overhead_cycles < 0:
            raise ValueError("overhead_cycles must be >= 0")


@dataclass(frozen=True)
class BatchReport:
    """Timing summary for one dispatched batch."""

    ops: int
    cycles: int
    modeled_time_ns: float
    per_op_cycles: int

    def lines(self) -> list[str]:
        return [
            f"ops: {self.ops}",
            f"cycles: {self.cycles}",
            f"modeled_time_ns: {self.modeled_time_ns:.3f}",
            f"per_op_cycles: {self.per_op_cycles}",
        ]


def dispatch_batch(
    batch: Iterable[GippsOperands] | Sequence[GippsOperands],
    cfg: PeArrayConfig = PeArrayConfig(),
) -> tuple[list[GippsResult], BatchReport]:
    """Run a batch and model its latency on the PE array.

    Raises InvalidOperandsError naming the first offending batch index;
    nothing is computed in that case.
    """
    ops_list = list(batch)
    for i, ops in enumerate(ops_list):
        try:
            ops.validate()
        except InvalidOperandsError as exc:
            raise InvalidOperandsError(f"operand {i}: {exc}") from None

    results = [gipps_step(ops) for ops in ops_list]

    if results:
        busy = [0] * cfg.num_pes
        for i, res in enumerate(results):
            busy[i % cfg.num_pes] += res.cycles
        cycles = max(busy) + cfg.overhead_cycles
        per_op = max(res.cycles for res in results)
    else:
        cycles = 0
        per_op = 0
    time_ns = cycles * 1e9 / cfg.clock_hz
    return results, BatchReport(len(results), cycles, time_ns, per_op)
