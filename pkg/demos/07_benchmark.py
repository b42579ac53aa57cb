"""Host floating point vs the modeled accelerator.

Times this machine's floating-point implementation of the update over
a reproducible operand batch, averaged over 100+ iterations, and puts
it next to the cycle model's exact 16 ns/op at 250 MHz.  Host numbers
move with the machine; the modeled figure does not.  For scale: a
2010-era Core i3-350M software baseline averaged 144 ns per update,
9x the modeled figure.
"""

from gippsim import PeArrayConfig
from gippsim.cli import run_bench

report = run_bench(n_ops=500, iterations=200, pe_cfg=PeArrayConfig())

print("benchmark report:")
for line in report.lines():
    print(" ", line)
print()
print(f"this host needs {report.modeled_ratio:.1f}x the modeled per-op time")
print()

print("the modeled figure tracks the clock, nothing else:")
for mhz in (125, 250, 500):
    rep = run_bench(n_ops=50, iterations=100,
                    pe_cfg=PeArrayConfig(clock_hz=mhz * 1_000_000))
    print(f"  {mhz:4d} MHz -> {rep.modeled_ns_per_op:5.1f} ns/op")
