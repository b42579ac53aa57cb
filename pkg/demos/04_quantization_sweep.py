"""Where the fixed-point datapath lands relative to real arithmetic.

Sweeps every representable velocity under a few desired speeds,
comparing three ways of computing the update: the datapath, the
independent integer oracle (must agree bit for bit), and the ideal
real-arithmetic formula (quantization error shows up here).  The big
errors cluster at small radicands, where the truncated divide feeds
the steepest part of the square root and the a*T gain scales it up.
"""

from gippsim import decode, gipps_reference, gipps_step, grid_cases, run_sweep

summary = run_sweep(grid_cases(vstars=(5.0, 20.0, 70.0)))

print("sweep of a compact grid (3 desired speeds x 4 accels x 3 times):")
for line in summary.lines():
    print(" ", line)
print()
assert summary.passed, "datapath diverged from the oracle"

print("error growth along one slice (a=5, T=1, V*=70):")
cases = list(grid_cases(vstars=(70.0,), accels=(5.0,), times=(1.0,)))
worst = max(
    cases,
    key=lambda ops: abs(
        decode(gipps_step(ops).va)
        - gipps_reference(decode(ops.a), decode(ops.T),
                          decode(ops.vstar), decode(ops.v))
    ),
)
res = gipps_step(worst)
ideal = gipps_reference(decode(worst.a), decode(worst.T),
                        decode(worst.vstar), decode(worst.v))
print(f"  worst at v = {decode(worst.v)} m/s:")
print(f"  fixed {decode(res.va):.6f} vs ideal {ideal:.9f} "
      f"(error {abs(decode(res.va) - ideal):.6f})")
print("  radicand stage raw:", res.trace.r.raw,
      "- one raw step of radicand error is sqrt-amplified, then gained 12.5x")
