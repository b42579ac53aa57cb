"""A seeded single-lane workload driving the accelerator model.

Thirty vehicles start at rest, 10 m apart, each with its own desired
speed and acceleration drawn from a seeded generator.  Every step
dispatches one update per vehicle through the PE array and integrates
positions.  The same seed always reproduces the same trace, byte for
byte, whatever the PE count.
"""

from gippsim import PeArrayConfig, SimConfig, init_fleet, run_sim
from gippsim.sim import format_trace

cfg = SimConfig(n_vehicles=30, n_steps=40, seed=7)
fleet = init_fleet(cfg)
print("fleet head (leader first):")
for veh in fleet[:3]:
    print(f"  vehicle {veh.vehicle_id}: start {veh.position_m:6.1f} m, "
          f"wants {veh.desired_speed.value:5.2f} m/s, "
          f"accel {veh.max_accel.value:4.2f} m/s^2")
print()

rows, report = run_sim(cfg, PeArrayConfig(num_pes=6))
print(f"ran {cfg.n_steps} steps of {cfg.step_t.value} s:")
for line in report.lines():
    print(" ", line)
print()

print("trace head:")
for line in format_trace(rows).splitlines()[:5]:
    print(" ", line)
print()

last = [r for r in rows if r.step == cfg.n_steps]
settled = sum(1 for r in last if r.velocity == fleet[r.vehicle_id].desired_speed.value)
print(f"vehicles at their desired speed after {cfg.n_steps} steps: "
      f"{settled}/{cfg.n_vehicles}")

again, _ = run_sim(cfg, PeArrayConfig(num_pes=1))
print("re-run with P=1 is byte-identical:",
      format_trace(again) == format_trace(rows))
