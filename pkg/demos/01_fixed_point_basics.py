"""Tour of the Q8.6 number format and its arithmetic rules.

Every quantity the accelerator touches is an unsigned 14-bit word
worth raw/64.  Encoding rounds to nearest (ties up), multiplication
rounds the same way after a full-width product, division truncates,
and add/sub saturate with a visible flag.  Run this to see each rule
on concrete words.
"""

from gippsim import (
    ONE,
    RAW_MAX,
    VALUE_MAX,
    Fx,
    OutOfRangeError,
    add,
    decode,
    div,
    encode,
    mul,
    mul_wide,
    sub,
)

print("format: raw/64, raw in [0, %d], so values [0, %s]" % (RAW_MAX, VALUE_MAX))
print("resolution: one raw step =", decode(Fx(1)))
print()

print("encoding rounds to nearest, ties up:")
for x in (0.025, 0.0078125, 2.5, 19.99):
    fx = encode(x)
    print(f"  encode({x}) -> raw {fx.raw:5d} = {decode(fx)} (error {decode(fx) - x:+.6f})")
print()

print("out-of-range inputs raise instead of clipping:")
for x in (-0.5, 300.0):
    try:
        encode(x)
    except OutOfRangeError as exc:
        print(f"  encode({x}): {exc}")
print()

print("multiply keeps the full 28-bit product, then rounds once:")
a, b = encode(2.5), encode(0.51)
wide = mul_wide(a, b)
rounded, _ = mul(a, b)
print(f"  {decode(a)} * {decode(b)}: wide raw {wide.raw} = {wide.value}")
print(f"  rounded back to Q8.6: raw {rounded.raw} = {decode(rounded)}")
print()

print("divide truncates toward zero:")
q, _ = div(ONE, encode(3.0))
print(f"  1/3 -> raw {q.raw} = {decode(q)} (floor of 64/3 raw steps)")
print()

print("add/sub saturate and report it:")
s, sat = add(Fx(RAW_MAX), ONE)
print(f"  max + 1.0 -> raw {s.raw}, saturated={sat}")
s, sat = sub(Fx(10), Fx(200))
print(f"  0.15625 - 3.125 -> raw {s.raw}, saturated={sat}")
