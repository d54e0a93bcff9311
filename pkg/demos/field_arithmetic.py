"""Tour of exact arithmetic in K = Q(i, sqrt(d)).

Every scalar is a 4-tuple of rationals over the basis {1, i, r, ir} with
r = sqrt(d).  Nothing here is floating point; equality is equality.
"""

from jspec import ALL_AUTOMORPHISMS, FieldContext, format_scalar, parse_scalar

K = FieldContext(2)


def show(label, x):
    print(f"  {label:<24} {format_scalar(x)}")


print("base scalars (d = 2):")
one = K.one
i = K.i
r = K.sqrt_d
show("1", one)
show("i", i)
show("r = sqrt(2)", r)
show("i*r", i * r)

print("\narithmetic closes over the basis:")
x = (one + i) * (one - i)
show("(1+i)(1-i)", x)
show("r^2", r * r)
show("(1+r)^-1", (one + r).inv())
show("(1+i+r)^2", (one + i + r) * (one + i + r))

print("\nround-trip through text:")
for text in ("1/2-1/3*i", "2*r", "1+i*r", "-1/2*r"):
    parsed = parse_scalar(text, K)
    print(f"  {text!r:<14} -> {format_scalar(parsed)}")

print("\nthe four automorphisms act on 1 + 2i + 3r:")
x = K.elem(1, 3, 2)
for f in ALL_AUTOMORPHISMS:
    show(f.value, f(x))

print("\nreal elements carry an exact sign (r - 1 > 0, 1 - r < 0):")
print(f"  sign(r - 1) = {(r - one).real_sign()}")
print(f"  sign(1 - r) = {(one - r).real_sign()}")
print(f"  sign(0)     = {K.zero.real_sign()}")
