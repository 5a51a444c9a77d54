# Exact numbers of the form q0 + q1*sqrt(m1) + ...  -- nothing is ever rounded.
from fractions import Fraction

from liecurv.scalars import Scalar, invert, parse_scalar, to_float

s = Scalar.sqrt(Fraction(2, 3))     # sqrt(2/3) is stored as 1/3*sqrt(6)
print("sqrt(2/3) =", s)
print("squared   =", s * s)

a = Scalar(1, 6) * Scalar(1, 30)    # sqrt6 * sqrt30 = 6 sqrt5
print("sqrt6*sqrt30 =", a)

x = 1 + Scalar(1, 5)
print("1/(1+sqrt5) =", invert(x), " check:", x * invert(x))

# three radicals at once: the inverse is found by conjugating one prime at a time
y = Scalar(1, 2) + Scalar(1, 3) + Scalar(1, 5)
print("1/(sqrt2+sqrt3+sqrt5) =", invert(y))

# exact sign even when the float is close to zero
z = 99 - Scalar(70, 2)
print(z, "~", to_float(z), "sign", z.sign())

print(parse_scalar("-2/30*sqrt(5)"))   # grammar used in files and reports
