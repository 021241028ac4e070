"""
Exact Clifford arithmetic on radial polynomials
===============================================

The computational substrate: multivectors over Cl(0, m) with exact scalar
coefficients, and polynomials whose terms carry an extra symbolic power
of r.  Everything prints exactly; no floats appear until the very end.
"""

from fractions import Fraction

from dunkldirac import Multivector, RadialExpr
from dunkldirac.poly import x_vector
from dunkldirac.scalars import ExactScalar

# Basis vectors square to -1 and anticommute.
e1 = Multivector.basis_vector(3, 1)
e2 = Multivector.basis_vector(3, 2)
print("e1 e2        =", e1 * e2)
print("e2 e1        =", e2 * e1)
print("e1 e1        =", e1 * e1)

# The bar involution reverses products and flips signs by grade.
w = (e1 + 2 * e2) * Multivector.basis_vector(3, 3)
print("w            =", w)
print("bar(w)       =", w.bar())
print("bar(w) w     =", w.bar() * w)

# Scalars can hold rational powers exactly: (2)^(1/2) stays symbolic,
# and eighth powers of it collapse back to integers.
s = ExactScalar.power(2, Fraction(1, 2))
print("sqrt(2)^2    =", s * s)
print("sqrt(2)^3    =", s * s * s)

# RadialExpr: Clifford-valued polynomials with radial shifts r^q.
# The vector variable x = sum x_i e_i squares to -r^2.
x = x_vector(2)
print("x * x        =", (x * x).to_text())

# Radial calculus knows that r depends on the coordinates: the first
# derivative below sees both the polynomial and its radial factor.
f = RadialExpr.monomial(2, (1, 0), r_exp=Fraction(-2))   # x1 / r^2
print("d1 (x1/r^2)  =", f.deriv(1).to_text())
print("Euler        =", f.euler().to_text(), " (degree -1, as it should)")

# Homogeneous pieces split cleanly and remember their degrees.
g = x * x + RadialExpr.monomial(2, (3, 0)) + RadialExpr.monomial(2, (1, 2))
for deg, part in sorted(g.homogeneous_components().items()):
    print(f"degree {deg}:", part.to_text())
