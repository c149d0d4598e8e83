"""Zero divisors, the quadratic cone, and why signatures matter.

R(0,2) is a division algebra; R(0,3) splits as two copies of the
quaternions glued along the centre, and an element is invertible exactly
when both split components are nonzero (equivalently psi+ psi- != 0).
Algebras with p >= 2 or q >= 4 break the machinery in different ways,
shown at the end.

Run:  python demos/zero_divisors.py
"""

from fractions import Fraction

from clifflag import (
    Multivector,
    Polynomial,
    R03,
    Signature,
    from_quaternion_pair,
    same_class,
    to_quaternion_pair,
)

print("== a zero divisor in R(0,3) ==")
x = Multivector.parse("e1 - e23", R03)
print(f"  x = {x}")
print(f"  psi+(x) = {x.psi_plus()}, psi-(x) = {x.psi_minus()}")
print(f"  invertible: {x.is_invertible()}")
plus, minus = to_quaternion_pair(x)
print(f"  split components: ({plus}, {minus})   <- one side collapses to 0")

print("\n== the splitting is an algebra isomorphism ==")
a = Multivector.parse("1 + 2 e1 - e23 + 1/3 e123", R03)
b = Multivector.parse("e2 - 3 e13", R03)
ap, am = to_quaternion_pair(a)
bp, bm = to_quaternion_pair(b)
pp, pm = to_quaternion_pair(a * b)
print(f"  split(a*b) == split(a)*split(b) componentwise: {(pp, pm) == (ap * bp, am * bm)}")
print(f"  merge(split(a)) == a: {from_quaternion_pair(ap, am) == a}")

print("\n== distinct classes guarantee invertible differences in the cone ==")
e1 = Multivector.basis(R03, 1)
e2 = Multivector.basis(R03, 2)
e23 = Multivector.basis(R03, 2, 3)
print(f"  e1 and e23 share a class: {same_class(e1, e23)}")
print(f"  e1 - e23 invertible: {(e1 - e23).is_invertible()}   <- same class, no guarantee")
y = Multivector.scalar(R03, 2) + e2
print(f"  e1 and {y} share a class: {same_class(e1, y)}")
print(f"  difference invertible: {(e1 - y).is_invertible()}")

print("\n== q >= 4: conjugation can leave the quadratic cone ==")
s04 = Signature(0, 4)
e4 = Multivector.basis(s04, 4)
carrier = Multivector.scalar(s04, 2) + Multivector.basis(s04, 1, 2, 3)
image = carrier.inverse() * e4 * carrier
print(f"  (2 + e123)^-1 e4 (2 + e123) = {image}")
print(f"  e4 in cone: {e4.in_quadratic_cone()}; its conjugate in cone: {image.in_quadratic_cone()}")

print("\n== p >= 2: one degree-one polynomial, two root classes ==")
s20 = Signature(2, 0)
e1_20 = Multivector.basis(s20, 1)
e2_20 = Multivector.basis(s20, 2)
e12_20 = Multivector.basis(s20, 1, 2)
p = Polynomial(s20, (e2_20 - Multivector.one(s20), e1_20 - e12_20))
r1, r2 = e12_20, e1_20 / 3 + e12_20 * Fraction(2, 3)
print(f"  P(X) = X*({p.coeffs[1]}) + ({p.coeffs[0]})")
for r in (r1, r2):
    print(f"  P({r}) = {p(r)}, class {r.conjugacy_class()}")
print(f"  distinct classes: {r1.conjugacy_class() != r2.conjugacy_class()}")
print(f"  difference invertible: {(r1 - r2).is_invertible()}   <- the broken guarantee")
