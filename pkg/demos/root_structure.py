"""Root structure of right-coefficient polynomials over R(0,3).

On every conjugacy-class sphere a polynomial collapses to an affine map
x -> x a + b, so root finding inside a class is exact linear algebra.
Depending on (a, b) a class contributes nothing, one point, a whole
sphere, or (only in R(0,3)) an infinite proper sub-family. The census at
the end counts real roots r (with multiplicity), spherical classes s (by
the power of the class's characteristic polynomial), and the leftover
paravector roots k; always r + 2s + k <= degree.

Run:  python demos/root_structure.py
"""

from clifflag import (
    ConjugacyClassId,
    Multivector,
    Polynomial,
    R03,
    affine_restriction,
    append_root,
    characteristic_poly,
    factor_out_characteristic,
    paravector_root_census,
    roots_in_class,
)

S = ConjugacyClassId.sphere(0, 1)  # the square roots of -1
one = Multivector.one(R03)

print("== affine restriction to a class ==")
p = Polynomial.parse("X^3*(e1) + X^2*(1) + (1)", R03)
restriction = affine_restriction(p, S)
print(f"  P = {p}")
print(f"  on {S}: P(x) = x*({restriction.a}) + ({restriction.b})")
e1 = Multivector.basis(R03, 1)
print(f"  spot check at e1: P(e1) = {p(e1)}  vs  x a + b = {restriction(e1)}")

print("\n== no roots in this class ==")
rs = roots_in_class(p, S)
print(f"  the affine equation forces x = 0, which is not on the sphere")
print(f"  kind: {rs.kind}, points: {[str(x) for x in rs.points]}")

print("\n== one class, one root ==")
e13 = Multivector.basis(R03, 1, 3)
rs = roots_in_class(Polynomial.x_minus(e13), S)
print(f"  X - e13 on {S}: kind: {rs.kind}, points: {[str(x) for x in rs.points]}")

print("\n== a whole class of roots ==")
delta = characteristic_poly(S, R03)
print(f"  Delta = {delta}")
rs = roots_in_class(delta, S)
print(f"  kind: {rs.kind}")

print("\n== an infinite proper sub-family (zero-divisor slope) ==")
q = Polynomial.parse("X^1*(e1 + e23) + (1 - e123)", R03)
rs = roots_in_class(q, S)
print(f"  Q = {q}")
print(f"  kind: {rs.kind}, exhaustive: {rs.exhaustive}")
print(f"  sampled representatives ({len(rs.points)}):")
for x in rs.points:
    mark = "  <- paravector" if x.is_paravector() else ""
    print(f"    {x}{mark}")
e2 = Multivector.basis(R03, 2)
print(f"  e2 lies in the same class but Q(e2) = {q(e2)} != 0")

print("\n== divisibility by characteristic polynomials ==")
product = delta * delta * Polynomial.x_minus(one)
s_power, cofactor = factor_out_characteristic(product, S)
print(f"  Delta^2 * (X - 1): power of Delta = {s_power}, cofactor = {cofactor}")

print("\n== the paravector root census ==")
y = one + Multivector.basis(R03, 3)
constructed = append_root(delta, y)
witnessed = [S, y.conjugacy_class(), ConjugacyClassId.real(1)]
r, s, k = paravector_root_census(constructed, witnessed)
print(f"  P = Delta * (X - y') with y = {y}")
print(f"  (r, s, k) = {(r, s, k)}; degree = {constructed.degree}")
print(f"  bound r + 2s + k <= degree: {r + 2 * s + k} <= {constructed.degree}")
