"""Walk through Lagrange interpolation of three points in R(0,3).

R(0,3) has zero divisors, so every conjugacy class may carry at most one
data point; the interpolant of m points has degree at most m - 1. Each
basis polynomial is built by repeatedly appending roots: starting from the
constant 1, a root y is added by multiplying with (X - T(y)^-1 y T(y)),
which keeps all previously installed roots.

Run:  python demos/r03_interpolation.py
"""

from clifflag import (
    InterpolationProblem,
    Multivector,
    Polynomial,
    R03,
    append_root,
    brute_force_interpolate,
    interpolate_r03,
    lagrange_basis,
    verify_interpolant,
)

one = Multivector.one(R03)
e1 = Multivector.basis(R03, 1)
x2 = Multivector.parse("e2 + e23", R03)
x3 = Multivector.scalar(R03, -1)
w1, w2, w3 = one, Multivector.parse("2 e23", R03), e1

print("== the data ==")
problem = InterpolationProblem.from_pairs(R03, [(e1, w1), (x2, w2), (x3, w3)])
for x, w in problem.pairs:
    print(f"  P({x}) = {w}   [class {x.conjugacy_class()}]")

print("\n== building the third vanishing polynomial, root by root ==")
step1 = append_root(Polynomial.one(R03), e1)
print(f"  after root {e1}:   {step1}")
step2 = append_root(step1, x2)
print(f"  after root {x2}:")
print(f"    {step2}")
print(f"  check: vanishes at both ->  {step2(e1)} , {step2(x2)}")

print("\n== normalising at the remaining node ==")
l3 = step2 * step2(x3).inverse()
print(f"  L3 = {l3}")
print(f"  L3({x3}) = {l3(x3)}")

print("\n== the full basis ==")
for node, basis_poly in lagrange_basis(problem):
    print(f"  node {node}:")
    print(f"    {basis_poly}")

print("\n== the interpolant ==")
result = interpolate_r03(problem)
print(f"  P(X) = {result}")
print(f"  exact on all pairs: {verify_interpolant(result, problem)}")
oracle = brute_force_interpolate(problem)
print(f"  oracle: {oracle.kind}, same polynomial: {oracle.polynomial == result}")

print("\n== repeated classes are rejected ==")
from clifflag import group_by_class

try:
    group_by_class(
        InterpolationProblem.from_pairs(
            R03, [(e1, w1), (Multivector.parse("e23", R03), w2)]
        )
    )
except Exception as exc:
    print(f"  {exc}")
