"""Walk through exact Lagrange interpolation of five quaternionic points.

The quaternions are R(0,2) with i = e1, j = e2, k = e12. Three of the five
points below share the conjugacy class of the square roots of -1, so their
values must satisfy a collinearity condition; the interpolant then has
degree 3 = -1 + (1 + 1 + 2).

Run:  python demos/quaternion_interpolation.py
"""

from clifflag import (
    InterpolationProblem,
    Multivector,
    QUATERNIONS,
    brute_force_interpolate,
    first_collinearity_violation,
    group_by_class,
    interpolate_quaternion,
    lagrange_basis,
    verify_interpolant,
)

H = QUATERNIONS
one = Multivector.one(H)
zero = Multivector.zero(H)
i = Multivector.basis(H, 1)
j = Multivector.basis(H, 2)
k = Multivector.basis(H, 1, 2)

print("== the data ==")
problem = InterpolationProblem.from_pairs(
    H,
    [
        (zero, one),
        (one + i, -one),
        (i, one),
        (j, k),
        (k, -j),
    ],
)
for x, w in problem.pairs:
    print(f"  P({x}) = {w}")

print("\n== grouping by conjugacy class ==")
grouping = group_by_class(problem)
for g in grouping.groups:
    print(f"  {g.cls_id}: points {[str(p) for p in g.points]}")
print(f"  degree bound d = {grouping.degree_bound}")

print("\n== collinearity on the three-point class ==")
triple = grouping.groups[-1]
slope = (triple.points[1] - triple.points[0]).inverse() * (
    triple.values[1] - triple.values[0]
)
print(f"  common slope (x2 - x1)^-1 (w2 - w1) = {slope}")
print(f"  violation: {first_collinearity_violation(triple)}")

print("\n== the four Lagrange basis polynomials ==")
for node, basis_poly in lagrange_basis(problem):
    print(f"  node {node}:  {basis_poly}")

print("\n== the interpolant ==")
result = interpolate_quaternion(problem)
print(f"  P(X) = {result}")
print(f"  exact on all five pairs: {verify_interpolant(result, problem)}")

print("\n== independent oracle (exact linear system) ==")
oracle = brute_force_interpolate(problem)
print(f"  classification: {oracle.kind}")
print(f"  same polynomial: {oracle.polynomial == result}")

print("\n== what goes wrong without collinearity ==")
bad = InterpolationProblem.from_pairs(
    H, list(problem.pairs[:4]) + [(k, j)]  # flip the last value
)
try:
    interpolate_quaternion(bad)
except Exception as exc:
    print(f"  solver: {exc}")
print(f"  oracle at the same degree: {brute_force_interpolate(bad).kind}")
