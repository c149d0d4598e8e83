"""Acceptance checklist: every shipped guarantee, exact tolerances, one
printed pass/fail line per check (run with ``pytest -s`` to see them).

All comparisons are literal equality; there are no tolerances to tune.
Checks 1 and 2 reproduce the two worked interpolation examples with all
their intermediate polynomials; check 2 additionally pins down a provable
value typo in the source display of the final coefficients (see the
assertions there: the displayed values correspond to the value 2 e13, not
the stated 2 e23; both variants are asserted bit-exactly).
"""

import functools
import random
import time
from fractions import Fraction

import pytest

from clifflag import (
    CollinearityViolated,
    ConjugacyClassId,
    InterpolationProblem,
    Multivector,
    Polynomial,
    QUATERNIONS,
    R03,
    Signature,
    append_root,
    brute_force_interpolate,
    characteristic_poly,
    eval_of_product,
    group_by_class,
    interpolate,
    interpolate_quaternion,
    interpolate_r03,
    lagrange_basis,
    paravector_root_census,
    roots_in_class,
    verify_interpolant,
)
from util import (
    rand_class_params,
    rand_cone_point_r03,
    rand_multivector,
    random_h_problem,
    random_h_problem_with_violation,
    random_r03_problem,
)

H = QUATERNIONS
ONE = Multivector.one(H)
ZERO = Multivector.zero(H)
I = Multivector.basis(H, 1)
J = Multivector.basis(H, 2)
K = Multivector.basis(H, 1, 2)


def quat(a=0, b=0, c=0, d=0):
    return Multivector(H, (Fraction(a), Fraction(b), Fraction(c), Fraction(d)))


def r03(*coords):
    return Multivector(R03, [Fraction(c) for c in coords])


def reported(label):
    def wrap(fn):
        @functools.wraps(fn)
        def run(*args, **kwargs):
            started = time.monotonic()
            try:
                result = fn(*args, **kwargs)
            except BaseException:
                print(f"FAIL  {label}")
                raise
            print(f"PASS  {label}  ({time.monotonic() - started:.2f}s)")
            return result

        return run

    return wrap


@reported("1. five-point quaternionic interpolation, all intermediates verbatim")
def test_check_1_five_point_quaternion_reproduction():
    started = time.monotonic()
    problem = InterpolationProblem.from_pairs(
        H, [(ZERO, ONE), (ONE + I, -ONE), (I, ONE), (J, K), (K, -J)]
    )
    result = interpolate_quaternion(problem)
    assert result == Polynomial(H, (ONE, ZERO, ONE, I))  # X^3 i + X^2 + 1

    # intermediates of the construction
    q = Polynomial.x_minus(ZERO) * Polynomial.x_minus(ONE + I)
    assert q == Polynomial(H, (ZERO, -(ONE + I), ONE))
    p31 = append_root(q, J)
    assert p31 == Polynomial(
        H, (ZERO, -quat(-2, 2, -3, 1) / 3, quat(-3, -1, -1, 2) / 3, ONE)
    )
    p32 = append_root(q, I)
    assert p32 == Polynomial(H, (ZERO, quat(-1, 1), -quat(1, 2), ONE))

    # the four basis polynomials
    basis = dict(lagrange_basis(problem))
    l1, l2 = basis[ZERO], basis[ONE + I]
    l3p, l3pp = basis[I], basis[J]
    half_im = quat(-1, 1) / 2  # (i - 1)/2
    assert l1 == Polynomial(H, (ONE, half_im, ONE, half_im))
    assert l2 == Polynomial(H, (ZERO, quat(-1, -3) / 10, ZERO, quat(-1, -3) / 10))
    assert l3p == Polynomial(
        H, (ZERO, quat(5, -5, 3, -1) / 10, quat(-1, 0, 0, 1) / 2, quat(5, 0, -2, -1) / 10)
    )
    assert l3pp == Polynomial(
        H, (ZERO, quat(1, 3, -3, 1) / 10, -quat(1, 0, 0, 1) / 2, quat(1, -2, 2, 1) / 10)
    )
    assert l1 * ONE + l2 * (-ONE) + l3p * ONE + l3pp * K == result
    assert verify_interpolant(result, problem)
    assert time.monotonic() - started < 1.0


@reported("2. three-point R(0,3) interpolation, displays verbatim, value typo pinned")
def test_check_2_three_point_r03_reproduction():
    started = time.monotonic()
    e1 = Multivector.basis(R03, 1)
    x2 = Multivector.basis(R03, 2) + Multivector.basis(R03, 2, 3)
    x3 = Multivector.scalar(R03, -1)
    w1, w2, w3 = Multivector.one(R03), Multivector.basis(R03, 2, 3) * 2, e1
    problem = InterpolationProblem.from_pairs(R03, [(e1, w1), (x2, w2), (x3, w3)])

    # the displayed intermediate vanishing polynomial (1/5 denominators)
    p3 = append_root(Polynomial.x_minus(e1), x2)
    assert p3 == Polynomial(
        R03,
        (
            r03(Fraction(6, 5), 0, 0, Fraction(3, 5), Fraction(2, 5), 0, 0, Fraction(1, 5)),
            r03(0, Fraction(1, 5), Fraction(-3, 5), 0, 0, Fraction(2, 5), Fraction(-1, 5), 0),
            Multivector.one(R03),
        ),
    )

    # the displayed basis polynomials (1/20, 1/15, 1/30 denominators)
    basis = dict(lagrange_basis(problem))
    assert basis[e1] == Polynomial(
        R03,
        (
            r03(8, -8, 6, -6, -4, -4, -2, -2) / 20,
            r03(6, -10, 12, 0, 0, -8, 0, -4) / 20,
            r03(-2, -2, 6, 6, 4, -4, 2, -2) / 20,
        ),
    )
    assert basis[x2] == Polynomial(
        R03,
        (
            r03(1, 4, -3, 3, 2, 2, 1, 1) / 15,
            r03(-3, 5, -6, 0, 0, 4, 0, 2) / 15,
            r03(-4, 1, -3, -3, -2, 2, -1, 1) / 15,
        ),
    )
    assert basis[x3] == p3 * p3(x3).inverse()
    assert basis[x3] == Polynomial(
        R03,
        (
            r03(16, 4, -3, 3, 2, 2, 1, 1) / 30,
            r03(-3, 5, -6, 0, 0, 4, 0, 2) / 30,
            r03(11, 1, -3, -3, -2, 2, -1, 1) / 30,
        ),
    )

    # unique exact interpolant of the stated data, oracle-confirmed
    result = interpolate_r03(problem)
    expected = Polynomial(
        R03,
        (
            r03(2, 0, 10, 1, 4, -10, 0, 7) / 15,
            r03(2, -13, 9, 11, 14, -6, -7, 7) / 15,
            r03(0, 2, -1, 10, 10, 4, -7, 0) / 15,
        ),
    )
    assert result == expected
    assert verify_interpolant(result, problem)
    oracle = brute_force_interpolate(problem)
    assert oracle.kind == "unique" and oracle.polynomial == result

    # Source-display discrepancy, pinned exactly: the displayed final
    # coefficients below do NOT solve the stated problem (they give 2 e13
    # at x2); they are the unique interpolant for the value 2 e13 instead
    # of the stated 2 e23. Both facts are asserted so any drift fails here.
    displayed = Polynomial(
        R03,
        (
            r03(0, 6, 8, -5, -10, -2, 4, 5) / 15,
            r03(-6, -9, 13, 3, -8, -12, -1, 9) / 15,
            r03(-6, 0, 5, 8, 2, -10, -5, 4) / 15,
        ),
    )
    assert displayed != result
    assert displayed(x2) == Multivector.basis(R03, 1, 3) * 2
    transposed = InterpolationProblem.from_pairs(
        R03, [(e1, w1), (x2, Multivector.basis(R03, 1, 3) * 2), (x3, w3)]
    )
    assert interpolate_r03(transposed) == displayed
    assert time.monotonic() - started < 1.0


@reported("3. zero-divisor and cone counterexample battery")
def test_check_3_counterexample_battery():
    # (a) e1 - e23 has psi- = 0, hence no inverse
    x = Multivector.basis(R03, 1) - Multivector.basis(R03, 2, 3)
    assert x.psi_minus() == 0
    assert not x.is_invertible()

    # (b) conjugating e4 can leave the quadratic cone in R(0,4)
    s04 = Signature(0, 4)
    a = Multivector.scalar(s04, 2) + Multivector.basis(s04, 1, 2, 3)
    conj = a.inverse() * Multivector.basis(s04, 4) * a
    assert conj == Multivector.basis(s04, 4) * Fraction(5, 3) - Multivector.basis(
        s04, 1, 2, 3, 4
    ) * Fraction(4, 3)
    assert not conj.in_quadratic_cone()

    # (c) over R(2,0) a degree-one polynomial vanishes in two distinct
    # cone classes
    s20 = Signature(2, 0)
    e1, e2, e12 = (
        Multivector.basis(s20, 1),
        Multivector.basis(s20, 2),
        Multivector.basis(s20, 1, 2),
    )
    p = Polynomial(s20, (e2 - Multivector.one(s20), e1 - e12))
    root_a, root_b = e12, e1 / 3 + e12 * Fraction(2, 3)
    assert p(root_a) == 0 and p(root_b) == 0
    assert root_a.in_quadratic_cone() and root_b.in_quadratic_cone()
    assert root_a.conjugacy_class() != root_b.conjugacy_class()

    # (d) X (e1 + e23) + 1 - e123 kills e1 and e23 but not e2
    e1_3 = Multivector.basis(R03, 1)
    e2_3 = Multivector.basis(R03, 2)
    e23_3 = Multivector.basis(R03, 2, 3)
    e123 = Multivector.basis(R03, 1, 2, 3)
    q = Polynomial(R03, (Multivector.one(R03) - e123, e1_3 + e23_3))
    assert q(e1_3) == 0 and q(e23_3) == 0
    assert q(e2_3) != 0


@reported("4. product-evaluation identity on 200 random triples per signature")
def test_check_4_product_evaluation_identity():
    rng = random.Random(101)
    for sig in (H, R03):
        done = 0
        while done < 200:
            p = Polynomial(sig, [rand_multivector(rng, sig, 3) for _ in range(rng.randint(1, 4))])
            q = Polynomial(sig, [rand_multivector(rng, sig, 3) for _ in range(rng.randint(1, 4))])
            x = rand_multivector(rng, sig, 3)
            if not p(x).is_invertible():
                continue
            assert eval_of_product(p, q, x) == (p * q)(x)
            done += 1


@reported("5. differences across distinct R(0,3) classes are invertible, 200 pairs")
def test_check_5_distinct_class_differences_invertible():
    rng = random.Random(102)
    done = 0
    while done < 200:
        x = rand_cone_point_r03(rng)
        y = rand_cone_point_r03(rng)
        if x.conjugacy_class() == y.conjugacy_class():
            continue
        assert (x - y).is_invertible()
        done += 1


@reported("6. constructions match the linear-system oracle on 100 problems per signature")
def test_check_6_oracle_agreement_and_uniqueness():
    started = time.monotonic()
    rng = random.Random(103)
    for n in range(100):
        problem = random_h_problem(rng, force_triple=(n % 3 == 0))
        solution = interpolate(problem)
        assert verify_interpolant(solution, problem)
        oracle = brute_force_interpolate(problem)
        assert oracle.kind == "unique"
        assert oracle.polynomial == solution
        order = list(range(len(problem.pairs)))
        rng.shuffle(order)
        assert interpolate(problem.permuted(order)) == solution
    for _ in range(100):
        problem = random_r03_problem(rng)
        solution = interpolate(problem)
        assert verify_interpolant(solution, problem)
        oracle = brute_force_interpolate(problem)
        assert oracle.kind == "unique"
        assert oracle.polynomial == solution
        order = list(range(len(problem.pairs)))
        rng.shuffle(order)
        assert interpolate(problem.permuted(order)) == solution
    assert time.monotonic() - started < 30.0


@reported("7. violated collinearity: solver refuses and the oracle finds no solution")
def test_check_7_collinearity_necessity():
    rng = random.Random(104)
    for _ in range(50):
        problem = random_h_problem_with_violation(rng)
        with pytest.raises(CollinearityViolated):
            interpolate(problem)
        degree = group_by_class(problem).degree_bound
        assert brute_force_interpolate(problem, degree).kind == "none"


@reported("8. root classes stay within the degree bound; census counts match")
def test_check_8_root_class_count_bound_and_census():
    rng = random.Random(105)
    for _ in range(100):
        d = rng.randint(1, 5)
        params = rand_class_params(rng, d)
        points = [rand_cone_point_r03(rng, a, b) for a, b in params]
        poly = Polynomial.one(R03)
        for y in points:
            poly = append_root(poly, y)
        prescribed = [x.conjugacy_class() for x in points]
        probes = set(prescribed)
        while len(probes) < d + 20:
            alpha = Fraction(rng.randint(-6, 6), rng.randint(1, 3))
            beta = Fraction(rng.randint(1, 6), rng.randint(1, 3))
            probes.add(ConjugacyClassId.sphere(2 * alpha, alpha * alpha + beta * beta))
        populated = [cls for cls in probes if not roots_in_class(poly, cls).is_empty]
        assert len(populated) <= d
        for cls in prescribed:
            assert cls in populated

    # census on constructed instances, with equality where it is forced
    one3 = Multivector.one(R03)
    sphere = ConjugacyClassId.sphere(0, 1)
    p = Polynomial.x_minus(one3) * Polynomial.from_scalars(R03, (1, 0, 1))
    assert paravector_root_census(p, [ConjugacyClassId.real(1), sphere]) == (1, 1, 0)
    assert 1 + 2 * 1 + 0 == p.degree

    p = Polynomial.x_minus(one3) * Polynomial.x_minus(one3)
    assert paravector_root_census(p, [ConjugacyClassId.real(1)]) == (2, 0, 0)

    delta = characteristic_poly(sphere, R03)
    assert paravector_root_census(delta * delta, [sphere]) == (0, 2, 0)

    y = one3 + Multivector.basis(R03, 3)  # paravector in Sphere(2, 2)
    p = append_root(delta, y)
    r, s, k = paravector_root_census(p, [sphere, y.conjugacy_class()])
    assert (r, s, k) == (0, 1, 1)
    assert r + 2 * s + k == p.degree
