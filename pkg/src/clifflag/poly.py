"""Polynomials with Clifford coefficients kept on the right of the powers.

A polynomial is a coefficient list a_0..a_d over one signature; it
evaluates as sum_h x^h a_h, with the power always to the left of its
coefficient. Multiplying two polynomials treats the indeterminate as
commuting with every coefficient (the usual construction for rings of
polynomials over a non-commutative ring), so

    (P * Q) coefficient of X^n  =  sum over h+k=n of  a_h b_k.

With that convention (P * Q)(x) is NOT P(x) Q(x) in general; whenever
P(x) is invertible it equals P(x) Q(P(x)^-1 x P(x)), and
:func:`eval_of_product` checks that identity while computing it.

Text syntax: ``X^3*(e12) + X^2*(1) + (1)``, highest degree first, zero
coefficients omitted, the constant term written without a power.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .classpoints import quaternion_class_points, vector_part
from .errors import (
    ParseError,
    SignatureMismatch,
    UnsupportedSignature,
    WrongSignature,
)
from .multivector import (
    QUATERNIONS,
    R03,
    ConjugacyClassId,
    Multivector,
    Signature,
    from_quaternion_pair,
    to_quaternion_pair,
)


class Polynomial:
    """A polynomial over one Clifford algebra, right coefficients, exact."""

    __slots__ = ("sig", "coeffs")

    def __init__(self, sig: Signature, coeffs):
        coeffs = list(coeffs)
        for c in coeffs:
            if not isinstance(c, Multivector):
                raise TypeError("polynomial coefficients must be multivectors")
            if c.sig != sig:
                raise SignatureMismatch(f"coefficient in {c.sig}, polynomial in {sig}")
        while coeffs and not coeffs[-1]:
            coeffs.pop()
        self.sig = sig
        self.coeffs = tuple(coeffs)

    # ---- constructors ----------------------------------------------------

    @classmethod
    def zero(cls, sig: Signature) -> Polynomial:
        return cls(sig, ())

    @classmethod
    def one(cls, sig: Signature) -> Polynomial:
        return cls.constant(Multivector.one(sig))

    @classmethod
    def constant(cls, value: Multivector) -> Polynomial:
        return cls(value.sig, (value,))

    @classmethod
    def from_scalars(cls, sig: Signature, values) -> Polynomial:
        """Real-coefficient polynomial from a_0..a_d scalar values."""
        return cls(sig, tuple(Multivector.scalar(sig, v) for v in values))

    @classmethod
    def identity(cls, sig: Signature) -> Polynomial:
        """The monomial X."""
        return cls(sig, (Multivector.zero(sig), Multivector.one(sig)))

    @classmethod
    def x_minus(cls, point: Multivector) -> Polynomial:
        return cls(point.sig, (-point, Multivector.one(point.sig)))

    # ---- basic structure ---------------------------------------------------

    @property
    def degree(self):
        """Degree as an int, or None for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else None

    @property
    def leading(self) -> Multivector:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def coefficient(self, h: int) -> Multivector:
        if 0 <= h < len(self.coeffs):
            return self.coeffs[h]
        return Multivector.zero(self.sig)

    def is_real(self) -> bool:
        return all(c.is_scalar() for c in self.coeffs)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self.sig == other.sig and self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash((self.sig, self.coeffs))

    def _check_sig(self, other):
        if self.sig != other.sig:
            raise SignatureMismatch(f"{self.sig} vs {other.sig}")

    # ---- evaluation ----------------------------------------------------------

    def __call__(self, x: Multivector) -> Multivector:
        """Evaluate sum_h x^h a_h (Horner from the top; powers stay left)."""
        if x.sig != self.sig:
            raise SignatureMismatch(f"point in {x.sig}, polynomial in {self.sig}")
        acc = Multivector.zero(self.sig)
        for a in reversed(self.coeffs):
            acc = x * acc + a
        return acc

    # ---- arithmetic ------------------------------------------------------------

    def __add__(self, other):
        if isinstance(other, Polynomial):
            self._check_sig(other)
            length = max(len(self.coeffs), len(other.coeffs))
            return Polynomial(
                self.sig,
                (self.coefficient(h) + other.coefficient(h) for h in range(length)),
            )
        return NotImplemented

    def __sub__(self, other):
        if isinstance(other, Polynomial):
            return self + (-other)
        return NotImplemented

    def __neg__(self) -> Polynomial:
        return Polynomial(self.sig, (-c for c in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, Polynomial):
            self._check_sig(other)
            if not self.coeffs or not other.coeffs:
                return Polynomial.zero(self.sig)
            out = [Multivector.zero(self.sig)] * (len(self.coeffs) + len(other.coeffs) - 1)
            for h, a in enumerate(self.coeffs):
                if not a:
                    continue
                for k, b in enumerate(other.coeffs):
                    if b:
                        out[h + k] = out[h + k] + a * b
            return Polynomial(self.sig, out)
        if isinstance(other, Multivector):
            # right constant: same as multiplying by the constant polynomial
            return Polynomial(self.sig, (c * other for c in self.coeffs))
        if isinstance(other, (int, Fraction)):
            return Polynomial(self.sig, (c * other for c in self.coeffs))
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    # ---- division by a linear factor on the left ---------------------------------

    def divide_left_linear(self, y: Multivector) -> tuple[Polynomial, Multivector]:
        """Write P = (X - y) * Q + r; returns (Q, r) with r = P(y).

        Backward recursion on the coefficients: c_{d-1} = a_d and
        c_{k-1} = a_k + y c_k.
        """
        if y.sig != self.sig:
            raise SignatureMismatch(f"point in {y.sig}, polynomial in {self.sig}")
        d = self.degree
        if d is None or d < 1:
            raise ValueError("division needs a polynomial of degree at least 1")
        q = [Multivector.zero(self.sig)] * d
        q[d - 1] = self.coeffs[d]
        for k in range(d - 1, 0, -1):
            q[k - 1] = self.coeffs[k] + y * q[k]
        r = self.coeffs[0] + y * q[0]
        return Polynomial(self.sig, q), r

    # ---- text form -------------------------------------------------------------

    def __str__(self) -> str:
        if not self.coeffs:
            return "(0)"
        parts = []
        for h in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[h]
            if not c:
                continue
            if h == 0:
                parts.append(f"({c})")
            else:
                parts.append(f"X^{h}*({c})")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"Polynomial({self.sig}, '{self}')"

    @classmethod
    def parse(cls, text: str, sig: Signature) -> Polynomial:
        """Parse ``X^3*(e12) + X^2*(1) + (1)`` style text."""
        terms = _split_terms(text)
        if not terms:
            raise ParseError(f"empty polynomial text {text!r}")
        coeffs: dict[int, Multivector] = {}
        for negate, term in terms:
            h, mv_text = _parse_term(term)
            try:
                value = Multivector.parse(mv_text, sig)
            except ParseError as exc:
                raise ParseError(f"bad coefficient in term {term!r}: {exc}") from None
            if negate:
                value = -value
            coeffs[h] = coeffs.get(h, Multivector.zero(sig)) + value
        top = max(coeffs)
        return cls(sig, tuple(coeffs.get(h, Multivector.zero(sig)) for h in range(top + 1)))


def _split_terms(text: str) -> list[tuple[bool, str]]:
    # split on top-level +/-, keeping parenthesised contents intact
    terms = []
    depth = 0
    current: list[str] = []
    pending = False
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise ParseError(f"unbalanced parentheses in {text!r}")
        if ch in "+-" and depth == 0:
            chunk = "".join(current).strip()
            if chunk:
                terms.append((pending, chunk))
                pending = ch == "-"
                current = []
            else:
                pending = pending != (ch == "-")
            continue
        current.append(ch)
    if depth != 0:
        raise ParseError(f"unbalanced parentheses in {text!r}")
    chunk = "".join(current).strip()
    if chunk:
        terms.append((pending, chunk))
    elif pending:
        raise ParseError(f"dangling sign in {text!r}")
    return terms


def _parse_term(term: str) -> tuple[int, str]:
    term = term.strip()
    if term.startswith("X"):
        rest = term[1:].lstrip()
        if rest.startswith("^"):
            rest = rest[1:].lstrip()
            pos = 0
            while pos < len(rest) and rest[pos].isdigit():
                pos += 1
            if pos == 0:
                raise ParseError(f"missing exponent in term {term!r}")
            h = int(rest[:pos])
            rest = rest[pos:].lstrip()
        else:
            h = 1
        if not rest:
            return h, "1"
        if not rest.startswith("*"):
            raise ParseError(f"expected '*' after power in term {term!r}")
        rest = rest[1:].strip()
    else:
        h = 0
        rest = term
    if rest.startswith("(") and rest.endswith(")"):
        rest = rest[1:-1]
    if not rest:
        raise ParseError(f"missing coefficient in term {term!r}")
    return h, rest


# ---- the product-evaluation identity -------------------------------------------


def eval_of_product(p: Polynomial, q: Polynomial, x: Multivector) -> Multivector:
    """Evaluate P(x) Q(P(x)^-1 x P(x)) and check it equals (P * Q)(x).

    Raises NotInvertible when P(x) is zero or a zero divisor, in which case
    the identity does not apply.
    """
    px = p(x)
    px_inv = px.inverse()
    rhs = px * q(px_inv * x * px)
    lhs = (p * q)(x)
    if lhs != rhs:
        raise AssertionError(
            f"product-evaluation identity failed at {x}: {lhs} != {rhs}"
        )
    return rhs


# ---- root appending --------------------------------------------------------------


def append_root(t: Polynomial, y: Multivector) -> Polynomial:
    """Extend T to T * (X - T(y)^-1 y T(y)), which vanishes at y and on V(T).

    Requires T(y) invertible; in R_{0,3} the result stays invertible at
    every x outside the class of y where T(x) was invertible.
    """
    ty = t(y)
    ty_inv = ty.inverse()  # NotInvertible propagates to the caller
    return t * Polynomial.x_minus(ty_inv * y * ty)


# ---- conjugacy-class machinery -----------------------------------------------------


def characteristic_poly(cls_id: ConjugacyClassId, sig: Signature) -> Polynomial:
    """X^2 - X t + n for a sphere class; X - alpha for a real singleton."""
    if cls_id.is_real:
        return Polynomial.from_scalars(sig, (-cls_id.alpha, 1))
    return Polynomial.from_scalars(sig, (cls_id.n, -cls_id.t, 1))


@dataclass(frozen=True)
class AffineRestriction:
    """On a fixed class the polynomial collapses to x |-> x a + b."""

    cls_id: ConjugacyClassId
    a: Multivector
    b: Multivector

    def __call__(self, x: Multivector) -> Multivector:
        return x * self.a + self.b


def affine_restriction(p: Polynomial, cls_id: ConjugacyClassId) -> AffineRestriction:
    """Restrict P to a conjugacy class, where x^2 = x t - n collapses all powers.

    Real sequences A_h, B_h with x^h = A_h + x B_h on the class are built by
    A_0 = 1, B_0 = 0, A_{h+1} = -n B_h, B_{h+1} = A_h + t B_h; then
    a = sum B_h a_h and b = sum A_h a_h.
    """
    if p.sig not in (QUATERNIONS, R03):
        raise UnsupportedSignature(f"affine restriction not available in {p.sig}")
    t, n = cls_id.t, cls_id.n
    a = Multivector.zero(p.sig)
    b = Multivector.zero(p.sig)
    big_a, big_b = Fraction(1), Fraction(0)
    for coeff in p.coeffs:
        a = a + big_b * coeff
        b = b + big_a * coeff
        big_a, big_b = -n * big_b, big_a + t * big_b
    return AffineRestriction(cls_id, a, b)


@dataclass(frozen=True)
class RootSet:
    """Roots of a polynomial inside one conjugacy class.

    kind is "empty", "points" or "whole_class". For "points",
    `exhaustive` is False when the true solution set is an infinite
    sub-family of the class and `points` only holds sampled
    representatives (this happens in R_{0,3} when one quaternionic
    component of the affine restriction degenerates).
    """

    kind: str
    cls_id: ConjugacyClassId
    points: tuple[Multivector, ...] = ()
    exhaustive: bool = True

    @property
    def is_empty(self) -> bool:
        return self.kind == "empty"


def _solve_affine_in_quaternion_class(a, b, cls_id):
    # solutions of x a + b = 0 with x in the given quaternionic class;
    # returns ("empty", None) | ("point", x) | ("whole", None)
    if a:
        x = -b * a.inverse()
        if x.in_quadratic_cone() and x.conjugacy_class() == cls_id:
            return "point", x
        return "empty", None
    if b:
        return "empty", None
    return "whole", None


def roots_in_class(p: Polynomial, cls_id: ConjugacyClassId) -> RootSet:
    """Solve P = 0 inside one conjugacy class of R_{0,2} or R_{0,3}.

    The affine restriction reduces the problem to x a + b = 0 on the class;
    in R_{0,3} that splits into two independent quaternionic problems whose
    solutions are recombined.
    """
    if p.sig not in (QUATERNIONS, R03):
        raise UnsupportedSignature(f"root search not available in {p.sig}")

    if cls_id.is_real:
        alpha = Multivector.scalar(p.sig, cls_id.alpha)
        if not p(alpha):
            return RootSet("points", cls_id, (alpha,))
        return RootSet("empty", cls_id)

    restriction = affine_restriction(p, cls_id)
    a, b = restriction.a, restriction.b

    if p.sig == QUATERNIONS:
        kind, x = _solve_affine_in_quaternion_class(a, b, cls_id)
        if kind == "point":
            return RootSet("points", cls_id, (x,))
        if kind == "whole":
            return RootSet("whole_class", cls_id)
        return RootSet("empty", cls_id)

    # R_{0,3}: component classes share (t, n)
    component_cls = ConjugacyClassId.sphere(cls_id.t, cls_id.n)
    ap, am = to_quaternion_pair(a)
    bp, bm = to_quaternion_pair(b)
    kind_p, xp = _solve_affine_in_quaternion_class(ap, bp, component_cls)
    kind_m, xm = _solve_affine_in_quaternion_class(am, bm, component_cls)

    if kind_p == "empty" or kind_m == "empty":
        return RootSet("empty", cls_id)
    if kind_p == "point" and kind_m == "point":
        return RootSet("points", cls_id, (from_quaternion_pair(xp, xm),))
    if kind_p == "whole" and kind_m == "whole":
        return RootSet("whole_class", cls_id)

    # one component pinned, the other free over its whole sphere: sample
    # representatives of the infinite family, always including the unique
    # paravector candidate (free component = pinned one with k negated).
    pinned, pinned_side = (xp, "plus") if kind_p == "point" else (xm, "minus")
    v0 = vector_part(pinned)
    frees = quaternion_class_points(cls_id.t, cls_id.n, v0, count=12)
    c = pinned.coeffs
    paravector_mate = Multivector(QUATERNIONS, (c[0], c[1], c[2], -c[3]))
    candidates = [paravector_mate] + frees
    reps = []
    for free in candidates:
        x = (
            from_quaternion_pair(pinned, free)
            if pinned_side == "plus"
            else from_quaternion_pair(free, pinned)
        )
        if x not in reps:
            assert not p(x), "sampled representative failed to be a root"
            reps.append(x)
    return RootSet("points", cls_id, tuple(reps), exhaustive=False)


# ---- divisibility by characteristic polynomials --------------------------------------


def divide_by_real(p: Polynomial, divisor: Polynomial) -> tuple[Polynomial, Polynomial]:
    """Long division by a monic real-coefficient polynomial (two-sided)."""
    if not divisor or not divisor.is_real() or divisor.leading != 1:
        raise ValueError("divisor must be monic with real coefficients")
    p._check_sig(divisor)
    dd = divisor.degree
    rem = list(p.coeffs)
    if p.degree is None or p.degree < dd:
        return Polynomial.zero(p.sig), p
    quot = [Multivector.zero(p.sig)] * (len(rem) - dd)
    for i in range(len(rem) - 1, dd - 1, -1):
        c = rem[i]
        if c:
            quot[i - dd] = c
            for k, dc in enumerate(divisor.coeffs):
                rem[i - dd + k] = rem[i - dd + k] - dc.scalar_part() * c
    return Polynomial(p.sig, quot), Polynomial(p.sig, rem[:dd])


def factor_out_characteristic(
    p: Polynomial, cls_id: ConjugacyClassId
) -> tuple[int, Polynomial]:
    """Largest s with Delta^s dividing P, plus the cofactor Q.

    Delta is the degree-two characteristic polynomial of a sphere class;
    being real it divides two-sidedly and unambiguously.
    """
    if cls_id.is_real:
        raise ValueError("expected a sphere class")
    delta = characteristic_poly(cls_id, p.sig)
    s = 0
    q = p
    while q:
        quotient, remainder = divide_by_real(q, delta)
        if remainder:
            break
        s += 1
        q = quotient
    return s, q


def real_root_multiplicity(p: Polynomial, alpha) -> int:
    """Multiplicity of the real root alpha (0 when it is not a root)."""
    factor = Polynomial.from_scalars(p.sig, (-Fraction(alpha), 1))
    count = 0
    q = p
    while q and q.degree >= 1:
        quotient, remainder = divide_by_real(q, factor)
        if remainder:
            break
        count += 1
        q = quotient
    return count


def paravector_root_census(p: Polynomial, witnessed_classes) -> tuple[int, int, int]:
    """Count (r, s, k) for the supplied classes: real root multiplicities,
    characteristic powers of spherical classes, and remaining non-real
    non-spherical paravector roots found class by class.

    Only meaningful in R_{0,3}, where r + 2s + k <= deg P.
    """
    if p.sig != R03:
        raise WrongSignature(f"root census requires {R03}, got {p.sig}")
    r = 0
    s = 0
    k = 0
    seen = set()
    for cls_id in witnessed_classes:
        if cls_id in seen:
            continue
        seen.add(cls_id)
        if cls_id.is_real:
            r += real_root_multiplicity(p, cls_id.alpha)
            continue
        s_c, _ = factor_out_characteristic(p, cls_id)
        if s_c:
            s += s_c
            continue
        roots = roots_in_class(p, cls_id)
        if roots.kind == "points":
            k += sum(1 for x in roots.points if x.is_paravector())
        elif roots.kind == "whole_class":
            raise AssertionError(
                "class fully contained in the root set must divide by Delta"
            )
    return r, s, k
