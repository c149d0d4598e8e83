"""Exact multivector arithmetic for low-dimensional real Clifford algebras.

An element of R_{p,q} is stored densely as 2^(p+q) rational coordinates,
one per basis blade. Blades are indexed by bitmask over the generators
e_1..e_m (bit i-1 set means e_i is a factor), so index 0 is the scalar
unit, index 0b011 is e12, and so on. Generators anticommute and square to
+1 for i <= p and -1 for i > p; blade products reduce to the canonical
ascending order with the usual transposition-count sign.

Scalars are `fractions.Fraction`, so all arithmetic in this module is
exact. Every value is immutable and every operation is a pure function;
results may be shared freely.

Text syntax, accepted by :meth:`Multivector.parse` and produced by
``str()``: a sum of terms, each an optional rational coefficient followed
by an optional blade token (``e`` plus strictly ascending digits), e.g.
``3/2 + e1 - 2 e23 + 1/5 e123``. Printing orders blades by bitmask.
"""

from __future__ import annotations

import os
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import (
    NotInCone,
    NotInvertible,
    ParseError,
    SignatureMismatch,
    WrongSignature,
)
from .linsolve import solve_exact

HARD_DIM_LIMIT = 6
_DIM_ENV_VAR = "CLIFFLAG_MAX_DIM"

_ZERO = Fraction(0)
_ONE = Fraction(1)


def max_dimension() -> int:
    """Effective cap on p+q. CLIFFLAG_MAX_DIM may lower it; 6 is the hard limit."""
    raw = os.environ.get(_DIM_ENV_VAR)
    if raw is None:
        return HARD_DIM_LIMIT
    try:
        cap = int(raw)
    except ValueError:
        raise ValueError(f"{_DIM_ENV_VAR} must be an integer, got {raw!r}") from None
    if cap < 1:
        raise ValueError(f"{_DIM_ENV_VAR} must be at least 1, got {cap}")
    return min(cap, HARD_DIM_LIMIT)


@dataclass(frozen=True)
class Signature:
    """Signature (p, q) of the algebra R_{p,q}: e_i^2 = +1 for i <= p, else -1."""

    p: int
    q: int

    def __post_init__(self):
        if self.p < 0 or self.q < 0:
            raise ValueError(f"signature parts must be non-negative, got {self}")
        if self.p + self.q > max_dimension():
            raise ValueError(
                f"p+q = {self.p + self.q} exceeds the dimension cap {max_dimension()}"
            )

    @property
    def m(self) -> int:
        return self.p + self.q

    @property
    def dim(self) -> int:
        return 1 << self.m

    def __str__(self) -> str:
        return f"R({self.p},{self.q})"


QUATERNIONS = Signature(0, 2)
R03 = Signature(0, 3)


@lru_cache(maxsize=None)
def _blade_product(a: int, b: int, p: int) -> tuple[int, int]:
    # e_A * e_B = sign * e_(A xor B); sign counts the transpositions needed
    # to interleave the two ascending blades, times -1 per squared
    # anti-euclidean generator in the overlap.
    swaps = 0
    t = a >> 1
    while t:
        swaps += (t & b).bit_count()
        t >>= 1
    sign = -1 if swaps & 1 else 1
    if ((a & b) >> p).bit_count() & 1:
        sign = -sign
    return a ^ b, sign


def _blade_name(mask: int) -> str:
    if mask == 0:
        return "1"
    return "e" + "".join(str(i + 1) for i in range(mask.bit_length()) if mask >> i & 1)


# Clifford conjugation sign by grade mod 4: + - - +
_CONJ_SIGN = (1, -1, -1, 1)

_TOKEN_RE = re.compile(
    r"\s*(?:(?P<sign>[+-])|(?P<number>\d+(?:/\d+)?)|(?P<blade>e\d+)|(?P<star>\*))"
)


class Multivector:
    """A dense element of R_{p,q} with exact rational coordinates."""

    __slots__ = ("sig", "coeffs")

    def __init__(self, sig: Signature, coeffs):
        coeffs = tuple(c if isinstance(c, Fraction) else Fraction(c) for c in coeffs)
        if len(coeffs) != sig.dim:
            raise ValueError(f"expected {sig.dim} coordinates for {sig}, got {len(coeffs)}")
        self.sig = sig
        self.coeffs = coeffs

    @classmethod
    def _wrap(cls, sig: Signature, coeffs: tuple) -> Multivector:
        # internal fast path: coeffs already a tuple of Fractions
        mv = object.__new__(cls)
        mv.sig = sig
        mv.coeffs = coeffs
        return mv

    # ---- constructors -------------------------------------------------

    @classmethod
    def zero(cls, sig: Signature) -> Multivector:
        return cls._wrap(sig, (_ZERO,) * sig.dim)

    @classmethod
    def one(cls, sig: Signature) -> Multivector:
        return cls.scalar(sig, 1)

    @classmethod
    def scalar(cls, sig: Signature, value) -> Multivector:
        return cls.blade(sig, 0, value)

    @classmethod
    def blade(cls, sig: Signature, mask: int, value=1) -> Multivector:
        if not 0 <= mask < sig.dim:
            raise ValueError(f"blade mask {mask} out of range for {sig}")
        coeffs = [_ZERO] * sig.dim
        coeffs[mask] = Fraction(value)
        return cls._wrap(sig, tuple(coeffs))

    @classmethod
    def basis(cls, sig: Signature, *indices: int) -> Multivector:
        """Basis blade e_{i1} e_{i2} ... for strictly ascending generator indices."""
        mask = 0
        prev = 0
        for i in indices:
            if not 1 <= i <= sig.m:
                raise ValueError(f"generator index {i} out of range for {sig}")
            if i <= prev:
                raise ValueError("generator indices must be strictly ascending")
            prev = i
            mask |= 1 << (i - 1)
        return cls.blade(sig, mask)

    @classmethod
    def from_components(cls, sig: Signature, components: dict) -> Multivector:
        """Build from a {mask: value} mapping; missing blades are zero."""
        coeffs = [_ZERO] * sig.dim
        for mask, value in components.items():
            coeffs[mask] = Fraction(value)
        return cls._wrap(sig, tuple(coeffs))

    # ---- text form -----------------------------------------------------

    @classmethod
    def parse(cls, text: str, sig: Signature) -> Multivector:
        """Parse ``3/2 + e1 - 2 e23 + 1/5 e123`` style text."""
        coeffs = [_ZERO] * sig.dim
        pos = 0
        n = len(text)
        sign = _ONE
        number = None
        blade = None
        seen_any = False

        def flush():
            nonlocal sign, number, blade, seen_any
            if number is None and blade is None:
                return
            mask = 0
            if blade is not None:
                digits = blade[1:]
                prev = 0
                for ch in digits:
                    i = int(ch)
                    if i == 0 or i > sig.m:
                        raise ParseError(f"blade {blade!r} is out of range for {sig}")
                    if i <= prev:
                        raise ParseError(
                            f"blade {blade!r} must have strictly ascending indices"
                        )
                    prev = i
                    mask |= 1 << (i - 1)
            value = Fraction(number) if number is not None else _ONE
            coeffs[mask] += sign * value
            sign, number, blade = _ONE, None, None
            seen_any = True

        while pos < n:
            match = _TOKEN_RE.match(text, pos)
            if match is None or match.end() == pos:
                raise ParseError(f"cannot parse multivector text at {text[pos:]!r}")
            pos = match.end()
            kind = match.lastgroup
            tok = match.group(kind)
            if kind == "sign":
                had_term = number is not None or blade is not None
                flush()
                if had_term:
                    sign = _ONE if tok == "+" else -_ONE
                elif tok == "-":
                    sign = -sign  # consecutive signs compose
            elif kind == "number":
                if number is not None or blade is not None:
                    raise ParseError(f"unexpected number {tok!r} in {text!r}")
                number = tok
            elif kind == "blade":
                if blade is not None:
                    raise ParseError(f"unexpected blade {tok!r} in {text!r}")
                blade = tok
            # '*' between coefficient and blade is tolerated and ignored
        if number is None and blade is None and not seen_any:
            raise ParseError(f"empty multivector text {text!r}")
        flush()
        return cls(sig, coeffs)

    def __str__(self) -> str:
        parts = []
        for mask, c in enumerate(self.coeffs):
            if not c:
                continue
            sign = "-" if c < 0 else "+"
            mag = -c if c < 0 else c
            if mask == 0:
                body = str(mag)
            elif mag == 1:
                body = _blade_name(mask)
            else:
                body = f"{mag} {_blade_name(mask)}"
            parts.append((sign, body))
        if not parts:
            return "0"
        first_sign, first_body = parts[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self) -> str:
        return f"Multivector({self.sig}, '{self}')"

    # ---- ring structure --------------------------------------------------

    def _check_sig(self, other: Multivector):
        if self.sig != other.sig:
            raise SignatureMismatch(f"{self.sig} vs {other.sig}")

    def __eq__(self, other) -> bool:
        if isinstance(other, Multivector):
            return self.sig == other.sig and self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self == Multivector.scalar(self.sig, other)
        return NotImplemented

    def __hash__(self):
        return hash((self.sig, self.coeffs))

    def __bool__(self) -> bool:
        return any(self.coeffs)

    def __add__(self, other):
        if isinstance(other, Multivector):
            self._check_sig(other)
            return Multivector._wrap(
                self.sig, tuple(a + b for a, b in zip(self.coeffs, other.coeffs))
            )
        if isinstance(other, (int, Fraction)):
            coeffs = list(self.coeffs)
            coeffs[0] += other
            return Multivector._wrap(self.sig, tuple(coeffs))
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, (Multivector, int, Fraction)):
            return self + (-other)
        return NotImplemented

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self) -> Multivector:
        return Multivector._wrap(self.sig, tuple(-c for c in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, Multivector):
            self._check_sig(other)
            p = self.sig.p
            out = [_ZERO] * self.sig.dim
            for i, ci in enumerate(self.coeffs):
                if not ci:
                    continue
                for j, cj in enumerate(other.coeffs):
                    if not cj:
                        continue
                    k, s = _blade_product(i, j, p)
                    out[k] = out[k] + ci * cj if s > 0 else out[k] - ci * cj
            return Multivector._wrap(self.sig, tuple(out))
        if isinstance(other, (int, Fraction)):
            return Multivector._wrap(self.sig, tuple(c * other for c in self.coeffs))
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division of multivector by zero scalar")
            return self * (_ONE / Fraction(other))
        return NotImplemented

    def __pow__(self, exponent: int) -> Multivector:
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("only non-negative integer powers are defined")
        result = Multivector.one(self.sig)
        base = self
        n = exponent
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # ---- accessors -------------------------------------------------------

    def coeff(self, mask: int) -> Fraction:
        return self.coeffs[mask]

    def grade(self, k: int) -> Multivector:
        """Projection onto the grade-k part."""
        return Multivector._wrap(
            self.sig,
            tuple(c if mask.bit_count() == k else _ZERO for mask, c in enumerate(self.coeffs)),
        )

    def scalar_part(self) -> Fraction:
        return self.coeffs[0]

    def is_scalar(self) -> bool:
        return not any(self.coeffs[1:])

    def as_fraction(self) -> Fraction:
        if not self.is_scalar():
            raise ValueError(f"{self} is not a scalar")
        return self.coeffs[0]

    def is_paravector(self) -> bool:
        """True when only grade-0 and grade-1 coordinates are present."""
        return all(
            not c for mask, c in enumerate(self.coeffs) if mask.bit_count() > 1
        )

    def abs_squared(self) -> Fraction:
        """Squared euclidean length of the coordinate vector."""
        return sum((c * c for c in self.coeffs), _ZERO)

    # ---- conjugation, trace, norm -----------------------------------------

    def conjugate(self) -> Multivector:
        """Clifford conjugation: grade k picks up the sign pattern + - - + ..."""
        return Multivector._wrap(
            self.sig,
            tuple(
                c * _CONJ_SIGN[mask.bit_count() % 4] for mask, c in enumerate(self.coeffs)
            ),
        )

    def trace(self) -> Multivector:
        """t(x) = x + conjugate(x); central in R_{0,3}."""
        return self + self.conjugate()

    def norm(self) -> Multivector:
        """n(x) = x * conjugate(x); central in R_{0,3}."""
        return self * self.conjugate()

    # ---- R_{0,3} specials --------------------------------------------------

    def _require_sig(self, sig: Signature, op: str):
        if self.sig != sig:
            raise WrongSignature(f"{op} requires {sig}, got {self.sig}")

    def phi(self) -> Fraction:
        """Pseudoscalar pairing 2(x0*x123 - x1*x23 + x2*x13 - x3*x12) in R_{0,3}."""
        self._require_sig(R03, "phi")
        c = self.coeffs
        return 2 * (c[0] * c[7] - c[1] * c[6] + c[2] * c[5] - c[4] * c[3])

    def psi_plus(self) -> Fraction:
        self._require_sig(R03, "psi_plus")
        c = self.coeffs
        return (c[0] + c[7]) ** 2 + (c[1] - c[6]) ** 2 + (c[2] + c[5]) ** 2 + (c[4] - c[3]) ** 2

    def psi_minus(self) -> Fraction:
        self._require_sig(R03, "psi_minus")
        c = self.coeffs
        return (c[0] - c[7]) ** 2 + (c[1] + c[6]) ** 2 + (c[2] - c[5]) ** 2 + (c[4] + c[3]) ** 2

    # ---- inversion ----------------------------------------------------------

    def inverse(self) -> Multivector:
        """Two-sided inverse; raises NotInvertible for zero and zero divisors.

        Uses n(x)^-1 * conjugate(x) where the norm is real (q=2) or central
        (q=3); any other signature falls back to an exact linear solve of
        the left-multiplication system.
        """
        sig = self.sig
        if sig == QUATERNIONS:
            n = self.norm().scalar_part()
            if not n:
                raise NotInvertible(str(self))
            return self.conjugate() * (_ONE / n)
        if sig == R03:
            n = self.norm()
            a, b = n.coeffs[0], n.coeffs[7]
            d = a * a - b * b
            if not d:
                raise NotInvertible(str(self))
            # (a + b e123)^-1 = (a - b e123) / (a^2 - b^2), central
            n_inv = Multivector.from_components(sig, {0: a / d, 7: -b / d})
            return self.conjugate() * n_inv
        # general signature: solve x * y = 1 exactly
        dim = sig.dim
        columns = [(self * Multivector.blade(sig, j)).coeffs for j in range(dim)]
        rows = [[columns[j][i] for j in range(dim)] for i in range(dim)]
        rhs = [_ONE if i == 0 else _ZERO for i in range(dim)]
        kind, solution = solve_exact(rows, rhs)
        if kind != "unique":
            raise NotInvertible(str(self))
        return Multivector(sig, solution)

    def is_invertible(self) -> bool:
        try:
            self.inverse()
        except NotInvertible:
            return False
        return True

    # ---- quadratic cone and conjugacy classes -------------------------------

    def in_quadratic_cone(self) -> bool:
        """True for reals and for x with real trace and norm and 4 n(x) > t(x)^2."""
        if self.is_scalar():
            return True
        t = self.trace()
        if not t.is_scalar():
            return False
        n = self.norm()
        if not n.is_scalar():
            return False
        tf = t.scalar_part()
        return 4 * n.scalar_part() > tf * tf

    def conjugacy_class(self) -> ConjugacyClassId:
        """Class id (trace, norm) of a cone element; raises NotInCone otherwise.

        Equal ids characterise conjugacy only in R_{0,2} and R_{0,3}; for
        other signatures the id is still well defined on the cone and
        distinct ids certify distinct classes.
        """
        if not self.in_quadratic_cone():
            raise NotInCone(str(self))
        if self.is_scalar():
            return ConjugacyClassId.real(self.scalar_part())
        return ConjugacyClassId.sphere(
            self.trace().scalar_part(), self.norm().scalar_part()
        )


def real_trace_and_norm(x: Multivector) -> bool:
    """Simplified cone membership form used in the anti-euclidean algebras."""
    return x.trace().is_scalar() and x.norm().is_scalar()


def same_class(x: Multivector, y: Multivector) -> bool:
    return x.conjugacy_class() == y.conjugacy_class()


@dataclass(frozen=True)
class ConjugacyClassId:
    """A conjugacy class, identified by the shared (trace, norm) pair.

    Real singletons have 4n = t^2 (alpha = t/2); genuine spheres satisfy
    4n > t^2 strictly.
    """

    t: Fraction
    n: Fraction

    def __post_init__(self):
        if 4 * self.n < self.t * self.t:
            raise ValueError(f"no class has 4n < t^2 (t={self.t}, n={self.n})")

    @classmethod
    def real(cls, alpha) -> ConjugacyClassId:
        alpha = Fraction(alpha)
        return cls(2 * alpha, alpha * alpha)

    @classmethod
    def sphere(cls, t, n) -> ConjugacyClassId:
        t, n = Fraction(t), Fraction(n)
        if 4 * n <= t * t:
            raise ValueError(f"sphere class needs 4n > t^2, got t={t}, n={n}")
        return cls(t, n)

    @property
    def is_real(self) -> bool:
        return 4 * self.n == self.t * self.t

    @property
    def alpha(self) -> Fraction:
        if not self.is_real:
            raise ValueError(f"{self} is not a real class")
        return self.t / 2

    def contains(self, x: Multivector) -> bool:
        """Exact membership test for a cone element."""
        return x.in_quadratic_cone() and x.conjugacy_class() == self

    def __str__(self) -> str:
        if self.is_real:
            return f"Real({self.alpha})"
        return f"Sphere(t={self.t}, n={self.n})"


# ---- the R_{0,3} ~ H (+) H splitting -----------------------------------------

# Quaternion units are embedded as i = e1, j = e2, k = e12 (so i*j = k and
# k^2 = -1); the two components below are the images under the central
# idempotents (1 +/- e123)/2, rewritten in that basis.


def to_quaternion_pair(x: Multivector) -> tuple[Multivector, Multivector]:
    """Split an R_{0,3} element into its two quaternionic components."""
    x._require_sig(R03, "to_quaternion_pair")
    c = x.coeffs
    plus = (c[0] + c[7], c[1] - c[6], c[2] + c[5], c[3] - c[4])
    minus = (c[0] - c[7], c[1] + c[6], c[2] - c[5], c[3] + c[4])
    return (
        Multivector._wrap(QUATERNIONS, plus),
        Multivector._wrap(QUATERNIONS, minus),
    )


def from_quaternion_pair(h_plus: Multivector, h_minus: Multivector) -> Multivector:
    """Inverse of :func:`to_quaternion_pair`."""
    h_plus._require_sig(QUATERNIONS, "from_quaternion_pair")
    h_minus._require_sig(QUATERNIONS, "from_quaternion_pair")
    p, m = h_plus.coeffs, h_minus.coeffs
    half = Fraction(1, 2)
    return Multivector._wrap(
        R03,
        (
            (p[0] + m[0]) * half,  # 1
            (p[1] + m[1]) * half,  # e1
            (p[2] + m[2]) * half,  # e2
            (p[3] + m[3]) * half,  # e12
            (m[3] - p[3]) * half,  # e3
            (p[2] - m[2]) * half,  # e13
            (m[1] - p[1]) * half,  # e23
            (p[0] - m[0]) * half,  # e123
        ),
    )
