"""Exact arithmetic primitives: dyadic rationals, exact powers of two,
and quadratic irrationals.

Every comparison and sign decision in this package reduces to integer
arithmetic on arbitrary-precision ints; no float ever enters a decision
path.
"""

from __future__ import annotations

import enum
import math
import re

from .errors import NotDyadic, ParseError


class Sign(enum.IntEnum):
    """Exact sign of a quantity."""

    NEG = -1
    ZERO = 0
    POS = 1

    def __neg__(self) -> "Sign":
        return Sign(-int(self))


class Cmp(enum.IntEnum):
    """Outcome of an exact comparison."""

    LT = -1
    EQ = 0
    GT = 1


def sign_of(x: int) -> Sign:
    """Sign of a plain integer."""
    if x > 0:
        return Sign.POS
    if x < 0:
        return Sign.NEG
    return Sign.ZERO


def _trailing_zeros(n: int) -> int:
    # n must be nonzero
    return (n & -n).bit_length() - 1


class DyadicRational:
    """numerator / 2**exponent, kept canonical.

    Canonical means exponent == 0 or the numerator is odd; zero is
    0 / 2**0.  Canonical form turns structural equality into value
    equality.  Instances are immutable by convention.
    """

    __slots__ = ("numerator", "exponent")

    def __init__(self, numerator: int, exponent: int = 0) -> None:
        if not isinstance(numerator, int) or not isinstance(exponent, int):
            raise NotDyadic(f"expected integers, got {numerator!r} / 2^{exponent!r}")
        if exponent < 0:
            # 2**k with k > 0 is a numerator shift, not a denominator
            numerator <<= -exponent
            exponent = 0
        if numerator == 0:
            exponent = 0
        elif exponent > 0:
            drop = min(exponent, _trailing_zeros(numerator))
            numerator >>= drop
            exponent -= drop
        self.numerator = numerator
        self.exponent = exponent

    @staticmethod
    def _coerce(value) -> "DyadicRational":
        if isinstance(value, DyadicRational):
            return value
        if isinstance(value, int):
            return DyadicRational(value)
        return NotImplemented

    def __add__(self, other) -> "DyadicRational":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        e = max(self.exponent, other.exponent)
        n = (self.numerator << (e - self.exponent)) + (other.numerator << (e - other.exponent))
        return DyadicRational(n, e)

    __radd__ = __add__

    def __sub__(self, other) -> "DyadicRational":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        e = max(self.exponent, other.exponent)
        n = (self.numerator << (e - self.exponent)) - (other.numerator << (e - other.exponent))
        return DyadicRational(n, e)

    def __rsub__(self, other) -> "DyadicRational":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __mul__(self, other) -> "DyadicRational":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return DyadicRational(self.numerator * other.numerator, self.exponent + other.exponent)

    __rmul__ = __mul__

    def __neg__(self) -> "DyadicRational":
        return DyadicRational(-self.numerator, self.exponent)

    def mul_pow2(self, k: int) -> "DyadicRational":
        """Exact product with 2**k."""
        return DyadicRational(self.numerator, self.exponent - k)

    def _diff_sign(self, other: "DyadicRational") -> int:
        e = max(self.exponent, other.exponent)
        d = (self.numerator << (e - self.exponent)) - (other.numerator << (e - other.exponent))
        return (d > 0) - (d < 0)

    def __eq__(self, other) -> bool:
        if not isinstance(other, DyadicRational):
            return NotImplemented
        return self.numerator == other.numerator and self.exponent == other.exponent

    def __lt__(self, other) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._diff_sign(other) < 0

    def __le__(self, other) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._diff_sign(other) <= 0

    def __gt__(self, other) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._diff_sign(other) > 0

    def __ge__(self, other) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._diff_sign(other) >= 0

    def __hash__(self) -> int:
        return hash((self.numerator, self.exponent))

    def __str__(self) -> str:
        if self.exponent == 0:
            return str(self.numerator)
        return f"{self.numerator}/2^{self.exponent}"

    def __repr__(self) -> str:
        return f"DyadicRational({self.numerator}, {self.exponent})"


D_ZERO = DyadicRational(0)
D_ONE = DyadicRational(1)


def compare(a: DyadicRational, b: DyadicRational) -> Cmp:
    """Exact total-order comparison of two dyadic rationals."""
    return Cmp(a._diff_sign(b))


_DYADIC_RE = re.compile(r"\s*(-?\d+)\s*(?:/\s*2\^(\d+))?\s*$")


def parse_dyadic(text: str) -> DyadicRational:
    """Parse 'm' or 'm/2^k'."""
    m = _DYADIC_RE.match(text)
    if not m:
        raise ParseError("expected a dyadic rational like '3' or '3/2^2'", 0)
    return DyadicRational(int(m.group(1)), int(m.group(2)) if m.group(2) else 0)


class PowerOfTwo:
    """Exact 2**exponent; the exponent may be negative."""

    __slots__ = ("exponent",)

    def __init__(self, exponent: int) -> None:
        self.exponent = exponent

    def __mul__(self, other) -> "PowerOfTwo":
        if not isinstance(other, PowerOfTwo):
            return NotImplemented
        return PowerOfTwo(self.exponent + other.exponent)

    def inverse(self) -> "PowerOfTwo":
        return PowerOfTwo(-self.exponent)

    def as_dyadic(self) -> DyadicRational:
        if self.exponent >= 0:
            return DyadicRational(1 << self.exponent)
        return DyadicRational(1, -self.exponent)

    @property
    def is_one(self) -> bool:
        return self.exponent == 0

    def __eq__(self, other) -> bool:
        if not isinstance(other, PowerOfTwo):
            return NotImplemented
        return self.exponent == other.exponent

    def __hash__(self) -> int:
        return hash(("PowerOfTwo", self.exponent))

    def __str__(self) -> str:
        return f"2^{self.exponent}"

    def __repr__(self) -> str:
        return f"PowerOfTwo({self.exponent})"


def _squarefree_split(d: int) -> tuple[int, int]:
    """Write d = rest * root**2 with rest square-free; return (rest, root)."""
    root = 1
    f = 2
    while f * f <= d:
        ff = f * f
        while d % ff == 0:
            d //= ff
            root *= f
        f += 1
    return d, root


def _sqrt_sum_sign(a: int, b: int, d: int) -> Sign:
    """Exact sign of a + b*sqrt(d) for square-free d > 1.

    When a and b have opposite signs the comparison reduces to a^2
    against b^2*d; equality there would force d to be a perfect square.
    """
    if b == 0:
        return sign_of(a)
    if a == 0:
        return sign_of(b)
    if (a > 0) == (b > 0):
        return sign_of(a)
    if a * a > b * b * d:
        return sign_of(a)
    return sign_of(b)


class QuadraticIrrational:
    """Exact (p + q*sqrt(d)) / r with q != 0, r > 0 and d > 1 square-free.

    Normalization (square-free d, positive r, gcd(p, q, r) = 1) makes
    the representation unique, so structural equality is value equality.
    """

    __slots__ = ("p", "q", "r", "d")

    def __init__(self, p: int, q: int, r: int, d: int) -> None:
        if r == 0:
            raise ValueError("denominator r must be nonzero")
        if d <= 0:
            raise ValueError("radicand d must be positive")
        d, root = _squarefree_split(d)
        q *= root
        if d == 1:
            raise ValueError("radicand must not be a perfect square")
        if q == 0:
            raise ValueError("q = 0 would make the value rational")
        if r < 0:
            p, q, r = -p, -q, -r
        g = math.gcd(math.gcd(abs(p), abs(q)), r)
        self.p = p // g
        self.q = q // g
        self.r = r // g
        self.d = d

    @classmethod
    def sqrt(cls, d: int) -> "QuadraticIrrational":
        return cls(0, 1, 1, d)

    def sign(self) -> Sign:
        return _sqrt_sum_sign(self.p, self.q, self.d)

    def __neg__(self) -> "QuadraticIrrational":
        return QuadraticIrrational(-self.p, -self.q, self.r, self.d)

    def reciprocal(self) -> "QuadraticIrrational":
        """Exact 1 / value (rationalize by the conjugate)."""
        norm = self.p * self.p - self.q * self.q * self.d  # nonzero by irrationality
        return QuadraticIrrational(self.r * self.p, -self.r * self.q, norm, self.d)

    def plus_rational(self, num: int, den: int = 1) -> "QuadraticIrrational":
        """Exact value + num/den."""
        if den == 0:
            raise ValueError("zero denominator")
        return QuadraticIrrational(self.p * den + num * self.r, self.q * den, self.r * den, self.d)

    def __eq__(self, other) -> bool:
        if not isinstance(other, QuadraticIrrational):
            return NotImplemented
        return (self.p, self.q, self.r, self.d) == (other.p, other.q, other.r, other.d)

    def __hash__(self) -> int:
        return hash((self.p, self.q, self.r, self.d))

    def __str__(self) -> str:
        return f"irr({self.p},{self.q},{self.r},{self.d})"

    def __repr__(self) -> str:
        return f"QuadraticIrrational({self.p}, {self.q}, {self.r}, {self.d})"


def quad_linear_sign(lam: QuadraticIrrational, m: int, n: int) -> Sign:
    """Exact sign of lam*m + n for integers m, n.

    ZERO occurs only at (m, n) = (0, 0); lam is irrational.
    """
    return _sqrt_sum_sign(lam.p * m + lam.r * n, lam.q * m, lam.d)


_IRR_RE = re.compile(
    r"\s*irr\(\s*(-?\d+)\s*,\s*(-?\d+)\s*,\s*(-?\d+)\s*,\s*(-?\d+)\s*\)\s*$"
)


def parse_quadratic_irrational(text: str) -> QuadraticIrrational:
    """Parse 'irr(p,q,r,d)'."""
    m = _IRR_RE.match(text)
    if not m:
        raise ParseError("expected a quadratic irrational like 'irr(0,1,1,2)'", 0)
    return QuadraticIrrational(*(int(g) for g in m.groups()))
