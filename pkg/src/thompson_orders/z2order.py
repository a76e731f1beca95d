"""The bi-orderings of Z^2, used as the fiber data of the quotient
ordering families on F.

An ordering is either of irrational type (the positive cone is the set
of lattice points strictly on one side of a line of irrational slope
through the origin) or of rational type (a primitive integer direction
plus an orientation of the kernel line).
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from typing import Optional, Union

from .dyadic import QuadraticIrrational, Sign, quad_linear_sign, sign_of
from .errors import ParseError


@dataclass(frozen=True)
class Z2Irrational:
    """(m, n) is positive iff coefficient*m + n is positive.

    positive_side = -1 selects the opposite half-plane (the conjugate
    cone), which the form coefficient*m + n alone cannot express.
    """

    coefficient: QuadraticIrrational
    positive_side: int = 1

    def __post_init__(self) -> None:
        if self.positive_side not in (1, -1):
            raise ValueError("positive_side must be +1 or -1")

    def sign(self, m: int, n: int) -> Sign:
        s = quad_linear_sign(self.coefficient, m, n)
        return s if self.positive_side == 1 else -s


@dataclass(frozen=True)
class Z2Rational:
    """(m, n) is positive iff a*m + b*n > 0, with ties on the kernel
    line {a*m + b*n = 0} broken by its orientation: the generator
    (-b, a) (gcd-reduced) is positive exactly when kernel_sign is +1.

    (a, b) is reduced by gcd but its sign is meaningful: (a, b) and
    (-a, -b) are different orderings.
    """

    a: int
    b: int
    kernel_sign: int = 1

    def __post_init__(self) -> None:
        if (self.a, self.b) == (0, 0):
            raise ValueError("direction (0,0) does not define an ordering")
        if self.kernel_sign not in (1, -1):
            raise ValueError("kernel_sign must be +1 or -1")
        g = math.gcd(abs(self.a), abs(self.b))
        if g > 1:
            object.__setattr__(self, "a", self.a // g)
            object.__setattr__(self, "b", self.b // g)

    def kernel_generator(self) -> tuple[int, int]:
        return (-self.b, self.a)

    def sign(self, m: int, n: int) -> Sign:
        v = self.a * m + self.b * n
        if v != 0:
            return sign_of(v)
        # on the kernel line (m, n) = k * (-b, a); both divisions are exact
        k = (-m) // self.b if self.b != 0 else n // self.a
        s = sign_of(k)
        return s if self.kernel_sign == 1 else -s


Z2Order = Union[Z2Irrational, Z2Rational]


def z2_sign(spec: Z2Order, m: int, n: int) -> Sign:
    """Sign of (m, n) under the ordering; ZERO only at the origin."""
    return spec.sign(m, n)


def z2_equal(s1: Z2Order, s2: Z2Order) -> bool:
    """True iff the positive cones coincide (normalized forms agree)."""
    return s1 == s2


def z2_negate(spec: Z2Order) -> Z2Order:
    """The conjugate cone: signs negated pointwise."""
    if isinstance(spec, Z2Irrational):
        return Z2Irrational(spec.coefficient, -spec.positive_side)
    # the kernel generator (-b, a) flips along with the direction,
    # so kernel_sign stays put
    return Z2Rational(-spec.a, -spec.b, spec.kernel_sign)


def z2_swap(spec: Z2Order) -> Z2Order:
    """The ordering pulled back through the coordinate swap (m,n) -> (n,m)."""
    if isinstance(spec, Z2Rational):
        return Z2Rational(spec.b, spec.a, -spec.kernel_sign)
    lam = spec.coefficient
    # lam*n + m = lam * ((1/lam)*m + n); dividing by negative lam flips the side
    side = spec.positive_side if lam.sign() == Sign.POS else -spec.positive_side
    return Z2Irrational(lam.reciprocal(), side)


def separating_pair(s1: Z2Order, s2: Z2Order, bound: int = 256) -> Optional[tuple[int, int]]:
    """A lattice point on which the two orderings disagree.

    Scans max-norm rings outward and returns the first hit, or None if
    the orderings agree on every point with max(|m|, |n|) <= bound.
    """
    for r in range(1, bound + 1):
        for m in range(-r, r + 1):
            ns = range(-r, r + 1) if abs(m) == r else (-r, r)
            for n in ns:
                if z2_sign(s1, m, n) != z2_sign(s2, m, n):
                    return (m, n)
    return None


def format_z2_order(spec: Z2Order) -> str:
    if isinstance(spec, Z2Irrational):
        c = spec.coefficient
        suffix = "" if spec.positive_side == 1 else ";-"
        return f"z2=irr({c.p},{c.q},{c.r},{c.d}{suffix})"
    ks = "+" if spec.kernel_sign == 1 else "-"
    return f"z2=rat({spec.a},{spec.b};{ks})"


_Z2_IRR_RE = re.compile(
    r"z2=irr\(\s*(-?\d+)\s*,\s*(-?\d+)\s*,\s*(-?\d+)\s*,\s*(-?\d+)\s*(?:;\s*([+-])\s*)?\)\s*$"
)
_Z2_RAT_RE = re.compile(r"z2=rat\(\s*(-?\d+)\s*,\s*(-?\d+)\s*;\s*([+-])\s*\)\s*$")


def parse_z2_order(text: str, offset: int = 0) -> Z2Order:
    """Parse 'z2=irr(p,q,r,d)', 'z2=irr(p,q,r,d;-)' or 'z2=rat(a,b;+)'."""
    s = text.strip()
    m = _Z2_IRR_RE.match(s)
    if m:
        lam = QuadraticIrrational(*(int(m.group(i)) for i in range(1, 5)))
        side = -1 if m.group(5) == "-" else 1
        return Z2Irrational(lam, side)
    m = _Z2_RAT_RE.match(s)
    if m:
        return Z2Rational(int(m.group(1)), int(m.group(2)), 1 if m.group(3) == "+" else -1)
    raise ParseError(
        "expected a Z^2 ordering like 'z2=irr(0,1,1,2)' or 'z2=rat(1,0;+)'", offset
    )
