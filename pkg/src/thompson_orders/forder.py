"""Bi-ordering comparators on F.

Twelve families: eight isolated orderings (four reading the slope at a
support endpoint, four "exotic" ones that flip the rule away from the
interval endpoint), and four families of quotient orderings that order
by the abelianization image through a Z^2 ordering and fall back to a
derived-subgroup comparator inside the kernel.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Callable, Union

from .dyadic import D_ONE, D_ZERO, Cmp, QuadraticIrrational, Sign, quad_linear_sign, sign_of
from .element import FElement, compose
from .errors import IdentityInput, IdentityReference, ParseError
from .z2order import (
    Z2Irrational,
    Z2Order,
    Z2Rational,
    format_z2_order,
    parse_z2_order,
    z2_negate,
    z2_sign,
    z2_swap,
)


class FPrimeTag(enum.Enum):
    """The four bi-orderings of the derived subgroup F'.

    Positivity rules, writing s- for the right slope at the left
    support endpoint and s+ for the left slope at the right one:
    xminus:+ means s- > 1, xminus:- means s- < 1, xplus:+ means
    s+ < 1, and xplus:- means s+ > 1.
    """

    XMINUS_PLUS = "xminus:+"
    XMINUS_MINUS = "xminus:-"
    XPLUS_PLUS = "xplus:+"
    XPLUS_MINUS = "xplus:-"


class IsolatedTag(enum.Enum):
    """The eight isolated bi-orderings of F.

    The first four apply the F' rules to all of F.  The exotic four
    split on whether the support reaches the interval endpoint: for
    exo:0xminus:+- an element is positive iff its support starts at 0
    with slope > 1 there, or starts later with slope < 1 (and the
    other three are the analogous combinations at either end).
    """

    XMINUS_PLUS = "xminus:+"
    XMINUS_MINUS = "xminus:-"
    XPLUS_PLUS = "xplus:+"
    XPLUS_MINUS = "xplus:-"
    EXO_0XMINUS_PM = "exo:0xminus:+-"
    EXO_0XMINUS_MP = "exo:0xminus:-+"
    EXO_1XPLUS_PM = "exo:1xplus:+-"
    EXO_1XPLUS_MP = "exo:1xplus:-+"


@dataclass(frozen=True)
class IsolatedOrder:
    tag: IsolatedTag


@dataclass(frozen=True)
class LambdaOrder:
    """Order by the abelianization through a Z^2 ordering; elements of
    the derived subgroup are ordered by the interior comparator."""

    interior: FPrimeTag
    fiber: Z2Order


FOrderSpec = Union[IsolatedOrder, LambdaOrder]


def fprime_sign(tag: FPrimeTag, f: FElement) -> Sign:
    """Sign of f under a derived-subgroup rule (defined on all of F)."""
    sb = f.support_bounds()
    if sb is None:
        return Sign.ZERO
    if tag is FPrimeTag.XMINUS_PLUS:
        return Sign.POS if sb.slope_at_minus.exponent > 0 else Sign.NEG
    if tag is FPrimeTag.XMINUS_MINUS:
        return Sign.POS if sb.slope_at_minus.exponent < 0 else Sign.NEG
    if tag is FPrimeTag.XPLUS_PLUS:
        return Sign.POS if sb.slope_at_plus.exponent < 0 else Sign.NEG
    return Sign.POS if sb.slope_at_plus.exponent > 0 else Sign.NEG


def _isolated_sign(tag: IsolatedTag, f: FElement) -> Sign:
    sb = f.support_bounds()
    if sb is None:
        return Sign.ZERO
    if tag is IsolatedTag.XMINUS_PLUS:
        return Sign.POS if sb.slope_at_minus.exponent > 0 else Sign.NEG
    if tag is IsolatedTag.XMINUS_MINUS:
        return Sign.POS if sb.slope_at_minus.exponent < 0 else Sign.NEG
    if tag is IsolatedTag.XPLUS_PLUS:
        return Sign.POS if sb.slope_at_plus.exponent < 0 else Sign.NEG
    if tag is IsolatedTag.XPLUS_MINUS:
        return Sign.POS if sb.slope_at_plus.exponent > 0 else Sign.NEG
    if tag is IsolatedTag.EXO_0XMINUS_PM:
        e = sb.slope_at_minus.exponent
        pos = e > 0 if sb.x_minus == D_ZERO else e < 0
        return Sign.POS if pos else Sign.NEG
    if tag is IsolatedTag.EXO_0XMINUS_MP:
        e = sb.slope_at_minus.exponent
        pos = e < 0 if sb.x_minus == D_ZERO else e > 0
        return Sign.POS if pos else Sign.NEG
    if tag is IsolatedTag.EXO_1XPLUS_PM:
        e = sb.slope_at_plus.exponent
        pos = e < 0 if sb.x_plus == D_ONE else e > 0
        return Sign.POS if pos else Sign.NEG
    # EXO_1XPLUS_MP
    e = sb.slope_at_plus.exponent
    pos = e > 0 if sb.x_plus == D_ONE else e < 0
    return Sign.POS if pos else Sign.NEG


def sign(spec: FOrderSpec, f: FElement) -> Sign:
    """Sign of f under the ordering; ZERO iff f is the identity."""
    if isinstance(spec, IsolatedOrder):
        return _isolated_sign(spec.tag, f)
    m, n = f.abelianize()
    if m == 0 and n == 0:
        return fprime_sign(spec.interior, f)
    return z2_sign(spec.fiber, m, n)


def compare(spec: FOrderSpec, f: FElement, g: FElement) -> Cmp:
    """Compare two elements: f > g iff g^-1 f is positive."""
    if f == g:
        return Cmp.EQ
    return Cmp(int(sign(spec, compose(g.inverse(), f))))


SignFunction = Callable[[FElement], Sign]


_CONJ_ISOLATED = {
    IsolatedTag.XMINUS_PLUS: IsolatedTag.XMINUS_MINUS,
    IsolatedTag.XMINUS_MINUS: IsolatedTag.XMINUS_PLUS,
    IsolatedTag.XPLUS_PLUS: IsolatedTag.XPLUS_MINUS,
    IsolatedTag.XPLUS_MINUS: IsolatedTag.XPLUS_PLUS,
    IsolatedTag.EXO_0XMINUS_PM: IsolatedTag.EXO_0XMINUS_MP,
    IsolatedTag.EXO_0XMINUS_MP: IsolatedTag.EXO_0XMINUS_PM,
    IsolatedTag.EXO_1XPLUS_PM: IsolatedTag.EXO_1XPLUS_MP,
    IsolatedTag.EXO_1XPLUS_MP: IsolatedTag.EXO_1XPLUS_PM,
}

_CONJ_FPRIME = {
    FPrimeTag.XMINUS_PLUS: FPrimeTag.XMINUS_MINUS,
    FPrimeTag.XMINUS_MINUS: FPrimeTag.XMINUS_PLUS,
    FPrimeTag.XPLUS_PLUS: FPrimeTag.XPLUS_MINUS,
    FPrimeTag.XPLUS_MINUS: FPrimeTag.XPLUS_PLUS,
}

_REFLECT_ISOLATED = {
    IsolatedTag.XMINUS_PLUS: IsolatedTag.XPLUS_MINUS,
    IsolatedTag.XPLUS_MINUS: IsolatedTag.XMINUS_PLUS,
    IsolatedTag.XMINUS_MINUS: IsolatedTag.XPLUS_PLUS,
    IsolatedTag.XPLUS_PLUS: IsolatedTag.XMINUS_MINUS,
    IsolatedTag.EXO_0XMINUS_PM: IsolatedTag.EXO_1XPLUS_MP,
    IsolatedTag.EXO_1XPLUS_MP: IsolatedTag.EXO_0XMINUS_PM,
    IsolatedTag.EXO_0XMINUS_MP: IsolatedTag.EXO_1XPLUS_PM,
    IsolatedTag.EXO_1XPLUS_PM: IsolatedTag.EXO_0XMINUS_MP,
}

_REFLECT_FPRIME = {
    FPrimeTag.XMINUS_PLUS: FPrimeTag.XPLUS_MINUS,
    FPrimeTag.XPLUS_MINUS: FPrimeTag.XMINUS_PLUS,
    FPrimeTag.XMINUS_MINUS: FPrimeTag.XPLUS_PLUS,
    FPrimeTag.XPLUS_PLUS: FPrimeTag.XMINUS_MINUS,
}

_RESTRICT_ISOLATED = {
    IsolatedTag.XMINUS_PLUS: FPrimeTag.XMINUS_PLUS,
    IsolatedTag.XMINUS_MINUS: FPrimeTag.XMINUS_MINUS,
    IsolatedTag.XPLUS_PLUS: FPrimeTag.XPLUS_PLUS,
    IsolatedTag.XPLUS_MINUS: FPrimeTag.XPLUS_MINUS,
    # away from the interval endpoint the exotic rule is the flipped one
    IsolatedTag.EXO_0XMINUS_PM: FPrimeTag.XMINUS_MINUS,
    IsolatedTag.EXO_0XMINUS_MP: FPrimeTag.XMINUS_PLUS,
    IsolatedTag.EXO_1XPLUS_PM: FPrimeTag.XPLUS_MINUS,
    IsolatedTag.EXO_1XPLUS_MP: FPrimeTag.XPLUS_PLUS,
}

_CONRAD_ISOLATED = {
    IsolatedTag.XMINUS_PLUS: (1, 0),
    IsolatedTag.EXO_0XMINUS_PM: (1, 0),
    IsolatedTag.XMINUS_MINUS: (-1, 0),
    IsolatedTag.EXO_0XMINUS_MP: (-1, 0),
    IsolatedTag.XPLUS_MINUS: (0, 1),
    IsolatedTag.EXO_1XPLUS_MP: (0, 1),
    IsolatedTag.XPLUS_PLUS: (0, -1),
    IsolatedTag.EXO_1XPLUS_PM: (0, -1),
}


def conjugate_spec(spec: FOrderSpec) -> FOrderSpec:
    """The ordering whose sign function is the pointwise negation."""
    if isinstance(spec, IsolatedOrder):
        return IsolatedOrder(_CONJ_ISOLATED[spec.tag])
    return LambdaOrder(_CONJ_FPRIME[spec.interior], z2_negate(spec.fiber))


def reflect_spec(spec: FOrderSpec) -> FOrderSpec:
    """The pullback under the reflection automorphism.

    Satisfies sign(reflect_spec(s), f) == sign(s, reflect(f)); on the
    quotient families the Z^2 fiber gets its coordinates swapped.
    """
    if isinstance(spec, IsolatedOrder):
        return IsolatedOrder(_REFLECT_ISOLATED[spec.tag])
    return LambdaOrder(_REFLECT_FPRIME[spec.interior], z2_swap(spec.fiber))


def restrict_to_fprime(spec: FOrderSpec) -> FPrimeTag:
    """The derived-subgroup comparator the ordering restricts to."""
    if isinstance(spec, IsolatedOrder):
        return _RESTRICT_ISOLATED[spec.tag]
    return spec.interior


def as_isolated(tag: FPrimeTag) -> IsolatedOrder:
    """The derived-subgroup rule applied to all of F, as an ordering spec."""
    return IsolatedOrder(IsolatedTag[tag.name])


ConradDirection = tuple  # (int, int) or (QuadraticIrrational, int)


def conrad_direction(spec: FOrderSpec) -> ConradDirection:
    """Direction (a, b) of the order's homomorphism to the reals,
    f -> a*log2(right slope at 0) + b*log2(left slope at 1).

    Returned unnormalized but sign-canonical; exact coordinates (the
    irrational fibers give a quadratic-irrational first coordinate).
    """
    if isinstance(spec, IsolatedOrder):
        return _CONRAD_ISOLATED[spec.tag]
    fiber = spec.fiber
    if isinstance(fiber, Z2Rational):
        return (fiber.a, fiber.b)
    if fiber.positive_side == 1:
        return (fiber.coefficient, 1)
    return (-fiber.coefficient, -1)


def conrad_pairing_sign(direction: ConradDirection, m: int, n: int) -> Sign:
    """Exact sign of a*m + b*n for a direction (a, b)."""
    a, b = direction
    if isinstance(a, QuadraticIrrational):
        return quad_linear_sign(a, m, b * n)
    return sign_of(a * m + b * n)


def extension_cone_member(f: FElement) -> bool:
    """Membership in the cone assembled from the xminus:+ rule outside
    {slope 1 at 0} and the conjugate rule inside it.

    Extensionally this is positivity under exo:0xminus:+-.
    """
    if f.is_identity:
        raise IdentityInput("the identity belongs to no positive cone")
    m = f.abelianize()[0]
    if m != 0:
        return m > 0
    return f.support_bounds().slope_at_minus.exponent < 0


def conrad_demo_sign(g_ref: FElement, f: FElement) -> Sign:
    """A Conradian left-order that is not bi-invariant.

    Positive iff the support of f starts away from where g_ref's starts
    and climbs (slope > 1), or starts at the same point and descends.
    """
    ref_sb = g_ref.support_bounds()
    if ref_sb is None:
        raise IdentityReference("the reference element must not be the identity")
    sb = f.support_bounds()
    if sb is None:
        return Sign.ZERO
    e = sb.slope_at_minus.exponent
    if sb.x_minus == ref_sb.x_minus:
        return Sign.POS if e < 0 else Sign.NEG
    return Sign.POS if e > 0 else Sign.NEG


def isolated_specs() -> tuple[IsolatedOrder, ...]:
    return tuple(IsolatedOrder(tag) for tag in IsolatedTag)


def standard_grid() -> tuple[FOrderSpec, ...]:
    """The 8 isolated orderings plus a 16-point grid of quotient
    orderings (4 interiors x 4 representative fibers)."""
    fibers = (
        Z2Irrational(QuadraticIrrational.sqrt(2)),
        Z2Rational(1, 0, 1),
        Z2Rational(0, 1, -1),
        Z2Rational(1, -1, 1),
    )
    lams = tuple(LambdaOrder(i, f) for i in FPrimeTag for f in fibers)
    return isolated_specs() + lams


def format_order_spec(spec: FOrderSpec) -> str:
    if isinstance(spec, IsolatedOrder):
        return spec.tag.value
    return f"lambda:{spec.interior.value};{format_z2_order(spec.fiber)}"


def parse_order_spec(text: str) -> FOrderSpec:
    """Parse an ordering spec.

    Grammar: one of the eight isolated tags ('xminus:+', 'xplus:-',
    'exo:0xminus:+-', ...) or 'lambda:<fprime-tag>;<z2 spec>'.
    """
    s = text.strip()
    lead = len(text) - len(text.lstrip())
    for tag in IsolatedTag:
        if s == tag.value:
            return IsolatedOrder(tag)
    if s.startswith("lambda:"):
        rest = s[len("lambda:"):]
        semi = rest.find(";")
        if semi < 0:
            raise ParseError("expected ';' between the interior tag and the z2 fiber", lead + len(s))
        tag_text = rest[:semi]
        for t in FPrimeTag:
            if tag_text == t.value:
                interior = t
                break
        else:
            raise ParseError(f"unknown interior tag {tag_text!r}", lead + len("lambda:"))
        fiber = parse_z2_order(rest[semi + 1:], offset=lead + len("lambda:") + semi + 1)
        return LambdaOrder(interior, fiber)
    raise ParseError(f"unknown ordering spec {s!r}", lead)
