"""Thompson's group F as canonical breakpoint maps.

An element is an increasing piecewise-linear bijection of [0,1] with
dyadic breakpoints and power-of-two slopes, stored as the minimal
breakpoint list (adjacent pieces always have different slopes).
Canonical form makes structural equality coincide with equality of
group elements, which settles the word problem for free.

Composition convention: the word "x0 x1" denotes x0 after x1, i.e.
compose(x0, x1) is the map x -> x0(x1(x)).
"""

from __future__ import annotations

import random
import re
from typing import Iterable, NamedTuple, Optional, Sequence

from .dyadic import D_ONE, D_ZERO, DyadicRational, PowerOfTwo, _trailing_zeros
from .errors import (
    BadEndpoints,
    BadInterval,
    NotDyadic,
    NotMonotone,
    NotPowerOfTwoSlope,
    OutOfRange,
    ParseError,
)

Point = tuple[DyadicRational, DyadicRational]


def _segment_slope(p0: Point, p1: Point) -> int:
    """log2 of the slope between two points; must be an exact power of two.

    With dt = nt/2^et and dv = nv/2^ev, the ratio dv/dt is a power of
    two exactly when nt and nv share their odd part.
    """
    dt = p1[0] - p0[0]
    dv = p1[1] - p0[1]
    nt, et = dt.numerator, dt.exponent
    nv, ev = dv.numerator, dv.exponent
    kt = _trailing_zeros(nt)
    kv = _trailing_zeros(nv)
    if (nt >> kt) != (nv >> kv):
        raise NotPowerOfTwoSlope(f"slope ({dv})/({dt}) is not an integer power of two")
    return (kv - ev) - (kt - et)


def _slopes_of(pts: Sequence[Point]) -> list[int]:
    return [_segment_slope(pts[i], pts[i + 1]) for i in range(len(pts) - 1)]


class SupportBounds(NamedTuple):
    x_minus: DyadicRational
    slope_at_minus: PowerOfTwo
    x_plus: DyadicRational
    slope_at_plus: PowerOfTwo


_UNSET = object()


class FElement:
    """A group element, canonicalized at construction.

    Use :func:`from_breakpoints`, :func:`from_word` or the parsers to
    build elements; the constructor accepts a raw breakpoint sequence
    and both validates and canonicalizes it.
    """

    __slots__ = ("breakpoints", "_slopes", "_key", "_hash", "_support")

    def __init__(self, points: Sequence[Point]) -> None:
        pts = tuple(points)
        if len(pts) < 2:
            raise BadEndpoints("need at least the two endpoint breakpoints")
        if pts[0][0] != D_ZERO or pts[0][1] != D_ZERO or pts[-1][0] != D_ONE or pts[-1][1] != D_ONE:
            raise BadEndpoints("breakpoints must run from (0,0) to (1,1)")
        for (t0, v0), (t1, v1) in zip(pts, pts[1:]):
            if not (t0 < t1 and v0 < v1):
                raise NotMonotone(f"breakpoints must increase strictly: ({t0},{v0}) then ({t1},{v1})")
        slopes = _slopes_of(pts)
        kept = [pts[0]]
        kept_slopes = [slopes[0]]
        for i in range(1, len(pts) - 1):
            if slopes[i] != kept_slopes[-1]:
                kept.append(pts[i])
                kept_slopes.append(slopes[i])
        kept.append(pts[-1])
        self.breakpoints: tuple[Point, ...] = tuple(kept)
        self._slopes = tuple(kept_slopes)
        self._key = tuple(
            (t.numerator, t.exponent, v.numerator, v.exponent) for t, v in self.breakpoints
        )
        self._hash = hash(self._key)
        self._support = _UNSET

    @property
    def is_identity(self) -> bool:
        return len(self.breakpoints) == 2

    @property
    def is_derived(self) -> bool:
        """True when the element has slope 1 at both endpoints,
        i.e. lies in the derived subgroup."""
        return self._slopes[0] == 0 and self._slopes[-1] == 0

    def abelianize(self) -> tuple[int, int]:
        """(log2 of the right slope at 0, log2 of the left slope at 1)."""
        return (self._slopes[0], self._slopes[-1])

    def _segment_index(self, x: DyadicRational) -> int:
        # largest i with breakpoints[i].t <= x, capped at the last segment
        pts = self.breakpoints
        lo, hi = 0, len(pts) - 2
        while lo < hi:
            mid = (lo + hi + 1) // 2
            if pts[mid][0] <= x:
                lo = mid
            else:
                hi = mid - 1
        return lo

    def __call__(self, x) -> DyadicRational:
        """Exact image of a dyadic point of [0,1]."""
        if isinstance(x, int):
            x = DyadicRational(x)
        if not isinstance(x, DyadicRational):
            raise NotDyadic(f"cannot evaluate at {x!r}")
        if x < D_ZERO or x > D_ONE:
            raise OutOfRange(f"{x} is outside [0,1]")
        i = self._segment_index(x)
        t0, v0 = self.breakpoints[i]
        return v0 + (x - t0).mul_pow2(self._slopes[i])

    def inverse(self) -> "FElement":
        """The inverse map: swap the coordinates of every breakpoint."""
        return FElement(tuple((v, t) for t, v in self.breakpoints))

    __invert__ = inverse

    def __mul__(self, other) -> "FElement":
        if not isinstance(other, FElement):
            return NotImplemented
        return compose(self, other)

    def __pow__(self, n: int) -> "FElement":
        if n == 0:
            return IDENTITY
        base = self if n > 0 else self.inverse()
        out = base
        for _ in range(abs(n) - 1):
            out = compose(out, base)
        return out

    def support_bounds(self) -> Optional[SupportBounds]:
        """Endpoints of the support with their one-sided slopes.

        x_minus is the leftmost point whose right slope differs from 1,
        x_plus the rightmost point whose left slope differs from 1.
        Returns None for the identity, whose support is empty.
        """
        if self._support is _UNSET:
            first = last = None
            for i, s in enumerate(self._slopes):
                if s != 0:
                    if first is None:
                        first = i
                    last = i
            if first is None:
                self._support = None
            else:
                self._support = SupportBounds(
                    self.breakpoints[first][0],
                    PowerOfTwo(self._slopes[first]),
                    self.breakpoints[last + 1][0],
                    PowerOfTwo(self._slopes[last]),
                )
        return self._support

    def lateral_slopes(self, x) -> tuple[Optional[PowerOfTwo], Optional[PowerOfTwo]]:
        """Slopes of the pieces immediately left and right of x.

        The missing side at x = 0 and x = 1 is None.
        """
        if isinstance(x, int):
            x = DyadicRational(x)
        if x < D_ZERO or x > D_ONE:
            raise OutOfRange(f"{x} is outside [0,1]")
        if x == D_ZERO:
            return (None, PowerOfTwo(self._slopes[0]))
        if x == D_ONE:
            return (PowerOfTwo(self._slopes[-1]), None)
        i = self._segment_index(x)
        if self.breakpoints[i][0] == x:
            return (PowerOfTwo(self._slopes[i - 1]), PowerOfTwo(self._slopes[i]))
        return (PowerOfTwo(self._slopes[i]), PowerOfTwo(self._slopes[i]))

    def __eq__(self, other) -> bool:
        if not isinstance(other, FElement):
            return NotImplemented
        return self._key == other._key

    def __hash__(self) -> int:
        return self._hash

    def __str__(self) -> str:
        return "[" + ",".join(f"({t},{v})" for t, v in self.breakpoints) + "]"

    def __repr__(self) -> str:
        return f"FElement({self})"


def _pl_compose(outer, outer_slopes, inner, inner_slopes):
    """Compose two piecewise-linear breakpoint lists (outer after inner).

    The inner map's value range must equal the outer map's domain.
    Returns the raw breakpoint tuple of the composite (not canonicalized).
    """
    xs = [t for t, _ in inner]
    # pull the outer map's break positions back through the inner map
    pulled = []
    j = 0
    j_max = len(inner) - 2
    for ot, _ in outer:
        while j < j_max and inner[j + 1][1] < ot:
            j += 1
        t0, v0 = inner[j]
        pulled.append(t0 + (ot - v0).mul_pow2(-inner_slopes[j]))
    # merge the two sorted coordinate lists, dropping duplicates
    merged = []
    i = k = 0
    while i < len(xs) or k < len(pulled):
        if k >= len(pulled):
            nxt = xs[i]
            i += 1
        elif i >= len(xs):
            nxt = pulled[k]
            k += 1
        else:
            a, b = xs[i], pulled[k]
            if a < b:
                nxt, i = a, i + 1
            elif b < a:
                nxt, k = b, k + 1
            else:
                nxt, i, k = a, i + 1, k + 1
        if merged and merged[-1] == nxt:
            continue
        merged.append(nxt)
    # evaluate the composite along the merged grid
    pts = []
    ig = io = 0
    g_max = len(inner) - 2
    o_max = len(outer) - 2
    for x in merged:
        while ig < g_max and inner[ig + 1][0] < x:
            ig += 1
        t0, v0 = inner[ig]
        y = v0 + (x - t0).mul_pow2(inner_slopes[ig])
        while io < o_max and outer[io + 1][0] < y:
            io += 1
        u0, w0 = outer[io]
        pts.append((x, w0 + (y - u0).mul_pow2(outer_slopes[io])))
    return tuple(pts)


def compose(f: FElement, g: FElement) -> FElement:
    """The map x -> f(g(x)), canonicalized."""
    return FElement(_pl_compose(f.breakpoints, f._slopes, g.breakpoints, g._slopes))


def inverse(f: FElement) -> FElement:
    return f.inverse()

def conjugate(f: FElement, g: FElement) -> FElement:
    """g^-1 f g."""
    return compose(compose(g.inverse(), f), g)


def commutator(f: FElement, g: FElement) -> FElement:
    """f^-1 g^-1 f g."""
    return compose(compose(compose(f.inverse(), g.inverse()), f), g)


def reflect(f: FElement) -> FElement:
    """Conjugate by the reflection x -> 1 - x (an automorphism of F)."""
    return FElement(tuple((D_ONE - t, D_ONE - v) for t, v in reversed(f.breakpoints)))


def _coerce_point(pair) -> Point:
    try:
        a, b = pair
    except (TypeError, ValueError):
        raise NotDyadic(f"breakpoint {pair!r} is not a coordinate pair") from None
    out = []
    for c in (a, b):
        if isinstance(c, int):
            c = DyadicRational(c)
        if not isinstance(c, DyadicRational):
            raise NotDyadic(f"coordinate {c!r} is not a dyadic rational")
        out.append(c)
    return (out[0], out[1])


def from_breakpoints(pairs: Iterable) -> FElement:
    """Build an element from (t, v) pairs of dyadic rationals (or ints)."""
    return FElement(tuple(_coerce_point(p) for p in pairs))


def embed_interval(f: FElement, lo, hi) -> FElement:
    """Copy f into the closed dyadic interval [lo, hi], identity outside.

    The identification of [0,1] with [lo, hi] is affine when hi - lo is
    a power of two.  Otherwise the binary expansion of hi - lo is split
    into power-of-two pieces, [0,1] is partitioned into the standard
    dyadic intervals [0,1/2],[1/2,3/4],... of matching count, and the
    pieces are matched affinely left to right.  One-sided slopes at the
    images of the support endpoints are preserved either way.
    """
    if isinstance(lo, int):
        lo = DyadicRational(lo)
    if isinstance(hi, int):
        hi = DyadicRational(hi)
    if not isinstance(lo, DyadicRational) or not isinstance(hi, DyadicRational):
        raise BadInterval("interval endpoints must be dyadic rationals")
    if not (D_ZERO <= lo and lo < hi and hi <= D_ONE):
        raise BadInterval(f"[{lo},{hi}] is not a closed subinterval of [0,1]")

    width = hi - lo
    n, e = width.numerator, width.exponent
    lengths = [DyadicRational(1, e - b) for b in range(n.bit_length() - 1, -1, -1) if (n >> b) & 1]
    k = len(lengths)
    src = [D_ZERO] + [DyadicRational((1 << i) - 1, i) for i in range(1, k)] + [D_ONE]
    tgt = [lo]
    for length in lengths:
        tgt.append(tgt[-1] + length)
    phi = tuple(zip(src, tgt))
    phi_slopes = _slopes_of(phi)
    phi_inv = tuple((v, t) for t, v in phi)
    phi_inv_slopes = [-s for s in phi_slopes]

    mid = _pl_compose(f.breakpoints, f._slopes, phi_inv, phi_inv_slopes)
    mid_slopes = _slopes_of(mid)
    core = _pl_compose(phi, phi_slopes, mid, mid_slopes)

    pts = []
    if lo > D_ZERO:
        pts.append((D_ZERO, D_ZERO))
    pts.extend(core)
    if hi < D_ONE:
        pts.append((D_ONE, D_ONE))
    return FElement(tuple(pts))


IDENTITY = FElement(((D_ZERO, D_ZERO), (D_ONE, D_ONE)))

X0 = from_breakpoints(
    [(0, 0), (DyadicRational(1, 1), DyadicRational(1, 2)), (DyadicRational(3, 2), DyadicRational(1, 1)), (1, 1)]
)
X1 = from_breakpoints(
    [
        (0, 0),
        (DyadicRational(1, 1), DyadicRational(1, 1)),
        (DyadicRational(3, 2), DyadicRational(5, 3)),
        (DyadicRational(7, 3), DyadicRational(3, 2)),
        (1, 1),
    ]
)

GENERATOR_NAMES = ("x0", "x1")


class Word:
    """Formal word in the generators x0, x1 with integer exponents.

    Adjacent literals over the same generator merge and zero exponents
    drop, so equal words have equal literal tuples.
    """

    __slots__ = ("literals",)

    def __init__(self, literals: Iterable[tuple[int, int]] = ()) -> None:
        merged: list[tuple[int, int]] = []
        for gen, exp in literals:
            if gen not in (0, 1):
                raise ValueError(f"unknown generator index {gen}")
            if exp == 0:
                continue
            if merged and merged[-1][0] == gen:
                total = merged[-1][1] + exp
                if total == 0:
                    merged.pop()
                else:
                    merged[-1] = (gen, total)
            else:
                merged.append((gen, exp))
        self.literals = tuple(merged)

    def __len__(self) -> int:
        return sum(abs(e) for _, e in self.literals)

    def inverse(self) -> "Word":
        return Word((g, -e) for g, e in reversed(self.literals))

    def __eq__(self, other) -> bool:
        if not isinstance(other, Word):
            return NotImplemented
        return self.literals == other.literals

    def __hash__(self) -> int:
        return hash(self.literals)

    def __str__(self) -> str:
        return " ".join(
            f"x{g}^{e}" if e != 1 else f"x{g}" for g, e in self.literals
        )

    def __repr__(self) -> str:
        return f"Word({self.literals!r})"


_GEN_POWERS: dict[tuple[int, int], FElement] = {(0, 1): X0, (1, 1): X1}


def _generator_power(gen: int, exp: int) -> FElement:
    key = (gen, exp)
    got = _GEN_POWERS.get(key)
    if got is None:
        base = X0 if gen == 0 else X1
        got = _GEN_POWERS[key] = base ** exp
    return got


def from_word(word: Word) -> FElement:
    """Evaluate a word left to right; the rightmost literal acts first."""
    out = IDENTITY
    for gen, exp in word.literals:
        out = compose(out, _generator_power(gen, exp))
    return out


def random_word(rng: random.Random, max_len: int, min_len: int = 0) -> Word:
    """Seeded uniform word: a length in [min_len, max_len], then letters."""
    n = rng.randint(min_len, max_len)
    lits = []
    for _ in range(n):
        pick = rng.randrange(4)
        lits.append((pick >> 1, 1 if pick & 1 == 0 else -1))
    return Word(lits)


_WORD_LITERAL_RE = re.compile(r"x([01])(\^-?\d+)?")


def parse_word(text: str) -> Word:
    """Parse word syntax like 'x0 x1^-1 x0^2'; the empty word is allowed."""
    lits = []
    i = 0
    n = len(text)
    while i < n:
        if text[i].isspace():
            i += 1
            continue
        m = _WORD_LITERAL_RE.match(text, i)
        if not m:
            raise ParseError("expected a generator literal like 'x0' or 'x1^-2'", i)
        exp = int(m.group(2)[1:]) if m.group(2) else 1
        lits.append((int(m.group(1)), exp))
        i = m.end()
    return Word(lits)


_NUM_RE = re.compile(r"-?\d+")


def _skip_ws(text: str, i: int) -> int:
    while i < len(text) and text[i].isspace():
        i += 1
    return i


def _expect(text: str, i: int, ch: str) -> int:
    i = _skip_ws(text, i)
    if i >= len(text) or text[i] != ch:
        raise ParseError(f"expected {ch!r}", i)
    return i + 1


def _parse_dyadic_at(text: str, i: int) -> tuple[DyadicRational, int]:
    i = _skip_ws(text, i)
    m = _NUM_RE.match(text, i)
    if not m:
        raise ParseError("expected a dyadic rational", i)
    num = int(m.group())
    i = m.end()
    if text.startswith("/2^", i):
        i += 3
        m = _NUM_RE.match(text, i)
        if not m or m.group().startswith("-"):
            raise ParseError("expected a non-negative exponent after '/2^'", i)
        return DyadicRational(num, int(m.group())), m.end()
    return DyadicRational(num), i


def parse_breakpoints(text: str) -> FElement:
    """Parse breakpoint-list syntax like '[(0,0),(1/2^1,1/2^2),(1,1)]'."""
    i = _expect(text, 0, "[")
    pairs = []
    while True:
        i = _expect(text, i, "(")
        t, i = _parse_dyadic_at(text, i)
        i = _expect(text, i, ",")
        v, i = _parse_dyadic_at(text, i)
        i = _expect(text, i, ")")
        pairs.append((t, v))
        i = _skip_ws(text, i)
        if i < len(text) and text[i] == ",":
            i += 1
            continue
        break
    i = _expect(text, i, "]")
    i = _skip_ws(text, i)
    if i != len(text):
        raise ParseError("unexpected trailing input", i)
    return FElement(tuple(pairs))


def parse_element(text: str) -> FElement:
    """Parse either element format: a word, or a breakpoint list.

    An empty (or all-whitespace) string denotes the identity.
    """
    stripped = text.strip()
    if not stripped:
        return IDENTITY
    if stripped[0] == "[":
        return parse_breakpoints(text)
    return from_word(parse_word(text))
