"""Desk-scale exploration of the space of bi-orderings: Cayley balls,
the 1/2^n metric, isolation witnesses, and accumulation experiments.

Elements inside a ball are kept in a canonical order (word length at
which BFS first found them, then the lexicographic breakpoint
encoding), so sign vectors and distances are reproducible.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Optional, Sequence

from .dyadic import QuadraticIrrational, Sign
from .element import IDENTITY, X0, X1, FElement, compose
from .errors import RadiusTooLarge
from .forder import FOrderSpec, FPrimeTag, LambdaOrder, sign
from .z2order import Z2Irrational, Z2Rational

MAX_RADIUS = 10

_GENERATOR_STEPS = (X0, X0.inverse(), X1, X1.inverse())

_layers: list[list[FElement]] = [[IDENTITY]]
_first_seen: dict[FElement, int] = {IDENTITY: 0}
_ball_cache: dict[int, "Ball"] = {}


@dataclass(frozen=True)
class Ball:
    """All elements of word length <= radius, in canonical order."""

    radius: int
    elements: tuple[FElement, ...]
    word_lengths: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.elements)

    def nonidentity(self):
        """(element, first word length) pairs, identity skipped."""
        return zip(self.elements[1:], self.word_lengths[1:])


def _check_radius(n: int) -> None:
    if not isinstance(n, int) or n < 0:
        raise RadiusTooLarge(f"radius must be a non-negative integer, got {n!r}")
    if n > MAX_RADIUS:
        raise RadiusTooLarge(f"radius {n} exceeds the desk-scale cap {MAX_RADIUS}")


def _extend_layers(n: int) -> None:
    while len(_layers) <= n:
        fresh = []
        for e in _layers[-1]:
            for step in _GENERATOR_STEPS:
                c = compose(e, step)
                if c not in _first_seen:
                    _first_seen[c] = len(_layers)
                    fresh.append(c)
        fresh.sort(key=lambda el: el._key)
        _layers.append(fresh)


def ball(n: int) -> Ball:
    """The ball of radius n over the generating set {x0, x1} and inverses."""
    _check_radius(n)
    got = _ball_cache.get(n)
    if got is None:
        _extend_layers(n)
        elements = []
        lengths = []
        for layer, members in enumerate(_layers[: n + 1]):
            elements.extend(members)
            lengths.extend([layer] * len(members))
        got = _ball_cache[n] = Ball(n, tuple(elements), tuple(lengths))
    return got


def sign_vector(spec: FOrderSpec, n: int) -> tuple[Sign, ...]:
    """Signs of the non-identity elements of ball(n), in canonical order."""
    b = ball(n)
    return tuple(sign(spec, e) for e in b.elements[1:])


def _first_disagreement(s1: FOrderSpec, s2: FOrderSpec, max_n: int) -> Optional[int]:
    """Smallest radius whose ball sees a sign disagreement, or None."""
    for e, length in ball(max_n).nonidentity():
        if sign(s1, e) != sign(s2, e):
            return length
    return None


@dataclass(frozen=True)
class Distance:
    """Distance between two orderings, measured as 1/2^radius.

    separated=False means the orderings agree on every element of the
    inspected ball; radius then records the inspected bound.
    """

    separated: bool
    radius: int

    @property
    def value_exponent(self) -> int:
        """n with distance <= 1/2^n (exact when separated)."""
        return self.radius if self.separated else self.radius + 1

    def __str__(self) -> str:
        if self.separated:
            return f"1/2^{self.radius}"
        return f"agree-through({self.radius})"


def distance(s1: FOrderSpec, s2: FOrderSpec, max_n: int) -> Distance:
    """1/2^n for the first ball radius n <= max_n where sign vectors
    differ, or the agree-through marker."""
    _check_radius(max_n)
    hit = _first_disagreement(s1, s2, max_n)
    if hit is None:
        return Distance(False, max_n)
    return Distance(True, hit)


@dataclass(frozen=True)
class IsolationWitness:
    """Outcome of separating one ordering from a list of competitors."""

    target: FOrderSpec
    max_n: int
    competitor_radii: tuple[Optional[int], ...]

    @property
    def separated(self) -> bool:
        return all(r is not None for r in self.competitor_radii)

    @property
    def radius(self) -> Optional[int]:
        """Least n with the target's sign vector on ball(n) different
        from every competitor's; None when some competitor survives."""
        if not self.separated:
            return None
        return max(self.competitor_radii)

    def __str__(self) -> str:
        if self.separated:
            return f"witness-radius({self.radius})"
        return f"unseparated(max_n={self.max_n})"


def isolation_witness(
    target: FOrderSpec, competitors: Sequence[FOrderSpec], max_n: int
) -> IsolationWitness:
    """Search ball(max_n) for sign disagreements against each competitor."""
    _check_radius(max_n)
    if not competitors:
        raise ValueError("need at least one competitor")
    b = ball(max_n)
    target_signs = [sign(target, e) for e in b.elements[1:]]
    radii = []
    for comp in competitors:
        found = None
        for i, (e, length) in enumerate(b.nonidentity()):
            if sign(comp, e) != target_signs[i]:
                found = length
                break
        radii.append(found)
    return IsolationWitness(target, max_n, tuple(radii))


def lambda_accumulation(
    interior: FPrimeTag,
    reference: QuadraticIrrational,
    approach: Sequence[QuadraticIrrational],
    max_n: int,
) -> list[Distance]:
    """Distances from the quotient orderings with fibers approach[k] to
    the one with the reference fiber, all with the same interior."""
    ref_spec = LambdaOrder(interior, Z2Irrational(reference))
    return [
        distance(LambdaOrder(interior, Z2Irrational(lam)), ref_spec, max_n)
        for lam in approach
    ]


def sample_lambda_grid(count: int, seed: int) -> list[LambdaOrder]:
    """Seeded sample of quotient orderings: random rational directions
    with |a|, |b| <= 10 and quadratic irrationals (p + q*sqrt(2))/r with
    |p|, |q| <= 5, 1 <= r <= 5, q != 0."""
    rng = random.Random(seed)
    interiors = tuple(FPrimeTag)
    out: list[LambdaOrder] = []
    while len(out) < count:
        interior = interiors[rng.randrange(4)]
        if rng.randrange(2) == 0:
            a = rng.randint(-10, 10)
            b = rng.randint(-10, 10)
            if (a, b) == (0, 0):
                continue
            fiber: Z2Irrational | Z2Rational = Z2Rational(a, b, 1 if rng.randrange(2) == 0 else -1)
        else:
            p = rng.randint(-5, 5)
            q = rng.randint(-5, 5)
            if q == 0:
                continue
            r = rng.randint(1, 5)
            fiber = Z2Irrational(QuadraticIrrational(p, q, r, 2))
        out.append(LambdaOrder(interior, fiber))
    return out
