"""Batch property suites: runnable checks that the comparators behave
like bi-orderings and satisfy the structural identities.

Every suite is deterministic given a seed; failures carry replayable
witnesses in the element text format.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence, Union

from .dyadic import Sign
from .element import FElement, X1, Word, compose, conjugate, from_word, random_word, reflect
from .errors import RadiusTooLarge
from .forder import (
    FOrderSpec,
    IsolatedOrder,
    IsolatedTag,
    as_isolated,
    conrad_demo_sign,
    conrad_direction,
    conrad_pairing_sign,
    extension_cone_member,
    format_order_spec,
    reflect_spec,
    restrict_to_fprime,
    sign,
    standard_grid,
)
from .orderspace import ball

MAX_PAIR_TABLE_RADIUS = 5


@dataclass
class SuiteReport:
    """Result of one property suite: pass iff there are no failures."""

    suite: str
    cases: int
    failures: list[str] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.failures

    def text_lines(self) -> list[str]:
        status = "PASS" if self.passed else "FAIL"
        lines = [
            f"[{status}] {self.suite}: cases={self.cases}"
            f" failures={len(self.failures)} elapsed={self.elapsed:.2f}s"
        ]
        lines.extend(f"    {msg}" for msg in self.failures[:20])
        if len(self.failures) > 20:
            lines.append(f"    ... and {len(self.failures) - 20} more")
        return lines

    def kv_line(self) -> str:
        status = "pass" if self.passed else "fail"
        return (
            f"suite={self.suite} cases={self.cases}"
            f" failures={len(self.failures)} status={status}"
        )


def _merge(name: str, labeled: Sequence[tuple[str, SuiteReport]]) -> SuiteReport:
    merged = SuiteReport(name, 0)
    for label, rep in labeled:
        merged.cases += rep.cases
        merged.failures.extend(f"{label}: {msg}" for msg in rep.failures)
        merged.elapsed += rep.elapsed
    return merged


# -- shared deterministic sample pools --------------------------------

_pair_tables: dict[int, tuple] = {}
_conj_samples: dict[tuple, list] = {}
_conrad_samples: dict[tuple, list] = {}


def _pair_table(radius: int):
    """Products e_j^-1 * e_i for the whole ball, shared across specs."""
    if radius > MAX_PAIR_TABLE_RADIUS:
        raise RadiusTooLarge(
            f"the pairwise product table is capped at radius {MAX_PAIR_TABLE_RADIUS}"
        )
    got = _pair_tables.get(radius)
    if got is None:
        b = ball(radius)
        els = b.elements
        invs = [e.inverse() for e in els]
        prods = [[compose(invs[j], els[i]) for j in range(len(els))] for i in range(len(els))]
        got = _pair_tables[radius] = (b, prods)
    return got


def _nonidentity_sample(rng: random.Random, max_len: int) -> tuple[Word, FElement]:
    while True:
        w = random_word(rng, max_len, min_len=1)
        e = from_word(w)
        if not e.is_identity:
            return w, e


def _conjugation_pool(seed: int, samples: int, max_len: int):
    key = (seed, samples, max_len)
    got = _conj_samples.get(key)
    if got is None:
        rng = random.Random(seed)
        pool = []
        for _ in range(samples):
            wf, f = _nonidentity_sample(rng, max_len)
            wh, h = _nonidentity_sample(rng, max_len)
            pool.append((wf, wh, f, conjugate(f, h)))
        got = _conj_samples[key] = pool
    return got


def _conradian_pool(seed: int, samples: int, max_len: int):
    """(f, g) samples with the four sign-adjusted composites
    (g')^-1 f' g' g' precomputed for f' = f^{+-1}, g' = g^{+-1}."""
    key = (seed, samples, max_len)
    got = _conrad_samples.get(key)
    if got is None:
        rng = random.Random(seed)
        pool = []
        for _ in range(samples):
            wf, f = _nonidentity_sample(rng, max_len)
            wg, g = _nonidentity_sample(rng, max_len)
            f_inv = f.inverse()
            g_inv = g.inverse()
            variants = {}
            for ef, fe in ((1, f), (-1, f_inv)):
                for eg, ge in ((1, g), (-1, g_inv)):
                    t = compose(ge.inverse(), fe)
                    t = compose(compose(t, ge), ge)
                    variants[(ef, eg)] = t
            pool.append((wf, wg, f, g, variants))
        got = _conrad_samples[key] = pool
    return got


# -- suites ------------------------------------------------------------


def run_order_axioms(spec: FOrderSpec, radius: int = 4) -> SuiteReport:
    """Strict total order on ball(radius): equality only on equal
    elements, antisymmetry, totality, and transitivity over all triples
    (checked through the less-than bitmask closure)."""
    t0 = time.perf_counter()
    b, prods = _pair_table(radius)
    els = b.elements
    n = len(els)
    rep = SuiteReport("order-axioms", n * n + n * n * n)
    sg = [[int(sign(spec, prods[i][j])) for j in range(n)] for i in range(n)]
    lt_rows = []
    for i in range(n):
        row_i = sg[i]
        mask = 0
        for j in range(n):
            s = row_i[j]
            if (s == 0) != (i == j):
                rep.failures.append(
                    f"equality defect between {els[i]} and {els[j]} (sign {s})"
                )
            if s != -sg[j][i]:
                rep.failures.append(f"antisymmetry defect between {els[i]} and {els[j]}")
            if s == -1:
                mask |= 1 << j
        lt_rows.append(mask)
    for i in range(n):
        m = lt_rows[i]
        while m:
            low = m & -m
            j = low.bit_length() - 1
            m ^= low
            stray = lt_rows[j] & ~lt_rows[i] & ~(1 << i)
            if stray:
                k = (stray & -stray).bit_length() - 1
                rep.failures.append(
                    f"transitivity defect: {els[i]} < {els[j]} < {els[k]} but not {els[i]} < {els[k]}"
                )
    rep.elapsed = time.perf_counter() - t0
    return rep


def run_bi_invariance(spec: FOrderSpec, samples: int = 1000, seed: int = 0, max_len: int = 6) -> SuiteReport:
    """sign(f) must survive conjugation: sign(h^-1 f h) == sign(f)."""
    t0 = time.perf_counter()
    rep = SuiteReport("bi-invariance", samples)
    for wf, wh, f, conj in _conjugation_pool(seed, samples, max_len):
        if sign(spec, f) != sign(spec, conj):
            rep.failures.append(f"conjugation flips the sign of f='{wf}' by h='{wh}'")
    rep.elapsed = time.perf_counter() - t0
    return rep


OrderLike = Union[FOrderSpec, Callable[[FElement], Sign]]


def _sign_fn(order: OrderLike) -> Callable[[FElement], Sign]:
    if callable(order):
        return order
    return lambda e: sign(order, e)


def run_conradian(order: OrderLike, samples: int = 500, seed: int = 0, max_len: int = 6) -> SuiteReport:
    """g^-1 f g^2 must be positive for positive f, g."""
    t0 = time.perf_counter()
    sf = _sign_fn(order)
    rep = SuiteReport("conradian", samples)
    for wf, wg, f, g, variants in _conradian_pool(seed, samples, max_len):
        ef = 1 if sf(f) == Sign.POS else -1
        eg = 1 if sf(g) == Sign.POS else -1
        if sf(variants[(ef, eg)]) != Sign.POS:
            rep.failures.append(
                f"conradian defect for f='{wf}'^{ef}, g='{wg}'^{eg}"
            )
    rep.elapsed = time.perf_counter() - t0
    return rep


def run_derived_restriction(spec: FOrderSpec, radius: int = 6) -> SuiteReport:
    """On derived-subgroup elements of the ball, the ordering must agree
    with its predicted derived-subgroup comparator."""
    t0 = time.perf_counter()
    predicted = as_isolated(restrict_to_fprime(spec))
    rep = SuiteReport("derived-restriction", 0)
    for e, _ in ball(radius).nonidentity():
        if not e.is_derived:
            continue
        rep.cases += 1
        if sign(spec, e) != sign(predicted, e):
            rep.failures.append(f"restriction mismatch on {e}")
    rep.elapsed = time.perf_counter() - t0
    return rep


def run_reflection(radius: int = 5, specs: Optional[Sequence[FOrderSpec]] = None) -> SuiteReport:
    """sign(reflect_spec(s), f) == sign(s, reflect(f)) over the ball,
    plus the reflection pairing of the isolated tags."""
    t0 = time.perf_counter()
    if specs is None:
        specs = standard_grid()
    rep = SuiteReport("reflection", 0)
    expected_pairs = {
        IsolatedTag.XMINUS_PLUS: IsolatedTag.XPLUS_MINUS,
        IsolatedTag.XMINUS_MINUS: IsolatedTag.XPLUS_PLUS,
        IsolatedTag.EXO_0XMINUS_PM: IsolatedTag.EXO_1XPLUS_MP,
        IsolatedTag.EXO_0XMINUS_MP: IsolatedTag.EXO_1XPLUS_PM,
    }
    for tag, image in expected_pairs.items():
        rep.cases += 1
        got = reflect_spec(IsolatedOrder(tag))
        if got != IsolatedOrder(image):
            rep.failures.append(f"tag identity: reflect({tag.value}) gave {format_order_spec(got)}")
    b = ball(radius)
    reflected = [reflect(e) for e in b.elements[1:]]
    for s in specs:
        rs = reflect_spec(s)
        for e, re_ in zip(b.elements[1:], reflected):
            rep.cases += 1
            if sign(rs, e) != sign(s, re_):
                rep.failures.append(
                    f"{format_order_spec(s)}: reflection identity fails on {e}"
                )
    rep.elapsed = time.perf_counter() - t0
    return rep


def run_extension_identity(radius: int = 6) -> SuiteReport:
    """The assembled extension cone must agree with exo:0xminus:+-
    (and its complement with exo:0xminus:-+) on the whole ball."""
    t0 = time.perf_counter()
    plus = IsolatedOrder(IsolatedTag.EXO_0XMINUS_PM)
    minus = IsolatedOrder(IsolatedTag.EXO_0XMINUS_MP)
    rep = SuiteReport("extension", 0)
    for e, _ in ball(radius).nonidentity():
        rep.cases += 2
        member = extension_cone_member(e)
        if member != (sign(plus, e) == Sign.POS):
            rep.failures.append(f"extension cone disagrees with exo:0xminus:+- on {e}")
        if member == (sign(minus, e) == Sign.POS):
            rep.failures.append(f"complement disagrees with exo:0xminus:-+ on {e}")
    rep.elapsed = time.perf_counter() - t0
    return rep


def run_conrad_monotonicity(spec: FOrderSpec, radius: int = 6) -> SuiteReport:
    """Elements pushed strictly positive by the order's direction on the
    abelianization must be positive."""
    t0 = time.perf_counter()
    direction = conrad_direction(spec)
    rep = SuiteReport("conrad-monotonicity", 0)
    for e, _ in ball(radius).nonidentity():
        m, n = e.abelianize()
        if conrad_pairing_sign(direction, m, n) != Sign.POS:
            continue
        rep.cases += 1
        if sign(spec, e) != Sign.POS:
            rep.failures.append(f"direction-positive element {e} is not positive")
    rep.elapsed = time.perf_counter() - t0
    return rep


def demo_invariance_violation(
    radius: int = 3, g_ref: FElement = X1
) -> Optional[tuple[FElement, FElement]]:
    """A pair (f, h) with conrad_demo_sign(g_ref, h^-1 f h) differing
    from conrad_demo_sign(g_ref, f), if one exists in ball(radius)."""
    b = ball(radius)
    for f in b.elements[1:]:
        base = conrad_demo_sign(g_ref, f)
        for h in b.elements[1:]:
            if conrad_demo_sign(g_ref, conjugate(f, h)) != base:
                return (f, h)
    return None


SUITE_NAMES = (
    "order-axioms",
    "bi-invariance",
    "conradian",
    "derived-restriction",
    "reflection",
    "extension",
)


def run_suites(
    names: Sequence[str],
    seed: int = 0,
    radius: int = 4,
    biinv_samples: int = 1000,
    conradian_samples: int = 500,
) -> list[SuiteReport]:
    """Run the requested suites over the standard spec grid and merge
    per-suite; reports come back sorted by suite name."""
    unknown = [n for n in names if n not in SUITE_NAMES]
    if unknown:
        raise ValueError(f"unknown suites: {', '.join(unknown)}")
    grid = standard_grid()
    labeled = [(format_order_spec(s), s) for s in grid]
    reports = []
    if "order-axioms" in names:
        table_radius = min(radius, 4)
        reports.append(
            _merge("order-axioms", [(lbl, run_order_axioms(s, table_radius)) for lbl, s in labeled])
        )
    if "bi-invariance" in names:
        reports.append(
            _merge(
                "bi-invariance",
                [(lbl, run_bi_invariance(s, biinv_samples, seed)) for lbl, s in labeled],
            )
        )
    if "conradian" in names:
        runs = [(lbl, run_conradian(s, conradian_samples, seed)) for lbl, s in labeled]
        demo = lambda e: conrad_demo_sign(X1, e)  # noqa: E731
        runs.append(("conrad-demo(ref=x1)", run_conradian(demo, conradian_samples, seed)))
        reports.append(_merge("conradian", runs))
    if "derived-restriction" in names:
        reports.append(
            _merge(
                "derived-restriction",
                [(lbl, run_derived_restriction(s, radius)) for lbl, s in labeled],
            )
        )
    if "reflection" in names:
        reports.append(_merge("reflection", [("grid", run_reflection(radius))]))
    if "extension" in names:
        reports.append(_merge("extension", [("ball", run_extension_identity(radius))]))
    reports.sort(key=lambda r: r.suite)
    return reports
