"""Acceptance suite: one test per criterion, each printing a PASS/FAIL
line (run with `pytest -s tests/test_acceptance.py` to see them).

Tolerances are exact throughout: the package computes with integers
only, so every check is a strict equality or a zero-failure count.
"""

import itertools
import random
import time

from thompson_orders import (
    IDENTITY,
    X0,
    X1,
    Cmp,
    FPrimeTag,
    IsolatedOrder,
    IsolatedTag,
    QuadraticIrrational,
    Sign,
    Word,
    Z2Irrational,
    as_isolated,
    ball,
    commutator,
    compose,
    conjugate,
    conrad_demo_sign,
    conrad_direction,
    conrad_pairing_sign,
    extension_cone_member,
    format_order_spec,
    from_word,
    isolated_specs,
    isolation_witness,
    lambda_accumulation,
    parse_breakpoints,
    parse_element,
    parse_word,
    random_word,
    reflect,
    reflect_spec,
    restrict_to_fprime,
    sample_lambda_grid,
    sign,
    standard_grid,
)
from thompson_orders.cli import main as cli_main
from thompson_orders.verify import (
    demo_invariance_violation,
    run_bi_invariance,
    run_conrad_monotonicity,
    run_conradian,
    run_derived_restriction,
    run_extension_identity,
    run_order_axioms,
)
from thompson_orders.z2order import separating_pair

SEED = 20260810
GRID = standard_grid()


def report(num, name, ok, detail=""):
    suffix = f" ({detail})" if detail else ""
    line = f"[criterion {num:02d}] {name}: {'PASS' if ok else 'FAIL'}{suffix}"
    print(line)
    assert ok, line


def test_c01_group_soundness():
    t0 = time.perf_counter()
    a = compose(X0, X1.inverse())
    rel1 = commutator(a, from_word(parse_word("x0^-1 x1 x0"))) == IDENTITY
    rel2 = commutator(a, from_word(parse_word("x0^-2 x1 x0^2"))) == IDENTITY
    rng = random.Random(SEED)
    laws_ok = True
    for _ in range(500):
        f, g, h = (from_word(random_word(rng, 6)) for _ in range(3))
        if compose(compose(f, g), h) != compose(f, compose(g, h)):
            laws_ok = False
        if compose(f, f.inverse()) != IDENTITY or compose(f.inverse(), f) != IDENTITY:
            laws_ok = False
        if compose(f, IDENTITY) != f or compose(IDENTITY, f) != f:
            laws_ok = False
    elapsed = time.perf_counter() - t0
    report(
        1,
        "group soundness",
        rel1 and rel2 and laws_ok and elapsed < 10.0,
        f"relations={rel1 and rel2}, 500 triples, {elapsed:.1f}s",
    )


def test_c02_order_axioms():
    n = len(ball(4))
    assert n <= 200, "expected the radius-4 ball to stay within the exhaustive regime"
    failures = 0
    for spec in GRID:
        failures += len(run_order_axioms(spec, radius=4).failures)
    report(
        2,
        "strict total order on ball(4)",
        failures == 0,
        f"24 specs, |B4|={n}, exhaustive triples, failures={failures}",
    )


def test_c03_bi_invariance_and_demo_violation():
    failures = 0
    for spec in GRID:
        failures += len(run_bi_invariance(spec, samples=1000, seed=SEED).failures)
    witness = demo_invariance_violation(radius=2)
    demo_ok = witness is not None
    if demo_ok:
        f, h = witness
        demo_ok = conrad_demo_sign(X1, f) != conrad_demo_sign(X1, conjugate(f, h))
        print(f"    demo right-invariance violation: f={f} h={h}")
    report(
        3,
        "bi-invariance (1000 pairs/spec) with demo-order counterexample",
        failures == 0 and demo_ok,
        f"failures={failures}",
    )


def test_c04_conradian():
    failures = 0
    for spec in GRID:
        failures += len(run_conradian(spec, samples=500, seed=SEED).failures)
    demo = lambda e: conrad_demo_sign(X1, e)  # noqa: E731
    failures += len(run_conradian(demo, samples=500, seed=SEED).failures)
    report(4, "conradian property (500 positive pairs/spec)", failures == 0, f"failures={failures}")


def test_c05_derived_subgroup_restriction():
    failures = 0
    cases = 0
    for spec in GRID:
        rep = run_derived_restriction(spec, radius=6)
        failures += len(rep.failures)
        cases += rep.cases
    exo = IsolatedOrder(IsolatedTag.EXO_0XMINUS_PM)
    coincidence = restrict_to_fprime(exo) == FPrimeTag.XMINUS_MINUS
    report(
        5,
        "restriction to the derived subgroup on ball(6)",
        failures == 0 and coincidence and cases > 0,
        f"derived elements checked per spec={cases // len(GRID)}, failures={failures}",
    )


def test_c06_reflection_identities():
    b = ball(5)
    reflected = [reflect(e) for e in b.elements[1:]]
    failures = 0
    for spec in GRID:
        rs = reflect_spec(spec)
        for e, re_ in zip(b.elements[1:], reflected):
            if sign(rs, e) != sign(spec, re_):
                failures += 1
    # the four tag identities, confirmed extensionally on the same ball
    pairs = {
        IsolatedTag.XMINUS_PLUS: IsolatedTag.XPLUS_MINUS,
        IsolatedTag.XMINUS_MINUS: IsolatedTag.XPLUS_PLUS,
        IsolatedTag.EXO_0XMINUS_PM: IsolatedTag.EXO_1XPLUS_MP,
        IsolatedTag.EXO_0XMINUS_MP: IsolatedTag.EXO_1XPLUS_PM,
    }
    for tag, image in pairs.items():
        s, predicted = IsolatedOrder(tag), IsolatedOrder(image)
        if reflect_spec(s) != predicted:
            failures += 1
        for e, re_ in zip(b.elements[1:], reflected):
            if sign(predicted, e) != sign(s, re_):
                failures += 1
    report(6, "reflection identities on ball(5)", failures == 0, f"failures={failures}")


def test_c07_conrad_monotonicity():
    failures = 0
    cases = 0
    for spec in GRID:
        rep = run_conrad_monotonicity(spec, radius=6)
        failures += len(rep.failures)
        cases += rep.cases
    report(
        7,
        "direction monotonicity on ball(6)",
        failures == 0 and cases > 0,
        f"direction-positive cases={cases}, failures={failures}",
    )


def test_c08_extension_identity():
    rep = run_extension_identity(radius=6)
    report(
        8,
        "extension cone matches exo:0xminus:+- on ball(6)",
        rep.passed,
        f"cases={rep.cases}, failures={len(rep.failures)}",
    )


def test_c09_isolation_witnesses():
    t0 = time.perf_counter()
    ok = True
    radii_vs_isolated = {}
    for target in isolated_specs():
        others = [s for s in isolated_specs() if s != target]
        w = isolation_witness(target, others, 4)
        radii_vs_isolated[format_order_spec(target)] = w.radius
        ok = ok and w.separated
    grid200 = sample_lambda_grid(200, seed=SEED)
    radii_vs_lambda = {}
    for target in isolated_specs():
        w = isolation_witness(target, grid200, 6)
        radii_vs_lambda[format_order_spec(target)] = w.radius
        ok = ok and w.separated
    elapsed = time.perf_counter() - t0
    for name in radii_vs_isolated:
        print(
            f"    {name}: radius {radii_vs_isolated[name]} vs the other isolated,"
            f" radius {radii_vs_lambda[name]} vs the 200-sample grid"
        )
    report(
        9,
        "isolation witnesses (7 isolated + 200-sample grid)",
        ok and elapsed < 60.0,
        f"{elapsed:.1f}s, zero unseparated",
    )


def test_c10_accumulation_toward_sqrt2():
    sqrt2 = QuadraticIrrational.sqrt(2)
    lams = [sqrt2.plus_rational(-1, k) for k in (2, 5, 20, 100, 1000)]
    interior = FPrimeTag.XMINUS_PLUS
    dists = lambda_accumulation(interior, sqrt2, lams, 8)
    print("    k      fiber              distance-to-sqrt2-spec")
    for lam, d in zip(lams, dists):
        print(f"    {str(lam):18s} {d}")
    exps = [d.value_exponent for d in dists]
    monotone = exps == sorted(exps)
    # pairwise distinctness: a ball-8 separation or an explicit witness element
    distinct = True
    for l1, l2 in itertools.combinations(lams, 2):
        pair = separating_pair(Z2Irrational(l1), Z2Irrational(l2), bound=512)
        if pair is None:
            distinct = False
            continue
        m, n = pair
        w = Word([(0, -m), (1, n + m)])
        el = from_word(w)
        assert el.abelianize() == (m, n)
        from thompson_orders import LambdaOrder

        s1 = sign(LambdaOrder(interior, Z2Irrational(l1)), el)
        s2 = sign(LambdaOrder(interior, Z2Irrational(l2)), el)
        if s1 == s2:
            distinct = False
    report(
        10,
        "accumulation: pairwise-distinct fibers, non-increasing distance",
        monotone and distinct,
        f"distances={[str(d) for d in dists]}",
    )


def test_c11_round_trips_and_cli_exit_codes():
    rng = random.Random(SEED)
    ok = True
    for _ in range(500):
        w = random_word(rng, 8)
        if parse_word(str(w)) != w:
            ok = False
        f = from_word(w)
        if parse_breakpoints(str(f)) != f:
            ok = False
        if parse_element(str(f)) != f or parse_element(str(w)) != f:
            ok = False
    cli_ok = (
        cli_main(["eval", "x0 x1^-1"]) == 0
        and cli_main(["compare", "--order", "xminus:+", "x0", "x1"]) == 0
        and cli_main(["eval", "x9"]) == 2
        and cli_main(["compare", "--order", "nope", "x0", "x1"]) == 2
        and cli_main(["verify", "--suite", "extension", "--radius", "3"]) == 0
    )
    report(
        11,
        "round-trip fidelity (500 elements, both formats) and CLI exit codes",
        ok and cli_ok,
        f"word+breakpoint round trips ok={ok}, cli={cli_ok}",
    )
