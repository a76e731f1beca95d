"""Balls, the 1/2^n metric, isolation witnesses, accumulation.

Ball contents for small radii are cross-checked against a brute-force
enumeration of all letter sequences.
"""

import itertools

import pytest

from thompson_orders import (
    IDENTITY,
    FPrimeTag,
    IsolatedOrder,
    IsolatedTag,
    QuadraticIrrational,
    RadiusTooLarge,
    Sign,
    Word,
    Z2Irrational,
    ball,
    conjugate_spec,
    distance,
    from_word,
    isolated_specs,
    isolation_witness,
    lambda_accumulation,
    sample_lambda_grid,
    sign_vector,
    standard_grid,
)
from thompson_orders.orderspace import Distance

XMP = IsolatedOrder(IsolatedTag.XMINUS_PLUS)
XMM = IsolatedOrder(IsolatedTag.XMINUS_MINUS)
SQRT2 = QuadraticIrrational.sqrt(2)

LETTERS = [(0, 1), (0, -1), (1, 1), (1, -1)]


def brute_force_ball(n):
    seen = set()
    for length in range(n + 1):
        for letters in itertools.product(LETTERS, repeat=length):
            seen.add(from_word(Word(letters)))
    return seen


class TestBall:
    def test_sizes(self):
        sizes = [len(ball(n)) for n in range(7)]
        assert sizes == [1, 5, 17, 53, 161, 475, 1381]

    def test_matches_brute_force_enumeration(self):
        for n in range(4):
            assert set(ball(n).elements) == brute_force_ball(n)

    def test_contains_identity_first(self):
        assert ball(3).elements[0] == IDENTITY
        assert ball(3).word_lengths[0] == 0

    def test_closed_under_inverse(self):
        b = ball(3)
        members = set(b.elements)
        assert all(e.inverse() in members for e in b.elements)

    def test_nested_and_deduplicated(self):
        b3, b4 = ball(3), ball(4)
        assert set(b3.elements) <= set(b4.elements)
        assert len(set(b4.elements)) == len(b4.elements)

    def test_word_lengths_non_decreasing(self):
        lengths = ball(4).word_lengths
        assert list(lengths) == sorted(lengths)

    def test_deterministic_order(self):
        assert ball(3).elements == ball(3).elements
        assert ball(2).elements == ball(3).elements[: len(ball(2))]

    def test_radius_cap(self):
        with pytest.raises(RadiusTooLarge):
            ball(11)
        with pytest.raises(RadiusTooLarge):
            ball(-1)


class TestSignVector:
    def test_radius_zero_is_empty(self):
        assert sign_vector(XMP, 0) == ()

    def test_length(self):
        assert len(sign_vector(XMP, 3)) == len(ball(3)) - 1

    def test_entries_are_strict_signs(self):
        assert set(sign_vector(XMP, 3)) <= {Sign.NEG, Sign.POS}

    def test_conjugate_spec_negates_entrywise(self, grid):
        for spec in grid[:6]:
            v = sign_vector(spec, 3)
            w = sign_vector(conjugate_spec(spec), 3)
            assert w == tuple(-s for s in v)

    def test_exotic_differs_from_basic_within_three(self):
        v = sign_vector(XMP, 3)
        w = sign_vector(IsolatedOrder(IsolatedTag.EXO_0XMINUS_PM), 3)
        assert v != w


class TestDistance:
    def test_self_distance_agrees_through(self):
        d = distance(XMP, XMP, 6)
        assert not d.separated and d.radius == 6
        assert str(d) == "agree-through(6)"

    def test_conjugate_pair_at_radius_one(self):
        d = distance(XMP, XMM, 2)
        assert d == Distance(True, 1)
        assert str(d) == "1/2^1"

    def test_symmetry(self, grid):
        for s1, s2 in itertools.combinations(grid[:8], 2):
            assert distance(s1, s2, 5) == distance(s2, s1, 5)

    def test_grid_pairs_all_separated_within_eight(self, grid):
        for s1, s2 in itertools.combinations(grid, 2):
            assert distance(s1, s2, 8).separated

    def test_ultrametric_on_exact_triples(self, grid):
        specs = grid[:10]
        dist = {}
        for s1, s2 in itertools.combinations(specs, 2):
            dist[(specs.index(s1), specs.index(s2))] = distance(s1, s2, 6)
        for i, j, k in itertools.combinations(range(len(specs)), 3):
            dij, djk, dik = dist[(i, j)], dist[(j, k)], dist[(i, k)]
            if dij.separated and djk.separated and dik.separated:
                # 1/2^e: larger exponent means smaller distance
                assert dik.radius >= min(dij.radius, djk.radius)


class TestIsolationWitness:
    def test_needs_competitors(self):
        with pytest.raises(ValueError):
            isolation_witness(XMP, [], 3)

    def test_against_itself_is_unseparated(self):
        w = isolation_witness(XMP, [XMP, XMM], 4)
        assert not w.separated
        assert w.radius is None
        assert "unseparated" in str(w)

    def test_eight_isolated_pairwise_within_four(self):
        for target in isolated_specs():
            others = [s for s in isolated_specs() if s != target]
            w = isolation_witness(target, others, 4)
            assert w.separated and w.radius <= 4

    def test_witness_radius_is_max_over_competitors(self):
        others = [s for s in isolated_specs() if s != XMP]
        w = isolation_witness(XMP, others, 4)
        assert w.radius == max(w.competitor_radii)

    def test_sampled_lambda_grid_is_deterministic(self):
        assert sample_lambda_grid(50, seed=9) == sample_lambda_grid(50, seed=9)

    def test_small_lambda_sample_separates(self):
        grid = sample_lambda_grid(40, seed=9)
        w = isolation_witness(XMP, grid, 6)
        assert w.separated


class TestLambdaAccumulation:
    def test_constant_sequence_agrees_everywhere(self):
        dists = lambda_accumulation(FPrimeTag.XMINUS_PLUS, SQRT2, [SQRT2, SQRT2], 5)
        assert all(not d.separated for d in dists)

    def test_shifted_values_separate_fast(self):
        lams = [SQRT2.plus_rational(k) for k in range(1, 5)]
        dists = lambda_accumulation(FPrimeTag.XMINUS_PLUS, SQRT2, lams, 6)
        assert all(d.separated and d.radius <= 3 for d in dists)

    def test_approach_is_non_increasing(self):
        lams = [SQRT2.plus_rational(-1, k) for k in (2, 5, 20, 100)]
        dists = lambda_accumulation(FPrimeTag.XPLUS_MINUS, SQRT2, lams, 8)
        exps = [d.value_exponent for d in dists]
        assert exps == sorted(exps)
