"""Tests for the information measures: frozen values, limits, identities."""

import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from rct.coding import adapted_code, expected_length
from rct.dist import (
    JointDistribution,
    diagonal_joint,
    make_distribution,
    product,
    uniform,
)
from rct.fixtures import dyadic_distribution
from rct.measures import (
    entropy_from_divergence,
    kl_divergence,
    mutual_information,
    renyi_divergence,
    renyi_entropy,
    renyi_mutual_information,
    shannon_entropy,
    tsallis_entropy,
)

LN2 = math.log(2.0)

positive_masses = st.lists(
    st.floats(min_value=1e-3, max_value=1e3, allow_nan=False), min_size=2, max_size=8
)


def labelled(masses):
    return make_distribution([f"s{i}" for i in range(len(masses))], masses, renormalize=True)


def simplex_dist(rng, n):
    return labelled(rng.exponential(size=n))


class TestShannonEntropy:
    def test_fair_coin(self):
        assert shannon_entropy(uniform(2)) == 1.0

    def test_degenerate(self):
        assert shannon_entropy(make_distribution(["a", "b"], [1.0, 0.0])) == 0.0

    def test_dyadic_exact(self):
        assert shannon_entropy(dyadic_distribution()) == 1.75

    def test_base_e(self):
        assert shannon_entropy(uniform(2), base=math.e) == pytest.approx(LN2, abs=1e-15)

    def test_base_10(self):
        assert shannon_entropy(uniform(10), base=10.0) == pytest.approx(1.0, abs=1e-12)

    def test_bad_base(self):
        with pytest.raises(ValueError, match="base"):
            shannon_entropy(uniform(2), base=1.0)

    @given(positive_masses)
    def test_bounds(self, masses):
        p = labelled(masses)
        h = shannon_entropy(p)
        assert 0.0 <= h <= math.log2(len(p)) + 1e-12


class TestKlDivergence:
    def test_self_divergence_zero(self):
        rng = np.random.default_rng(2)
        for _ in range(20):
            p = simplex_dist(rng, int(rng.integers(2, 9)))
            assert kl_divergence(p, p) == 0.0

    def test_two_term_value(self):
        p = make_distribution(["a", "b"], [0.5, 0.5])
        q = make_distribution(["a", "b"], [0.25, 0.75])
        assert kl_divergence(p, q) == pytest.approx(0.2075187496394219, abs=1e-12)

    def test_disjoint_supports_infinite(self):
        p = make_distribution(["a", "b"], [1.0, 0.0])
        q = make_distribution(["a", "b"], [0.0, 1.0])
        assert kl_divergence(p, q) == math.inf

    def test_alphabet_mismatch(self):
        with pytest.raises(ValueError, match="different alphabets"):
            kl_divergence(uniform(2), make_distribution(["a", "b"], [0.5, 0.5]))

    @given(positive_masses, positive_masses)
    def test_nonnegative(self, m1, m2):
        n = min(len(m1), len(m2))
        p, q = labelled(m1[:n]), labelled(m2[:n])
        assert kl_divergence(p, q) >= 0.0


class TestRenyiDivergence:
    def test_half_order_single_term(self):
        p = make_distribution(["a", "b"], [1.0, 0.0])
        q = make_distribution(["a", "b"], [0.5, 0.5])
        assert renyi_divergence(p, q, 0.5) == pytest.approx(1.0, abs=1e-12)

    def test_order_two(self):
        p = make_distribution(["a", "b"], [0.5, 0.5])
        q = make_distribution(["a", "b"], [0.25, 0.75])
        assert renyi_divergence(p, q, 2.0) == pytest.approx(
            0.4150374992788438, abs=1e-12
        )

    def test_order_one_dispatches_to_kl(self):
        rng = np.random.default_rng(3)
        for _ in range(20):
            n = int(rng.integers(2, 9))
            p, q = simplex_dist(rng, n), simplex_dist(rng, n)
            assert renyi_divergence(p, q, 1.0) == kl_divergence(p, q)

    def test_order_zero_full_support(self):
        p = make_distribution(["a", "b"], [0.5, 0.5])
        q = make_distribution(["a", "b"], [0.25, 0.75])
        assert renyi_divergence(p, q, 0.0) == 0.0

    def test_order_zero_is_support_mass(self):
        p = make_distribution(["a", "b", "c"], [1.0, 0.0, 0.0])
        q = make_distribution(["a", "b", "c"], [0.25, 0.5, 0.25])
        assert renyi_divergence(p, q, 0.0) == -math.log2(0.25)

    def test_large_order_needs_absolute_continuity(self):
        p = make_distribution(["a", "b"], [0.5, 0.5])
        q = make_distribution(["a", "b"], [1.0, 0.0])
        assert renyi_divergence(p, q, 2.0) == math.inf

    def test_mutually_singular_infinite(self):
        p = make_distribution(["a", "b"], [1.0, 0.0])
        q = make_distribution(["a", "b"], [0.0, 1.0])
        assert renyi_divergence(p, q, 0.5) == math.inf

    def test_limit_consistency_near_one(self):
        rng = np.random.default_rng(42)
        for t in range(100):
            n = int(rng.integers(2, 9))
            p, q = simplex_dist(rng, n), simplex_dist(rng, n)
            kl = kl_divergence(p, q)
            for order in (1.0 - 1e-6, 1.0 + 1e-6):
                assert abs(renyi_divergence(p, q, order) - kl) <= 1e-4

    def test_monotone_in_order(self):
        rng = np.random.default_rng(8)
        grid = [0.1 * k for k in range(51)]
        for _ in range(20):
            n = int(rng.integers(2, 7))
            p, q = simplex_dist(rng, n), simplex_dist(rng, n)
            values = [renyi_divergence(p, q, g) for g in grid]
            assert all(b >= a - 1e-12 for a, b in zip(values, values[1:]))

    @given(positive_masses, positive_masses, st.floats(min_value=0.0, max_value=6.0))
    def test_nonnegative_and_zero_on_equal(self, m1, m2, order):
        n = min(len(m1), len(m2))
        p, q = labelled(m1[:n]), labelled(m2[:n])
        assert renyi_divergence(p, q, order) >= 0.0
        assert renyi_divergence(p, p, order) <= 1e-12


class TestRenyiEntropy:
    def test_uniform_is_hartley_for_all_orders(self):
        for n in (2, 3, 5, 8):
            for order in (0.0, 0.5, 1.0, 2.0, 7.5):
                assert renyi_entropy(uniform(n), order) == pytest.approx(
                    math.log2(n), abs=1e-12
                )

    def test_collision_entropy(self):
        p = make_distribution(["a", "b", "c"], [0.5, 0.25, 0.25])
        assert renyi_entropy(p, 2.0) == pytest.approx(1.4150374992788438, abs=1e-12)

    def test_half_order(self):
        p = make_distribution(["a", "b", "c"], [0.5, 0.25, 0.25])
        assert renyi_entropy(p, 0.5) == pytest.approx(1.5431066063272239, abs=1e-12)

    def test_order_zero_counts_support(self):
        p = make_distribution(["a", "b", "c"], [0.5, 0.5, 0.0])
        assert renyi_entropy(p, 0.0) == 1.0

    def test_nonincreasing_in_order(self):
        rng = np.random.default_rng(13)
        grid = [0.25 * k for k in range(21)]
        for _ in range(20):
            p = simplex_dist(rng, int(rng.integers(2, 9)))
            values = [renyi_entropy(p, g) for g in grid]
            assert all(b <= a + 1e-12 for a, b in zip(values, values[1:]))

    @given(positive_masses, st.floats(min_value=0.0, max_value=8.0))
    def test_bounds(self, masses, order):
        p = labelled(masses)
        h = renyi_entropy(p, order)
        assert -1e-12 <= h <= math.log2(len(p)) + 1e-9


class TestTsallisEntropy:
    def test_uniform_pair_order_two(self):
        assert tsallis_entropy(uniform(2), 2.0) == 0.5

    def test_degenerate(self):
        assert tsallis_entropy(make_distribution(["a", "b"], [1.0, 0.0]), 2.0) == 0.0

    def test_order_one_is_shannon_nats(self):
        assert tsallis_entropy(uniform(2), 1.0) == pytest.approx(LN2, abs=1e-15)

    def test_continuous_at_one(self):
        for probs in ([0.5, 0.5], [0.25] * 4, [0.9, 0.1]):
            p = labelled(probs)
            at_one = tsallis_entropy(p, 1.0)
            assert abs(tsallis_entropy(p, 1.0 + 1e-6) - at_one) <= 1e-6
            assert abs(tsallis_entropy(p, 1.0 - 1e-6) - at_one) <= 1e-6

    def test_linear_rate_at_one(self):
        # |S(1 +/- eps) - S(1)| ~ eps/2 * sum p ln^2 p, so the gap scales with eps
        rng = np.random.default_rng(17)
        eps = 1e-6
        for _ in range(20):
            p = simplex_dist(rng, int(rng.integers(2, 7)))
            at_one = tsallis_entropy(p, 1.0)
            sup = p.probs[p.probs > 0]
            rate = 0.5 * float((sup * np.log(sup) ** 2).sum())
            for order in (1.0 + eps, 1.0 - eps):
                assert abs(tsallis_entropy(p, order) - at_one) <= eps * (rate + 0.01)

    def test_order_zero(self):
        p = make_distribution(["a", "b", "c"], [0.5, 0.5, 0.0])
        assert tsallis_entropy(p, 0.0) == 1.0

    def test_not_additive_on_products(self):
        p = make_distribution(["a", "b"], [0.9, 0.1])
        single = tsallis_entropy(p, 2.0)
        paired = tsallis_entropy(product(p, p), 2.0)
        assert single == pytest.approx(0.18, abs=1e-12)
        assert paired == pytest.approx(0.3276, abs=1e-12)
        assert abs(paired - 2 * single) > 1e-6


class TestMutualInformation:
    def test_product_form_is_zero(self):
        p = make_distribution(["a", "b"], [0.9, 0.1])
        q = make_distribution(["x", "y", "z"], [0.5, 0.3, 0.2])
        j = JointDistribution(p.labels, q.labels, np.multiply.outer(p.probs, q.probs))
        assert mutual_information(j) == 0.0
        for order in (0.5, 1.0, 2.0):
            assert renyi_mutual_information(j, order) <= 1e-12

    def test_diagonal_uniform_pair(self):
        assert mutual_information(diagonal_joint(uniform(2))) == 1.0

    def test_self_information_is_entropy(self):
        rng = np.random.default_rng(23)
        for _ in range(30):
            p = simplex_dist(rng, int(rng.integers(2, 9)))
            assert mutual_information(diagonal_joint(p)) == pytest.approx(
                shannon_entropy(p), abs=1e-12
            )

    def test_diagonal_uniform_all_orders(self):
        j = diagonal_joint(uniform(2))
        for order in (0.0, 0.5, 1.0, 1.5, 3.0):
            assert renyi_mutual_information(j, order) == pytest.approx(1.0, abs=1e-12)

    def test_order_self_information_duality_spot(self):
        p = make_distribution(["a", "b", "c"], [0.5, 0.25, 0.25])
        assert renyi_mutual_information(diagonal_joint(p), 1.5) == pytest.approx(
            1.5431066063272239, abs=1e-12
        )

    def test_duality_over_orders(self):
        rng = np.random.default_rng(31)
        for _ in range(50):
            p = simplex_dist(rng, int(rng.integers(2, 9)))
            order = float(rng.uniform(0.01, 1.99))
            lhs = renyi_entropy(p, order)
            rhs = renyi_mutual_information(diagonal_joint(p), 2.0 - order)
            assert abs(lhs - rhs) <= 1e-9


class TestEntropyFromDivergence:
    def test_dyadic_shannon(self):
        assert entropy_from_divergence(dyadic_distribution(), 1.0) == pytest.approx(
            1.75, abs=1e-12
        )

    def test_uniform_any_order(self):
        for order in (0.0, 0.5, 1.0, 2.0):
            assert entropy_from_divergence(uniform(4), order) == pytest.approx(
                2.0, abs=1e-12
            )

    def test_collision_order(self):
        p = make_distribution(["a", "b", "c"], [0.5, 0.25, 0.25])
        assert entropy_from_divergence(p, 2.0) == pytest.approx(
            1.4150374992788438, abs=1e-12
        )

    @given(positive_masses, st.floats(min_value=0.0, max_value=6.0))
    def test_agrees_with_direct_entropy(self, masses, order):
        p = labelled(masses)
        assert abs(entropy_from_divergence(p, order) - renyi_entropy(p, order)) <= 1e-9


class TestAdditivity:
    def test_divergence_adds_over_products(self):
        rng = np.random.default_rng(37)
        for _ in range(30):
            n, m = int(rng.integers(2, 6)), int(rng.integers(2, 6))
            p1, q1 = simplex_dist(rng, n), simplex_dist(rng, n)
            p2, q2 = simplex_dist(rng, m), simplex_dist(rng, m)
            for order in (0.5, 1.0, 2.0):
                joint = renyi_divergence(product(p1, p2), product(q1, q2), order)
                split = renyi_divergence(p1, q1, order) + renyi_divergence(p2, q2, order)
                assert abs(joint - split) <= 1e-9

    def test_entropy_adds_over_products(self):
        rng = np.random.default_rng(41)
        for _ in range(30):
            p1 = simplex_dist(rng, int(rng.integers(2, 6)))
            p2 = simplex_dist(rng, int(rng.integers(2, 6)))
            for order in (0.5, 1.0, 2.0):
                joint = renyi_entropy(product(p1, p2), order)
                split = renyi_entropy(p1, order) + renyi_entropy(p2, order)
                assert abs(joint - split) <= 1e-9


class TestEntropyConcavity:
    def test_concave_for_small_orders(self):
        # 1000 random (P1, P2, lam) triples per the low-order concavity claim
        rng = np.random.default_rng(47)
        for t in range(1000):
            n = int(rng.integers(2, 7))
            p1, p2 = simplex_dist(rng, n), simplex_dist(rng, n)
            lam = float(rng.uniform())
            mix = make_distribution(p1.labels, lam * p1.probs + (1 - lam) * p2.probs)
            order = float(rng.uniform(1e-3, 1.0))
            mixed = renyi_entropy(mix, order)
            split = lam * renyi_entropy(p1, order) + (1 - lam) * renyi_entropy(p2, order)
            assert mixed >= split - 1e-12


class TestBreakdownWitnesses:
    def test_concavity_fails_at_order_ten(self):
        mid = make_distribution(["a", "b"], [0.75, 0.25])
        h10 = renyi_entropy(mid, 10.0)
        assert h10 == pytest.approx(0.46115006231423534, abs=1e-12)
        assert h10 < 0.5  # endpoint average

    def test_convexity_fails_at_order_ten(self):
        mid = make_distribution(["a", "b"], [0.75, 0.25])
        d10 = renyi_divergence(mid, uniform_like(mid), 10.0)
        assert d10 == pytest.approx(0.5388499376857647, abs=1e-12)
        assert d10 > 0.5  # endpoint average

    def test_concavity_holds_at_order_one(self):
        mid = make_distribution(["a", "b"], [0.75, 0.25])
        assert shannon_entropy(mid) == pytest.approx(0.8112781244591328, abs=1e-12)
        assert shannon_entropy(mid) > 0.5


def uniform_like(p):
    return make_distribution(p.labels, [1.0 / len(p)] * len(p))


class TestGibbsOptimality:
    def test_random_codes_never_beat_entropy(self):
        rng = np.random.default_rng(43)
        for _ in range(10):
            n = int(rng.integers(2, 9))
            p = simplex_dist(rng, n)
            h = shannon_entropy(p)
            adapted = adapted_code(p)
            assert expected_length(p, adapted) == pytest.approx(h, abs=1e-9)
            rows = rng.dirichlet(np.ones(n), size=1000)
            averages = (-np.log2(rows)) @ p.probs
            assert float(averages.min()) >= h - 1e-9

    def test_excess_length_is_divergence(self):
        # certificate for "equality iff adapted": the excess of the code
        # adapted to Q over H(P) is exactly D(P||Q), zero only at Q = P
        rng = np.random.default_rng(53)
        for _ in range(30):
            n = int(rng.integers(2, 9))
            p, q = simplex_dist(rng, n), simplex_dist(rng, n)
            excess = expected_length(p, adapted_code(q)) - shannon_entropy(p)
            assert excess == pytest.approx(kl_divergence(p, q), abs=1e-12)
            assert excess > 1e-6  # independent draws differ
