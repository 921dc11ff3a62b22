#include <gtest/gtest.h>

#include <array>
#include <numeric>
#include <set>

#include "eqhilb/analysis.hpp"
#include "eqhilb/errors.hpp"
#include "eqhilb/tangent.hpp"
#include "oracles.hpp"

using eqhilb::GroupParams;
using eqhilb::Partition;
using eqhilb::Rational;

TEST(Normalize, Examples) {
    EXPECT_EQ(eqhilb::normalize_group(GroupParams(2, 3, 4)), GroupParams(1, 3, 2));
    EXPECT_EQ(eqhilb::normalize_group(GroupParams(1, 1, 5)), GroupParams(1, 1, 5));
    EXPECT_EQ(eqhilb::normalize_group(GroupParams(3, -2, 9)), GroupParams(1, -2, 3));
}

TEST(Normalize, PreservesClass) {
    for (int a = -4; a <= 4; ++a)
        for (int b = -4; b <= 4; ++b) {
            if (std::gcd(a, b) != 1) continue;
            for (int n = 1; n <= 8; ++n) {
                const GroupParams g(a, b, n);
                const GroupParams h = eqhilb::normalize_group(g);
                for (int r = 0; r <= 2 && r * n <= 16; ++r)
                    ASSERT_EQ(eqhilb::l_class(g, r), eqhilb::l_class(h, r))
                        << eqhilb::to_string(g) << " -> " << eqhilb::to_string(h) << " r=" << r;
            }
        }
}

TEST(Rectangle, Map) {
    EXPECT_EQ(eqhilb::rectangle_map(1, -2, Partition({2, 1})), Partition({2, 2, 1, 1}));
    EXPECT_EQ(eqhilb::rectangle_map(2, -3, Partition({1})), Partition({2, 2, 2}));
    EXPECT_THROW(eqhilb::rectangle_map(1, 2, Partition({1})), eqhilb::PreconditionError);
}

TEST(Rectangle, Star) {
    EXPECT_TRUE(eqhilb::satisfies_star(Partition({2, 2, 1, 1}), 1, -2));
    EXPECT_FALSE(eqhilb::satisfies_star(Partition({2, 1}), 1, -2));
    EXPECT_TRUE(eqhilb::satisfies_star(Partition{}, 1, -2));
    EXPECT_FALSE(eqhilb::satisfies_star(Partition({3, 3, 3}), 2, -3));
    EXPECT_EQ(eqhilb::shrink_rectangles(Partition({2, 2, 1, 1}), 1, -2), Partition({2, 1}));
}

TEST(Rectangle, InjectiveAndInvertible) {
    for (auto [a, b] : std::vector<std::pair<int, int>>{{1, -2}, {2, -3}, {3, -1}, {2, -1}}) {
        std::set<Partition> seen;
        for (int m = 0; m <= 12; ++m)
            for (const auto& p : eqhilb::all_partitions(m)) {
                const Partition img = eqhilb::rectangle_map(a, b, p);
                ASSERT_EQ(img.size(), -a * b * p.size());
                ASSERT_TRUE(eqhilb::satisfies_star(img, a, b));
                ASSERT_EQ(eqhilb::shrink_rectangles(img, a, b), p);
                ASSERT_TRUE(seen.insert(img).second);
            }
    }
}

TEST(Rectangle, BijectionCases) {
    for (auto [a, b, n] : std::vector<std::array<int, 3>>{{1, -2, 3}, {1, -2, 5}, {2, -3, 5}, {1, -2, 7}, {2, -3, 7}}) {
        const auto rep = eqhilb::check_rectangle_bijection(GroupParams(a, b, n), 1);
        EXPECT_TRUE(rep.bijective()) << a << "," << b << ";" << n;
        EXPECT_GT(rep.source_count, 0u);
    }
    EXPECT_THROW(eqhilb::check_rectangle_bijection(GroupParams(1, -2, 4), 1), eqhilb::PreconditionError);
}

TEST(Counting, MultipartitionCounts) {
    EXPECT_EQ(eqhilb::multipartition_count(4, 0), 1u);
    EXPECT_EQ(eqhilb::multipartition_count(2, 2), 5u);
    EXPECT_EQ(eqhilb::multipartition_count(3, 1), 3u);
    for (int n = 1; n <= 5; ++n)
        for (int r = 0; r <= 8; ++r) EXPECT_EQ(eqhilb::multipartition_count(n, r), oracle::multipartitions(n, r));
    const auto p = eqhilb::partition_counts(10);
    EXPECT_EQ(p[10], 42u);
}

TEST(Counting, SlTypeCountsAreMultipartitions) {
    for (int n = 1; n <= 4; ++n)
        for (int r = 0; r * n <= 16; ++r)
            EXPECT_EQ(eqhilb::enumerate_balanced(GroupParams(1, -1, n), r).size(),
                      eqhilb::multipartition_count(n, r));
}

TEST(ContinuedFraction, Examples) {
    EXPECT_EQ(eqhilb::hj_expand(3, 2), (std::vector<int>{2, 2}));
    EXPECT_EQ(eqhilb::hj_expand(5, 2), (std::vector<int>{3, 2}));
    EXPECT_EQ(eqhilb::hj_expand(12, 5), (std::vector<int>{3, 2, 3}));
    EXPECT_EQ(eqhilb::hj_expand(7, 1), (std::vector<int>{7}));
    EXPECT_EQ(eqhilb::hj_value({3, 2, 3}), Rational(12, 5));
    EXPECT_THROW(eqhilb::hj_expand(6, 4), eqhilb::PreconditionError);
    EXPECT_THROW(eqhilb::hj_expand(3, 3), eqhilb::PreconditionError);
}

TEST(ContinuedFraction, RoundTripAndTermsAtLeastTwo) {
    for (int n = 2; n <= 60; ++n)
        for (int k = 1; k < n; ++k) {
            if (std::gcd(n, k) != 1) continue;
            const auto t = eqhilb::hj_expand(n, k);
            ASSERT_EQ(eqhilb::hj_value(t), Rational(n, k));
            for (std::size_t x = 0; x + 1 < t.size(); ++x) ASSERT_GE(t[x], 2);
        }
}

// Expansions of n/k and n/(n-k) for supplementary cones: the length of one
// is sum(a_i - 2) + 1 over the other.
TEST(ContinuedFraction, Duality) {
    for (int n = 3; n <= 40; ++n)
        for (int k = 1; k < n; ++k) {
            if (std::gcd(n, k) != 1) continue;
            const auto t = eqhilb::hj_expand(n, k);
            const auto d = eqhilb::hj_expand(n, n - k);
            int s = 0;
            for (int x : t) s += x - 2;
            ASSERT_EQ(static_cast<std::size_t>(s + 1), d.size()) << n << "/" << k;
        }
}

TEST(Interpolation, ExactPolynomials) {
    std::vector<std::pair<std::int64_t, Rational>> pts;
    for (std::int64_t n = 2; n <= 5; ++n) pts.emplace_back(n, Rational(n * (n + 3), 2));
    const auto poly = eqhilb::interpolate(pts);
    EXPECT_EQ(eqhilb::degree(poly), 2);
    EXPECT_EQ(poly[0], 0);
    EXPECT_EQ(poly[1], Rational(3, 2));
    EXPECT_EQ(poly[2], Rational(1, 2));
    EXPECT_EQ(eqhilb::evaluate(poly, 10), 65);
}

TEST(Fit, SlTypeRankTwo) {
    std::vector<eqhilb::Sample> samples;
    for (int n = 2; n <= 8; ++n)
        samples.push_back({n, static_cast<std::int64_t>(eqhilb::enumerate_balanced(GroupParams(1, -1, n), 2).size())});
    EXPECT_EQ(samples.front().count, 5);
    const auto fit = eqhilb::fit_quasipolynomial(samples, 1, 2, 2);
    ASSERT_TRUE(fit.validated());
    EXPECT_EQ(fit.qp.polys[0], (eqhilb::RationalPoly{0, Rational(3, 2), Rational(1, 2)}));
    EXPECT_EQ(fit.classes[0].observed_degree, 2);
    EXPECT_EQ(*fit.qp(100), 100 * 103 / 2);
}

TEST(Fit, Constant) {
    std::vector<eqhilb::Sample> samples;
    for (int n = 1; n <= 5; ++n) samples.push_back({n, 7});
    const auto fit = eqhilb::fit_quasipolynomial(samples, 1, 0);
    ASSERT_TRUE(fit.validated());
    EXPECT_EQ(fit.qp.polys[0], eqhilb::RationalPoly{7});
    EXPECT_EQ(fit.classes[0].observed_degree, 0);
}

TEST(Fit, DetectsWrongDegreeAndLateStart) {
    std::vector<eqhilb::Sample> cubic;
    for (int n = 1; n <= 8; ++n) cubic.push_back({n, n * n * n});
    EXPECT_FALSE(eqhilb::fit_quasipolynomial(cubic, 1, 2).validated());

    // Linear from n = 4 on, with junk before.
    std::vector<eqhilb::Sample> late{{1, 9}, {2, 0}, {3, 5}};
    for (int n = 4; n <= 9; ++n) late.push_back({n, 2 * n + 1});
    const auto fit = eqhilb::fit_quasipolynomial(late, 1, 1, 2);
    ASSERT_TRUE(fit.validated());
    EXPECT_EQ(fit.qp.valid_from, 4);
    EXPECT_EQ(*fit.qp(20), 41);
}

TEST(Fit, InsufficientSamples) {
    try {
        eqhilb::fit_quasipolynomial({{1, 1}, {2, 2}}, 1, 1, 1);
        FAIL();
    } catch (const eqhilb::PreconditionError& e) {
        EXPECT_EQ(e.hypothesis(), eqhilb::Hypothesis::InsufficientSamples);
    }
}

TEST(Fit, OneMinusTwoOddOrders) {
    // Window of odd n; the count is (n+1)/2.
    std::vector<eqhilb::Sample> samples;
    for (int n = 3; n <= 15; n += 2)
        samples.push_back({n, static_cast<std::int64_t>(eqhilb::enumerate_balanced(GroupParams(1, -2, n), 1).size())});
    const auto fit = eqhilb::fit_quasipolynomial(samples, 2, 1, 2);
    ASSERT_TRUE(fit.validated());
    ASSERT_EQ(fit.classes.size(), 1u);
    EXPECT_EQ(fit.qp.polys[1], (eqhilb::RationalPoly{Rational(1, 2), Rational(1, 2)}));
    EXPECT_TRUE(fit.qp.polys[0].empty());
    EXPECT_EQ(fit.qp(8), std::nullopt);
}

TEST(VerifyQuasipolynomial, Families) {
    for (int r = 1; r <= 3; ++r) {
        const auto rep = eqhilb::verify_quasipolynomial(1, -1, r, 2, 10);
        EXPECT_TRUE(rep.passed()) << "r=" << r;
        EXPECT_EQ(rep.fit.classes[0].observed_degree, r);
    }
    EXPECT_TRUE(eqhilb::verify_quasipolynomial(1, -2, 1, 3, 15).passed());
    EXPECT_TRUE(eqhilb::verify_quasipolynomial(2, -3, 1, 5, 20, false, 1).passed());
    EXPECT_THROW(eqhilb::verify_quasipolynomial(1, 2, 1, 3, 9), eqhilb::PreconditionError);
}

TEST(VerifyQuasipolynomial, ReducedOrders) {
    // Even orders are counted through normalization; the count (n+1)/2 on
    // odd n and the even-n counts each follow their own linear polynomial.
    const auto rep = eqhilb::verify_quasipolynomial(1, -2, 1, 3, 16, true, 2);
    EXPECT_EQ(rep.samples.size(), 14u);
    EXPECT_EQ(rep.fit.classes.size(), 2u);
}
