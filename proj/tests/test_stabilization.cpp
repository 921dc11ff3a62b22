#include <gtest/gtest.h>

#include <array>
#include <map>
#include <set>

#include "eqhilb/errors.hpp"
#include "eqhilb/stabilization.hpp"
#include "oracles.hpp"

using eqhilb::Box;
using eqhilb::GroupParams;
using eqhilb::Partition;

namespace {
struct Case {
    int a;
    int b;
    int r;
    int n_max;
};

// (a, b, r, largest n) with a, b > 0; every n in (rab, n_max] is visited.
const std::vector<Case> kCases{{1, 1, 1, 9}, {1, 1, 2, 8}, {1, 1, 3, 6}, {1, 2, 1, 12},
                               {2, 1, 1, 12}, {1, 2, 2, 8}, {1, 3, 1, 10}, {2, 3, 1, 12},
                               {3, 2, 1, 12}, {2, 3, 2, 14}};

template <class F>
void for_each_instance(F&& f) {
    for (const auto& c : kCases)
        for (int n = c.r * c.a * c.b + 1; n <= c.n_max; ++n) {
            if (c.r * n > 28) continue;
            const GroupParams g(c.a, c.b, n);
            for (const auto& lam : eqhilb::enumerate_balanced(g, c.r)) f(g, c.r, lam);
        }
}
}  // namespace

TEST(Diagonal, Points) {
    EXPECT_EQ(eqhilb::diagonal(GroupParams(1, 1, 2), 1), (std::vector<Box>{{0, 1}, {1, 0}}));
    EXPECT_EQ(eqhilb::diagonal(GroupParams(2, 3, 13), 12), (std::vector<Box>{{0, 4}, {3, 2}, {6, 0}}));
    EXPECT_TRUE(eqhilb::diagonal(GroupParams(2, 3, 13), 1).empty());
    // Negative pairs are flipped to positive ones.
    EXPECT_EQ(eqhilb::diagonal(GroupParams(-2, -3, 13), 12).size(), 3u);
    EXPECT_THROW(eqhilb::diagonal(GroupParams(1, -1, 3), 1), eqhilb::PreconditionError);
}

TEST(Split, Anchors) {
    const GroupParams g(1, 1, 2);
    const auto ctx = eqhilb::make_split(g, 1, Partition({2}));
    EXPECT_EQ(ctx.anchor, (Box{0, 1}));
    EXPECT_FALSE(ctx.in_region_a({0, 0}));
    EXPECT_TRUE(ctx.in_region_b({0, 0}));
    EXPECT_TRUE(ctx.in_region_b({1, 0}));
    EXPECT_EQ(eqhilb::make_split(g, 1, Partition({1, 1})).anchor, (Box{1, 0}));
    const auto empty = eqhilb::make_split(GroupParams(1, 1, 3), 0, Partition{});
    EXPECT_EQ(empty.anchor, (Box{0, 0}));
}

TEST(Split, Phi) {
    const GroupParams g(1, 1, 2);
    EXPECT_EQ(eqhilb::phi(eqhilb::make_split(g, 1, Partition({2})), {1, 0}), (Box{0, 0}));
    EXPECT_EQ(eqhilb::phi(eqhilb::make_split(g, 1, Partition({1, 1})), {0, 1}), (Box{0, 0}));
}

TEST(Split, Hypotheses) {
    auto hyp = [](auto&& f) {
        try {
            f();
        } catch (const eqhilb::PreconditionError& e) {
            return e.hypothesis();
        }
        return eqhilb::Hypothesis::InvalidArgument;
    };
    EXPECT_EQ(hyp([] { eqhilb::psi(GroupParams(1, -2, 5), 1, Partition({3, 2})); }),
              eqhilb::Hypothesis::WrongSign);
    EXPECT_EQ(hyp([] { eqhilb::psi(GroupParams(1, 2, 2), 1, Partition({2})); }),
              eqhilb::Hypothesis::ThresholdNotMet);
    EXPECT_EQ(hyp([] { eqhilb::psi(GroupParams(1, 1, 3), 1, Partition({2, 1, 1})); }),
              eqhilb::Hypothesis::Unbalanced);
}

TEST(Psi, HandRuns) {
    const GroupParams g(1, 1, 2);
    EXPECT_EQ(eqhilb::psi(g, 1, Partition({2})), Partition({3}));
    EXPECT_EQ(eqhilb::psi(g, 1, Partition({1, 1})), Partition({1, 1, 1}));
    EXPECT_EQ(eqhilb::psi(GroupParams(2, 3, 5), 0, Partition{}), Partition{});
    EXPECT_EQ(eqhilb::psi_inverse(g, 1, Partition({3})), Partition({2}));
    EXPECT_EQ(eqhilb::psi_inverse(g, 1, Partition({1, 1, 1})), Partition({1, 1}));
}

// Every element of B^2 for (2,3;13) lands in B^2 for (2,3;19) with the same
// Betti statistic.
TEST(Psi, TwoThreeThirteen) {
    const GroupParams g(2, 3, 13);
    const GroupParams h(2, 3, 19);
    const auto source = eqhilb::enumerate_balanced(g, 2);
    auto target = eqhilb::enumerate_balanced(h, 2);
    std::vector<Partition> images;
    for (const auto& lam : source) {
        const Partition mu = eqhilb::psi(g, 2, lam);
        ASSERT_TRUE(eqhilb::is_balanced(h, mu).has_value());
        ASSERT_EQ(eqhilb::betti_statistic(g, lam), eqhilb::betti_statistic(h, mu));
        ASSERT_EQ(eqhilb::psi_inverse(g, 2, mu), lam);
        images.push_back(mu);
    }
    std::sort(images.begin(), images.end());
    EXPECT_EQ(images, target);
}

TEST(Psi, BijectionAndBetaOnAllInstances) {
    std::map<std::tuple<int, int, int, int>, std::vector<Partition>> images;
    for_each_instance([&](const GroupParams& g, int r, const Partition& lam) {
        const GroupParams h = g.with_order(g.n() + g.a() * g.b());
        const Partition mu = eqhilb::psi(g, r, lam);
        ASSERT_EQ(eqhilb::is_balanced(h, mu), r);
        ASSERT_EQ(mu.size(), lam.size() + r * g.a() * g.b());
        ASSERT_EQ(eqhilb::betti_statistic(g, lam), eqhilb::betti_statistic(h, mu))
            << eqhilb::to_string(g) << " " << eqhilb::to_string(lam);
        ASSERT_EQ(eqhilb::psi_inverse(g, r, mu), lam);
        images[{g.a(), g.b(), g.n(), r}].push_back(mu);
    });
    for (auto& [key, imgs] : images) {
        auto [a, b, n, r] = key;
        std::sort(imgs.begin(), imgs.end());
        EXPECT_EQ(imgs, oracle::balanced(a, b, n + a * b, r)) << a << "," << b << ";" << n;
    }
}

TEST(Psi, FastInverseMatchesReferenceSearch) {
    for (auto [a, b, r, n_max] : std::vector<Case>{{1, 1, 2, 6}, {1, 2, 1, 9}, {2, 3, 1, 10}, {1, 3, 1, 8}})
        for (int n = r * a * b + 1; n <= n_max; ++n) {
            const GroupParams g(a, b, n);
            for (const auto& mu : eqhilb::enumerate_balanced(g.with_order(n + a * b), r))
                ASSERT_EQ(eqhilb::psi_inverse(g, r, mu), eqhilb::psi_inverse_reference(g, r, mu));
        }
}

// Conditions (1) and (2) on every color class k in [rab, n-1] that is
// representable as rab + au + bv, and bijectivity of phi on it.
TEST(SplitProperty, ArmAndLegConditions) {
    for_each_instance([&](const GroupParams& g, int r, const Partition& lam) {
        const auto ctx = eqhilb::make_split(g, r, lam);
        const int a = g.a();
        const int b = g.b();
        const int rab = r * a * b;
        for (int k = rab; k < g.n(); ++k) {
            if (!eqhilb::representable_above(g, r, k)) continue;
            const auto split = eqhilb::split_color_class(ctx, k);
            ASSERT_TRUE(split.neither.empty()) << "k=" << k;
            std::set<Box> in_a(split.a.begin(), split.a.end());
            std::set<Box> in_b(split.b.begin(), split.b.end());
            for (Box x : split.a)
                ASSERT_TRUE(x.i < b || in_a.count({x.i - b, x.j + a})) << eqhilb::to_string(lam);
            for (Box x : split.b)
                ASSERT_TRUE(x.j < a || in_b.count({x.i + b, x.j - a})) << eqhilb::to_string(lam);

            std::vector<Box> image;
            for (Box x : split.a) image.push_back(eqhilb::phi(ctx, x));
            for (Box x : split.b) image.push_back(eqhilb::phi(ctx, x));
            std::sort(image.begin(), image.end());
            auto target = eqhilb::color_class(g, lam, k - a * b);
            std::sort(target.begin(), target.end());
            ASSERT_EQ(image, target) << eqhilb::to_string(g) << " " << eqhilb::to_string(lam) << " k=" << k;
        }
    });
}

// The A/B split of each color class does not depend on which anchor of
// D_{rab} outside the diagram is used.
TEST(SplitProperty, AnchorIndependence) {
    for_each_instance([&](const GroupParams& g, int r, const Partition& lam) {
        const auto anchors = eqhilb::split_anchors(g, r, lam);
        ASSERT_FALSE(anchors.empty());
        const auto first = eqhilb::make_split_at(g, r, lam, anchors.front());
        for (Box anchor : anchors) {
            const auto other = eqhilb::make_split_at(g, r, lam, anchor);
            for (int k = r * g.a() * g.b(); k < g.n(); ++k) {
                if (!eqhilb::representable_above(g, r, k)) continue;
                const auto x = eqhilb::split_color_class(first, k);
                const auto y = eqhilb::split_color_class(other, k);
                ASSERT_EQ(x.a, y.a);
                ASSERT_EQ(x.b, y.b);
            }
        }
    });
}

TEST(Period, SpecifiedRanges) {
    for (auto [a, b, r, from, to] : std::vector<std::array<int, 5>>{
             {1, 1, 2, 3, 8}, {1, 2, 1, 3, 12}, {1, 1, 1, 2, 8}, {2, 3, 1, 7, 10}}) {
        const auto rep = eqhilb::verify_period(GroupParams(a, b, from), r, from, to);
        EXPECT_TRUE(rep.passed()) << a << "," << b << " r=" << r;
        EXPECT_EQ(rep.period, a * b);
        EXPECT_EQ(static_cast<int>(rep.entries.size()), to - from + 1);
        for (const auto& e : rep.entries) EXPECT_TRUE(e.failures.empty());
    }
}

TEST(Period, BelowThresholdIsSkipped) {
    const auto rep = eqhilb::verify_period(GroupParams(1, 2, 1), 1, 1, 4);
    ASSERT_EQ(rep.entries.size(), 2u);
    EXPECT_EQ(rep.entries.front().n, 3);
}

// Sign flip: (-a,-b) describes the same groups as (a,b).
TEST(Period, NegatedWeights) {
    const GroupParams neg(-1, -2, 5);
    const GroupParams pos(1, 2, 5);
    for (const auto& lam : eqhilb::enumerate_balanced(pos, 1)) {
        ASSERT_TRUE(eqhilb::is_balanced(neg, lam).has_value());
        EXPECT_EQ(eqhilb::psi(neg, 1, lam), eqhilb::psi(pos, 1, lam));
    }
}
