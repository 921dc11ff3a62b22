#pragma once

// The insertion bijection psi : B^r_{a,b;n} -> B^r_{a,b;n+ab} for ab > 0 and
// n > rab, which preserves the Betti statistic, together with its inverse and
// a desk-scale checker for periodicity of the L-class in n.
//
// Weights are normalized to a, b > 0 first; (a,b) and (-a,-b) give the same
// family of groups.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "eqhilb/coloring.hpp"
#include "eqhilb/errors.hpp"
#include "eqhilb/partition.hpp"
#include "eqhilb/tangent.hpp"

namespace eqhilb {

namespace detail {
inline GroupParams positive_weights(const GroupParams& g, const char* op) {
    const auto ab = static_cast<std::int64_t>(g.a()) * g.b();
    if (ab <= 0)
        throw PreconditionError(Hypothesis::WrongSign,
                                std::string(op) + " requires a*b > 0, got " + to_string(g));
    return g.a() > 0 ? g : GroupParams(-g.a(), -g.b(), g.n());
}

inline std::int64_t rab(const GroupParams& g, int r) {
    return static_cast<std::int64_t>(r) * g.a() * g.b();
}
}  // namespace detail

/// D_k = { (i, j) >= 0 : a*i + b*j = k }, ordered by increasing i.
inline std::vector<Box> diagonal(const GroupParams& g, std::int64_t k) {
    const GroupParams pos = detail::positive_weights(g, "diagonal");
    std::vector<Box> out;
    if (k < 0) return out;
    for (std::int64_t i = 0; pos.a() * i <= k; ++i) {
        const std::int64_t rest = k - pos.a() * i;
        if (rest % pos.b() == 0) out.push_back({static_cast<int>(i), static_cast<int>(rest / pos.b())});
    }
    return out;
}

/// Whether k = rab + a*u + b*v for some u, v >= 0.
inline bool representable_above(const GroupParams& g, int r, std::int64_t k) {
    const GroupParams pos = detail::positive_weights(g, "representable_above");
    return !diagonal(pos, k - detail::rab(pos, r)).empty();
}

/// S_k: boxes of p colored k mod n.
inline std::vector<Box> color_class(const GroupParams& g, const Partition& p, int k) {
    std::vector<Box> out;
    const int target = g.reduce(k);
    for (Box b : p.boxes())
        if (color(g, b) == target) out.push_back(b);
    return out;
}

/// A balanced partition cut at an anchor (i0, j0) on D_{rab} outside the
/// diagram.  Region A lies left of the anchor and weakly above it; region B
/// lies weakly right of it and strictly below.
struct SplitContext {
    GroupParams g;  // a, b > 0
    int r = 0;
    Partition lambda;
    Box anchor;

    bool in_region_a(Box b) const noexcept { return b.i < anchor.i && b.j >= anchor.j; }
    bool in_region_b(Box b) const noexcept { return b.i >= anchor.i && b.j < anchor.j; }
};

namespace detail {
inline GroupParams check_split_hypotheses(const GroupParams& g, int r, const Partition& lambda) {
    const GroupParams pos = positive_weights(g, "the stabilization map");
    if (r < 0) throw PreconditionError(Hypothesis::InvalidArgument, "r must be >= 0");
    if (pos.n() <= rab(pos, r))
        throw PreconditionError(Hypothesis::ThresholdNotMet,
                                "requires n > r*a*b (" + std::to_string(pos.n()) +
                                    " <= " + std::to_string(rab(pos, r)) + ")");
    auto m = is_balanced(pos, lambda);
    if (!m || *m != r)
        throw PreconditionError(Hypothesis::Unbalanced,
                                "partition " + to_string(lambda) + " is not in B^" +
                                    std::to_string(r) + " for " + to_string(pos));
    return pos;
}
}  // namespace detail

/// Every point of D_{rab} outside the diagram, in order of increasing i.
inline std::vector<Box> split_anchors(const GroupParams& g, int r, const Partition& lambda) {
    const GroupParams pos = detail::check_split_hypotheses(g, r, lambda);
    std::vector<Box> out;
    for (Box b : diagonal(pos, detail::rab(pos, r)))
        if (!lambda.contains(b)) out.push_back(b);
    return out;
}

/// Split at a caller-chosen anchor, which must lie on D_{rab} outside lambda.
inline SplitContext make_split_at(const GroupParams& g, int r, const Partition& lambda,
                                  Box anchor) {
    const GroupParams pos = detail::check_split_hypotheses(g, r, lambda);
    if (static_cast<std::int64_t>(pos.a()) * anchor.i +
                static_cast<std::int64_t>(pos.b()) * anchor.j != detail::rab(pos, r) ||
        anchor.i < 0 || anchor.j < 0 || lambda.contains(anchor))
        throw PreconditionError(Hypothesis::InvalidArgument,
                                "anchor must lie on D_{rab} outside the diagram");
    return SplitContext{pos, r, lambda, anchor};
}

/// Split at the anchor with the smallest column index.
inline SplitContext make_split(const GroupParams& g, int r, const Partition& lambda) {
    auto anchors = split_anchors(g, r, lambda);
    if (anchors.empty())
        throw InvariantViolation("no point of D_{rab} lies outside " + to_string(lambda));
    return make_split_at(g, r, lambda, anchors.front());
}

/// Shift down by a on region A, left by b on region B.
inline Box phi(const SplitContext& ctx, Box b) {
    if (ctx.in_region_a(b)) return {b.i, b.j - ctx.g.a()};
    if (ctx.in_region_b(b)) return {b.i - ctx.g.b(), b.j};
    throw PreconditionError(Hypothesis::InvalidArgument,
                            "box (" + std::to_string(b.i) + "," + std::to_string(b.j) +
                                ") lies in neither region");
}

struct ColorClassSplit {
    std::vector<Box> a;
    std::vector<Box> b;
    std::vector<Box> neither;
};

/// S_k intersected with the two regions of ctx.
inline ColorClassSplit split_color_class(const SplitContext& ctx, int k) {
    ColorClassSplit out;
    for (Box b : color_class(ctx.g, ctx.lambda, k)) {
        if (ctx.in_region_a(b)) out.a.push_back(b);
        else if (ctx.in_region_b(b)) out.b.push_back(b);
        else out.neither.push_back(b);
    }
    return out;
}

namespace detail {
/// Reassembles a diagram from the heights of columns left of the anchor and
/// the lengths of rows below it.  Nothing lives weakly up-right of the anchor.
inline Partition assemble_from_profiles(Box anchor, const std::vector<int>& cols,
                                        const std::vector<int>& rows, const char* who) {
    auto fail = [&](const std::string& why) {
        throw InvariantViolation(std::string(who) + ": " + why);
    };
    for (std::size_t i = 1; i < cols.size(); ++i)
        if (cols[i] > cols[i - 1]) fail("column profile is not monotone");
    for (std::size_t j = 1; j < rows.size(); ++j)
        if (rows[j] > rows[j - 1]) fail("row profile is not monotone");
    for (int i = 0; i < anchor.i; ++i)
        for (int j = 0; j < anchor.j; ++j)
            if ((j < cols[i]) != (i < rows[j])) fail("profiles disagree below-left of the anchor");

    std::vector<int> out;
    const int top = cols.empty() ? 0 : cols.front();
    for (int j = 0; j < std::max(top, anchor.j); ++j) {
        if (j < anchor.j) {
            out.push_back(rows[j]);
        } else {
            int len = 0;
            while (len < anchor.i && cols[len] > j) ++len;
            out.push_back(len);
        }
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    for (std::size_t j = 1; j < out.size(); ++j)
        if (out[j] > out[j - 1]) fail("reassembled rows are not monotone");
    return Partition(std::move(out));
}
}  // namespace detail

/// psi(lambda) together with the context it was computed in.
struct PsiResult {
    SplitContext ctx;
    Partition image;
};

/// For each box of region A colored in [n-b, n-1] its column gains a cells;
/// for each box of region B colored in [n-a, n-1] its row gains b cells.
inline PsiResult psi_with_context(const GroupParams& g, int r, const Partition& lambda) {
    SplitContext ctx = make_split(g, r, lambda);
    const int a = ctx.g.a();
    const int b = ctx.g.b();
    const int n = ctx.g.n();
    const Box anchor = ctx.anchor;

    std::vector<int> cols(anchor.i);
    std::vector<int> rows(anchor.j);
    for (int i = 0; i < anchor.i; ++i) cols[i] = lambda.col_height(i);
    for (int j = 0; j < anchor.j; ++j) rows[j] = lambda.row_len(j);

    for (Box box : lambda.boxes()) {
        const int k = color(ctx.g, box);
        if (ctx.in_region_a(box) && k >= n - b) cols[box.i] += a;
        if (ctx.in_region_b(box) && k >= n - a) rows[box.j] += b;
    }

    Partition image = detail::assemble_from_profiles(anchor, cols, rows, "psi");
    const GroupParams bigger = ctx.g.with_order(n + a * b);
    auto m = is_balanced(bigger, image);
    if (!m || *m != r)
        throw InvariantViolation("psi(" + to_string(lambda) + ") = " + to_string(image) +
                                 " is not balanced for " + to_string(bigger));
    return {std::move(ctx), std::move(image)};
}

inline Partition psi(const GroupParams& g, int r, const Partition& lambda) {
    return psi_with_context(g, r, lambda).image;
}

/// Inverse of psi by searching B^r_{a,b;n} for the preimage.
inline Partition psi_inverse_reference(const GroupParams& g, int r, const Partition& mu,
                                       EnumerationLimits limits = {}) {
    const GroupParams pos = detail::positive_weights(g, "psi_inverse");
    for (const Partition& lambda : enumerate_balanced(pos, r, limits))
        if (psi(pos, r, lambda) == mu) return lambda;
    throw InvariantViolation(to_string(mu) + " has no preimage under psi");
}

/// Inverse of psi by deleting the cells of mu whose (a,b;n+ab)-color lies in
/// [n, n+ab-1], then closing the gaps: columns left of the anchor shrink
/// vertically and rows below it shrink horizontally.
inline Partition psi_inverse(const GroupParams& g, int r, const Partition& mu) {
    const GroupParams pos = detail::positive_weights(g, "psi_inverse");
    const int n = pos.n();
    const int a = pos.a();
    const int b = pos.b();
    if (n <= detail::rab(pos, r))
        throw PreconditionError(Hypothesis::ThresholdNotMet,
                                "requires n > r*a*b (" + std::to_string(n) + " <= " +
                                    std::to_string(detail::rab(pos, r)) + ")");
    const GroupParams bigger = pos.with_order(n + a * b);
    auto m = is_balanced(bigger, mu);
    if (!m || *m != r)
        throw PreconditionError(Hypothesis::Unbalanced,
                                "partition " + to_string(mu) + " is not in B^" +
                                    std::to_string(r) + " for " + to_string(bigger));

    // psi leaves the region weakly up-right of the anchor untouched, and only
    // grows the diagram, so mu has the same smallest-i anchor as its preimage.
    std::optional<Box> anchor;
    for (Box p : diagonal(pos, detail::rab(pos, r)))
        if (!mu.contains(p)) {
            anchor = p;
            break;
        }
    if (!anchor) throw InvariantViolation("no point of D_{rab} lies outside " + to_string(mu));

    std::vector<int> cols(anchor->i, 0);
    std::vector<int> rows(anchor->j, 0);
    for (Box box : mu.boxes()) {
        if (color(bigger, box) >= n) continue;
        if (box.i < anchor->i) ++cols[box.i];
        if (box.j < anchor->j) ++rows[box.j];
    }
    Partition lambda = detail::assemble_from_profiles(*anchor, cols, rows, "psi_inverse");
    auto back = is_balanced(pos, lambda);
    if (!back || *back != r)
        throw InvariantViolation("deletion from " + to_string(mu) + " gave unbalanced " +
                                 to_string(lambda));
    return lambda;
}

struct PsiWitness {
    Partition lambda;
    Partition image;
    int beta_before = 0;
    int beta_after = 0;
};

struct PeriodEntry {
    int n = 0;
    LPolynomial class_at_n;
    LPolynomial class_at_shifted;  // at n + ab
    bool classes_equal = false;
    std::vector<int> mismatched_coefficients;
    bool bijective = false;
    bool beta_preserved = false;
    bool inverse_agrees = false;  // fast and reference inverses both return lambda
    std::vector<PsiWitness> witnesses;
    std::vector<std::string> failures;

    bool passed() const noexcept {
        return classes_equal && bijective && beta_preserved && inverse_agrees;
    }
};

struct PeriodReport {
    GroupParams g{1, 1, 1};  // positive weights; n is the first n checked
    int r = 0;
    int period = 0;
    std::vector<PeriodEntry> entries;

    bool passed() const noexcept {
        return std::all_of(entries.begin(), entries.end(),
                           [](const PeriodEntry& e) { return e.passed(); });
    }
};

/// Compares the L-classes at n and n+ab for every n in [n_from, n_to] with
/// n > rab, and checks that psi realizes the bijection on each.
inline PeriodReport verify_period(const GroupParams& g, int r, int n_from, int n_to,
                                  EnumerationLimits limits = {}) {
    const GroupParams pos = detail::positive_weights(g, "verify_period");
    const int ab = pos.a() * pos.b();
    PeriodReport report{pos, r, ab, {}};

    for (int n = std::max(n_from, 1); n <= n_to; ++n) {
        if (n <= detail::rab(pos, r)) continue;
        const GroupParams here = pos.with_order(n);
        const GroupParams there = pos.with_order(n + ab);
        PeriodEntry e;
        e.n = n;

        const auto source = enumerate_balanced(here, r, limits);
        const auto target = enumerate_balanced(there, r, limits);
        for (const Partition& p : source) e.class_at_n.add_term(betti_statistic(here, p));
        for (const Partition& p : target) e.class_at_shifted.add_term(betti_statistic(there, p));
        e.classes_equal = e.class_at_n == e.class_at_shifted;
        const int top = std::max(e.class_at_n.degree(), e.class_at_shifted.degree());
        for (int k = 0; k <= top; ++k)
            if (e.class_at_n.coeff(k) != e.class_at_shifted.coeff(k))
                e.mismatched_coefficients.push_back(k);

        std::vector<Partition> images;
        e.beta_preserved = true;
        e.inverse_agrees = true;
        for (const Partition& lambda : source) {
            PsiWitness w{lambda, {}, betti_statistic(here, lambda), 0};
            try {
                w.image = psi(here, r, lambda);
                w.beta_after = betti_statistic(there, w.image);
            } catch (const std::exception& ex) {
                e.failures.push_back(std::string("psi failed on ") + to_string(lambda) + ": " +
                                     ex.what());
                e.beta_preserved = false;
                e.inverse_agrees = false;
                continue;
            }
            if (w.beta_before != w.beta_after) {
                e.beta_preserved = false;
                e.failures.push_back("beta changes on " + to_string(lambda));
            }
            try {
                const Partition fast = psi_inverse(here, r, w.image);
                const Partition slow = psi_inverse_reference(here, r, w.image, limits);
                if (fast != lambda || slow != lambda) {
                    e.inverse_agrees = false;
                    e.failures.push_back("inverse mismatch on " + to_string(lambda));
                }
            } catch (const std::exception& ex) {
                e.inverse_agrees = false;
                e.failures.push_back(std::string("inverse failed on ") + to_string(w.image) +
                                     ": " + ex.what());
            }
            images.push_back(w.image);
            e.witnesses.push_back(std::move(w));
        }
        std::sort(images.begin(), images.end());
        const bool injective = std::adjacent_find(images.begin(), images.end()) == images.end();
        e.bijective = injective && images == target;
        if (!e.bijective) e.failures.push_back("psi is not a bijection onto B^r at n+ab");
        report.entries.push_back(std::move(e));
    }
    return report;
}

}  // namespace eqhilb
