#pragma once

// Number-theoretic helpers around balanced partitions: removing
// pseudoreflections from (a,b;n), the box-to-rectangle map onto
// (1,-1;n)-balanced partitions, counting multipartitions, Hirzebruch-Jung
// continued fractions, and exact quasipolynomial fitting of counts in n.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "eqhilb/coloring.hpp"
#include "eqhilb/errors.hpp"
#include "eqhilb/partition.hpp"

namespace eqhilb {

using Rational = boost::multiprecision::cpp_rational;

/// Divides common factors of a and n (then b and n) out of (a, b; n) until
/// both weights are coprime to the order.  The equivariant Hilbert scheme,
/// hence every invariant computed here, is unchanged.
inline GroupParams normalize_group(const GroupParams& g) {
    int a = g.a();
    int b = g.b();
    int n = g.n();
    for (;;) {
        if (int d = std::gcd(a, n); d > 1) {
            a /= d;
            n /= d;
            continue;
        }
        if (int d = std::gcd(b, n); d > 1) {
            b /= d;
            n /= d;
            continue;
        }
        break;
    }
    return GroupParams(a, b, n);
}

namespace detail {
inline void require_mixed_sign(int a, int b, const char* op) {
    if (!(a > 0 && b < 0))
        throw PreconditionError(Hypothesis::WrongSign,
                                std::string(op) + " requires a > 0 > b, got (" +
                                    std::to_string(a) + "," + std::to_string(b) + ")");
}
}  // namespace detail

/// Replaces every box by an a x (-b) rectangle: each row of length l becomes
/// -b rows of length a*l.
inline Partition rectangle_map(int a, int b, const Partition& p) {
    detail::require_mixed_sign(a, b, "rectangle_map");
    std::vector<int> rows;
    for (int len : p.rows()) rows.insert(rows.end(), static_cast<std::size_t>(-b), a * len);
    return Partition(std::move(rows));
}

inline Partition rectangle_map(const GroupParams& g, const Partition& p) {
    return rectangle_map(g.a(), g.b(), p);
}

/// Row lengths divisible by a, and every run of equal rows of length
/// divisible by -b.  Exactly the image of rectangle_map.
inline bool satisfies_star(const Partition& p, int a, int b) {
    detail::require_mixed_sign(a, b, "satisfies_star");
    auto rows = p.rows();
    for (std::size_t k = 0; k < rows.size();) {
        if (rows[k] % a != 0) return false;
        std::size_t run = k;
        while (run < rows.size() && rows[run] == rows[k]) ++run;
        if ((run - k) % static_cast<std::size_t>(-b) != 0) return false;
        k = run;
    }
    return true;
}

/// Inverse of rectangle_map on partitions satisfying the star condition.
inline Partition shrink_rectangles(const Partition& p, int a, int b) {
    if (!satisfies_star(p, a, b))
        throw PreconditionError(Hypothesis::InvalidArgument,
                                to_string(p) + " is not in the image of the rectangle map");
    std::vector<int> rows;
    for (std::size_t k = 0; k < p.rows().size(); k += static_cast<std::size_t>(-b))
        rows.push_back(p.rows()[k] / a);
    return Partition(std::move(rows));
}

struct RectangleBijectionReport {
    GroupParams g;
    int r = 0;
    std::size_t source_count = 0;  // |B^r_{a,b;n}|
    std::size_t target_count = 0;  // (1,-1;n)-balanced partitions of -rabn with the star condition
    std::vector<Partition> unbalanced_images;  // lambda whose image is not (1,-1;n)-balanced
    std::vector<Partition> missed_targets;     // targets not hit by any lambda

    bool bijective() const noexcept {
        return source_count == target_count && unbalanced_images.empty() && missed_targets.empty();
    }
};

/// Checks by double enumeration that the rectangle map is a bijection from
/// B^r_{a,b;n} onto the star-condition part of B^{-rab}_{1,-1;n}.
inline RectangleBijectionReport check_rectangle_bijection(const GroupParams& g, int r,
                                                          EnumerationLimits limits = {}) {
    detail::require_mixed_sign(g.a(), g.b(), "check_rectangle_bijection");
    if (std::gcd(g.a(), g.n()) != 1 || std::gcd(g.b(), g.n()) != 1)
        throw PreconditionError(Hypothesis::NotCoprimeWeights,
                                "requires a and b coprime to n, got " + to_string(g));
    RectangleBijectionReport rep{g, r, 0, 0, {}, {}};
    const GroupParams sl2(1, -1, g.n());
    const int scale = -g.a() * g.b();

    const auto source = enumerate_balanced(g, r, limits);
    rep.source_count = source.size();
    std::set<Partition> images;
    for (const Partition& p : source) {
        Partition img = rectangle_map(g, p);
        if (is_balanced(sl2, img) != std::optional<int>(r * scale)) rep.unbalanced_images.push_back(p);
        images.insert(std::move(img));
    }
    for (const Partition& q : enumerate_balanced(sl2, r * scale, limits)) {
        if (!satisfies_star(q, g.a(), g.b())) continue;
        ++rep.target_count;
        if (!images.contains(q)) rep.missed_targets.push_back(q);
    }
    return rep;
}

/// Coefficients p(0..r) of prod (1 - t^i)^{-1}.
inline std::vector<std::uint64_t> partition_counts(int r) {
    std::vector<std::uint64_t> p(static_cast<std::size_t>(std::max(r, 0)) + 1, 0);
    p[0] = 1;
    for (int part = 1; part <= r; ++part)
        for (int m = part; m <= r; ++m) p[m] += p[m - part];
    return p;
}

/// Number of n-tuples of partitions of total size r: the coefficient of t^r
/// in prod (1 - t^i)^{-n}, by repeated truncated convolution.
inline std::uint64_t multipartition_count(int n, int r) {
    if (n < 1) throw PreconditionError(Hypothesis::NonPositiveOrder, "n must be >= 1");
    if (r < 0) return 0;
    const auto p = partition_counts(r);
    std::vector<std::uint64_t> acc(p);
    for (int k = 1; k < n; ++k) {
        std::vector<std::uint64_t> next(acc.size(), 0);
        for (int x = 0; x <= r; ++x)
            for (int y = 0; x + y <= r; ++y) next[x + y] += acc[x] * p[y];
        acc = std::move(next);
    }
    return acc[r];
}

/// n/k = a_1 - 1/(a_2 - 1/(... - 1/a_l)) with every a_i >= 2.
inline std::vector<int> hj_expand(int n, int k) {
    if (!(0 < k && k < n))
        throw PreconditionError(Hypothesis::InvalidArgument, "hj_expand requires 0 < k < n");
    if (std::gcd(n, k) != 1)
        throw PreconditionError(Hypothesis::NotCoprimeWeights, "hj_expand requires gcd(n, k) = 1");
    std::vector<int> out;
    while (k != 0) {
        const int a = (n + k - 1) / k;
        out.push_back(a);
        const int rem = a * k - n;
        n = k;
        k = rem;
    }
    return out;
}

/// Evaluates [[a_1, ..., a_l]] exactly.
inline Rational hj_value(const std::vector<int>& terms) {
    if (terms.empty())
        throw PreconditionError(Hypothesis::InvalidArgument, "empty continued fraction");
    Rational v = terms.back();
    for (auto it = terms.rbegin() + 1; it != terms.rend(); ++it) v = Rational(*it) - 1 / v;
    return v;
}

/// Ascending coefficients with exact rational entries.
using RationalPoly = std::vector<Rational>;

inline Rational evaluate(const RationalPoly& poly, const Rational& x) {
    Rational acc = 0;
    for (auto it = poly.rbegin(); it != poly.rend(); ++it) acc = acc * x + *it;
    return acc;
}

/// -1 for the zero polynomial.
inline int degree(const RationalPoly& poly) {
    for (int k = static_cast<int>(poly.size()) - 1; k >= 0; --k)
        if (poly[k] != 0) return k;
    return -1;
}

/// The unique polynomial of degree < points.size() through the points
/// (Newton divided differences, expanded to monomial form).
inline RationalPoly interpolate(const std::vector<std::pair<std::int64_t, Rational>>& points) {
    const std::size_t m = points.size();
    std::vector<Rational> dd;
    dd.reserve(m);
    for (const auto& pt : points) dd.push_back(pt.second);
    for (std::size_t level = 1; level < m; ++level)
        for (std::size_t k = m - 1; k >= level; --k)
            dd[k] = (dd[k] - dd[k - 1]) / Rational(points[k].first - points[k - level].first);

    RationalPoly poly(m, Rational(0));
    RationalPoly basis{Rational(1)};  // prod_{t<k} (x - x_t)
    for (std::size_t k = 0; k < m; ++k) {
        for (std::size_t c = 0; c < basis.size(); ++c) poly[c] += dd[k] * basis[c];
        RationalPoly next(basis.size() + 1, Rational(0));
        for (std::size_t c = 0; c < basis.size(); ++c) {
            next[c + 1] += basis[c];
            next[c] -= basis[c] * points[k].first;
        }
        basis = std::move(next);
    }
    poly.resize(static_cast<std::size_t>(std::max(degree(poly), 0)) + 1);
    return poly;
}

/// polys[l] applies to n with n mod period = l.  An empty entry means that
/// residue class was never sampled.
struct Quasipolynomial {
    int period = 1;
    std::vector<RationalPoly> polys;
    std::int64_t valid_from = 0;

    std::optional<Rational> operator()(std::int64_t n) const {
        const auto l = static_cast<std::size_t>(((n % period) + period) % period);
        if (l >= polys.size() || polys[l].empty()) return std::nullopt;
        return evaluate(polys[l], Rational(n));
    }

    friend bool operator==(const Quasipolynomial&, const Quasipolynomial&) = default;
};

struct Sample {
    std::int64_t n = 0;
    std::int64_t count = 0;
};

struct ResidueFit {
    int residue = 0;
    std::size_t samples = 0;
    bool validated = false;
    int observed_degree = -1;
    std::int64_t valid_from = 0;
    std::vector<std::int64_t> held_out;  // n values checked by extrapolation
};

struct QuasipolynomialFit {
    Quasipolynomial qp;
    std::vector<ResidueFit> classes;  // sampled classes only

    bool validated() const noexcept {
        return !classes.empty() && std::all_of(classes.begin(), classes.end(),
                                               [](const ResidueFit& c) { return c.validated; });
    }
};

/// Fits one polynomial of degree <= degree_bound per residue class mod period.
///
/// Within a class, samples are sorted by n and the largest `holdout` are kept
/// back.  The interpolant through the remaining samples must have degree <=
/// degree_bound and reproduce every held-out value.  If that fails, the
/// smallest samples are dropped one at a time; valid_from is the first n of
/// the window that validates.  Unsampled classes are skipped.
inline QuasipolynomialFit fit_quasipolynomial(std::vector<Sample> samples, int period,
                                              int degree_bound, int holdout = 1) {
    if (period < 1) throw PreconditionError(Hypothesis::InvalidArgument, "period must be >= 1");
    if (degree_bound < 0 || holdout < 1)
        throw PreconditionError(Hypothesis::InvalidArgument, "need degree_bound >= 0, holdout >= 1");

    std::map<int, std::vector<Sample>> by_class;
    for (const Sample& s : samples) by_class[static_cast<int>(((s.n % period) + period) % period)].push_back(s);

    QuasipolynomialFit fit;
    fit.qp.period = period;
    fit.qp.polys.assign(static_cast<std::size_t>(period), RationalPoly{});
    std::int64_t overall_from = std::numeric_limits<std::int64_t>::min();

    for (auto& [residue, cls] : by_class) {
        std::sort(cls.begin(), cls.end(), [](const Sample& x, const Sample& y) { return x.n < y.n; });
        cls.erase(std::unique(cls.begin(), cls.end(),
                              [](const Sample& x, const Sample& y) { return x.n == y.n; }),
                  cls.end());
        const std::size_t need = static_cast<std::size_t>(degree_bound) + 1 + holdout;
        if (cls.size() < need)
            throw PreconditionError(Hypothesis::InsufficientSamples,
                                    "residue class " + std::to_string(residue) + " mod " +
                                        std::to_string(period) + " has " +
                                        std::to_string(cls.size()) + " samples, needs " +
                                        std::to_string(need));

        ResidueFit rf;
        rf.residue = residue;
        rf.samples = cls.size();
        for (std::size_t start = 0; start + need <= cls.size(); ++start) {
            const std::size_t fit_end = cls.size() - static_cast<std::size_t>(holdout);
            std::vector<std::pair<std::int64_t, Rational>> pts;
            for (std::size_t k = start; k < fit_end; ++k) pts.emplace_back(cls[k].n, Rational(cls[k].count));
            RationalPoly poly = interpolate(pts);
            const int deg = degree(poly);
            if (deg > degree_bound) continue;
            bool ok = true;
            for (std::size_t k = fit_end; k < cls.size(); ++k)
                if (evaluate(poly, Rational(cls[k].n)) != Rational(cls[k].count)) ok = false;
            if (!ok) continue;
            rf.validated = true;
            rf.observed_degree = deg;
            rf.valid_from = cls[start].n;
            for (std::size_t k = fit_end; k < cls.size(); ++k) rf.held_out.push_back(cls[k].n);
            fit.qp.polys[static_cast<std::size_t>(residue)] = std::move(poly);
            break;
        }
        if (rf.validated) overall_from = std::max(overall_from, rf.valid_from);
        fit.classes.push_back(std::move(rf));
    }
    fit.qp.valid_from = overall_from == std::numeric_limits<std::int64_t>::min() ? 0 : overall_from;
    return fit;
}

struct QuasipolynomialReport {
    GroupParams g;  // weights; n is the first sampled order
    int r = 0;
    int period = 0;
    bool reduced = false;  // counts taken through normalize_group for non-coprime n
    std::vector<Sample> samples;
    QuasipolynomialFit fit;

    bool passed() const noexcept { return fit.validated(); }
};

/// Samples |B^r_{a,b;n}| over [n_from, n_to] and fits a quasipolynomial of
/// period |ab| and degree <= r, holding out `holdout` values per class.
/// Orders not coprime to a or b are skipped unless `reduce` is set, in which
/// case they are counted through normalize_group.
inline QuasipolynomialReport verify_quasipolynomial(int a, int b, int r, int n_from, int n_to,
                                                    bool reduce = false, int holdout = 2,
                                                    EnumerationLimits limits = {}) {
    if (static_cast<std::int64_t>(a) * b >= 0)
        throw PreconditionError(Hypothesis::WrongSign, "quasipolynomial check requires a*b < 0");
    if (r < 0) throw PreconditionError(Hypothesis::InvalidArgument, "r must be >= 0");
    const int period = std::abs(a * b);
    QuasipolynomialReport rep{GroupParams(a, b, std::max(n_from, 1)), r, period, reduce, {}, {}};
    for (int n = std::max(n_from, 1); n <= n_to; ++n) {
        GroupParams g(a, b, n);
        const bool coprime = std::gcd(a, n) == 1 && std::gcd(b, n) == 1;
        if (!coprime) {
            if (!reduce) continue;
            g = normalize_group(g);
        }
        rep.samples.push_back({n, static_cast<std::int64_t>(enumerate_balanced(g, r, limits).size())});
    }
    rep.fit = fit_quasipolynomial(rep.samples, period, r, holdout);
    return rep;
}

}  // namespace eqhilb
