#pragma once

// Coloring of Young diagrams by the cyclic group G_{a,b;n}, which acts on the
// plane by (x, y) -> (zeta^a x, zeta^b y).  Box (i, j) gets color a*i + b*j mod n.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "eqhilb/errors.hpp"
#include "eqhilb/partition.hpp"

namespace eqhilb {

/// The triple (a, b; n).  Signs of a and b are kept: the sign of a*b decides
/// between periodic (ab > 0) and quasipolynomial (ab < 0) behaviour.
class GroupParams {
public:
    GroupParams(int a, int b, int n) : a_(a), b_(b), n_(n) {
        if (n < 1)
            throw PreconditionError(Hypothesis::NonPositiveOrder, "group order n must be >= 1");
        if (std::gcd(a, b) != 1)
            throw PreconditionError(Hypothesis::NotCoprimeWeights,
                                    "weights must satisfy gcd(a, b) = 1");
        a_mod_ = reduce(a);
        b_mod_ = reduce(b);
    }

    int a() const noexcept { return a_; }
    int b() const noexcept { return b_; }
    int n() const noexcept { return n_; }
    int a_residue() const noexcept { return a_mod_; }
    int b_residue() const noexcept { return b_mod_; }

    /// Same weights, different group order.
    GroupParams with_order(int n) const { return GroupParams(a_, b_, n); }

    int reduce(std::int64_t v) const noexcept {
        auto r = static_cast<int>(v % n_);
        return r < 0 ? r + n_ : r;
    }

    friend bool operator==(const GroupParams& x, const GroupParams& y) noexcept {
        return x.a_ == y.a_ && x.b_ == y.b_ && x.n_ == y.n_;
    }
    friend auto operator<=>(const GroupParams& x, const GroupParams& y) noexcept {
        return std::tie(x.a_, x.b_, x.n_) <=> std::tie(y.a_, y.b_, y.n_);
    }

private:
    int a_;
    int b_;
    int n_;
    int a_mod_ = 0;
    int b_mod_ = 0;
};

inline std::string to_string(const GroupParams& g) {
    return "(" + std::to_string(g.a()) + "," + std::to_string(g.b()) + ";" +
           std::to_string(g.n()) + ")";
}

inline int color(const GroupParams& g, Box box) noexcept {
    return g.reduce(static_cast<std::int64_t>(g.a()) * box.i +
                    static_cast<std::int64_t>(g.b()) * box.j);
}

/// counts[s] = number of boxes colored s.
struct WeightVector {
    std::vector<int> counts;

    friend bool operator==(const WeightVector&, const WeightVector&) = default;
};

inline WeightVector weight_vector(const GroupParams& g, const Partition& p) {
    WeightVector w{std::vector<int>(g.n(), 0)};
    for (int j = 0; j < p.num_rows(); ++j)
        for (int i = 0; i < p.row_len(j); ++i) ++w.counts[color(g, {i, j})];
    return w;
}

/// The common color multiplicity r when every color occurs equally often.
inline std::optional<int> is_balanced(const GroupParams& g, const Partition& p) {
    if (p.size() % g.n() != 0) return std::nullopt;
    auto w = weight_vector(g, p);
    int r = w.counts.front();
    if (std::all_of(w.counts.begin(), w.counts.end(), [r](int c) { return c == r; })) return r;
    return std::nullopt;
}

struct EnumerationLimits {
    int max_boxes = 80;

    /// Reads EQHILB_MAX_BOXES when set.
    static EnumerationLimits from_environment() {
        EnumerationLimits lim;
        if (const char* v = std::getenv("EQHILB_MAX_BOXES")) {
            char* end = nullptr;
            long parsed = std::strtol(v, &end, 10);
            if (end != v && *end == '\0' && parsed > 0) lim.max_boxes = static_cast<int>(parsed);
        }
        return lim;
    }
};

/// All (a,b;n)-balanced partitions of r*n, in canonical order.
///
/// Rows are generated longest first while a running color count is kept; a
/// prefix is abandoned as soon as some color exceeds r.
inline std::vector<Partition> enumerate_balanced(const GroupParams& g, int r,
                                                 EnumerationLimits limits = {}) {
    if (r < 0) throw PreconditionError(Hypothesis::InvalidArgument, "r must be >= 0");
    const std::int64_t total = static_cast<std::int64_t>(r) * g.n();
    if (total > limits.max_boxes)
        throw ResourceLimitError("enumeration of partitions of " + std::to_string(total) +
                                 " exceeds the ceiling of " +
                                 std::to_string(limits.max_boxes) + " boxes");

    std::vector<Partition> out;
    std::vector<int> rows;
    std::vector<int> counts(g.n(), 0);
    const int n = g.n();

    auto rec = [&](auto&& self, int remaining, int cap) -> void {
        if (remaining == 0) {
            out.emplace_back(rows);
            return;
        }
        const int j = static_cast<int>(rows.size());
        const int start = color(g, {0, j});
        // Add the boxes of the next row one at a time; longer rows extend shorter ones.
        int len = 0;
        int c = start;
        const int limit = std::min(remaining, cap);
        std::vector<int> touched;
        touched.reserve(limit);
        for (len = 1; len <= limit; ++len) {
            if (++counts[c] > r) {
                --counts[c];
                break;
            }
            touched.push_back(c);
            rows.push_back(len);
            self(self, remaining - len, len);
            rows.pop_back();
            c += g.a_residue();
            if (c >= n) c -= n;
        }
        for (int t : touched) --counts[t];
    };
    rec(rec, static_cast<int>(total), static_cast<int>(total));

    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace eqhilb
