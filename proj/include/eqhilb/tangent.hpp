#pragma once

// Distinguished arrows d_{i,j}, u_{i,j} at a monomial ideal, their invariant
// subset under G_{a,b;n}, the Betti statistic, and the resulting class in the
// Grothendieck ring written as a polynomial in L = [A^1].

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "eqhilb/coloring.hpp"
#include "eqhilb/errors.hpp"
#include "eqhilb/partition.hpp"

namespace eqhilb {

enum class ArrowKind { D, U };

/// A coordinate function c^{tail}_{head} drawn as an arrow from tail (outside
/// the diagram) to head (inside).  Its torus weight is tail minus head.
struct Arrow {
    ArrowKind kind = ArrowKind::D;
    Box box;   // the box the arrow is attached to
    Box tail;
    Box head;

    int w1() const noexcept { return tail.i - head.i; }
    int w2() const noexcept { return tail.j - head.j; }
    std::pair<int, int> weight_pair() const noexcept { return {w1(), w2()}; }

    /// u_{i,j} pointing straight up, i.e. i = l(j) - 1.
    bool vertical() const noexcept { return w1() == 0; }

    friend bool operator==(const Arrow&, const Arrow&) = default;
};

inline bool is_invariant(const GroupParams& g, const Arrow& arrow) noexcept {
    return g.reduce(static_cast<std::int64_t>(g.a()) * arrow.w1() +
                    static_cast<std::int64_t>(g.b()) * arrow.w2()) == 0;
}

/// One D and one U arrow per box, in box order.
inline std::vector<Arrow> distinguished_arrows(const Partition& p) {
    std::vector<Arrow> out;
    out.reserve(2 * static_cast<std::size_t>(p.size()));
    for (Box b : p.boxes()) {
        const int row = p.row_len(b.j);
        const int col = p.col_height(b.i);
        out.push_back({ArrowKind::D, b, {row, b.j}, {b.i, col - 1}});
        out.push_back({ArrowKind::U, b, {b.i, col}, {row - 1, b.j}});
    }
    return out;
}

inline std::vector<Arrow> invariant_arrows(const GroupParams& g, const Partition& p) {
    auto all = distinguished_arrows(p);
    std::erase_if(all, [&](const Arrow& a) { return !is_invariant(g, a); });
    return all;
}

namespace detail {
inline int require_balanced(const GroupParams& g, const Partition& p) {
    auto r = is_balanced(g, p);
    if (!r)
        throw PreconditionError(Hypothesis::Unbalanced,
                                "partition " + to_string(p) + " is not " + to_string(g) +
                                    "-balanced");
    return *r;
}
}  // namespace detail

/// Weight pairs of the invariant arrows: the torus weights of the cotangent
/// space at the fixed point.
inline std::vector<std::pair<int, int>> cotangent_weights(const GroupParams& g,
                                                          const Partition& p) {
    detail::require_balanced(g, p);
    std::vector<std::pair<int, int>> out;
    for (const Arrow& a : invariant_arrows(g, p)) out.push_back(a.weight_pair());
    return out;
}

/// beta(p): invariant D arrows plus invariant vertical U arrows.
inline int betti_statistic(const GroupParams& g, const Partition& p) {
    detail::require_balanced(g, p);
    int beta = 0;
    for (const Arrow& a : invariant_arrows(g, p))
        if (a.kind == ArrowKind::D || a.vertical()) ++beta;
    return beta;
}

/// Same count from the weights alone: pairs that are lexicographically positive.
inline int count_lex_positive(const std::vector<std::pair<int, int>>& weights) {
    return static_cast<int>(std::count_if(weights.begin(), weights.end(), [](auto w) {
        return w.first > 0 || (w.first == 0 && w.second > 0);
    }));
}

/// Same count for the concrete one-parameter subgroup with weight (p, q):
/// pairs with p*w1 + q*w2 > 0.  Agrees with count_lex_positive once
/// q >= 1 and p > q * max|w2|.
inline int count_positive_for(const std::vector<std::pair<int, int>>& weights,
                              std::int64_t p, std::int64_t q) {
    return static_cast<int>(std::count_if(weights.begin(), weights.end(), [&](auto w) {
        return p * w.first + q * w.second > 0;
    }));
}

/// coeffs[k] is the coefficient of L^k.  Evaluating at L = 1 gives the Euler
/// characteristic; L = z^2 gives the compactly supported Poincare polynomial.
class LPolynomial {
public:
    LPolynomial() = default;
    explicit LPolynomial(std::vector<std::uint64_t> coeffs) : coeffs_(std::move(coeffs)) {
        trim();
    }

    std::span<const std::uint64_t> coeffs() const noexcept { return coeffs_; }

    std::uint64_t coeff(int k) const noexcept {
        return (k >= 0 && k < static_cast<int>(coeffs_.size())) ? coeffs_[k] : 0;
    }

    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }

    void add_term(int k, std::uint64_t c = 1) {
        if (k >= static_cast<int>(coeffs_.size())) coeffs_.resize(k + 1, 0);
        coeffs_[k] += c;
        trim();
    }

    std::uint64_t euler() const noexcept {
        std::uint64_t s = 0;
        for (auto c : coeffs_) s += c;
        return s;
    }

    /// Betti numbers b_0 .. b_{2*degree}; odd entries are zero.
    std::vector<std::uint64_t> betti_numbers() const {
        std::vector<std::uint64_t> b(coeffs_.empty() ? 0 : 2 * coeffs_.size() - 1, 0);
        for (std::size_t k = 0; k < coeffs_.size(); ++k) b[2 * k] = coeffs_[k];
        return b;
    }

    friend bool operator==(const LPolynomial&, const LPolynomial&) = default;

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<std::uint64_t> coeffs_;
};

namespace detail {
inline std::string format_descending(const LPolynomial& poly, const std::string& var,
                                     int exponent_scale) {
    std::string s;
    for (int k = poly.degree(); k >= 0; --k) {
        auto c = poly.coeff(k);
        if (c == 0) continue;
        if (!s.empty()) s += " + ";
        const int e = k * exponent_scale;
        if (e == 0) {
            s += std::to_string(c);
            continue;
        }
        if (c != 1) s += std::to_string(c);
        s += var;
        if (e != 1) s += "^" + std::to_string(e);
    }
    return s.empty() ? "0" : s;
}
}  // namespace detail

/// "L^2 + 2L"
inline std::string to_string(const LPolynomial& poly) {
    return detail::format_descending(poly, "L", 1);
}

/// Poincare polynomial in descending degree, "z^4 + 2z^2".
inline std::string poincare_string(const LPolynomial& poly) {
    return detail::format_descending(poly, "z", 2);
}

/// Sum of L^beta over B^r_{a,b;n}.
inline LPolynomial l_class(const GroupParams& g, int r, EnumerationLimits limits = {}) {
    LPolynomial cls;
    for (const Partition& p : enumerate_balanced(g, r, limits))
        cls.add_term(betti_statistic(g, p));
    return cls;
}

}  // namespace eqhilb
