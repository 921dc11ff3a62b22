#pragma once

// Integer partitions as Young diagrams in the Z_{>=0}^2 lattice.
//
// Box (i, j) is the monomial x^i y^j: i is the column (x) index and j is the
// row (y) index.  Row j has length row_len(j); row 0 is the longest and sits
// at the bottom of the lattice.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "eqhilb/errors.hpp"

namespace eqhilb {

struct Box {
    int i = 0;  // column, exponent of x
    int j = 0;  // row, exponent of y

    friend constexpr bool operator==(const Box&, const Box&) = default;
    friend constexpr auto operator<=>(const Box&, const Box&) = default;
};

class Partition {
public:
    Partition() = default;

    /// Rows must be weakly decreasing and nonnegative; trailing zeros are dropped.
    explicit Partition(std::vector<int> rows) : rows_(std::move(rows)) {
        while (!rows_.empty() && rows_.back() == 0) rows_.pop_back();
        for (std::size_t k = 0; k < rows_.size(); ++k) {
            if (rows_[k] < 0)
                throw PreconditionError(Hypothesis::InvalidArgument,
                                        "partition rows must be nonnegative");
            if (k > 0 && rows_[k] > rows_[k - 1])
                throw PreconditionError(Hypothesis::InvalidArgument,
                                        "partition rows must be weakly decreasing");
            size_ += rows_[k];
        }
    }

    Partition(std::initializer_list<int> rows) : Partition(std::vector<int>(rows)) {}

    /// Accepts any row order; sorts descending first.
    static Partition from_unsorted(std::vector<int> rows) {
        std::sort(rows.begin(), rows.end(), std::greater<>());
        return Partition(std::move(rows));
    }

    /// Builds the partition with the given column heights (weakly decreasing).
    static Partition from_column_heights(std::span<const int> heights) {
        std::vector<int> rows;
        for (std::size_t i = 0; i < heights.size(); ++i) {
            if (i > 0 && heights[i] > heights[i - 1])
                throw InvariantViolation("column heights are not weakly decreasing");
            for (int j = static_cast<int>(rows.size()); j < heights[i]; ++j) rows.push_back(0);
            for (int j = 0; j < heights[i]; ++j) rows[j] = static_cast<int>(i) + 1;
        }
        return Partition(std::move(rows));
    }

    std::span<const int> rows() const noexcept { return rows_; }
    int num_rows() const noexcept { return static_cast<int>(rows_.size()); }
    int num_cols() const noexcept { return rows_.empty() ? 0 : rows_.front(); }
    int size() const noexcept { return size_; }
    bool empty() const noexcept { return rows_.empty(); }

    /// l(j); zero outside the diagram.
    int row_len(int j) const noexcept {
        return (j >= 0 && j < num_rows()) ? rows_[j] : 0;
    }

    /// c(i) = #{ j : (i, j) in the diagram }.
    int col_height(int i) const noexcept {
        if (i < 0) return 0;
        // rows_ is decreasing, so count rows longer than i.
        auto it = std::partition_point(rows_.begin(), rows_.end(),
                                       [i](int len) { return len > i; });
        return static_cast<int>(it - rows_.begin());
    }

    bool contains(Box b) const noexcept {
        return b.i >= 0 && b.j >= 0 && b.j < num_rows() && b.i < rows_[b.j];
    }

    /// Row-major: j ascending, then i ascending.
    std::vector<Box> boxes() const {
        std::vector<Box> out;
        out.reserve(size_);
        for (int j = 0; j < num_rows(); ++j)
            for (int i = 0; i < rows_[j]; ++i) out.push_back({i, j});
        return out;
    }

    Partition conjugate() const {
        std::vector<int> cols(num_cols());
        for (int i = 0; i < num_cols(); ++i) cols[i] = col_height(i);
        return Partition(std::move(cols));
    }

    friend bool operator==(const Partition& x, const Partition& y) noexcept {
        return x.rows_ == y.rows_;
    }

    /// Canonical total order: by size, then lexicographically on rows.
    friend std::strong_ordering operator<=>(const Partition& x, const Partition& y) noexcept {
        if (auto c = x.size_ <=> y.size_; c != 0) return c;
        return std::lexicographical_compare_three_way(x.rows_.begin(), x.rows_.end(),
                                                      y.rows_.begin(), y.rows_.end());
    }

private:
    std::vector<int> rows_;
    int size_ = 0;
};

inline constexpr std::string_view kEmptySymbol = "∅";

/// "4,3,2"; the empty partition prints as the empty-set symbol.
inline std::string to_string(const Partition& p) {
    if (p.empty()) return std::string(kEmptySymbol);
    std::string s;
    for (int k = 0; k < p.num_rows(); ++k) {
        if (k) s += ',';
        s += std::to_string(p.rows()[k]);
    }
    return s;
}

/// Inverse of to_string.  "", "0" and the empty-set symbol all denote the
/// empty partition.  Rows may be given in any order.
inline Partition parse_partition(std::string_view text) {
    auto trim = [](std::string_view s) {
        while (!s.empty() && (s.front() == ' ' || s.front() == '(')) s.remove_prefix(1);
        while (!s.empty() && (s.back() == ' ' || s.back() == ')')) s.remove_suffix(1);
        return s;
    };
    text = trim(text);
    if (text.empty() || text == kEmptySymbol || text == "0") return {};
    std::vector<int> rows;
    while (!text.empty()) {
        auto comma = text.find(',');
        auto tok = trim(text.substr(0, comma));
        if (tok.empty())
            throw PreconditionError(Hypothesis::InvalidArgument, "empty row in partition text");
        int v = 0;
        for (char ch : tok) {
            if (ch < '0' || ch > '9')
                throw PreconditionError(Hypothesis::InvalidArgument,
                                        "bad partition text: " + std::string(tok));
            v = v * 10 + (ch - '0');
        }
        rows.push_back(v);
        if (comma == std::string_view::npos) break;
        text.remove_prefix(comma + 1);
    }
    return Partition(std::move(rows));
}

/// One character per box, left-justified rows, row 0 printed last (bottom).
inline std::string render_ascii(const Partition& p,
                                const std::function<char(Box)>& cell = {}) {
    std::string out;
    for (int j = p.num_rows() - 1; j >= 0; --j) {
        for (int i = 0; i < p.row_len(j); ++i) out += cell ? cell({i, j}) : '#';
        out += '\n';
    }
    return out;
}

/// Calls f on every partition of m, in reverse lexicographic order of rows.
template <typename F>
void for_each_partition(int m, F&& f) {
    if (m < 0) return;
    if (m == 0) {
        f(Partition{});
        return;
    }
    std::vector<int> rows;
    // Depth-first over the next row length, bounded by the previous one.
    std::function<void(int, int)> rec = [&](int remaining, int cap) {
        if (remaining == 0) {
            f(Partition(rows));
            return;
        }
        for (int len = std::min(remaining, cap); len >= 1; --len) {
            rows.push_back(len);
            rec(remaining - len, len);
            rows.pop_back();
        }
    };
    rec(m, m);
}

inline std::vector<Partition> all_partitions(int m) {
    std::vector<Partition> out;
    for_each_partition(m, [&](const Partition& p) { out.push_back(p); });
    return out;
}

}  // namespace eqhilb

template <>
struct std::hash<eqhilb::Partition> {
    std::size_t operator()(const eqhilb::Partition& p) const noexcept {
        std::size_t h = 0xcbf29ce484222325ull;
        for (int r : p.rows()) h = (h ^ static_cast<std::size_t>(r)) * 0x100000001b3ull;
        return h;
    }
};
