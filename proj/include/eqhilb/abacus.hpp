#pragma once

// Boundary-word abaci, n-runner decomposition, n-cores and n-quotients.
//
// The abacus of a partition writes a 1 for each vertical edge and a 0 for
// each horizontal edge of its outer boundary.  Position 0 is the first 0 of
// the partition's own word; everything left of the word is 1 and everything
// right of it is 0.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "eqhilb/errors.hpp"
#include "eqhilb/partition.hpp"

namespace eqhilb {

class Abacus {
public:
    Abacus() = default;

    /// word[k] sits at position offset + k.  The result is put in canonical
    /// form: leading 1s and trailing 0s move into the implicit tails.
    Abacus(std::vector<std::uint8_t> word, std::int64_t offset)
        : word_(std::move(word)), offset_(offset) {
        for (auto bit : word_)
            if (bit > 1) throw PreconditionError(Hypothesis::InvalidArgument, "abacus bits are 0/1");
        canonicalize();
    }

    /// Parses a 0/1 string starting at the given offset.
    static Abacus from_string(std::string_view bits, std::int64_t offset = 0) {
        std::vector<std::uint8_t> w;
        for (char ch : bits) {
            if (ch != '0' && ch != '1')
                throw PreconditionError(Hypothesis::InvalidArgument, "abacus words use 0 and 1");
            w.push_back(static_cast<std::uint8_t>(ch - '0'));
        }
        return Abacus(std::move(w), offset);
    }

    std::span<const std::uint8_t> word() const noexcept { return word_; }
    std::int64_t offset() const noexcept { return offset_; }

    int at(std::int64_t pos) const noexcept {
        if (pos < offset_) return 1;
        if (pos >= offset_ + static_cast<std::int64_t>(word_.size())) return 0;
        return word_[static_cast<std::size_t>(pos - offset_)];
    }

    /// Ones at nonnegative positions minus zeros at negative positions.
    std::int64_t charge() const noexcept {
        std::int64_t c = 0;
        for (std::size_t k = 0; k < word_.size(); ++k) {
            const std::int64_t pos = offset_ + static_cast<std::int64_t>(k);
            if (pos >= 0 && word_[k] == 1) ++c;
            if (pos < 0 && word_[k] == 0) --c;
        }
        // Implicit 1s at [0, offset_) and implicit 0s at [end, 0).
        const std::int64_t end = offset_ + static_cast<std::int64_t>(word_.size());
        return c + std::max<std::int64_t>(offset_, 0) - std::max<std::int64_t>(-end, 0);
    }

    std::string word_string() const {
        std::string s;
        for (auto bit : word_) s += static_cast<char>('0' + bit);
        return s;
    }

    friend bool operator==(const Abacus&, const Abacus&) = default;

private:
    void canonicalize() {
        std::size_t first = 0;
        while (first < word_.size() && word_[first] == 1) ++first;
        std::size_t last = word_.size();
        while (last > first && word_[last - 1] == 0) --last;
        offset_ += static_cast<std::int64_t>(first);
        word_ = std::vector<std::uint8_t>(word_.begin() + static_cast<std::ptrdiff_t>(first),
                                          word_.begin() + static_cast<std::ptrdiff_t>(last));
    }

    std::vector<std::uint8_t> word_;
    std::int64_t offset_ = 0;
};

/// "…11|01011001|00…"
inline std::string to_string(const Abacus& ab) {
    return "…11|" + ab.word_string() + "|00…";
}

/// Boundary word read from the end of the shortest row to the end of the
/// longest: for each row, the drop in length as 0s followed by a 1.
inline Abacus to_abacus(const Partition& p) {
    std::vector<std::uint8_t> w;
    for (int j = p.num_rows() - 1; j >= 0; --j) {
        const int drop = p.row_len(j) - p.row_len(j + 1);
        w.insert(w.end(), static_cast<std::size_t>(drop), 0);
        w.push_back(1);
    }
    return Abacus(std::move(w), 0);
}

/// Each 1 closes a row as long as the number of 0s before it.
inline Partition from_abacus(const Abacus& ab) {
    std::vector<int> rows;
    int zeros = 0;
    for (auto bit : ab.word()) {
        if (bit == 0) ++zeros;
        else if (zeros > 0) rows.push_back(zeros);
    }
    std::reverse(rows.begin(), rows.end());
    return Partition(std::move(rows));
}

/// An n-tuple of partitions.
struct MultiPartition {
    std::vector<Partition> parts;

    int total_size() const noexcept {
        int s = 0;
        for (const auto& p : parts) s += p.size();
        return s;
    }
    bool all_empty() const noexcept {
        return std::all_of(parts.begin(), parts.end(), [](const Partition& p) { return p.empty(); });
    }

    friend bool operator==(const MultiPartition&, const MultiPartition&) = default;
};

inline std::string to_string(const MultiPartition& mp) {
    std::string s = "(";
    for (std::size_t k = 0; k < mp.parts.size(); ++k) {
        if (k) s += ',';
        s += mp.parts[k].empty() ? std::string(kEmptySymbol) : "(" + to_string(mp.parts[k]) + ")";
    }
    return s + ")";
}

/// Runners are read in the frame that starts at the first 0 of the abacus,
/// so bead counts equal the number of rows.  That frame moves with lambda:
/// (2) and (1,1) share core and quotient for n = 2.  `frame` (rows mod n)
/// records the missing residue; canonical_quotient rotates to the frame with
/// a bead count divisible by n, where the map is the classical bijection.
struct CoreQuotient {
    MultiPartition quotient;
    Partition core;
    std::vector<Abacus> runners;  // runner i: positions = i mod n, at runner positions t >= 0
    int frame = 0;
};

/// Runner i collects positions i, i+n, i+2n, ... of the partition's abacus.
/// Sorting each runner to 1…10…0 and reading the array back gives the core.
inline CoreQuotient runners(const Partition& p, int n) {
    if (n < 1) throw PreconditionError(Hypothesis::NonPositiveOrder, "n must be >= 1");
    const Abacus ab = to_abacus(p);
    const auto len = static_cast<std::int64_t>(ab.word().size());
    const std::int64_t depth = (len + n - 1) / n;

    CoreQuotient out;
    std::vector<std::int64_t> charges(n, 0);
    for (int i = 0; i < n; ++i) {
        std::vector<std::uint8_t> w;
        for (std::int64_t t = 0; t < depth; ++t) w.push_back(static_cast<std::uint8_t>(ab.at(i + t * n)));
        charges[i] = std::count(w.begin(), w.end(), 1);
        Abacus runner(std::move(w), 0);
        out.quotient.parts.push_back(from_abacus(runner));
        out.runners.push_back(std::move(runner));
    }

    // Sorted runner i holds 1s exactly at runner positions t < charges[i].
    std::vector<std::uint8_t> core_word;
    for (std::int64_t pos = 0; pos < depth * n; ++pos)
        core_word.push_back(pos / n < charges[pos % n] ? 1 : 0);
    out.core = from_abacus(Abacus(std::move(core_word), 0));
    out.frame = p.num_rows() % n;
    return out;
}

/// Quotient relabelled as if ceil-padded to a bead count divisible by n.
inline MultiPartition canonical_quotient(const CoreQuotient& cq) {
    const int n = static_cast<int>(cq.quotient.parts.size());
    const int pad = (n - cq.frame) % n;
    MultiPartition out;
    for (int j = 0; j < n; ++j) out.parts.push_back(cq.quotient.parts[((j - pad) % n + n) % n]);
    return out;
}

inline bool is_core(const Partition& p, int n) { return runners(p, n).quotient.all_empty(); }

inline bool has_empty_core(const Partition& p, int n) { return runners(p, n).core.empty(); }

/// The partition with the given n-core and n-quotient (n = quot.parts.size()),
/// both read in the first-0 frame.  With `frame` set, only partitions with
/// that many rows mod n qualify and the answer is unique; without it the
/// smallest qualifying frame shift wins.
inline Partition from_core_quotient(const Partition& core, const MultiPartition& quot,
                                    std::optional<int> frame = std::nullopt) {
    const int n = static_cast<int>(quot.parts.size());
    if (n < 1) throw PreconditionError(Hypothesis::NonPositiveOrder, "quotient must have n >= 1 parts");
    if (!is_core(core, n))
        throw PreconditionError(Hypothesis::NotACore,
                                to_string(core) + " is not a " + std::to_string(n) + "-core");

    const Abacus core_ab = to_abacus(core);
    std::vector<Abacus> quot_ab;
    for (const auto& q : quot.parts) quot_ab.push_back(to_abacus(q));

    // The frame is fixed by the result: its own first 0 must sit at position 0.
    // The core's first 0 sits at some shift s >= 0 in that frame, bounded by
    // the number of rows of the result.
    const std::int64_t max_shift = core.size() + static_cast<std::int64_t>(n) * quot.total_size() + 1;
    for (std::int64_t s = 0; s <= max_shift; ++s) {
        std::vector<std::int64_t> charges(n, 0);
        // Runner i of the core, in the frame where the core starts at s.
        for (int i = 0; i < n; ++i) {
            std::int64_t c = 0;
            // Count 1s at runner positions t >= 0: positions i + t*n.
            const std::int64_t end = s + static_cast<std::int64_t>(core_ab.word().size());
            for (std::int64_t pos = i; pos < std::max<std::int64_t>(end, 0); pos += n)
                if (core_ab.at(pos - s) == 1) ++c;
            charges[i] = c;
        }
        // Place quotient i on runner i so that its charge matches.
        std::vector<std::int64_t> starts(n);
        std::int64_t span_end = 0;
        for (int i = 0; i < n; ++i) {
            const auto ones = static_cast<std::int64_t>(
                std::count(quot_ab[i].word().begin(), quot_ab[i].word().end(), 1));
            starts[i] = charges[i] - ones;
            span_end = std::max(span_end, starts[i] + static_cast<std::int64_t>(quot_ab[i].word().size()));
        }
        auto bit_at = [&](std::int64_t pos) {
            const std::int64_t i = ((pos % n) + n) % n;
            const std::int64_t t = (pos - i) / n;
            return quot_ab[i].at(t - starts[i]);
        };
        if (bit_at(0) != 0) continue;
        bool ones_before = true;
        for (std::int64_t pos = -1; pos >= -static_cast<std::int64_t>(n) * (max_shift + 1); --pos)
            if (bit_at(pos) != 1) {
                ones_before = false;
                break;
            }
        if (!ones_before) continue;

        std::vector<std::uint8_t> w;
        for (std::int64_t pos = 0; pos < span_end * n + n; ++pos) w.push_back(static_cast<std::uint8_t>(bit_at(pos)));
        Partition lambda = from_abacus(Abacus(std::move(w), 0));
        auto check = runners(lambda, n);
        if (check.core == core && check.quotient == quot && (!frame || check.frame == *frame))
            return lambda;
    }
    throw PreconditionError(Hypothesis::InvalidArgument,
                            "no partition has core " + to_string(core) + " and quotient " +
                                to_string(quot) + " in the first-0 frame");
}

}  // namespace eqhilb
