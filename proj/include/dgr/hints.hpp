#pragma once

// Column hints: a column of the sum, a carry bit, and digits for the
// column's letters that make the column add up modulo 10.

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "dgr/puzzle.hpp"

namespace dgr {

inline constexpr int kNumColumns = 6;
inline constexpr int kCatalogSize = 351;

/// Column 0 is the rightmost (D + D = T), column 5 the leftmost (D + G = R).
struct Column {
    Letter addend1;
    Letter addend2;
    Letter result;
    /// Distinct letters in addend-then-result reading order.
    std::array<Letter, 3> letters;
    int num_letters;
};

const std::array<Column, kNumColumns>& columns() noexcept;

struct LetterDigit {
    Letter letter;
    int digit;
    friend bool operator==(const LetterDigit&, const LetterDigit&) = default;
};

using HintId = std::int16_t;

struct Hint {
    HintId id = -1;  // position in the catalog
    int column = 0;
    int epsilon = 0;
    std::array<LetterDigit, 3> pair_storage{};
    int num_pairs = 0;

    std::span<const LetterDigit> pairs() const noexcept {
        return {pair_storage.data(), static_cast<std::size_t>(num_pairs)};
    }
    /// "col=3 eps=0 N=1,R=4,B=5"
    std::string to_string() const;

    friend bool operator==(const Hint& a, const Hint& b) noexcept {
        if (a.column != b.column || a.epsilon != b.epsilon || a.num_pairs != b.num_pairs)
            return false;
        for (int i = 0; i < a.num_pairs; ++i)
            if (a.pair_storage[i] != b.pair_storage[i]) return false;
        return true;
    }
};

/// At most one hint per column can be exhibited by an assignment.
class ExhibitedHints {
public:
    void push_back(HintId id) noexcept { ids_[size_++] = id; }
    /// Appends id unless it is negative, without branching. Precondition:
    /// size() < 6.
    void push_back_if(HintId id) noexcept {
        ids_[size_] = id;
        size_ += id >= 0;
    }
    std::size_t size() const noexcept { return size_; }
    bool empty() const noexcept { return size_ == 0; }
    const HintId* begin() const noexcept { return ids_.data(); }
    const HintId* end() const noexcept { return ids_.data() + size_; }
    HintId operator[](std::size_t i) const noexcept { return ids_[i]; }
    bool contains(HintId id) const noexcept {
        for (std::size_t i = 0; i < size_; ++i)
            if (ids_[i] == id) return true;
        return false;
    }

private:
    std::array<HintId, kNumColumns> ids_{};
    std::size_t size_ = 0;
};

class HintCatalog {
public:
    /// Enumerates every hint ordered by column, then epsilon, then digit
    /// tuple. The leftmost-column overflow rule is not applied.
    static HintCatalog build();

    std::size_t size() const noexcept { return hints_.size(); }
    const Hint& operator[](HintId id) const noexcept { return hints_[id]; }
    std::span<const Hint> hints() const noexcept { return hints_; }
    bool is_correct(HintId id) const noexcept { return correct_[id]; }
    bool is_correct(const Hint& h) const;

    /// Catalog entries whose letter-digit pairs all agree with `a`.
    ExhibitedHints extract(const Assignment& a) const noexcept;

    /// Catalog id of the hint on `column` with carry `epsilon` and the given
    /// digits for the column's letters, or -1.
    HintId find(int column, int epsilon, std::span<const int> digits) const;

private:
    static int key(std::span<const int> digits) noexcept;

    std::vector<Hint> hints_;
    std::vector<std::uint8_t> correct_;
    // lookup_[column][packed digits of the column letters]. At most one carry
    // fits a given digit tuple, so the tuple alone identifies the hint.
    std::array<std::array<HintId, 1000>, kNumColumns> lookup_;
};

/// Shared immutable catalog.
const HintCatalog& catalog();

/// Carry into each column in the solved sum 526485 + 197485 = 723970.
const std::array<int, kNumColumns>& solution_carries() noexcept;

inline bool exhibits(const Assignment& a, const Hint& h) noexcept {
    for (const auto& p : h.pairs())
        if (a.digit(p.letter) != p.digit) return false;
    return true;
}

/// Places each pair of `h` by one swap with the letter holding the wanted
/// digit, in stored pair order. At most three swaps.
Assignment assimilate_hint(const Assignment& a, const Hint& h);
void assimilate_hint_inplace(Assignment& a, const Hint& h) noexcept;

/// Same procedure, reporting each swap to `swap(x, y)`, which must apply it
/// to `a`.
template <class SwapFn>
int assimilate_hint_with(const Assignment& a, const Hint& h, SwapFn&& swap) {
    int swaps = 0;
    for (const auto& p : h.pairs()) {
        if (a.digit(p.letter) != p.digit) {
            swap(p.letter, a.holder(p.digit));
            ++swaps;
        }
    }
    return swaps;
}

}  // namespace dgr
