#pragma once

// State space of DONALD + GERALD = ROBERT: digit-to-letter assignments, the
// cost landscape over them, and the swap move that defines neighborhoods.

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dgr/rng.hpp"

#if defined(__SSE2__)
#include <emmintrin.h>
#endif
#include <cstring>

namespace dgr {

/// The ten puzzle letters in canonical (alphabetical) order.
enum class Letter : std::uint8_t { A, B, D, E, G, L, N, O, R, T };

inline constexpr int kNumLetters = 10;
inline constexpr std::array<Letter, kNumLetters> kLetters = {
    Letter::A, Letter::B, Letter::D, Letter::E, Letter::G,
    Letter::L, Letter::N, Letter::O, Letter::R, Letter::T};

constexpr int index_of(Letter l) noexcept { return static_cast<int>(l); }
constexpr Letter letter_at(int i) noexcept { return static_cast<Letter>(i); }

char to_char(Letter l) noexcept;
/// Throws std::invalid_argument for characters outside the puzzle alphabet.
Letter letter_from_char(char c);

using Cost = std::uint32_t;
inline constexpr Cost kSentinelCost = 100'000'000;
inline constexpr std::uint32_t kStateSpaceSize = 3'628'800;  // 10!

/// A bijection letters -> digits. Both directions are stored so that
/// "which letter holds digit d" is a lookup.
class Assignment {
public:
    /// Identity permutation: A=0, B=1, ..., T=9.
    Assignment() noexcept;

    /// digits[k] is the digit of the k-th canonical letter. Throws
    /// std::invalid_argument unless digits is a permutation of 0..9.
    static Assignment from_digits(std::span<const int> digits);
    /// Parses the 10-character serialized form, e.g. "4359186270".
    static Assignment parse(std::string_view text);
    static Assignment uniform(Rng& rng);

    int digit(Letter l) const noexcept { return digit_of_[index_of(l)]; }
    Letter holder(int digit) const noexcept { return letter_of_[digit]; }

    /// Exchanges the digits of x and y in place. Precondition x != y.
    void swap_letters(Letter x, Letter y) noexcept {
        const std::uint8_t dx = digit_of_[index_of(x)];
        const std::uint8_t dy = digit_of_[index_of(y)];
        digit_of_[index_of(x)] = dy;
        digit_of_[index_of(y)] = dx;
        letter_of_[dy] = x;
        letter_of_[dx] = y;
    }

    std::array<int, kNumLetters> digits() const noexcept;
    std::string to_string() const;

    /// Number of letters carrying the same digit in both assignments.
    int agreement(const Assignment& other) const noexcept;

    /// Bit i set iff the i-th canonical letter has different digits.
    std::uint32_t disagreement(const Assignment& other) const noexcept {
#if defined(__SSE2__)
        static_assert(sizeof(Assignment) >= 16);
        __m128i a, b;
        std::memcpy(&a, this, 16);
        std::memcpy(&b, &other, 16);
        const auto same = static_cast<std::uint32_t>(_mm_movemask_epi8(_mm_cmpeq_epi8(a, b)));
        return ~same & 0x3FFu;
#else
        std::uint32_t mask = 0;
        for (int i = 0; i < kNumLetters; ++i)
            mask |= static_cast<std::uint32_t>(digit_of_[i] != other.digit_of_[i]) << i;
        return mask;
#endif
    }

    friend bool operator==(const Assignment& a, const Assignment& b) noexcept {
        return a.digit_of_ == b.digit_of_;
    }

private:
    std::array<std::uint8_t, kNumLetters> digit_of_;
    std::array<Letter, kNumLetters> letter_of_;
};

Assignment assignment_from_digits(std::span<const int> digits);

/// The unique solution A=4, B=3, D=5, E=9, G=1, L=8, N=6, O=2, R=7, T=0.
const Assignment& solution_assignment();

/// Base-10 value of `word` under `a`, most significant letter first.
std::uint64_t word_value(const Assignment& a, std::string_view word);

/// Per-letter weights of ROBERT - DONALD - GERALD, which is linear in the
/// digits.
inline constexpr std::array<std::int32_t, kNumLetters> kBalanceWeights = {
    -200, 1000, -100002, -9900, -100000, -20, -1000, 0, 99010, 1};

/// ROBERT - (DONALD + GERALD) as a signed integer.
inline std::int32_t balance(const Assignment& a) noexcept {
    std::int32_t sum = 0;
    for (int i = 0; i < kNumLetters; ++i) sum += kBalanceWeights[i] * a.digit(letter_at(i));
    return sum;
}

/// Change of balance(a) caused by swapping the digits of x and y.
inline std::int32_t swap_delta(const Assignment& a, Letter x, Letter y) noexcept {
    return (kBalanceWeights[index_of(x)] - kBalanceWeights[index_of(y)]) *
           (a.digit(y) - a.digit(x));
}

inline bool has_leading_zero(const Assignment& a) noexcept {
    // bitwise, not short-circuit: the outcome is close to a coin flip
    return (a.digit(Letter::D) == 0) | (a.digit(Letter::G) == 0) | (a.digit(Letter::R) == 0);
}

/// Cost from a known balance.
inline Cost cost_from_balance(const Assignment& a, std::int32_t b) noexcept {
    const auto magnitude = static_cast<Cost>(b < 0 ? -b : b);
    const auto lead = static_cast<Cost>(has_leading_zero(a));
    return magnitude + lead * (kSentinelCost - magnitude);
}

/// |ROBERT - (DONALD + GERALD)|, or kSentinelCost when D, G or R is 0.
inline Cost cost(const Assignment& a) noexcept { return cost_from_balance(a, balance(a)); }

inline bool is_solution(const Assignment& a) noexcept {
    return balance(a) == 0 && !has_leading_zero(a);
}

/// Copy of `a` with the digits of x and y exchanged. Throws
/// std::invalid_argument when x == y.
Assignment apply_swap(const Assignment& a, Letter x, Letter y);

inline constexpr int kNumNeighbors = 45;

namespace detail {
constexpr auto make_letter_pairs() {
    std::array<std::pair<Letter, Letter>, 45> pairs{};
    int k = 0;
    for (int i = 0; i < kNumLetters; ++i)
        for (int j = i + 1; j < kNumLetters; ++j) pairs[k++] = {letter_at(i), letter_at(j)};
    return pairs;
}
inline constexpr auto kLetterPairs = make_letter_pairs();
}  // namespace detail

/// Unordered letter pairs (i < j) in lexicographic order of indices.
constexpr const std::array<std::pair<Letter, Letter>, kNumNeighbors>& letter_pairs() noexcept {
    return detail::kLetterPairs;
}

/// Swap of a uniformly chosen letter pair; one draw from rng.
Assignment random_elementary_move(const Assignment& a, Rng& rng);
inline void random_elementary_move_inplace(Assignment& a, Rng& rng) {
    const auto& [x, y] = letter_pairs()[uniform_index(rng, kNumNeighbors)];
    a.swap_letters(x, y);
}

/// All 45 one-swap neighbors in letter_pairs() order.
std::vector<Assignment> neighbors(const Assignment& a);

}  // namespace dgr
