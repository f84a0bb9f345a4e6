#include "dgr/puzzle.hpp"

#include <cassert>
#include <stdexcept>

namespace dgr {

namespace {

constexpr std::string_view kAlphabet = "ABDEGLNORT";

constexpr int constexpr_index(char c) {
    for (int i = 0; i < kNumLetters; ++i)
        if (kAlphabet[i] == c) return i;
    return -1;
}

// ROBERT - DONALD - GERALD is linear in the letter digits.
constexpr std::array<std::int64_t, kNumLetters> make_weights() {
    std::array<std::int64_t, kNumLetters> coef{};
    auto add_word = [&coef](std::string_view word, std::int64_t sign) {
        std::int64_t place = 1;
        for (auto it = word.rbegin(); it != word.rend(); ++it) {
            coef[constexpr_index(*it)] += sign * place;
            place *= 10;
        }
    };
    add_word("ROBERT", +1);
    add_word("DONALD", -1);
    add_word("GERALD", -1);
    return coef;
}

constexpr bool weights_match() {
    constexpr auto w = make_weights();
    for (int i = 0; i < kNumLetters; ++i)
        if (w[i] != kBalanceWeights[i]) return false;
    return true;
}
static_assert(weights_match(), "kBalanceWeights out of sync with the puzzle words");

}  // namespace

char to_char(Letter l) noexcept { return kAlphabet[index_of(l)]; }

Letter letter_from_char(char c) {
    const int i = constexpr_index(c);
    if (i < 0) throw std::invalid_argument(std::string("not a puzzle letter: ") + c);
    return letter_at(i);
}

Assignment::Assignment() noexcept {
    for (int i = 0; i < kNumLetters; ++i) {
        digit_of_[i] = static_cast<std::uint8_t>(i);
        letter_of_[i] = letter_at(i);
    }
}

Assignment Assignment::from_digits(std::span<const int> digits) {
    if (digits.size() != kNumLetters)
        throw std::invalid_argument("assignment needs exactly 10 digits");
    Assignment a;
    std::array<bool, kNumLetters> seen{};
    for (int i = 0; i < kNumLetters; ++i) {
        const int d = digits[i];
        if (d < 0 || d > 9 || seen[d])
            throw std::invalid_argument("digits are not a permutation of 0..9");
        seen[d] = true;
        a.digit_of_[i] = static_cast<std::uint8_t>(d);
        a.letter_of_[d] = letter_at(i);
    }
    return a;
}

Assignment Assignment::parse(std::string_view text) {
    if (text.size() != kNumLetters)
        throw std::invalid_argument("serialized assignment must have 10 digits");
    std::array<int, kNumLetters> digits{};
    for (int i = 0; i < kNumLetters; ++i) {
        if (text[i] < '0' || text[i] > '9')
            throw std::invalid_argument("serialized assignment must be decimal digits");
        digits[i] = text[i] - '0';
    }
    return from_digits(digits);
}

Assignment Assignment::uniform(Rng& rng) {
    Assignment a;
    // Fisher-Yates over the digit -> letter table.
    for (int i = kNumLetters - 1; i > 0; --i) {
        const auto j = static_cast<int>(uniform_index(rng, static_cast<std::uint64_t>(i) + 1));
        std::swap(a.letter_of_[i], a.letter_of_[j]);
    }
    for (int d = 0; d < kNumLetters; ++d)
        a.digit_of_[index_of(a.letter_of_[d])] = static_cast<std::uint8_t>(d);
    return a;
}

std::array<int, kNumLetters> Assignment::digits() const noexcept {
    std::array<int, kNumLetters> out{};
    for (int i = 0; i < kNumLetters; ++i) out[i] = digit_of_[i];
    return out;
}

std::string Assignment::to_string() const {
    std::string s(kNumLetters, '0');
    for (int i = 0; i < kNumLetters; ++i) s[i] = static_cast<char>('0' + digit_of_[i]);
    return s;
}

int Assignment::agreement(const Assignment& other) const noexcept {
    int n = 0;
    for (int i = 0; i < kNumLetters; ++i) n += digit_of_[i] == other.digit_of_[i];
    return n;
}

Assignment assignment_from_digits(std::span<const int> digits) {
    return Assignment::from_digits(digits);
}

const Assignment& solution_assignment() {
    static const Assignment sol = Assignment::parse("4359186270");
    return sol;
}

std::uint64_t word_value(const Assignment& a, std::string_view word) {
    std::uint64_t v = 0;
    for (char c : word) v = v * 10 + static_cast<std::uint64_t>(a.digit(letter_from_char(c)));
    return v;
}

Assignment apply_swap(const Assignment& a, Letter x, Letter y) {
    if (x == y) throw std::invalid_argument("swap needs two different letters");
    Assignment out = a;
    out.swap_letters(x, y);
    return out;
}

Assignment random_elementary_move(const Assignment& a, Rng& rng) {
    Assignment out = a;
    random_elementary_move_inplace(out, rng);
    return out;
}

std::vector<Assignment> neighbors(const Assignment& a) {
    std::vector<Assignment> out;
    out.reserve(kNumNeighbors);
    for (const auto& [x, y] : letter_pairs()) {
        out.push_back(a);
        out.back().swap_letters(x, y);
    }
    return out;
}

}  // namespace dgr
