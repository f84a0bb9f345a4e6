#include "dgr/hints.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace dgr {

namespace {

constexpr Column make_column(Letter a1, Letter a2, Letter r) {
    Column c{a1, a2, r, {}, 0};
    for (Letter l : {a1, a2, r}) {
        bool dup = false;
        for (int i = 0; i < c.num_letters; ++i) dup |= c.letters[i] == l;
        if (!dup) c.letters[c.num_letters++] = l;
    }
    return c;
}

constexpr std::array<Column, kNumColumns> kColumns = {
    make_column(Letter::D, Letter::D, Letter::T), make_column(Letter::L, Letter::L, Letter::R),
    make_column(Letter::A, Letter::A, Letter::E), make_column(Letter::N, Letter::R, Letter::B),
    make_column(Letter::O, Letter::E, Letter::O), make_column(Letter::D, Letter::G, Letter::R)};

std::array<int, kNumColumns> compute_carries() {
    const Assignment& sol = solution_assignment();
    std::array<int, kNumColumns> carry{};
    int c = 0;
    for (int k = 0; k < kNumColumns; ++k) {
        carry[k] = c;
        c = (sol.digit(kColumns[k].addend1) + sol.digit(kColumns[k].addend2) + c) / 10;
    }
    return carry;
}

int digit_in(const Hint& h, Letter l) {
    for (const auto& p : h.pairs())
        if (p.letter == l) return p.digit;
    return -1;
}

}  // namespace

const std::array<Column, kNumColumns>& columns() noexcept { return kColumns; }

const std::array<int, kNumColumns>& solution_carries() noexcept {
    static const auto carries = compute_carries();
    return carries;
}

std::string Hint::to_string() const {
    std::ostringstream os;
    os << "col=" << column << " eps=" << epsilon << ' ';
    for (int i = 0; i < num_pairs; ++i) {
        if (i) os << ',';
        os << to_char(pair_storage[i].letter) << '=' << pair_storage[i].digit;
    }
    return os.str();
}

int HintCatalog::key(std::span<const int> digits) noexcept {
    int k = 0;
    for (int d : digits) k = k * 10 + d;
    return k;
}

HintCatalog HintCatalog::build() {
    HintCatalog cat;
    for (int c = 0; c < kNumColumns; ++c) {
        const Column& col = kColumns[c];
        cat.lookup_[c].fill(-1);
        // No carry enters the rightmost column.
        const int max_eps = c == 0 ? 0 : 1;
        for (int eps = 0; eps <= max_eps; ++eps) {
            std::array<int, 3> d{};
            const int n = col.num_letters;
            int total = 1;
            for (int i = 0; i < n; ++i) total *= 10;
            // Lexicographic over the digit tuple.
            for (int code = 0; code < total; ++code) {
                int rest = code;
                for (int i = n - 1; i >= 0; --i) {
                    d[i] = rest % 10;
                    rest /= 10;
                }
                bool distinct = true;
                for (int i = 0; i < n; ++i)
                    for (int j = i + 1; j < n; ++j) distinct &= d[i] != d[j];
                if (!distinct) continue;
                Hint h;
                h.column = c;
                h.epsilon = eps;
                h.num_pairs = n;
                for (int i = 0; i < n; ++i) h.pair_storage[i] = {col.letters[i], d[i]};
                const int sum = digit_in(h, col.addend1) + digit_in(h, col.addend2) + eps;
                if (sum % 10 != digit_in(h, col.result)) continue;
                h.id = static_cast<HintId>(cat.hints_.size());
                cat.lookup_[c][code] = h.id;
                cat.hints_.push_back(h);
            }
        }
    }
    cat.correct_.resize(cat.hints_.size());
    for (const Hint& h : cat.hints_) cat.correct_[h.id] = cat.is_correct(h);
    return cat;
}

bool HintCatalog::is_correct(const Hint& h) const {
    if (h.column < 0 || h.column >= kNumColumns)
        throw std::invalid_argument("hint column out of range");
    if (h.epsilon != solution_carries()[h.column]) return false;
    return exhibits(solution_assignment(), h);
}

HintId HintCatalog::find(int column, int epsilon, std::span<const int> digits) const {
    if (column < 0 || column >= kNumColumns || epsilon < 0 || epsilon > 1)
        return -1;
    if (static_cast<int>(digits.size()) != kColumns[column].num_letters) return -1;
    for (int d : digits)
        if (d < 0 || d > 9) return -1;
    const HintId id = lookup_[column][key(digits)];
    return id >= 0 && hints_[id].epsilon == epsilon ? id : HintId{-1};
}

ExhibitedHints HintCatalog::extract(const Assignment& a) const noexcept {
    ExhibitedHints out;
    // Unrolled over columns and letters; this runs once per micro-update.
    [&]<int... C>(std::integer_sequence<int, C...>) {
        (
            [&] {
                constexpr Column col = kColumns[C];
                int code = 0;
                [&]<int... I>(std::integer_sequence<int, I...>) {
                    ((code = code * 10 + a.digit(col.letters[I])), ...);
                }(std::make_integer_sequence<int, col.num_letters>{});
                out.push_back_if(lookup_[C][code]);
            }(),
            ...);
    }(std::make_integer_sequence<int, kNumColumns>{});
    return out;
}

const HintCatalog& catalog() {
    static const HintCatalog cat = HintCatalog::build();
    return cat;
}

void assimilate_hint_inplace(Assignment& a, const Hint& h) noexcept {
    assimilate_hint_with(a, h, [&a](Letter x, Letter y) { a.swap_letters(x, y); });
}

Assignment assimilate_hint(const Assignment& a, const Hint& h) {
    Assignment out = a;
    assimilate_hint_inplace(out, h);
    return out;
}

}  // namespace dgr
