#include "dgr/landscape.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

namespace dgr {

namespace {

constexpr std::array<std::uint32_t, kNumLetters + 1> kFactorial = {
    1, 1, 2, 6, 24, 120, 720, 5040, 40320, 362880, 3628800};

std::vector<Minimum> scan(std::uint32_t begin, std::uint32_t end) {
    std::vector<Minimum> found;
    if (begin >= end) return found;
    auto digits = assignment_at(begin).digits();
    for (std::uint32_t index = begin; index < end; ++index) {
        const Assignment a = Assignment::from_digits(digits);
        if (is_minimum(a)) found.push_back({a, cost(a), index, is_strict_minimum(a)});
        std::next_permutation(digits.begin(), digits.end());
    }
    return found;
}

}  // namespace

std::uint32_t permutation_index(const Assignment& a) noexcept {
    const auto d = a.digits();
    std::uint32_t index = 0;
    for (int i = 0; i < kNumLetters; ++i) {
        std::uint32_t smaller = 0;
        for (int j = i + 1; j < kNumLetters; ++j) smaller += d[j] < d[i];
        index += smaller * kFactorial[kNumLetters - 1 - i];
    }
    return index;
}

Assignment assignment_at(std::uint32_t index) {
    if (index >= kStateSpaceSize) throw std::out_of_range("permutation index out of range");
    std::vector<int> pool = {0, 1, 2, 3, 4, 5, 6, 7, 8, 9};
    std::array<int, kNumLetters> digits{};
    for (int i = 0; i < kNumLetters; ++i) {
        const std::uint32_t f = kFactorial[kNumLetters - 1 - i];
        const auto k = index / f;
        index %= f;
        digits[i] = pool[k];
        pool.erase(pool.begin() + k);
    }
    return Assignment::from_digits(digits);
}

bool is_minimum(const Assignment& a) noexcept {
    const Cost c = cost(a);
    for (const auto& [x, y] : letter_pairs()) {
        Assignment b = a;
        b.swap_letters(x, y);
        if (cost(b) < c) return false;
    }
    return true;
}

bool is_strict_minimum(const Assignment& a) noexcept {
    const Cost c = cost(a);
    for (const auto& [x, y] : letter_pairs()) {
        Assignment b = a;
        b.swap_letters(x, y);
        if (cost(b) <= c) return false;
    }
    return true;
}

MinimaReport enumerate_minima(unsigned threads) {
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    const std::uint32_t chunk = (kStateSpaceSize + threads - 1) / threads;
    std::vector<std::vector<Minimum>> parts(threads);
    std::vector<std::jthread> workers;
    for (unsigned t = 0; t < threads; ++t) {
        const std::uint32_t begin = std::min(kStateSpaceSize, t * chunk);
        const std::uint32_t end = std::min(kStateSpaceSize, begin + chunk);
        workers.emplace_back([&parts, t, begin, end] { parts[t] = scan(begin, end); });
    }
    workers.clear();  // joins

    MinimaReport report;
    report.total_states = kStateSpaceSize;
    for (auto& part : parts)
        report.minima.insert(report.minima.end(), part.begin(), part.end());
    std::sort(report.minima.begin(), report.minima.end(), [](const Minimum& a, const Minimum& b) {
        return a.cost != b.cost ? a.cost < b.cost : a.index < b.index;
    });
    report.minima_count = report.minima.size();
    for (const auto& m : report.minima) {
        (m.cost == 0 ? report.global_minima_count : report.local_minima_count)++;
        report.strict_minima_count += m.strict;
    }
    return report;
}

}  // namespace dgr
