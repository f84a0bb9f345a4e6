#pragma once

// Exhaustive census of the cost landscape over all 10! assignments.

#include <cstdint>
#include <vector>

#include "dgr/puzzle.hpp"

namespace dgr {

/// Lexicographic rank of the digit sequence (canonical letter order) in
/// [0, 10!). Identity is 0, A=9,...,T=0 is 10! - 1.
std::uint32_t permutation_index(const Assignment& a) noexcept;

/// Inverse of permutation_index. Throws std::out_of_range for index >= 10!.
Assignment assignment_at(std::uint32_t index);

struct Minimum {
    Assignment assignment;
    Cost cost = 0;
    std::uint32_t index = 0;
    bool strict = true;  // false when some neighbor ties
};

struct MinimaReport {
    std::uint64_t total_states = 0;
    std::uint64_t minima_count = 0;
    std::uint64_t global_minima_count = 0;
    std::uint64_t local_minima_count = 0;
    /// Minima whose 45 neighbors are all strictly more expensive.
    std::uint64_t strict_minima_count = 0;
    /// Sorted by cost, then index.
    std::vector<Minimum> minima;
};

/// No neighbor is cheaper than `a`. This is the census criterion: it
/// admits the two cost-1 states that tie with each other under the O/T
/// swap, which the strict test below rejects.
bool is_minimum(const Assignment& a) noexcept;

/// True if cost(a) is strictly below the cost of each of its 45 neighbors.
bool is_strict_minimum(const Assignment& a) noexcept;

/// Scans every assignment on `threads` workers over contiguous index
/// chunks. The report does not depend on the thread count.
MinimaReport enumerate_minima(unsigned threads = 0);

}  // namespace dgr
