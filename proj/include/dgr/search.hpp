#pragma once

// Group search dynamics: independent agents, imitative learning of the
// lowest-cost agent, and a shared blackboard of column hints. All three run
// on the same clock: each micro-update of one randomly chosen agent advances
// time by 1/M, starting from t = 1.

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dgr/hints.hpp"
#include "dgr/puzzle.hpp"
#include "dgr/rng.hpp"

namespace dgr {

enum class Strategy { independent, imitative, blackboard, null_model };

std::string_view to_string(Strategy s) noexcept;
/// Accepts "independent", "imitative", "blackboard", "null-model".
Strategy strategy_from_string(std::string_view name);

struct SearchParams {
    Strategy strategy = Strategy::independent;
    int agents = 1;
    double imitation_prob = 0.0;
    int board_size = kCatalogSize;  // 351 means unlimited
    std::optional<double> max_time;  // censoring cutoff in units of t
    std::uint64_t seed = 0;

    /// Throws std::invalid_argument on out-of-range parameters.
    void validate() const;
};

/// max_time equivalent of a cutoff on the computational cost C.
double max_time_for_cost(double max_cost, int agents) noexcept;

struct SearchOutcome {
    double t_star = 1.0;
    bool solved = false;
    std::uint64_t updates = 0;
    std::uint64_t hint_selections = 0;
    std::uint64_t correct_hint_selections = 0;
    double C = 0.0;
};

/// The agents' assignments plus each one's cached balance (signed
/// ROBERT - DONALD - GERALD). All mutation goes through swap(), which keeps
/// the cache exact.
class Group {
public:
    Group() = default;
    explicit Group(std::vector<Assignment> agents);

    std::size_t size() const noexcept { return agents_.size(); }
    std::span<const Assignment> agents() const noexcept { return agents_; }
    const Assignment& operator[](std::size_t i) const noexcept { return agents_[i]; }

    std::int32_t balance(std::size_t i) const noexcept { return balances_[i]; }
    Cost cost(std::size_t i) const noexcept { return cost_from_balance(agents_[i], balances_[i]); }
    bool solved(std::size_t i) const noexcept {
        return balances_[i] == 0 && !has_leading_zero(agents_[i]);
    }

    void swap(std::size_t i, Letter x, Letter y) noexcept {
        balances_[i] += swap_delta(agents_[i], x, y);
        agents_[i].swap_letters(x, y);
    }
    void elementary_move(std::size_t i, Rng& rng) {
        const auto& [x, y] = letter_pairs()[uniform_index(rng, kNumNeighbors)];
        swap(i, x, y);
    }

private:
    std::vector<Assignment> agents_;
    std::vector<std::int32_t> balances_;
};

/// M independent uniform draws from the 10! assignments.
Group init_group(int agents, Rng& rng);

/// Duplicate-free hint store holding at most `capacity` catalog ids.
class Blackboard {
public:
    explicit Blackboard(int capacity);

    int capacity() const noexcept { return capacity_; }
    std::size_t size() const noexcept { return entries_.size(); }
    bool empty() const noexcept { return entries_.empty(); }
    bool full() const noexcept { return static_cast<int>(entries_.size()) >= capacity_; }
    bool contains(HintId id) const noexcept { return slot_of_[id] >= 0; }
    std::span<const HintId> entries() const noexcept { return entries_; }

    /// Precondition: !full() and !contains(id).
    void append(HintId id);
    /// Overwrites the hint in `slot`. Precondition: !contains(id).
    void replace(std::size_t slot, HintId id);

    /// Size bound, uniqueness, catalog membership and index consistency.
    bool invariants_hold() const noexcept;

private:
    int capacity_;
    std::vector<HintId> entries_;
    std::array<std::int16_t, kCatalogSize> slot_of_;
};

/// Pick-and-replace: post one uniformly chosen novel hint, overwriting a
/// uniformly chosen board hint the poster does not exhibit when the board
/// is full. Returns true if the board changed.
bool post_hint(Blackboard& board, const ExhibitedHints& agent_hints, Rng& rng);

/// Copies one uniformly chosen letter on which target and model disagree,
/// by a single swap. Throws std::logic_error when target == model.
Assignment imitate(const Assignment& target, const Assignment& model, Rng& rng);
void imitate_inplace(Assignment& target, const Assignment& model, Rng& rng);

/// Cached agent costs plus the set of agents at the minimum cost. Small
/// groups rescan the costs when asked; larger ones keep the set current
/// under single-agent updates.
class ModelTracker {
public:
    static constexpr std::size_t kScanLimit = 32;

    explicit ModelTracker(const Group& group);

    void refresh(std::size_t agent, Cost new_cost) {
        costs_[agent] = new_cost;
        if (!scan_) update(agent, new_cost);
    }
    Cost min_cost() const noexcept;
    Cost cost_of(std::size_t agent) const noexcept { return costs_[agent]; }
    std::span<const Cost> costs() const noexcept { return costs_; }
    /// Minimum-cost agents; order is unspecified.
    std::span<const std::uint32_t> minimizers() const;
    /// Uniform among minimum-cost agents; one draw from rng.
    std::size_t pick_model(Rng& rng) const {
        if (!scan_) return minimizers_[uniform_index(rng, minimizers_.size())];
        std::array<std::uint32_t, kScanLimit> ties;
        Cost best = kSentinelCost;
        for (Cost c : costs_) best = std::min(best, c);
        std::size_t n = 0;
        for (std::size_t i = 0; i < costs_.size(); ++i) {
            ties[n] = static_cast<std::uint32_t>(i);
            n += costs_[i] == best;
        }
        return ties[uniform_index(rng, n)];
    }

private:
    void update(std::size_t agent, Cost new_cost);
    void rebuild() const;

    bool scan_;
    std::vector<Cost> costs_;
    mutable Cost min_cost_ = kSentinelCost;
    mutable std::vector<std::uint32_t> minimizers_;
    std::vector<std::int32_t> slot_of_;
};

struct SelectionCounts {
    std::uint64_t selections = 0;
    std::uint64_t correct = 0;
};

/// One imitative micro-update; returns the index of the updated agent.
std::size_t imitative_update(Group& group, ModelTracker& tracker, double imitation_prob,
                             Rng& rng);

/// One blackboard micro-update; returns the index of the updated agent.
/// With `posting` false the board is read-only (null model).
std::size_t blackboard_update(Group& group, Blackboard& board, const HintCatalog& cat,
                              Rng& rng, SelectionCounts& counts, bool posting = true);

/// Read-only view handed to observers after every micro-update.
struct SearchSnapshot {
    std::span<const Assignment> agents;
    std::size_t updated_agent = 0;
    std::uint64_t updates = 0;
    const Blackboard* board = nullptr;
    const ModelTracker* tracker = nullptr;
};

class SearchObserver {
public:
    virtual ~SearchObserver() = default;
    virtual void on_update(const SearchSnapshot& snapshot) = 0;
};

/// One full run, seeded from params.seed.
SearchOutcome run_search(const SearchParams& params, SearchObserver* observer = nullptr);

/// Blackboard dynamics on a board frozen to board_size hints drawn without
/// replacement from the catalog; nothing is ever posted.
SearchOutcome run_null_model(const SearchParams& params, const HintCatalog& cat, Rng& rng,
                             SearchObserver* observer = nullptr);

}  // namespace dgr
