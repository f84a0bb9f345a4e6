#include "dgr/search.hpp"

#include <array>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "dgr/stats.hpp"

namespace dgr {

std::string_view to_string(Strategy s) noexcept {
    switch (s) {
        case Strategy::independent: return "independent";
        case Strategy::imitative: return "imitative";
        case Strategy::blackboard: return "blackboard";
        case Strategy::null_model: return "null-model";
    }
    return "unknown";
}

Strategy strategy_from_string(std::string_view name) {
    if (name == "independent") return Strategy::independent;
    if (name == "imitative") return Strategy::imitative;
    if (name == "blackboard") return Strategy::blackboard;
    if (name == "null-model") return Strategy::null_model;
    throw std::invalid_argument("unknown strategy: " + std::string(name));
}

void SearchParams::validate() const {
    if (agents < 1) throw std::invalid_argument("group size must be at least 1");
    if (!(imitation_prob >= 0.0 && imitation_prob <= 1.0))
        throw std::invalid_argument("imitation probability must lie in [0, 1]");
    if (board_size < 0 || board_size > kCatalogSize)
        throw std::invalid_argument("board size must lie in [0, 351]");
    if (strategy == Strategy::null_model && board_size < 1)
        throw std::invalid_argument("null model needs a board size of at least 1");
    if (max_time && !(*max_time >= 1.0))
        throw std::invalid_argument("max_time must be at least 1");
}

double max_time_for_cost(double max_cost, int agents) noexcept {
    return max_cost * static_cast<double>(kStateSpaceSize) / agents;
}

Group::Group(std::vector<Assignment> agents) : agents_(std::move(agents)) {
    balances_.reserve(agents_.size());
    for (const auto& a : agents_) balances_.push_back(dgr::balance(a));
}

Group init_group(int agents, Rng& rng) {
    std::vector<Assignment> all;
    all.reserve(static_cast<std::size_t>(agents));
    for (int i = 0; i < agents; ++i) all.push_back(Assignment::uniform(rng));
    return Group(std::move(all));
}

// --- blackboard --------------------------------------------------------------

Blackboard::Blackboard(int capacity) : capacity_(capacity) {
    if (capacity < 0 || capacity > kCatalogSize)
        throw std::invalid_argument("board capacity must lie in [0, 351]");
    slot_of_.fill(-1);
    entries_.reserve(static_cast<std::size_t>(capacity));
}

void Blackboard::append(HintId id) {
    if (full() || contains(id)) throw std::logic_error("append to full board or duplicate hint");
    slot_of_[id] = static_cast<std::int16_t>(entries_.size());
    entries_.push_back(id);
}

void Blackboard::replace(std::size_t slot, HintId id) {
    if (slot >= entries_.size() || contains(id))
        throw std::logic_error("bad slot or duplicate hint");
    slot_of_[entries_[slot]] = -1;
    entries_[slot] = id;
    slot_of_[id] = static_cast<std::int16_t>(slot);
}

bool Blackboard::invariants_hold() const noexcept {
    if (static_cast<int>(entries_.size()) > capacity_) return false;
    std::size_t indexed = 0;
    for (std::size_t s = 0; s < entries_.size(); ++s) {
        const HintId id = entries_[s];
        if (id < 0 || id >= kCatalogSize) return false;
        if (slot_of_[id] != static_cast<std::int16_t>(s)) return false;
    }
    for (auto slot : slot_of_) indexed += slot >= 0;
    return indexed == entries_.size();
}

bool post_hint(Blackboard& board, const ExhibitedHints& agent_hints, Rng& rng) {
    ExhibitedHints novel;
    for (HintId id : agent_hints) novel.push_back_if(board.contains(id) ? HintId{-1} : id);
    if (novel.empty()) return false;
    const HintId pick = novel[uniform_index(rng, novel.size())];
    if (!board.full()) {
        board.append(pick);
        return true;
    }
    const std::size_t shared = agent_hints.size() - novel.size();
    if (board.size() == shared) return false;  // nothing the poster may erase
    const auto entries = board.entries();
    std::size_t slot;
    do {
        slot = uniform_index(rng, entries.size());
    } while (agent_hints.contains(entries[slot]));
    board.replace(slot, pick);
    return true;
}

// --- imitation ---------------------------------------------------------------

namespace {

// For every 10-bit letter mask: its popcount and the index of its k-th set
// bit, so that picking a differing letter needs no data-dependent loop.
struct MaskTables {
    std::array<std::uint8_t, 1024> count{};
    std::array<std::array<std::uint8_t, kNumLetters>, 1024> select{};
};

constexpr MaskTables make_mask_tables() {
    MaskTables t;
    for (unsigned m = 0; m < 1024; ++m) {
        int k = 0;
        for (int i = 0; i < kNumLetters; ++i)
            if (m >> i & 1u) t.select[m][k++] = static_cast<std::uint8_t>(i);
        t.count[m] = static_cast<std::uint8_t>(k);
    }
    return t;
}

constexpr MaskTables kMaskTables = make_mask_tables();

// Copies the model's digit for a uniformly chosen letter of the nonzero
// disagreement mask.
template <class SwapFn>
void copy_letter(const Assignment& target, const Assignment& model, std::uint32_t mask, Rng& rng,
                 SwapFn&& swap) {
    const auto pick = uniform_index(rng, kMaskTables.count[mask]);
    const Letter x = letter_at(kMaskTables.select[mask][pick]);
    swap(x, target.holder(model.digit(x)));
}

template <class SwapFn>
void imitate_with(const Assignment& target, const Assignment& model, Rng& rng, SwapFn&& swap) {
    const std::uint32_t mask = target.disagreement(model);
    if (mask == 0) throw std::logic_error("imitate called with identical target and model");
    copy_letter(target, model, mask, rng, swap);
}

}  // namespace

void imitate_inplace(Assignment& target, const Assignment& model, Rng& rng) {
    imitate_with(target, model, rng, [&target](Letter x, Letter y) { target.swap_letters(x, y); });
}

Assignment imitate(const Assignment& target, const Assignment& model, Rng& rng) {
    Assignment out = target;
    imitate_inplace(out, model, rng);
    return out;
}

ModelTracker::ModelTracker(const Group& group)
    : scan_(group.size() <= kScanLimit), costs_(group.size()), slot_of_(group.size(), -1) {
    for (std::size_t i = 0; i < group.size(); ++i) costs_[i] = group.cost(i);
    rebuild();
    for (std::size_t s = 0; s < minimizers_.size(); ++s)
        slot_of_[minimizers_[s]] = static_cast<std::int32_t>(s);
}

void ModelTracker::rebuild() const {
    minimizers_.clear();
    min_cost_ = kSentinelCost;
    for (Cost c : costs_) min_cost_ = std::min(min_cost_, c);
    for (std::size_t i = 0; i < costs_.size(); ++i)
        if (costs_[i] == min_cost_) minimizers_.push_back(static_cast<std::uint32_t>(i));
}

Cost ModelTracker::min_cost() const noexcept {
    if (!scan_) return min_cost_;
    Cost best = kSentinelCost;
    for (Cost c : costs_) best = std::min(best, c);
    return best;
}

std::span<const std::uint32_t> ModelTracker::minimizers() const {
    if (scan_) rebuild();
    return minimizers_;
}

void ModelTracker::update(std::size_t agent, Cost new_cost) {
    if (new_cost < min_cost_) {
        for (auto i : minimizers_) slot_of_[i] = -1;
        minimizers_.clear();
        min_cost_ = new_cost;
        slot_of_[agent] = 0;
        minimizers_.push_back(static_cast<std::uint32_t>(agent));
    } else if (new_cost == min_cost_) {
        if (slot_of_[agent] < 0) {
            slot_of_[agent] = static_cast<std::int32_t>(minimizers_.size());
            minimizers_.push_back(static_cast<std::uint32_t>(agent));
        }
    } else if (slot_of_[agent] >= 0) {
        const auto slot = static_cast<std::size_t>(slot_of_[agent]);
        const auto last = minimizers_.back();
        minimizers_[slot] = last;
        slot_of_[last] = static_cast<std::int32_t>(slot);
        minimizers_.pop_back();
        slot_of_[agent] = -1;
        if (minimizers_.empty()) {
            rebuild();
            for (std::size_t s = 0; s < minimizers_.size(); ++s)
                slot_of_[minimizers_[s]] = static_cast<std::int32_t>(s);
        }
    }
}

// --- micro-updates -----------------------------------------------------------

std::size_t imitative_update(Group& group, ModelTracker& tracker, double imitation_prob,
                             Rng& rng) {
    const std::size_t target = uniform_index(rng, group.size());
    if (bernoulli(rng, imitation_prob)) {
        const std::size_t model = tracker.pick_model(rng);
        const std::uint32_t mask = group[target].disagreement(group[model]);
        if (mask == 0) {
            group.elementary_move(target, rng);
        } else {
            copy_letter(group[target], group[model], mask, rng,
                        [&](Letter x, Letter y) { group.swap(target, x, y); });
        }
    } else {
        group.elementary_move(target, rng);
    }
    tracker.refresh(target, group.cost(target));
    return target;
}

std::size_t blackboard_update(Group& group, Blackboard& board, const HintCatalog& cat,
                              Rng& rng, SelectionCounts& counts, bool posting) {
    const std::size_t target = uniform_index(rng, group.size());
    if (board.empty()) {
        group.elementary_move(target, rng);
    } else {
        const auto entries = board.entries();
        const HintId id = entries[uniform_index(rng, entries.size())];
        ++counts.selections;
        if (cat.is_correct(id)) ++counts.correct;
        const Hint& h = cat[id];
        if (exhibits(group[target], h))
            group.elementary_move(target, rng);
        else
            assimilate_hint_with(group[target], h,
                                 [&](Letter x, Letter y) { group.swap(target, x, y); });
    }
    if (posting) post_hint(board, cat.extract(group[target]), rng);
    return target;
}

// --- runs --------------------------------------------------------------------

namespace {

std::optional<std::uint64_t> update_limit(const SearchParams& params) {
    if (!params.max_time) return std::nullopt;
    const double n = std::floor(params.agents * (*params.max_time - 1.0));
    return static_cast<std::uint64_t>(n);
}

SearchOutcome finish(const SearchParams& params, std::uint64_t updates, bool solved) {
    SearchOutcome out;
    out.updates = updates;
    out.solved = solved;
    out.t_star = 1.0 + static_cast<double>(updates) / params.agents;
    out.C = computational_cost(out.t_star, params.agents);
    return out;
}

bool any_solved(const Group& g) {
    for (std::size_t i = 0; i < g.size(); ++i)
        if (g.solved(i)) return true;
    return false;
}

// Runs micro-updates until an updated agent is the solution or the cutoff
// passes. `step` performs one update and returns the agent index.
template <class Step, class Snapshot>
SearchOutcome drive(const SearchParams& params, const Group& group, Step&& step,
                    Snapshot&& snapshot, SearchObserver* observer) {
    if (any_solved(group)) return finish(params, 0, true);
    const auto limit = update_limit(params);
    std::uint64_t n = 0;
    for (;;) {
        const std::size_t agent = step();
        ++n;
        if (observer) observer->on_update(snapshot(agent, n));
        if (group.solved(agent)) return finish(params, n, true);
        if (limit && n > *limit) return finish(params, n, false);
    }
}

SearchOutcome run_independent(const SearchParams& params, Rng& rng, SearchObserver* observer) {
    Group group = init_group(params.agents, rng);
    auto step = [&] {
        const std::size_t target = uniform_index(rng, group.size());
        group.elementary_move(target, rng);
        return target;
    };
    auto snapshot = [&](std::size_t agent, std::uint64_t n) {
        return SearchSnapshot{group.agents(), agent, n, nullptr, nullptr};
    };
    return drive(params, group, step, snapshot, observer);
}

SearchOutcome run_imitative(const SearchParams& params, Rng& rng, SearchObserver* observer) {
    Group group = init_group(params.agents, rng);
    ModelTracker tracker(group);
    auto step = [&] { return imitative_update(group, tracker, params.imitation_prob, rng); };
    auto snapshot = [&](std::size_t agent, std::uint64_t n) {
        return SearchSnapshot{group.agents(), agent, n, nullptr, &tracker};
    };
    return drive(params, group, step, snapshot, observer);
}

SearchOutcome run_board(const SearchParams& params, const HintCatalog& cat, Group& group,
                        Blackboard& board, bool posting, Rng& rng, SearchObserver* observer) {
    SelectionCounts counts;
    auto step = [&] { return blackboard_update(group, board, cat, rng, counts, posting); };
    auto snapshot = [&](std::size_t agent, std::uint64_t n) {
        return SearchSnapshot{group.agents(), agent, n, &board, nullptr};
    };
    SearchOutcome out = drive(params, group, step, snapshot, observer);
    out.hint_selections = counts.selections;
    out.correct_hint_selections = counts.correct;
    return out;
}

SearchOutcome run_blackboard(const SearchParams& params, Rng& rng, SearchObserver* observer) {
    const HintCatalog& cat = catalog();
    Group group = init_group(params.agents, rng);
    Blackboard board(params.board_size);
    // Everyone posts once from the initial assignment, in shuffled order.
    std::vector<std::size_t> order(group.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    for (std::size_t i = order.size(); i > 1; --i)
        std::swap(order[i - 1], order[uniform_index(rng, i)]);
    for (std::size_t agent : order) post_hint(board, cat.extract(group[agent]), rng);
    return run_board(params, cat, group, board, true, rng, observer);
}

}  // namespace

SearchOutcome run_null_model(const SearchParams& params, const HintCatalog& cat, Rng& rng,
                             SearchObserver* observer) {
    SearchParams p = params;
    p.strategy = Strategy::null_model;
    p.validate();
    Group group = init_group(p.agents, rng);
    Blackboard board(p.board_size);
    // Partial Fisher-Yates: the first B entries are a uniform sample
    // without replacement.
    std::vector<HintId> pool(cat.size());
    std::iota(pool.begin(), pool.end(), HintId{0});
    for (int i = 0; i < p.board_size; ++i) {
        const auto j = static_cast<std::size_t>(i) + uniform_index(rng, pool.size() - i);
        std::swap(pool[i], pool[j]);
        board.append(pool[i]);
    }
    return run_board(p, cat, group, board, false, rng, observer);
}

SearchOutcome run_search(const SearchParams& params, SearchObserver* observer) {
    params.validate();
    Rng rng(params.seed);
    switch (params.strategy) {
        case Strategy::independent: return run_independent(params, rng, observer);
        case Strategy::imitative: return run_imitative(params, rng, observer);
        case Strategy::blackboard: return run_blackboard(params, rng, observer);
        case Strategy::null_model: return run_null_model(params, catalog(), rng, observer);
    }
    throw std::invalid_argument("unknown strategy");
}

}  // namespace dgr
