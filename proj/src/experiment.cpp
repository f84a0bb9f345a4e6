#include "dgr/experiment.hpp"

#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>
#include <thread>

namespace dgr {

namespace {

std::string format_double(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

template <class T>
T parse_number(std::string_view field) {
    T value{};
    const auto* end = field.data() + field.size();
    auto [ptr, ec] = std::from_chars(field.data(), end, value);
    if (ec != std::errc{} || ptr != end)
        throw std::invalid_argument("malformed numeric field: " + std::string(field));
    return value;
}

double parse_double(std::string_view field) {
    std::string s(field);
    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (s.empty() || end != s.c_str() + s.size())
        throw std::invalid_argument("malformed numeric field: " + s);
    return v;
}

RunRecord make_record(const SearchParams& params, std::uint64_t run_id,
                      const SearchOutcome& out) {
    RunRecord r;
    r.run_id = run_id;
    r.strategy = params.strategy;
    r.agents = params.agents;
    r.imitation_prob = params.imitation_prob;
    r.board_size = params.board_size;
    r.seed = params.seed;
    r.t_star = out.t_star;
    r.C = out.C;
    r.solved = out.solved;
    r.updates = out.updates;
    r.hint_selections = out.hint_selections;
    r.correct_hint_selections = out.correct_hint_selections;
    return r;
}

// Calls job(i) for i in [0, count) on a pool of `threads` workers pulling
// indices from a shared counter.
template <class Job>
void parallel_for(std::size_t count, unsigned threads, Job&& job) {
    if (threads <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) job(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::atomic<bool> failed{false};
    {
        std::vector<std::jthread> pool;
        const unsigned n = static_cast<unsigned>(std::min<std::size_t>(threads, count));
        for (unsigned t = 0; t < n; ++t) {
            pool.emplace_back([&] {
                for (std::size_t i; !failed && (i = next++) < count;) {
                    try {
                        job(i);
                    } catch (...) {
                        if (!failed.exchange(true)) failure = std::current_exception();
                    }
                }
            });
        }
    }
    if (failure) std::rethrow_exception(failure);
}

bool has_board(Strategy s) { return s == Strategy::blackboard || s == Strategy::null_model; }

}  // namespace

std::vector<RunRecord> run_batch(const SearchParams& params, std::size_t runs,
                                 std::uint64_t master_seed, unsigned threads) {
    params.validate();
    std::vector<RunRecord> records(runs);
    parallel_for(runs, threads, [&](std::size_t r) {
        SearchParams p = params;
        p.seed = derive_seed(master_seed, r);
        records[r] = make_record(p, r, run_search(p));
    });
    return records;
}

CostSample cost_sample(const std::vector<RunRecord>& records) {
    CostSample s;
    for (const auto& r : records) {
        if (r.solved)
            s.values.push_back(r.C);
        else
            ++s.censored_count;
    }
    return s;
}

std::vector<SelectionRecord> selection_records(const std::vector<RunRecord>& records) {
    std::vector<SelectionRecord> out;
    out.reserve(records.size());
    for (const auto& r : records) out.push_back({r.hint_selections, r.correct_hint_selections});
    return out;
}

BatchSummary summarize_batch(const SearchParams& params, const std::vector<RunRecord>& records) {
    BatchSummary s;
    s.strategy = params.strategy;
    s.agents = params.agents;
    s.imitation_prob = params.imitation_prob;
    s.board_size = params.board_size;
    s.n_runs = records.size();
    const CostSample sample = cost_sample(records);
    s.censored = sample.censored_count;
    if (sample.values.size() >= 2) s.cost = summarize(sample);
    if (sample.values.size() >= 100) s.fit = fit_exponential(sample);
    if (has_board(params.strategy)) {
        const auto sel = selection_records(records);
        bool any = false;
        for (const auto& r : sel) any |= r.selections > 0;
        if (any) s.phi = phi_from_records(sel);
        if (params.board_size >= 1) s.phi_null = null_model_phi(params.board_size);
    }
    return s;
}

// --- encodings ---------------------------------------------------------------

std::string record_to_csv(const RunRecord& r) {
    std::string s;
    s += std::to_string(r.run_id) + ',';
    s += std::string(to_string(r.strategy)) + ',';
    s += std::to_string(r.agents) + ',';
    s += format_double(r.imitation_prob) + ',';
    s += std::to_string(r.board_size) + ',';
    s += std::to_string(r.seed) + ',';
    s += format_double(r.t_star) + ',';
    s += format_double(r.C) + ',';
    s += (r.solved ? "1," : "0,");
    s += std::to_string(r.updates) + ',';
    s += std::to_string(r.hint_selections) + ',';
    s += std::to_string(r.correct_hint_selections);
    return s;
}

RunRecord record_from_csv(std::string_view line) {
    std::vector<std::string_view> f;
    std::size_t start = 0;
    for (;;) {
        const auto comma = line.find(',', start);
        f.push_back(line.substr(start, comma - start));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    if (f.size() != 12) throw std::invalid_argument("run record needs 12 fields");
    RunRecord r;
    r.run_id = parse_number<std::uint64_t>(f[0]);
    r.strategy = strategy_from_string(f[1]);
    r.agents = parse_number<int>(f[2]);
    r.imitation_prob = parse_double(f[3]);
    r.board_size = parse_number<int>(f[4]);
    r.seed = parse_number<std::uint64_t>(f[5]);
    r.t_star = parse_double(f[6]);
    r.C = parse_double(f[7]);
    if (f[8] != "0" && f[8] != "1") throw std::invalid_argument("solved must be 0 or 1");
    r.solved = f[8] == "1";
    r.updates = parse_number<std::uint64_t>(f[9]);
    r.hint_selections = parse_number<std::uint64_t>(f[10]);
    r.correct_hint_selections = parse_number<std::uint64_t>(f[11]);
    return r;
}

void write_records_csv(std::ostream& os, const std::vector<RunRecord>& records) {
    os << kRecordCsvHeader << '\n';
    for (const auto& r : records) os << record_to_csv(r) << '\n';
}

nlohmann::ordered_json record_to_json(const RunRecord& r) {
    return {{"run_id", r.run_id},
            {"strategy", to_string(r.strategy)},
            {"M", r.agents},
            {"p", r.imitation_prob},
            {"B", r.board_size},
            {"seed", r.seed},
            {"t_star", r.t_star},
            {"C", r.C},
            {"solved", r.solved},
            {"updates", r.updates},
            {"hint_selections", r.hint_selections},
            {"correct_hint_selections", r.correct_hint_selections}};
}

RunRecord record_from_json(const nlohmann::json& j) {
    RunRecord r;
    r.run_id = j.at("run_id").get<std::uint64_t>();
    r.strategy = strategy_from_string(j.at("strategy").get<std::string>());
    r.agents = j.at("M").get<int>();
    r.imitation_prob = j.at("p").get<double>();
    r.board_size = j.at("B").get<int>();
    r.seed = j.at("seed").get<std::uint64_t>();
    r.t_star = j.at("t_star").get<double>();
    r.C = j.at("C").get<double>();
    r.solved = j.at("solved").get<bool>();
    r.updates = j.at("updates").get<std::uint64_t>();
    r.hint_selections = j.at("hint_selections").get<std::uint64_t>();
    r.correct_hint_selections = j.at("correct_hint_selections").get<std::uint64_t>();
    return r;
}

nlohmann::ordered_json summary_to_json(const BatchSummary& s) {
    nlohmann::ordered_json j;
    j["strategy"] = to_string(s.strategy);
    j["M"] = s.agents;
    j["p"] = s.imitation_prob;
    j["B"] = s.board_size;
    j["n_runs"] = s.n_runs;
    j["mean_C"] = s.cost ? nlohmann::ordered_json(s.cost->mean) : nullptr;
    j["stderr_C"] = s.cost ? nlohmann::ordered_json(s.cost->std_error) : nullptr;
    j["mean_is_lower_bound"] = s.censored > 0;
    j["rate"] = s.fit ? nlohmann::ordered_json(s.fit->rate) : nullptr;
    j["ks"] = s.fit ? nlohmann::ordered_json(s.fit->ks_statistic) : nullptr;
    j["phi"] = s.phi ? nlohmann::ordered_json(s.phi->phi) : nullptr;
    j["phi_stderr"] = s.phi ? nlohmann::ordered_json(s.phi->std_error) : nullptr;
    j["phi_pooled"] = s.phi ? nlohmann::ordered_json(s.phi->pooled_phi) : nullptr;
    j["phi_null"] = s.phi_null ? nlohmann::ordered_json(*s.phi_null) : nullptr;
    j["censored"] = s.censored;
    return j;
}

nlohmann::ordered_json run_metadata(std::uint64_t master_seed) {
    return {{"rng", kRngName}, {"seed_derivation", kSeedDerivation}, {"master_seed", master_seed}};
}

nlohmann::ordered_json minima_report_to_json(const MinimaReport& report) {
    nlohmann::ordered_json j;
    j["total_states"] = report.total_states;
    j["minima_count"] = report.minima_count;
    j["global_minima_count"] = report.global_minima_count;
    j["local_minima_count"] = report.local_minima_count;
    j["strict_minima_count"] = report.strict_minima_count;
    auto& list = j["minima"] = nlohmann::ordered_json::array();
    for (const auto& m : report.minima)
        list.push_back({{"assignment", m.assignment.to_string()}, {"cost", m.cost}, {"index", m.index}, {"strict", m.strict}});
    return j;
}

void write_catalog_csv(std::ostream& os, const HintCatalog& cat) {
    os << "id,column,epsilon,pairs,correct\n";
    for (const Hint& h : cat.hints()) {
        std::string pairs;
        for (const auto& p : h.pairs()) {
            if (!pairs.empty()) pairs += ' ';
            pairs += to_char(p.letter);
            pairs += '=';
            pairs += std::to_string(p.digit);
        }
        os << h.id << ',' << h.column << ',' << h.epsilon << ',' << pairs << ','
           << (cat.is_correct(h.id) ? 1 : 0) << '\n';
    }
}

nlohmann::ordered_json catalog_to_json(const HintCatalog& cat) {
    nlohmann::ordered_json hints = nlohmann::ordered_json::array();
    std::size_t correct = 0;
    for (const Hint& h : cat.hints()) {
        nlohmann::ordered_json pairs = nlohmann::ordered_json::object();
        for (const auto& p : h.pairs()) pairs[std::string(1, to_char(p.letter))] = p.digit;
        correct += cat.is_correct(h.id);
        hints.push_back({{"id", h.id},
                         {"column", h.column},
                         {"epsilon", h.epsilon},
                         {"pairs", pairs},
                         {"text", h.to_string()},
                         {"correct", cat.is_correct(h.id)}});
    }
    return {{"total", cat.size()}, {"correct", correct}, {"hints", hints}};
}

// --- sweeps ------------------------------------------------------------------

std::string_view axis_name(SweepAxis axis) noexcept {
    switch (axis) {
        case SweepAxis::imitation_prob: return "p";
        case SweepAxis::agents: return "M";
        case SweepAxis::board_size: return "B";
    }
    return "?";
}

std::vector<SweepRow> run_sweep(const SearchParams& base, SweepAxis axis,
                                const std::vector<double>& values, std::size_t runs,
                                std::uint64_t master_seed, unsigned threads,
                                std::optional<double> max_cost) {
    if (values.empty()) throw std::invalid_argument("sweep needs at least one axis value");
    std::vector<SweepRow> rows;
    for (double v : values) {
        SearchParams p = base;
        switch (axis) {
            case SweepAxis::imitation_prob: p.imitation_prob = v; break;
            case SweepAxis::agents: p.agents = static_cast<int>(v); break;
            case SweepAxis::board_size: p.board_size = static_cast<int>(v); break;
        }
        if (axis != SweepAxis::imitation_prob && v != std::floor(v))
            throw std::invalid_argument("sweep values for M and B must be integers");
        if (max_cost) p.max_time = max_time_for_cost(*max_cost, p.agents);
        p.validate();
        rows.push_back({v, summarize_batch(p, run_batch(p, runs, master_seed, threads))});
    }
    return rows;
}

namespace {

std::string optional_field(const std::optional<double>& v) {
    return v ? format_double(*v) : std::string();
}

}  // namespace

void write_sweep_csv(std::ostream& os, SweepAxis axis, const std::vector<SweepRow>& rows) {
    os << axis_name(axis) << ",n_runs,mean_C,stderr_C,censored,rate,ks,phi,phi_stderr,phi_null\n";
    for (const auto& row : rows) {
        const auto& s = row.summary;
        os << format_double(row.axis_value) << ',' << s.n_runs << ','
           << optional_field(s.cost ? std::optional(s.cost->mean) : std::nullopt) << ','
           << optional_field(s.cost ? std::optional(s.cost->std_error) : std::nullopt) << ','
           << s.censored << ','
           << optional_field(s.fit ? std::optional(s.fit->rate) : std::nullopt) << ','
           << optional_field(s.fit ? std::optional(s.fit->ks_statistic) : std::nullopt) << ','
           << optional_field(s.phi ? std::optional(s.phi->phi) : std::nullopt) << ','
           << optional_field(s.phi ? std::optional(s.phi->std_error) : std::nullopt) << ','
           << optional_field(s.phi_null) << '\n';
    }
}

nlohmann::ordered_json sweep_to_json(SweepAxis axis, const std::vector<SweepRow>& rows) {
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (const auto& row : rows) {
        nlohmann::ordered_json j;
        j[std::string(axis_name(axis))] = row.axis_value;
        const auto summary = summary_to_json(row.summary);
        for (const auto& [k, v] : summary.items()) j[k] = v;
        out.push_back(std::move(j));
    }
    return {{"axis", axis_name(axis)}, {"rows", out}};
}

std::vector<NullModelRow> run_null_model_table(const SearchParams& base,
                                               const std::vector<int>& board_sizes,
                                               std::size_t runs, std::uint64_t master_seed,
                                               unsigned threads) {
    if (board_sizes.empty()) throw std::invalid_argument("null model needs board sizes");
    std::vector<NullModelRow> rows;
    for (int b : board_sizes) {
        SearchParams p = base;
        p.strategy = Strategy::null_model;
        p.board_size = b;
        p.validate();
        const auto records = run_batch(p, runs, master_seed, threads);
        rows.push_back({b, phi_from_records(selection_records(records)), null_model_phi(b)});
    }
    return rows;
}

void write_null_model_csv(std::ostream& os, const std::vector<NullModelRow>& rows) {
    os << "B,phi_simulated,phi_stderr,runs,selections,correct,phi_pooled,phi_analytic\n";
    for (const auto& r : rows) {
        os << r.board_size << ',' << format_double(r.simulated.phi) << ','
           << format_double(r.simulated.std_error) << ',' << r.simulated.runs << ','
           << r.simulated.selections << ',' << r.simulated.correct << ','
           << format_double(r.simulated.pooled_phi) << ',' << format_double(r.analytic) << '\n';
    }
}

nlohmann::ordered_json null_model_to_json(const std::vector<NullModelRow>& rows) {
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (const auto& r : rows) {
        out.push_back({{"B", r.board_size},
                       {"phi_simulated", r.simulated.phi},
                       {"phi_stderr", r.simulated.std_error},
                       {"runs", r.simulated.runs},
                       {"selections", r.simulated.selections},
                       {"correct", r.simulated.correct},
                       {"phi_pooled", r.simulated.pooled_phi},
                       {"phi_analytic", r.analytic}});
    }
    return out;
}

}  // namespace dgr
