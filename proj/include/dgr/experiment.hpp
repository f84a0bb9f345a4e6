#pragma once

// Batches of seeded runs, their summaries, and the CSV/JSON encodings used
// by the command-line tool.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "dgr/landscape.hpp"
#include "dgr/search.hpp"
#include "dgr/stats.hpp"

namespace dgr {

struct RunRecord {
    std::uint64_t run_id = 0;
    Strategy strategy = Strategy::independent;
    int agents = 1;
    double imitation_prob = 0.0;
    int board_size = kCatalogSize;
    std::uint64_t seed = 0;
    double t_star = 1.0;
    double C = 0.0;
    bool solved = false;
    std::uint64_t updates = 0;
    std::uint64_t hint_selections = 0;
    std::uint64_t correct_hint_selections = 0;

    friend bool operator==(const RunRecord&, const RunRecord&) = default;
};

/// Runs `runs` searches; run r is seeded with derive_seed(master_seed, r).
/// Records come back ordered by run index whatever the thread count.
std::vector<RunRecord> run_batch(const SearchParams& params, std::size_t runs,
                                 std::uint64_t master_seed, unsigned threads = 1);

struct BatchSummary {
    Strategy strategy = Strategy::independent;
    int agents = 1;
    double imitation_prob = 0.0;
    int board_size = kCatalogSize;
    std::size_t n_runs = 0;
    std::size_t censored = 0;
    std::optional<CostSummary> cost;
    std::optional<ExponentialFit> fit;
    std::optional<PhiEstimate> phi;
    std::optional<double> phi_null;
};

BatchSummary summarize_batch(const SearchParams& params, const std::vector<RunRecord>& records);

CostSample cost_sample(const std::vector<RunRecord>& records);
std::vector<SelectionRecord> selection_records(const std::vector<RunRecord>& records);

// --- encodings ---------------------------------------------------------------

inline constexpr std::string_view kRecordCsvHeader =
    "run_id,strategy,M,p,B,seed,t_star,C,solved,updates,hint_selections,"
    "correct_hint_selections";

std::string record_to_csv(const RunRecord& r);
/// Throws std::invalid_argument on malformed rows.
RunRecord record_from_csv(std::string_view line);
void write_records_csv(std::ostream& os, const std::vector<RunRecord>& records);

nlohmann::ordered_json record_to_json(const RunRecord& r);
RunRecord record_from_json(const nlohmann::json& j);

nlohmann::ordered_json summary_to_json(const BatchSummary& s);
nlohmann::ordered_json run_metadata(std::uint64_t master_seed);

nlohmann::ordered_json minima_report_to_json(const MinimaReport& report);

void write_catalog_csv(std::ostream& os, const HintCatalog& cat);
nlohmann::ordered_json catalog_to_json(const HintCatalog& cat);

// --- sweeps ------------------------------------------------------------------

enum class SweepAxis { imitation_prob, agents, board_size };

std::string_view axis_name(SweepAxis axis) noexcept;

struct SweepRow {
    double axis_value = 0.0;
    BatchSummary summary;
};

/// One batch per axis value, each seeded with the same master seed, so a
/// row reproduces the matching `simulate` invocation. A cost cutoff, when
/// given, overrides base.max_time and is converted per row.
std::vector<SweepRow> run_sweep(const SearchParams& base, SweepAxis axis,
                                const std::vector<double>& values, std::size_t runs,
                                std::uint64_t master_seed, unsigned threads,
                                std::optional<double> max_cost = std::nullopt);

void write_sweep_csv(std::ostream& os, SweepAxis axis, const std::vector<SweepRow>& rows);
nlohmann::ordered_json sweep_to_json(SweepAxis axis, const std::vector<SweepRow>& rows);

struct NullModelRow {
    int board_size = 0;
    PhiEstimate simulated;
    double analytic = 0.0;
};

std::vector<NullModelRow> run_null_model_table(const SearchParams& base,
                                               const std::vector<int>& board_sizes,
                                               std::size_t runs, std::uint64_t master_seed,
                                               unsigned threads);

void write_null_model_csv(std::ostream& os, const std::vector<NullModelRow>& rows);
nlohmann::ordered_json null_model_to_json(const std::vector<NullModelRow>& rows);

}  // namespace dgr
