#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace dgr {

/// M * t* / 10!. Of order one for independent search at any group size.
double computational_cost(double t_star, int agents) noexcept;

struct CostSample {
    std::vector<double> values;  // uncensored C values
    std::size_t censored_count = 0;
};

struct CostSummary {
    double mean = 0.0;
    double std_error = 0.0;
    std::size_t n = 0;
    /// Censored runs were dropped, so the true mean is at least `mean`.
    bool lower_bound = false;
};

/// Mean and standard error (sample sd / sqrt(n)). Throws std::invalid_argument
/// for fewer than two values or non-positive values.
CostSummary summarize(const CostSample& sample);

struct ExponentialFit {
    double rate = 0.0;
    double mean = 0.0;
    double ks_statistic = 0.0;
    std::size_t n = 0;
};

/// Maximum-likelihood exponential fit (rate = 1 / mean) with the
/// Kolmogorov-Smirnov distance to the fitted CDF. Needs at least 100 values.
ExponentialFit fit_exponential(const CostSample& sample);

/// Sup-distance between the empirical CDF of `values` and 1 - exp(-rate x).
double ks_exponential(std::span<const double> values, double rate);

struct SelectionRecord {
    std::uint64_t selections = 0;
    std::uint64_t correct = 0;
};

struct PhiEstimate {
    double phi = 0.0;      // mean over runs of correct / selections
    double std_error = 0.0;  // standard error of that mean across runs
    std::size_t runs = 0;  // runs with at least one selection
    std::uint64_t selections = 0;
    std::uint64_t correct = 0;
    double pooled_phi = 0.0;
};

/// Throws std::domain_error when no run made a selection.
PhiEstimate phi_from_records(std::span<const SelectionRecord> records);

/// Probability of reading a correct hint from a board of B hints drawn
/// without replacement from the catalog: sum_k P(k correct) * k / B.
double null_model_phi(int board_size);

}  // namespace dgr
