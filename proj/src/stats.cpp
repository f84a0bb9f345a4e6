#include "dgr/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "dgr/hints.hpp"
#include "dgr/puzzle.hpp"

namespace dgr {

double computational_cost(double t_star, int agents) noexcept {
    return agents * t_star / static_cast<double>(kStateSpaceSize);
}

CostSummary summarize(const CostSample& sample) {
    const auto& v = sample.values;
    if (v.size() < 2) throw std::invalid_argument("need at least two uncensored samples");
    for (double c : v)
        if (!(c > 0.0)) throw std::invalid_argument("computational cost must be positive");
    CostSummary s;
    s.n = v.size();
    double sum = 0.0;
    for (double c : v) sum += c;
    s.mean = sum / s.n;
    double ss = 0.0;
    for (double c : v) ss += (c - s.mean) * (c - s.mean);
    s.std_error = std::sqrt(ss / (s.n - 1)) / std::sqrt(static_cast<double>(s.n));
    s.lower_bound = sample.censored_count > 0;
    return s;
}

double ks_exponential(std::span<const double> values, double rate) {
    std::vector<double> x(values.begin(), values.end());
    std::sort(x.begin(), x.end());
    const double n = static_cast<double>(x.size());
    double d = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double f = -std::expm1(-rate * x[i]);
        d = std::max({d, f - i / n, (i + 1) / n - f});
    }
    return d;
}

ExponentialFit fit_exponential(const CostSample& sample) {
    if (sample.values.size() < 100)
        throw std::invalid_argument("exponential fit needs at least 100 uncensored samples");
    const CostSummary s = summarize(sample);
    ExponentialFit fit;
    fit.n = s.n;
    fit.mean = s.mean;
    fit.rate = 1.0 / s.mean;
    fit.ks_statistic = ks_exponential(sample.values, fit.rate);
    return fit;
}

PhiEstimate phi_from_records(std::span<const SelectionRecord> records) {
    PhiEstimate est;
    double sum = 0.0, sum_sq = 0.0;
    for (const auto& r : records) {
        if (r.correct > r.selections)
            throw std::invalid_argument("more correct selections than selections");
        est.selections += r.selections;
        est.correct += r.correct;
        if (r.selections == 0) continue;
        const double phi = static_cast<double>(r.correct) / r.selections;
        sum += phi;
        sum_sq += phi * phi;
        ++est.runs;
    }
    if (est.runs == 0) throw std::domain_error("no hint selections: phi is undefined");
    est.phi = sum / est.runs;
    est.pooled_phi = static_cast<double>(est.correct) / est.selections;
    if (est.runs > 1) {
        const double var = std::max(0.0, (sum_sq - est.runs * est.phi * est.phi) / (est.runs - 1));
        est.std_error = std::sqrt(var / est.runs);
    }
    return est;
}

double null_model_phi(int board_size) {
    constexpr int total = kCatalogSize;
    constexpr int good = 6;
    if (board_size < 1 || board_size > total)
        throw std::invalid_argument("board size must lie in [1, 351]");
    const long double b = board_size;
    long double falling_total = 1.0L;  // 351! / 345!
    for (int i = 0; i < good; ++i) falling_total *= total - i;
    long double binom_good = 1.0L;  // C(6, k), updated incrementally
    long double phi = 0.0L;
    for (int k = 0; k <= good; ++k) {
        if (k > 0) binom_good = binom_good * (good - k + 1) / k;
        // C(345, B-k) / C(351, B) = B^(k falling) (351-B)^(6-k falling) / 351^(6 falling)
        long double ratio = 1.0L;
        for (int i = 0; i < k; ++i) ratio *= b - i;
        for (int i = 0; i < good - k; ++i) ratio *= (total - b) - i;
        ratio /= falling_total;
        phi += binom_good * ratio * k / b;
    }
    return static_cast<double>(phi);
}

}  // namespace dgr
