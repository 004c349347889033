#pragma once

#include "chebrec/cheb_series.hpp"
#include "chebrec/norm_index.hpp"
#include "chebrec/spaces.hpp"

#include <string>

namespace chebrec {

/// Metric in which the recovery error is measured.
enum class Metric { C, L2w };

[[nodiscard]] std::string to_string(Metric metric);
/// Accepts "C" and "L2w" (also "L2", "l2w"). Throws ConfigError.
[[nodiscard]] Metric parse_metric(const std::string& text);

/// How the input error is modelled: l_p-bounded coefficient errors, or an
/// L2w-bounded error of the function itself.
enum class ErrorModel { CoefficientsLp, FunctionL2w };

enum class Regime { C_lp, L2w_lp, C_l2_function, L2w_l2_function };

[[nodiscard]] std::string to_string(Regime regime);

struct RateReport {
    double exponent = 0.0;  ///< predicted power of delta
    Regime regime = Regime::C_lp;
};

/// Throws AdmissibilityError unless mu > 2r - 1/s + 1 (metric C) or
/// mu > 2r - 1/s + 1/2 (metric L2w).
void check_admissible(const SmoothnessClass& cls, int r, Metric metric);
[[nodiscard]] bool is_admissible(const SmoothnessClass& cls, int r, Metric metric);

/// N = max(r, 1, ceil(c_N * delta^(-1/(mu - 1/p + 1/s)))). Non-increasing in delta.
[[nodiscard]] long select_truncation_level(const SmoothnessClass& cls, int r, NormIndex p, double delta,
                                           Metric metric, double c_n = 1.0);

/// Everything needed to run the truncation method once.
struct RecoveryPlan {
    int r = 1;
    Metric metric = Metric::C;
    NormIndex p{2.0};
    SmoothnessClass cls{};
    double delta = 1e-4;
    double c_n = 1.0;
    long n = 1;

    /// Resolves n by the selection rule.
    [[nodiscard]] static RecoveryPlan make(const SmoothnessClass& cls, int r, NormIndex p, double delta, Metric metric,
                                           double c_n = 1.0);
};

/// The truncation method: keep coefficients with index in [r, n] ([0, n] for
/// r = 0), then differentiate r times. Missing input coefficients count as
/// zero. Throws ConfigError when n < r.
[[nodiscard]] ChebSeries truncate_recover(const ChebSeries& noisy, int r, long n);

/// True when the input is shorter than the window [0, n] needs.
[[nodiscard]] inline bool input_shorter_than_window(const ChebSeries& noisy, long n) {
    return static_cast<long>(noisy.size()) < n + 1;
}

/// Exponent of delta in the order-optimal error for the given regime.
/// For ErrorModel::FunctionL2w the index p is ignored.
[[nodiscard]] RateReport theoretical_rate(const SmoothnessClass& cls, int r, NormIndex p, Metric metric,
                                          ErrorModel model);

/// Whether the r = 0 problem keeps the full O(delta) order:
/// (C and p = 1) or (L2w and p <= 2 and s >= 2).
[[nodiscard]] bool is_wellposed_summation(double s, NormIndex p, Metric metric);

}  // namespace chebrec
