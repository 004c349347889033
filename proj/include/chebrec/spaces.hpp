#pragma once

#include "chebrec/cheb_series.hpp"
#include "chebrec/norm_index.hpp"

#include <set>

namespace chebrec {

/// Parameters of the class W_s^mu: sum_k max(1,k)^(s mu) |a_k|^s <= 1.
struct SmoothnessClass {
    double s = 2.0;   ///< summability index, 1 <= s < inf
    double mu = 1.0;  ///< smoothness exponent, mu > 0

    /// Throws ConfigError unless 1 <= s < inf and mu > 0.
    void validate() const;
    [[nodiscard]] double inv_s() const noexcept { return 1.0 / s; }
};

/// (sum_k max(1,k)^(s mu) |a_k|^s)^(1/s).
[[nodiscard]] double norm_smooth(const ChebSeries& series, const SmoothnessClass& cls);

inline constexpr long kMaxExtremalN1 = 1L << 24;

struct ExtremalF1 {
    ChebSeries series;
    long n1 = 0;
    double realized_lp_norm = 0.0;  ///< ||coefficients||_{l_p}; equals delta up to the rounding of n1
};

/// Lower-bound fixture: 3^-mu n1^(-mu-1/s) on indices n1+r .. 2n1+r-1, where n1
/// solves 3^-mu n1^(-mu+1/p-1/s) = delta rounded to the nearest integer >= 1.
/// Requires mu > 2r - 1/s + 1, 0 < delta < 1, and n1 >= r - 1 (so the support
/// stays below 3 n1 and the class norm is at most 1). n1 is capped at
/// kMaxExtremalN1; larger solutions throw ConfigError.
[[nodiscard]] ExtremalF1 make_extremal_f1(const SmoothnessClass& cls, int r, double delta, NormIndex p);

/// Lower-bound fixture: 4^-mu n^(-mu-1/s) on the n smallest indices of
/// [n+r, 3n+r] not in `excluded`. Requires |excluded| <= n, every excluded
/// index >= r, and r <= n.
[[nodiscard]] ChebSeries make_extremal_f2(const SmoothnessClass& cls, int r, long n, const std::set<long>& excluded);

}  // namespace chebrec
