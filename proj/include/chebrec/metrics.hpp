#pragma once

#include "chebrec/cheb_series.hpp"
#include "chebrec/known_functions.hpp"

#include <span>
#include <utility>
#include <vector>

namespace chebrec {

struct ErrorPair {
    double err_l2w = 0.0;  ///< coefficient l_2 distance (= weighted L2 distance by Parseval)
    double err_sup = 0.0;  ///< max |difference| on the Lobatto grid
    std::size_t grid_size = kDefaultSupGrid;
};

[[nodiscard]] ErrorPair error_between(const ChebSeries& approx, const ChebSeries& reference,
                                      std::size_t grid_size = kDefaultSupGrid);

/// A reference series with its values cached on the Lobatto grid, so repeated
/// comparisons against short approximations cost O(grid * len(approx)).
class ReferenceOnGrid {
public:
    explicit ReferenceOnGrid(ChebSeries reference, std::size_t grid_size = kDefaultSupGrid);

    [[nodiscard]] const ChebSeries& series() const noexcept { return reference_; }
    [[nodiscard]] std::size_t grid_size() const noexcept { return grid_.size(); }

    /// Same quantities as error_between(approx, series(), grid_size()).
    [[nodiscard]] ErrorPair error_of(const ChebSeries& approx) const;

private:
    ChebSeries reference_;
    std::vector<double> grid_;
    std::vector<double> values_;
};

/// Coefficients of the r-th derivative of a known function, expanded from the
/// symbolic derivative at reference_degree(fn) with reference_min_nodes(fn).
[[nodiscard]] ChebSeries reference_derivative(KnownFunction fn, int r);

struct RateFit {
    double slope = 0.0;
    double intercept = 0.0;
    double r2 = 0.0;
    std::vector<std::pair<double, double>> points;  ///< (log10 delta, log10 error)
};

/// Least-squares line through (log10 delta, log10 error). Needs >= 3 points,
/// all strictly positive; throws ConfigError otherwise.
[[nodiscard]] RateFit fit_rate(std::span<const std::pair<double, double>> delta_error);

}  // namespace chebrec
