#include "chebrec/metrics.hpp"

#include "chebrec/errors.hpp"
#include "chebrec/ingest.hpp"

#include <cmath>

namespace chebrec {

ErrorPair error_between(const ChebSeries& approx, const ChebSeries& reference, std::size_t grid_size) {
    const ChebSeries diff = approx - reference;
    return {norm_l2w(diff), norm_sup(diff, grid_size), grid_size};
}

ReferenceOnGrid::ReferenceOnGrid(ChebSeries reference, std::size_t grid_size)
    : reference_(std::move(reference)), grid_(lobatto_grid(grid_size)), values_(eval_grid(reference_, grid_)) {}

ErrorPair ReferenceOnGrid::error_of(const ChebSeries& approx) const {
    ErrorPair out;
    out.grid_size = grid_.size();
    out.err_l2w = norm_l2w(approx - reference_);
    double best = 0.0;
    for (std::size_t j = 0; j < grid_.size(); ++j) {
        best = std::max(best, std::abs(eval(approx, grid_[j]) - values_[j]));
    }
    out.err_sup = best;
    return out;
}

ChebSeries reference_derivative(KnownFunction fn, int r) {
    return exact_coeffs(derivative(fn, r), reference_degree(fn), reference_min_nodes(fn));
}

RateFit fit_rate(std::span<const std::pair<double, double>> delta_error) {
    if (delta_error.size() < 3) {
        throw ConfigError("rate fit needs at least 3 points");
    }
    RateFit fit;
    for (const auto& [delta, error] : delta_error) {
        if (!(delta > 0.0) || !(error > 0.0)) {
            throw ConfigError("rate fit needs strictly positive delta and error");
        }
        fit.points.emplace_back(std::log10(delta), std::log10(error));
    }
    const double n = static_cast<double>(fit.points.size());
    double mx = 0.0;
    double my = 0.0;
    for (const auto& [x, y] : fit.points) {
        mx += x;
        my += y;
    }
    mx /= n;
    my /= n;
    double sxx = 0.0;
    double sxy = 0.0;
    double syy = 0.0;
    for (const auto& [x, y] : fit.points) {
        sxx += (x - mx) * (x - mx);
        sxy += (x - mx) * (y - my);
        syy += (y - my) * (y - my);
    }
    if (sxx == 0.0) {
        throw ConfigError("rate fit needs at least two distinct delta values");
    }
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    double ss_res = 0.0;
    for (const auto& [x, y] : fit.points) {
        const double e = y - (fit.intercept + fit.slope * x);
        ss_res += e * e;
    }
    // A constant series is fitted exactly by the horizontal line.
    fit.r2 = syy > 0.0 ? std::clamp(1.0 - ss_res / syy, 0.0, 1.0) : 1.0;
    return fit;
}

}  // namespace chebrec
