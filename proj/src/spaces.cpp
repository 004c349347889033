#include "chebrec/spaces.hpp"

#include "chebrec/errors.hpp"

#include <cmath>
#include <vector>

namespace chebrec {

void SmoothnessClass::validate() const {
    if (!(s >= 1.0) || !std::isfinite(s)) {
        throw ConfigError("summability index s must satisfy 1 <= s < inf");
    }
    if (!(mu > 0.0) || !std::isfinite(mu)) {
        throw ConfigError("smoothness exponent mu must be positive");
    }
}

double norm_smooth(const ChebSeries& series, const SmoothnessClass& cls) {
    cls.validate();
    const auto a = series.coeffs();
    double sum = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) {
        if (a[k] == 0.0) {
            continue;
        }
        const double kk = static_cast<double>(std::max<std::size_t>(1, k));
        // (k^mu |a_k|)^s keeps the intermediate in range for large k.
        sum += std::pow(std::pow(kk, cls.mu) * std::abs(a[k]), cls.s);
    }
    return std::pow(sum, 1.0 / cls.s);
}

ExtremalF1 make_extremal_f1(const SmoothnessClass& cls, int r, double delta, NormIndex p) {
    cls.validate();
    if (r < 0) {
        throw ConfigError("derivative order must be non-negative");
    }
    if (!(delta > 0.0 && delta < 1.0)) {
        throw ConfigError("delta must lie in (0, 1)");
    }
    if (!(cls.mu > 2.0 * r - cls.inv_s() + 1.0)) {
        throw AdmissibilityError("extremal f1 requires mu > 2r - 1/s + 1");
    }
    const double rate = cls.mu - p.reciprocal() + cls.inv_s();
    // 3^-mu n1^-rate = delta  =>  ln n1 = -(ln delta + mu ln 3) / rate
    const double log_n1 = -(std::log(delta) + cls.mu * std::log(3.0)) / rate;
    if (log_n1 > std::log(static_cast<double>(kMaxExtremalN1))) {
        throw ConfigError("extremal f1 support exceeds n1 = " + std::to_string(kMaxExtremalN1) +
                          "; delta too small for this class");
    }
    const long n1 = std::max(1L, std::lround(std::exp(log_n1)));
    if (n1 + 1 < r) {
        throw ConfigError("delta too large for extremal f1: n1 = " + std::to_string(n1) + " < r - 1");
    }
    const double value = std::pow(3.0, -cls.mu) * std::pow(static_cast<double>(n1), -cls.mu - cls.inv_s());
    std::vector<double> c(static_cast<std::size_t>(2 * n1 + r), 0.0);
    for (long k = n1 + r; k <= 2 * n1 + r - 1; ++k) {
        c[static_cast<std::size_t>(k)] = value;
    }
    ExtremalF1 out{ChebSeries(std::move(c)), n1, 0.0};
    out.realized_lp_norm = lp_norm(out.series.coeffs(), p);
    return out;
}

ChebSeries make_extremal_f2(const SmoothnessClass& cls, int r, long n, const std::set<long>& excluded) {
    cls.validate();
    if (n < 1) {
        throw ConfigError("extremal f2 needs n >= 1");
    }
    if (r < 0 || r > n) {
        throw ConfigError("extremal f2 needs 0 <= r <= n");
    }
    if (static_cast<long>(excluded.size()) > n) {
        throw ConfigError("extremal f2: more than n excluded indices");
    }
    if (!excluded.empty() && *excluded.begin() < r) {
        throw ConfigError("extremal f2: excluded indices must be >= r");
    }
    std::vector<long> support;
    for (long k = n + r; k <= 3 * n + r && static_cast<long>(support.size()) < n; ++k) {
        if (!excluded.contains(k)) {
            support.push_back(k);
        }
    }
    // [n+r, 3n+r] has 2n+1 indices and at most n are excluded.
    if (static_cast<long>(support.size()) != n) {
        throw std::logic_error("extremal f2: not enough eligible indices");
    }
    const double value = std::pow(4.0, -cls.mu) * std::pow(static_cast<double>(n), -cls.mu - cls.inv_s());
    std::vector<double> c(static_cast<std::size_t>(support.back() + 1), 0.0);
    for (long k : support) {
        c[static_cast<std::size_t>(k)] = value;
    }
    return ChebSeries(std::move(c));
}

}  // namespace chebrec
