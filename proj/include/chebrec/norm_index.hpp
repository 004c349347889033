#pragma once

#include "chebrec/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace chebrec {

/// Index p in [1, inf] of an l_p norm. p = inf contributes 1/p = 0 to every
/// rate formula.
class NormIndex {
public:
    explicit NormIndex(double p) : p_(p) {
        if (!(p >= 1.0)) {
            throw ConfigError("norm index p must lie in [1, inf]");
        }
    }

    [[nodiscard]] static NormIndex infinity() { return NormIndex(std::numeric_limits<double>::infinity()); }

    /// Accepts a number or "inf"/"infinity".
    [[nodiscard]] static NormIndex parse(const std::string& text) {
        if (text == "inf" || text == "infinity" || text == "Inf") {
            return infinity();
        }
        try {
            std::size_t used = 0;
            const double p = std::stod(text, &used);
            if (used != text.size()) {
                throw ConfigError("bad norm index '" + text + "'");
            }
            return NormIndex(p);
        } catch (const std::logic_error&) {
            throw ConfigError("bad norm index '" + text + "'");
        }
    }

    [[nodiscard]] double value() const noexcept { return p_; }
    [[nodiscard]] bool is_infinite() const noexcept { return std::isinf(p_); }
    [[nodiscard]] double reciprocal() const noexcept { return is_infinite() ? 0.0 : 1.0 / p_; }
    [[nodiscard]] std::string to_string() const {
        if (is_infinite()) {
            return "inf";
        }
        std::string s = std::to_string(p_);
        s.erase(s.find_last_not_of('0') + 1);
        if (s.back() == '.') {
            s.pop_back();
        }
        return s;
    }

    friend bool operator==(const NormIndex&, const NormIndex&) = default;

private:
    double p_;
};

/// l_p norm of a coefficient vector.
template <class Range>
[[nodiscard]] double lp_norm(const Range& values, NormIndex p) {
    if (p.is_infinite()) {
        double m = 0.0;
        for (double v : values) {
            m = std::max(m, std::abs(v));
        }
        return m;
    }
    double sum = 0.0;
    if (p.value() == 2.0) {
        for (double v : values) {
            sum += v * v;
        }
        return std::sqrt(sum);
    }
    if (p.value() == 1.0) {
        for (double v : values) {
            sum += std::abs(v);
        }
        return sum;
    }
    for (double v : values) {
        sum += std::pow(std::abs(v), p.value());
    }
    return std::pow(sum, 1.0 / p.value());
}

}  // namespace chebrec
