#include "chebrec/known_functions.hpp"

#include "chebrec/errors.hpp"

#include <cmath>

namespace chebrec {

namespace {

constexpr double kC1 = 1.0 / 497.0;
constexpr double kC2 = 1.0 / 7.0;
constexpr double kC3 = 1.0 / 1580.0;

double one_minus_t2(double t) { return std::max(0.0, 1.0 - t * t); }

}  // namespace

std::string to_string(KnownFunction fn) {
    switch (fn) {
        case KnownFunction::F1: return "f1";
        case KnownFunction::F2: return "f2";
        case KnownFunction::F3: return "f3";
    }
    return "?";
}

KnownFunction parse_known_function(const std::string& text) {
    if (text == "f1") {
        return KnownFunction::F1;
    }
    if (text == "f2") {
        return KnownFunction::F2;
    }
    if (text == "f3") {
        return KnownFunction::F3;
    }
    throw ConfigError("unknown function '" + text + "' (expected f1, f2 or f3)");
}

int max_order(KnownFunction fn) noexcept {
    switch (fn) {
        case KnownFunction::F1: return 2;
        case KnownFunction::F2: return 0;
        case KnownFunction::F3: return 2;
    }
    return 0;
}

SmoothnessClass default_class(KnownFunction fn) noexcept {
    switch (fn) {
        case KnownFunction::F1: return {2.0, 5.4};
        case KnownFunction::F2: return {2.0, 2.0};
        case KnownFunction::F3: return {2.0, 6.5};
    }
    return {};
}

long reference_degree(KnownFunction fn) noexcept { return fn == KnownFunction::F3 ? 256 : 4096; }

long reference_min_nodes(KnownFunction fn) noexcept { return fn == KnownFunction::F3 ? 256 : 4096; }

RealFunction derivative(KnownFunction fn, int r) {
    if (r < 0 || r > max_order(fn)) {
        throw ConfigError("derivative order " + std::to_string(r) + " not available for " + to_string(fn) +
                          " (max " + std::to_string(max_order(fn)) + ")");
    }
    constexpr double half_pi = kPi / 2.0;
    switch (fn) {
        case KnownFunction::F1:
            if (r == 0) {
                return [](double t) { return kC1 * std::pow(one_minus_t2(t), 2.5); };
            }
            if (r == 1) {
                return [](double t) { return -5.0 * kC1 * t * std::pow(one_minus_t2(t), 1.5); };
            }
            return [](double t) {
                const double u = one_minus_t2(t);
                return kC1 * (-5.0 * std::pow(u, 1.5) + 15.0 * t * t * std::sqrt(u));
            };
        case KnownFunction::F2:
            return [](double t) { return kC2 * std::abs(t); };
        case KnownFunction::F3:
            if (r == 0) {
                return [](double t) { return kC3 * t * std::sin(half_pi * t); };
            }
            if (r == 1) {
                return [](double t) { return kC3 * (std::sin(half_pi * t) + half_pi * t * std::cos(half_pi * t)); };
            }
            return [](double t) {
                return kC3 * (kPi * std::cos(half_pi * t) - half_pi * half_pi * t * std::sin(half_pi * t));
            };
    }
    throw ConfigError("unknown function");
}

}  // namespace chebrec
