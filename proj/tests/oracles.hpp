#pragma once

// Independent reference computations used by the tests. Nothing here calls
// into the library's numerics.

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <random>
#include <vector>

namespace oracle {

using big = boost::multiprecision::cpp_bin_float_50;

inline const big& big_pi() {
    static const big v = boost::multiprecision::acos(big(-1));
    return v;
}

/// Monomial coefficients of the classical T_k, from T_{k+1} = 2t T_k - T_{k-1}.
inline std::vector<big> classical_monomials(int k) {
    std::vector<big> prev{big(1)};
    if (k == 0) {
        return prev;
    }
    std::vector<big> cur{big(0), big(1)};
    for (int j = 1; j < k; ++j) {
        std::vector<big> next(cur.size() + 1, big(0));
        for (std::size_t i = 0; i < cur.size(); ++i) {
            next[i + 1] += 2 * cur[i];
        }
        for (std::size_t i = 0; i < prev.size(); ++i) {
            next[i] -= prev[i];
        }
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

inline std::vector<big> differentiate_monomials(std::vector<big> c, int r) {
    for (int pass = 0; pass < r; ++pass) {
        if (c.size() <= 1) {
            return {big(0)};
        }
        std::vector<big> d(c.size() - 1);
        for (std::size_t i = 1; i < c.size(); ++i) {
            d[i - 1] = c[i] * static_cast<int>(i);
        }
        c = std::move(d);
    }
    return c;
}

inline big horner(const std::vector<big>& c, const big& t) {
    big acc = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        acc = acc * t + *it;
    }
    return acc;
}

/// r-th derivative of the orthonormal T_k at t, in 50-digit arithmetic.
inline double orthonormal_derivative(int k, int r, double t) {
    const big scale = k == 0 ? 1 / boost::multiprecision::sqrt(big_pi())
                             : boost::multiprecision::sqrt(2 / big_pi());
    return static_cast<double>(scale * horner(differentiate_monomials(classical_monomials(k), r), big(t)));
}

/// Orthonormal T_k(t) from cos(k arccos t).
inline double orthonormal_t(int k, double t) {
    const double s = k == 0 ? 1.0 / std::sqrt(std::numbers::pi) : std::sqrt(2.0 / std::numbers::pi);
    return s * std::cos(k * std::acos(std::clamp(t, -1.0, 1.0)));
}

/// Gauss-Chebyshev rule for the integral of omega(t) g(t) over [-1, 1].
inline double gauss_chebyshev(const std::function<double(double)>& g, int nodes) {
    long double acc = 0.0L;
    for (int j = 0; j < nodes; ++j) {
        acc += g(std::cos((j + 0.5) * std::numbers::pi / nodes));
    }
    return static_cast<double>(acc * std::numbers::pi / nodes);
}

inline std::vector<double> random_coeffs(std::mt19937_64& rng, std::size_t len) {
    std::normal_distribution<double> g(0.0, 1.0);
    std::vector<double> c(len);
    for (auto& v : c) {
        v = g(rng);
    }
    return c;
}

}  // namespace oracle
