#pragma once

#include "chebrec/ingest.hpp"
#include "chebrec/spaces.hpp"

#include <string>

namespace chebrec {

/// Test functions of the three reference experiments:
///   F1(t) = (1 - t^2)^(5/2) / 497   finite smoothness, mu = 5.4, s = 2
///   F2(t) = |t| / 7                  mu = 2, s = 2 (summation only)
///   F3(t) = t sin(pi t / 2) / 1580   analytic, mu = 6.5, s = 2
enum class KnownFunction { F1, F2, F3 };

[[nodiscard]] std::string to_string(KnownFunction fn);
/// Accepts "f1", "f2", "f3". Throws ConfigError.
[[nodiscard]] KnownFunction parse_known_function(const std::string& text);

/// Largest derivative order with a bounded symbolic derivative.
[[nodiscard]] int max_order(KnownFunction fn) noexcept;
[[nodiscard]] SmoothnessClass default_class(KnownFunction fn) noexcept;
/// Expansion length for reference coefficients: 4096 for F1/F2, 256 for F3.
[[nodiscard]] long reference_degree(KnownFunction fn) noexcept;
/// Minimum Gauss-Chebyshev nodes for F1/F2 (non-smooth) vs F3.
[[nodiscard]] long reference_min_nodes(KnownFunction fn) noexcept;

/// Symbolic r-th derivative. Throws ConfigError when r > max_order(fn).
[[nodiscard]] RealFunction derivative(KnownFunction fn, int r);

}  // namespace chebrec
