#pragma once

#include "chebrec/cheb_series.hpp"
#include "chebrec/norm_index.hpp"

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace chebrec {

using RealFunction = std::function<double(double)>;

enum class NoiseKind {
    PaperRandom,  ///< xi_k = |F_k| / (2 ||F||_2) * g_k * delta, g_k standard normal
    LpProjected,  ///< random Gaussian direction rescaled to ||xi||_p = delta
    None,
};

[[nodiscard]] std::string to_string(NoiseKind kind);
/// Accepts "paper-random", "lp-projected", "none". Throws ConfigError.
[[nodiscard]] NoiseKind parse_noise_kind(const std::string& text);

struct NoiseSpec {
    NoiseKind kind = NoiseKind::None;
    double delta = 0.0;
    NormIndex p{2.0};
    std::uint64_t seed = 0;

    /// delta must lie in (0, 1) unless kind is None.
    void validate() const;
};

/// Values f(t_j) at t_j = cos(j pi / n), j = 0..n (t_0 = 1 down to t_n = -1).
class SampledFunction {
public:
    /// Throws InputDataError for n < 1, a length other than n + 1, or non-finite values.
    SampledFunction(std::vector<double> values, long n);

    [[nodiscard]] static SampledFunction sample(const RealFunction& f, long n);

    [[nodiscard]] long n() const noexcept { return n_; }
    [[nodiscard]] const std::vector<double>& values() const noexcept { return values_; }

private:
    std::vector<double> values_;
    long n_;
};

/// cos(j pi / n), j = 0..n, with exact endpoints.
[[nodiscard]] std::vector<double> clenshaw_curtis_nodes(long n);

/// Gauss-Chebyshev node count used by exact_coeffs: max(4M + 16, min_nodes).
[[nodiscard]] long default_quadrature_nodes(long m, long min_nodes = 256);

/// Coefficients 0..M of f by Gauss-Chebyshev quadrature on `nodes` points.
/// After t = cos(theta) the weight is integrated exactly. Compensated sums
/// in ascending node order. Throws InputDataError if f returns a non-finite value.
[[nodiscard]] ChebSeries exact_coeffs_with_nodes(const RealFunction& f, long m, long nodes);

/// exact_coeffs_with_nodes with default_quadrature_nodes(m, min_nodes).
[[nodiscard]] ChebSeries exact_coeffs(const RealFunction& f, long m, long min_nodes = 256);

/// Perturbed copy of `clean`. Deterministic for a fixed spec.seed.
[[nodiscard]] ChebSeries add_noise(const ChebSeries& clean, const NoiseSpec& spec);

/// Coefficients 0..M by the trapezoidal rule in theta at the n+1 Lobatto
/// nodes (endpoint terms halved). Throws AliasingError when M > n.
[[nodiscard]] ChebSeries clenshaw_curtis_coeffs(const SampledFunction& samples, long m);

inline constexpr long kMaxQuadratureNodes = 1L << 20;

/// Smallest n >= max(M, 1) (doubling, then bisection) with
/// ||clenshaw_curtis_coeffs(sample(f, n), M) - exact||_2 <= target_delta, where
/// the exact coefficients use 8M + 64 Gauss-Chebyshev nodes.
/// Throws InputDataError when n would exceed kMaxQuadratureNodes.
[[nodiscard]] long choose_quadrature_n(const RealFunction& f, double target_delta, long m);

// `.samples` files: two whitespace-separated columns (t_j, f(t_j)), j = 0..n,
// '#' starts a comment. Nodes must match cos(j pi / n) within 1e-12.

void write_samples(std::ostream& out, const SampledFunction& samples);
[[nodiscard]] SampledFunction read_samples(std::istream& in);
[[nodiscard]] SampledFunction load_samples(const std::string& path);
void save_samples(const std::string& path, const SampledFunction& samples);

}  // namespace chebrec
