#pragma once

#include <cstddef>
#include <iosfwd>
#include <numbers>
#include <span>
#include <string>
#include <vector>

namespace chebrec {

inline constexpr double kPi = std::numbers::pi;

/// Scale of the orthonormal first-kind basis: T_k(t) = basis_scale(k) * cos(k arccos t),
/// i.e. 1/sqrt(pi) for k = 0 and sqrt(2/pi) otherwise. Orthonormal under
/// the weight (1 - t^2)^(-1/2) on [-1, 1].
[[nodiscard]] double basis_scale(std::size_t k) noexcept;

/// Weight of T_0 in d/dt T_k = 2k * sum_{l<k, k+l odd} xi_l T_l.
/// The classical halved first term gives 1/sqrt(2) in the orthonormal basis.
inline constexpr double kDerivativeWeightT0 = std::numbers::sqrt2 / 2.0;

/// Finite expansion sum_k a_k T_k(t) in the orthonormal Chebyshev basis.
///
/// Every coefficient is finite; the constructor rejects NaN/Inf. An empty
/// coefficient vector is the zero function (degree -1).
class ChebSeries {
public:
    ChebSeries() = default;
    explicit ChebSeries(std::vector<double> coeffs);

    /// Series of the given length with all coefficients zero.
    [[nodiscard]] static ChebSeries zeros(std::size_t length);
    /// Unit coefficient on T_k.
    [[nodiscard]] static ChebSeries unit(std::size_t k);

    [[nodiscard]] std::size_t size() const noexcept { return coeffs_.size(); }
    [[nodiscard]] bool empty() const noexcept { return coeffs_.empty(); }
    /// Highest stored index M, or -1 for the empty series.
    [[nodiscard]] long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }

    /// Coefficient a_k; zero beyond the stored length.
    [[nodiscard]] double coeff(std::size_t k) const noexcept {
        return k < coeffs_.size() ? coeffs_[k] : 0.0;
    }
    [[nodiscard]] double operator[](std::size_t k) const noexcept { return coeff(k); }
    [[nodiscard]] std::span<const double> coeffs() const noexcept { return coeffs_; }

    /// Copy with trailing coefficients of magnitude below 1e-300 removed.
    [[nodiscard]] ChebSeries normalized() const;

    /// Copy truncated or zero-padded to exactly `length` coefficients.
    [[nodiscard]] ChebSeries resized(std::size_t length) const;

    friend bool operator==(const ChebSeries&, const ChebSeries&) = default;

private:
    std::vector<double> coeffs_;
};

[[nodiscard]] ChebSeries operator+(const ChebSeries& lhs, const ChebSeries& rhs);
[[nodiscard]] ChebSeries operator-(const ChebSeries& lhs, const ChebSeries& rhs);
[[nodiscard]] ChebSeries operator*(double alpha, const ChebSeries& series);

/// Sum a_k T_k(t) by Clenshaw's backward recurrence. Throws DomainError for |t| > 1.
[[nodiscard]] double eval(const ChebSeries& series, double t);

/// Pointwise eval over a grid; identical to calling eval per point.
[[nodiscard]] std::vector<double> eval_grid(const ChebSeries& series, std::span<const double> grid);

/// Exact coefficients of the r-th derivative (r >= 1). Each pass maps a
/// series of length L to one of length max(L - 1, 0).
[[nodiscard]] ChebSeries differentiate_series(const ChebSeries& series, int r);

/// Weighted L2 norm via Parseval: sqrt(sum a_k^2).
[[nodiscard]] double norm_l2w(const ChebSeries& series);

/// Chebyshev-Lobatto points cos(j*pi/(G-1)), j = 0..G-1, from 1 down to -1.
[[nodiscard]] std::vector<double> lobatto_grid(std::size_t grid_size);

inline constexpr std::size_t kDefaultSupGrid = 4096;

/// max |series(t)| over the Lobatto grid of grid_size points (endpoints included).
/// A lower bound on the C-norm that converges as the grid is refined.
[[nodiscard]] double norm_sup(const ChebSeries& series, std::size_t grid_size = kDefaultSupGrid);

// Text format: header `cheb-orthonormal v1 M=<int>` followed by M+1 lines,
// one coefficient each, in scientific notation with 17 significant digits.

void write_series(std::ostream& out, const ChebSeries& series);
/// Throws InputDataError on malformed input.
[[nodiscard]] ChebSeries read_series(std::istream& in);

[[nodiscard]] std::string to_text(const ChebSeries& series);
[[nodiscard]] ChebSeries from_text(const std::string& text);

void save_series(const std::string& path, const ChebSeries& series);
[[nodiscard]] ChebSeries load_series(const std::string& path);

}  // namespace chebrec
