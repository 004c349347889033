#include "chebrec/cheb_series.hpp"

#include "chebrec/errors.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <numbers>
#include <sstream>
#include <string_view>

namespace chebrec {

namespace {

const double kScale0 = 1.0 / std::sqrt(kPi);
const double kScaleK = std::sqrt(2.0 / kPi);

constexpr std::string_view kHeaderPrefix = "cheb-orthonormal v1 M=";

}  // namespace

double basis_scale(std::size_t k) noexcept { return k == 0 ? kScale0 : kScaleK; }

ChebSeries::ChebSeries(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (!std::isfinite(coeffs_[k])) {
            throw InputDataError("non-finite Chebyshev coefficient at index " + std::to_string(k));
        }
    }
}

ChebSeries ChebSeries::zeros(std::size_t length) { return ChebSeries(std::vector<double>(length, 0.0)); }

ChebSeries ChebSeries::unit(std::size_t k) {
    std::vector<double> c(k + 1, 0.0);
    c[k] = 1.0;
    return ChebSeries(std::move(c));
}

ChebSeries ChebSeries::normalized() const {
    std::size_t n = coeffs_.size();
    while (n > 0 && std::abs(coeffs_[n - 1]) < 1e-300) {
        --n;
    }
    return ChebSeries(std::vector<double>(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(n)));
}

ChebSeries ChebSeries::resized(std::size_t length) const {
    std::vector<double> c(length, 0.0);
    std::copy_n(coeffs_.begin(), std::min(length, coeffs_.size()), c.begin());
    return ChebSeries(std::move(c));
}

ChebSeries operator+(const ChebSeries& lhs, const ChebSeries& rhs) {
    std::vector<double> c(std::max(lhs.size(), rhs.size()));
    for (std::size_t k = 0; k < c.size(); ++k) {
        c[k] = lhs.coeff(k) + rhs.coeff(k);
    }
    return ChebSeries(std::move(c));
}

ChebSeries operator-(const ChebSeries& lhs, const ChebSeries& rhs) {
    std::vector<double> c(std::max(lhs.size(), rhs.size()));
    for (std::size_t k = 0; k < c.size(); ++k) {
        c[k] = lhs.coeff(k) - rhs.coeff(k);
    }
    return ChebSeries(std::move(c));
}

ChebSeries operator*(double alpha, const ChebSeries& series) {
    std::vector<double> c(series.coeffs().begin(), series.coeffs().end());
    for (double& v : c) {
        v *= alpha;
    }
    return ChebSeries(std::move(c));
}

double eval(const ChebSeries& series, double t) {
    if (!(std::abs(t) <= 1.0)) {
        throw DomainError("Chebyshev evaluation point outside [-1, 1]");
    }
    const auto a = series.coeffs();
    if (a.empty()) {
        return 0.0;
    }
    // Clenshaw on the classical coefficients c_k = scale(k) * a_k. The
    // recurrence runs in long double: derivative series have large coefficients
    // of one sign, and the extra bits keep the result within a few ulps.
    static const long double scale0 = 1.0L / std::sqrt(std::numbers::pi_v<long double>);
    static const long double scale_k = std::sqrt(2.0L / std::numbers::pi_v<long double>);
    long double b1 = 0.0L;
    long double b2 = 0.0L;
    const long double lt = t;
    const long double two_t = 2.0L * lt;
    for (std::size_t k = a.size() - 1; k >= 1; --k) {
        const long double b0 = scale_k * a[k] + two_t * b1 - b2;
        b2 = b1;
        b1 = b0;
    }
    return static_cast<double>(scale0 * a[0] + lt * b1 - b2);
}

std::vector<double> eval_grid(const ChebSeries& series, std::span<const double> grid) {
    std::vector<double> out(grid.size());
    std::transform(grid.begin(), grid.end(), out.begin(), [&](double t) { return eval(series, t); });
    return out;
}

namespace {

// One derivative pass in the orthonormal basis:
// out_l = 2 xi_l S_l, S_l = sum_{k>l, k-l odd} k a_k = (l+1) a_{l+1} + S_{l+2}.
std::vector<double> derivative_pass(std::span<const double> a) {
    if (a.size() <= 1) {
        return {};
    }
    std::vector<double> out(a.size() - 1);
    double suffix[2] = {0.0, 0.0};
    for (std::size_t l = out.size(); l-- > 0;) {
        double& s = suffix[l % 2];
        s += static_cast<double>(l + 1) * a[l + 1];
        out[l] = 2.0 * s;
    }
    out[0] *= kDerivativeWeightT0;
    return out;
}

}  // namespace

ChebSeries differentiate_series(const ChebSeries& series, int r) {
    if (r < 1) {
        throw ConfigError("derivative order must be positive");
    }
    std::vector<double> c(series.coeffs().begin(), series.coeffs().end());
    for (int pass = 0; pass < r && !c.empty(); ++pass) {
        c = derivative_pass(c);
    }
    return ChebSeries(std::move(c));
}

double norm_l2w(const ChebSeries& series) {
    double sum = 0.0;
    for (double v : series.coeffs()) {
        sum += v * v;
    }
    return std::sqrt(sum);
}

std::vector<double> lobatto_grid(std::size_t grid_size) {
    if (grid_size < 2) {
        throw ConfigError("Lobatto grid needs at least 2 points");
    }
    std::vector<double> grid(grid_size);
    const double step = kPi / static_cast<double>(grid_size - 1);
    for (std::size_t j = 0; j < grid_size; ++j) {
        grid[j] = std::cos(static_cast<double>(j) * step);
    }
    grid.front() = 1.0;
    grid.back() = -1.0;
    return grid;
}

double norm_sup(const ChebSeries& series, std::size_t grid_size) {
    double best = 0.0;
    for (double t : lobatto_grid(grid_size)) {
        best = std::max(best, std::abs(eval(series, t)));
    }
    return best;
}

void write_series(std::ostream& out, const ChebSeries& series) {
    out << kHeaderPrefix << series.degree() << '\n';
    const auto flags = out.flags();
    const auto precision = out.precision();
    out << std::scientific << std::setprecision(16);
    for (double v : series.coeffs()) {
        out << v << '\n';
    }
    out.flags(flags);
    out.precision(precision);
}

ChebSeries read_series(std::istream& in) {
    std::string header;
    if (!std::getline(in, header)) {
        throw InputDataError("empty coefficient file");
    }
    if (!header.empty() && header.back() == '\r') {
        header.pop_back();
    }
    if (!header.starts_with(kHeaderPrefix)) {
        throw InputDataError("bad coefficient header: expected '" + std::string(kHeaderPrefix) + "<int>'");
    }
    long degree = 0;
    try {
        std::size_t used = 0;
        const std::string tail = header.substr(kHeaderPrefix.size());
        degree = std::stol(tail, &used);
        if (used != tail.size()) {
            throw InputDataError("trailing characters in coefficient header");
        }
    } catch (const std::logic_error&) {
        throw InputDataError("bad degree in coefficient header");
    }
    if (degree < -1) {
        throw InputDataError("negative degree in coefficient header");
    }
    std::vector<double> c;
    c.reserve(static_cast<std::size_t>(degree + 1));
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line == "\r") {
            continue;
        }
        std::istringstream ls(line);
        double v = 0.0;
        std::string rest;
        if (!(ls >> v) || (ls >> rest)) {
            throw InputDataError("bad coefficient line: '" + line + "'");
        }
        c.push_back(v);
    }
    if (static_cast<long>(c.size()) != degree + 1) {
        throw InputDataError("coefficient count " + std::to_string(c.size()) + " does not match header M=" +
                             std::to_string(degree));
    }
    return ChebSeries(std::move(c));
}

std::string to_text(const ChebSeries& series) {
    std::ostringstream out;
    write_series(out, series);
    return out.str();
}

ChebSeries from_text(const std::string& text) {
    std::istringstream in(text);
    return read_series(in);
}

void save_series(const std::string& path, const ChebSeries& series) {
    std::ofstream out(path);
    if (!out) {
        throw InputDataError("cannot open '" + path + "' for writing");
    }
    write_series(out, series);
}

ChebSeries load_series(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw InputDataError("cannot open '" + path + "'");
    }
    return read_series(in);
}

}  // namespace chebrec
