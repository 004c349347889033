#include "chebrec/ingest.hpp"

#include "chebrec/errors.hpp"
#include "chebrec/random.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace chebrec {

namespace {

/// Neumaier-compensated running sum.
class CompensatedSum {
public:
    void add(double x) {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x)) {
            carry_ += (sum_ - t) + x;
        } else {
            carry_ += (x - t) + sum_;
        }
        sum_ = t;
    }
    [[nodiscard]] double value() const { return sum_ + carry_; }

private:
    double sum_ = 0.0;
    double carry_ = 0.0;
};

/// cos(m pi / period_half) for m = 0 .. 2*period_half - 1.
std::vector<double> cosine_table(long period_half) {
    std::vector<double> table(static_cast<std::size_t>(2 * period_half));
    for (long m = 0; m < 2 * period_half; ++m) {
        table[static_cast<std::size_t>(m)] = std::cos(kPi * static_cast<double>(m) / static_cast<double>(period_half));
    }
    return table;
}

}  // namespace

std::string to_string(NoiseKind kind) {
    switch (kind) {
        case NoiseKind::PaperRandom: return "paper-random";
        case NoiseKind::LpProjected: return "lp-projected";
        case NoiseKind::None: return "none";
    }
    return "?";
}

NoiseKind parse_noise_kind(const std::string& text) {
    if (text == "paper-random") {
        return NoiseKind::PaperRandom;
    }
    if (text == "lp-projected") {
        return NoiseKind::LpProjected;
    }
    if (text == "none") {
        return NoiseKind::None;
    }
    throw ConfigError("unknown noise kind '" + text + "'");
}

void NoiseSpec::validate() const {
    if (kind != NoiseKind::None && !(delta > 0.0 && delta < 1.0)) {
        throw ConfigError("noise level delta must lie in (0, 1)");
    }
}

SampledFunction::SampledFunction(std::vector<double> values, long n) : values_(std::move(values)), n_(n) {
    if (n_ < 1) {
        throw InputDataError("sampled function needs n >= 1");
    }
    if (static_cast<long>(values_.size()) != n_ + 1) {
        throw InputDataError("sampled function needs n + 1 values");
    }
    for (double v : values_) {
        if (!std::isfinite(v)) {
            throw InputDataError("non-finite sample value");
        }
    }
}

SampledFunction SampledFunction::sample(const RealFunction& f, long n) {
    if (n < 1) {
        throw InputDataError("sampled function needs n >= 1");
    }
    const auto nodes = clenshaw_curtis_nodes(n);
    std::vector<double> values(nodes.size());
    std::transform(nodes.begin(), nodes.end(), values.begin(), f);
    return SampledFunction(std::move(values), n);
}

std::vector<double> clenshaw_curtis_nodes(long n) {
    std::vector<double> nodes(static_cast<std::size_t>(n + 1));
    for (long j = 0; j <= n; ++j) {
        nodes[static_cast<std::size_t>(j)] = std::cos(kPi * static_cast<double>(j) / static_cast<double>(n));
    }
    nodes.front() = 1.0;
    nodes.back() = -1.0;
    return nodes;
}

long default_quadrature_nodes(long m, long min_nodes) { return std::max(4 * m + 16, min_nodes); }

ChebSeries exact_coeffs_with_nodes(const RealFunction& f, long m, long nodes) {
    if (m < 0) {
        throw ConfigError("coefficient count must be non-negative");
    }
    if (nodes < 1) {
        throw ConfigError("quadrature needs at least one node");
    }
    // theta_j = (2j+1) pi / (2Q); cos(k theta_j) = table[k(2j+1) mod 4Q].
    const long q = nodes;
    const auto table = cosine_table(2 * q);
    const long period = 4 * q;
    std::vector<double> values(static_cast<std::size_t>(q));
    for (long j = 0; j < q; ++j) {
        const double v = f(table[static_cast<std::size_t>((2 * j + 1) % period)]);
        if (!std::isfinite(v)) {
            throw InputDataError("function returned a non-finite value during quadrature");
        }
        values[static_cast<std::size_t>(j)] = v;
    }
    std::vector<double> c(static_cast<std::size_t>(m + 1));
    const double weight = kPi / static_cast<double>(q);
    for (long k = 0; k <= m; ++k) {
        CompensatedSum sum;
        const long step = (2 * k) % period;
        long idx = k % period;
        for (long j = 0; j < q; ++j) {
            sum.add(values[static_cast<std::size_t>(j)] * table[static_cast<std::size_t>(idx)]);
            idx += step;
            if (idx >= period) {
                idx -= period;
            }
        }
        c[static_cast<std::size_t>(k)] = basis_scale(static_cast<std::size_t>(k)) * weight * sum.value();
    }
    return ChebSeries(std::move(c));
}

ChebSeries exact_coeffs(const RealFunction& f, long m, long min_nodes) {
    return exact_coeffs_with_nodes(f, m, default_quadrature_nodes(m, min_nodes));
}

ChebSeries add_noise(const ChebSeries& clean, const NoiseSpec& spec) {
    spec.validate();
    if (spec.kind == NoiseKind::None || clean.empty()) {
        return clean;
    }
    const auto f = clean.coeffs();
    NormalSource source(spec.seed);
    std::vector<double> g(f.size());
    for (double& v : g) {
        v = source.normal();
    }
    std::vector<double> out(f.begin(), f.end());
    if (spec.kind == NoiseKind::PaperRandom) {
        const double norm = norm_l2w(clean);
        if (norm == 0.0) {
            return clean;
        }
        for (std::size_t k = 0; k < out.size(); ++k) {
            out[k] += std::abs(f[k]) / (2.0 * norm) * g[k] * spec.delta;
        }
    } else {
        const double scale = spec.delta / lp_norm(g, spec.p);
        for (std::size_t k = 0; k < out.size(); ++k) {
            out[k] += g[k] * scale;
        }
    }
    return ChebSeries(std::move(out));
}

ChebSeries clenshaw_curtis_coeffs(const SampledFunction& samples, long m) {
    const long n = samples.n();
    if (m < 0) {
        throw ConfigError("coefficient count must be non-negative");
    }
    if (m > n) {
        throw AliasingError("Clenshaw-Curtis with n=" + std::to_string(n) + " cannot resolve M=" + std::to_string(m) +
                            " coefficients (need M <= n)");
    }
    // T_k(t_j) ~ cos(k j pi / n) = table[k j mod 2n].
    const auto table = cosine_table(n);
    const long period = 2 * n;
    const auto& f = samples.values();
    std::vector<double> c(static_cast<std::size_t>(m + 1));
    for (long k = 0; k <= m; ++k) {
        CompensatedSum sum;
        long idx = 0;
        for (long j = 0; j <= n; ++j) {
            const double term = f[static_cast<std::size_t>(j)] * table[static_cast<std::size_t>(idx)];
            sum.add(j == 0 || j == n ? 0.5 * term : term);
            idx += k;
            idx %= period;
        }
        c[static_cast<std::size_t>(k)] =
            basis_scale(static_cast<std::size_t>(k)) * kPi / static_cast<double>(n) * sum.value();
    }
    return ChebSeries(std::move(c));
}

long choose_quadrature_n(const RealFunction& f, double target_delta, long m) {
    if (!(target_delta > 0.0)) {
        throw ConfigError("target delta must be positive");
    }
    if (m < 0) {
        throw ConfigError("coefficient count must be non-negative");
    }
    const ChebSeries reference = exact_coeffs_with_nodes(f, m, 8 * m + 64);
    const auto error_at = [&](long n) {
        return norm_l2w(clenshaw_curtis_coeffs(SampledFunction::sample(f, n), m) - reference);
    };
    long good = std::max(m, 1L);
    long bad = 0;
    while (error_at(good) > target_delta) {
        bad = good;
        good *= 2;
        if (good > kMaxQuadratureNodes) {
            throw InputDataError("Clenshaw-Curtis node search exceeded n = 2^20 for target delta " +
                                 std::to_string(target_delta));
        }
    }
    if (bad == 0) {
        return good;
    }
    while (good - bad > 1) {
        const long mid = bad + (good - bad) / 2;
        if (error_at(mid) <= target_delta) {
            good = mid;
        } else {
            bad = mid;
        }
    }
    return good;
}

void write_samples(std::ostream& out, const SampledFunction& samples) {
    const auto nodes = clenshaw_curtis_nodes(samples.n());
    const auto flags = out.flags();
    const auto precision = out.precision();
    out << "# t f(t), n=" << samples.n() << '\n' << std::scientific << std::setprecision(16);
    for (std::size_t j = 0; j < nodes.size(); ++j) {
        out << nodes[j] << ' ' << samples.values()[j] << '\n';
    }
    out.flags(flags);
    out.precision(precision);
}

SampledFunction read_samples(std::istream& in) {
    std::vector<double> ts;
    std::vector<double> fs;
    std::string line;
    long line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) {
            line.erase(hash);
        }
        std::istringstream ls(line);
        double t = 0.0;
        double v = 0.0;
        if (!(ls >> t)) {
            continue;  // blank or comment-only
        }
        std::string rest;
        if (!(ls >> v) || (ls >> rest)) {
            throw InputDataError("sample line " + std::to_string(line_no) + ": expected two columns");
        }
        ts.push_back(t);
        fs.push_back(v);
    }
    if (ts.size() < 2) {
        throw InputDataError("sample file needs at least two nodes");
    }
    const long n = static_cast<long>(ts.size()) - 1;
    const auto nodes = clenshaw_curtis_nodes(n);
    for (std::size_t j = 0; j < ts.size(); ++j) {
        if (std::abs(ts[j] - nodes[j]) > 1e-12) {
            std::ostringstream msg;
            msg << std::setprecision(17) << "sample node " << j << " is " << ts[j] << ", expected cos(" << j
                << " pi / " << n << ") = " << nodes[j];
            throw InputDataError(msg.str());
        }
    }
    return SampledFunction(std::move(fs), n);
}

SampledFunction load_samples(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw InputDataError("cannot open '" + path + "'");
    }
    return read_samples(in);
}

void save_samples(const std::string& path, const SampledFunction& samples) {
    std::ofstream out(path);
    if (!out) {
        throw InputDataError("cannot open '" + path + "' for writing");
    }
    write_samples(out, samples);
}

}  // namespace chebrec
