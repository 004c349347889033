#include "chebrec/cheb_series.hpp"
#include "chebrec/errors.hpp"
#include "chebrec/ingest.hpp"
#include "chebrec/known_functions.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

using namespace chebrec;

namespace {

const double kSqrtPi = std::sqrt(std::numbers::pi);
const double kSqrt2OverPi = std::sqrt(2.0 / std::numbers::pi);

}  // namespace

TEST_CASE("eval: constant, linear and endpoint values") {
    CHECK(eval(ChebSeries({kSqrtPi}), 0.37) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(eval(ChebSeries({0.0, std::sqrt(std::numbers::pi / 2.0)}), 0.5) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(eval(ChebSeries::unit(3), 1.0) == doctest::Approx(0.7978845608).epsilon(1e-10));
    CHECK(eval(ChebSeries::unit(3), 1.0) == doctest::Approx(kSqrt2OverPi).epsilon(1e-15));
}

TEST_CASE("eval: outside [-1, 1] is a domain error") {
    CHECK_THROWS_AS((void)eval(ChebSeries::unit(1), 1.0000001), DomainError);
    CHECK_THROWS_AS((void)eval(ChebSeries::unit(1), -2.0), DomainError);
    CHECK_THROWS_AS((void)eval(ChebSeries::unit(1), std::nan("")), DomainError);
}

TEST_CASE("eval: matches cos(k arccos t) for k <= 40") {
    for (int k = 0; k <= 40; ++k) {
        for (double t : {-1.0, -0.73, -0.2, 0.0, 0.41, 0.999, 1.0}) {
            CHECK(eval(ChebSeries::unit(static_cast<std::size_t>(k)), t) ==
                  doctest::Approx(oracle::orthonormal_t(k, t)).epsilon(1e-12).scale(1.0));
        }
    }
}

TEST_CASE("eval_grid") {
    const std::vector<double> grid{-1.0, 0.0, 1.0};
    for (double v : eval_grid(ChebSeries::zeros(5), grid)) {
        CHECK(v == 0.0);
    }
    for (double v : eval_grid(ChebSeries({kSqrtPi}), grid)) {
        CHECK(v == doctest::Approx(1.0).epsilon(1e-15));
    }
    const std::vector<double> zero{0.0};
    CHECK(eval_grid(ChebSeries::unit(2), zero)[0] == doctest::Approx(-kSqrt2OverPi).epsilon(1e-15));

    std::mt19937_64 rng(7);
    const ChebSeries s(oracle::random_coeffs(rng, 17));
    const auto pts = lobatto_grid(33);
    const auto vals = eval_grid(s, pts);
    for (std::size_t i = 0; i < pts.size(); ++i) {
        CHECK(vals[i] == eval(s, pts[i]));
    }
}

TEST_CASE("basis is orthonormal under the discrete Gauss-Chebyshev product") {
    const int q = 4 * 64 + 16;
    for (int j = 0; j <= 64; ++j) {
        for (int k = j; k <= 64; ++k) {
            const double ip = oracle::gauss_chebyshev(
                [&](double t) {
                    return eval(ChebSeries::unit(static_cast<std::size_t>(j)), t) *
                           eval(ChebSeries::unit(static_cast<std::size_t>(k)), t);
                },
                q);
            CHECK(ip == doctest::Approx(j == k ? 1.0 : 0.0).scale(1.0).epsilon(1e-12));
        }
    }
}

TEST_CASE("differentiate_series: T_1 and T_3") {
    const ChebSeries d1 = differentiate_series(ChebSeries::unit(1), 1);
    REQUIRE(d1.size() == 1);
    CHECK(d1[0] == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));

    const ChebSeries d3 = differentiate_series(ChebSeries::unit(3), 1);
    REQUIRE(d3.size() == 3);
    CHECK(d3[0] == doctest::Approx(3.0 * std::sqrt(2.0)).epsilon(1e-15));
    CHECK(d3[1] == 0.0);
    CHECK(d3[2] == doctest::Approx(6.0).epsilon(1e-15));
}

TEST_CASE("differentiate_series: symbolic oracle for k <= 20, r <= 3") {
    for (int k = 0; k <= 20; ++k) {
        for (int r = 1; r <= 3; ++r) {
            const ChebSeries d = differentiate_series(ChebSeries::unit(static_cast<std::size_t>(k)), r);
            for (int i = 0; i < 100; ++i) {
                const double t = -1.0 + 2.0 * i / 99.0;
                CHECK(std::abs(eval(d, t) - oracle::orthonormal_derivative(k, r, t)) <= 1e-9);
            }
        }
    }
}

TEST_CASE("differentiate_series: central differences") {
    std::mt19937_64 rng(11);
    const ChebSeries s(oracle::random_coeffs(rng, 12));
    const ChebSeries d = differentiate_series(s, 1);
    const double h = 1e-6;
    for (int i = 0; i < 200; ++i) {
        const double t = -0.999 + 1.998 * (i + 0.5) / 200.0;
        const double fd = (eval(s, t + h) - eval(s, t - h)) / (2.0 * h);
        CHECK(std::abs(eval(d, t) - fd) <= 1e-5);
    }
}

TEST_CASE("differentiate_series: length, linearity and composition") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t len = 1 + rng() % 33;
        const ChebSeries f(oracle::random_coeffs(rng, len));
        const ChebSeries g(oracle::random_coeffs(rng, len));
        const double alpha = std::uniform_real_distribution<double>(-3, 3)(rng);
        const double beta = std::uniform_real_distribution<double>(-3, 3)(rng);
        for (int r = 1; r <= 3; ++r) {
            const ChebSeries d = differentiate_series(f, r);
            CHECK(d.size() == (len > static_cast<std::size_t>(r) ? len - r : 0));
            const ChebSeries lhs = differentiate_series(alpha * f + beta * g, r);
            const ChebSeries rhs = alpha * d + beta * differentiate_series(g, r);
            const double scale = std::max(1.0, norm_l2w(lhs));
            CHECK(norm_l2w(lhs - rhs) <= 1e-12 * scale);
        }
        const ChebSeries twice = differentiate_series(differentiate_series(f, 1), 1);
        const ChebSeries once = differentiate_series(f, 2);
        REQUIRE(twice.size() == once.size());
        for (std::size_t k = 0; k < once.size(); ++k) {
            CHECK(once[k] == doctest::Approx(twice[k]).scale(std::max(1.0, std::abs(once[k]))).epsilon(1e-12));
        }
    }
    CHECK_THROWS_AS((void)differentiate_series(ChebSeries::unit(2), 0), ConfigError);
    CHECK(differentiate_series(ChebSeries(), 1).empty());
}

TEST_CASE("norm_l2w: examples and Parseval against quadrature") {
    CHECK(norm_l2w(ChebSeries::zeros(4)) == 0.0);
    CHECK(norm_l2w(ChebSeries({3.0, 0.0, 0.0, 0.0, 4.0})) == doctest::Approx(5.0).epsilon(1e-15));

    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t m = rng() % 65;
        const ChebSeries s(oracle::random_coeffs(rng, m + 1));
        const double quad = oracle::gauss_chebyshev(
            [&](double t) {
                const double v = eval(s, t);
                return v * v;
            },
            static_cast<int>(4 * m + 16));
        const double n = norm_l2w(s);
        CHECK(n * n == doctest::Approx(quad).epsilon(1e-10));
    }
}

TEST_CASE("norm_l2w of f1 coefficients matches dense quadrature") {
    const auto f1 = derivative(KnownFunction::F1, 0);
    const ChebSeries c = exact_coeffs(f1, reference_degree(KnownFunction::F1), reference_min_nodes(KnownFunction::F1));
    // f1^2 is a degree-10 polynomial, so a large Gauss-Chebyshev rule is exact.
    const double quad = oracle::gauss_chebyshev(
        [&](double t) {
            const double v = f1(t);
            return v * v;
        },
        20000);
    CHECK(norm_l2w(c) == doctest::Approx(std::sqrt(quad)).epsilon(1e-8));
}

TEST_CASE("norm_sup") {
    CHECK(norm_sup(ChebSeries::unit(3), 64) == doctest::Approx(kSqrt2OverPi).epsilon(1e-15));
    CHECK(norm_sup(ChebSeries::zeros(3)) == 0.0);
    CHECK(norm_sup(ChebSeries({kSqrtPi, std::sqrt(std::numbers::pi / 2.0)}), 1001) ==
          doctest::Approx(2.0).epsilon(1e-9));
    CHECK_THROWS_AS((void)norm_sup(ChebSeries::unit(1), 1), ConfigError);

    const auto g = lobatto_grid(4096);
    CHECK(g.front() == 1.0);
    CHECK(g.back() == -1.0);
    CHECK(g.size() == 4096);
}

TEST_CASE("ChebSeries invariants") {
    CHECK_THROWS_AS(ChebSeries({1.0, std::nan("")}), InputDataError);
    CHECK_THROWS_AS(ChebSeries({HUGE_VAL}), InputDataError);
    CHECK(ChebSeries().degree() == -1);
    CHECK(ChebSeries::unit(4).degree() == 4);
    CHECK(ChebSeries::unit(2).coeff(10) == 0.0);
    const ChebSeries padded({1.0, 2.0, 0.0, 0.0});
    CHECK(padded.size() == 4);
    CHECK(padded.normalized().size() == 2);
    CHECK(padded.resized(1).size() == 1);
    CHECK(padded.resized(6).coeff(5) == 0.0);
}

TEST_CASE("serialization round-trips bit-exactly") {
    std::mt19937_64 rng(17);
    const ChebSeries s(oracle::random_coeffs(rng, 23));
    const std::string text = to_text(s);
    CHECK(text.rfind("cheb-orthonormal v1 M=22\n", 0) == 0);
    CHECK(from_text(text) == s);
    CHECK(from_text(to_text(ChebSeries())) == ChebSeries());

    CHECK_THROWS_AS((void)from_text("cheb v2 M=1\n1\n2\n"), InputDataError);
    CHECK_THROWS_AS((void)from_text("cheb-orthonormal v1 M=2\n1\n2\n"), InputDataError);
    CHECK_THROWS_AS((void)from_text("cheb-orthonormal v1 M=1\n1\nabc\n"), InputDataError);
    CHECK_THROWS_AS((void)from_text("cheb-orthonormal v1 M=0\nnan\n"), InputDataError);
    CHECK_THROWS_AS((void)from_text(""), InputDataError);
}
