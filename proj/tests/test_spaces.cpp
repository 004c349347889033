#include "chebrec/errors.hpp"
#include "chebrec/ingest.hpp"
#include "chebrec/known_functions.hpp"
#include "chebrec/spaces.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace chebrec;

namespace {

double direct_smooth_norm(const ChebSeries& s, double sv, double mu) {
    double acc = 0.0;
    for (std::size_t k = 0; k < s.size(); ++k) {
        acc += std::pow(std::pow(std::max<double>(1.0, static_cast<double>(k)), mu) * std::abs(s[k]), sv);
    }
    return std::pow(acc, 1.0 / sv);
}

}  // namespace

TEST_CASE("SmoothnessClass validation") {
    CHECK_NOTHROW((SmoothnessClass{1.0, 0.1}.validate()));
    CHECK_THROWS_AS((SmoothnessClass{0.5, 2.0}.validate()), ConfigError);
    CHECK_THROWS_AS((SmoothnessClass{HUGE_VAL, 2.0}.validate()), ConfigError);
    CHECK_THROWS_AS((SmoothnessClass{2.0, 0.0}.validate()), ConfigError);
    CHECK_THROWS_AS((SmoothnessClass{2.0, -1.0}.validate()), ConfigError);
}

TEST_CASE("norm_smooth examples") {
    for (double s : {1.0, 2.0, 3.5}) {
        for (double mu : {0.5, 2.0, 7.0}) {
            CHECK(norm_smooth(ChebSeries({1.0}), {s, mu}) == doctest::Approx(1.0).epsilon(1e-15));
        }
    }
    CHECK(norm_smooth(ChebSeries::unit(2), {2.0, 3.0}) == doctest::Approx(8.0).epsilon(1e-15));
    // k = 0 and k = 1 share the weight 1.
    CHECK(norm_smooth(ChebSeries({3.0, 4.0}), {2.0, 9.0}) == doctest::Approx(5.0).epsilon(1e-15));
}

TEST_CASE("norm_smooth of the Example 1 function is close to 1") {
    // Truncated at 256: beyond that the computed coefficients are quadrature
    // roundoff, which the weight k^(s mu) amplifies.
    const ChebSeries c = exact_coeffs(derivative(KnownFunction::F1, 0), 256, 4096);
    const double n = norm_smooth(c, {2.0, 5.4});
    CHECK(n >= 0.5);
    CHECK(n <= 1.5);
}

TEST_CASE("norm_smooth properties") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 100; ++trial) {
        const ChebSeries s(oracle::random_coeffs(rng, 1 + rng() % 20));
        const double sv = std::uniform_real_distribution<double>(1.0, 4.0)(rng);
        const double mu = std::uniform_real_distribution<double>(0.1, 4.0)(rng);
        const double alpha = std::uniform_real_distribution<double>(-5.0, 5.0)(rng);
        const double base = norm_smooth(s, {sv, mu});
        CHECK(base == doctest::Approx(direct_smooth_norm(s, sv, mu)).epsilon(1e-12));
        CHECK(norm_smooth(alpha * s, {sv, mu}) == doctest::Approx(std::abs(alpha) * base).epsilon(1e-12));
        CHECK(norm_smooth(s, {sv, mu + 0.3}) >= base);
        CHECK(norm_l2w(s) <= norm_smooth(s, {2.0, mu}) * (1.0 + 1e-15));
    }
}

TEST_CASE("make_extremal_f1 at an exact lattice point") {
    const double delta = std::pow(3.0, -3.0) * std::pow(8.0, -3.0);
    const ExtremalF1 e = make_extremal_f1({2.0, 3.0}, 1, delta, NormIndex(2.0));
    CHECK(e.n1 == 8);
    const double value = std::pow(3.0, -3.0) * std::pow(8.0, -3.5);
    REQUIRE(e.series.size() >= 17);
    for (std::size_t k = 0; k < e.series.size(); ++k) {
        if (k >= 9 && k <= 16) {
            CHECK(e.series[k] == doctest::Approx(value).epsilon(1e-15));
        } else {
            CHECK(e.series[k] == 0.0);
        }
    }
    CHECK(norm_l2w(e.series) == doctest::Approx(delta).epsilon(1e-13));
    CHECK(e.realized_lp_norm == doctest::Approx(delta).epsilon(1e-13));
}

TEST_CASE("make_extremal_f1 with r = 0 starts at N1") {
    const ExtremalF1 e = make_extremal_f1({2.0, 2.0}, 0, 1e-4, NormIndex(2.0));
    long first = -1;
    long last = -1;
    for (std::size_t k = 0; k < e.series.size(); ++k) {
        if (e.series[k] != 0.0) {
            if (first < 0) {
                first = static_cast<long>(k);
            }
            last = static_cast<long>(k);
        }
    }
    CHECK(first == e.n1);
    CHECK(last == 2 * e.n1 - 1);
}

TEST_CASE("make_extremal_f1 random draws: unit ball and l2 identity") {
    std::mt19937_64 rng(29);
    int built = 0;
    for (int trial = 0; trial < 100; ++trial) {
        const double sv = std::uniform_real_distribution<double>(1.0, 4.0)(rng);
        const int r = static_cast<int>(rng() % 4);
        const double mu = 2.0 * r - 1.0 / sv + 1.0 + std::uniform_real_distribution<double>(0.05, 5.0)(rng);
        const double delta = std::pow(10.0, std::uniform_real_distribution<double>(-9.0, -0.5)(rng));
        const double p_choices[] = {1.0, 2.0, 3.0, HUGE_VAL};
        const NormIndex p(p_choices[rng() % 4]);
        ExtremalF1 e;
        try {
            e = make_extremal_f1({sv, mu}, r, delta, p);
        } catch (const ConfigError&) {
            continue;  // delta too large for this r
        }
        ++built;
        CHECK(norm_smooth(e.series, {sv, mu}) <= 1.0 + 1e-12);
        const double expected_l2 = std::pow(3.0, -mu) * std::pow(static_cast<double>(e.n1), -mu + 0.5 - 1.0 / sv);
        CHECK(norm_l2w(e.series) == doctest::Approx(expected_l2).epsilon(1e-12));
        CHECK(e.realized_lp_norm == doctest::Approx(lp_norm(e.series.coeffs(), p)).epsilon(1e-12));
    }
    CHECK(built >= 80);
}

TEST_CASE("make_extremal_f1 rejects bad input") {
    CHECK_THROWS_AS((void)make_extremal_f1({2.0, 5.4}, 1, 1.0, NormIndex(2.0)), ConfigError);
    CHECK_THROWS_AS((void)make_extremal_f1({2.0, 5.4}, 1, 0.0, NormIndex(2.0)), ConfigError);
    CHECK_THROWS_AS((void)make_extremal_f1({2.0, 2.4}, 1, 1e-3, NormIndex(2.0)), AdmissibilityError);
}

TEST_CASE("make_extremal_f2 support and values") {
    const ChebSeries f = make_extremal_f2({2.0, 2.0}, 0, 4, {});
    const double value = std::pow(4.0, -2.0) * std::pow(4.0, -2.5);
    for (std::size_t k = 0; k < f.size(); ++k) {
        if (k >= 4 && k <= 7) {
            CHECK(f[k] == doctest::Approx(value).epsilon(1e-15));
        } else {
            CHECK(f[k] == 0.0);
        }
    }

    const ChebSeries shifted = make_extremal_f2({2.0, 2.0}, 1, 4, {5, 6, 7, 8});
    for (std::size_t k = 0; k < shifted.size(); ++k) {
        CHECK((shifted[k] != 0.0) == (k >= 9 && k <= 12));
    }
    const ChebSeries gaps = make_extremal_f2({2.0, 2.0}, 0, 3, {4, 6});
    for (std::size_t k = 0; k < gaps.size(); ++k) {
        CHECK((gaps[k] != 0.0) == (k == 3 || k == 5 || k == 7));
    }
}

TEST_CASE("make_extremal_f2 random draws stay in the unit ball") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 100; ++trial) {
        const long n = 1 + static_cast<long>(rng() % 60);
        const int r = static_cast<int>(rng() % std::min<long>(n + 1, 4));
        const double sv = std::uniform_real_distribution<double>(1.0, 4.0)(rng);
        const double mu = std::uniform_real_distribution<double>(0.1, 8.0)(rng);
        std::set<long> excluded;
        const long count = static_cast<long>(rng() % static_cast<unsigned long>(n + 1));
        while (static_cast<long>(excluded.size()) < count) {
            excluded.insert(r + static_cast<long>(rng() % static_cast<unsigned long>(3 * n + 1)));
        }
        const ChebSeries f = make_extremal_f2({sv, mu}, r, n, excluded);
        long support = 0;
        for (std::size_t k = 0; k < f.size(); ++k) {
            if (f[k] != 0.0) {
                ++support;
                CHECK(static_cast<long>(k) >= n + r);
                CHECK(static_cast<long>(k) <= 3 * n + r);
                CHECK(excluded.count(static_cast<long>(k)) == 0);
            }
        }
        CHECK(support == n);
        CHECK(norm_smooth(f, {sv, mu}) <= 1.0 + 1e-12);
    }
}

TEST_CASE("make_extremal_f2 rejects bad input") {
    CHECK_THROWS_AS((void)make_extremal_f2({2.0, 2.0}, 0, 0, {}), ConfigError);
    CHECK_THROWS_AS((void)make_extremal_f2({2.0, 2.0}, 0, 2, {3, 4, 5}), ConfigError);
    CHECK_THROWS_AS((void)make_extremal_f2({2.0, 2.0}, 2, 4, {1}), ConfigError);
}

TEST_CASE("make_extremal_f1 refuses an oversized support") {
    // rate = 0.05 - 1 + 1: n1 = (3^-mu / delta)^(1/0.05) is astronomically large.
    CHECK_THROWS_AS((void)make_extremal_f1({1.0, 1.05}, 0, 1e-9, NormIndex(1.0)), ConfigError);
}
