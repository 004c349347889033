#include "chebrec/regularize.hpp"

#include "chebrec/errors.hpp"

#include <cmath>
#include <sstream>
#include <vector>

namespace chebrec {

std::string to_string(Metric metric) { return metric == Metric::C ? "C" : "L2w"; }

Metric parse_metric(const std::string& text) {
    if (text == "C" || text == "c") {
        return Metric::C;
    }
    if (text == "L2w" || text == "L2" || text == "l2w" || text == "l2") {
        return Metric::L2w;
    }
    throw ConfigError("unknown metric '" + text + "' (expected C or L2w)");
}

std::string to_string(Regime regime) {
    switch (regime) {
        case Regime::C_lp: return "C-lp";
        case Regime::L2w_lp: return "L2w-lp";
        case Regime::C_l2_function: return "C-l2-functionerror";
        case Regime::L2w_l2_function: return "L2w-l2-functionerror";
    }
    return "?";
}

namespace {

double admissibility_bound(const SmoothnessClass& cls, int r, Metric metric) {
    const double offset = metric == Metric::C ? 1.0 : 0.5;
    return 2.0 * r - cls.inv_s() + offset;
}

}  // namespace

bool is_admissible(const SmoothnessClass& cls, int r, Metric metric) {
    return r >= 0 && cls.mu > admissibility_bound(cls, r, metric);
}

void check_admissible(const SmoothnessClass& cls, int r, Metric metric) {
    cls.validate();
    if (r < 0) {
        throw ConfigError("derivative order must be non-negative");
    }
    if (!is_admissible(cls, r, metric)) {
        std::ostringstream msg;
        msg << "class too rough for order r=" << r << " in metric " << to_string(metric) << ": requires mu > 2r - 1/s + "
            << (metric == Metric::C ? "1" : "1/2") << " = " << admissibility_bound(cls, r, metric)
            << ", got mu = " << cls.mu;
        throw AdmissibilityError(msg.str());
    }
}

long select_truncation_level(const SmoothnessClass& cls, int r, NormIndex p, double delta, Metric metric,
                             double c_n) {
    check_admissible(cls, r, metric);
    if (!(delta > 0.0 && delta < 1.0)) {
        throw ConfigError("delta must lie in (0, 1)");
    }
    if (!(c_n > 0.0) || !std::isfinite(c_n)) {
        throw ConfigError("rule multiplier c_N must be positive");
    }
    const double rate = cls.mu - p.reciprocal() + cls.inv_s();
    if (!(rate > 0.0)) {
        throw AdmissibilityError("selection rule needs mu - 1/p + 1/s > 0");
    }
    const double x = c_n * std::pow(delta, -1.0 / rate);
    // The 1e-9 slack keeps exact lattice values (and delta -> 1) from rounding up.
    const double ceiled = std::ceil(x - 1e-9);
    if (ceiled > 1e9) {
        throw ConfigError("truncation level exceeds 1e9; delta too small for this class");
    }
    return std::max({static_cast<long>(ceiled), static_cast<long>(r), 1L});
}

RecoveryPlan RecoveryPlan::make(const SmoothnessClass& cls, int r, NormIndex p, double delta, Metric metric,
                                double c_n) {
    RecoveryPlan plan;
    plan.r = r;
    plan.metric = metric;
    plan.p = p;
    plan.cls = cls;
    plan.delta = delta;
    plan.c_n = c_n;
    plan.n = select_truncation_level(cls, r, p, delta, metric, c_n);
    return plan;
}

ChebSeries truncate_recover(const ChebSeries& noisy, int r, long n) {
    if (r < 0) {
        throw ConfigError("derivative order must be non-negative");
    }
    if (n < r) {
        throw ConfigError("invalid plan: truncation level N=" + std::to_string(n) + " below derivative order r=" +
                          std::to_string(r));
    }
    std::vector<double> window(static_cast<std::size_t>(n + 1), 0.0);
    for (std::size_t k = static_cast<std::size_t>(r); k < window.size(); ++k) {
        window[k] = noisy.coeff(k);
    }
    ChebSeries kept(std::move(window));
    return r == 0 ? kept : differentiate_series(kept, r);
}

RateReport theoretical_rate(const SmoothnessClass& cls, int r, NormIndex p, Metric metric, ErrorModel model) {
    check_admissible(cls, r, metric);
    const double inv_s = cls.inv_s();
    if (r == 0 && metric == Metric::L2w) {
        // The summation results in L2w are established for s >= 2 (and p >= 2 in the l_p model).
        if (cls.s < 2.0) {
            throw AdmissibilityError("summation rate in L2w requires s >= 2");
        }
        if (model == ErrorModel::CoefficientsLp && p.value() < 2.0) {
            throw AdmissibilityError("summation rate in L2w with l_p errors requires p >= 2");
        }
    }
    const double numerator = cls.mu - 2.0 * r + inv_s - (metric == Metric::C ? 1.0 : 0.5);
    const double denominator =
        model == ErrorModel::CoefficientsLp ? cls.mu - p.reciprocal() + inv_s : cls.mu + inv_s - 0.5;
    if (!(denominator > 0.0)) {
        throw AdmissibilityError("rate denominator must be positive");
    }
    RateReport report;
    report.exponent = numerator / denominator;
    if (model == ErrorModel::CoefficientsLp) {
        report.regime = metric == Metric::C ? Regime::C_lp : Regime::L2w_lp;
    } else {
        report.regime = metric == Metric::C ? Regime::C_l2_function : Regime::L2w_l2_function;
    }
    return report;
}

bool is_wellposed_summation(double s, NormIndex p, Metric metric) {
    if (metric == Metric::C) {
        return p.value() == 1.0;
    }
    return p.value() <= 2.0 && s >= 2.0;
}

}  // namespace chebrec
