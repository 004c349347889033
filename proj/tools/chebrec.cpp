#include "chebrec/errors.hpp"
#include "chebrec/experiment.hpp"
#include "chebrec/ingest.hpp"
#include "chebrec/known_functions.hpp"
#include "chebrec/metrics.hpp"
#include "chebrec/regularize.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

using namespace chebrec;

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitInput = 3;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw InputDataError("cannot open '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

bool looks_like_series(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) {
            continue;
        }
        return line.compare(first, 16, "cheb-orthonormal") == 0;
    }
    return false;
}

struct ExampleArgs {
    std::optional<std::string> example;
    std::optional<int> r;
    std::vector<double> deltas;
    std::optional<int> seeds;
    std::optional<std::string> noise;
    std::optional<double> mu;
    std::optional<double> s;
    std::optional<std::string> p;
    std::optional<std::string> metric;
    std::optional<double> cn;
    std::optional<std::string> out;
    std::optional<std::string> config;
    std::optional<unsigned> threads;
    std::optional<std::uint64_t> seed;
};

int run_example_command(const ExampleArgs& a) {
    ExperimentConfig config;
    if (a.config) {
        config = parse_config_text(read_file(*a.config));
    }
    // Command-line flags override the file; `example` first since it resets defaults.
    if (a.example) {
        apply_setting(config, "example", *a.example);
    }
    if (a.r) {
        config.r = *a.r;
    }
    if (!a.deltas.empty()) {
        config.deltas = a.deltas;
    }
    if (a.seeds) {
        config.seeds = *a.seeds;
    }
    if (a.noise) {
        config.noise = parse_experiment_noise(*a.noise);
    }
    if (a.mu) {
        config.cls.mu = *a.mu;
    }
    if (a.s) {
        config.cls.s = *a.s;
    }
    if (a.p) {
        config.p = NormIndex::parse(*a.p);
    }
    if (a.metric) {
        config.metric = parse_metric(*a.metric);
    }
    if (a.cn) {
        config.c_n = *a.cn;
    }
    if (a.out) {
        config.output_dir = *a.out;
    }
    if (a.threads) {
        config.threads = *a.threads;
    }
    if (a.seed) {
        config.master_seed = *a.seed;
    }

    const ExperimentReport report = run_example(config);
    for (const auto& w : report.warnings) {
        std::cerr << "warning: " << w << '\n';
    }
    std::cout << emit_table(report);
    if (!report.rate_fits.empty()) {
        std::cout << emit_ratefit(report);
    }
    if (!config.output_dir.empty()) {
        write_report_files(report, config.output_dir);
    }
    return 0;
}

struct RecoverArgs {
    std::string input;
    int r = 1;
    double mu = 5.4;
    double s = 2.0;
    std::string p = "2";
    double delta = 0.0;
    std::string metric = "C";
    double cn = 1.0;
    std::optional<std::string> reference;
    std::optional<std::string> output;
    std::string add_noise = "none";
    std::uint64_t seed = 20240607;
    std::size_t grid = kDefaultSupGrid;
};

int run_recover_command(const RecoverArgs& a) {
    const SmoothnessClass cls{a.s, a.mu};
    cls.validate();
    const NormIndex p = NormIndex::parse(a.p);
    const Metric metric = parse_metric(a.metric);
    check_admissible(cls, a.r, metric);
    if (a.delta < 0.0 || a.delta >= 1.0) {
        throw ConfigError("delta must lie in [0, 1)");
    }

    const std::string text = read_file(a.input);
    const bool series_input = looks_like_series(text);
    std::optional<ChebSeries> coeffs;
    std::optional<SampledFunction> samples;
    if (series_input) {
        coeffs = from_text(text);
    } else {
        std::istringstream in(text);
        samples = read_samples(in);
    }

    long n = 0;
    if (a.delta > 0.0) {
        n = select_truncation_level(cls, a.r, p, a.delta, metric, a.cn);
    } else {
        // Exact data: keep everything that was supplied.
        n = series_input ? std::max<long>(static_cast<long>(coeffs->size()) - 1, a.r) : samples->n();
    }

    ChebSeries data = series_input ? *coeffs : clenshaw_curtis_coeffs(*samples, n);
    if (series_input && input_shorter_than_window(data, n)) {
        std::cerr << "warning: input has " << data.size() << " coefficients, window needs " << n + 1
                  << "; missing ones treated as zero\n";
    }
    const NoiseKind noise = parse_noise_kind(a.add_noise);
    if (noise != NoiseKind::None) {
        if (!(a.delta > 0.0)) {
            throw ConfigError("--add-noise needs --delta > 0");
        }
        NoiseSpec spec;
        spec.kind = noise;
        spec.delta = a.delta;
        spec.p = p;
        spec.seed = a.seed;
        data = add_noise(data.resized(static_cast<std::size_t>(n + 1)), spec);
    }

    const ChebSeries recovered = truncate_recover(data, a.r, n);
    std::cout << "N=" << n;
    try {
        const RateReport rate = theoretical_rate(cls, a.r, p, metric, ErrorModel::CoefficientsLp);
        std::cout << " rate_exponent=" << format_double(rate.exponent) << " regime=" << to_string(rate.regime);
    } catch (const ConfigError&) {
        std::cout << " rate_exponent=none";
    }
    std::cout << '\n';
    if (a.reference) {
        const ChebSeries reference = load_series(*a.reference);
        const ErrorPair err = error_between(recovered, reference, a.grid);
        std::cout << "err_l2w=" << format_double(err.err_l2w) << " err_sup=" << format_double(err.err_sup) << '\n';
    }
    if (a.output) {
        save_series(*a.output, recovered);
    }
    return 0;
}

void add_recover_options(CLI::App& cmd, RecoverArgs& a, bool with_r) {
    cmd.add_option("--input", a.input, "coefficient file or sample file")->required();
    if (with_r) {
        cmd.add_option("--r", a.r, "derivative order");
    }
    cmd.add_option("--mu", a.mu, "smoothness mu");
    cmd.add_option("--s", a.s, "summability index s");
    cmd.add_option("--p", a.p, "noise norm index (number or inf)");
    cmd.add_option("--delta", a.delta, "noise level; 0 keeps all supplied data");
    cmd.add_option("--metric", a.metric, "C or L2w");
    cmd.add_option("--cn", a.cn, "truncation rule multiplier");
    cmd.add_option("--reference", a.reference, "coefficient file of the exact result");
    cmd.add_option("--output", a.output, "where to write the recovered series");
    cmd.add_option("--add-noise", a.add_noise, "none, paper-random or lp-projected");
    cmd.add_option("--seed", a.seed, "noise seed");
    cmd.add_option("--grid", a.grid, "sup-norm grid size");
}

struct RateArgs {
    std::vector<double> mu{5.4};
    std::vector<double> s{2.0};
    std::vector<int> r{1};
    std::vector<std::string> p{"2"};
    std::vector<std::string> metric{"C", "L2w"};
    std::string model = "lp";
};

int run_rate_command(const RateArgs& a) {
    ErrorModel model = ErrorModel::CoefficientsLp;
    if (a.model == "function" || a.model == "l2-function") {
        model = ErrorModel::FunctionL2w;
    } else if (a.model != "lp") {
        throw ConfigError("unknown model '" + a.model + "' (expected lp or function)");
    }
    std::cout << "mu,s,r,p,metric,exponent,regime\n";
    for (double mu : a.mu) {
        for (double s : a.s) {
            for (int r : a.r) {
                for (const auto& p_text : a.p) {
                    const NormIndex p = NormIndex::parse(p_text);
                    for (const auto& m : a.metric) {
                        const Metric metric = parse_metric(m);
                        std::cout << format_double(mu) << ',' << format_double(s) << ',' << r << ','
                                  << p.to_string() << ',' << to_string(metric) << ',';
                        try {
                            const RateReport rate = theoretical_rate({s, mu}, r, p, metric, model);
                            std::cout << format_double(rate.exponent) << ',' << to_string(rate.regime) << '\n';
                        } catch (const ConfigError&) {
                            std::cout << ",inadmissible\n";
                        }
                    }
                }
            }
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Stable recovery of derivatives and sums from noisy Chebyshev coefficients"};
    app.require_subcommand(1);

    ExampleArgs ex;
    auto* example = app.add_subcommand("example", "run a reference experiment");
    example->add_option("--example", ex.example, "ex1, ex2, ex3 or custom");
    example->add_option("--r", ex.r, "derivative order");
    example->add_option("--delta", ex.deltas, "noise level (repeatable)")->take_all();
    example->add_option("--seeds", ex.seeds, "noise draws per delta");
    example->add_option("--noise", ex.noise, "paper-random, lp-projected, none or quadrature");
    example->add_option("--mu", ex.mu, "smoothness mu");
    example->add_option("--s", ex.s, "summability index s");
    example->add_option("--p", ex.p, "noise norm index (number or inf)");
    example->add_option("--metric", ex.metric, "C or L2w");
    example->add_option("--cn", ex.cn, "truncation rule multiplier");
    example->add_option("--out", ex.out, "directory for report.csv, rows.csv, ratefit.csv, plot files");
    example->add_option("--config", ex.config, "key=value file, overridden by flags");
    example->add_option("--threads", ex.threads, "worker threads");
    example->add_option("--seed", ex.seed, "master seed");

    RecoverArgs rec;
    auto* recover = app.add_subcommand("recover", "recover a derivative from a coefficient or sample file");
    add_recover_options(*recover, rec, true);

    RecoverArgs sum_args;
    sum_args.r = 0;
    sum_args.metric = "L2w";
    auto* sum = app.add_subcommand("sum", "truncated summation (recover with r = 0)");
    add_recover_options(*sum, sum_args, false);

    RateArgs rate_args;
    auto* rate = app.add_subcommand("rate", "theoretical error exponents over a parameter grid");
    rate->add_option("--mu", rate_args.mu)->take_all();
    rate->add_option("--s", rate_args.s)->take_all();
    rate->add_option("--r", rate_args.r)->take_all();
    rate->add_option("--p", rate_args.p)->take_all();
    rate->add_option("--metric", rate_args.metric)->take_all();
    rate->add_option("--model", rate_args.model, "lp (coefficient noise) or function (L2w noise)");

    std::string fn_name;
    long m = 64;
    std::string coeff_out;
    auto* coeffs = app.add_subcommand("coeffs", "write Chebyshev coefficients of f1, f2 or f3");
    coeffs->add_option("--function", fn_name)->required();
    coeffs->add_option("--m", m, "highest index");
    coeffs->add_option("--output", coeff_out)->required();

    long n_nodes = 16;
    std::string sample_out;
    auto* sample = app.add_subcommand("sample", "write samples of f1, f2 or f3 at cos(j pi/n)");
    sample->add_option("--function", fn_name)->required();
    sample->add_option("--n", n_nodes, "node parameter n");
    sample->add_option("--output", sample_out)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitConfig;
    }

    try {
        if (*example) {
            return run_example_command(ex);
        }
        if (*recover) {
            return run_recover_command(rec);
        }
        if (*sum) {
            return run_recover_command(sum_args);
        }
        if (*rate) {
            return run_rate_command(rate_args);
        }
        if (*coeffs) {
            const KnownFunction fn = parse_known_function(fn_name);
            if (m < 0) {
                throw ConfigError("--m must be >= 0");
            }
            save_series(coeff_out, exact_coeffs(derivative(fn, 0), m, reference_min_nodes(fn)));
            return 0;
        }
        if (*sample) {
            const KnownFunction fn = parse_known_function(fn_name);
            if (n_nodes < 1) {
                throw ConfigError("--n must be >= 1");
            }
            save_samples(sample_out, SampledFunction::sample(derivative(fn, 0), n_nodes));
            return 0;
        }
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const InputDataError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitConfig;
    }
    return 0;
}
