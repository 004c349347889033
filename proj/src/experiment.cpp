#include "chebrec/experiment.hpp"

#include "chebrec/errors.hpp"
#include "chebrec/ingest.hpp"
#include "chebrec/random.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <exception>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

namespace chebrec {

namespace {

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

double parse_double(const std::string& text, const std::string& what) {
    const std::string t = trim(text);
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (ec != std::errc() || ptr != t.data() + t.size() || t.empty()) {
        throw ConfigError("bad value for " + what + ": '" + text + "'");
    }
    return v;
}

long parse_long(const std::string& text, const std::string& what) {
    const std::string t = trim(text);
    long v = 0;
    const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (ec != std::errc() || ptr != t.data() + t.size() || t.empty()) {
        throw ConfigError("bad integer for " + what + ": '" + text + "'");
    }
    return v;
}

std::optional<KnownFunction> function_of(ExampleId id) {
    switch (id) {
        case ExampleId::Ex1: return KnownFunction::F1;
        case ExampleId::Ex2: return KnownFunction::F2;
        case ExampleId::Ex3: return KnownFunction::F3;
        case ExampleId::Custom: return std::nullopt;
    }
    return std::nullopt;
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> out;
    std::string field;
    std::istringstream in(line);
    while (std::getline(in, field, ',')) {
        out.push_back(trim(field));
    }
    if (!line.empty() && line.back() == ',') {
        out.emplace_back();
    }
    return out;
}

/// Everything that is shared by the rows of one delta.
struct DeltaSetup {
    double delta = 0.0;
    long n = 0;
    std::optional<long> n_quadrature;
    std::optional<ChebSeries> quadrature_data;
};

}  // namespace

std::string to_string(ExampleId id) {
    switch (id) {
        case ExampleId::Ex1: return "ex1";
        case ExampleId::Ex2: return "ex2";
        case ExampleId::Ex3: return "ex3";
        case ExampleId::Custom: return "custom";
    }
    return "?";
}

ExampleId parse_example_id(const std::string& text) {
    if (text == "ex1") {
        return ExampleId::Ex1;
    }
    if (text == "ex2") {
        return ExampleId::Ex2;
    }
    if (text == "ex3") {
        return ExampleId::Ex3;
    }
    if (text == "custom") {
        return ExampleId::Custom;
    }
    throw ConfigError("unknown example '" + text + "' (expected ex1, ex2, ex3 or custom)");
}

std::string to_string(ExperimentNoise noise) {
    switch (noise) {
        case ExperimentNoise::PaperRandom: return "paper-random";
        case ExperimentNoise::LpProjected: return "lp-projected";
        case ExperimentNoise::None: return "none";
        case ExperimentNoise::Quadrature: return "quadrature";
    }
    return "?";
}

ExperimentNoise parse_experiment_noise(const std::string& text) {
    if (text == "quadrature") {
        return ExperimentNoise::Quadrature;
    }
    switch (parse_noise_kind(text)) {
        case NoiseKind::PaperRandom: return ExperimentNoise::PaperRandom;
        case NoiseKind::LpProjected: return ExperimentNoise::LpProjected;
        case NoiseKind::None: return ExperimentNoise::None;
    }
    return ExperimentNoise::None;
}

ChebSeries make_power_law_series(const SmoothnessClass& cls, long degree, double extra_decay) {
    cls.validate();
    if (degree < 0) {
        throw ConfigError("power-law series needs degree >= 0");
    }
    std::vector<double> c(static_cast<std::size_t>(degree + 1));
    for (long k = 0; k <= degree; ++k) {
        c[static_cast<std::size_t>(k)] =
            std::pow(static_cast<double>(std::max(1L, k)), -cls.mu - cls.inv_s() - extra_decay);
    }
    ChebSeries raw(std::move(c));
    return (1.0 / norm_smooth(raw, cls)) * raw;
}

ExperimentConfig ExperimentConfig::defaults_for(ExampleId id) {
    ExperimentConfig c;
    c.example = id;
    switch (id) {
        case ExampleId::Ex1:
            c.r = 1;
            c.cls = {2.0, 5.4};
            c.deltas = {1e-4, 1e-5, 1e-6};
            c.noise = ExperimentNoise::PaperRandom;
            break;
        case ExampleId::Ex2:
            c.r = 0;
            c.cls = {2.0, 2.0};
            c.deltas = {1e-2, 1e-3, 1e-4};
            c.noise = ExperimentNoise::PaperRandom;
            break;
        case ExampleId::Ex3:
            c.r = 2;
            c.cls = {2.0, 6.5};
            c.deltas = {1e-5, 1e-6, 1e-7};
            c.noise = ExperimentNoise::Quadrature;
            break;
        case ExampleId::Custom:
            c.r = 1;
            c.cls = {2.0, 5.4};
            c.deltas = {1e-3, 1e-4, 1e-5, 1e-6, 1e-7, 1e-8, 1e-9};
            c.noise = ExperimentNoise::LpProjected;
            break;
    }
    return c;
}

void ExperimentConfig::validate() const {
    if (deltas.empty()) {
        throw ConfigError("at least one delta is required");
    }
    for (double d : deltas) {
        if (!(d > 0.0 && d < 1.0)) {
            throw ConfigError("every delta must lie in (0, 1)");
        }
    }
    if (seeds < 1) {
        throw ConfigError("seeds must be >= 1");
    }
    if (threads < 1) {
        throw ConfigError("threads must be >= 1");
    }
    if (grid_size < 2) {
        throw ConfigError("sup-norm grid needs at least 2 points");
    }
    if (r < 0) {
        throw ConfigError("derivative order must be non-negative");
    }
    if (const auto fn = function_of(example); fn && r > max_order(*fn)) {
        throw ConfigError("example " + to_string(example) + " supports r <= " + std::to_string(max_order(*fn)));
    }
    check_admissible(cls, r, metric);
}

void apply_setting(ExperimentConfig& config, const std::string& raw_key, const std::string& raw_value) {
    const std::string key = trim(raw_key);
    const std::string value = trim(raw_value);
    if (key == "example") {
        const auto keep_out = config.output_dir;
        const auto keep_seed = config.master_seed;
        const auto keep_threads = config.threads;
        const auto keep_seeds = config.seeds;
        config = ExperimentConfig::defaults_for(parse_example_id(value));
        config.output_dir = keep_out;
        config.master_seed = keep_seed;
        config.threads = keep_threads;
        config.seeds = keep_seeds;
    } else if (key == "r") {
        config.r = static_cast<int>(parse_long(value, key));
    } else if (key == "delta" || key == "deltas") {
        config.deltas.clear();
        std::istringstream in(value);
        std::string item;
        while (std::getline(in, item, ',')) {
            config.deltas.push_back(parse_double(item, key));
        }
    } else if (key == "seeds") {
        config.seeds = static_cast<int>(parse_long(value, key));
    } else if (key == "noise") {
        config.noise = parse_experiment_noise(value);
    } else if (key == "mu") {
        config.cls.mu = parse_double(value, key);
    } else if (key == "s") {
        config.cls.s = parse_double(value, key);
    } else if (key == "p") {
        config.p = NormIndex::parse(value);
    } else if (key == "metric") {
        config.metric = parse_metric(value);
    } else if (key == "cn" || key == "c_N") {
        config.c_n = parse_double(value, key);
    } else if (key == "out") {
        config.output_dir = value;
    } else if (key == "master_seed" || key == "seed") {
        const long v = parse_long(value, key);
        if (v < 0) {
            throw ConfigError("master seed must be non-negative");
        }
        config.master_seed = static_cast<std::uint64_t>(v);
    } else if (key == "threads") {
        const long v = parse_long(value, key);
        if (v < 1) {
            throw ConfigError("threads must be >= 1");
        }
        config.threads = static_cast<unsigned>(v);
    } else if (key == "grid") {
        const long v = parse_long(value, key);
        if (v < 2) {
            throw ConfigError("grid must be >= 2");
        }
        config.grid_size = static_cast<std::size_t>(v);
    } else {
        throw ConfigError("unknown config key '" + key + "'");
    }
}

ExperimentConfig parse_config_text(const std::string& text, ExperimentConfig base) {
    std::istringstream in(text);
    std::string line;
    long line_no = 0;
    // `example` must apply before the keys it would otherwise reset.
    std::vector<std::pair<std::string, std::string>> settings;
    while (std::getline(in, line)) {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        if (trim(line).empty()) {
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw ConfigError("config line " + std::to_string(line_no) + ": expected key=value");
        }
        settings.emplace_back(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
    }
    std::stable_partition(settings.begin(), settings.end(), [](const auto& kv) { return kv.first == "example"; });
    for (const auto& [key, value] : settings) {
        apply_setting(base, key, value);
    }
    return base;
}

double median(std::vector<double> values) {
    if (values.empty()) {
        throw ConfigError("median of an empty sample");
    }
    std::sort(values.begin(), values.end());
    const std::size_t mid = values.size() / 2;
    return values.size() % 2 == 1 ? values[mid] : 0.5 * (values[mid - 1] + values[mid]);
}

ExperimentReport run_example(const ExperimentConfig& config) {
    config.validate();
    const auto fn = function_of(config.example);

    ChebSeries clean;
    ChebSeries reference_series;
    RealFunction source;
    if (fn) {
        source = derivative(*fn, 0);
        clean = exact_coeffs(source, reference_degree(*fn), reference_min_nodes(*fn));
        reference_series = reference_derivative(*fn, config.r);
    } else {
        clean = make_power_law_series(config.cls, kPowerLawDegree);
        source = [clean](double t) { return eval(clean, t); };
        reference_series = config.r == 0 ? clean : differentiate_series(clean, config.r);
    }
    const ReferenceOnGrid reference(reference_series, config.grid_size);

    ExperimentReport report;

    std::vector<double> deltas = config.deltas;
    std::sort(deltas.begin(), deltas.end(), std::greater<>());
    deltas.erase(std::unique(deltas.begin(), deltas.end()), deltas.end());

    std::vector<DeltaSetup> setups;
    for (double delta : deltas) {
        DeltaSetup setup;
        setup.delta = delta;
        setup.n = select_truncation_level(config.cls, config.r, config.p, delta, config.metric, config.c_n);
        if (config.noise == ExperimentNoise::Quadrature) {
            const long n_nodes = choose_quadrature_n(source, delta, setup.n);
            setup.n_quadrature = n_nodes;
            setup.quadrature_data = clenshaw_curtis_coeffs(SampledFunction::sample(source, n_nodes), setup.n);
        } else if (input_shorter_than_window(clean, setup.n)) {
            report.warnings.push_back("delta=" + format_double(delta) + ": input has " + std::to_string(clean.size()) +
                                      " coefficients, window needs " + std::to_string(setup.n + 1) +
                                      "; missing ones treated as zero");
        }
        setups.push_back(std::move(setup));
    }

    const std::size_t seeds = static_cast<std::size_t>(config.seeds);
    const std::size_t total = setups.size() * seeds;
    report.rows.resize(total);
    std::vector<ChebSeries> first_seed_approx(setups.size());

    const auto run_row = [&](std::size_t index) {
        const std::size_t di = index / seeds;
        const std::size_t si = index % seeds;
        const DeltaSetup& setup = setups[di];
        const auto start = std::chrono::steady_clock::now();

        ChebSeries data;
        switch (config.noise) {
            case ExperimentNoise::Quadrature:
                data = *setup.quadrature_data;
                break;
            case ExperimentNoise::None:
                data = clean.resized(static_cast<std::size_t>(setup.n + 1));
                break;
            case ExperimentNoise::PaperRandom:
            case ExperimentNoise::LpProjected: {
                NoiseSpec spec;
                spec.kind = config.noise == ExperimentNoise::PaperRandom ? NoiseKind::PaperRandom
                                                                         : NoiseKind::LpProjected;
                spec.delta = setup.delta;
                spec.p = config.p;
                spec.seed = derive_stream_seed(config.master_seed, di, si);
                data = add_noise(clean.resized(static_cast<std::size_t>(setup.n + 1)), spec);
                break;
            }
        }
        ChebSeries approx = truncate_recover(data, config.r, setup.n);
        const ErrorPair err = reference.error_of(approx);
        const auto stop = std::chrono::steady_clock::now();

        ExperimentRow& row = report.rows[index];
        row.delta = setup.delta;
        row.seed = static_cast<int>(si);
        row.n = setup.n;
        row.n_quadrature = setup.n_quadrature;
        row.err_l2w = err.err_l2w;
        row.err_sup = err.err_sup;
        row.wall_ms = std::chrono::duration<double, std::milli>(stop - start).count();
        if (si == 0) {
            first_seed_approx[di] = std::move(approx);
        }
    };

    const unsigned workers = std::min<unsigned>(config.threads, static_cast<unsigned>(std::max<std::size_t>(1, total)));
    if (workers <= 1) {
        for (std::size_t i = 0; i < total; ++i) {
            run_row(i);
        }
    } else {
        std::atomic<std::size_t> next{0};
        std::exception_ptr failure;
        std::mutex failure_mutex;
        {
            std::vector<std::jthread> pool;
            for (unsigned w = 0; w < workers; ++w) {
                pool.emplace_back([&] {
                    for (std::size_t i = next++; i < total; i = next++) {
                        try {
                            run_row(i);
                        } catch (...) {
                            const std::lock_guard lock(failure_mutex);
                            if (!failure) {
                                failure = std::current_exception();
                            }
                        }
                    }
                });
            }
        }
        if (failure) {
            std::rethrow_exception(failure);
        }
    }

    for (std::size_t di = 0; di < setups.size(); ++di) {
        std::vector<double> l2;
        std::vector<double> sup;
        for (std::size_t si = 0; si < seeds; ++si) {
            const auto& row = report.rows[di * seeds + si];
            l2.push_back(row.err_l2w);
            sup.push_back(row.err_sup);
        }
        report.aggregate.push_back(
            {setups[di].delta, setups[di].n, median(std::move(l2)), median(std::move(sup)), setups[di].n_quadrature});

        PlotData plot;
        plot.delta = setups[di].delta;
        const std::size_t points = std::max<std::size_t>(2, config.plot_points);
        for (std::size_t i = 0; i < points; ++i) {
            const double t = std::clamp(-1.0 + 2.0 * static_cast<double>(i) / static_cast<double>(points - 1), -1.0, 1.0);
            plot.t.push_back(t);
            plot.approx.push_back(eval(first_seed_approx[di], t));
            plot.reference.push_back(eval(reference_series, t));
        }
        report.plots.push_back(std::move(plot));
    }

    if (setups.size() >= 3) {
        for (const Metric metric : {Metric::L2w, Metric::C}) {
            std::vector<std::pair<double, double>> points;
            bool positive = true;
            for (const auto& agg : report.aggregate) {
                const double e = metric == Metric::C ? agg.median_err_sup : agg.median_err_l2w;
                positive = positive && e > 0.0;
                points.emplace_back(agg.delta, e);
            }
            if (!positive) {
                report.warnings.push_back("rate fit skipped for " + to_string(metric) + ": zero error");
                continue;
            }
            MetricRateFit entry{metric, fit_rate(points), std::nullopt};
            try {
                entry.theoretical_exponent =
                    theoretical_rate(config.cls, config.r, config.p, metric, ErrorModel::CoefficientsLp).exponent;
            } catch (const ConfigError&) {
                // Regime without an established rate; the fit is still reported.
            }
            report.rate_fits.push_back(std::move(entry));
        }
    }
    return report;
}

std::string format_double(double value) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    if (ec != std::errc()) {
        throw std::logic_error("format_double: buffer too small");
    }
    return std::string(buf, ptr);
}

std::string emit_table(const ExperimentReport& report) {
    std::string out = "delta,N,median_err_l2w,median_err_sup,n_quadrature\n";
    std::vector<AggregateRow> rows = report.aggregate;
    std::stable_sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return a.delta > b.delta; });
    for (const auto& row : rows) {
        out += format_double(row.delta) + ',' + std::to_string(row.n) + ',' + format_double(row.median_err_l2w) + ',' +
               format_double(row.median_err_sup) + ',' +
               (row.n_quadrature ? std::to_string(*row.n_quadrature) : std::string()) + '\n';
    }
    return out;
}

std::vector<AggregateRow> parse_table(const std::string& csv) {
    std::istringstream in(csv);
    std::string line;
    if (!std::getline(in, line) || trim(line) != "delta,N,median_err_l2w,median_err_sup,n_quadrature") {
        throw InputDataError("report table: unexpected header");
    }
    std::vector<AggregateRow> rows;
    while (std::getline(in, line)) {
        if (trim(line).empty()) {
            continue;
        }
        const auto fields = split_csv_line(line);
        if (fields.size() != 5) {
            throw InputDataError("report table: expected 5 fields in '" + line + "'");
        }
        try {
            AggregateRow row;
            row.delta = parse_double(fields[0], "delta");
            row.n = parse_long(fields[1], "N");
            row.median_err_l2w = parse_double(fields[2], "median_err_l2w");
            row.median_err_sup = parse_double(fields[3], "median_err_sup");
            if (!fields[4].empty()) {
                row.n_quadrature = parse_long(fields[4], "n_quadrature");
            }
            rows.push_back(row);
        } catch (const ConfigError& e) {
            throw InputDataError(std::string("report table: ") + e.what());
        }
    }
    return rows;
}

std::string emit_rows(const ExperimentReport& report) {
    std::string out = "delta,seed,N,n_quadrature,err_l2w,err_sup\n";
    for (const auto& row : report.rows) {
        out += format_double(row.delta) + ',' + std::to_string(row.seed) + ',' + std::to_string(row.n) + ',' +
               (row.n_quadrature ? std::to_string(*row.n_quadrature) : std::string()) + ',' +
               format_double(row.err_l2w) + ',' + format_double(row.err_sup) + '\n';
    }
    return out;
}

std::string emit_ratefit(const ExperimentReport& report) {
    std::string out = "metric,slope,intercept,r2,points,theoretical_exponent\n";
    for (const auto& entry : report.rate_fits) {
        out += to_string(entry.metric) + ',' + format_double(entry.fit.slope) + ',' +
               format_double(entry.fit.intercept) + ',' + format_double(entry.fit.r2) + ',' +
               std::to_string(entry.fit.points.size()) + ',' +
               (entry.theoretical_exponent ? format_double(*entry.theoretical_exponent) : std::string()) + '\n';
    }
    return out;
}

std::string emit_plot(const PlotData& plot) {
    std::string out = "t,approx,reference\n";
    for (std::size_t i = 0; i < plot.t.size(); ++i) {
        out += format_double(plot.t[i]) + ',' + format_double(plot.approx[i]) + ',' + format_double(plot.reference[i]) +
               '\n';
    }
    return out;
}

std::string plot_file_name(double delta) { return "plot_" + format_double(delta) + ".csv"; }

void write_report_files(const ExperimentReport& report, const std::string& dir) {
    namespace fs = std::filesystem;
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) {
        throw InputDataError("cannot create output directory '" + dir + "': " + ec.message());
    }
    const auto write = [&](const std::string& name, const std::string& body) {
        const fs::path path = fs::path(dir) / name;
        std::ofstream out(path, std::ios::binary);
        if (!out) {
            throw InputDataError("cannot write '" + path.string() + "'");
        }
        out << body;
    };
    write("report.csv", emit_table(report));
    write("rows.csv", emit_rows(report));
    if (!report.rate_fits.empty()) {
        write("ratefit.csv", emit_ratefit(report));
    }
    for (const auto& plot : report.plots) {
        write(plot_file_name(plot.delta), emit_plot(plot));
    }
}

}  // namespace chebrec
