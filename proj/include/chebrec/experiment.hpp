#pragma once

#include "chebrec/cheb_series.hpp"
#include "chebrec/metrics.hpp"
#include "chebrec/norm_index.hpp"
#include "chebrec/regularize.hpp"
#include "chebrec/spaces.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace chebrec {

enum class ExampleId {
    Ex1,     ///< f1 = (1-t^2)^(5/2)/497, derivatives r = 1, 2
    Ex2,     ///< f2 = |t|/7, summation
    Ex3,     ///< f3 = t sin(pi t/2)/1580, second derivative
    Custom,  ///< synthetic power-law series in the unit ball of W_s^mu
};

enum class ExperimentNoise { PaperRandom, LpProjected, None, Quadrature };

[[nodiscard]] std::string to_string(ExampleId id);
[[nodiscard]] ExampleId parse_example_id(const std::string& text);
[[nodiscard]] std::string to_string(ExperimentNoise noise);
[[nodiscard]] ExperimentNoise parse_experiment_noise(const std::string& text);

/// Coefficients max(1,k)^(-mu - 1/s - extra_decay), k = 0..degree, scaled to
/// norm_smooth = 1.
[[nodiscard]] ChebSeries make_power_law_series(const SmoothnessClass& cls, long degree, double extra_decay = 0.51);

inline constexpr long kPowerLawDegree = 1024;

struct ExperimentConfig {
    ExampleId example = ExampleId::Ex1;
    int r = 1;
    std::vector<double> deltas{1e-4, 1e-5, 1e-6};
    int seeds = 50;
    ExperimentNoise noise = ExperimentNoise::PaperRandom;
    SmoothnessClass cls{2.0, 5.4};
    NormIndex p{2.0};
    Metric metric = Metric::C;
    double c_n = 1.0;
    std::string output_dir;  ///< empty: nothing is written
    std::uint64_t master_seed = 20240607;
    unsigned threads = 1;
    std::size_t grid_size = kDefaultSupGrid;
    std::size_t plot_points = 512;

    /// Parameters of the reference experiment `id`.
    [[nodiscard]] static ExperimentConfig defaults_for(ExampleId id);

    /// Throws ConfigError for deltas outside (0,1), seeds < 1, threads < 1,
    /// an order the example function does not support, or an inadmissible class.
    void validate() const;
};

/// Applies one `key=value` setting (keys: example, r, delta, seeds, noise,
/// mu, s, p, metric, cn, out, master_seed, threads, grid). `delta` accepts a
/// comma-separated list and replaces the list. Setting `example` resets the
/// example defaults first. Throws ConfigError.
void apply_setting(ExperimentConfig& config, const std::string& key, const std::string& value);

/// Parses a key=value file body ('#' comments, blank lines ignored) on top of `base`.
[[nodiscard]] ExperimentConfig parse_config_text(const std::string& text, ExperimentConfig base = {});

struct ExperimentRow {
    double delta = 0.0;
    int seed = 0;
    long n = 0;
    std::optional<long> n_quadrature;
    double err_l2w = 0.0;
    double err_sup = 0.0;
    double wall_ms = 0.0;
};

struct AggregateRow {
    double delta = 0.0;
    long n = 0;
    double median_err_l2w = 0.0;
    double median_err_sup = 0.0;
    std::optional<long> n_quadrature;

    friend bool operator==(const AggregateRow&, const AggregateRow&) = default;
};

struct MetricRateFit {
    Metric metric = Metric::C;
    RateFit fit;
    std::optional<double> theoretical_exponent;
};

struct PlotData {
    double delta = 0.0;
    std::vector<double> t;
    std::vector<double> approx;
    std::vector<double> reference;
};

struct ExperimentReport {
    std::vector<ExperimentRow> rows;        ///< sorted by descending delta, then seed
    std::vector<AggregateRow> aggregate;    ///< per delta, descending
    std::vector<MetricRateFit> rate_fits;   ///< present with >= 3 distinct deltas
    std::vector<PlotData> plots;            ///< seed 0 of each delta
    std::vector<std::string> warnings;
};

/// Runs every (delta, seed) row: exact coefficients, perturbation (or
/// Clenshaw-Curtis sampling), truncation level, truncated recovery, and
/// errors against the reference derivative. Rows run on config.threads
/// workers; results do not depend on the thread count.
[[nodiscard]] ExperimentReport run_example(const ExperimentConfig& config);

/// Median of a non-empty sample (mean of the two middle values for even sizes).
[[nodiscard]] double median(std::vector<double> values);

/// `delta,N,median_err_l2w,median_err_sup,n_quadrature`, one row per delta,
/// descending delta. Numbers use the shortest round-trip representation.
[[nodiscard]] std::string emit_table(const ExperimentReport& report);
[[nodiscard]] std::vector<AggregateRow> parse_table(const std::string& csv);

[[nodiscard]] std::string emit_rows(const ExperimentReport& report);
[[nodiscard]] std::string emit_ratefit(const ExperimentReport& report);
[[nodiscard]] std::string emit_plot(const PlotData& plot);
/// File name `plot_<delta>.csv`.
[[nodiscard]] std::string plot_file_name(double delta);

/// Writes report.csv, rows.csv, ratefit.csv (when fits exist) and the plot
/// files into `dir`, creating it if needed.
void write_report_files(const ExperimentReport& report, const std::string& dir);

/// Shortest decimal string that parses back to the same double.
[[nodiscard]] std::string format_double(double value);

}  // namespace chebrec
