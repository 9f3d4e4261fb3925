#pragma once

// Monte-Carlo threshold mismatch on repeated track chains, Gaussian fits and
// the back-bias sensitivity summary of the built-in primitives.

#include "mvroute/interconnect.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace mvroute {

struct McConfig {
    int trials = 10000;
    std::uint64_t seed = 1;
    double sigma_vt = 0.019;  // volts; lands the binary length-6 chain near 1.6 %
    int chain_length = 6;
    int threads = 1;
    int bins = 40;
};

struct GaussianFit {
    double mu;
    double sigma;
};

/// Sample mean and unbiased standard deviation. Throws DomainError below two
/// samples.
[[nodiscard]] GaussianFit gaussian_fit(const std::vector<double>& samples);

struct Histogram {
    double lower = 0.0;
    double width = 0.0;
    std::vector<long long> counts;

    [[nodiscard]] long long total() const;
};

/// Equal-width bins over [min, max] of the samples; the maximum falls in the
/// last bin.
[[nodiscard]] Histogram make_histogram(const std::vector<double>& samples, int bins);

struct McResult {
    std::vector<double> delays_s;  // successful trials, in trial order
    int trials = 0;
    int failures = 0;
    double mean_s = 0.0;
    double sigma_s = 0.0;
    double cv = 0.0;
    GaussianFit fit{0.0, 0.0};
    Histogram histogram;
};

/// Every driving device on the delay path gets an independent N(0, sigma_vt)
/// threshold offset per trial. Radix 2 is the bus-2 (slower of two wires),
/// radix 4 the quaternary chain where N2 and the N5 pass device share the
/// same draws as the two binary wires. A trial with a nonpositive overdrive
/// is a failure and is excluded from the statistics.
[[nodiscard]] McResult mc_track_delay(const McConfig& cfg, const TrackConfig& track, const Technology& tech);

struct VariabilityComparison {
    McResult quaternary;
    McResult binary;
    double ratio;  // cv_quaternary / cv_binary
    static constexpr double reference_cv_quaternary = 0.0338;
    static constexpr double reference_cv_binary = 0.0160;
    static constexpr double reference_ratio = reference_cv_quaternary / reference_cv_binary;
};

[[nodiscard]] VariabilityComparison compare_variability(const McConfig& cfg, const TrackConfig& track,
                                                        const Technology& tech);

/// bin_lower_s,count
[[nodiscard]] std::string histogram_to_csv(const Histogram& h);
/// mean, sigma, cv, failures, trials
[[nodiscard]] std::string mc_summary_json(const McResult& r);

struct SensitivityRow {
    std::string primitive;
    FunctionalWindow window;
};

[[nodiscard]] std::vector<SensitivityRow> vbb_sensitivity_report(const std::vector<double>& grid,
                                                                 const VoltageMap& vmap,
                                                                 const PrimitiveOptions& options = {});

[[nodiscard]] std::string sensitivity_to_csv(const std::vector<SensitivityRow>& rows);

}  // namespace mvroute
