#include "mvroute/variability.hpp"

#include "mvroute/errors.hpp"
#include "mvroute/format.hpp"

#include "json.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <thread>

namespace mvroute {

GaussianFit gaussian_fit(const std::vector<double>& samples) {
    if (samples.size() < 2) {
        throw DomainError("gaussian fit needs at least two samples");
    }
    // Shifted by the first sample: constant input gives exactly zero spread.
    const double k = samples.front();
    const double n = static_cast<double>(samples.size());
    double sum = 0.0;
    for (double s : samples) {
        sum += s - k;
    }
    const double shifted_mean = sum / n;
    double ss = 0.0;
    for (double s : samples) {
        const double d = (s - k) - shifted_mean;
        ss += d * d;
    }
    return {k + shifted_mean, std::sqrt(ss / (n - 1.0))};
}

long long Histogram::total() const {
    long long t = 0;
    for (auto c : counts) {
        t += c;
    }
    return t;
}

Histogram make_histogram(const std::vector<double>& samples, int bins) {
    if (bins < 1) {
        throw DomainError("histogram needs at least one bin");
    }
    Histogram h;
    h.counts.assign(static_cast<std::size_t>(bins), 0);
    if (samples.empty()) {
        return h;
    }
    const auto [lo, hi] = std::minmax_element(samples.begin(), samples.end());
    h.lower = *lo;
    h.width = (*hi - *lo) / bins;
    for (double s : samples) {
        std::size_t b = 0;
        if (h.width > 0.0) {
            b = static_cast<std::size_t>((s - h.lower) / h.width);
            b = std::min(b, h.counts.size() - 1);
        }
        ++h.counts[b];
    }
    return h;
}

namespace {

// Draws are ordered per segment as (wire 0 / N2, wire 1 / N5) so both arms
// see the same numbers.
std::vector<double> trial_offsets(const McConfig& cfg, int trial) {
    std::seed_seq seq{static_cast<std::uint32_t>(cfg.seed), static_cast<std::uint32_t>(cfg.seed >> 32),
                      static_cast<std::uint32_t>(trial)};
    std::mt19937_64 gen(seq);
    std::normal_distribution<double> z(0.0, 1.0);
    std::vector<double> out(static_cast<std::size_t>(2 * cfg.chain_length));
    for (auto& v : out) {
        v = cfg.sigma_vt * z(gen);
    }
    return out;
}

struct ChainModel {
    int radix;
    double swing;
    double vt;
    double pass_gate;  // quaternary output pass device gate voltage
    double load;
    DelayModel dm;
};

// NaN on functional failure.
double chain_delay(const ChainModel& m, const std::vector<double>& dvt, int chain) {
    constexpr double nan = std::numeric_limits<double>::quiet_NaN();
    if (m.radix == 2) {
        double worst = 0.0;
        for (int wire = 0; wire < 2; ++wire) {
            double d = 0.0;
            for (int s = 0; s < chain; ++s) {
                const double ov = m.swing - (m.vt + dvt[2 * s + wire]);
                if (!(ov > 0.0)) {
                    return nan;
                }
                d += stage_delay(m.load, m.swing, ov, m.dm);
            }
            worst = std::max(worst, d);
        }
        return worst;
    }
    double d = 0.0;
    for (int s = 0; s < chain; ++s) {
        const double ov_drive = m.swing - (m.vt + dvt[2 * s]);
        const double ov_pass = m.pass_gate - (m.vt + dvt[2 * s + 1]);
        const double ov = std::min(ov_drive, ov_pass);
        if (!(ov > 0.0)) {
            return nan;
        }
        d += stage_delay(m.load, m.swing, ov, m.dm);
    }
    return d;
}

}  // namespace

McResult mc_track_delay(const McConfig& cfg, const TrackConfig& track, const Technology& tech) {
    if (cfg.trials < 2 || cfg.chain_length < 1 || cfg.sigma_vt < 0.0 || cfg.threads < 1) {
        throw DomainError("Monte-Carlo needs trials >= 2, chain_length >= 1, sigma_vt >= 0, threads >= 1");
    }
    TrackConfig seg = track;
    seg.segments = 1;
    const DriverStage d = driver_stage(seg, tech);
    ChainModel m{seg.radix, d.swing, d.vt, tech.vdd,
                 effective_capacitance(tech.wire(seg), tech.ceff) + seg.loads_per_segment * d.input_cap, tech.delay};
    if (!(d.overdrive > 0.0)) {
        throw NonFunctionalError("nominal driving stage has no overdrive");
    }

    std::vector<double> per_trial(static_cast<std::size_t>(cfg.trials));
    auto work = [&](int begin, int end) {
        for (int t = begin; t < end; ++t) {
            per_trial[static_cast<std::size_t>(t)] = chain_delay(m, trial_offsets(cfg, t), cfg.chain_length);
        }
    };
    const int n_threads = std::min(cfg.threads, cfg.trials);
    if (n_threads == 1) {
        work(0, cfg.trials);
    } else {
        std::vector<std::thread> pool;
        const int chunk = (cfg.trials + n_threads - 1) / n_threads;
        for (int i = 0; i < n_threads; ++i) {
            const int b = i * chunk;
            const int e = std::min(cfg.trials, b + chunk);
            if (b < e) {
                pool.emplace_back(work, b, e);
            }
        }
        for (auto& th : pool) {
            th.join();
        }
    }

    McResult r;
    r.trials = cfg.trials;
    for (double v : per_trial) {
        if (std::isnan(v)) {
            ++r.failures;
        } else {
            r.delays_s.push_back(v);
        }
    }
    r.histogram = make_histogram(r.delays_s, cfg.bins);
    if (r.delays_s.size() >= 2) {
        r.fit = gaussian_fit(r.delays_s);
        r.mean_s = r.fit.mu;
        r.sigma_s = r.fit.sigma;
        r.cv = r.sigma_s / r.mean_s;
    }
    return r;
}

VariabilityComparison compare_variability(const McConfig& cfg, const TrackConfig& track, const Technology& tech) {
    TrackConfig q = track;
    q.radix = 4;
    TrackConfig b = track;
    b.radix = 2;
    VariabilityComparison c{mc_track_delay(cfg, q, tech), mc_track_delay(cfg, b, tech), 0.0};
    c.ratio = c.binary.cv > 0.0 ? c.quaternary.cv / c.binary.cv : std::numeric_limits<double>::quiet_NaN();
    return c;
}

std::string histogram_to_csv(const Histogram& h) {
    std::string out = "bin_lower_s,count\n";
    for (std::size_t i = 0; i < h.counts.size(); ++i) {
        out += format_sig(h.lower + static_cast<double>(i) * h.width, 8) + ',' + std::to_string(h.counts[i]) + '\n';
    }
    return out;
}

std::string mc_summary_json(const McResult& r) {
    nlohmann::ordered_json j;
    j["mean"] = r.mean_s;
    j["sigma"] = r.sigma_s;
    j["cv"] = r.cv;
    j["failures"] = r.failures;
    j["trials"] = r.trials;
    return j.dump(2);
}

std::vector<SensitivityRow> vbb_sensitivity_report(const std::vector<double>& grid, const VoltageMap& vmap,
                                                   const PrimitiveOptions& options) {
    std::vector<SensitivityRow> rows;
    for (const auto& kind : all_primitives()) {
        rows.push_back({kind.name(), vbb_functional_window(kind, grid, vmap, options)});
    }
    return rows;
}

std::string sensitivity_to_csv(const std::vector<SensitivityRow>& rows) {
    std::string out = "primitive,window";
    if (!rows.empty()) {
        for (const auto& g : rows.front().window.grid) {
            out += ",f" + format_sig(g.first, 4);
        }
    }
    out += '\n';
    for (const auto& r : rows) {
        out += r.primitive + ',' + format_sig(r.window.window);
        for (const auto& g : r.window.grid) {
            out += g.second ? ",pass" : ",fail";
        }
        out += '\n';
    }
    return out;
}

}  // namespace mvroute
