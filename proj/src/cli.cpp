#include "mvroute/cli.hpp"

#include "mvroute/arch.hpp"
#include "mvroute/config.hpp"
#include "mvroute/errors.hpp"
#include "mvroute/format.hpp"
#include "mvroute/interconnect.hpp"
#include "mvroute/variability.hpp"
#include "mvroute/verify.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <cstdlib>
#include <fstream>
#include <functional>
#include <sstream>
#include <utility>

namespace mvroute {

namespace {

using json = nlohmann::ordered_json;

struct Override {
    std::string section;
    std::string key;
    std::string value;
};

struct State {
    std::string config_path;
    bool json = false;
    std::string out_path;
    std::vector<Override> overrides;
};

// Flag that writes straight into a config key, in command-line order.
void bind(CLI::App* sub, State& st, const std::string& flag, const std::string& section, const std::string& key,
          const std::string& help) {
    sub->add_option_function<std::string>(
        flag, [&st, section, key](const std::string& v) { st.overrides.push_back({section, key, v}); }, help);
}

RunConfig build_config(const State& st) {
    RunConfig cfg;
    std::string path = st.config_path;
    if (path.empty()) {
        if (const char* env = std::getenv(kConfigEnvVar)) {
            path = env;
        }
    }
    if (!path.empty()) {
        std::ifstream in(path);
        if (!in) {
            throw ConfigError("cannot open config file '" + path + "'");
        }
        std::ostringstream text;
        text << in.rdbuf();
        overlay_config(cfg, text.str(), path);
    }
    for (const auto& o : st.overrides) {
        cfg.set(o.section, o.key, o.value);
    }
    cfg.validate();
    return cfg;
}

std::string csv_number(double v) {
    return format_sig(v, 6);
}

// --- energy ---

int cmd_energy(const RunConfig& cfg, int radix, const std::string& cap_text, bool as_json, std::string& out) {
    const Radix r(radix);
    const double cap = parse_quantity(cap_text, "F", "--cap");
    const auto table = transition_energy_table(cap, VoltageMap(r, cfg.tech.vdd, cfg.tech.vboost));
    if (as_json) {
        json j;
        j["radix"] = radix;
        j["vdd"] = cfg.tech.vdd;
        j["cap"] = cap;
        j["matrix"] = table.entries;
        j["average"] = table.average;
        out = j.dump(2) + "\n";
        return kExitOk;
    }
    out = "from";
    for (int b = 0; b < radix; ++b) {
        out += ",to_" + std::to_string(b);
    }
    out += '\n';
    for (int a = 0; a < radix; ++a) {
        out += std::to_string(a);
        for (int b = 0; b < radix; ++b) {
            out += ',' + csv_number(table.entries[a][b]);
        }
        out += '\n';
    }
    out += "average," + csv_number(table.average) + '\n';
    return kExitOk;
}

// --- delay-ratio ---

struct DelayRatioArgs {
    std::string ceff, cl, vtn, vtn_prime;
};

int cmd_delay_ratio(const RunConfig& cfg, const DelayRatioArgs& a, bool as_json, std::string& out) {
    TrackConfig q = cfg.exp.track();
    TrackConfig b = q;
    b.radix = 2;
    const double ceff = a.ceff.empty() ? effective_capacitance(cfg.tech.wire(q), cfg.tech.ceff)
                                       : parse_quantity(a.ceff, "F", "--ceff");
    const double cl = a.cl.empty() ? q.loads_per_segment * cfg.tech.loads.c_load_binary
                                   : parse_quantity(a.cl, "F", "--cl");
    const double vtn = a.vtn.empty() ? driver_stage(b, cfg.tech).vt : parse_quantity(a.vtn, "V", "--vtn");
    const double vtnp =
        a.vtn_prime.empty() ? driver_stage(q, cfg.tech).vt : parse_quantity(a.vtn_prime, "V", "--vtn-prime");
    const double eta = cfg.tech.delay.eta;
    std::vector<std::pair<std::string, double>> rows{
        {"ceff_f", ceff},
        {"cl_f", cl},
        {"vtn", vtn},
        {"vtn_prime", vtnp},
        {"eta", eta},
        {"energy_ratio", energy_ratio_quaternary(ceff, cl)},
        {"energy_ratio_limit", average_energy_coefficient(Radix(4)).value() / average_energy_coefficient(Radix(2)).value() / 2.0},
        {"delay_ratio", delay_ratio_quaternary(ceff, cl, cfg.tech.vdd, vtn, vtnp, eta)},
        {"delay_ratio_long_wire", delay_ratio_long_wire(cfg.tech.vdd, vtn, vtnp, eta)},
    };
    if (as_json) {
        json j;
        for (const auto& [k, v] : rows) {
            j[k] = v;
        }
        out = j.dump(2) + "\n";
    } else {
        out = "quantity,value\n";
        for (const auto& [k, v] : rows) {
            out += k + ',' + csv_number(v) + '\n';
        }
    }
    return kExitOk;
}

// --- track-sweep ---

int cmd_track_sweep(const RunConfig& cfg, bool as_json, std::string& out) {
    const auto rows = sweep_track_length(cfg.exp.lengths, cfg.exp.track(), cfg.tech, cfg.exp.cycle_time(),
                                         cfg.exp.mc.seed);
    if (as_json) {
        json j = json::array();
        for (const auto& r : rows) {
            j.push_back({{"length_units", r.length_units},
                         {"delay_ratio", r.delay_ratio},
                         {"dyn_energy_ratio", r.dyn_energy_ratio},
                         {"leak_ratio", r.leak_ratio},
                         {"edp_ratio", r.edp_ratio}});
        }
        out = j.dump(2) + "\n";
    } else {
        out = sweep_to_csv(rows);
    }
    return kExitOk;
}

// --- arch-compare ---

constexpr double kClaimedReduction = 0.10;

int cmd_arch_compare(const RunConfig& cfg, bool as_json, std::string& out) {
    ArchitectureSpec b = cfg.arch;
    b.style = ArchStyle::BinaryBus2;
    ArchitectureSpec q = cfg.arch;
    q.style = ArchStyle::Quaternary;
    const auto rb = tile_resources(b);
    const auto rq = tile_resources(q);
    if (as_json) {
        json j;
        j["binary"] = json::parse(report_to_json(rb));
        j["quaternary"] = json::parse(report_to_json(rq));
        j["reduction_vs_baseline"] = rq.reduction_vs_baseline;
        j["claimed_reduction"] = kClaimedReduction;
        out = j.dump(2) + "\n";
    } else {
        out = report_to_table(rb) + "\n" + report_to_table(rq) + "\ncomputed reduction " +
              format_sig(100.0 * rq.reduction_vs_baseline, 4) + "% (claimed ~" +
              format_sig(100.0 * kClaimedReduction, 3) + "%)\n";
    }
    return kExitOk;
}

// --- mc ---

json mc_json(const McResult& r) {
    return json::parse(mc_summary_json(r));
}

int cmd_mc(const RunConfig& cfg, const std::string& histogram_arm, bool as_json, std::string& out) {
    const auto c = compare_variability(cfg.exp.mc, cfg.exp.track(), cfg.tech);
    for (const auto* r : {&c.quaternary, &c.binary}) {
        if (static_cast<int>(r->delays_s.size()) + r->failures != r->trials ||
            r->histogram.total() != static_cast<long long>(r->delays_s.size())) {
            out = "internal check failed: trial accounting\n";
            return kExitVerification;
        }
    }
    if (!histogram_arm.empty()) {
        const McResult& r = histogram_arm == "quaternary" ? c.quaternary : c.binary;
        if (as_json) {
            json j;
            j["bin_lower_s"] = json::array();
            j["count"] = json::array();
            for (std::size_t i = 0; i < r.histogram.counts.size(); ++i) {
                j["bin_lower_s"].push_back(r.histogram.lower + static_cast<double>(i) * r.histogram.width);
                j["count"].push_back(r.histogram.counts[i]);
            }
            out = j.dump(2) + "\n";
        } else {
            out = histogram_to_csv(r.histogram);
        }
        return kExitOk;
    }
    if (as_json) {
        json j;
        j["quaternary"] = mc_json(c.quaternary);
        j["binary"] = mc_json(c.binary);
        j["cv_ratio"] = c.ratio;
        j["reference_cv_quaternary"] = VariabilityComparison::reference_cv_quaternary;
        j["reference_cv_binary"] = VariabilityComparison::reference_cv_binary;
        j["reference_cv_ratio"] = VariabilityComparison::reference_ratio;
        out = j.dump(2) + "\n";
        return kExitOk;
    }
    out = "arm,mean_s,sigma_s,cv,failures,trials\n";
    for (const auto& [name, r] : {std::pair<std::string, const McResult*>{"quaternary", &c.quaternary},
                                  std::pair<std::string, const McResult*>{"binary", &c.binary}}) {
        out += name + ',' + csv_number(r->mean_s) + ',' + csv_number(r->sigma_s) + ',' + csv_number(r->cv) + ',' +
               std::to_string(r->failures) + ',' + std::to_string(r->trials) + '\n';
    }
    out += "cv_ratio," + csv_number(c.ratio) + ",reference," + csv_number(VariabilityComparison::reference_ratio) + ",,\n";
    return kExitOk;
}

// --- sensitivity ---

int cmd_sensitivity(const RunConfig& cfg, const std::string& grid_text, bool as_json, std::string& out) {
    std::vector<double> grid = default_vbb_grid();
    if (!grid_text.empty()) {
        grid = parse_number_list(grid_text);
    }
    const VoltageMap vmap(Radix(4), cfg.tech.vdd, cfg.tech.vboost);
    const auto rows = vbb_sensitivity_report(grid, vmap, cfg.tech.primitives);
    bool ok = true;
    for (const auto& r : rows) {
        for (const auto& [f, pass] : r.window.grid) {
            if (f <= 0.10 + 1e-12 && !pass) {
                ok = false;
            }
        }
    }
    if (as_json) {
        json j = json::array();
        for (const auto& r : rows) {
            json g = json::array();
            for (const auto& [f, pass] : r.window.grid) {
                g.push_back({{"fraction", f}, {"pass", pass}});
            }
            j.push_back({{"primitive", r.primitive}, {"window", r.window.window}, {"grid", g}});
        }
        out = j.dump(2) + "\n";
    } else {
        out = sensitivity_to_csv(rows);
    }
    return ok ? kExitOk : kExitVerification;
}

// --- testvec ---

int cmd_testvec(int radix, std::uint64_t seed, bool as_json, std::string& out) {
    const auto v = transition_complete_sequence(Radix(radix), seed);
    for (const auto& [pair, count] : v.coverage) {
        if (count != 1) {
            out = "internal check failed: transition coverage\n";
            return kExitVerification;
        }
    }
    if (as_json) {
        json j;
        j["radix"] = radix;
        j["seed"] = seed;
        j["sequence"] = v.sequence;
        out = j.dump(2) + "\n";
        return kExitOk;
    }
    out.clear();
    for (std::size_t i = 0; i < v.sequence.size(); ++i) {
        out += (i ? "," : "") + std::to_string(v.sequence[i]);
    }
    out += '\n';
    return kExitOk;
}

// --- verify ---

int cmd_verify(const RunConfig& cfg, bool as_json, std::string& out) {
    const VoltageMap vmap(Radix(4), cfg.tech.vdd, cfg.tech.vboost);
    const auto suites = run_truth_table_suites(vmap, cfg.tech.primitives);
    bool ok = true;
    json j = json::array();
    out.clear();
    for (const auto& s : suites) {
        ok = ok && s.ok();
        out += std::string(s.ok() ? "PASS " : "FAIL ") + s.name + " " + std::to_string(s.passed) + "/" +
               std::to_string(s.total) + "\n";
        for (const auto& f : s.failures) {
            out += "  mismatch: " + f + "\n";
        }
        j.push_back({{"suite", s.name}, {"passed", s.passed}, {"total", s.total}, {"failures", s.failures}});
    }
    if (as_json) {
        out = j.dump(2) + "\n";
    }
    return ok ? kExitOk : kExitVerification;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    State st;
    CLI::App app{"Multi-valued FPGA routing evaluator: energy, delay, area and variability of quaternary tracks",
                 "mvroute"};
    app.fallthrough();
    app.require_subcommand(1);
    app.add_option("--config", st.config_path,
                   std::string("INI config file; defaults to $") + kConfigEnvVar + " when set");
    app.add_flag("--json", st.json, "emit JSON instead of CSV/text");
    app.add_option("--out", st.out_path, "write the report to FILE instead of stdout");
    app.add_option_function<std::vector<std::string>>(
        "--set",
        [&st](const std::vector<std::string>& items) {
            for (const auto& item : items) {
                const auto dot = item.find('.');
                const auto eq = item.find('=');
                if (dot == std::string::npos || eq == std::string::npos || dot > eq) {
                    throw CLI::ValidationError("--set", "expected section.key=value, got '" + item + "'");
                }
                st.overrides.push_back({item.substr(0, dot), item.substr(dot + 1, eq - dot - 1), item.substr(eq + 1)});
            }
        },
        "override any config key: section.key=value (repeatable)");
    app.footer("Exit codes: 0 success, 1 usage or config error, 2 internal verification failure.\n"
               "Precedence: built-in defaults < config file < command-line flags.");

    int radix = 4;
    std::string cap = "1";
    auto* energy = app.add_subcommand("energy", "Per-transition switching energy matrix and its average");
    energy->footer("Reproduces: the transition energy table (average 0.5 / 0.333 / 0.278 C*vdd^2 for R = 2/3/4).");
    energy->add_option("--radix", radix, "levels per wire (2, 3 or 4)");
    energy->add_option("--cap", cap, "switched capacitance, farads (suffixes accepted)");
    bind(energy, st, "--vdd", "technology", "vdd", "supply voltage");

    DelayRatioArgs dr;
    auto* delay = app.add_subcommand("delay-ratio", "Closed-form quaternary/binary energy and delay ratios");
    delay->footer("Reproduces: the closed-form energy ratio, delay ratio and long-wire delay limit.");
    delay->add_option("--ceff", dr.ceff, "effective wire capacitance (default: one unit of wire)");
    delay->add_option("--cl", dr.cl, "binary load capacitance (default: loads * c_load)");
    delay->add_option("--vtn", dr.vtn, "binary driving threshold (default: binary buffer)");
    delay->add_option("--vtn-prime", dr.vtn_prime, "quaternary driving threshold (default: mode preset)");
    bind(delay, st, "--vdd", "technology", "vdd", "supply voltage");
    bind(delay, st, "--eta", "technology", "eta", "alpha-power exponent");
    bind(delay, st, "--mode", "experiment", "mode", "FAST, STD or LL");

    auto* sweep = app.add_subcommand("track-sweep", "Quaternary/binary ratios versus routing track length");
    sweep->footer("Reproduces: the energy-delay versus track length plots (CSV analogue).");
    bind(sweep, st, "--lengths", "experiment", "lengths", "track lengths in unit multiples, e.g. 1,2,4,8");
    bind(sweep, st, "--mode", "experiment", "mode", "FAST, STD or LL");
    bind(sweep, st, "--cycle", "experiment", "cycle_s", "cycle time (default per mode: 10n/40n/70n)");
    bind(sweep, st, "--seed", "experiment", "seed", "test-vector seed");
    bind(sweep, st, "--unit-length", "experiment", "unit_length_um", "unit length, um");
    bind(sweep, st, "--loads", "experiment", "loads_per_segment", "input buffers per segment");

    auto* arch = app.add_subcommand("arch-compare", "Tile routing transistor counts, binary bus-2 vs quaternary");
    arch->footer("Reproduces: the routing resource table for 64 track pairs (15552 vs 14484.8 transistors).");
    bind(arch, st, "--lof", "architecture", "lof", "layout overhead factor");
    bind(arch, st, "--tracks", "architecture", "tracks_w", "channel width W");
    bind(arch, st, "--fc-in", "architecture", "fc_in", "connection-box flexibility");

    std::string histogram_arm;
    auto* mc = app.add_subcommand("mc", "Monte-Carlo threshold mismatch on length-6 tracks");
    mc->footer("Reproduces: the Monte-Carlo delay histograms and their sigma/mu comparison.");
    bind(mc, st, "--trials", "experiment", "trials", "number of trials");
    bind(mc, st, "--seed", "experiment", "seed", "random seed");
    bind(mc, st, "--sigma-vt", "experiment", "sigma_vt", "threshold std dev, volts");
    bind(mc, st, "--chain", "experiment", "chain_length", "segments per chain");
    bind(mc, st, "--threads", "experiment", "threads", "worker threads (results are identical)");
    bind(mc, st, "--bins", "experiment", "bins", "histogram bins");
    bind(mc, st, "--mode", "experiment", "mode", "FAST, STD or LL");
    mc->add_option("--histogram", histogram_arm, "emit the histogram of one arm instead of the summary")
        ->check(CLI::IsMember({"quaternary", "binary"}));

    std::string grid;
    auto* sens = app.add_subcommand("sensitivity", "Back-bias variation window of every primitive");
    sens->footer("Reproduces: the back-bias variation robustness claim (functional up to 10%).\n"
                 "Exits 2 if any primitive fails at or below 10%.");
    sens->add_option("--grid", grid, "comma-separated variation fractions (default 0..0.5 step 0.025)");
    bind(sens, st, "--placement", "technology", "threshold_placement", "DLC switching point within a step");

    int tv_radix = 4;
    std::uint64_t tv_seed = 0;
    auto* testvec = app.add_subcommand("testvec", "Transition-complete level sequence");
    testvec->footer("Reproduces: the test vectors that exercise every level transition exactly once.");
    testvec->add_option("--radix", tv_radix, "levels per wire (2, 3 or 4)");
    testvec->add_option("--seed", tv_seed, "sequence seed");

    auto* verify = app.add_subcommand("verify", "Truth tables of DLCs, repeater and translators via the solver");
    verify->footer("Reproduces: the DLC, repeater-state and translator truth tables. Exits 2 on any mismatch.");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    std::string report;
    int code = kExitOk;
    try {
        const RunConfig cfg = build_config(st);
        if (energy->parsed()) {
            code = cmd_energy(cfg, radix, cap, st.json, report);
        } else if (delay->parsed()) {
            code = cmd_delay_ratio(cfg, dr, st.json, report);
        } else if (sweep->parsed()) {
            code = cmd_track_sweep(cfg, st.json, report);
        } else if (arch->parsed()) {
            code = cmd_arch_compare(cfg, st.json, report);
        } else if (mc->parsed()) {
            code = cmd_mc(cfg, histogram_arm, st.json, report);
        } else if (sens->parsed()) {
            code = cmd_sensitivity(cfg, grid, st.json, report);
        } else if (testvec->parsed()) {
            code = cmd_testvec(tv_radix, tv_seed, st.json, report);
        } else if (verify->parsed()) {
            code = cmd_verify(cfg, st.json, report);
        }
    } catch (const ConfigError& e) {
        err << "config error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    if (st.out_path.empty()) {
        out << report;
    } else {
        std::ofstream f(st.out_path, std::ios::binary);
        if (!f) {
            err << "error: cannot write '" << st.out_path << "'\n";
            return kExitUsage;
        }
        f << report;
    }
    return code;
}

}  // namespace mvroute
