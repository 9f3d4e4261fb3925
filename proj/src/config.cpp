#include "mvroute/config.hpp"

#include "mvroute/errors.hpp"
#include "mvroute/format.hpp"

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include <cmath>
#include <fstream>
#include <functional>
#include <limits>
#include <sstream>

namespace mvroute {

namespace {

std::string trim(std::string s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) {
        return {};
    }
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

using Setter = std::function<void(RunConfig&, const std::string&, const std::string&)>;

struct Entry {
    ConfigKey key;
    Setter set;
};

}  // namespace

double parse_quantity(const std::string& raw, const std::string& unit, const std::string& name) {
    std::string text = trim(raw);
    if (!unit.empty() && text.size() > unit.size() && text.compare(text.size() - unit.size(), unit.size(), unit) == 0) {
        text = trim(text.substr(0, text.size() - unit.size()));
    }
    double v = 0.0;
    if (!parse_number(text, v, true)) {
        throw ConfigError(name + ": cannot read '" + raw + "' as a number" + (unit.empty() ? "" : " of " + unit));
    }
    return v;
}

namespace {

double positive(double v, const std::string& name) {
    if (!(v > 0.0)) {
        throw ConfigError(name + " must be positive");
    }
    return v;
}

int integer(double v, const std::string& name, long long lo = 0, long long hi = std::numeric_limits<int>::max()) {
    if (v != std::floor(v) || v < static_cast<double>(lo) || v > static_cast<double>(hi)) {
        throw ConfigError(name + " must be an integer in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
    }
    return static_cast<int>(v);
}

Entry num(std::string section, std::string key, std::string unit, std::string help,
          std::function<void(RunConfig&, double, const std::string&)> apply) {
    ConfigKey k{std::move(section), std::move(key), unit, std::move(help)};
    return {k, [apply, unit](RunConfig& c, const std::string& raw, const std::string& name) {
                apply(c, parse_quantity(raw, unit, name), name);
            }};
}

Entry text(std::string section, std::string key, std::string help, Setter apply) {
    return {ConfigKey{std::move(section), std::move(key), "", std::move(help)}, std::move(apply)};
}

const std::vector<Entry>& entries() {
    static const std::vector<Entry> table = [] {
        std::vector<Entry> t;
        // technology
        t.push_back(num("technology", "vdd", "V", "supply, top quaternary level", [](RunConfig& c, double v, auto& n) {
            c.tech.vdd = positive(v, n);
        }));
        t.push_back(num("technology", "vboost", "V", "boosted mux select level", [](RunConfig& c, double v, auto& n) {
            c.tech.vboost = positive(v, n);
        }));
        t.push_back(num("technology", "k_bb", "V/V", "Vt shift per volt of back-bias",
                        [](RunConfig& c, double v, auto& n) { c.tech.primitives.devices.k_bb = positive(v, n); }));
        t.push_back(num("technology", "swing", "V", "subthreshold swing per decade",
                        [](RunConfig& c, double v, auto& n) { c.tech.leakage.swing = positive(v, n); }));
        t.push_back(num("technology", "i0", "A", "leakage at vt_ref, unit width",
                        [](RunConfig& c, double v, auto& n) { c.tech.leakage.i0 = positive(v, n); }));
        t.push_back(num("technology", "vt_ref", "V", "leakage calibration threshold",
                        [](RunConfig& c, double v, auto&) { c.tech.leakage.vt_ref = v; }));
        t.push_back(num("technology", "eta", "", "alpha-power exponent, 1..2", [](RunConfig& c, double v, auto& n) {
            if (v < 1.0 || v > 2.0) {
                throw ConfigError(n + " must lie in [1, 2]");
            }
            c.tech.delay.eta = v;
        }));
        t.push_back(num("technology", "k_tech", "", "delay prefactor (cancels in ratios)",
                        [](RunConfig& c, double v, auto& n) { c.tech.delay.k_tech = positive(v, n); }));
        t.push_back(num("technology", "wire_r_per_um", "ohm/um", "wire resistance",
                        [](RunConfig& c, double v, auto& n) {
                            if (v < 0.0) throw ConfigError(n + " must be nonnegative");
                            c.tech.r_per_um = v;
                        }));
        t.push_back(num("technology", "wire_c_per_um", "F/um", "wire capacitance",
                        [](RunConfig& c, double v, auto& n) { c.tech.c_per_um = positive(v, n); }));
        t.push_back(num("technology", "c_load", "F", "binary buffer input capacitance",
                        [](RunConfig& c, double v, auto& n) { c.tech.loads.c_load_binary = positive(v, n); }));
        t.push_back(text("technology", "ceff", "lumped | first_order", [](RunConfig& c, const std::string& raw, auto& n) {
            const std::string v = trim(raw);
            if (v == "lumped") {
                c.tech.ceff.first_order = false;
            } else if (v == "first_order") {
                c.tech.ceff.first_order = true;
            } else {
                throw ConfigError(n + " must be lumped or first_order");
            }
        }));
        t.push_back(num("technology", "driver_resistance", "ohm", "driver resistance for first_order ceff",
                        [](RunConfig& c, double v, auto& n) { c.tech.ceff.driver_resistance = positive(v, n); }));
        t.push_back(num("technology", "threshold_placement", "", "DLC switching point within a level step",
                        [](RunConfig& c, double v, auto& n) {
                            if (!(v > 0.0) || !(v < 1.0)) throw ConfigError(n + " must lie in (0, 1)");
                            c.tech.primitives.threshold_placement = v;
                        }));
        t.push_back(num("technology", "pass_vt", "V", "mux/translator pass device threshold",
                        [](RunConfig& c, double v, auto& n) { c.tech.primitives.pass_vt = positive(v, n); }));
        t.push_back(num("technology", "fast_vbb", "V", "FAST driving-stage forward bias",
                        [](RunConfig& c, double v, auto&) { c.tech.primitives.devices.modes.fast_vbb = v; }));
        t.push_back(num("technology", "std_vbb", "V", "STD driving-stage forward bias",
                        [](RunConfig& c, double v, auto&) { c.tech.primitives.devices.modes.std_vbb = v; }));
        t.push_back(num("technology", "ll_vbb", "V", "LL driving-stage forward bias",
                        [](RunConfig& c, double v, auto&) { c.tech.primitives.devices.modes.ll_vbb = v; }));
        // architecture
        auto arch_int = [&t](std::string key, std::string help, int ArchitectureSpec::*field) {
            t.push_back(num("architecture", std::move(key), "", std::move(help),
                            [field](RunConfig& c, double v, auto& n) { c.arch.*field = integer(v, n, 1); }));
        };
        arch_int("luts_per_clb", "LUTs per CLB", &ArchitectureSpec::luts_per_clb);
        arch_int("inputs_per_clb", "CLB input pins", &ArchitectureSpec::inputs_per_clb);
        arch_int("outputs_per_clb", "CLB output pins", &ArchitectureSpec::outputs_per_clb);
        arch_int("tracks_w", "routing channel width W", &ArchitectureSpec::tracks_w);
        t.push_back(num("architecture", "fc_in", "", "connection-box flexibility",
                        [](RunConfig& c, double v, auto&) { c.arch.fc_in = v; }));
        t.push_back(num("architecture", "lof", "", "layout overhead factor",
                        [](RunConfig& c, double v, auto&) { c.arch.lof = v; }));
        arch_int("sb_muxes_per_track", "switchbox muxes per track", &ArchitectureSpec::sb_muxes_per_track);
        arch_int("sb_mux_inputs", "switchbox mux fan-in", &ArchitectureSpec::sb_mux_inputs);
        arch_int("buffers_per_track", "binary buffers per track", &ArchitectureSpec::buffers_per_track);
        arch_int("repeaters_per_track", "quaternary repeaters per track", &ArchitectureSpec::repeaters_per_track);
        // experiment
        t.push_back(text("experiment", "lengths", "track lengths in unit multiples, comma separated",
                         [](RunConfig& c, const std::string& raw, auto& n) {
                             try {
                                 c.exp.lengths = parse_number_list(raw);
                             } catch (const ConfigError& e) {
                                 throw ConfigError(n + ": " + e.what());
                             }
                         }));
        t.push_back(text("experiment", "mode", "FAST | STD | LL", [](RunConfig& c, const std::string& raw, auto& n) {
            try {
                c.exp.mode = parse_repeater_mode(trim(raw));
            } catch (const DomainError& e) {
                throw ConfigError(n + ": " + e.what());
            }
        }));
        t.push_back(num("experiment", "cycle_s", "s", "cycle time, 0 for the mode default",
                        [](RunConfig& c, double v, auto& n) {
                            if (v < 0.0) throw ConfigError(n + " must be nonnegative");
                            c.exp.cycle_s = v;
                        }));
        t.push_back(num("experiment", "unit_length_um", "um", "one track length unit",
                        [](RunConfig& c, double v, auto& n) { c.exp.unit_length_um = positive(v, n); }));
        t.push_back(num("experiment", "loads_per_segment", "", "input buffers per segment",
                        [](RunConfig& c, double v, auto& n) { c.exp.loads_per_segment = integer(v, n, 0); }));
        t.push_back(num("experiment", "trials", "", "Monte-Carlo trials",
                        [](RunConfig& c, double v, auto& n) { c.exp.mc.trials = integer(v, n, 2); }));
        t.push_back(num("experiment", "seed", "", "random seed", [](RunConfig& c, double v, auto& n) {
            if (v < 0.0 || v != std::floor(v) || v > 9.007199254740992e15) {
                throw ConfigError(n + " must be a nonnegative integer below 2^53");
            }
            c.exp.mc.seed = static_cast<std::uint64_t>(v);
        }));
        t.push_back(num("experiment", "sigma_vt", "V", "threshold mismatch std dev",
                        [](RunConfig& c, double v, auto& n) {
                            if (v < 0.0) throw ConfigError(n + " must be nonnegative");
                            c.exp.mc.sigma_vt = v;
                        }));
        t.push_back(num("experiment", "chain_length", "", "Monte-Carlo chain segments",
                        [](RunConfig& c, double v, auto& n) { c.exp.mc.chain_length = integer(v, n, 1); }));
        t.push_back(num("experiment", "threads", "", "Monte-Carlo worker threads",
                        [](RunConfig& c, double v, auto& n) { c.exp.mc.threads = integer(v, n, 1, 256); }));
        t.push_back(num("experiment", "bins", "", "histogram bins",
                        [](RunConfig& c, double v, auto& n) { c.exp.mc.bins = integer(v, n, 1, 100000); }));
        return t;
    }();
    return table;
}

}  // namespace

TrackConfig ExperimentConfig::track() const {
    TrackConfig t;
    t.unit_length_um = unit_length_um;
    t.loads_per_segment = loads_per_segment;
    t.mode = mode;
    return t;
}

const std::vector<ConfigKey>& config_keys() {
    static const std::vector<ConfigKey> keys = [] {
        std::vector<ConfigKey> k;
        for (const auto& e : entries()) {
            k.push_back(e.key);
        }
        return k;
    }();
    return keys;
}

std::vector<double> parse_number_list(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        double v = 0.0;
        if (!parse_number(trim(item), v, true) || v < 0.0) {
            throw ConfigError("bad list entry '" + trim(item) + "'");
        }
        out.push_back(v);
    }
    if (out.empty()) {
        throw ConfigError("empty list");
    }
    return out;
}

void RunConfig::set(const std::string& section, const std::string& key, const std::string& value) {
    const std::string name = section + "." + key;
    for (const auto& e : entries()) {
        if (e.key.section == section && e.key.key == key) {
            e.set(*this, value, name);
            return;
        }
    }
    throw ConfigError("unknown config key '" + name + "'");
}

void RunConfig::validate() const {
    if (tech.vboost < tech.vdd) {
        throw ConfigError("technology.vboost must not be below technology.vdd");
    }
    try {
        arch.validate();
    } catch (const ConfigError& e) {
        throw ConfigError(std::string("architecture: ") + e.what());
    }
    if (exp.lengths.empty()) {
        throw ConfigError("experiment.lengths is empty");
    }
}

void overlay_config(RunConfig& cfg, const std::string& text, const std::string& source) {
    namespace pt = boost::property_tree;
    pt::ptree tree;
    std::istringstream in(text);
    try {
        pt::read_ini(in, tree);
    } catch (const pt::ini_parser_error& e) {
        throw ConfigError(source + ":" + std::to_string(e.line()) + ": " + e.message());
    }
    for (const auto& [section, body] : tree) {
        if (body.empty() && !body.data().empty()) {
            throw ConfigError(source + ": key '" + section + "' outside a section");
        }
        if (section != "technology" && section != "architecture" && section != "experiment") {
            throw ConfigError(source + ": unknown section [" + section + "]");
        }
        for (const auto& [key, node] : body) {
            try {
                cfg.set(section, key, node.data());
            } catch (const ConfigError& e) {
                throw ConfigError(source + ": " + e.what());
            }
        }
    }
}

RunConfig parse_config(const std::string& text, const std::string& source) {
    RunConfig cfg;
    overlay_config(cfg, text, source);
    cfg.validate();
    return cfg;
}

RunConfig load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open config file '" + path + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str(), path);
}

}  // namespace mvroute
