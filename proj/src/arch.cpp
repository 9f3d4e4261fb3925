#include "mvroute/arch.hpp"

#include "mvroute/errors.hpp"
#include "mvroute/format.hpp"

#include "json.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace mvroute {

namespace {

int log2_exact(long long n) {
    if (n < 2 || (n & (n - 1)) != 0) {
        return -1;
    }
    int bits = 0;
    while (n > 1) {
        n >>= 1;
        ++bits;
    }
    return bits;
}

long long cb_inputs(const ArchitectureSpec& s) {
    return std::llround(s.fc_in * s.tracks_w);
}

}  // namespace

std::string to_string(ArchStyle style) {
    return style == ArchStyle::BinaryBus2 ? "binary-bus2" : "quaternary";
}

int mux_transistor_count(int n_select, ArchStyle style) {
    if (n_select < 1 || n_select > 20) {
        throw DomainError("mux needs 1..20 select bits");
    }
    const int tree = (1 << (n_select + 1)) - 2;
    return 4 * n_select + (style == ArchStyle::BinaryBus2 ? 2 * tree : tree);
}

void ArchitectureSpec::validate() const {
    if (luts_per_clb < 1 || inputs_per_clb < 1 || outputs_per_clb < 1 || tracks_w < 1 || sb_muxes_per_track < 0 ||
        buffers_per_track < 0 || repeaters_per_track < 0) {
        throw ConfigError("architecture counts must be positive");
    }
    if (!(fc_in > 0.0) || fc_in > 1.0) {
        throw ConfigError("fc_in must lie in (0, 1]");
    }
    if (!(lof >= 1.0)) {
        throw ConfigError("lof must be >= 1");
    }
    const double inputs = fc_in * tracks_w;
    if (std::abs(inputs - std::round(inputs)) > 1e-9 || log2_exact(cb_inputs(*this)) < 0) {
        throw ConfigError("fc_in * tracks_w must be a power of two >= 2 (got " + format_sig(inputs) + ")");
    }
    if (log2_exact(sb_mux_inputs) < 0) {
        throw ConfigError("sb_mux_inputs must be a power of two >= 2");
    }
}

long long ResourceReport::truncated_total() const {
    return static_cast<long long>(std::floor(total_transistors + 1e-9));
}

namespace {

std::vector<LineItem> items_for(const ArchitectureSpec& s, ArchStyle style) {
    const int sb_bits = log2_exact(s.sb_mux_inputs);
    const int cb_bits = log2_exact(cb_inputs(s));
    const double w = s.tracks_w;
    std::vector<LineItem> items;
    auto add = [&](std::string name, double units, int each, bool lof) {
        const double sub = units * each * (lof ? s.lof : 1.0);
        items.push_back({std::move(name), units, each, lof, sub});
    };
    if (style == ArchStyle::BinaryBus2) {
        add("switchbox muxes", s.sb_muxes_per_track * w, mux_transistor_count(sb_bits, style), false);
        add("buffers", s.buffers_per_track * w, kBinaryBufferTransistors, false);
        add("connection-box muxes", s.inputs_per_clb, mux_transistor_count(cb_bits, style), false);
    } else {
        add("switchbox muxes", s.sb_muxes_per_track * w, mux_transistor_count(sb_bits, style), false);
        add("repeaters", s.repeaters_per_track * w, kQuaternaryRepeaterTransistors, true);
        add("connection-box muxes", s.inputs_per_clb, mux_transistor_count(cb_bits, style), false);
        add("4-2 translators", s.inputs_per_clb, kTranslator4to2Transistors, true);
        add("2-4 translators", s.outputs_per_clb, kTranslator2to4Transistors, true);
    }
    return items;
}

double total_of(const std::vector<LineItem>& items) {
    double t = 0.0;
    for (const auto& i : items) {
        t += i.subtotal;
    }
    return t;
}

}  // namespace

ResourceReport tile_resources(const ArchitectureSpec& spec) {
    spec.validate();
    ResourceReport r;
    r.style = spec.style;
    r.items = items_for(spec, spec.style);
    r.total_transistors = total_of(r.items);
    const double baseline = total_of(items_for(spec, ArchStyle::BinaryBus2));
    r.reduction_vs_baseline = 1.0 - r.total_transistors / baseline;
    return r;
}

std::string report_to_json(const ResourceReport& report) {
    nlohmann::ordered_json j;
    j["style"] = to_string(report.style);
    j["items"] = nlohmann::ordered_json::array();
    for (const auto& i : report.items) {
        j["items"].push_back({{"name", i.name},
                              {"units", i.units},
                              {"transistors_each", i.transistors_each},
                              {"lof_applied", i.lof_applied},
                              {"subtotal", i.subtotal}});
    }
    j["total_transistors"] = report.total_transistors;
    j["total_transistors_truncated"] = report.truncated_total();
    j["reduction_vs_baseline"] = report.reduction_vs_baseline;
    return j.dump(2);
}

std::string report_to_table(const ResourceReport& report) {
    std::size_t name_w = 5;
    for (const auto& i : report.items) {
        name_w = std::max(name_w, i.name.size());
    }
    std::ostringstream os;
    auto pad = [](std::string s, std::size_t w, bool right) {
        if (s.size() >= w) return s;
        return right ? std::string(w - s.size(), ' ') + s : s + std::string(w - s.size(), ' ');
    };
    os << to_string(report.style) << '\n';
    os << pad("item", name_w, false) << "  " << pad("units", 8, true) << "  " << pad("T each", 6, true) << "  "
       << pad("LOF", 3, true) << "  " << pad("subtotal", 10, true) << '\n';
    for (const auto& i : report.items) {
        os << pad(i.name, name_w, false) << "  " << pad(format_sig(i.units), 8, true) << "  "
           << pad(std::to_string(i.transistors_each), 6, true) << "  " << pad(i.lof_applied ? "yes" : "no", 3, true)
           << "  " << pad(format_sig(i.subtotal, 8), 10, true) << '\n';
    }
    os << pad("TOTAL", name_w, false) << "  " << pad("", 8, true) << "  " << pad("", 6, true) << "  "
       << pad("", 3, true) << "  " << pad(format_sig(report.total_transistors, 8), 10, true) << "  (truncated "
       << report.truncated_total() << ")\n";
    os << "reduction vs binary bus-2: " << format_sig(100.0 * report.reduction_vs_baseline, 4) << "%\n";
    return os.str();
}

double wire_area_reduction(int radix) {
    switch (radix) {
        case 2: return 0.0;
        case 3: return 1.0 / 3.0;  // 2 ternary wires carry what 3 binary wires do
        case 4: return 0.5;
        default: throw DomainError("wire area reduction is defined for radix 2, 3 and 4");
    }
}

double layout_adjusted_routing_gain(const AreaFactors& f) {
    if (f.signal_layers < 1) {
        throw DomainError("need at least one signal layer");
    }
    if (f.wire_reduction < 0.0 || f.wire_reduction > 1.0 || f.m2_supply_overhead < 0.0 ||
        f.m2_supply_overhead > f.wire_reduction) {
        throw DomainError("area fractions must lie in [0, 1] with overhead <= wire reduction");
    }
    return ((f.signal_layers - 1) * f.wire_reduction + (f.wire_reduction - f.m2_supply_overhead)) / f.signal_layers;
}

}  // namespace mvroute
