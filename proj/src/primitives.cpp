#include "mvroute/primitives.hpp"

#include "mvroute/errors.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>

namespace mvroute {

TransistorSpec DeviceLibrary::for_threshold(Polarity polarity, double target_vt, double width) const {
    TransistorSpec s;
    s.polarity = polarity;
    s.width_mult = width;
    const double lvt_low = lvt_vt0 - k_bb * lvt_fbb_headroom;
    const double lvt_high = lvt_vt0 - k_bb * lvt_rbb_headroom;
    const double rvt_low = rvt_vt0 - k_bb * rvt_fbb_headroom;
    const double rvt_high = rvt_vt0 - k_bb * rvt_rbb_headroom;

    if (target_vt <= lvt_high) {
        s.flavor = Flavor::LVT;
        s.vt0 = lvt_vt0;
        s.vbb = (lvt_vt0 - target_vt) / k_bb;
        if (target_vt < lvt_low && s.vbb > legal_bias_window(Flavor::LVT).max_vbb) {
            throw DomainError("threshold " + std::to_string(target_vt) + " V is below the reach of forward bias");
        }
    } else if (target_vt < rvt_low) {
        s.flavor = Flavor::LVT;
        s.vt0 = lvt_vt0;
        s.vbb = lvt_rbb_headroom;
        s.poly_bias_dvt = target_vt - lvt_high;
    } else if (target_vt <= rvt_high) {
        s.flavor = Flavor::RVT;
        s.vt0 = rvt_vt0;
        s.vbb = (rvt_vt0 - target_vt) / k_bb;
    } else {
        s.flavor = Flavor::RVT;
        s.vt0 = rvt_vt0;
        s.vbb = rvt_rbb_headroom;
        s.poly_bias_dvt = target_vt - rvt_high;
    }
    if (std::abs(s.vbb) < 1e-15) {
        s.vbb = 0.0;
    }
    return s;
}

TransistorSpec DeviceLibrary::driving(Polarity polarity, RepeaterMode mode, double width) const {
    TransistorSpec s;
    s.polarity = polarity;
    s.flavor = Flavor::LVT;
    s.vt0 = lvt_vt0;
    s.vbb = modes.vbb(mode);
    s.width_mult = width;
    return s;
}

PrimitiveKind PrimitiveKind::dlc(int which) {
    switch (which) {
        case 0: return PrimitiveKind(Type::DLC0, 0);
        case 1: return PrimitiveKind(Type::DLC1, 0);
        case 2: return PrimitiveKind(Type::DLC2, 0);
        default: throw DomainError("DLC index must be 0, 1 or 2");
    }
}

PrimitiveKind PrimitiveKind::mux(int select_bits) {
    if (select_bits < 1 || select_bits > 6) {
        throw DomainError("pass-mux tree needs 1..6 select bits");
    }
    return PrimitiveKind(Type::PassMuxTree, select_bits);
}

std::string PrimitiveKind::name() const {
    switch (type_) {
        case Type::DLC0: return "DLC0";
        case Type::DLC1: return "DLC1";
        case Type::DLC2: return "DLC2";
        case Type::QuaternaryRepeater: return "QuaternaryRepeater";
        case Type::PassMuxTree: return "PassMuxTree(" + std::to_string(select_bits_) + ")";
        case Type::Translator4to2: return "Translator4to2";
        case Type::Translator2to4: return "Translator2to4";
    }
    return "?";
}

std::vector<PrimitiveKind> all_primitives() {
    return {PrimitiveKind::dlc(0),       PrimitiveKind::dlc(1),           PrimitiveKind::dlc(2),
            PrimitiveKind::repeater(),   PrimitiveKind::mux(3),           PrimitiveKind::translator_4to2(),
            PrimitiveKind::translator_2to4()};
}

namespace {

const char* rail_name(int level) {
    static const char* names[] = {"VDD0", "VDD1", "VDD2", "VDD3"};
    return names[level];
}

void add_rails(Netlist& net, const VoltageMap& vmap) {
    for (int k = 0; k < 4; ++k) {
        net.add_rail(rail_name(k), voltage_of(k, vmap));
    }
}

void add_inverter(Netlist& net, const std::string& p, const std::string& n, const std::string& in,
                  const std::string& out, const std::string& high_rail, const std::string& low_rail,
                  const TransistorSpec& pspec, const TransistorSpec& nspec) {
    net.add_transistor(p, in, high_rail, out, pspec);
    net.add_transistor(n, in, low_rail, out, nspec);
}

/// Inverter between rails `lo` and `hi` that switches at lo + placement*(hi-lo).
void add_discriminator(Netlist& net, const std::string& p, const std::string& n, const std::string& in,
                       const std::string& out, int hi_level, int lo_level, int switch_level, const VoltageMap& vmap,
                       const PrimitiveOptions& o) {
    const double s = voltage_of(switch_level, vmap) + o.threshold_placement * vmap.step();
    const double v_lo = voltage_of(lo_level, vmap);
    const double v_hi = voltage_of(hi_level, vmap);
    add_inverter(net, p, n, in, out, rail_name(hi_level), rail_name(lo_level),
                 o.devices.for_threshold(Polarity::PMOS, v_hi - s), o.devices.for_threshold(Polarity::NMOS, s - v_lo));
}

Netlist build_dlc(int which, const VoltageMap& vmap, const PrimitiveOptions& o) {
    Netlist net;
    net.add_rail("VDD0", 0.0);
    net.add_rail("VDD3", vmap.vdd());
    net.add_input("IN");
    net.add_output("OUT");
    add_discriminator(net, "P0", "N0", "IN", "OUT", 3, 0, which, vmap, o);
    return net;
}

Netlist build_repeater(const VoltageMap& vmap, const PrimitiveOptions& o) {
    Netlist net;
    add_rails(net, vmap);
    net.add_input("IN");
    net.add_output("OUT");
    const auto& lib = o.devices;
    const double w = o.driver_width;
    // (P0,N0): level-pair select, a DLC1 between VDD3 and VDD0.
    add_discriminator(net, "P0", "N0", "IN", "SELECT", 3, 0, 1, vmap, o);
    // Branch regenerating {0,1} between VDD1 and VDD0.
    add_discriminator(net, "P1", "N1", "IN", "X1", 1, 0, 0, vmap, o);
    add_inverter(net, "P2", "N2", "X1", "V10", "VDD1", "VDD0", lib.driving(Polarity::PMOS, o.mode, w),
                 lib.driving(Polarity::NMOS, o.mode, w));
    // Branch regenerating {2,3} between VDD3 and VDD2.
    add_discriminator(net, "P3", "N3", "IN", "X3", 3, 2, 2, vmap, o);
    add_inverter(net, "P4", "N4", "X3", "V32", "VDD3", "VDD2", lib.driving(Polarity::PMOS, o.mode, w),
                 lib.driving(Polarity::NMOS, o.mode, w));
    // Output pass pair steered by SELECT.
    net.add_transistor("N5", "SELECT", "V10", "OUT", lib.driving(Polarity::NMOS, o.mode, w));
    net.add_transistor("P5", "SELECT", "V32", "OUT", lib.driving(Polarity::PMOS, o.mode, w));
    return net;
}

Netlist build_mux(int bits, const VoltageMap& vmap, const PrimitiveOptions& o) {
    Netlist net;
    net.add_rail("VDD0", 0.0);
    net.add_rail("VBOOST", vmap.vboost());
    const int n_inputs = 1 << bits;
    for (int i = 0; i < n_inputs; ++i) {
        net.add_input("D" + std::to_string(i));
    }
    for (int i = 0; i < bits; ++i) {
        net.add_input("S" + std::to_string(i));
    }
    net.add_output("OUT");
    const auto& lib = o.devices;
    for (int i = 0; i < bits; ++i) {
        const std::string s = std::to_string(i);
        add_inverter(net, "SINV" + s + "P", "SINV" + s + "N", "S" + s, "SB" + s, "VBOOST", "VDD0",
                     lib.for_threshold(Polarity::PMOS, o.logic_vt), lib.for_threshold(Polarity::NMOS, o.logic_vt));
        add_inverter(net, "SBUF" + s + "P", "SBUF" + s + "N", "SB" + s, "ST" + s, "VBOOST", "VDD0",
                     lib.for_threshold(Polarity::PMOS, o.logic_vt), lib.for_threshold(Polarity::NMOS, o.logic_vt));
    }
    const TransistorSpec pass = lib.for_threshold(Polarity::NMOS, o.pass_vt);
    auto node_name = [&](int level, int index) {
        if (level == 0) return "D" + std::to_string(index);
        if (level == bits) return std::string("OUT");
        return "T" + std::to_string(level) + "_" + std::to_string(index);
    };
    for (int level = 0; level < bits; ++level) {
        const int children = n_inputs >> level;
        const std::string s = std::to_string(level);
        for (int c = 0; c < children; ++c) {
            const std::string gate = (c % 2 == 0) ? "SB" + s : "ST" + s;
            net.add_transistor("M" + s + "_" + std::to_string(c), gate, node_name(level, c),
                               node_name(level + 1, c / 2), pass);
        }
    }
    return net;
}

Netlist build_translator_4to2(const VoltageMap& vmap, const PrimitiveOptions& o) {
    Netlist net;
    net.add_rail("VDD0", 0.0);
    net.add_rail("VDD3", vmap.vdd());
    net.add_input("IN");
    net.add_output("S1");
    net.add_output("S0");
    const auto& lib = o.devices;
    add_discriminator(net, "DLC0P", "DLC0N", "IN", "DLC0", 3, 0, 0, vmap, o);
    add_discriminator(net, "DLC1P", "DLC1N", "IN", "SELECT", 3, 0, 1, vmap, o);
    add_discriminator(net, "DLC2P", "DLC2N", "IN", "DLC2", 3, 0, 2, vmap, o);
    const TransistorSpec logic_p = lib.for_threshold(Polarity::PMOS, o.logic_vt);
    const TransistorSpec logic_n = lib.for_threshold(Polarity::NMOS, o.logic_vt);
    add_inverter(net, "SELBP", "SELBN", "SELECT", "SELB", "VDD3", "VDD0", logic_p, logic_n);
    // S0 = SELECT ? DLC0 : DLC2 through two transmission gates.
    const TransistorSpec pass_n = lib.for_threshold(Polarity::NMOS, o.pass_vt);
    const TransistorSpec pass_p = lib.for_threshold(Polarity::PMOS, o.pass_vt);
    net.add_transistor("TGAN", "SELECT", "DLC0", "S0", pass_n);
    net.add_transistor("TGAP", "SELB", "DLC0", "S0", pass_p);
    net.add_transistor("TGBN", "SELB", "DLC2", "S0", pass_n);
    net.add_transistor("TGBP", "SELECT", "DLC2", "S0", pass_p);
    // S1 = SELECT, restored through two inverters.
    add_inverter(net, "S1AP", "S1AN", "SELECT", "S1B", "VDD3", "VDD0", logic_p, logic_n);
    add_inverter(net, "S1BP", "S1BN", "S1B", "S1", "VDD3", "VDD0", logic_p, logic_n);
    return net;
}

Netlist build_translator_2to4(const VoltageMap& vmap, const PrimitiveOptions& o) {
    Netlist net;
    add_rails(net, vmap);
    net.add_input("S1");
    net.add_input("S0");
    net.add_output("OUT");
    const auto& lib = o.devices;
    const TransistorSpec logic_p = lib.for_threshold(Polarity::PMOS, o.logic_vt);
    const TransistorSpec logic_n = lib.for_threshold(Polarity::NMOS, o.logic_vt);
    add_inverter(net, "S1INVP", "S1INVN", "S1", "S1B", "VDD3", "VDD0", logic_p, logic_n);
    add_inverter(net, "S0INVP", "S0INVN", "S0", "S0B", "VDD3", "VDD0", logic_p, logic_n);
    const TransistorSpec pn = lib.for_threshold(Polarity::NMOS, o.pass_vt);
    const TransistorSpec pp = lib.for_threshold(Polarity::PMOS, o.pass_vt);
    // One series pair per rail; exactly one pair conducts for each (S1, S0).
    net.add_transistor("R0A", "S1", "VDD0", "M0", pn);   // (1,1) -> VDD0
    net.add_transistor("R0B", "S0", "M0", "OUT", pn);
    net.add_transistor("R1A", "S1", "VDD1", "M1", pn);   // (1,0) -> VDD1
    net.add_transistor("R1B", "S0B", "M1", "OUT", pn);
    net.add_transistor("R2A", "S1B", "VDD2", "M2", pn);  // (0,1) -> VDD2
    net.add_transistor("R2B", "S0B", "M2", "OUT", pp);
    net.add_transistor("R3A", "S1", "VDD3", "M3", pp);   // (0,0) -> VDD3
    net.add_transistor("R3B", "S0", "M3", "OUT", pp);
    return net;
}

void require_radix4(const VoltageMap& vmap) {
    if (vmap.radix().value() != 4) {
        throw DomainError("built-in primitives are defined for radix 4 only");
    }
}

int decode(const SteadyState& st, const std::string& node, const VoltageMap& vmap, double tol) {
    if (st.is_contended(node)) {
        throw NonFunctionalError("contention on " + node);
    }
    if (!st.has_voltage(node)) {
        throw NonFunctionalError(node + " is floating");
    }
    const int level = vmap.level_of(st.voltage(node), tol);
    if (level < 0) {
        throw NonFunctionalError(node + " at " + std::to_string(st.voltage(node)) + " V decodes to no level");
    }
    return level;
}

int decode_bit(const SteadyState& st, const std::string& node, const VoltageMap& vmap, double tol) {
    const int level = decode(st, node, vmap, tol);
    if (level != 0 && level != vmap.radix().max_level()) {
        throw NonFunctionalError(node + " is not a full-swing binary value");
    }
    return level == 0 ? 0 : 1;
}

double bit_volts(int bit, const VoltageMap& vmap) {
    if (bit != 0 && bit != 1) {
        throw DomainError("binary input must be 0 or 1");
    }
    return bit ? vmap.vdd() : 0.0;
}

int eval_single(const Netlist& net, int level, const VoltageMap& vmap, const PrimitiveOptions& o) {
    const auto st = solve_steady_state(net, {{"IN", voltage_of(level, vmap)}}, o.solver);
    return decode(st, "OUT", vmap, o.decode_tolerance);
}

Translator4to2Run eval_4to2(const Netlist& net, int level, const VoltageMap& vmap, const PrimitiveOptions& o) {
    auto st = solve_steady_state(net, {{"IN", voltage_of(level, vmap)}}, o.solver);
    Translator4to2Run run{};
    run.bits.s1 = decode_bit(st, "S1", vmap, o.decode_tolerance);
    run.bits.s0 = decode_bit(st, "S0", vmap, o.decode_tolerance);
    run.dlc0 = decode(st, "DLC0", vmap, o.decode_tolerance);
    run.dlc1 = decode(st, "SELECT", vmap, o.decode_tolerance);
    run.dlc2 = decode(st, "DLC2", vmap, o.decode_tolerance);
    run.select = decode_bit(st, "SELECT", vmap, o.decode_tolerance);
    run.state = std::move(st);
    return run;
}

Translator2to4Run eval_2to4(const Netlist& net, TranslatorBits bits, const VoltageMap& vmap,
                            const PrimitiveOptions& o) {
    auto st = solve_steady_state(net, {{"S1", bit_volts(bits.s1, vmap)}, {"S0", bit_volts(bits.s0, vmap)}}, o.solver);
    Translator2to4Run run{};
    for (const char* r : {"R0", "R1", "R2", "R3"}) {
        const std::string p(r);
        if (st.is_on(p + "A") && st.is_on(p + "B")) {
            ++run.active_paths;
        }
    }
    if (run.active_paths > 1) {
        throw NonFunctionalError(std::to_string(run.active_paths) + " rail paths conduct at once");
    }
    run.level = decode(st, "OUT", vmap, o.decode_tolerance);
    run.state = std::move(st);
    return run;
}

int eval_mux(const Netlist& net, int bits, unsigned select, const std::vector<int>& data, const VoltageMap& vmap,
             const PrimitiveOptions& o) {
    const std::size_t n_inputs = std::size_t{1} << bits;
    if (data.size() != n_inputs) {
        throw DomainError("mux needs " + std::to_string(n_inputs) + " data levels");
    }
    std::map<std::string, double> in;
    for (std::size_t i = 0; i < n_inputs; ++i) {
        in["D" + std::to_string(i)] = voltage_of(data[i], vmap);
    }
    for (int i = 0; i < bits; ++i) {
        in["S" + std::to_string(i)] = bit_volts(static_cast<int>((select >> i) & 1U), vmap);
    }
    const auto st = solve_steady_state(net, in, o.solver);
    if (st.is_contended("OUT") || !st.has_voltage("OUT")) {
        throw NonFunctionalError("mux output contended or floating");
    }
    return vmap.level_of(st.voltage("OUT"), o.decode_tolerance);
}

// Table-driven expectations for the functional sweeps.
constexpr TranslatorBits kBitsOfLevel[4] = {{1, 1}, {1, 0}, {0, 1}, {0, 0}};

bool check(const PrimitiveKind& kind, const Netlist& net, const VoltageMap& vmap, const PrimitiveOptions& o) {
    using T = PrimitiveKind::Type;
    switch (kind.type()) {
        case T::DLC0:
        case T::DLC1:
        case T::DLC2: {
            const int which = static_cast<int>(kind.type()) - static_cast<int>(T::DLC0);
            for (int level = 0; level < 4; ++level) {
                if (eval_single(net, level, vmap, o) != (level <= which ? 3 : 0)) return false;
            }
            return true;
        }
        case T::QuaternaryRepeater:
            for (int level = 0; level < 4; ++level) {
                if (eval_single(net, level, vmap, o) != level) return false;
            }
            return true;
        case T::PassMuxTree: {
            const int bits = kind.select_bits();
            const unsigned n = 1U << bits;
            for (unsigned s = 0; s < n; ++s) {
                for (int level = 0; level < 4; ++level) {
                    std::vector<int> data(n);
                    for (unsigned i = 0; i < n; ++i) {
                        data[i] = (i == s) ? level : (level + 1 + static_cast<int>(i % 3)) % 4;
                    }
                    if (eval_mux(net, bits, s, data, vmap, o) != level) return false;
                }
            }
            return true;
        }
        case T::Translator4to2:
            for (int level = 0; level < 4; ++level) {
                if (eval_4to2(net, level, vmap, o).bits != kBitsOfLevel[level]) return false;
            }
            return true;
        case T::Translator2to4:
            for (int level = 0; level < 4; ++level) {
                if (eval_2to4(net, kBitsOfLevel[level], vmap, o).level != level) return false;
            }
            return true;
    }
    return false;
}

}  // namespace

Netlist build_primitive(const PrimitiveKind& kind, const VoltageMap& vmap, const PrimitiveOptions& options) {
    require_radix4(vmap);
    using T = PrimitiveKind::Type;
    switch (kind.type()) {
        case T::DLC0: return build_dlc(0, vmap, options);
        case T::DLC1: return build_dlc(1, vmap, options);
        case T::DLC2: return build_dlc(2, vmap, options);
        case T::QuaternaryRepeater: return build_repeater(vmap, options);
        case T::PassMuxTree: return build_mux(kind.select_bits(), vmap, options);
        case T::Translator4to2: return build_translator_4to2(vmap, options);
        case T::Translator2to4: return build_translator_2to4(vmap, options);
    }
    throw DomainError("unsupported primitive");
}

Netlist build_binary_buffer(double vdd, const PrimitiveOptions& options) {
    Netlist net;
    net.add_rail("GND", 0.0);
    net.add_rail("VDD", vdd);
    net.add_input("IN");
    net.add_output("OUT");
    const auto& lib = options.devices;
    TransistorSpec p = lib.driving(Polarity::PMOS, options.mode, 1.0);
    TransistorSpec n = lib.driving(Polarity::NMOS, options.mode, 1.0);
    p.vbb = 0.0;
    n.vbb = 0.0;
    add_inverter(net, "PA", "NA", "IN", "MID", "VDD", "GND", p, n);
    p.width_mult = n.width_mult = 4.0;
    add_inverter(net, "PB", "NB", "MID", "OUT", "VDD", "GND", p, n);
    return net;
}

RepeaterRun run_repeater(int level, const VoltageMap& vmap, const PrimitiveOptions& options) {
    const Netlist net = build_primitive(PrimitiveKind::repeater(), vmap, options);
    auto st = solve_steady_state(net, {{"IN", voltage_of(level, vmap)}}, options.solver);
    const int out = decode(st, "OUT", vmap, options.decode_tolerance);
    return {out, std::move(st)};
}

int repeater_transfer(int level, const VoltageMap& vmap, const PrimitiveOptions& options) {
    return run_repeater(level, vmap, options).output_level;
}

int dlc_transfer(int which, int level, const VoltageMap& vmap, const PrimitiveOptions& options) {
    return eval_single(build_primitive(PrimitiveKind::dlc(which), vmap, options), level, vmap, options);
}

Translator4to2Run run_translator_4to2(int level, const VoltageMap& vmap, const PrimitiveOptions& options) {
    return eval_4to2(build_primitive(PrimitiveKind::translator_4to2(), vmap, options), level, vmap, options);
}

TranslatorBits translate_4_to_2(int level, const VoltageMap& vmap, const PrimitiveOptions& options) {
    return run_translator_4to2(level, vmap, options).bits;
}

Translator2to4Run run_translator_2to4(TranslatorBits bits, const VoltageMap& vmap, const PrimitiveOptions& options) {
    return eval_2to4(build_primitive(PrimitiveKind::translator_2to4(), vmap, options), bits, vmap, options);
}

int translate_2_to_4(TranslatorBits bits, const VoltageMap& vmap, const PrimitiveOptions& options) {
    return run_translator_2to4(bits, vmap, options).level;
}

int mux_output_level(int select_bits, unsigned select, const std::vector<int>& data, const VoltageMap& vmap,
                     const PrimitiveOptions& options) {
    return eval_mux(build_primitive(PrimitiveKind::mux(select_bits), vmap, options), select_bits, select, data, vmap,
                    options);
}

bool primitive_is_functional(const PrimitiveKind& kind, const Netlist& netlist, const VoltageMap& vmap,
                             const PrimitiveOptions& options) {
    try {
        return check(kind, netlist, vmap, options);
    } catch (const NonFunctionalError&) {
        return false;
    } catch (const IllegalBiasError&) {
        return false;
    }
}

Netlist perturb_back_bias(const Netlist& netlist, double fraction, int nmos_sign, int pmos_sign) {
    return netlist.with_specs([&](const Transistor& t) {
        TransistorSpec s = t.spec;
        const int sign = (s.polarity == Polarity::NMOS) ? nmos_sign : pmos_sign;
        s.vbb *= 1.0 + sign * fraction;
        return s;
    });
}

FunctionalWindow vbb_functional_window(const PrimitiveKind& kind, std::vector<double> grid, const VoltageMap& vmap,
                                       const PrimitiveOptions& options) {
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
    const Netlist nominal = build_primitive(kind, vmap, options);
    FunctionalWindow result;
    bool contiguous = true;
    for (double f : grid) {
        if (f < 0.0) {
            throw DomainError("perturbation fractions must be nonnegative");
        }
        bool ok = true;
        for (int sn : {-1, 1}) {
            for (int sp : {-1, 1}) {
                ok = ok && primitive_is_functional(kind, perturb_back_bias(nominal, f, sn, sp), vmap, options);
            }
        }
        result.grid.emplace_back(f, ok);
        if (ok && contiguous) {
            result.window = f;
        }
        contiguous = contiguous && ok;
    }
    return result;
}

std::vector<double> default_vbb_grid() {
    std::vector<double> grid;
    for (int i = 0; i <= 20; ++i) {
        grid.push_back(0.025 * i);
    }
    return grid;
}

}  // namespace mvroute
