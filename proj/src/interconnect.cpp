#include "mvroute/interconnect.hpp"

#include "mvroute/errors.hpp"
#include "mvroute/format.hpp"

#include <map>

namespace mvroute {

namespace {

void check_track(const TrackConfig& t) {
    if (t.segments < 1 || t.loads_per_segment < 0 || t.length_units < 0.0 || !(t.unit_length_um > 0.0)) {
        throw DomainError("track needs segments >= 1, loads >= 0, length >= 0 and a positive unit length");
    }
    if (t.radix == 3) {
        throw DomainError("radix 3 tracks are not modelled: there is no ternary repeater netlist");
    }
    if (t.radix != 2 && t.radix != 4) {
        throw DomainError("track radix must be 2 or 4");
    }
}

PrimitiveOptions options_for(const TrackConfig& track, const Technology& tech) {
    PrimitiveOptions o = tech.primitives;
    o.mode = track.mode;
    return o;
}

VoltageMap vmap_for(int radix, const Technology& tech) {
    return VoltageMap(Radix(radix), tech.vdd, tech.vboost);
}

Netlist stage_netlist(const TrackConfig& track, const Technology& tech) {
    const PrimitiveOptions o = options_for(track, tech);
    if (track.radix == 4) {
        return build_primitive(PrimitiveKind::repeater(), vmap_for(4, tech), o);
    }
    return build_binary_buffer(tech.vdd, o);
}

double off_leakage(const Netlist& net, const SteadyState& st, const Technology& tech) {
    double amps = 0.0;
    for (const auto& t : net.transistors()) {
        if (!st.is_on(t.id)) {
            amps += leakage_current(t.spec, tech.leakage, tech.primitives.devices.k_bb);
        }
    }
    return amps;
}

}  // namespace

double effective_capacitance(const WireModel& wire, const CeffOptions& options) {
    if (wire.length_um < 0.0 || !(wire.c_per_um > 0.0) || wire.r_per_um < 0.0) {
        throw DomainError("wire needs positive c_per_um, nonnegative r_per_um and length");
    }
    const double c = wire.c_per_um * wire.length_um;
    if (!options.first_order) {
        return c;
    }
    const double rw = wire.r_per_um * wire.length_um;
    const double rd = options.driver_resistance;
    if (rd + rw <= 0.0) {
        return c;
    }
    return c * (rd + 0.5 * rw) / (rd + rw);
}

WireModel Technology::wire(const TrackConfig& track) const {
    return WireModel{r_per_um, c_per_um, track.length_units * track.unit_length_um};
}

DriverStage driver_stage(const TrackConfig& track, const Technology& tech) {
    check_track(track);
    const Netlist net = stage_netlist(track, tech);
    const double k_bb = tech.primitives.devices.k_bb;
    DriverStage d{};
    if (track.radix == 4) {
        d.vt = effective_vt(net.transistor("N2").spec, k_bb);
        d.swing = tech.vdd / 3.0;
        d.input_cap = tech.loads.quaternary_input_cap();
    } else {
        d.vt = effective_vt(net.transistor("NB").spec, k_bb);
        d.swing = tech.vdd;
        d.input_cap = tech.loads.c_load_binary;
    }
    d.overdrive = d.swing - d.vt;
    return d;
}

double track_delay(const TrackConfig& track, const Technology& tech) {
    const DriverStage d = driver_stage(track, tech);
    const double load = effective_capacitance(tech.wire(track), tech.ceff) + track.loads_per_segment * d.input_cap;
    return track.segments * stage_delay(load, d.swing, d.overdrive, tech.delay);
}

TrackEnergy track_energy(const TrackConfig& track, const Technology& tech, const TestVector& vector,
                         double cycle_s) {
    check_track(track);
    if (vector.radix.value() != track.radix) {
        throw DomainError("vector radix " + std::to_string(vector.radix.value()) + " does not match track radix " +
                          std::to_string(track.radix));
    }
    if (cycle_s < 0.0) {
        throw DomainError("cycle time must be nonnegative");
    }
    const DriverStage d = driver_stage(track, tech);
    const VoltageMap vmap = vmap_for(track.radix, tech);
    const double cap = effective_capacitance(tech.wire(track), tech.ceff) + track.loads_per_segment * d.input_cap;

    TrackEnergy e;
    const auto& seq = vector.sequence;
    for (std::size_t i = 1; i < seq.size(); ++i) {
        e.dynamic_j += transition_energy(seq[i - 1], seq[i], cap, vmap);
    }
    e.dynamic_j *= track.segments;

    const Netlist net = stage_netlist(track, tech);
    const PrimitiveOptions o = options_for(track, tech);
    std::map<int, double> per_level;
    for (int level : seq) {
        if (per_level.count(level) == 0) {
            const auto st = solve_steady_state(net, {{"IN", voltage_of(level, vmap)}}, o.solver);
            per_level[level] = off_leakage(net, st, tech);
        }
        e.leakage_j += per_level[level];
    }
    e.leakage_j *= tech.vdd * cycle_s * track.segments;
    return e;
}

TestVector bit_plane(const TestVector& vector, int bit) {
    if (vector.radix.value() != 4 || bit < 0 || bit > 1) {
        throw DomainError("bit planes are defined for quaternary vectors, bits 0 and 1");
    }
    TestVector out{Radix(2), {}, {}};
    out.sequence.reserve(vector.sequence.size());
    for (int level : vector.sequence) {
        out.sequence.push_back((level >> bit) & 1);
    }
    out.coverage = transition_coverage(out.sequence);
    return out;
}

TrackReport evaluate_track(const TrackConfig& track, const Technology& tech, const TestVector& vector,
                           double cycle_s) {
    if (track.radix != 4) {
        throw DomainError("evaluate_track compares a quaternary track against the binary bus-2");
    }
    TrackReport r;
    r.delay_s = track_delay(track, tech);
    r.energy = track_energy(track, tech, vector, cycle_s);

    TrackConfig binary = track;
    binary.radix = 2;
    r.baseline_delay_s = track_delay(binary, tech);
    for (int bit = 0; bit < 2; ++bit) {
        const TrackEnergy e = track_energy(binary, tech, bit_plane(vector, bit), cycle_s);
        r.baseline.dynamic_j += e.dynamic_j;
        r.baseline.leakage_j += e.leakage_j;
    }
    return r;
}

std::vector<SweepRow> sweep_track_length(const std::vector<double>& lengths, const TrackConfig& base,
                                         const Technology& tech, double cycle_s, std::uint64_t seed) {
    if (lengths.empty()) {
        throw DomainError("sweep needs at least one length");
    }
    const TestVector vec = transition_complete_sequence(Radix(4), seed);
    std::vector<SweepRow> rows;
    rows.reserve(lengths.size());
    for (double len : lengths) {
        TrackConfig t = base;
        t.length_units = len;
        const TrackReport r = evaluate_track(t, tech, vec, cycle_s);
        rows.push_back({len, r.delay_ratio(), r.dynamic_ratio(), r.leakage_ratio(), r.edp_ratio()});
    }
    return rows;
}

std::string sweep_to_csv(const std::vector<SweepRow>& rows) {
    std::string out = "length_units,delay_ratio,dyn_energy_ratio,leak_ratio,edp_ratio\n";
    for (const auto& r : rows) {
        out += format_sig(r.length_units) + ',' + format_sig(r.delay_ratio) + ',' + format_sig(r.dyn_energy_ratio) +
               ',' + format_sig(r.leak_ratio) + ',' + format_sig(r.edp_ratio) + '\n';
    }
    return out;
}

}  // namespace mvroute
