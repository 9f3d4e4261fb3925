#pragma once

// Repeater-driven routing tracks: wire capacitance, per-track delay, the
// dynamic/leakage energy split and length sweeps against the binary bus-2.

#include "mvroute/device.hpp"
#include "mvroute/mvl.hpp"
#include "mvroute/primitives.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace mvroute {

struct WireModel {
    double r_per_um = 2.0;        // ohms / um
    double c_per_um = 0.2e-15;    // farads / um
    double length_um = 46.0;
};

/// Lumped by default. The first-order option shields part of the wire behind
/// its own resistance: factor (Rd + Rw/2) / (Rd + Rw).
struct CeffOptions {
    bool first_order = false;
    double driver_resistance = 2.0e3;  // ohms
};

[[nodiscard]] double effective_capacitance(const WireModel& wire, const CeffOptions& options = {});

/// One track: `segments` repeated stages, each driving `length_units` unit
/// lengths of wire plus `loads_per_segment` input buffers. Radix 4 is one
/// quaternary wire with 12-T repeaters, radix 2 one binary wire with tapered
/// buffers.
struct TrackConfig {
    double unit_length_um = 46.0;
    double length_units = 1.0;
    int segments = 1;
    int loads_per_segment = 4;
    int radix = 4;
    RepeaterMode mode = RepeaterMode::STD;
};

/// Everything physical a track evaluation needs.
struct Technology {
    double vdd = 0.9;
    double vboost = 1.1;
    double r_per_um = 2.0;
    double c_per_um = 0.2e-15;
    CeffOptions ceff;
    DelayModel delay;
    LeakageModel leakage;
    RepeaterLoadModel loads;
    PrimitiveOptions primitives;

    [[nodiscard]] WireModel wire(const TrackConfig& track) const;
};

/// Worst-case pull of the driving stage.
struct DriverStage {
    double vt;          // effective threshold of the driving NMOS
    double swing;       // vdd (binary) or vdd/3 (quaternary)
    double overdrive;   // swing - vt
    double input_cap;   // C_L (binary) or 3 C_L (quaternary) per load
};

/// Throws DomainError for radix 3: no ternary repeater netlist is modelled.
[[nodiscard]] DriverStage driver_stage(const TrackConfig& track, const Technology& tech);

/// Sum over segments of stage_delay with load Ceff + loads * input cap.
/// Throws NonFunctionalError when the driver has no overdrive.
[[nodiscard]] double track_delay(const TrackConfig& track, const Technology& tech);

struct TrackEnergy {
    double dynamic_j = 0.0;
    double leakage_j = 0.0;
    [[nodiscard]] double total_j() const noexcept { return dynamic_j + leakage_j; }
};

/// Dynamic energy over consecutive levels of `vector`; leakage of every OFF
/// device in the solved repeater/buffer at each step, times vdd and cycle_s.
/// Throws DomainError when the vector radix differs from the track radix.
[[nodiscard]] TrackEnergy track_energy(const TrackConfig& track, const Technology& tech, const TestVector& vector,
                                       double cycle_s);

/// Bit `bit` of every level of a quaternary vector, as a binary vector.
[[nodiscard]] TestVector bit_plane(const TestVector& vector, int bit);

struct TrackReport {
    double delay_s = 0.0;
    TrackEnergy energy;
    double baseline_delay_s = 0.0;
    TrackEnergy baseline;

    [[nodiscard]] double delay_ratio() const noexcept { return delay_s / baseline_delay_s; }
    [[nodiscard]] double dynamic_ratio() const noexcept { return energy.dynamic_j / baseline.dynamic_j; }
    [[nodiscard]] double leakage_ratio() const noexcept { return energy.leakage_j / baseline.leakage_j; }
    [[nodiscard]] double energy_ratio() const noexcept { return energy.total_j() / baseline.total_j(); }
    [[nodiscard]] double edp_ratio() const noexcept { return energy_ratio() * delay_ratio(); }
};

/// Quaternary track against two binary wires carrying the bit planes of the
/// same vector. `track.radix` must be 4.
[[nodiscard]] TrackReport evaluate_track(const TrackConfig& track, const Technology& tech, const TestVector& vector,
                                         double cycle_s);

struct SweepRow {
    double length_units;
    double delay_ratio;
    double dyn_energy_ratio;
    double leak_ratio;
    double edp_ratio;
};

/// One row per length; the vector is transition_complete_sequence(4, seed).
[[nodiscard]] std::vector<SweepRow> sweep_track_length(const std::vector<double>& lengths, const TrackConfig& base,
                                                       const Technology& tech, double cycle_s,
                                                       std::uint64_t seed = 0);

/// Header length_units,delay_ratio,dyn_energy_ratio,leak_ratio,edp_ratio and
/// 6 significant digits.
[[nodiscard]] std::string sweep_to_csv(const std::vector<SweepRow>& rows);

}  // namespace mvroute
