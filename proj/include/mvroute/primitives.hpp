#pragma once

// Built-in MVL routing primitives as switch-level netlists, their transfer
// functions evaluated through the solver, and back-bias robustness sweeps.

#include "mvroute/device.hpp"
#include "mvroute/mvl.hpp"
#include "mvroute/netlist.hpp"
#include "mvroute/solver.hpp"

#include <string>
#include <utility>
#include <vector>

namespace mvroute {

/// Threshold synthesis: picks flavor, back-bias and poly-bias so that a
/// device lands on a requested effective Vt. Bias is kept inside a reduced
/// window (the headroom limits) so perturbation sweeps stay legal; poly-bias
/// covers what bias alone cannot reach.
struct DeviceLibrary {
    double lvt_vt0 = 0.30;
    double rvt_vt0 = 0.45;
    double k_bb = kDefaultBackBiasCoefficient;
    double lvt_fbb_headroom = 2.0;
    double lvt_rbb_headroom = -0.2;
    double rvt_fbb_headroom = 0.2;
    double rvt_rbb_headroom = -2.0;
    ModePresets modes;

    [[nodiscard]] TransistorSpec for_threshold(Polarity polarity, double target_vt, double width = 1.0) const;
    /// LVT device forward-biased per the repeater mode.
    [[nodiscard]] TransistorSpec driving(Polarity polarity, RepeaterMode mode, double width) const;
};

struct PrimitiveOptions {
    DeviceLibrary devices;
    /// Switching point of a level-discriminating inverter as a fraction of the
    /// level step above the lower level; 0.5 is the bin midpoint.
    double threshold_placement = 0.5;
    RepeaterMode mode = RepeaterMode::STD;
    double pass_vt = 0.15;    // mux and translator pass devices
    double logic_vt = 0.45;   // full-swing binary inverters
    double driver_width = 4.0;
    SolverOptions solver;
    /// Output voltage must sit this close to a level to decode.
    double decode_tolerance = 1e-3;
};

class PrimitiveKind {
public:
    enum class Type { DLC0, DLC1, DLC2, QuaternaryRepeater, PassMuxTree, Translator4to2, Translator2to4 };

    static PrimitiveKind dlc(int which);
    static PrimitiveKind repeater() { return PrimitiveKind(Type::QuaternaryRepeater, 0); }
    static PrimitiveKind mux(int select_bits);
    static PrimitiveKind translator_4to2() { return PrimitiveKind(Type::Translator4to2, 0); }
    static PrimitiveKind translator_2to4() { return PrimitiveKind(Type::Translator2to4, 0); }

    [[nodiscard]] Type type() const noexcept { return type_; }
    [[nodiscard]] int select_bits() const noexcept { return select_bits_; }
    [[nodiscard]] std::string name() const;

    friend bool operator==(const PrimitiveKind&, const PrimitiveKind&) = default;

private:
    PrimitiveKind(Type type, int bits) : type_(type), select_bits_(bits) {}
    Type type_;
    int select_bits_;
};

/// Every primitive the sensitivity report covers; the mux is the 8:1 tree.
[[nodiscard]] std::vector<PrimitiveKind> all_primitives();

/// Node and transistor naming:
///  - DLCk: input IN, output OUT, devices P0/N0.
///  - QuaternaryRepeater: input IN, output OUT, devices N0..N5 / P0..P5;
///    internal nets SELECT, X1, V10, X3, V32.
///  - PassMuxTree(N): data inputs D0.., select inputs S0.. (bit i drives tree
///    level i), output OUT, boosted select drivers on rail VBOOST.
///  - Translator4to2: input IN, outputs S1/S0, internal DLC0, SELECT, DLC2.
///  - Translator2to4: inputs S1/S0, output OUT, one two-device path per rail.
/// Throws DomainError unless `vmap` is radix 4.
[[nodiscard]] Netlist build_primitive(const PrimitiveKind& kind, const VoltageMap& vmap,
                                      const PrimitiveOptions& options = {});

/// Two-stage tapered binary buffer (1x then 4x), input IN, output OUT.
[[nodiscard]] Netlist build_binary_buffer(double vdd, const PrimitiveOptions& options = {});

struct RepeaterRun {
    int output_level;
    SteadyState state;
};

/// Solves the repeater for one input level. Throws NonFunctionalError when
/// the output floats, is contended or does not decode to a level.
[[nodiscard]] RepeaterRun run_repeater(int level, const VoltageMap& vmap, const PrimitiveOptions& options = {});
[[nodiscard]] int repeater_transfer(int level, const VoltageMap& vmap, const PrimitiveOptions& options = {});

/// Output level (0 or R-1) of DLC `which` for an input level.
[[nodiscard]] int dlc_transfer(int which, int level, const VoltageMap& vmap, const PrimitiveOptions& options = {});

struct TranslatorBits {
    int s1;
    int s0;
    friend bool operator==(const TranslatorBits&, const TranslatorBits&) = default;
};

struct Translator4to2Run {
    TranslatorBits bits;
    int dlc0, dlc1, dlc2;  // decoded DLC outputs (0 or 3)
    int select;            // 0 or 1
    SteadyState state;
};

[[nodiscard]] Translator4to2Run run_translator_4to2(int level, const VoltageMap& vmap,
                                                    const PrimitiveOptions& options = {});
[[nodiscard]] TranslatorBits translate_4_to_2(int level, const VoltageMap& vmap, const PrimitiveOptions& options = {});

struct Translator2to4Run {
    int level;
    int active_paths;  // rails with both path devices conducting
    SteadyState state;
};

/// Throws NonFunctionalError when more than one rail path is active.
[[nodiscard]] Translator2to4Run run_translator_2to4(TranslatorBits bits, const VoltageMap& vmap,
                                                    const PrimitiveOptions& options = {});
[[nodiscard]] int translate_2_to_4(TranslatorBits bits, const VoltageMap& vmap, const PrimitiveOptions& options = {});

/// Level at OUT of a pass-mux tree with `data` levels on D0.. and `select`
/// as the binary code. Returns -1 when the output is degraded off every level.
[[nodiscard]] int mux_output_level(int select_bits, unsigned select, const std::vector<int>& data,
                                   const VoltageMap& vmap, const PrimitiveOptions& options = {});

/// Runs every exhaustive transfer of the primitive on `netlist` and reports
/// whether all are correct. Solver exceptions (including illegal bias) count
/// as failures.
[[nodiscard]] bool primitive_is_functional(const PrimitiveKind& kind, const Netlist& netlist, const VoltageMap& vmap,
                                           const PrimitiveOptions& options = {});

/// Scales every device's back-bias by (1 + sn*f) for NMOS and (1 + sp*f) for
/// PMOS, sn and sp in {-1, +1}.
[[nodiscard]] Netlist perturb_back_bias(const Netlist& netlist, double fraction, int nmos_sign, int pmos_sign);

struct FunctionalWindow {
    double window = 0.0;  // largest grid fraction with every smaller one passing
    std::vector<std::pair<double, bool>> grid;  // sorted fractions and pass/fail
};

/// All four sign combinations are tried at every grid fraction.
[[nodiscard]] FunctionalWindow vbb_functional_window(const PrimitiveKind& kind, std::vector<double> grid,
                                                     const VoltageMap& vmap, const PrimitiveOptions& options = {});

/// 0, 0.025, ..., 0.5
[[nodiscard]] std::vector<double> default_vbb_grid();

}  // namespace mvroute
