#pragma once

// Analytic FDSOI transistor behaviour: back-bias threshold shifting,
// alpha-power-law stage delay, subthreshold leakage and the closed-form
// quaternary/binary energy and delay ratios.

#include <string_view>

namespace mvroute {

enum class Polarity { NMOS, PMOS };
enum class Flavor { RVT, LVT };

[[nodiscard]] std::string_view to_string(Polarity p) noexcept;
[[nodiscard]] std::string_view to_string(Flavor f) noexcept;

/// Volts per volt of Vt shift under back-bias.
inline constexpr double kDefaultBackBiasCoefficient = 0.085;

/// Legal back-bias window of a flavor, volts. Positive is forward bias.
struct BiasWindow {
    double min_vbb;
    double max_vbb;
};
[[nodiscard]] BiasWindow legal_bias_window(Flavor flavor) noexcept;

/// One transistor. Threshold magnitudes are positive for both polarities and
/// vbb > 0 always means forward body bias: for an NMOS that is Vgnds above
/// ground, for a PMOS Vdds below vdd. The mapping to well terminals is not
/// modelled.
struct TransistorSpec {
    Polarity polarity = Polarity::NMOS;
    Flavor flavor = Flavor::LVT;
    double vt0 = 0.30;
    double vbb = 0.0;
    double poly_bias_dvt = 0.0;
    double width_mult = 1.0;

    friend bool operator==(const TransistorSpec&, const TransistorSpec&) = default;
};

/// Throws IllegalBiasError naming the flavor and the violated limit; also
/// rejects vt0 <= 0 and widths outside [1, 4].
void validate_back_bias(const TransistorSpec& spec);

/// vt0 - k_bb * vbb + poly_bias_dvt, after validate_back_bias.
[[nodiscard]] double effective_vt(const TransistorSpec& spec, double k_bb = kDefaultBackBiasCoefficient);

/// Same linear law without the legality check; used by perturbation sweeps
/// that judge legality separately.
[[nodiscard]] double unchecked_effective_vt(const TransistorSpec& spec,
                                            double k_bb = kDefaultBackBiasCoefficient) noexcept;

struct DelayModel {
    double eta = 1.5;
    double k_tech = 1.0e3;  // s * V^(eta-1) / F; cancels in every ratio

    DelayModel() = default;
    DelayModel(double eta_, double k_tech_);
};

struct LeakageModel {
    double i0 = 1.0e-9;    // amps at effective Vt == vt_ref, unit width
    double swing = 0.060;  // volts per decade
    double vt_ref = 0.30;  // calibration threshold, volts

    LeakageModel() = default;
    LeakageModel(double i0_, double swing_, double vt_ref_);
};

struct RepeaterLoadModel {
    double c_load_binary = 1.0e-15;  // one binary buffer input, farads
    static constexpr double quaternary_input_factor = 3.0;

    [[nodiscard]] double quaternary_input_cap() const noexcept {
        return quaternary_input_factor * c_load_binary;
    }
};

/// k_tech * c_load * v_swing / v_overdrive^eta. Throws NonFunctionalError when
/// the overdrive is not positive.
[[nodiscard]] double stage_delay(double c_load, double v_swing, double v_overdrive, const DelayModel& dm);

/// Ratio of average switching energy, one quaternary wire against two binary
/// wires: ((Cw + 3 Cl) * 40/144) / (2 (Cw + Cl) * 0.5).
[[nodiscard]] double energy_ratio_quaternary(double c_wire, double c_l);

/// Worst-case (vdd/3 -> 0) quaternary delay over binary delay for a single
/// equivalent driving stage.
[[nodiscard]] double delay_ratio_quaternary(double ceff_wire, double c_l, double vdd, double vtn,
                                            double vtn_prime, double eta);

/// Long-wire limit: 3^(eta-1) * (vdd - vtn)^eta / (vdd - 3 vtn')^eta.
[[nodiscard]] double delay_ratio_long_wire(double vdd, double vtn, double vtn_prime, double eta);

/// i0 * 10^((vt_ref - Vt_eff) / swing) * width_mult.
[[nodiscard]] double leakage_current(const TransistorSpec& spec, const LeakageModel& lm,
                                     double k_bb = kDefaultBackBiasCoefficient);

/// Back-bias goal of the quaternary repeater's driving stage.
enum class RepeaterMode { FAST, STD, LL };

[[nodiscard]] std::string_view to_string(RepeaterMode mode) noexcept;
[[nodiscard]] RepeaterMode parse_repeater_mode(std::string_view text);

/// Forward bias (volts) applied to the driving-stage LVT devices per mode.
/// FAST lands Vt' at one third of the 0.30 V LVT threshold.
struct ModePresets {
    double fast_vbb = 2.35;
    double std_vbb = 1.80;
    double ll_vbb = 1.20;

    [[nodiscard]] double vbb(RepeaterMode mode) const noexcept;
};

/// Cycle times used to separate leakage from dynamic energy.
[[nodiscard]] double default_cycle_time(RepeaterMode mode) noexcept;

}  // namespace mvroute
