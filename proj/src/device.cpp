#include "mvroute/device.hpp"

#include "mvroute/errors.hpp"
#include "mvroute/mvl.hpp"

#include <cctype>
#include <cmath>
#include <sstream>
#include <string>

namespace mvroute {

std::string_view to_string(Polarity p) noexcept {
    return p == Polarity::NMOS ? "nmos" : "pmos";
}

std::string_view to_string(Flavor f) noexcept {
    return f == Flavor::RVT ? "rvt" : "lvt";
}

BiasWindow legal_bias_window(Flavor flavor) noexcept {
    // RVT: RBB to -3 V, FBB to +300 mV. LVT: FBB to +3 V, RBB to -300 mV.
    if (flavor == Flavor::RVT) {
        return {-3.0, 0.3};
    }
    return {-0.3, 3.0};
}

void validate_back_bias(const TransistorSpec& spec) {
    if (!(spec.vt0 > 0.0)) {
        throw IllegalBiasError("vt0 must be positive");
    }
    if (spec.width_mult < 1.0 || spec.width_mult > 4.0) {
        throw IllegalBiasError("width multiplier must lie in [1, 4]");
    }
    const BiasWindow w = legal_bias_window(spec.flavor);
    // Windows are inclusive; allow for decimal rounding of the limits.
    constexpr double slack = 1e-12;
    if (spec.vbb < w.min_vbb - slack || spec.vbb > w.max_vbb + slack) {
        std::ostringstream msg;
        msg << "illegal back-bias " << spec.vbb << " V for " << to_string(spec.flavor) << ": ";
        if (spec.vbb > w.max_vbb) {
            msg << "forward bias limited to +" << w.max_vbb << " V";
        } else {
            msg << "reverse bias limited to " << w.min_vbb << " V";
        }
        throw IllegalBiasError(msg.str());
    }
}

double unchecked_effective_vt(const TransistorSpec& spec, double k_bb) noexcept {
    return spec.vt0 - k_bb * spec.vbb + spec.poly_bias_dvt;
}

double effective_vt(const TransistorSpec& spec, double k_bb) {
    validate_back_bias(spec);
    return unchecked_effective_vt(spec, k_bb);
}

DelayModel::DelayModel(double eta_, double k_tech_) : eta(eta_), k_tech(k_tech_) {
    if (eta < 1.0 || eta > 2.0) {
        throw DomainError("eta must lie in [1, 2]");
    }
    if (!(k_tech > 0.0)) {
        throw DomainError("k_tech must be positive");
    }
}

LeakageModel::LeakageModel(double i0_, double swing_, double vt_ref_)
    : i0(i0_), swing(swing_), vt_ref(vt_ref_) {
    if (!(i0 > 0.0) || !(swing > 0.0)) {
        throw DomainError("leakage model needs positive i0 and swing");
    }
}

double stage_delay(double c_load, double v_swing, double v_overdrive, const DelayModel& dm) {
    if (!(v_overdrive > 0.0)) {
        throw NonFunctionalError("stage overdrive " + std::to_string(v_overdrive) +
                                 " V is not positive; the device cannot pull the swing");
    }
    return dm.k_tech * c_load * v_swing / std::pow(v_overdrive, dm.eta);
}

double energy_ratio_quaternary(double c_wire, double c_l) {
    if (c_wire < 0.0 || !(c_l > 0.0)) {
        throw DomainError("energy ratio needs c_wire >= 0 and c_l > 0");
    }
    const double quaternary = average_energy_coefficient(Radix(4)).value();
    const double binary = average_energy_coefficient(Radix(2)).value();
    return ((c_wire + RepeaterLoadModel::quaternary_input_factor * c_l) * quaternary) /
           (2.0 * (c_wire + c_l) * binary);
}

double delay_ratio_quaternary(double ceff_wire, double c_l, double vdd, double vtn, double vtn_prime,
                              double eta) {
    const double swing4 = vdd / 3.0;
    if (!(swing4 > vtn_prime)) {
        throw NonFunctionalError("vdd/3 does not exceed vtn': worst-case quaternary swing cannot complete");
    }
    if (!(vdd > vtn)) {
        throw NonFunctionalError("vdd does not exceed vtn");
    }
    const double quaternary =
        (ceff_wire + RepeaterLoadModel::quaternary_input_factor * c_l) * swing4 / std::pow(swing4 - vtn_prime, eta);
    const double binary = (ceff_wire + c_l) * vdd / std::pow(vdd - vtn, eta);
    return quaternary / binary;
}

double delay_ratio_long_wire(double vdd, double vtn, double vtn_prime, double eta) {
    if (!(vdd > 3.0 * vtn_prime)) {
        throw NonFunctionalError("vdd does not exceed 3 vtn': worst-case quaternary swing cannot complete");
    }
    return std::pow(3.0, eta - 1.0) * std::pow(vdd - vtn, eta) / std::pow(vdd - 3.0 * vtn_prime, eta);
}

double leakage_current(const TransistorSpec& spec, const LeakageModel& lm, double k_bb) {
    const double vt = effective_vt(spec, k_bb);
    return lm.i0 * std::pow(10.0, (lm.vt_ref - vt) / lm.swing) * spec.width_mult;
}

std::string_view to_string(RepeaterMode mode) noexcept {
    switch (mode) {
        case RepeaterMode::FAST: return "FAST";
        case RepeaterMode::STD: return "STD";
        case RepeaterMode::LL: return "LL";
    }
    return "?";
}

RepeaterMode parse_repeater_mode(std::string_view text) {
    std::string upper(text);
    for (auto& c : upper) {
        c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    }
    if (upper == "FAST") return RepeaterMode::FAST;
    if (upper == "STD") return RepeaterMode::STD;
    if (upper == "LL") return RepeaterMode::LL;
    throw DomainError("unknown repeater mode '" + std::string(text) + "' (expected FAST, STD or LL)");
}

double ModePresets::vbb(RepeaterMode mode) const noexcept {
    switch (mode) {
        case RepeaterMode::FAST: return fast_vbb;
        case RepeaterMode::STD: return std_vbb;
        case RepeaterMode::LL: return ll_vbb;
    }
    return std_vbb;
}

double default_cycle_time(RepeaterMode mode) noexcept {
    switch (mode) {
        case RepeaterMode::FAST: return 10e-9;
        case RepeaterMode::STD: return 40e-9;
        case RepeaterMode::LL: return 70e-9;
    }
    return 40e-9;
}

}  // namespace mvroute
