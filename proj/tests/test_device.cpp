#include "mvroute/device.hpp"
#include "mvroute/errors.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace mvroute;

namespace {

TransistorSpec spec(Flavor f, double vt0, double vbb, double poly = 0.0) {
    TransistorSpec s;
    s.flavor = f;
    s.vt0 = vt0;
    s.vbb = vbb;
    s.poly_bias_dvt = poly;
    return s;
}

}  // namespace

TEST(BackBias, LegalityWindows) {
    EXPECT_THROW(validate_back_bias(spec(Flavor::RVT, 0.45, 0.5)), IllegalBiasError);
    EXPECT_NO_THROW(validate_back_bias(spec(Flavor::RVT, 0.45, -2.0)));
    EXPECT_NO_THROW(validate_back_bias(spec(Flavor::RVT, 0.45, -3.0)));
    EXPECT_THROW(validate_back_bias(spec(Flavor::RVT, 0.45, -3.1)), IllegalBiasError);
    EXPECT_NO_THROW(validate_back_bias(spec(Flavor::LVT, 0.30, 2.0)));
    EXPECT_NO_THROW(validate_back_bias(spec(Flavor::LVT, 0.30, 3.0)));
    EXPECT_THROW(validate_back_bias(spec(Flavor::LVT, 0.30, -0.5)), IllegalBiasError);
}

TEST(BackBias, ErrorNamesFlavorAndLimit) {
    try {
        validate_back_bias(spec(Flavor::RVT, 0.45, 0.5));
        FAIL();
    } catch (const IllegalBiasError& e) {
        const std::string msg = e.what();
        EXPECT_NE(msg.find("rvt"), std::string::npos);
        EXPECT_NE(msg.find("0.3"), std::string::npos);
    }
}

TEST(BackBias, WidthLimitedToFourX) {
    auto s = spec(Flavor::LVT, 0.3, 0.0);
    s.width_mult = 4.5;
    EXPECT_THROW(validate_back_bias(s), IllegalBiasError);
}

TEST(EffectiveVt, Examples) {
    EXPECT_NEAR(effective_vt(spec(Flavor::RVT, 0.35, 0.3)), 0.3245, 1e-12);
    EXPECT_DOUBLE_EQ(effective_vt(spec(Flavor::LVT, 0.31, 0.0)), 0.31);
    EXPECT_NEAR(effective_vt(spec(Flavor::LVT, 0.30, 3.0)), 0.045, 1e-12);
    EXPECT_NEAR(effective_vt(spec(Flavor::RVT, 0.45, -2.0, 0.1)), 0.45 + 0.17 + 0.1, 1e-12);
    EXPECT_THROW((void)effective_vt(spec(Flavor::RVT, 0.45, 1.0)), IllegalBiasError);
}

TEST(EffectiveVt, LinearDecreasingInForwardBias) {
    double prev = effective_vt(spec(Flavor::LVT, 0.3, -0.3));
    for (double vbb = -0.2; vbb <= 3.0; vbb += 0.1) {
        const double vt = effective_vt(spec(Flavor::LVT, 0.3, vbb));
        EXPECT_LT(vt, prev);
        EXPECT_NEAR(prev - vt, 0.085 * 0.1, 1e-12);
        prev = vt;
    }
}

TEST(StageDelay, LinearInLoadPowerLawInOverdrive) {
    DelayModel dm(1.0, 1.0);
    const double base = stage_delay(1e-15, 0.9, 0.4, dm);
    EXPECT_NEAR(stage_delay(2e-15, 0.9, 0.4, dm), 2 * base, 1e-30);
    EXPECT_NEAR(stage_delay(1e-15, 0.9, 0.2, dm), 2 * base, 1e-27);
    DelayModel dm15(1.5, 1.0);
    EXPECT_NEAR(stage_delay(1e-15, 0.9, 0.2, dm15) / stage_delay(1e-15, 0.9, 0.4, dm15), std::pow(2.0, 1.5), 1e-12);
}

TEST(StageDelay, NonpositiveOverdriveIsNonFunctional) {
    DelayModel dm;
    EXPECT_THROW((void)stage_delay(1e-15, 0.3, 0.0, dm), NonFunctionalError);
    EXPECT_THROW((void)stage_delay(1e-15, 0.3, -0.01, dm), NonFunctionalError);
    double prev = 0.0;
    for (double ov = 0.3; ov > 1e-4; ov /= 2) {
        const double d = stage_delay(1e-15, 0.3, ov, dm);
        EXPECT_GT(d, prev);
        prev = d;
    }
}

TEST(DelayModel, EtaRange) {
    EXPECT_THROW(DelayModel(0.9, 1.0), DomainError);
    EXPECT_THROW(DelayModel(2.1, 1.0), DomainError);
    EXPECT_NO_THROW(DelayModel(2.0, 1.0));
}

TEST(EnergyRatio, ClosedFormPoints) {
    EXPECT_NEAR(energy_ratio_quaternary(0.0, 1.0), 5.0 / 6.0, 1e-12);
    EXPECT_NEAR(energy_ratio_quaternary(1.0, 1.0), 5.0 / 9.0, 1e-12);
    EXPECT_NEAR(energy_ratio_quaternary(1e6, 1.0), 40.0 / 144.0, 1e-6);
}

TEST(EnergyRatio, MonotoneDecreasingAndBounded) {
    double prev = energy_ratio_quaternary(0.0, 1.0);
    for (double cw = 0.5; cw < 1e7; cw *= 1.7) {
        const double r = energy_ratio_quaternary(cw, 1.0);
        EXPECT_LT(r, prev);
        EXPECT_GT(r, 40.0 / 144.0);
        prev = r;
    }
}

TEST(DelayRatio, DirectEvaluation) {
    // Frozen from an independent evaluation of the formula.
    EXPECT_NEAR(delay_ratio_quaternary(10, 1, 0.9, 0.3, 0.1, 1.5), 2.046969136217764, 1e-9);
}

TEST(DelayRatio, LongWireLimit) {
    EXPECT_NEAR(delay_ratio_long_wire(0.9, 0.3, 0.1, 1.5), std::sqrt(3.0), 1e-12);
    EXPECT_NEAR(delay_ratio_long_wire(0.9, 0.3, 0.1, 1.0), 1.0, 1e-12);
    for (double eta : {1.0, 1.3, 2.0}) {
        EXPECT_NEAR(delay_ratio_long_wire(0.9, 0.0, 0.0, eta), std::pow(3.0, eta - 1), 1e-12);
    }
    EXPECT_THROW((void)delay_ratio_long_wire(0.9, 0.3, 0.31, 1.5), NonFunctionalError);
    EXPECT_THROW((void)delay_ratio_quaternary(1, 1, 0.9, 0.3, 0.3, 1.5), NonFunctionalError);
}

TEST(DelayRatio, ConvergesToLongWire) {
    for (double eta : {1.0, 1.5, 2.0}) {
        const double lim = delay_ratio_long_wire(0.9, 0.3, 0.12, eta);
        const double at1000 = delay_ratio_quaternary(1000, 1, 0.9, 0.3, 0.12, eta);
        EXPECT_LT(std::abs(at1000 - lim) / lim, 0.01);
        EXPECT_LT(std::abs(delay_ratio_quaternary(1e4, 1, 0.9, 0.3, 0.12, eta) - lim),
                  std::abs(at1000 - lim));
    }
}

TEST(Leakage, OneDecadePerSwing) {
    LeakageModel lm(1e-9, 0.060, 0.30);
    EXPECT_NEAR(leakage_current(spec(Flavor::LVT, 0.30, 0.0), lm), 1e-9, 1e-21);
    auto lowered = spec(Flavor::LVT, 0.30, 0.0);
    lowered.poly_bias_dvt = -0.060;  // only for the arithmetic check
    EXPECT_NEAR(leakage_current(lowered, lm), 1e-8, 1e-20);
    EXPECT_NEAR(leakage_current(spec(Flavor::LVT, 0.30, 1.0), lm) / 1e-9, 26.101572156825373, 1e-9);
}

TEST(Leakage, MonotoneInForwardBiasAndScalesWithWidth) {
    LeakageModel lm;
    double prev = 0.0;
    for (double vbb = -0.3; vbb <= 3.0; vbb += 0.25) {
        const double i = leakage_current(spec(Flavor::LVT, 0.3, vbb), lm);
        EXPECT_GT(i, prev);
        prev = i;
    }
    auto wide = spec(Flavor::LVT, 0.3, 1.0);
    wide.width_mult = 4.0;
    EXPECT_NEAR(leakage_current(wide, lm), 4 * leakage_current(spec(Flavor::LVT, 0.3, 1.0), lm), 1e-18);
    EXPECT_THROW((void)leakage_current(spec(Flavor::RVT, 0.45, 1.0), lm), IllegalBiasError);
}

TEST(RepeaterModes, PresetsOrderedAndParsed) {
    ModePresets p;
    EXPECT_GT(p.vbb(RepeaterMode::FAST), p.vbb(RepeaterMode::STD));
    EXPECT_GT(p.vbb(RepeaterMode::STD), p.vbb(RepeaterMode::LL));
    EXPECT_EQ(parse_repeater_mode("fast"), RepeaterMode::FAST);
    EXPECT_EQ(parse_repeater_mode("LL"), RepeaterMode::LL);
    EXPECT_THROW((void)parse_repeater_mode("turbo"), DomainError);
    EXPECT_DOUBLE_EQ(default_cycle_time(RepeaterMode::STD), 40e-9);
}
