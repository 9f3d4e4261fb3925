#include "mvroute/errors.hpp"
#include "mvroute/interconnect.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace mvroute;

namespace {

double rel(double a, double b) {
    return std::abs(a - b) / std::abs(b);
}

}  // namespace

TEST(EffectiveCapacitance, LumpedProduct) {
    EXPECT_NEAR(effective_capacitance({2.0, 0.2e-15, 46.0}), 9.2e-15, 1e-27);
    EXPECT_EQ(effective_capacitance({2.0, 0.2e-15, 0.0}), 0.0);
    EXPECT_NEAR(effective_capacitance({2.0, 0.2e-15, 92.0}), 2 * effective_capacitance({2.0, 0.2e-15, 46.0}), 1e-27);
}

TEST(EffectiveCapacitance, FirstOrderFactorInHalfToOne) {
    CeffOptions o;
    o.first_order = true;
    o.driver_resistance = 1e3;
    const WireModel w{2.0, 0.2e-15, 500.0};  // Rw = Rd
    EXPECT_NEAR(effective_capacitance(w, o) / effective_capacitance(w), 0.75, 1e-12);
    o.driver_resistance = 1e12;
    EXPECT_NEAR(effective_capacitance(w, o) / effective_capacitance(w), 1.0, 1e-6);
}

TEST(TrackDelay, DriverStagesFollowModePresets) {
    Technology tech;
    TrackConfig t;
    t.radix = 2;
    EXPECT_NEAR(driver_stage(t, tech).vt, 0.30, 1e-12);
    EXPECT_NEAR(driver_stage(t, tech).swing, 0.9, 1e-12);
    t.radix = 4;
    t.mode = RepeaterMode::FAST;
    const auto fast = driver_stage(t, tech);
    EXPECT_NEAR(fast.swing, 0.3, 1e-12);
    EXPECT_NEAR(fast.vt, 0.30 - 0.085 * 2.35, 1e-12);
    EXPECT_NEAR(fast.input_cap, 3 * tech.loads.c_load_binary, 1e-30);
    t.mode = RepeaterMode::LL;
    EXPECT_GT(driver_stage(t, tech).vt, fast.vt);
}

TEST(TrackDelay, AdditiveInSegments) {
    Technology tech;
    TrackConfig t;
    t.length_units = 3;
    const double one = track_delay(t, tech);
    t.segments = 2;
    EXPECT_NEAR(track_delay(t, tech), 2 * one, 1e-24);
}

TEST(TrackDelay, RatioMatchesDeviceFormulaAtAnyLength) {
    Technology tech;
    for (double len : {0.0, 1.0, 10.0, 300.0}) {
        TrackConfig q;
        q.length_units = len;
        q.mode = RepeaterMode::FAST;
        TrackConfig b = q;
        b.radix = 2;
        const auto dq = driver_stage(q, tech);
        const auto db = driver_stage(b, tech);
        const double cw = effective_capacitance(tech.wire(q));
        const double expected = delay_ratio_quaternary(cw, q.loads_per_segment * tech.loads.c_load_binary, tech.vdd,
                                                       db.vt, dq.vt, tech.delay.eta);
        EXPECT_NEAR(track_delay(q, tech) / track_delay(b, tech), expected, 1e-9 * expected) << len;
    }
}

TEST(TrackDelay, LongTrackApproachesLongWireLimit) {
    Technology tech;
    TrackConfig q;
    q.length_units = 1000;
    for (auto mode : {RepeaterMode::FAST, RepeaterMode::STD, RepeaterMode::LL}) {
        q.mode = mode;
        TrackConfig b = q;
        b.radix = 2;
        const double lim =
            delay_ratio_long_wire(tech.vdd, driver_stage(b, tech).vt, driver_stage(q, tech).vt, tech.delay.eta);
        EXPECT_LT(rel(track_delay(q, tech) / track_delay(b, tech), lim), 0.02) << to_string(mode);
    }
}

TEST(TrackDelay, TernaryTrackUnsupported) {
    TrackConfig t;
    t.radix = 3;
    EXPECT_THROW((void)track_delay(t, Technology{}), DomainError);
}

TEST(TrackEnergy, DynamicIsRSquaredTimesAverage) {
    Technology tech;
    TrackConfig t;
    t.length_units = 5;
    t.segments = 3;
    const auto vec = transition_complete_sequence(Radix(4), 11);
    const auto e = track_energy(t, tech, vec, 10e-9);
    const double cap = effective_capacitance(tech.wire(t)) + t.loads_per_segment * tech.loads.quaternary_input_cap();
    const VoltageMap vm(Radix(4), tech.vdd);
    EXPECT_NEAR(e.dynamic_j, t.segments * 16 * average_transition_energy(Radix(4), cap, vm), 1e-9 * e.dynamic_j);
}

TEST(TrackEnergy, ConstantVectorOnBareWireHasNoDynamicEnergy) {
    Technology tech;
    TrackConfig t;
    t.length_units = 0;
    t.loads_per_segment = 0;
    const TestVector flat{Radix(4), {2, 2, 2, 2}, transition_coverage({2, 2, 2, 2})};
    EXPECT_EQ(track_energy(t, tech, flat, 40e-9).dynamic_j, 0.0);
}

TEST(TrackEnergy, LeakageLinearInCycleTime) {
    Technology tech;
    TrackConfig t;
    const auto vec = transition_complete_sequence(Radix(4), 3);
    const auto a = track_energy(t, tech, vec, 10e-9);
    const auto b = track_energy(t, tech, vec, 70e-9);
    EXPECT_GT(a.leakage_j, 0.0);
    EXPECT_NEAR(b.leakage_j, 7 * a.leakage_j, 1e-12 * b.leakage_j);
    EXPECT_DOUBLE_EQ(a.dynamic_j, b.dynamic_j);
    EXPECT_DOUBLE_EQ(a.total_j(), a.dynamic_j + a.leakage_j);
}

TEST(TrackEnergy, RadixMismatchIsDomainError) {
    TrackConfig t;
    EXPECT_THROW((void)track_energy(t, Technology{}, transition_complete_sequence(Radix(2), 0), 1e-8), DomainError);
}

TEST(TrackEnergy, LowLeakageModeLeaksLessPerUnitTime) {
    Technology tech;
    const auto vec = transition_complete_sequence(Radix(4), 0);
    TrackConfig t;
    t.mode = RepeaterMode::FAST;
    const double fast = track_energy(t, tech, vec, default_cycle_time(RepeaterMode::FAST)).leakage_j /
                        default_cycle_time(RepeaterMode::FAST);
    t.mode = RepeaterMode::LL;
    const double ll = track_energy(t, tech, vec, default_cycle_time(RepeaterMode::LL)).leakage_j /
                      default_cycle_time(RepeaterMode::LL);
    EXPECT_LT(ll, fast);
    const double ll_delay = track_delay(t, tech);
    t.mode = RepeaterMode::FAST;
    EXPECT_LT(track_delay(t, tech), ll_delay);
}

TEST(EvaluateTrack, BitPlanesAndBaseline) {
    const auto vec = transition_complete_sequence(Radix(4), 5);
    const auto b0 = bit_plane(vec, 0);
    const auto b1 = bit_plane(vec, 1);
    ASSERT_EQ(b0.sequence.size(), vec.sequence.size());
    for (std::size_t i = 0; i < vec.sequence.size(); ++i) {
        EXPECT_EQ(2 * b1.sequence[i] + b0.sequence[i], vec.sequence[i]);
    }
    TrackConfig t;
    t.length_units = 1e6;
    const auto r = evaluate_track(t, Technology{}, vec, 10e-9);
    EXPECT_NEAR(r.dynamic_ratio(), 40.0 / 144.0, 1e-4);
}

TEST(Sweep, EnergyRatioDecreasesTowardLimit) {
    TrackConfig t;
    const auto rows = sweep_track_length({1, 2, 4, 8, 16, 32, 64, 1000}, t, Technology{}, 40e-9);
    for (std::size_t i = 1; i < rows.size(); ++i) {
        EXPECT_LT(rows[i].dyn_energy_ratio, rows[i - 1].dyn_energy_ratio);
        EXPECT_GT(rows[i].dyn_energy_ratio, 40.0 / 144.0);
    }
    EXPECT_NEAR(rows.back().dyn_energy_ratio, 0.2778, 0.02);
    TrackConfig last = t;
    last.length_units = 1000;
    const Technology tech;
    const double eq1 = energy_ratio_quaternary(effective_capacitance(tech.wire(last)),
                                               last.loads_per_segment * tech.loads.c_load_binary);
    EXPECT_LT(rel(rows.back().dyn_energy_ratio, eq1), 1e-9);
}

TEST(Sweep, StdEdpCrossesBelowOne) {
    TrackConfig t;
    t.mode = RepeaterMode::STD;
    const auto rows = sweep_track_length({1, 10, 100, 1000, 10000}, t, Technology{}, 40e-9);
    EXPECT_GT(rows.front().edp_ratio, 1.0);
    EXPECT_LT(rows.back().edp_ratio, 1.0);
}

TEST(Sweep, SingleLengthRepeatsEvaluation) {
    Technology tech;
    TrackConfig t;
    t.length_units = 7;
    const auto rows = sweep_track_length({7}, t, tech, 40e-9, 9);
    const auto r = evaluate_track(t, tech, transition_complete_sequence(Radix(4), 9), 40e-9);
    ASSERT_EQ(rows.size(), 1u);
    EXPECT_DOUBLE_EQ(rows[0].delay_ratio, r.delay_ratio());
    EXPECT_DOUBLE_EQ(rows[0].edp_ratio, r.edp_ratio());
    EXPECT_THROW((void)sweep_track_length({}, t, tech, 40e-9), DomainError);
}

TEST(Sweep, CsvIsDeterministic) {
    TrackConfig t;
    const auto a = sweep_to_csv(sweep_track_length({1, 2}, t, Technology{}, 40e-9));
    const auto b = sweep_to_csv(sweep_track_length({1, 2}, t, Technology{}, 40e-9));
    EXPECT_EQ(a, b);
    EXPECT_EQ(a.rfind("length_units,delay_ratio,dyn_energy_ratio,leak_ratio,edp_ratio\n1,", 0), 0u);
}
