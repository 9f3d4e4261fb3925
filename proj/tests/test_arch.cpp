#include "mvroute/arch.hpp"
#include "mvroute/errors.hpp"
#include "mvroute/mvl.hpp"
#include "mvroute/primitives.hpp"

#include "json.hpp"

#include <gtest/gtest.h>

using namespace mvroute;

TEST(MuxCount, TableValues) {
    EXPECT_EQ(mux_transistor_count(3, ArchStyle::BinaryBus2), 40);
    EXPECT_EQ(mux_transistor_count(4, ArchStyle::BinaryBus2), 76);
    EXPECT_EQ(mux_transistor_count(3, ArchStyle::Quaternary), 26);
    EXPECT_EQ(mux_transistor_count(4, ArchStyle::Quaternary), 46);
    EXPECT_EQ(mux_transistor_count(1, ArchStyle::Quaternary), 6);
    EXPECT_THROW((void)mux_transistor_count(0, ArchStyle::Quaternary), DomainError);
}

TEST(MuxCount, BusDuplicatesOnlyThePassTree) {
    for (int n = 1; n <= 12; ++n) {
        EXPECT_EQ(mux_transistor_count(n, ArchStyle::BinaryBus2) - mux_transistor_count(n, ArchStyle::Quaternary),
                  (1 << (n + 1)) - 2);
    }
}

TEST(MuxCount, AgreesWithBuiltNetlists) {
    const VoltageMap vm(Radix(4));
    for (int n = 1; n <= 4; ++n) {
        EXPECT_EQ(static_cast<int>(build_primitive(PrimitiveKind::mux(n), vm).transistors().size()),
                  mux_transistor_count(n, ArchStyle::Quaternary));
    }
    EXPECT_EQ(build_primitive(PrimitiveKind::repeater(), vm).transistors().size(),
              static_cast<std::size_t>(kQuaternaryRepeaterTransistors));
    EXPECT_EQ(build_primitive(PrimitiveKind::translator_4to2(), vm).transistors().size(),
              static_cast<std::size_t>(kTranslator4to2Transistors));
    EXPECT_EQ(build_primitive(PrimitiveKind::translator_2to4(), vm).transistors().size(),
              static_cast<std::size_t>(kTranslator2to4Transistors));
    EXPECT_EQ(2 * build_binary_buffer(0.9).transistors().size(), 8u);
}

TEST(TileResources, BinaryTotal) {
    const auto r = tile_resources(ArchitectureSpec{});
    EXPECT_DOUBLE_EQ(r.total_transistors, 15552.0);
    EXPECT_EQ(r.truncated_total(), 15552);
    EXPECT_DOUBLE_EQ(r.reduction_vs_baseline, 0.0);
    ASSERT_EQ(r.items.size(), 3u);
    EXPECT_DOUBLE_EQ(r.items[0].subtotal, 10240.0);
    EXPECT_DOUBLE_EQ(r.items[1].subtotal, 4096.0);
    EXPECT_DOUBLE_EQ(r.items[2].subtotal, 1216.0);
}

TEST(TileResources, QuaternaryTotalAndReduction) {
    ArchitectureSpec s;
    s.style = ArchStyle::Quaternary;
    const auto r = tile_resources(s);
    EXPECT_NEAR(r.total_transistors, 14484.8, 1e-9);
    EXPECT_EQ(r.truncated_total(), 14484);
    EXPECT_NEAR(r.reduction_vs_baseline, 0.0686, 0.001);
    double sum = 0.0;
    for (const auto& i : r.items) {
        EXPECT_GE(i.subtotal, 0.0);
        sum += i.subtotal;
    }
    EXPECT_DOUBLE_EQ(sum, r.total_transistors);
}

TEST(TileResources, NoLayoutOverhead) {
    ArchitectureSpec s;
    s.style = ArchStyle::Quaternary;
    s.lof = 1.0;
    // 6656 + 6144 + 736 + 256 + 48
    EXPECT_DOUBLE_EQ(tile_resources(s).total_transistors, 13840.0);
}

TEST(TileResources, PerTrackItemsLinearInW) {
    for (auto style : {ArchStyle::BinaryBus2, ArchStyle::Quaternary}) {
        ArchitectureSpec s;
        s.style = style;
        std::vector<double> totals;
        for (int w : {32, 64, 128}) {
            s.tracks_w = w;
            s.fc_in = 16.0 / w;  // keep the connection-box mux size fixed
            totals.push_back(tile_resources(s).total_transistors);
        }
        // 32 -> 64 adds half of what 64 -> 128 adds.
        EXPECT_NEAR(2 * (totals[1] - totals[0]), totals[2] - totals[1], 1e-9);
    }
}

TEST(TileResources, ValidationErrors) {
    ArchitectureSpec s;
    s.fc_in = 0.3;
    EXPECT_THROW((void)tile_resources(s), ConfigError);
    s = {};
    s.sb_mux_inputs = 6;
    EXPECT_THROW((void)tile_resources(s), ConfigError);
    s = {};
    s.tracks_w = 0;
    EXPECT_THROW((void)tile_resources(s), ConfigError);
    s = {};
    s.lof = 0.9;
    EXPECT_THROW((void)tile_resources(s), ConfigError);
}

TEST(TileResources, JsonFields) {
    ArchitectureSpec s;
    s.style = ArchStyle::Quaternary;
    const auto j = nlohmann::json::parse(report_to_json(tile_resources(s)));
    EXPECT_EQ(j["items"].size(), 5u);
    EXPECT_NEAR(j["total_transistors"].get<double>(), 14484.8, 1e-9);
    EXPECT_EQ(j["total_transistors_truncated"].get<long long>(), 14484);
    EXPECT_NEAR(j["reduction_vs_baseline"].get<double>(), 0.0686, 0.001);
    const auto table = report_to_table(tile_resources(s));
    EXPECT_NE(table.find("14484.8"), std::string::npos);
    EXPECT_NE(table.find("truncated 14484"), std::string::npos);
}

TEST(AreaFactors, WireReduction) {
    EXPECT_DOUBLE_EQ(wire_area_reduction(4), 0.5);
    EXPECT_NEAR(wire_area_reduction(3), 0.3333, 1e-4);
    EXPECT_DOUBLE_EQ(wire_area_reduction(2), 0.0);
    EXPECT_THROW((void)wire_area_reduction(5), DomainError);
}

TEST(AreaFactors, LayoutAdjustedGain) {
    EXPECT_NEAR(layout_adjusted_routing_gain(), 0.475, 1e-12);
    AreaFactors f;
    f.m2_supply_overhead = 0.0;
    EXPECT_NEAR(layout_adjusted_routing_gain(f), 0.5, 1e-12);
    f = {};
    f.signal_layers = 1;
    EXPECT_NEAR(layout_adjusted_routing_gain(f), 0.35, 1e-12);
    f.signal_layers = 0;
    EXPECT_THROW((void)layout_adjusted_routing_gain(f), DomainError);
}
