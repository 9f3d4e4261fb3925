#pragma once

// Tile-level routing resource accounting for the binary bus-2 and quaternary
// architectures, and wire-area factors.

#include <string>
#include <vector>

namespace mvroute {

enum class ArchStyle { BinaryBus2, Quaternary };

[[nodiscard]] std::string to_string(ArchStyle style);

/// Pass-tree mux with n_select select bits. BinaryBus2 duplicates the tree
/// for the two wires of the bus.
[[nodiscard]] int mux_transistor_count(int n_select, ArchStyle style);

inline constexpr int kBinaryBufferTransistors = 4;      // one wire, 1x then 4x
inline constexpr int kQuaternaryRepeaterTransistors = 12;
inline constexpr int kTranslator4to2Transistors = 16;
inline constexpr int kTranslator2to4Transistors = 12;

struct ArchitectureSpec {
    int luts_per_clb = 4;
    int inputs_per_clb = 16;
    int outputs_per_clb = 4;
    int tracks_w = 64;
    double fc_in = 0.25;
    double lof = 1.1;
    ArchStyle style = ArchStyle::BinaryBus2;
    int sb_muxes_per_track = 4;
    int sb_mux_inputs = 8;
    int buffers_per_track = 16;
    int repeaters_per_track = 8;

    /// Throws ConfigError on non-positive counts, fc_in * W not a power of two
    /// >= 2, or switchbox inputs not a power of two >= 2.
    void validate() const;
};

struct LineItem {
    std::string name;
    double units;
    int transistors_each;
    bool lof_applied;
    double subtotal;
};

struct ResourceReport {
    ArchStyle style;
    std::vector<LineItem> items;
    double total_transistors = 0.0;
    double reduction_vs_baseline = 0.0;  // against the binary bus-2 tile of the same spec

    [[nodiscard]] long long truncated_total() const;
};

[[nodiscard]] ResourceReport tile_resources(const ArchitectureSpec& spec);

/// JSON with items[], total_transistors, reduction_vs_baseline.
[[nodiscard]] std::string report_to_json(const ResourceReport& report);
/// Aligned human-readable table.
[[nodiscard]] std::string report_to_table(const ResourceReport& report);

/// Routing wire area saved against binary with whole-wire bundling: one
/// quaternary wire replaces 2 binary (0.5), two ternary replace 3 (1/3).
[[nodiscard]] double wire_area_reduction(int radix);

struct AreaFactors {
    double wire_reduction = 0.5;
    double m2_supply_overhead = 0.15;
    int signal_layers = 6;
};

/// Every layer gains wire_reduction except one, which gives up
/// m2_supply_overhead of it to the extra supply rails.
[[nodiscard]] double layout_adjusted_routing_gain(const AreaFactors& f = {});

}  // namespace mvroute
