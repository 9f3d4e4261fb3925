#pragma once

// Radix-R logic levels: voltage ladder, per-transition switching energy and
// transition-complete test vectors.

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

namespace mvroute {

/// Number of logic levels carried by one wire. Only 2, 3 and 4 are modelled.
class Radix {
public:
    explicit Radix(int value);

    [[nodiscard]] int value() const noexcept { return value_; }
    [[nodiscard]] int max_level() const noexcept { return value_ - 1; }

    friend bool operator==(Radix, Radix) = default;

private:
    int value_;
};

/// Uniform voltage ladder: level k sits at k * vdd / (R - 1).
class VoltageMap {
public:
    explicit VoltageMap(Radix radix, double vdd = 0.9, double vboost = 1.1);

    [[nodiscard]] Radix radix() const noexcept { return radix_; }
    [[nodiscard]] double vdd() const noexcept { return vdd_; }
    [[nodiscard]] double vboost() const noexcept { return vboost_; }
    [[nodiscard]] double step() const noexcept { return vdd_ / radix_.max_level(); }
    [[nodiscard]] const std::vector<double>& levels() const noexcept { return levels_; }

    /// Nearest level to `volts`, or -1 when no level lies within `tolerance`.
    [[nodiscard]] int level_of(double volts, double tolerance) const noexcept;

private:
    Radix radix_;
    double vdd_;
    double vboost_;
    std::vector<double> levels_;
};

[[nodiscard]] double voltage_of(int level, const VoltageMap& vmap);

/// cap * (V(to) - V(from))^2
[[nodiscard]] double transition_energy(int from, int to, double cap, const VoltageMap& vmap);

/// Exact rational coefficient of C*vdd^2 for the uniform average over all R^2
/// ordered transitions: sum (a-b)^2 / ((R-1)^2 * R^2).
struct EnergyRational {
    std::int64_t numerator;
    std::int64_t denominator;
    [[nodiscard]] double value() const noexcept {
        return static_cast<double>(numerator) / static_cast<double>(denominator);
    }
};
[[nodiscard]] EnergyRational average_energy_coefficient(Radix radix);

[[nodiscard]] double average_transition_energy(Radix radix, double cap, const VoltageMap& vmap);

struct TransitionEnergyTable {
    Radix radix;
    double unit_cap;
    std::vector<std::vector<double>> entries;  // entries[from][to], joules
    double average;
};

[[nodiscard]] TransitionEnergyTable transition_energy_table(double cap, const VoltageMap& vmap);

struct TestVector {
    Radix radix;
    std::vector<int> sequence;
    std::map<std::pair<int, int>, int> coverage;  // (from, to) -> occurrences
};

/// Eulerian circuit over the complete digraph with self-loops on R nodes.
/// Every ordered pair (a, b), a == b included, appears exactly once as a
/// consecutive pair; the sequence has R^2 + 1 entries and depends only on seed.
[[nodiscard]] TestVector transition_complete_sequence(Radix radix, std::uint64_t seed);

/// Counts consecutive pairs of an arbitrary level sequence.
[[nodiscard]] std::map<std::pair<int, int>, int> transition_coverage(const std::vector<int>& sequence);

}  // namespace mvroute
