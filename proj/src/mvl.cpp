#include "mvroute/mvl.hpp"

#include "mvroute/errors.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

namespace mvroute {

Radix::Radix(int value) : value_(value) {
    if (value < 2 || value > 4) {
        throw DomainError("radix must be 2, 3 or 4 (got " + std::to_string(value) + ")");
    }
}

VoltageMap::VoltageMap(Radix radix, double vdd, double vboost)
    : radix_(radix), vdd_(vdd), vboost_(vboost) {
    if (!(vdd > 0.0)) {
        throw DomainError("vdd must be positive");
    }
    levels_.reserve(static_cast<std::size_t>(radix.value()));
    for (int k = 0; k < radix.value(); ++k) {
        levels_.push_back(vdd * k / radix.max_level());
    }
}

int VoltageMap::level_of(double volts, double tolerance) const noexcept {
    for (int k = 0; k < radix_.value(); ++k) {
        if (std::abs(levels_[static_cast<std::size_t>(k)] - volts) <= tolerance) {
            return k;
        }
    }
    return -1;
}

double voltage_of(int level, const VoltageMap& vmap) {
    if (level < 0 || level > vmap.radix().max_level()) {
        throw DomainError("level " + std::to_string(level) + " out of range for radix " +
                          std::to_string(vmap.radix().value()));
    }
    return vmap.levels()[static_cast<std::size_t>(level)];
}

double transition_energy(int from, int to, double cap, const VoltageMap& vmap) {
    const double dv = voltage_of(to, vmap) - voltage_of(from, vmap);
    return cap * dv * dv;
}

EnergyRational average_energy_coefficient(Radix radix) {
    const std::int64_t r = radix.value();
    std::int64_t sum = 0;
    for (std::int64_t a = 0; a < r; ++a) {
        for (std::int64_t b = 0; b < r; ++b) {
            sum += (a - b) * (a - b);
        }
    }
    return {sum, (r - 1) * (r - 1) * r * r};
}

double average_transition_energy(Radix radix, double cap, const VoltageMap& vmap) {
    if (vmap.radix() != radix) {
        throw DomainError("voltage map radix does not match requested radix");
    }
    return average_energy_coefficient(radix).value() * cap * vmap.vdd() * vmap.vdd();
}

TransitionEnergyTable transition_energy_table(double cap, const VoltageMap& vmap) {
    const int r = vmap.radix().value();
    TransitionEnergyTable table{vmap.radix(), cap, {}, 0.0};
    table.entries.assign(static_cast<std::size_t>(r), std::vector<double>(static_cast<std::size_t>(r), 0.0));
    for (int a = 0; a < r; ++a) {
        for (int b = 0; b < r; ++b) {
            table.entries[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
                transition_energy(a, b, cap, vmap);
        }
    }
    table.average = average_transition_energy(vmap.radix(), cap, vmap);
    return table;
}

std::map<std::pair<int, int>, int> transition_coverage(const std::vector<int>& sequence) {
    std::map<std::pair<int, int>, int> coverage;
    for (std::size_t i = 1; i < sequence.size(); ++i) {
        ++coverage[{sequence[i - 1], sequence[i]}];
    }
    return coverage;
}

TestVector transition_complete_sequence(Radix radix, std::uint64_t seed) {
    const int r = radix.value();
    std::mt19937_64 rng(seed);

    // Unused out-edges per node, shuffled so the seed picks the circuit.
    std::vector<std::vector<int>> pending(static_cast<std::size_t>(r));
    for (int a = 0; a < r; ++a) {
        auto& edges = pending[static_cast<std::size_t>(a)];
        for (int b = 0; b < r; ++b) {
            edges.push_back(b);
        }
        std::shuffle(edges.begin(), edges.end(), rng);
    }

    // Hierholzer, iterative.
    std::vector<int> stack{0};
    std::vector<int> circuit;
    while (!stack.empty()) {
        auto& edges = pending[static_cast<std::size_t>(stack.back())];
        if (edges.empty()) {
            circuit.push_back(stack.back());
            stack.pop_back();
        } else {
            const int next = edges.back();
            edges.pop_back();
            stack.push_back(next);
        }
    }
    std::reverse(circuit.begin(), circuit.end());

    TestVector vec{radix, std::move(circuit), {}};
    vec.coverage = transition_coverage(vec.sequence);
    return vec;
}

}  // namespace mvroute
