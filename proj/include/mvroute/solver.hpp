#pragma once

#include "mvroute/device.hpp"
#include "mvroute/netlist.hpp"

#include <map>
#include <string>
#include <vector>

namespace mvroute {

enum class SwitchState { OFF, ON };

struct SolverOptions {
    /// Two drives onto one node further apart than this are contention.
    double contention_tolerance = 1e-3;
    double k_bb = kDefaultBackBiasCoefficient;
    /// 0 selects node count x transistor count.
    std::size_t max_iterations = 0;
};

struct SteadyState {
    std::map<std::string, double> node_voltages;  // resolved nodes only
    std::map<std::string, SwitchState> transistor_states;
    std::vector<std::string> contention;
    std::vector<std::string> floating;  // non-driven nodes with no rail path
    std::size_t iterations = 0;
    bool converged = false;

    [[nodiscard]] bool has_voltage(const std::string& node) const { return node_voltages.contains(node); }
    [[nodiscard]] double voltage(const std::string& node) const;
    [[nodiscard]] bool is_on(const std::string& transistor) const;
    [[nodiscard]] bool is_floating(const std::string& node) const;
    [[nodiscard]] bool is_contended(const std::string& node) const;

    friend bool operator==(const SteadyState&, const SteadyState&) = default;
};

/// Switch-level steady state of `netlist` with inputs held at the given
/// voltages.
///
/// A transistor conducts when its gate overdrive against the lower terminal
/// (NMOS) or the higher terminal (PMOS) exceeds its effective threshold.
/// Conducting devices copy a terminal voltage across; an NMOS can raise a
/// node no higher than Vgate - Vt and a PMOS lower it no further than
/// Vgate + |Vt|. Gate voltages are relaxed Jacobi-style until no node moves.
///
/// Throws DomainError when an input is unassigned or a non-input is assigned,
/// IllegalBiasError when any transistor sits outside its bias window.
[[nodiscard]] SteadyState solve_steady_state(const Netlist& netlist,
                                             const std::map<std::string, double>& input_assignment,
                                             const SolverOptions& options = {});

}  // namespace mvroute
