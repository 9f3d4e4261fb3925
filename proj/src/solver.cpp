#include "mvroute/solver.hpp"

#include "mvroute/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>

namespace mvroute {

namespace {

// Comparisons against a threshold are made with this slack so that a pass
// device sitting exactly at Vgate - Vt still reads as conducting.
constexpr double kEps = 1e-9;

using Values = std::vector<std::optional<double>>;

struct Drives {
    std::vector<double> strong;    // full copies of a terminal voltage
    std::vector<double> ceilings;  // NMOS threshold-limited pull-ups
    std::vector<double> floors;    // PMOS threshold-limited pull-downs
};

struct Resolved {
    std::optional<double> value;
    bool contention = false;
};

Resolved resolve(const Drives& d, double tol) {
    Resolved r;
    if (!d.strong.empty()) {
        const auto [lo, hi] = std::minmax_element(d.strong.begin(), d.strong.end());
        const double v = 0.5 * (*lo + *hi);
        r.value = v;
        r.contention = (*hi - *lo) > tol;
        for (double c : d.ceilings) {
            r.contention = r.contention || v < c - tol;
        }
        for (double f : d.floors) {
            r.contention = r.contention || v > f + tol;
        }
        return r;
    }
    const bool up = !d.ceilings.empty();
    const bool down = !d.floors.empty();
    if (up && !down) {
        r.value = *std::max_element(d.ceilings.begin(), d.ceilings.end());
    } else if (down && !up) {
        r.value = *std::min_element(d.floors.begin(), d.floors.end());
    } else if (up && down) {
        const double c = *std::max_element(d.ceilings.begin(), d.ceilings.end());
        const double f = *std::min_element(d.floors.begin(), d.floors.end());
        if (c >= f - tol) {
            r.value = 0.5 * (c + f);
            r.contention = c > f + tol;
        }
        // c < f: every voltage in the gap keeps both devices off.
    }
    return r;
}

class Engine {
public:
    Engine(const Netlist& netlist, const std::map<std::string, double>& assignment, const SolverOptions& opt)
        : net_(netlist), opt_(opt) {
        net_.validate();
        const auto& nodes = net_.nodes();
        driven_.assign(nodes.size(), std::nullopt);
        for (NodeId i = 0; i < nodes.size(); ++i) {
            if (nodes[i].kind == NodeKind::Rail) {
                driven_[i] = nodes[i].rail_volts;
            }
        }
        for (const auto& [name, volts] : assignment) {
            auto id = net_.find_node(name);
            if (!id || nodes[*id].kind != NodeKind::Input) {
                throw DomainError("'" + name + "' is not an input node");
            }
            driven_[*id] = volts;
        }
        for (NodeId i = 0; i < nodes.size(); ++i) {
            if (nodes[i].kind == NodeKind::Input && !driven_[i]) {
                throw DomainError("input '" + nodes[i].name + "' is not assigned");
            }
        }
        min_driven_ = std::numeric_limits<double>::infinity();
        max_driven_ = -std::numeric_limits<double>::infinity();
        for (const auto& v : driven_) {
            if (v) {
                min_driven_ = std::min(min_driven_, *v);
                max_driven_ = std::max(max_driven_, *v);
            }
        }
        vt_.reserve(net_.transistors().size());
        for (const auto& t : net_.transistors()) {
            vt_.push_back(effective_vt(t.spec, opt_.k_bb));
        }
        incident_.assign(nodes.size(), {});
        for (std::size_t k = 0; k < net_.transistors().size(); ++k) {
            const auto& t = net_.transistors()[k];
            incident_[t.source].push_back(k);
            if (t.drain != t.source) {
                incident_[t.drain].push_back(k);
            }
        }
    }

    SteadyState run() {
        const std::size_t n_nodes = net_.nodes().size();
        const std::size_t n_tr = net_.transistors().size();
        const std::size_t limit =
            opt_.max_iterations != 0 ? opt_.max_iterations : std::max<std::size_t>(n_nodes * std::max<std::size_t>(n_tr, 1), 4);

        Values gates = driven_;
        std::vector<bool> contended(n_nodes, false);
        SteadyState out;
        for (std::size_t iter = 1; iter <= limit; ++iter) {
            Values next = propagate(gates, contended);
            out.iterations = iter;
            if (same(next, gates)) {
                out.converged = true;
                gates = std::move(next);
                break;
            }
            gates = std::move(next);
        }
        // Contention flags belong to the final gate configuration.
        propagate(gates, contended);
        return report(gates, contended, std::move(out));
    }

private:
    // Node voltages that follow from the rails and inputs with every gate held
    // at `gates`. Starts from the driven nodes only so that no value can be
    // sustained by its own echo.
    Values propagate(const Values& gates, std::vector<bool>& contended) const {
        const std::size_t n_nodes = net_.nodes().size();
        Values values = driven_;
        std::vector<bool> flags(n_nodes, false);
        for (std::size_t pass = 0; pass <= n_nodes; ++pass) {
            Values next = driven_;
            std::fill(flags.begin(), flags.end(), false);
            for (NodeId v = 0; v < n_nodes; ++v) {
                if (driven_[v]) {
                    continue;
                }
                const Drives d = drives_into(v, gates, values);
                const Resolved r = resolve(d, opt_.contention_tolerance);
                next[v] = r.value;
                flags[v] = r.contention;
            }
            if (same(next, values)) {
                break;
            }
            values = std::move(next);
        }
        contended = flags;
        return values;
    }

    Drives drives_into(NodeId v, const Values& gates, const Values& values) const {
        Drives d;
        for (std::size_t k : incident_[v]) {
            const auto& t = net_.transistors()[k];
            const NodeId u = (t.source == v) ? t.drain : t.source;
            if (u == v || !gates[t.gate] || !values[u]) {
                continue;
            }
            const double vg = *gates[t.gate];
            const double vu = *values[u];
            if (t.spec.polarity == Polarity::NMOS) {
                const double ceiling = vg - vt_[k];
                if (vu < ceiling - kEps) {
                    d.strong.push_back(vu);
                } else if (ceiling > min_driven_ + kEps) {
                    d.ceilings.push_back(ceiling);
                }
            } else {
                const double floor = vg + vt_[k];
                if (vu > floor + kEps) {
                    d.strong.push_back(vu);
                } else if (floor < max_driven_ - kEps) {
                    d.floors.push_back(floor);
                }
            }
        }
        return d;
    }

    static bool same(const Values& a, const Values& b) {
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a[i].has_value() != b[i].has_value()) {
                return false;
            }
            if (a[i] && std::abs(*a[i] - *b[i]) > 1e-12) {
                return false;
            }
        }
        return true;
    }

    SteadyState report(const Values& values, const std::vector<bool>& contended, SteadyState out) const {
        const auto& nodes = net_.nodes();
        for (NodeId i = 0; i < nodes.size(); ++i) {
            if (values[i]) {
                out.node_voltages.emplace(nodes[i].name, *values[i]);
            } else if (!driven_[i]) {
                out.floating.push_back(nodes[i].name);
            }
            if (contended[i]) {
                out.contention.push_back(nodes[i].name);
            }
        }
        for (std::size_t k = 0; k < net_.transistors().size(); ++k) {
            const auto& t = net_.transistors()[k];
            out.transistor_states.emplace(t.id, conducts(t, vt_[k], values) ? SwitchState::ON : SwitchState::OFF);
        }
        return out;
    }

    static bool conducts(const Transistor& t, double vt, const Values& values) {
        if (!values[t.gate]) {
            return false;
        }
        const auto& a = values[t.source];
        const auto& b = values[t.drain];
        if (!a && !b) {
            return false;
        }
        const double vg = *values[t.gate];
        if (t.spec.polarity == Polarity::NMOS) {
            const double low = (a && b) ? std::min(*a, *b) : (a ? *a : *b);
            return vg - low > vt - kEps;
        }
        const double high = (a && b) ? std::max(*a, *b) : (a ? *a : *b);
        return high - vg > vt - kEps;
    }

    const Netlist& net_;
    SolverOptions opt_;
    Values driven_;
    std::vector<double> vt_;
    std::vector<std::vector<std::size_t>> incident_;
    double min_driven_ = 0.0;
    double max_driven_ = 0.0;
};

}  // namespace

double SteadyState::voltage(const std::string& node) const {
    auto it = node_voltages.find(node);
    if (it == node_voltages.end()) {
        throw DomainError("node '" + node + "' has no resolved voltage");
    }
    return it->second;
}

bool SteadyState::is_on(const std::string& transistor) const {
    auto it = transistor_states.find(transistor);
    if (it == transistor_states.end()) {
        throw DomainError("no transistor '" + transistor + "'");
    }
    return it->second == SwitchState::ON;
}

bool SteadyState::is_floating(const std::string& node) const {
    return std::find(floating.begin(), floating.end(), node) != floating.end();
}

bool SteadyState::is_contended(const std::string& node) const {
    return std::find(contention.begin(), contention.end(), node) != contention.end();
}

SteadyState solve_steady_state(const Netlist& netlist, const std::map<std::string, double>& input_assignment,
                               const SolverOptions& options) {
    return Engine(netlist, input_assignment, options).run();
}

}  // namespace mvroute
