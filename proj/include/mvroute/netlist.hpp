#pragma once

#include "mvroute/device.hpp"

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace mvroute {

using NodeId = std::size_t;

enum class NodeKind { Rail, Input, Output, Internal };

struct Node {
    std::string name;
    NodeKind kind = NodeKind::Internal;
    double rail_volts = 0.0;  // meaningful for rails only
};

/// Switch-abstracted transistor. Source and drain are interchangeable for the
/// solver; the names follow the schematic orientation.
struct Transistor {
    std::string id;
    NodeId gate = 0;
    NodeId source = 0;
    NodeId drain = 0;
    TransistorSpec spec;
};

/// Named nodes, fixed-voltage rails and transistors. Node names and
/// transistor ids are unique.
class Netlist {
public:
    NodeId add_rail(const std::string& name, double volts);
    NodeId add_input(const std::string& name);
    NodeId add_output(const std::string& name);
    /// Existing node of that name, or a new internal node.
    NodeId node(const std::string& name);

    void add_transistor(const std::string& id, const std::string& gate, const std::string& source,
                        const std::string& drain, const TransistorSpec& spec);

    [[nodiscard]] std::optional<NodeId> find_node(const std::string& name) const;
    [[nodiscard]] std::optional<std::size_t> find_transistor(const std::string& id) const;
    [[nodiscard]] const std::vector<Node>& nodes() const noexcept { return nodes_; }
    [[nodiscard]] const std::vector<Transistor>& transistors() const noexcept { return transistors_; }
    [[nodiscard]] std::vector<NodeId> nodes_of_kind(NodeKind kind) const;
    [[nodiscard]] const Transistor& transistor(const std::string& id) const;

    /// Copy with every transistor spec rewritten by `fn`.
    [[nodiscard]] Netlist with_specs(const std::function<TransistorSpec(const Transistor&)>& fn) const;

    /// Throws NetlistError unless there is at least one rail and every
    /// transistor references existing nodes.
    void validate() const;

private:
    NodeId add_node(const std::string& name, NodeKind kind, double volts);

    std::vector<Node> nodes_;
    std::vector<Transistor> transistors_;
    std::unordered_map<std::string, NodeId> node_index_;
    std::unordered_map<std::string, std::size_t> transistor_index_;
};

}  // namespace mvroute
