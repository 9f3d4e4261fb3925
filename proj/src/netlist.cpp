#include "mvroute/netlist.hpp"

#include "mvroute/errors.hpp"

namespace mvroute {

NodeId Netlist::add_node(const std::string& name, NodeKind kind, double volts) {
    if (name.empty()) {
        throw NetlistError("empty node name");
    }
    if (auto it = node_index_.find(name); it != node_index_.end()) {
        Node& existing = nodes_[it->second];
        if (existing.kind != NodeKind::Internal || kind == NodeKind::Internal) {
            throw NetlistError("node '" + name + "' declared twice");
        }
        // Promote a node first seen as a transistor terminal.
        existing.kind = kind;
        existing.rail_volts = volts;
        return it->second;
    }
    const NodeId id = nodes_.size();
    nodes_.push_back({name, kind, volts});
    node_index_.emplace(name, id);
    return id;
}

NodeId Netlist::add_rail(const std::string& name, double volts) {
    return add_node(name, NodeKind::Rail, volts);
}

NodeId Netlist::add_input(const std::string& name) {
    return add_node(name, NodeKind::Input, 0.0);
}

NodeId Netlist::add_output(const std::string& name) {
    return add_node(name, NodeKind::Output, 0.0);
}

NodeId Netlist::node(const std::string& name) {
    if (auto found = find_node(name)) {
        return *found;
    }
    return add_node(name, NodeKind::Internal, 0.0);
}

void Netlist::add_transistor(const std::string& id, const std::string& gate, const std::string& source,
                             const std::string& drain, const TransistorSpec& spec) {
    if (id.empty()) {
        throw NetlistError("empty transistor id");
    }
    if (transistor_index_.contains(id)) {
        throw NetlistError("transistor '" + id + "' declared twice");
    }
    Transistor t{id, node(gate), node(source), node(drain), spec};
    transistor_index_.emplace(id, transistors_.size());
    transistors_.push_back(std::move(t));
}

std::optional<NodeId> Netlist::find_node(const std::string& name) const {
    if (auto it = node_index_.find(name); it != node_index_.end()) {
        return it->second;
    }
    return std::nullopt;
}

std::optional<std::size_t> Netlist::find_transistor(const std::string& id) const {
    if (auto it = transistor_index_.find(id); it != transistor_index_.end()) {
        return it->second;
    }
    return std::nullopt;
}

const Transistor& Netlist::transistor(const std::string& id) const {
    auto idx = find_transistor(id);
    if (!idx) {
        throw NetlistError("no transistor '" + id + "'");
    }
    return transistors_[*idx];
}

std::vector<NodeId> Netlist::nodes_of_kind(NodeKind kind) const {
    std::vector<NodeId> out;
    for (NodeId i = 0; i < nodes_.size(); ++i) {
        if (nodes_[i].kind == kind) {
            out.push_back(i);
        }
    }
    return out;
}

Netlist Netlist::with_specs(const std::function<TransistorSpec(const Transistor&)>& fn) const {
    Netlist copy = *this;
    for (auto& t : copy.transistors_) {
        t.spec = fn(t);
    }
    return copy;
}

void Netlist::validate() const {
    if (nodes_of_kind(NodeKind::Rail).empty()) {
        throw NetlistError("netlist has no supply rail");
    }
    for (const auto& t : transistors_) {
        for (NodeId n : {t.gate, t.source, t.drain}) {
            if (n >= nodes_.size()) {
                throw NetlistError("transistor '" + t.id + "' references a missing node");
            }
        }
    }
}

}  // namespace mvroute
