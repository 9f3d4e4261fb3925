#include "mvroute/netlist_io.hpp"

#include "mvroute/errors.hpp"
#include "mvroute/format.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

namespace mvroute {

namespace {

[[noreturn]] void fail(std::size_t line_no, const std::string& what) {
    throw NetlistError("line " + std::to_string(line_no) + ": " + what);
}

double number(const std::string& token, std::size_t line_no, const char* field) {
    double v = 0.0;
    if (!parse_number(token, v)) {
        fail(line_no, std::string("bad ") + field + " '" + token + "'");
    }
    return v;
}

struct PendingTransistor {
    std::string id, gate, source, drain;
    TransistorSpec spec;
};

}  // namespace

Netlist read_netlist(std::istream& in) {
    Netlist net;
    std::vector<PendingTransistor> pending;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        std::istringstream ls(line);
        std::vector<std::string> tok;
        for (std::string t; ls >> t;) {
            tok.push_back(t);
        }
        if (tok.empty()) {
            continue;
        }
        try {
            if (tok[0] == "rail") {
                if (tok.size() != 3) fail(line_no, "expected 'rail NAME VOLTS'");
                net.add_rail(tok[1], number(tok[2], line_no, "rail voltage"));
            } else if (tok[0] == "input" || tok[0] == "output") {
                if (tok.size() != 2) fail(line_no, "expected '" + tok[0] + " NAME'");
                tok[0] == "input" ? net.add_input(tok[1]) : net.add_output(tok[1]);
            } else {
                if (tok.size() < 8) {
                    fail(line_no, "expected 'ID POLARITY GATE SOURCE DRAIN FLAVOR VT0 VBB'");
                }
                PendingTransistor p{tok[0], tok[2], tok[3], tok[4], {}};
                if (tok[1] == "nmos") p.spec.polarity = Polarity::NMOS;
                else if (tok[1] == "pmos") p.spec.polarity = Polarity::PMOS;
                else fail(line_no, "polarity must be nmos or pmos");
                if (tok[5] == "rvt") p.spec.flavor = Flavor::RVT;
                else if (tok[5] == "lvt") p.spec.flavor = Flavor::LVT;
                else fail(line_no, "flavor must be rvt or lvt");
                p.spec.vt0 = number(tok[6], line_no, "vt0");
                p.spec.vbb = number(tok[7], line_no, "vbb");
                for (std::size_t i = 8; i < tok.size(); ++i) {
                    const auto eq = tok[i].find('=');
                    const std::string key = tok[i].substr(0, eq);
                    if (eq == std::string::npos) fail(line_no, "unexpected token '" + tok[i] + "'");
                    const std::string val = tok[i].substr(eq + 1);
                    if (key == "poly") p.spec.poly_bias_dvt = number(val, line_no, "poly");
                    else if (key == "w") p.spec.width_mult = number(val, line_no, "w");
                    else fail(line_no, "unknown attribute '" + key + "'");
                }
                pending.push_back(std::move(p));
            }
        } catch (const NetlistError& e) {
            const std::string msg = e.what();
            if (msg.rfind("line ", 0) == 0) throw;
            fail(line_no, msg);
        }
    }
    // Transistors after declarations so a rail may be named after first use.
    for (auto& p : pending) {
        net.add_transistor(p.id, p.gate, p.source, p.drain, p.spec);
    }
    net.validate();
    return net;
}

Netlist parse_netlist(const std::string& text) {
    std::istringstream in(text);
    return read_netlist(in);
}

void write_netlist(std::ostream& out, const Netlist& netlist) {
    const auto& nodes = netlist.nodes();
    for (const auto& n : nodes) {
        if (n.kind == NodeKind::Rail) out << "rail " << n.name << ' ' << format_roundtrip(n.rail_volts) << '\n';
    }
    for (const auto& n : nodes) {
        if (n.kind == NodeKind::Input) out << "input " << n.name << '\n';
    }
    for (const auto& n : nodes) {
        if (n.kind == NodeKind::Output) out << "output " << n.name << '\n';
    }
    for (const auto& t : netlist.transistors()) {
        out << t.id << ' ' << to_string(t.spec.polarity) << ' ' << nodes[t.gate].name << ' '
            << nodes[t.source].name << ' ' << nodes[t.drain].name << ' ' << to_string(t.spec.flavor) << ' '
            << format_roundtrip(t.spec.vt0) << ' ' << format_roundtrip(t.spec.vbb);
        if (t.spec.poly_bias_dvt != 0.0) out << " poly=" << format_roundtrip(t.spec.poly_bias_dvt);
        if (t.spec.width_mult != 1.0) out << " w=" << format_roundtrip(t.spec.width_mult);
        out << '\n';
    }
}

std::string netlist_to_string(const Netlist& netlist) {
    std::ostringstream out;
    write_netlist(out, netlist);
    return out.str();
}

}  // namespace mvroute
