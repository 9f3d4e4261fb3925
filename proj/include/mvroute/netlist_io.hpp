#pragma once

// Line-oriented netlist text format, see docs/netlist-format.md.
//
//   rail VDD3 0.9
//   input IN
//   output OUT
//   N0 nmos IN VDD0 SEL rvt 0.45 0 poly=0 w=1

#include "mvroute/netlist.hpp"

#include <iosfwd>
#include <string>

namespace mvroute {

/// Throws NetlistError with the offending line number.
[[nodiscard]] Netlist read_netlist(std::istream& in);
[[nodiscard]] Netlist parse_netlist(const std::string& text);

void write_netlist(std::ostream& out, const Netlist& netlist);
[[nodiscard]] std::string netlist_to_string(const Netlist& netlist);

}  // namespace mvroute
