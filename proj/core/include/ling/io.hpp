#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "ling/netlist.hpp"

namespace ling {

enum class ExportFormat { json, dot };

/// JSON netlist: width, cin, family, group_size, sum_form, inputs, nodes,
/// outputs {s, cout}, taps. Hand-built netlists carry family null and list all
/// outputs under "s" with cout null.
std::string to_json(const Netlist& netlist);

/// Graphviz digraph, one node per gate labelled "KIND\nname", one edge per
/// input reference.
std::string to_dot(const Netlist& netlist);

std::string export_netlist(const Netlist& netlist, ExportFormat format);

/// Thrown on malformed or inconsistent JSON netlists.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Netlist netlist_from_json(std::string_view text);

}  // namespace ling
