#include "ling/metrics.hpp"

#include <algorithm>

namespace ling {

namespace {

std::optional<unsigned> lookup(const std::vector<RoleDepth>& table, std::string_view role) {
  for (const auto& [name, depth] : table) {
    if (name == role) return depth;
  }
  return std::nullopt;
}

}  // namespace

std::optional<unsigned> Metrics::output_depth(std::string_view role) const {
  return lookup(depth_per_output, role);
}

std::optional<unsigned> Metrics::tap_depth(std::string_view role) const {
  return lookup(depth_per_tap, role);
}

Metrics depth_profile(const Netlist& netlist) {
  Metrics m;
  for (GateKind kind : kAllGateKinds) m.gate_counts[kind] = 0;
  m.levels.assign(netlist.size(), 0);

  for (const Gate& gate : netlist.gates()) {
    ++m.gate_counts[gate.kind];
    if (!is_source(gate.kind)) ++m.total_gates;
    m.max_fanin = std::max(m.max_fanin, gate.inputs.size());
    m.wire_count += gate.inputs.size();
    if (is_source(gate.kind)) continue;
    unsigned level = 0;
    for (NetId in : gate.inputs) level = std::max(level, m.levels[in]);
    m.levels[gate.id] = level + 1;
  }

  const auto outputs = netlist.primary_outputs();
  for (std::size_t k = 0; k < outputs.size(); ++k) {
    const unsigned depth = m.levels[outputs[k]];
    m.depth_per_output.emplace_back(netlist.output_role(k), depth);
    m.max_depth = std::max(m.max_depth, depth);
  }
  for (const auto& [role, id] : netlist.taps()) m.depth_per_tap.emplace_back(role, m.levels[id]);
  return m;
}

std::size_t widest_or(const Netlist& netlist) {
  std::size_t widest = 0;
  for (const Gate& gate : netlist.gates()) {
    if (gate.kind == GateKind::Or) widest = std::max(widest, gate.inputs.size());
  }
  return widest;
}

}  // namespace ling
