#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ling/netlist.hpp"

namespace ling {

using RoleDepth = std::pair<std::string, unsigned>;

struct Metrics {
  std::map<GateKind, std::size_t> gate_counts;  // every kind, including zeros
  std::size_t total_gates = 0;                  // excludes INPUT and constants
  std::vector<RoleDepth> depth_per_output;      // primary-output order
  std::vector<RoleDepth> depth_per_tap;         // tap order
  unsigned max_depth = 0;                       // max over depth_per_output
  std::size_t max_fanin = 0;
  std::size_t wire_count = 0;  // total input edges
  std::vector<unsigned> levels;  // per gate id

  std::optional<unsigned> output_depth(std::string_view role) const;
  std::optional<unsigned> tap_depth(std::string_view role) const;
};

/// Unit-delay levels: sources sit at level 0, every other gate at
/// 1 + max(level of its inputs). Depth claims are only meaningful after
/// decompose_fanin2.
Metrics depth_profile(const Netlist& netlist);

/// Fan-in of the widest OR gate (0 if there is none).
std::size_t widest_or(const Netlist& netlist);

}  // namespace ling
