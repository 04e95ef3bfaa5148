#pragma once

#include "ling/netlist.hpp"

namespace ling {

/// Rewrites every AND/OR/XOR with more than two inputs into a balanced tree
/// of two-input gates. Adjacent operands are paired left to right at each tree
/// level and an odd operand moves up unchanged, so a 3-input OR becomes
/// OR(OR(x0, x1), x2). The root keeps the original name; taps, primary I/O
/// order and meta carry over.
Netlist decompose_fanin2(const Netlist& netlist);

/// Copy of `netlist` with gate `id` replaced by a constant (stuck-at fault).
/// Primary inputs cannot be faulted; throws std::invalid_argument.
Netlist inject_stuck_at(const Netlist& netlist, NetId id, bool value);

}  // namespace ling
