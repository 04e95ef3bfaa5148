#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ling/netlist.hpp"

namespace ling {

/// One bit (0 or 1) per primary input, in primary-input order.
using BitVector = std::vector<std::uint8_t>;

/// Values of every net, indexed by gate id. Throws std::invalid_argument when
/// the assignment size differs from the primary-input count.
BitVector evaluate_nets(const Netlist& netlist, std::span<const std::uint8_t> assignment);

/// Output bits in primary-output order.
BitVector evaluate(const Netlist& netlist, std::span<const std::uint8_t> assignment);

/// Tap values in tap order.
std::vector<std::pair<std::string, std::uint8_t>> evaluate_taps(
    const Netlist& netlist, std::span<const std::uint8_t> assignment);

/// Bit-sliced evaluation: bit k of every word belongs to test vector k, so one
/// call simulates 64 vectors. Input: one word per primary input. Output: one
/// word per gate.
std::vector<std::uint64_t> evaluate_packed(const Netlist& netlist,
                                           std::span<const std::uint64_t> input_lanes);

/// Operand-level view of an adder input vector.
struct OperandVector {
  std::uint64_t a = 0;
  std::uint64_t b = 0;
  bool cin = false;

  friend auto operator<=>(const OperandVector&, const OperandVector&) = default;
};

struct SumCarry {
  std::uint64_t sum = 0;
  bool cout = false;

  friend bool operator==(const SumCarry&, const SumCarry&) = default;
};

/// Splits operands into the adder primary-input layout. Throws
/// std::invalid_argument if the netlist is not adder-shaped or an operand does
/// not fit the width.
BitVector adder_assignment(const Netlist& netlist, const OperandVector& operands);

/// Evaluates an adder netlist on integer operands.
SumCarry evaluate_adder(const Netlist& netlist, const OperandVector& operands);

/// Reference integer addition: (a + b + cin) split at bit `width`.
SumCarry integer_add(unsigned width, const OperandVector& operands);

}  // namespace ling
