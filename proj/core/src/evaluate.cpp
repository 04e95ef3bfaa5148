#include "ling/evaluate.hpp"

#include <stdexcept>

namespace ling {

namespace {

void check_assignment_size(const Netlist& netlist, std::size_t size) {
  if (size != netlist.primary_inputs().size()) {
    throw std::invalid_argument("assignment has " + std::to_string(size) + " bits, netlist has " +
                                std::to_string(netlist.primary_inputs().size()) + " inputs");
  }
}

// Word-level semantics shared by scalar (0/1 words) and packed evaluation.
template <typename Word>
void propagate(const Netlist& netlist, std::vector<Word>& values) {
  for (const Gate& gate : netlist.gates()) {
    Word v = 0;
    switch (gate.kind) {
      case GateKind::Input:
        continue;
      case GateKind::Const0:
        v = 0;
        break;
      case GateKind::Const1:
        v = static_cast<Word>(~Word{0});
        break;
      case GateKind::Not:
        v = static_cast<Word>(~values[gate.inputs[0]]);
        break;
      case GateKind::And:
        v = static_cast<Word>(~Word{0});
        for (NetId in : gate.inputs) v &= values[in];
        break;
      case GateKind::Or:
        for (NetId in : gate.inputs) v |= values[in];
        break;
      case GateKind::Xor:
        for (NetId in : gate.inputs) v ^= values[in];
        break;
    }
    values[gate.id] = v;
  }
}

}  // namespace

BitVector evaluate_nets(const Netlist& netlist, std::span<const std::uint8_t> assignment) {
  check_assignment_size(netlist, assignment.size());
  BitVector values(netlist.size(), 0);
  const auto inputs = netlist.primary_inputs();
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    if (assignment[i] > 1) throw std::invalid_argument("assignment bits must be 0 or 1");
    values[inputs[i]] = assignment[i] ? 0xFF : 0x00;
  }
  propagate(netlist, values);
  for (auto& v : values) v &= 1;
  return values;
}

BitVector evaluate(const Netlist& netlist, std::span<const std::uint8_t> assignment) {
  const BitVector nets = evaluate_nets(netlist, assignment);
  BitVector out;
  out.reserve(netlist.primary_outputs().size());
  for (NetId id : netlist.primary_outputs()) out.push_back(nets[id]);
  return out;
}

std::vector<std::pair<std::string, std::uint8_t>> evaluate_taps(
    const Netlist& netlist, std::span<const std::uint8_t> assignment) {
  const BitVector nets = evaluate_nets(netlist, assignment);
  std::vector<std::pair<std::string, std::uint8_t>> out;
  out.reserve(netlist.taps().size());
  for (const auto& [role, id] : netlist.taps()) out.emplace_back(role, nets[id]);
  return out;
}

std::vector<std::uint64_t> evaluate_packed(const Netlist& netlist,
                                           std::span<const std::uint64_t> input_lanes) {
  check_assignment_size(netlist, input_lanes.size());
  std::vector<std::uint64_t> values(netlist.size(), 0);
  const auto inputs = netlist.primary_inputs();
  for (std::size_t i = 0; i < inputs.size(); ++i) values[inputs[i]] = input_lanes[i];
  propagate(netlist, values);
  return values;
}

BitVector adder_assignment(const Netlist& netlist, const OperandVector& operands) {
  if (!netlist.adder_shaped()) throw std::invalid_argument("netlist is not adder-shaped");
  const unsigned w = netlist.meta()->width;
  const std::uint64_t mask = w >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << w) - 1;
  if ((operands.a & ~mask) != 0 || (operands.b & ~mask) != 0) {
    throw std::invalid_argument("operand exceeds width " + std::to_string(w));
  }
  if (operands.cin && !netlist.meta()->has_cin) {
    throw std::invalid_argument("netlist has no carry-in");
  }
  BitVector bits;
  bits.reserve(netlist.primary_inputs().size());
  for (unsigned i = 0; i < w; ++i) bits.push_back((operands.a >> i) & 1);
  for (unsigned i = 0; i < w; ++i) bits.push_back((operands.b >> i) & 1);
  if (netlist.meta()->has_cin) bits.push_back(operands.cin ? 1 : 0);
  return bits;
}

SumCarry evaluate_adder(const Netlist& netlist, const OperandVector& operands) {
  const BitVector out = evaluate(netlist, adder_assignment(netlist, operands));
  const unsigned w = netlist.meta()->width;
  SumCarry result;
  for (unsigned i = 0; i < w; ++i) result.sum |= std::uint64_t{out[i]} << i;
  result.cout = out[w] != 0;
  return result;
}

SumCarry integer_add(unsigned width, const OperandVector& operands) {
  const std::uint64_t partial = operands.a + operands.b;
  const std::uint64_t total = partial + (operands.cin ? 1 : 0);
  if (width >= 64) {
    const bool overflow = partial < operands.a || total < partial;
    return SumCarry{total, overflow};
  }
  return SumCarry{total & ((std::uint64_t{1} << width) - 1), (total >> width) != 0};
}

}  // namespace ling
