#include "ling/transform.hpp"

#include <stdexcept>

namespace ling {

Netlist decompose_fanin2(const Netlist& netlist) {
  NetlistBuilder builder;
  std::vector<NetId> remap(netlist.size());

  for (const Gate& gate : netlist.gates()) {
    std::vector<NetId> operands;
    operands.reserve(gate.inputs.size());
    for (NetId in : gate.inputs) operands.push_back(remap[in]);

    const bool associative =
        gate.kind == GateKind::And || gate.kind == GateKind::Or || gate.kind == GateKind::Xor;
    if (associative) {
      while (operands.size() > 2) {
        std::vector<NetId> next;
        next.reserve((operands.size() + 1) / 2);
        for (std::size_t i = 0; i + 1 < operands.size(); i += 2) {
          next.push_back(builder.add_node(gate.kind, {operands[i], operands[i + 1]}));
        }
        if (operands.size() % 2 == 1) next.push_back(operands.back());
        operands = std::move(next);
      }
    }
    remap[gate.id] = builder.add_node(gate.kind, std::move(operands), gate.name);
  }

  std::vector<NetId> inputs;
  for (NetId id : netlist.primary_inputs()) inputs.push_back(remap[id]);
  builder.set_primary_inputs(std::move(inputs));
  for (NetId id : netlist.primary_outputs()) builder.add_output(remap[id]);
  for (const auto& [role, id] : netlist.taps()) builder.tap(role, remap[id]);
  if (netlist.meta()) builder.set_meta(*netlist.meta());
  return std::move(builder).finish();
}

Netlist inject_stuck_at(const Netlist& netlist, NetId id, bool value) {
  if (id >= netlist.size()) throw std::out_of_range("unknown net " + std::to_string(id));
  if (netlist.gate(id).kind == GateKind::Input) {
    throw std::invalid_argument("cannot fault primary input " + std::to_string(id));
  }
  NetlistBuilder builder;
  for (const Gate& gate : netlist.gates()) {
    if (gate.id == id) {
      builder.add_node(value ? GateKind::Const1 : GateKind::Const0, {}, gate.name);
    } else {
      builder.add_node(gate.kind, gate.inputs, gate.name);
    }
  }
  builder.set_primary_inputs({netlist.primary_inputs().begin(), netlist.primary_inputs().end()});
  for (NetId out : netlist.primary_outputs()) builder.add_output(out);
  for (const auto& [role, tap] : netlist.taps()) builder.tap(role, tap);
  if (netlist.meta()) builder.set_meta(*netlist.meta());
  return std::move(builder).finish();
}

}  // namespace ling
