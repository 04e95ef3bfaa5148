#include "ling/netlist.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <unordered_set>

namespace ling {

namespace {

constexpr std::array<std::string_view, 7> kKindNames{"INPUT", "CONST0", "CONST1", "NOT",
                                                     "AND",   "OR",     "XOR"};

void check_arity(GateKind kind, std::size_t count) {
  bool ok = false;
  switch (kind) {
    case GateKind::Input:
    case GateKind::Const0:
    case GateKind::Const1:
      ok = count == 0;
      break;
    case GateKind::Not:
      ok = count == 1;
      break;
    case GateKind::And:
    case GateKind::Or:
    case GateKind::Xor:
      ok = count >= 2;
      break;
  }
  if (!ok) {
    throw std::invalid_argument("arity violation: " + std::string(to_string(kind)) + " with " +
                                std::to_string(count) + " input(s)");
  }
}

}  // namespace

std::string_view to_string(GateKind kind) { return kKindNames.at(static_cast<std::size_t>(kind)); }

std::optional<GateKind> parse_gate_kind(std::string_view text) {
  for (std::size_t i = 0; i < kKindNames.size(); ++i) {
    if (kKindNames[i] == text) return static_cast<GateKind>(i);
  }
  return std::nullopt;
}

bool is_source(GateKind kind) {
  return kind == GateKind::Input || kind == GateKind::Const0 || kind == GateKind::Const1;
}

std::optional<NetId> Netlist::tap(std::string_view role) const {
  auto it = std::find_if(taps_.begin(), taps_.end(), [&](const Tap& t) { return t.first == role; });
  if (it == taps_.end()) return std::nullopt;
  return it->second;
}

NetId Netlist::tap_or_throw(std::string_view role) const {
  if (auto id = tap(role)) return *id;
  throw std::out_of_range("no tap named " + std::string(role));
}

bool Netlist::adder_shaped() const {
  if (!meta_) return false;
  const std::size_t w = meta_->width;
  return inputs_.size() == 2 * w + (meta_->has_cin ? 1 : 0) && outputs_.size() == w + 1;
}

std::string Netlist::output_role(std::size_t index) const {
  if (adder_shaped()) {
    if (index == meta_->width) return "cout";
    return "s[" + std::to_string(index) + "]";
  }
  return "out[" + std::to_string(index) + "]";
}

NetId NetlistBuilder::add_input(std::string name) {
  NetId id = add_node(GateKind::Input, {}, std::move(name));
  netlist_.inputs_.push_back(id);
  return id;
}

NetId NetlistBuilder::add_node(GateKind kind, std::vector<NetId> inputs, std::string name) {
  check_arity(kind, inputs.size());
  const auto id = static_cast<NetId>(netlist_.gates_.size());
  for (NetId in : inputs) {
    if (in >= id) throw std::out_of_range("unknown input id " + std::to_string(in));
  }
  netlist_.gates_.push_back(Gate{id, kind, std::move(inputs), std::move(name)});
  return id;
}

NetId NetlistBuilder::constant(bool value) {
  auto& slot = value ? const1_ : const0_;
  if (!slot) slot = add_node(value ? GateKind::Const1 : GateKind::Const0, {});
  return *slot;
}

NetId NetlistBuilder::make_not(NetId x, std::string name) {
  return add_node(GateKind::Not, {x}, std::move(name));
}

NetId NetlistBuilder::make_and(std::vector<NetId> xs, std::string name) {
  return add_node(GateKind::And, std::move(xs), std::move(name));
}

NetId NetlistBuilder::make_or(std::vector<NetId> xs, std::string name) {
  return add_node(GateKind::Or, std::move(xs), std::move(name));
}

NetId NetlistBuilder::make_xor(std::vector<NetId> xs, std::string name) {
  return add_node(GateKind::Xor, std::move(xs), std::move(name));
}

NetId NetlistBuilder::conjunction(std::vector<NetId> xs, std::string name) {
  if (xs.size() == 1) return xs.front();
  return make_and(std::move(xs), std::move(name));
}

NetId NetlistBuilder::disjunction(std::vector<NetId> xs, std::string name) {
  if (xs.size() == 1) return xs.front();
  return make_or(std::move(xs), std::move(name));
}

void NetlistBuilder::add_output(NetId id) {
  if (id >= netlist_.gates_.size()) throw std::out_of_range("unknown output id " + std::to_string(id));
  netlist_.outputs_.push_back(id);
}

void NetlistBuilder::tap(std::string role, NetId id) {
  if (id >= netlist_.gates_.size()) throw std::out_of_range("unknown tap id " + std::to_string(id));
  if (netlist_.tap(role)) throw std::invalid_argument("duplicate tap " + role);
  auto& gate = netlist_.gates_[id];
  if (gate.name.empty()) gate.name = role;
  netlist_.taps_.emplace_back(std::move(role), id);
}

void NetlistBuilder::set_primary_inputs(std::vector<NetId> ids) { netlist_.inputs_ = std::move(ids); }

Netlist NetlistBuilder::finish() && {
  const auto& gates = netlist_.gates_;
  std::unordered_set<NetId> seen;
  for (NetId id : netlist_.inputs_) {
    if (id >= gates.size() || gates[id].kind != GateKind::Input) {
      throw std::invalid_argument("primary input " + std::to_string(id) + " is not an INPUT gate");
    }
    if (!seen.insert(id).second) {
      throw std::invalid_argument("primary input " + std::to_string(id) + " listed twice");
    }
  }
  const auto input_gates = std::count_if(gates.begin(), gates.end(),
                                         [](const Gate& g) { return g.kind == GateKind::Input; });
  if (static_cast<std::size_t>(input_gates) != netlist_.inputs_.size()) {
    throw std::invalid_argument("every INPUT gate must be a primary input");
  }
  if (netlist_.meta_) {
    netlist_.meta_->validate();
    const std::size_t w = netlist_.meta_->width;
    if (netlist_.inputs_.size() != 2 * w + (netlist_.meta_->has_cin ? 1 : 0)) {
      throw std::invalid_argument("adder netlist needs 2*width (+1 with carry-in) inputs");
    }
    if (netlist_.outputs_.size() != w + 1) {
      throw std::invalid_argument("adder netlist needs width + 1 outputs");
    }
  }
  return std::move(netlist_);
}

}  // namespace ling
