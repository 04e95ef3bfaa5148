#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ling/adder_spec.hpp"

namespace ling {

using NetId = std::uint32_t;

enum class GateKind : std::uint8_t { Input, Const0, Const1, Not, And, Or, Xor };

inline constexpr GateKind kAllGateKinds[] = {GateKind::Input, GateKind::Const0, GateKind::Const1,
                                             GateKind::Not,   GateKind::And,    GateKind::Or,
                                             GateKind::Xor};

/// "INPUT", "CONST0", ..., as used by the JSON schema.
std::string_view to_string(GateKind kind);
std::optional<GateKind> parse_gate_kind(std::string_view text);

/// True for INPUT, CONST0 and CONST1.
bool is_source(GateKind kind);

struct Gate {
  NetId id = 0;
  GateKind kind = GateKind::Input;
  std::vector<NetId> inputs;  // every entry < id
  std::string name;           // empty when unnamed

  friend bool operator==(const Gate&, const Gate&) = default;
};

using Tap = std::pair<std::string, NetId>;

/// Immutable gate DAG. Gates are stored in id order and every gate only
/// references lower ids, so the storage order is a topological order.
///
/// Primary inputs of adder netlists are a[0..w), b[0..w), then cin; primary
/// outputs are s[0..w) then cout. Taps name internal nets by role
/// ("g[3]", "H[0]", "cout", ...) and keep insertion order.
class Netlist {
 public:
  Netlist() = default;

  std::span<const Gate> gates() const { return gates_; }
  const Gate& gate(NetId id) const { return gates_.at(id); }
  std::size_t size() const { return gates_.size(); }

  std::span<const NetId> primary_inputs() const { return inputs_; }
  std::span<const NetId> primary_outputs() const { return outputs_; }
  std::span<const Tap> taps() const { return taps_; }
  const std::optional<AdderSpec>& meta() const { return meta_; }

  std::optional<NetId> tap(std::string_view role) const;
  /// Like tap() but throws std::out_of_range for an unknown role.
  NetId tap_or_throw(std::string_view role) const;

  /// "s[i]" / "cout" for adder netlists, "out[k]" otherwise.
  std::string output_role(std::size_t index) const;

  /// True when meta is present and the I/O matches the adder layout.
  bool adder_shaped() const;

  friend bool operator==(const Netlist&, const Netlist&) = default;

 private:
  friend class NetlistBuilder;

  std::vector<Gate> gates_;
  std::vector<NetId> inputs_;
  std::vector<NetId> outputs_;
  std::vector<Tap> taps_;
  std::optional<AdderSpec> meta_;
};

/// Append-only construction of a Netlist. add_node() enforces arity and the
/// inputs-precede-gate rule, which is what makes the result acyclic.
class NetlistBuilder {
 public:
  /// Appends an INPUT gate and registers it as the next primary input.
  NetId add_input(std::string name = {});

  /// Throws std::invalid_argument on arity violations and std::out_of_range
  /// on unknown input ids.
  NetId add_node(GateKind kind, std::vector<NetId> inputs, std::string name = {});

  /// Shared CONST0/CONST1 node, created on first use.
  NetId constant(bool value);

  NetId make_not(NetId x, std::string name = {});
  NetId make_and(std::vector<NetId> xs, std::string name = {});
  NetId make_or(std::vector<NetId> xs, std::string name = {});
  NetId make_xor(std::vector<NetId> xs, std::string name = {});

  /// Like make_and/make_or but a single operand is returned as-is (no gate).
  NetId conjunction(std::vector<NetId> xs, std::string name = {});
  NetId disjunction(std::vector<NetId> xs, std::string name = {});

  void add_output(NetId id);

  /// Registers a role label. A still unnamed gate takes the label as its name.
  void tap(std::string role, NetId id);

  /// Replaces the primary-input list (used by importers that create INPUT
  /// gates through add_node).
  void set_primary_inputs(std::vector<NetId> ids);

  void set_meta(AdderSpec spec) { netlist_.meta_ = spec; }

  std::size_t size() const { return netlist_.gates_.size(); }
  const Gate& gate(NetId id) const { return netlist_.gates_.at(id); }

  /// Validates outputs, taps and primary inputs, then hands over the netlist.
  Netlist finish() &&;

 private:
  Netlist netlist_;
  std::optional<NetId> const0_;
  std::optional<NetId> const1_;
};

}  // namespace ling
