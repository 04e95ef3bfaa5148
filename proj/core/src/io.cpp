#include "ling/io.hpp"

#include <sstream>

#include <json.hpp>

namespace ling {

using nlohmann::ordered_json;

std::string to_json(const Netlist& netlist) {
  ordered_json doc;
  const auto& meta = netlist.meta();
  if (meta) {
    doc["width"] = meta->width;
    doc["cin"] = meta->has_cin;
    doc["family"] = std::string(to_string(meta->family));
    doc["group_size"] = meta->group_size;
    doc["sum_form"] = std::string(to_string(meta->sum_form));
  } else {
    doc["width"] = 0;
    doc["cin"] = false;
    doc["family"] = nullptr;
  }

  ordered_json inputs = ordered_json::array();
  for (NetId id : netlist.primary_inputs()) {
    inputs.push_back({{"id", id}, {"name", netlist.gate(id).name}});
  }
  doc["inputs"] = std::move(inputs);

  ordered_json nodes = ordered_json::array();
  for (const Gate& gate : netlist.gates()) {
    ordered_json node{{"id", gate.id}, {"kind", std::string(to_string(gate.kind))}, {"in", gate.inputs}};
    if (!gate.name.empty()) node["name"] = gate.name;
    nodes.push_back(std::move(node));
  }
  doc["nodes"] = std::move(nodes);

  const auto outputs = netlist.primary_outputs();
  ordered_json out;
  if (meta) {
    out["s"] = std::vector<NetId>(outputs.begin(), outputs.end() - 1);
    out["cout"] = outputs.back();
  } else {
    out["s"] = std::vector<NetId>(outputs.begin(), outputs.end());
    out["cout"] = nullptr;
  }
  doc["outputs"] = std::move(out);

  ordered_json taps = ordered_json::object();
  for (const auto& [role, id] : netlist.taps()) taps[role] = id;
  doc["taps"] = std::move(taps);

  return doc.dump(2) + "\n";
}

std::string to_dot(const Netlist& netlist) {
  std::ostringstream out;
  out << "digraph netlist {\n  rankdir=LR;\n";
  for (const Gate& gate : netlist.gates()) {
    out << "  n" << gate.id << " [label=\"" << to_string(gate.kind);
    if (!gate.name.empty()) out << "\\n" << gate.name;
    out << "\"];\n";
  }
  for (const Gate& gate : netlist.gates()) {
    for (NetId in : gate.inputs) out << "  n" << in << " -> n" << gate.id << ";\n";
  }
  out << "}\n";
  return out.str();
}

std::string export_netlist(const Netlist& netlist, ExportFormat format) {
  return format == ExportFormat::json ? to_json(netlist) : to_dot(netlist);
}

namespace {

NetId read_id(const ordered_json& value, const char* what) {
  if (!value.is_number_unsigned()) throw FormatError(std::string(what) + " must be an unsigned id");
  return value.get<NetId>();
}

const ordered_json& field(const ordered_json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) throw FormatError(std::string("missing field ") + key);
  return obj.at(key);
}

}  // namespace

Netlist netlist_from_json(std::string_view text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const ordered_json::parse_error& e) {
    throw FormatError(std::string("invalid JSON: ") + e.what());
  }

  try {
    NetlistBuilder builder;
    const auto& nodes = field(doc, "nodes");
    if (!nodes.is_array()) throw FormatError("nodes must be an array");
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      const auto& node = nodes[i];
      if (read_id(field(node, "id"), "node id") != i) throw FormatError("node ids must be dense and ordered");
      const auto kind = parse_gate_kind(field(node, "kind").get<std::string>());
      if (!kind) throw FormatError("unknown gate kind in node " + std::to_string(i));
      std::vector<NetId> inputs;
      for (const auto& in : field(node, "in")) inputs.push_back(read_id(in, "node input"));
      std::string name = node.contains("name") ? node.at("name").get<std::string>() : std::string{};
      builder.add_node(*kind, std::move(inputs), std::move(name));
    }

    std::vector<NetId> inputs;
    for (const auto& in : field(doc, "inputs")) inputs.push_back(read_id(field(in, "id"), "input id"));
    builder.set_primary_inputs(std::move(inputs));

    const auto& outputs = field(doc, "outputs");
    for (const auto& s : field(outputs, "s")) builder.add_output(read_id(s, "output id"));
    if (const auto& cout = field(outputs, "cout"); !cout.is_null()) {
      builder.add_output(read_id(cout, "cout id"));
    }

    for (const auto& [role, id] : field(doc, "taps").items()) builder.tap(role, read_id(id, "tap id"));

    if (const auto& family = field(doc, "family"); !family.is_null()) {
      AdderSpec spec;
      const auto parsed = parse_family(family.get<std::string>());
      if (!parsed) throw FormatError("unknown family " + family.get<std::string>());
      spec.family = *parsed;
      spec.width = field(doc, "width").get<unsigned>();
      spec.has_cin = field(doc, "cin").get<bool>();
      if (doc.contains("group_size")) spec.group_size = doc.at("group_size").get<unsigned>();
      if (doc.contains("sum_form")) {
        const auto form = parse_sum_form(doc.at("sum_form").get<std::string>());
        if (!form) throw FormatError("unknown sum_form");
        spec.sum_form = *form;
      }
      builder.set_meta(spec);
    }
    return std::move(builder).finish();
  } catch (const ordered_json::exception& e) {
    throw FormatError(std::string("malformed netlist: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw FormatError(std::string("inconsistent netlist: ") + e.what());
  } catch (const std::out_of_range& e) {
    throw FormatError(std::string("inconsistent netlist: ") + e.what());
  }
}

}  // namespace ling
