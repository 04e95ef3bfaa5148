#include "ling/report.hpp"

#include <future>
#include <sstream>
#include <stdexcept>
#include <vector>

#include <json.hpp>

#include "ling/builders.hpp"
#include "ling/metrics.hpp"
#include "ling/transform.hpp"

namespace ling {

ComparisonRow analyze(const AdderSpec& spec) {
  const Netlist raw = build(spec);
  const Netlist normalized = decompose_fanin2(raw);
  const Metrics raw_metrics = depth_profile(raw);
  const Metrics m = depth_profile(normalized);

  ComparisonRow row;
  row.family = std::string(to_string(spec.family));
  row.width = spec.width;
  row.sum_form = is_ling(spec.family) ? std::string(to_string(spec.sum_form)) : "none";
  row.gates_total = m.total_gates;
  for (const auto& [kind, count] : m.gate_counts) {
    if (!is_source(kind)) row.gates_by_kind[std::string(to_string(kind))] = count;
  }
  row.depth_cout = *m.output_depth("cout");
  const std::string carry_role = std::string(is_ling(spec.family) ? "H" : "c") + "[" +
                                 std::to_string(spec.width - 1) + "]";
  row.depth_carry_signal = *m.tap_depth(carry_role);
  row.max_fanin_raw = raw_metrics.max_fanin;
  row.or_terms_widest = widest_or(raw);
  return row;
}

std::string render(std::span<const ComparisonRow> rows, TableFormat format) {
  std::ostringstream out;
  const char* columns[] = {"family",     "width",              "sum_form",      "gates_total",
                           "depth_cout", "depth_carry_signal", "max_fanin_raw", "or_terms_widest"};
  auto fields = [](const ComparisonRow& r) {
    return std::vector<std::string>{r.family,
                                    std::to_string(r.width),
                                    r.sum_form,
                                    std::to_string(r.gates_total),
                                    std::to_string(r.depth_cout),
                                    std::to_string(r.depth_carry_signal),
                                    std::to_string(r.max_fanin_raw),
                                    std::to_string(r.or_terms_widest)};
  };

  switch (format) {
    case TableFormat::markdown: {
      out << "|";
      for (const char* c : columns) out << ' ' << c << " |";
      out << "\n|";
      for (std::size_t i = 0; i < std::size(columns); ++i) out << " --- |";
      out << '\n';
      for (const auto& row : rows) {
        out << "|";
        for (const auto& f : fields(row)) out << ' ' << f << " |";
        out << '\n';
      }
      break;
    }
    case TableFormat::csv: {
      for (std::size_t i = 0; i < std::size(columns); ++i) out << (i ? "," : "") << columns[i];
      out << '\n';
      for (const auto& row : rows) {
        const auto fs = fields(row);
        for (std::size_t i = 0; i < fs.size(); ++i) out << (i ? "," : "") << fs[i];
        out << '\n';
      }
      break;
    }
    case TableFormat::json: {
      nlohmann::ordered_json doc = nlohmann::ordered_json::array();
      for (const auto& r : rows) {
        nlohmann::ordered_json kinds = nlohmann::ordered_json::object();
        for (const auto& [kind, count] : r.gates_by_kind) kinds[kind] = count;
        doc.push_back({{"family", r.family},
                       {"width", r.width},
                       {"sum_form", r.sum_form},
                       {"gates_total", r.gates_total},
                       {"gates_by_kind", std::move(kinds)},
                       {"depth_cout", r.depth_cout},
                       {"depth_carry_signal", r.depth_carry_signal},
                       {"max_fanin_raw", r.max_fanin_raw},
                       {"or_terms_widest", r.or_terms_widest}});
      }
      out << doc.dump(2) << '\n';
      break;
    }
  }
  return out.str();
}

std::string compare(std::span<const AdderSpec> specs, TableFormat format, unsigned jobs) {
  if (specs.empty()) throw std::invalid_argument("compare needs at least one adder spec");
  std::vector<ComparisonRow> rows;
  rows.reserve(specs.size());
  if (jobs <= 1) {
    for (const auto& spec : specs) rows.push_back(analyze(spec));
  } else {
    std::vector<std::future<ComparisonRow>> pending;
    for (const auto& spec : specs) pending.push_back(std::async(std::launch::async, analyze, spec));
    for (auto& f : pending) rows.push_back(f.get());
  }
  return render(rows, format);
}

}  // namespace ling
