#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>

#include "ling/adder_spec.hpp"

namespace ling {

struct ComparisonRow {
  std::string family;
  unsigned width = 0;
  std::string sum_form;  // "none" for non-Ling families
  std::size_t gates_total = 0;
  std::map<std::string, std::size_t> gates_by_kind;
  unsigned depth_cout = 0;
  unsigned depth_carry_signal = 0;  // c[w-1] for rca/cla, H[w-1] for Ling
  std::size_t max_fanin_raw = 0;
  std::size_t or_terms_widest = 0;

  friend bool operator==(const ComparisonRow&, const ComparisonRow&) = default;
};

/// Builds the adder, normalizes it to two-input gates and reads depths and
/// gate counts from the normalized netlist. Fan-in columns come from the raw
/// netlist.
ComparisonRow analyze(const AdderSpec& spec);

enum class TableFormat { markdown, csv, json };

/// Rows in the given order. Throws std::invalid_argument on an empty list.
std::string compare(std::span<const AdderSpec> specs, TableFormat format, unsigned jobs = 1);

std::string render(std::span<const ComparisonRow> rows, TableFormat format);

}  // namespace ling
