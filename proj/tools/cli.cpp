#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "ling/builders.hpp"
#include "ling/evaluate.hpp"
#include "ling/io.hpp"
#include "ling/report.hpp"
#include "ling/verify.hpp"

namespace ling::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

const std::vector<std::string> kFamilies{"rca",       "cla-flat",    "ling4",
                                         "ling-flat", "cla-grouped", "ling-grouped"};

struct SpecFlags {
  std::string family = "ling4";
  unsigned width = 4;
  unsigned group = 4;
  std::string cin = "none";
  std::string sum_form = "xor";

  void attach(CLI::App& app, bool with_family) {
    if (with_family) {
      app.add_option("--family", family, "Adder family")->check(CLI::IsMember(kFamilies));
    }
    app.add_option("--width", width, "Operand width in bits")->check(CLI::Range(1u, kMaxWidth));
    app.add_option("--group", group, "Group size for grouped families")->check(CLI::Range(1u, kMaxFlatWidth));
    app.add_option("--cin", cin, "Carry-in: none, 0 or 1")->check(CLI::IsMember({"none", "0", "1"}));
    app.add_option("--sum-form", sum_form, "Ling sum form")->check(CLI::IsMember({"xor", "mux"}));
  }

  AdderSpec spec_for(const std::string& family_name) const {
    AdderSpec spec;
    spec.family = *parse_family(family_name);
    spec.width = width;
    spec.group_size = group;
    spec.has_cin = cin != "none";
    spec.sum_form = *parse_sum_form(sum_form);
    return spec;
  }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file || !(file << text)) throw UsageError("cannot write " + path);
}

std::string binary(std::uint64_t value, unsigned width) {
  std::string digits = "0b";
  for (unsigned i = width; i-- > 0;) digits += ((value >> i) & 1) ? '1' : '0';
  return digits;
}

Netlist load_or_build(const std::string& netlist_path, const SpecFlags& flags) {
  if (!netlist_path.empty()) return netlist_from_json(read_file(netlist_path));
  return build(flags.spec_for(flags.family));
}

std::uint64_t operand(const std::string& text, unsigned width, const char* flag) {
  const auto value = parse_operand(text);
  if (!value) throw UsageError(std::string("cannot parse ") + flag + " value '" + text + "'");
  if (width < 64 && (*value >> width) != 0) {
    throw UsageError(std::string(flag) + " value " + text + " does not fit in " + std::to_string(width) +
                     " bits");
  }
  return *value;
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> items;
  std::stringstream in(text);
  for (std::string item; std::getline(in, item, ',');) {
    if (!item.empty()) items.push_back(item);
  }
  return items;
}

void print_summary(const VerifyReport& report, const std::string& label, unsigned width, std::ostream& out) {
  out << label << ": " << to_string(report.mode);
  if (report.seed) out << " (seed " << *report.seed << ")";
  out << ", " << report.vectors_tested << " vectors, " << report.failure_count << " failures\n";
  for (const auto& f : report.failures) {
    out << "  a=" << binary(f.a, width) << " b=" << binary(f.b, width) << " cin=" << f.cin
        << " expected s=" << binary(f.expected.sum, width) << " cout=" << f.expected.cout
        << " actual s=" << binary(f.actual.sum, width) << " cout=" << f.actual.cout << '\n';
  }
}

}  // namespace

std::optional<std::uint64_t> parse_operand(std::string_view text) {
  int base = 10;
  if (text.size() > 2 && text[0] == '0' && (text[1] == 'b' || text[1] == 'B')) {
    base = 2;
    text.remove_prefix(2);
  } else if (text.size() > 2 && text[0] == '0' && (text[1] == 'x' || text[1] == 'X')) {
    base = 16;
    text.remove_prefix(2);
  }
  if (text.empty()) return std::nullopt;
  std::uint64_t value = 0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value, base);
  if (ec != std::errc{} || end != text.data() + text.size()) return std::nullopt;
  return value;
}

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Gate-level ripple-carry, carry-lookahead and Ling adder toolkit", "lingadd"};
  app.require_subcommand(1);

  // build
  SpecFlags build_flags;
  std::string build_out;
  auto* build_cmd = app.add_subcommand("build", "Build an adder netlist and write it as JSON");
  build_flags.attach(*build_cmd, true);
  build_cmd->add_option("--out", build_out, "Output path (stdout if omitted)");

  // eval
  SpecFlags eval_flags;
  std::string eval_netlist, eval_a, eval_b;
  bool eval_taps = false;
  auto* eval_cmd = app.add_subcommand("eval", "Evaluate an adder on one input vector");
  eval_flags.attach(*eval_cmd, true);
  eval_cmd->add_option("--netlist", eval_netlist, "JSON netlist (otherwise built from flags)");
  eval_cmd->add_option("--a", eval_a, "Operand a")->required();
  eval_cmd->add_option("--b", eval_b, "Operand b")->required();
  eval_cmd->add_flag("--taps", eval_taps, "Also print every tapped net");

  // verify
  SpecFlags verify_flags;
  std::string verify_netlist, verify_mode, verify_format = "text";
  SweepOptions sweep;
  auto* verify_cmd = app.add_subcommand("verify", "Check an adder against integer addition");
  verify_flags.attach(*verify_cmd, true);
  verify_cmd->add_option("--netlist", verify_netlist, "JSON netlist (otherwise built from flags)");
  verify_cmd->add_option("--mode", verify_mode, "exhaustive or random (default: exhaustive when within cap)")
      ->check(CLI::IsMember({"exhaustive", "random"}));
  verify_cmd->add_option("--samples", sweep.samples, "Random vectors in addition to the corner set");
  verify_cmd->add_option("--seed", sweep.seed, "Random seed");
  verify_cmd->add_option("--jobs", sweep.jobs, "Worker threads")->check(CLI::Range(1u, 256u));
  verify_cmd->add_option("--format", verify_format, "text or json")->check(CLI::IsMember({"text", "json"}));

  // compare
  SpecFlags compare_flags;
  std::string compare_families = "rca,cla-flat,ling4", compare_format = "markdown";
  unsigned compare_jobs = 1;
  auto* compare_cmd = app.add_subcommand("compare", "Tabulate gate counts and logic depths");
  compare_flags.attach(*compare_cmd, false);
  compare_cmd->add_option("--families", compare_families, "Comma-separated family list");
  compare_cmd->add_option("--format", compare_format, "markdown, csv or json")
      ->check(CLI::IsMember({"markdown", "csv", "json"}));
  compare_cmd->add_option("--jobs", compare_jobs, "Worker threads")->check(CLI::Range(1u, 256u));

  // export
  std::string export_netlist_path, export_format = "dot", export_out;
  auto* export_cmd = app.add_subcommand("export", "Convert a JSON netlist to DOT (or re-emit JSON)");
  export_cmd->add_option("--netlist", export_netlist_path, "JSON netlist")->required();
  export_cmd->add_option("--format", export_format, "dot or json")->check(CLI::IsMember({"dot", "json"}));
  export_cmd->add_option("--out", export_out, "Output path (stdout if omitted)");

  try {
    std::reverse(args.begin(), args.end());
    app.parse(std::move(args));
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (*build_cmd) {
      const Netlist netlist = build(build_flags.spec_for(build_flags.family));
      write_output(build_out, to_json(netlist), out);
      if (!build_out.empty()) out << "wrote " << build_out << " (" << netlist.size() << " nodes)\n";
      return kExitOk;
    }

    if (*eval_cmd) {
      const Netlist netlist = load_or_build(eval_netlist, eval_flags);
      if (!netlist.adder_shaped()) throw UsageError("netlist is not adder-shaped");
      const unsigned w = netlist.meta()->width;
      OperandVector v{operand(eval_a, w, "--a"), operand(eval_b, w, "--b"), eval_flags.cin == "1"};
      if (v.cin && !netlist.meta()->has_cin) throw UsageError("netlist has no carry-in port");
      const BitVector assignment = adder_assignment(netlist, v);
      const BitVector outputs = evaluate(netlist, assignment);
      std::uint64_t sum = 0;
      for (unsigned i = 0; i < w; ++i) sum |= std::uint64_t{outputs[i]} << i;
      out << "s=" << binary(sum, w) << " (" << sum << ")\n";
      out << "cout=" << int{outputs[w]} << '\n';
      if (eval_taps) {
        for (const auto& [role, bit] : evaluate_taps(netlist, assignment)) out << role << '=' << int{bit} << '\n';
      }
      return kExitOk;
    }

    if (*verify_cmd) {
      const Netlist netlist = load_or_build(verify_netlist, verify_flags);
      if (!netlist.adder_shaped()) throw UsageError("netlist is not adder-shaped");
      const auto& meta = *netlist.meta();
      const unsigned input_bits = 2 * meta.width + (meta.has_cin ? 1 : 0);
      if (verify_mode.empty()) verify_mode = input_bits <= kExhaustiveInputCap ? "exhaustive" : "random";
      sweep.mode = verify_mode == "exhaustive" ? SweepMode::exhaustive : SweepMode::random;
      if (sweep.mode == SweepMode::exhaustive && input_bits > kExhaustiveInputCap) {
        throw UsageError("exhaustive mode is limited to " + std::to_string(kExhaustiveInputCap) +
                         " input bits; this adder has " + std::to_string(input_bits));
      }
      const VerifyReport report = verify_against_oracle(netlist, sweep);
      if (verify_format == "json") {
        out << to_json(report);
      } else {
        print_summary(report, describe(meta), meta.width, out);
      }
      return report.passed() ? kExitOk : kExitVerifyFailed;
    }

    if (*compare_cmd) {
      std::vector<AdderSpec> specs;
      for (const auto& name : split_list(compare_families)) {
        if (!parse_family(name)) throw UsageError("unknown family '" + name + "'");
        specs.push_back(compare_flags.spec_for(name));
        specs.back().validate();
      }
      if (specs.empty()) throw UsageError("--families is empty");
      const TableFormat format = compare_format == "csv"    ? TableFormat::csv
                                 : compare_format == "json" ? TableFormat::json
                                                            : TableFormat::markdown;
      out << compare(specs, format, compare_jobs);
      return kExitOk;
    }

    if (*export_cmd) {
      const Netlist netlist = netlist_from_json(read_file(export_netlist_path));
      write_output(export_out, export_netlist(netlist, export_format == "json" ? ExportFormat::json : ExportFormat::dot),
                   out);
      return kExitOk;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace ling::cli
