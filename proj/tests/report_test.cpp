#include <gtest/gtest.h>

#include <json.hpp>

#include "ling/report.hpp"

namespace ling {
namespace {

AdderSpec spec(Family family, unsigned width, bool cin = false, unsigned group = 4) {
  return AdderSpec{family, width, group, cin, SumForm::xor_form};
}

TEST(Analyze, CarryDepthClaim) {
  EXPECT_EQ(analyze(spec(Family::cla_flat, 4)).depth_carry_signal, 5u);
  EXPECT_EQ(analyze(spec(Family::ling4, 4)).depth_carry_signal, 4u);
}

TEST(Analyze, RippleDepthMatchesStructuralCount) {
  // g/p at level 1, c[0] = g[0], then one AND + OR per stage.
  for (unsigned w = 1; w <= 12; ++w) {
    const ComparisonRow row = analyze(spec(Family::rca, w));
    EXPECT_EQ(row.depth_cout, 1 + 2 * (w - 1)) << w;
    EXPECT_EQ(row.depth_carry_signal, row.depth_cout);
    // With carry-in c[0] = g[0] + p[0]*cin already sits at level 3.
    EXPECT_EQ(analyze(spec(Family::rca, w, true)).depth_cout, 3 + 2 * (w - 1)) << w;
  }
}

TEST(Analyze, FaninOrderingAtWidth4) {
  const ComparisonRow cla = analyze(spec(Family::cla_flat, 4));
  const ComparisonRow ling = analyze(spec(Family::ling4, 4));
  EXPECT_LT(ling.max_fanin_raw, cla.max_fanin_raw);
  EXPECT_LT(ling.depth_carry_signal, cla.depth_carry_signal);
  EXPECT_EQ(cla.max_fanin_raw, 4u);
  EXPECT_EQ(cla.or_terms_widest, 4u);
  EXPECT_EQ(ling.max_fanin_raw, 2u);
  // With a carry-in the CLA carry-out needs five OR terms; flat Ling H[3]
  // without carry-in needs four.
  EXPECT_EQ(analyze(spec(Family::cla_flat, 4, true)).or_terms_widest, 5u);
  EXPECT_EQ(analyze(spec(Family::ling_flat, 4)).or_terms_widest, 4u);
}

TEST(Analyze, Deterministic) {
  const AdderSpec s = spec(Family::ling_grouped, 16, true);
  EXPECT_EQ(analyze(s), analyze(s));
}

TEST(Analyze, GroupedLingDepthGrowsLinearly) {
  std::vector<unsigned> depths;
  for (unsigned w : {4u, 8u, 12u, 16u}) depths.push_back(analyze(spec(Family::ling_grouped, w)).depth_cout);
  const unsigned step = depths[1] - depths[0];
  EXPECT_GT(step, 0u);
  EXPECT_EQ(depths[2] - depths[1], step);
  EXPECT_EQ(depths[3] - depths[2], step);
}

TEST(Analyze, GateCountsAreTwoInputEquivalents) {
  const ComparisonRow row = analyze(spec(Family::cla_flat, 4));
  std::size_t sum = 0;
  for (const auto& [kind, count] : row.gates_by_kind) sum += count;
  EXPECT_EQ(sum, row.gates_total);
  EXPECT_EQ(row.sum_form, "none");
  EXPECT_EQ(analyze(spec(Family::ling4, 4)).sum_form, "xor-form");
}

TEST(Compare, MarkdownTable) {
  const std::vector<AdderSpec> specs{spec(Family::rca, 4), spec(Family::cla_flat, 4), spec(Family::ling4, 4)};
  const std::string table = compare(specs, TableFormat::markdown);
  std::vector<std::string> lines;
  std::size_t start = 0;
  for (std::size_t end; (end = table.find('\n', start)) != std::string::npos; start = end + 1) {
    lines.push_back(table.substr(start, end - start));
  }
  ASSERT_EQ(lines.size(), 5u);
  EXPECT_EQ(lines[0],
            "| family | width | sum_form | gates_total | depth_cout | depth_carry_signal | max_fanin_raw | "
            "or_terms_widest |");
  EXPECT_EQ(lines[2].rfind("| rca | 4 |", 0), 0u);
  EXPECT_EQ(lines[3].rfind("| cla-flat | 4 | none |", 0), 0u);
  EXPECT_EQ(lines[4].rfind("| ling4 | 4 | xor-form |", 0), 0u);
}

TEST(Compare, CsvAndJson) {
  const std::vector<AdderSpec> specs{spec(Family::ling4, 4), spec(Family::ling4, 4)};
  const std::string csv = compare(specs, TableFormat::csv);
  EXPECT_EQ(csv.substr(0, csv.find('\n')),
            "family,width,sum_form,gates_total,depth_cout,depth_carry_signal,max_fanin_raw,or_terms_widest");
  const auto body = csv.substr(csv.find('\n') + 1);
  const auto first = body.substr(0, body.find('\n'));
  EXPECT_EQ(body, first + "\n" + first + "\n");

  const auto doc = nlohmann::json::parse(compare(specs, TableFormat::json));
  ASSERT_EQ(doc.size(), 2u);
  EXPECT_EQ(doc[0], doc[1]);
  EXPECT_EQ(doc[0]["depth_carry_signal"], 4);
  EXPECT_TRUE(doc[0]["gates_by_kind"].contains("AND"));
}

TEST(Compare, ParallelMatchesSerial) {
  const std::vector<AdderSpec> specs{spec(Family::rca, 16), spec(Family::cla_grouped, 16),
                                     spec(Family::ling_grouped, 16), spec(Family::ling_flat, 16, true)};
  EXPECT_EQ(compare(specs, TableFormat::csv, 1), compare(specs, TableFormat::csv, 4));
}

TEST(Compare, Errors) {
  EXPECT_THROW(compare({}, TableFormat::markdown), std::invalid_argument);
  const std::vector<AdderSpec> bad{spec(Family::ling4, 8)};
  EXPECT_THROW(compare(bad, TableFormat::csv), std::invalid_argument);
}

}  // namespace
}  // namespace ling
