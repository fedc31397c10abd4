#include <gtest/gtest.h>

#include <sstream>

#include "locunc/approx.hpp"
#include "locunc/errors.hpp"
#include "locunc/generators.hpp"
#include "locunc/io.hpp"
#include "locunc/reductions.hpp"
#include "support/oracles.hpp"

using namespace locunc;

namespace {

void expect_same(const Instance& a, const Instance& b) {
  ASSERT_EQ(a.n(), b.n());
  EXPECT_EQ(a.graph().edges(), b.graph().edges());
  EXPECT_EQ(a.usets(), b.usets());
  EXPECT_EQ(a.space().kind(), b.space().kind());
  ASSERT_EQ(a.space().size(), b.space().size());
  EXPECT_EQ(a.space().to_matrix(), b.space().to_matrix());
  EXPECT_EQ(family_to_string(a.family()), family_to_string(b.family()));
}

std::string replace_line(const std::string& text, int line, const std::string& with) {
  std::istringstream in(text);
  std::string out, s;
  for (int k = 1; std::getline(in, s); ++k) out += (k == line ? with : s) + "\n";
  return out;
}

}  // namespace

TEST(Io, FormatDouble) {
  for (double x : {0.0, 1.0, -2.5, 0.1, 1.0 / 3.0, 1e-300, 123456789.123456789})
    EXPECT_EQ(std::stod(format_double(x)), x);
  EXPECT_EQ(format_double(3.0), "3");
}

TEST(Io, RoundTripRandom) {
  std::mt19937_64 rng(91);
  std::vector<FamilyDescriptor> fams{SpanningTree{}, STPath{0, 3}, SteinerTree{{0, 2, 3}}, PMedian{{0, 1}, {2, 3}, 1},
                                      Assignment{{0, 1}, {2, 3}}, ExplicitList{{{0}, {0, 1}}}};
  for (int rep = 0; rep < 60; ++rep) {
    auto v = static_cast<oracle::MetricVariant>(rep % 3);
    auto I = oracle::random_instance(rng, 4 + rep % 4, 3, 3, v, fams[rep % fams.size()]);
    const auto text = instance_to_string(I);
    auto J = instance_from_string(text);
    expect_same(I, J);
    EXPECT_EQ(instance_to_string(J), text);
  }
}

TEST(Io, RoundTripGenerated) {
  for (const Instance& I : {gen_format(2, 0.4, 3, 1), gen_planar_roadnet(12, 18, 4, 3, 2, 2, 5).instance,
                            gen_partition_mst(PartitionInput{{1, 2}, min_scale_mst({1, 2})}),
                            gen_tight_star(5).instance}) {
    auto J = instance_from_string(instance_to_string(I));
    expect_same(I, J);
  }
}

TEST(Io, FixtureMatchesTightPath) {
  auto I = parse_instance(std::string(LOCUNC_FIXTURES) + "/tight_path_3.txt");
  expect_same(I, gen_tight_path(3).instance);
}

TEST(Io, EmptyUsetsLine) {
  const auto text = instance_to_string(gen_tight_path(3).instance);
  // lines: LOCUNC, GRAPH, 2 edges, METRIC, 2 points, USETS, then the three sets
  try {
    instance_from_string(replace_line(text, 10, ""));
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 10);
  }
}

TEST(Io, Malformed) {
  const auto text = instance_to_string(gen_tight_path(3).instance);
  EXPECT_THROW(instance_from_string(replace_line(text, 1, "LOCUNC 2")), ParseError);
  EXPECT_THROW(instance_from_string(replace_line(text, 3, "0 x")), ParseError);
  EXPECT_THROW(instance_from_string(replace_line(text, 12, "FAMILY NOPE")), ParseError);
  EXPECT_THROW(instance_from_string(text.substr(0, text.size() - 4)), ParseError);
  try {
    instance_from_string(replace_line(text, 2, "GRAPH 3 2 7"));
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2);
  }
}
