#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "locunc/adr.hpp"
#include "locunc/approx.hpp"
#include "locunc/errors.hpp"
#include "locunc/evalc.hpp"
#include "locunc/generators.hpp"
#include "support/oracles.hpp"

using namespace locunc;

namespace {

Instance single_edge() {
  auto s = MetricSpace::euclidean(2, {0, 0, 1, 0, 3, 1, 4, 2});
  return Instance(Graph(2, {{0, 1}}), s, {{0, 1}, {2, 3}}, SpanningTree{});
}

void expect_counts(const Instance& I) {
  auto md = build_adr_model(I);
  auto got = adr_counts(md);
  auto want = adr_expected_counts(I);
  EXPECT_EQ(got.binaries, I.m());
  EXPECT_EQ(got.binaries, want.binaries);
  EXPECT_EQ(got.soc, want.soc);
  EXPECT_EQ(got.linear, want.linear);
  EXPECT_EQ(got.scalars, want.scalars);
  EXPECT_EQ(got.vectors, want.vectors);
  int soc = I.m();
  for (int i = 0; i < I.n(); ++i) soc += static_cast<int>(I.graph().adj(i).size() * I.uset(i).size());
  EXPECT_EQ(got.soc, soc);
}

}  // namespace

TEST(Adr, SingleEdgeCounts) {
  auto md = build_adr_model(single_edge());
  EXPECT_EQ(md.binaries(), 1);
  EXPECT_EQ(md.soc.size(), 5u);
  EXPECT_EQ(md.ell, 2);
  EXPECT_EQ(md.big_m[0], single_edge().dmax(0, 1));
  expect_counts(single_edge());
}

TEST(Adr, FormatCounts) {
  for (int kappa = 1; kappa <= 3; ++kappa)
    for (int sigma : {1, 3, 5}) expect_counts(gen_format(kappa, 0.2, sigma, 9));
}

TEST(Adr, SingletonsGiveCost) {
  std::mt19937_64 rng(81);
  for (int rep = 0; rep < 20; ++rep) {
    auto I = oracle::random_instance(rng, 5, 3, 1, oracle::MetricVariant::Euclidean);
    auto md = build_adr_model(I);
    auto F = oracle::random_subset(rng, I.m());
    EXPECT_NEAR(adr_bound_evaluate(md, F), eval_c_bruteforce(I, F).value, 1e-9);
  }
}

TEST(Adr, TightPathBound) {
  auto t = gen_tight_path(3);
  auto md = build_adr_model(t.instance);
  EXPECT_GE(adr_bound_evaluate(md, t.F), 1 - 1e-9);
}

TEST(Adr, Conservative) {
  std::mt19937_64 rng(82);
  for (int rep = 0; rep < 60; ++rep) {
    const int n = 3 + rep % 5;
    auto I = oracle::random_instance(rng, n, 3, 3, oracle::MetricVariant::Euclidean);
    auto md = build_adr_model(I);
    auto F = oracle::random_subset(rng, I.m());
    const double exact = oracle::worst(oracle::raw_of(I), F);
    EXPECT_GE(adr_bound_evaluate(md, F), exact - 1e-9);

    // any other mu assignment is also conservative
    std::vector<double> x(I.m(), 0.0);
    for (int e : F) x[e] = 1;
    std::vector<std::vector<double>> mu(2 * I.m(), std::vector<double>(md.ell));
    for (auto& v : mu)
      for (double& c : v) c = std::uniform_real_distribution<double>(-5, 5)(rng);
    EXPECT_GE(adr_bound_evaluate(md, x, mu), exact - 1e-9);
  }
}

TEST(Adr, NonEuclidean) {
  std::mt19937_64 rng(83);
  auto I = oracle::random_instance(rng, 4, 1, 2, oracle::MetricVariant::Graph);
  EXPECT_THROW(build_adr_model(I), UnsupportedMetric);
}

TEST(Adr, EmptyModelIsHeaderOnly) {
  EXPECT_EQ(model_to_string(ConicModel{}), "CONIC 1\nDIMS 0 0 0 0 0 0\nEND\n");
}

TEST(Adr, SingleEdgeGolden) {
  std::ifstream f(std::string(LOCUNC_FIXTURES) + "/adr_single_edge.txt", std::ios::binary);
  ASSERT_TRUE(f);
  std::stringstream want;
  want << f.rdbuf();
  EXPECT_EQ(model_to_string(build_adr_model(single_edge())), want.str());
}

TEST(Adr, ByteStable) {
  auto a = model_to_string(build_adr_model(gen_format(2, 0.3, 4, 5)));
  auto b = model_to_string(build_adr_model(gen_format(2, 0.3, 4, 5)));
  EXPECT_EQ(a, b);
  auto md = build_adr_model(gen_format(1, 0.3, 4, 5));
  EXPECT_EQ(model_to_string(md), model_to_string(md));
}
