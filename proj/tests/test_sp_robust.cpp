#include <gtest/gtest.h>

#include <sstream>

#include "locunc/approx.hpp"
#include "locunc/errors.hpp"
#include "locunc/reductions.hpp"
#include "locunc/sp_robust.hpp"
#include "support/oracles.hpp"

using namespace locunc;

namespace {

double brute_sp(const Instance& I) {
  auto raw = oracle::raw_of(I);
  const auto& f = std::get<STPath>(I.family());
  return oracle::min_over(raw, oracle::st_paths(I.n(), raw.edges, f.s, f.t));
}

// symmetric nonnegative matrix that need not satisfy the triangle inequality
MetricSpace random_nonmetric(std::mt19937_64& rng, int P) {
  std::vector<double> d(static_cast<size_t>(P) * P, 0.0);
  for (int a = 0; a < P; ++a)
    for (int b = a + 1; b < P; ++b) d[a * P + b] = d[b * P + a] = std::uniform_int_distribution<int>(0, 20)(rng) / 2.0;
  return MetricSpace::explicit_matrix(P, d, false);
}

}  // namespace

TEST(RobustSP, SingleEdge) {
  auto s = MetricSpace::euclidean(1, {0.0, 2.0, 5.0});
  Instance I(Graph(2, {{0, 1}}), s, {{0, 1}, {2}}, STPath{0, 1});
  auto r = robust_sp_exact(I);
  EXPECT_DOUBLE_EQ(r.value, I.dmax(0, 1));
  EXPECT_EQ(r.vertices, (std::vector<VertexId>{0, 1}));
}

TEST(RobustSP, TightPath) {
  auto t = gen_tight_path(3);
  EXPECT_DOUBLE_EQ(robust_sp_exact(t.instance).value, 1.0);
}

TEST(RobustSP, ExactMatchesPathEnumeration) {
  std::mt19937_64 rng(61);
  for (int rep = 0; rep < 60; ++rep) {
    const int n = 3 + rep % 5;
    auto el = oracle::random_connected(rng, n, 3);
    const int P = n + 3;
    MetricSpace space = rep % 3 == 0 ? random_nonmetric(rng, P)
                                     : oracle::random_space(rng, rep % 3 == 1 ? oracle::MetricVariant::Euclidean
                                                                              : oracle::MetricVariant::Graph, P);
    Instance I(oracle::to_graph(n, el), space, oracle::random_usets(rng, n, 3, P), STPath{0, n - 1});
    auto r = robust_sp_exact(I);
    const double ref = brute_sp(I);
    EXPECT_NEAR(r.value, ref, 1e-9);
    EXPECT_NEAR(r.dp_value, ref, 1e-9);
    EXPECT_EQ(r.vertices.front(), 0);
    EXPECT_EQ(r.vertices.back(), n - 1);
    EXPECT_EQ(r.path.size() + 1, r.vertices.size());
    EXPECT_GT(r.stats.n_profiles, 0);
  }
}

TEST(RobustSP, Disconnected) {
  auto s = MetricSpace::euclidean(1, {0.0, 1.0, 2.0, 3.0});
  Instance I(Graph(4, {{0, 1}, {2, 3}}), s, {{0}, {1}, {2}, {3}}, STPath{0, 3});
  EXPECT_THROW(robust_sp_exact(I), Infeasible);
  Instance J(Graph(2, {{0, 1}}), s, {{0}, {1}}, SpanningTree{});
  EXPECT_THROW(robust_sp_exact(J), InvalidInstance);
}

TEST(RobustSP, RoundingBounds) {
  std::mt19937_64 rng(62);
  for (int rep = 0; rep < 1000; ++rep) {
    const double d = std::uniform_real_distribution<double>(0, 50)(rng);
    const double unit = std::uniform_real_distribution<double>(0.001, 3)(rng);
    const auto k = round_up_units(d, unit);
    EXPECT_GE(static_cast<double>(k) * unit, d);
    EXPECT_LE(static_cast<double>(k) * unit, d + unit + 1e-9);
  }
  EXPECT_EQ(round_up_units(0, 0.5), 0);
  EXPECT_EQ(round_up_units(1.0, 0.5), 2);
}

TEST(RobustSP, FptasSingletonsIsShortestPath) {
  std::mt19937_64 rng(63);
  for (int rep = 0; rep < 20; ++rep) {
    const int n = 4 + rep % 4;
    auto el = oracle::random_connected(rng, n, 3);
    auto space = oracle::random_space(rng, oracle::MetricVariant::Euclidean, n + 2);
    Instance I(oracle::to_graph(n, el), space, oracle::random_usets(rng, n, 1, n + 2), STPath{0, n - 1});
    EXPECT_NEAR(robust_sp_fptas(I, 1.0).value, brute_sp(I), 1e-9);
  }
}

TEST(RobustSP, FptasGuarantee) {
  std::mt19937_64 rng(64);
  for (double eps : {0.5, 0.1})
    for (int rep = 0; rep < 40; ++rep) {
      const int n = 3 + rep % 5;
      auto I = oracle::random_instance(rng, n, 3, 3, oracle::MetricVariant::Explicit, STPath{0, n - 1});
      const double opt = brute_sp(I);
      auto r = robust_sp_fptas(I, eps);
      EXPECT_LE(r.value, (1 + eps) * opt + 1e-9);
      EXPECT_LE(r.stats.n_values, n + 2 + static_cast<long long>(std::ceil(2.0 * n / eps)));
      EXPECT_NEAR(r.eps_prime, eps / (2 * n), 1e-15);
    }
  EXPECT_THROW(robust_sp_fptas(gen_tight_path(3).instance, 0), InvalidScale);
}

TEST(RobustSP, FptasOnPartitionInstance) {
  PartitionInput in;
  in.a = {1, 2, 3};
  in.K = min_scale_sp(in.a);
  Instance I = gen_partition_sp(in);
  const double A = 6, n = 3;
  for (double eps : {0.5, 0.1}) EXPECT_LE(robust_sp_fptas(I, eps).value, (1 + eps) * (2 * n * in.K + A) + 1e-9);
}

TEST(RobustSP, StatsCsv) {
  auto t = gen_tight_path(4);
  std::ostringstream out;
  write_sp_stats_csv_header(out);
  write_sp_stats_csv_row(out, "exact", 0, robust_sp_exact(t.instance));
  auto s = out.str();
  EXPECT_EQ(s.substr(0, s.find('\n')), "algorithm,epsilon,n_profiles,n_values,table_bytes,hops,pruned,value");
  EXPECT_EQ(s.substr(s.find('\n') + 1, 8), "exact,0,");
}
