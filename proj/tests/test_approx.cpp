#include <gtest/gtest.h>

#include "locunc/approx.hpp"
#include "locunc/errors.hpp"
#include "locunc/evalc.hpp"
#include "locunc/families.hpp"
#include "locunc/robust_cut.hpp"
#include "support/oracles.hpp"

using namespace locunc;

TEST(Approx, BoundTable) {
  FamilyStats m;
  m.is_matching = true;
  m.max_degree = 1;
  m.is_forest = true;
  EXPECT_EQ(applicable_bound(m, false).value, 1);
  EXPECT_EQ(applicable_bound(m, false).structure, Structure::Matching);

  Graph g(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}, {0, 2}});
  auto path = family_stats(g, {0, 1, 2});
  EXPECT_EQ(applicable_bound(path, false).value, 2);
  EXPECT_EQ(applicable_bound(path, false).structure, Structure::Path);
  auto tri = family_stats(g, {0, 1, 5});
  EXPECT_EQ(applicable_bound(tri, false).value, 1.5);
  auto cyc = family_stats(g, {0, 1, 2, 3, 4});
  EXPECT_EQ(applicable_bound(cyc, false).value, 2);

  Graph star(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
  auto st = family_stats(star, {0, 1, 2, 3});
  EXPECT_EQ(applicable_bound(st, false).value, 3);
  EXPECT_EQ(applicable_bound(st, true).value, 2);
  EXPECT_EQ(applicable_bound(st, true).hypothesis, Hypothesis::Ptolemaic);

  // spider with degree-4 centre and longer legs: a tree that is neither path nor star
  Graph spider(9, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 5}, {2, 6}, {3, 7}, {4, 8}});
  auto sp = family_stats(spider, {0, 1, 2, 3, 4, 5, 6, 7});
  EXPECT_EQ(applicable_bound(sp, true).value, 4);
  EXPECT_EQ(applicable_bound(sp, false).value, 4);  // max degree wins over 6
  EXPECT_EQ(applicable_bound(sp, false).structure, Structure::MaxDegree);

  // general graph of max degree 5 under a Ptolemaic metric
  std::vector<Edge> k6;
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j) k6.push_back({i, j});
  k6.push_back({0, 6});
  Graph gen(7, k6);
  EdgeSubset F(gen.m());
  std::iota(F.begin(), F.end(), 0);
  auto gs = family_stats(gen, F);
  EXPECT_EQ(applicable_bound(gs, true).value, 4);
  EXPECT_EQ(applicable_bound(gs, true).structure, Structure::General);
  EXPECT_EQ(applicable_bound(gs, false).value, 6);
}

TEST(Approx, TightInstances) {
  for (int n = 3; n <= 8; ++n) {
    auto c = certify_ratio(gen_tight_path(n).instance, gen_tight_path(n).F);
    EXPECT_NEAR(c.cmax, 2, 1e-12);
    EXPECT_NEAR(c.c, 1, 1e-12);
    EXPECT_TRUE(c.ok);
  }
  for (int n = 4; n <= 8; ++n) {
    auto t = gen_tight_cycle(n);
    auto c = certify_ratio(t.instance, t.F);
    EXPECT_NEAR(c.cmax, 4, 1e-12);
    EXPECT_NEAR(c.c, 2, 1e-12);
  }
  auto tri = gen_tight_triangle();
  auto ct = certify_ratio(tri.instance, tri.F);
  EXPECT_NEAR(ct.cmax, 3, 1e-12);
  EXPECT_NEAR(ct.c, 2, 1e-12);
  for (int n = 3; n <= 10; ++n) {
    auto t = gen_tight_star(n);
    auto c = certify_ratio(t.instance, t.F);
    EXPECT_NEAR(c.observed, 3.0 * (n - 1) / (n + 1), 1e-9);
    EXPECT_TRUE(c.ok);
  }
  EXPECT_THROW(gen_tight_path(2), InvalidSize);
  EXPECT_THROW(gen_tight_cycle(3), InvalidSize);
}

TEST(Approx, TightCliqueFollowsMaxCut) {
  // c^max = k(k-1)/2 and c = max cut of K_k = floor(k/2) * ceil(k/2)
  for (int k = 3; k <= 7; ++k) {
    auto t = gen_tight_clique(k);
    auto c = certify_ratio(t.instance, t.F);
    EXPECT_NEAR(c.cmax, k * (k - 1) / 2.0, 1e-12);
    EXPECT_NEAR(c.c, (k / 2) * ((k + 1) / 2), 1e-12);
    EXPECT_TRUE(c.ok);
  }
}

TEST(Approx, CenterCounterexample) {
  for (double eps : {0.1, 0.01}) {
    Instance I = gen_center_counterexample(eps);
    auto opt = cutting_plane(I).value;
    EXPECT_NEAR(opt, eps, 1e-12);
    auto Fc = heuristic_center(I);
    EXPECT_EQ(Fc, EdgeSubset{1});
    EXPECT_NEAR(eval_c(I, Fc).value / opt, 1 / eps, 1e-6);
    EXPECT_LE(eval_c(I, heuristic_dmax(I)).value / opt, 2 + 1e-9);
  }
}

TEST(Approx, HeuristicsWithSingletonsAreOptimal) {
  std::mt19937_64 rng(51);
  for (int rep = 0; rep < 10; ++rep) {
    auto I = oracle::random_instance(rng, 6, 3, 1, oracle::MetricVariant::Graph);
    const double opt = cutting_plane(I).value;
    EXPECT_NEAR(eval_c(I, heuristic_center(I)).value, opt, 1e-9);
    EXPECT_NEAR(eval_c(I, heuristic_dmax(I)).value, opt, 1e-9);
  }
}

TEST(Approx, DmaxWithinBoundOfOptimum) {
  std::mt19937_64 rng(52);
  for (auto v : {oracle::MetricVariant::Explicit, oracle::MetricVariant::Euclidean})
    for (int rep = 0; rep < 20; ++rep) {
      const int n = 5 + rep % 2;
      auto I = oracle::random_instance(rng, n, 3, 3, v, rep % 2 ? FamilyDescriptor{STPath{0, n - 1}} : SpanningTree{});
      const double opt = cutting_plane(I).value;
      auto Fd = heuristic_dmax(I);
      const double cd = eval_c(I, Fd).value;
      EXPECT_GE(eval_c(I, heuristic_center(I)).value, opt - 1e-9);
      EXPECT_GE(cd, opt - 1e-9);
      // every member of the family obeys the bound for its own structure; the
      // dmax solution then satisfies c(Fd) <= cmax(Fd) <= cmax(F*) <= rho c(F*)
      double rho = 1;
      for (const auto& F : enumerate_family(I.family(), I.graph()))
        rho = std::max(rho, applicable_bound(family_stats(I.graph(), F), instance_is_ptolemaic(I)).value);
      EXPECT_LE(cd, rho * opt + 1e-9);
      EXPECT_LE(cd, cmax(I, Fd) + 1e-9);
    }
}

TEST(Approx, CertificationOnRandomCliques) {
  std::mt19937_64 rng(53);
  for (int rep = 0; rep < 30; ++rep) {
    const int k = 3 + rep % 4;
    std::vector<Edge> e;
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j) e.push_back({i, j});
    Graph g(k, e);
    auto space = oracle::random_space(rng, oracle::MetricVariant::Explicit, 8);
    Instance I(g, space, oracle::random_usets(rng, k, 3, 8), SpanningTree{});
    EdgeSubset F(g.m());
    std::iota(F.begin(), F.end(), 0);
    auto c = certify_ratio(I, F);
    EXPECT_LE(c.observed, 2 + 1e-9);
    EXPECT_TRUE(c.ok);
  }
}

TEST(Approx, UnionBound) {
  std::mt19937_64 rng(54);
  // two disjoint single edges
  auto s = MetricSpace::euclidean(1, {0.0, 1.0, 3.0, 7.0});
  Instance I(Graph(4, {{0, 1}, {2, 3}}), s, {{0, 1}, {2}, {3, 0}, {1}}, SpanningTree{});
  auto r = union_bound_check(I, {{0}, {1}});
  EXPECT_TRUE(r.vertex_disjoint);
  EXPECT_DOUBLE_EQ(r.rho_max, 1.0);
  EXPECT_TRUE(r.ok());
  for (int rep = 0; rep < 30; ++rep) {
    auto R = oracle::random_instance(rng, 7, 0, 3, oracle::MetricVariant::Explicit);
    // the random graph is a tree; split it by edge parity of depth into two star forests
    std::vector<int> depth(R.n(), -1);
    depth[0] = 0;
    for (int round = 0; round < R.n(); ++round)
      for (const auto& e : R.graph().edges()) {
        if (depth[e.u] >= 0 && depth[e.v] < 0) depth[e.v] = depth[e.u] + 1;
        if (depth[e.v] >= 0 && depth[e.u] < 0) depth[e.u] = depth[e.v] + 1;
      }
    std::vector<EdgeSubset> parts(2);
    for (int e = 0; e < R.m(); ++e) {
      const auto& ed = R.graph().edge(e);
      parts[std::min(depth[ed.u], depth[ed.v]) % 2].push_back(e);
    }
    auto u = union_bound_check(R, parts);
    EXPECT_TRUE(u.general_ok);
    EXPECT_LE(u.cmax_union, 2 * 3 * u.c_union + 1e-9);
    // three overlapping parts
    std::vector<EdgeSubset> over(3);
    for (int e = 0; e < R.m(); ++e) {
      over[e % 3].push_back(e);
      over[(e + 1) % 3].push_back(e);
    }
    for (auto& p : over) std::sort(p.begin(), p.end());
    EXPECT_TRUE(union_bound_check(R, over).general_ok);
  }
}

TEST(Approx, CertificationZeroCostConvention) {
  auto s = MetricSpace::euclidean(1, {0.0});
  Instance I(Graph(2, {{0, 1}}), s, {{0}, {0}}, SpanningTree{});
  auto c = certify_ratio(I, {0});
  EXPECT_EQ(c.observed, 1.0);
  EXPECT_TRUE(c.ok);
}
