#include <gtest/gtest.h>

#include "locunc/approx.hpp"
#include "locunc/errors.hpp"
#include "locunc/evalc.hpp"
#include "locunc/families.hpp"
#include "locunc/reductions.hpp"
#include "support/oracles.hpp"

using namespace locunc;

namespace {

const oracle::MetricVariant kVariants[] = {oracle::MetricVariant::Explicit, oracle::MetricVariant::Euclidean,
                                          oracle::MetricVariant::Graph};

EdgeSubset all_edges(const Graph& g) {
  EdgeSubset F(g.m());
  std::iota(F.begin(), F.end(), 0);
  return F;
}

}  // namespace

TEST(EvalC, Singletons) {
  auto s = MetricSpace::euclidean(1, {0.0, 2.0, 5.0});
  Instance I(Graph(3, {{0, 1}, {1, 2}, {0, 2}}), s, {{0}, {1}, {2}}, SpanningTree{});
  EXPECT_DOUBLE_EQ(eval_c_bruteforce(I, {0, 1, 2}).value, 10.0);
  EXPECT_DOUBLE_EQ(eval_c(I, {0, 1, 2}).value, 10.0);
  EXPECT_EQ(eval_c(I, {}).value, 0.0);
}

TEST(EvalC, TightPathAndTriangle) {
  auto p = gen_tight_path(3);
  EXPECT_DOUBLE_EQ(eval_c_bruteforce(p.instance, p.F).value, 1.0);
  EXPECT_DOUBLE_EQ(eval_c_tree(p.instance, p.F).value, 1.0);
  auto t = gen_tight_triangle();
  EXPECT_DOUBLE_EQ(eval_c_bruteforce(t.instance, t.F).value, 2.0);
  EXPECT_DOUBLE_EQ(eval_c(t.instance, t.F).value, 2.0);
}

TEST(EvalC, StarDP) {
  auto st = gen_tight_star(4);
  EXPECT_NEAR(eval_c_tree(st.instance, st.F).value, 5.0 / 3.0, 1e-12);
  // hub with three candidate points, singleton leaves
  auto s = MetricSpace::euclidean(1, {-1.0, 0.0, 4.0, 1.0, 2.0, 3.0});
  Instance I(Graph(4, {{0, 1}, {0, 2}, {0, 3}}), s, {{0, 1, 2}, {3}, {4}, {5}}, SpanningTree{});
  double best = 0;
  for (double h : {-1.0, 0.0, 4.0}) best = std::max(best, std::abs(h - 1) + std::abs(h - 2) + std::abs(h - 3));
  EXPECT_DOUBLE_EQ(eval_c_tree(I, {0, 1, 2}).value, best);
}

TEST(EvalC, TreeRejectsCycles) {
  auto t = gen_tight_triangle();
  EXPECT_THROW(eval_c_tree(t.instance, t.F), NotATree);
}

TEST(EvalC, DecompositionShapes) {
  Graph path(4, {{0, 1}, {1, 2}, {2, 3}});
  auto td = build_nice_decomposition(path);
  EXPECT_EQ(td.width(), 1);
  EXPECT_NO_THROW(validate_nice_decomposition(td, path, all_edges(path)));
  std::vector<Edge> k4;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) k4.push_back({i, j});
  Graph K4(4, k4);
  auto tk = build_nice_decomposition(K4);
  EXPECT_EQ(tk.width(), 3);
  EXPECT_NO_THROW(validate_nice_decomposition(tk, K4, all_edges(K4)));
  std::mt19937_64 rng(31);
  for (int rep = 0; rep < 40; ++rep) {
    const int n = 4 + rep % 6;
    Graph g = oracle::to_graph(n, oracle::random_connected(rng, n, n / 2 + rep % 4));
    auto F = oracle::random_subset(rng, g.m());
    auto d = build_nice_decomposition(g, F);
    EXPECT_NO_THROW(validate_nice_decomposition(d, g, F));
    auto full = build_nice_decomposition(g);
    EXPECT_NO_THROW(validate_nice_decomposition(full, g, all_edges(g)));
  }
}

TEST(EvalC, ValidatorCatchesBrokenDecompositions) {
  Graph g(3, {{0, 1}, {1, 2}, {0, 2}});
  auto td = build_nice_decomposition(g);
  ASSERT_NO_THROW(validate_nice_decomposition(td, g, all_edges(g)));
  // drop a vertex from a non-empty bag
  for (auto& nd : td.nodes)
    if (nd.bag.size() == 3) {
      nd.bag.pop_back();
      break;
    }
  EXPECT_THROW(validate_nice_decomposition(td, g, all_edges(g)), InvalidDecomposition);
  auto t2 = build_nice_decomposition(g);
  t2.root = -1;
  EXPECT_THROW(validate_nice_decomposition(t2, g, all_edges(g)), InvalidDecomposition);
}

TEST(EvalC, SingleEdgeIsDmax) {
  std::mt19937_64 rng(32);
  auto I = oracle::random_instance(rng, 5, 2, 3, oracle::MetricVariant::Euclidean);
  for (int e = 0; e < I.m(); ++e) {
    auto td = build_nice_decomposition(I.graph(), {e});
    EXPECT_NEAR(eval_c_treewidth(I, {e}, td).value, I.dmax_edge(e), 1e-12);
  }
}

TEST(EvalC, AllMethodsAgreeWithOracle) {
  std::mt19937_64 rng(33);
  for (auto v : kVariants)
    for (int rep = 0; rep < 25; ++rep) {
      const int n = 3 + rep % 6;
      auto I = oracle::random_instance(rng, n, rep % 4, 3, v);
      auto raw = oracle::raw_of(I);
      auto F = oracle::random_subset(rng, I.m());
      const double ref = oracle::worst(raw, F);
      auto bf = eval_c_bruteforce(I, F);
      EXPECT_NEAR(bf.value, ref, 1e-9);
      EXPECT_NEAR(cost(I, bf.witness, F), bf.value, 1e-12);
      auto tw = eval_c_treewidth(I, F, build_nice_decomposition(I.graph(), F));
      EXPECT_NEAR(tw.value, ref, 1e-9);
      EXPECT_NEAR(cost(I, tw.witness, F), tw.value, 1e-12);
      if (family_stats(I.graph(), F).is_forest) {
        auto tr = eval_c_tree(I, F);
        EXPECT_NEAR(tr.value, ref, 1e-9);
        EXPECT_NEAR(cost(I, tr.witness, F), tr.value, 1e-12);
        EXPECT_NEAR(tr.value, tw.value, 1e-9);
      }
      EvalMethod used;
      auto d = eval_c(I, F, {}, &used);
      EXPECT_NEAR(d.value, ref, 1e-9);
    }
}

TEST(EvalC, BruteForceCap) {
  std::mt19937_64 rng(34);
  auto I = oracle::random_instance(rng, 8, 6, 3, oracle::MetricVariant::Explicit);
  Caps caps;
  caps.evalc_scenarios = 1;
  bool any = false;
  for (const auto& u : I.usets()) any |= u.size() > 1;
  if (any) EXPECT_THROW(eval_c_bruteforce(I, all_edges(I.graph()), caps), CapExceeded);
}

TEST(EvalC, MaxCut) {
  Graph tri(3, {{0, 1}, {1, 2}, {0, 2}});
  EXPECT_DOUBLE_EQ(eval_c(gen_maxcut_evalc(tri), all_edges(tri)).value, 2.0);
  Graph c4(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
  EXPECT_DOUBLE_EQ(eval_c(gen_maxcut_evalc(c4), all_edges(c4)).value, 4.0);
}

TEST(EvalC, ListColouring) {
  // path with lists that admit a proper colouring
  Graph path(3, {{0, 1}, {1, 2}});
  auto I = gen_listcol_evalc(path, {{1, 2}, {1}, {2, 3}});
  EXPECT_DOUBLE_EQ(eval_c(I, all_edges(path)).value, 2.0);
  Graph tri(3, {{0, 1}, {1, 2}, {0, 2}});
  auto J = gen_listcol_evalc(tri, {{1}, {1}, {1}});
  EXPECT_DOUBLE_EQ(eval_c(J, all_edges(tri)).value, 0.0);
  std::mt19937_64 rng(35);
  for (int rep = 0; rep < 40; ++rep) {
    const int n = 4 + rep % 4;
    auto el = oracle::random_connected(rng, n, 3);
    std::vector<std::vector<int>> lists(n);
    for (auto& l : lists) {
      std::set<int> s;
      const int k = std::uniform_int_distribution<int>(1, 2)(rng);
      while (static_cast<int>(s.size()) < k) s.insert(std::uniform_int_distribution<int>(0, 2)(rng));
      l.assign(s.begin(), s.end());
    }
    Graph g = oracle::to_graph(n, el);
    const double c = eval_c(gen_listcol_evalc(g, lists), all_edges(g)).value;
    EXPECT_EQ(std::abs(c - g.m()) < 1e-9, oracle::list_colorable(n, el, lists));
  }
}
