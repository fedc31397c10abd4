#include <gtest/gtest.h>

#include "locunc/errors.hpp"
#include "locunc/families.hpp"
#include "locunc/generators.hpp"
#include "support/oracles.hpp"

using namespace locunc;

namespace {

oracle::EdgeList edge_list(const Graph& g) {
  oracle::EdgeList el;
  for (const auto& e : g.edges()) el.push_back({e.u, e.v});
  return el;
}

double weight_of(const std::vector<double>& w, const EdgeSubset& F) {
  double s = 0;
  for (int e : F) s += w[e];
  return s;
}

std::vector<double> random_weights(std::mt19937_64& rng, int m) {
  std::vector<double> w(m);
  for (double& x : w) x = std::uniform_int_distribution<int>(0, 12)(rng) / 2.0;
  return w;
}

}  // namespace

TEST(Families, PathOnPathGraph) {
  Graph g(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
  std::vector<double> w(4, 1.0);
  auto F = solve_deterministic(STPath{0, 4}, g, w);
  EXPECT_EQ(F, (EdgeSubset{0, 1, 2, 3}));
  EXPECT_DOUBLE_EQ(weight_of(w, F), 4.0);
}

TEST(Families, SpanningTreeOnTriangle) {
  Graph g(3, {{0, 1}, {1, 2}, {0, 2}});
  std::vector<double> w = {1, 2, 3};
  EXPECT_EQ(solve_deterministic(SpanningTree{}, g, w), (EdgeSubset{0, 1}));
}

TEST(Families, EnumerationCounts) {
  Graph tri(3, {{0, 1}, {1, 2}, {0, 2}});
  EXPECT_EQ(enumerate_family(STPath{0, 2}, tri).size(), 2u);
  std::vector<Edge> k4;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) k4.push_back({i, j});
  EXPECT_EQ(enumerate_family(SpanningTree{}, Graph(4, k4)).size(), 16u);
}

TEST(Families, EnumerationMatchesOracles) {
  std::mt19937_64 rng(21);
  for (int rep = 0; rep < 25; ++rep) {
    const int n = 4 + rep % 4;
    auto el = oracle::random_connected(rng, n, 3);
    Graph g = oracle::to_graph(n, el);
    auto paths = enumerate_family(STPath{0, n - 1}, g);
    EXPECT_EQ(paths, oracle::st_paths(n, el, 0, n - 1));
    std::vector<int> all(n);
    std::iota(all.begin(), all.end(), 0);
    EXPECT_EQ(enumerate_family(SpanningTree{}, g), oracle::trees_covering(n, el, all));
    EXPECT_TRUE(std::is_sorted(paths.begin(), paths.end()));
  }
}

TEST(Families, FormatSteinerEnumeration) {
  Instance I = gen_format(1, 0.0, 1, 1);
  const auto& term = std::get<SteinerTree>(I.family()).terminals;
  auto el = edge_list(I.graph());
  auto members = enumerate_family(I.family(), I.graph());
  // every member is a tree spanning the terminals whose leaves are terminals
  std::set<EdgeSubset> oracle_trees;
  for (const auto& F : oracle::trees_covering(I.n(), el, term)) {
    std::vector<int> deg(I.n(), 0);
    for (int e : F) ++deg[el[e].first], ++deg[el[e].second];
    bool leaves_ok = true;
    for (int v = 0; v < I.n(); ++v)
      if (deg[v] == 1 && std::find(term.begin(), term.end(), v) == term.end()) leaves_ok = false;
    if (leaves_ok) oracle_trees.insert(F);
  }
  EXPECT_EQ(std::set<EdgeSubset>(members.begin(), members.end()), oracle_trees);
  EXPECT_EQ(members.size(), oracle_trees.size());
}

TEST(Families, SolversMatchEnumeration) {
  std::mt19937_64 rng(22);
  for (int rep = 0; rep < 40; ++rep) {
    const int n = 5 + rep % 3;
    auto el = oracle::random_connected(rng, n, 4);
    Graph g = oracle::to_graph(n, el);
    auto w = random_weights(rng, g.m());
    std::vector<FamilyDescriptor> fams = {STPath{0, n - 1}, SpanningTree{}, SteinerTree{{0, 2, n - 1}}};
    for (const auto& f : fams) {
      double best = 1e300;
      for (const auto& F : enumerate_family(f, g)) best = std::min(best, weight_of(w, F));
      EXPECT_NEAR(weight_of(w, solve_deterministic(f, g, w)), best, 1e-9) << family_name(f);
    }
  }
}

TEST(Families, SteinerOnFormatMatchesTreeEnumeration) {
  std::mt19937_64 rng(23);
  for (int rep = 0; rep < 10; ++rep) {
    Instance I = gen_format(1, 1.0, 3, rep);
    auto w = dmax_weights(I);
    auto el = edge_list(I.graph());
    double best = 1e300;
    for (const auto& F : oracle::trees_covering(I.n(), el, std::get<SteinerTree>(I.family()).terminals))
      best = std::min(best, weight_of(w, F));
    EXPECT_NEAR(weight_of(w, solve_deterministic(I.family(), I.graph(), w)), best, 1e-9);
  }
}

TEST(Families, PMedianAndAssignment) {
  std::mt19937_64 rng(24);
  for (int rep = 0; rep < 20; ++rep) {
    const int nc = 3, ns = 3;
    std::vector<Edge> e;
    oracle::EdgeList el;
    for (int c = 0; c < nc; ++c)
      for (int s = 0; s < ns; ++s) {
        e.push_back({c, nc + s});
        el.push_back({c, nc + s});
      }
    Graph g(nc + ns, e);
    auto w = random_weights(rng, g.m());
    const int p = 1 + rep % 2;
    PMedian pm{{0, 1, 2}, {3, 4, 5}, p};
    auto members = enumerate_family(pm, g);
    EXPECT_EQ(members, oracle::pmedian_members(el, pm.clients, pm.sites, p));
    double best = 1e300;
    for (const auto& F : members) best = std::min(best, weight_of(w, F));
    EXPECT_NEAR(weight_of(w, solve_deterministic(pm, g, w)), best, 1e-9);

    Assignment as{{0, 1, 2}, {3, 4, 5}};
    auto perms = enumerate_family(as, g);
    EXPECT_EQ(perms.size(), 6u);
    best = 1e300;
    for (const auto& F : perms) best = std::min(best, weight_of(w, F));
    EXPECT_NEAR(weight_of(w, solve_deterministic(as, g, w)), best, 1e-9);
  }
}

TEST(Families, Errors) {
  Graph g(4, {{0, 1}, {2, 3}});
  std::vector<double> w(2, 1.0);
  EXPECT_THROW(solve_deterministic(STPath{0, 3}, g, w), Infeasible);
  EXPECT_THROW(solve_deterministic(SpanningTree{}, g, w), Infeasible);
  std::vector<Edge> big;
  for (int i = 0; i < 8; ++i)
    for (int j = i + 1; j < 8; ++j) big.push_back({i, j});
  Caps caps;
  caps.enum_edges = 10;
  EXPECT_THROW(enumerate_family(SpanningTree{}, Graph(8, big), caps), CapExceeded);
}

TEST(Families, Stats) {
  Graph g(4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}});
  auto one = family_stats(g, {0});
  EXPECT_TRUE(one.is_matching && one.is_path && one.is_tree && one.is_star);
  auto tri = family_stats(g, {0, 1, 2});
  EXPECT_TRUE(tri.is_cycle && tri.is_clique);
  EXPECT_FALSE(tri.is_tree);
  auto paw = family_stats(g, {0, 1, 2, 3});
  EXPECT_EQ(paw.max_degree, 3);
  EXPECT_FALSE(paw.is_cycle || paw.is_path || paw.is_clique);

  std::mt19937_64 rng(25);
  for (int rep = 0; rep < 60; ++rep) {
    const int n = 6;
    auto el = oracle::random_connected(rng, n, 5);
    Graph h = oracle::to_graph(n, el);
    auto F = oracle::random_subset(rng, h.m());
    std::vector<int> deg(n, 0);
    for (int e : F) ++deg[el[e].first], ++deg[el[e].second];
    int vc = 0, maxd = 0, ones = 0, twos = 0;
    for (int d : deg) {
      vc += d > 0;
      maxd = std::max(maxd, d);
      ones += d == 1;
      twos += d == 2;
    }
    std::vector<int> touched;
    for (int v = 0; v < n; ++v)
      if (deg[v] > 0) touched.push_back(v);
    const bool tree = oracle::is_tree_covering(n, el, F, touched);
    auto st = family_stats(h, F);
    EXPECT_EQ(st.max_degree, maxd);
    EXPECT_EQ(st.vertex_count, vc);
    EXPECT_EQ(st.is_tree, tree);
    EXPECT_EQ(st.is_matching, maxd <= 1);
    EXPECT_EQ(st.is_path, tree && maxd <= 2);
    EXPECT_EQ(st.is_star, tree && (ones >= vc - 1));
    std::vector<int> comp(n);
    std::iota(comp.begin(), comp.end(), 0);
    for (int round = 0; round < n; ++round)
      for (int e : F) {
        const int c = std::min(comp[el[e].first], comp[el[e].second]);
        comp[el[e].first] = comp[el[e].second] = c;
      }
    std::set<int> comps;
    for (int v : touched) comps.insert(comp[v]);
    const bool connected = comps.size() == 1;
    EXPECT_EQ(st.connected, connected);
    EXPECT_EQ(st.is_cycle, connected && twos == vc && vc >= 3);
    EXPECT_EQ(st.is_clique, static_cast<int>(F.size()) == vc * (vc - 1) / 2);
  }
}
