#include "locunc/reductions.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "locunc/errors.hpp"

namespace locunc {

long long PartitionInput::total() const { return std::accumulate(a.begin(), a.end(), 0LL); }

namespace {

void check_input(const PartitionInput& in, long long min_k) {
  if (in.a.empty()) throw InvalidSize("partition input is empty");
  for (long long x : in.a)
    if (x < 1) throw InvalidSize("partition integers must be positive");
  if (in.K < min_k) throw InvalidScale("K must be at least " + std::to_string(min_k));
}

EdgeSubset all_edges(const Graph& g) {
  EdgeSubset F(g.m());
  std::iota(F.begin(), F.end(), 0);
  return F;
}

}  // namespace

long long min_scale_sp(const std::vector<long long>& a) {
  return 2LL * static_cast<long long>(a.size()) * std::accumulate(a.begin(), a.end(), 0LL) + 1;
}

long long min_scale_mst(const std::vector<long long>& a) {
  return (4LL * static_cast<long long>(a.size()) - 1) * std::accumulate(a.begin(), a.end(), 0LL) + 1;
}

Instance gen_partition_sp(const PartitionInput& in) {
  check_input(in, min_scale_sp(in.a));
  const int n = in.n();
  const double K = static_cast<double>(in.K);
  const double An = static_cast<double>(in.total()) / n;
  const int s = 0, t = 2 * n + 1;
  auto v = [](int i) { return i; };
  auto w = [n](int i) { return n + i; };

  std::vector<Edge> edges{{s, v(1)}, {s, w(1)}};
  for (int i = 1; i < n; ++i) {
    edges.push_back({v(i), v(i + 1)});
    edges.push_back({v(i), w(i + 1)});
    edges.push_back({w(i), v(i + 1)});
    edges.push_back({w(i), w(i + 1)});
  }
  edges.push_back({v(n), t});
  edges.push_back({w(n), t});

  // point 0 is the origin; vertex x gets points (-u^-_x, u^+_x)
  std::vector<double> coords{0.0};
  std::vector<std::vector<PointId>> U(2 * n + 2);
  U[s] = U[t] = {0};
  auto place = [&](int x, double up, double down) {
    U[x] = {static_cast<PointId>(coords.size()), static_cast<PointId>(coords.size() + 1)};
    coords.push_back(-down);
    coords.push_back(up);
  };
  for (int i = 1; i <= n; ++i) {
    const double ai = static_cast<double>(in.a[i - 1]);
    if (i % 2 == 1) {
      place(v(i), K + ai, K + An - ai);
      place(w(i), K, K + An);
    } else {
      place(v(i), K + An - ai, K + ai);
      place(w(i), K + An, K);
    }
  }
  return Instance(Graph(2 * n + 2, edges), MetricSpace::euclidean(1, std::move(coords)), std::move(U), STPath{s, t});
}

EdgeSubset partition_sp_path(const Instance& inst, int n, unsigned mask) {
  auto at = [&](int i) { return (mask >> (i - 1)) & 1u ? i : n + i; };
  EdgeSubset F{*inst.graph().find_edge(0, at(1))};
  for (int i = 1; i < n; ++i) F.push_back(*inst.graph().find_edge(at(i), at(i + 1)));
  F.push_back(*inst.graph().find_edge(at(n), 2 * n + 1));
  std::sort(F.begin(), F.end());
  return F;
}

Instance gen_partition_mst(const PartitionInput& in) {
  check_input(in, min_scale_mst(in.a));
  const int n = in.n();
  const double K = static_cast<double>(in.K);
  const double An = static_cast<double>(in.total()) / n;
  const int L = n + 1;
  // points: v^1_i = i, w^1_i = L + i, v^2_i = 2L + i, w^2_i = 3L + i
  auto v1 = [](int i) { return i; };
  auto w1 = [L](int i) { return L + i; };
  auto v2 = [L](int i) { return 2 * L + i; };
  auto w2 = [L](int i) { return 3 * L + i; };
  std::vector<WeightedEdge> gm;
  for (int i = 0; i <= n; ++i) {
    gm.push_back({v1(i), w1(i), K});
    gm.push_back({v2(i), w2(i), K});
    gm.push_back({w1(i), v2(i), K});
    gm.push_back({v1(i), w2(i), K});
  }
  for (int i = 1; i <= n; ++i) {
    const double ai = static_cast<double>(in.a[i - 1]);
    gm.push_back({v1(i - 1), v2(i), 2 * K});
    gm.push_back({v2(i - 1), v1(i), 2 * K});
    gm.push_back({w1(i - 1), w2(i), 2 * K});
    gm.push_back({w2(i - 1), w1(i), 2 * K});
    gm.push_back({v1(i - 1), v1(i), 3 * K + ai});
    gm.push_back({v2(i - 1), v2(i), 3 * K + An - ai});
    gm.push_back({w1(i - 1), w1(i), 3 * K});
    gm.push_back({w2(i - 1), w2(i), 3 * K + An});
  }
  const int np = 4 * L;
  MetricSpace closed = MetricSpace::graph_induced(np, std::move(gm));
  MetricSpace frozen = MetricSpace::explicit_matrix(np, closed.to_matrix());

  std::vector<Edge> edges;
  std::vector<std::vector<PointId>> U(2 * L);
  for (int i = 0; i <= n; ++i) {
    edges.push_back({i, L + i});
    U[i] = {v1(i), v2(i)};
    U[L + i] = {w1(i), w2(i)};
  }
  for (int i = 1; i <= n; ++i) {
    edges.push_back({i - 1, i});
    edges.push_back({L + i - 1, L + i});
  }
  return Instance(Graph(2 * L, edges), std::move(frozen), std::move(U), SpanningTree{});
}

EdgeSubset partition_mst_tree(const Instance& inst, int n, unsigned mask) {
  const int L = n + 1;
  EdgeSubset F;
  for (int i = 0; i <= n; ++i) F.push_back(*inst.graph().find_edge(i, L + i));
  for (int i = 1; i <= n; ++i)
    F.push_back((mask >> (i - 1)) & 1u ? *inst.graph().find_edge(i - 1, i) : *inst.graph().find_edge(L + i - 1, L + i));
  std::sort(F.begin(), F.end());
  return F;
}

Instance gen_maxcut_evalc(const Graph& g) {
  Graph copy(g.n(), g.edges(), true);
  return Instance(std::move(copy), MetricSpace::euclidean(1, {0.0, 1.0}), std::vector<std::vector<PointId>>(g.n(), {0, 1}),
                  ExplicitList{{all_edges(g)}});
}

Instance gen_listcol_evalc(const Graph& g, const std::vector<std::vector<int>>& lists) {
  if (static_cast<int>(lists.size()) != g.n()) throw InvalidInstance("one colour list per vertex required");
  std::map<int, PointId> id;
  for (const auto& L : lists) {
    if (L.empty()) throw InvalidInstance("empty colour list");
    for (int c : L) id.emplace(c, 0);
  }
  PointId next = 0;
  for (auto& [c, p] : id) p = next++;
  const int np = static_cast<int>(id.size());
  std::vector<double> d(static_cast<size_t>(np) * np, 1.0);
  for (int a = 0; a < np; ++a) d[static_cast<size_t>(a) * np + a] = 0.0;
  std::vector<std::vector<PointId>> U(g.n());
  for (int i = 0; i < g.n(); ++i)
    for (int c : lists[i]) U[i].push_back(id.at(c));
  return Instance(Graph(g.n(), g.edges(), true), MetricSpace::explicit_matrix(np, std::move(d)), std::move(U),
                  ExplicitList{{all_edges(g)}});
}

}  // namespace locunc
