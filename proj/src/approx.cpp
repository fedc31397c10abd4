#include "locunc/approx.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "locunc/errors.hpp"
#include "locunc/evalc.hpp"

namespace locunc {

std::string structure_name(Structure s) {
  switch (s) {
    case Structure::General: return "general";
    case Structure::Path: return "path";
    case Structure::Cycle: return "cycle";
    case Structure::TriangleCycle: return "triangle";
    case Structure::Clique: return "clique";
    case Structure::Star: return "star";
    case Structure::Tree: return "tree";
    case Structure::MaxDegree: return "max-degree";
    case Structure::Matching: return "matching";
  }
  return "general";
}

EdgeSubset heuristic_center(const Instance& inst, const Caps& caps) {
  std::vector<double> w(inst.m());
  for (EdgeId e = 0; e < inst.m(); ++e) {
    const Edge& ed = inst.graph().edge(e);
    w[e] = inst.space()(barycenter(inst, ed.u), barycenter(inst, ed.v));
  }
  return solve_deterministic(inst.family(), inst.graph(), w, caps);
}

EdgeSubset heuristic_dmax(const Instance& inst, const Caps& caps) {
  return solve_deterministic(inst.family(), inst.graph(), dmax_weights(inst), caps);
}

RatioBound applicable_bound(const FamilyStats& st, bool ptolemaic) {
  const Hypothesis any = Hypothesis::AnyMetric, pto = Hypothesis::Ptolemaic;
  std::vector<RatioBound> cands;
  if (st.is_matching) cands.push_back({1, any, Structure::Matching});
  if (st.is_cycle && st.vertex_count == 3) cands.push_back({1.5, any, Structure::TriangleCycle});
  if (st.is_path) cands.push_back({2, any, Structure::Path});
  if (st.is_cycle) cands.push_back({2, any, Structure::Cycle});
  if (st.is_clique) cands.push_back({2, any, Structure::Clique});
  if (st.is_star) cands.push_back(ptolemaic ? RatioBound{2, pto, Structure::Star} : RatioBound{3, any, Structure::Star});
  if (st.is_tree) cands.push_back(ptolemaic ? RatioBound{4, pto, Structure::Tree} : RatioBound{6, any, Structure::Tree});
  if (st.max_degree >= 1) cands.push_back({static_cast<double>(st.max_degree), any, Structure::MaxDegree});
  cands.push_back(ptolemaic ? RatioBound{4, pto, Structure::General} : RatioBound{9, any, Structure::General});
  RatioBound best = cands.front();
  for (const auto& b : cands)
    if (b.value < best.value) best = b;
  return best;
}

bool instance_is_ptolemaic(const Instance& inst) {
  if (inst.space().kind() == MetricSpace::Kind::Euclidean) return true;
  std::set<PointId> pts;
  for (const auto& U : inst.usets()) pts.insert(U.begin(), U.end());
  std::vector<PointId> v(pts.begin(), pts.end());
  return is_ptolemaic(inst.space(), v);
}

Certification certify_ratio(const Instance& inst, const EdgeSubset& F, bool ptolemaic, const Caps& caps) {
  Certification c;
  c.cmax = cmax(inst, F);
  c.c = eval_c(inst, F, caps).value;
  c.observed = c.c > kTol ? c.cmax / c.c : 1.0;
  c.bound = applicable_bound(family_stats(inst.graph(), F), ptolemaic);
  c.ok = c.observed <= c.bound.value + kTol;
  return c;
}

Certification certify_ratio(const Instance& inst, const EdgeSubset& F, const Caps& caps) {
  return certify_ratio(inst, F, instance_is_ptolemaic(inst), caps);
}

namespace {

EdgeSubset all_edges(const Graph& g) {
  EdgeSubset F(g.m());
  for (int e = 0; e < g.m(); ++e) F[e] = e;
  return F;
}

// points 0 and 1 on the real line
MetricSpace unit_segment() { return MetricSpace::euclidean(1, {0.0, 1.0}); }

}  // namespace

TightInstance gen_tight_path(int n) {
  if (n < 3) throw InvalidSize("tight path needs n >= 3");
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  std::vector<std::vector<PointId>> U(n, {1});
  U[0] = {0};
  U[1] = {0, 1};
  Graph g(n, edges);
  EdgeSubset F = all_edges(g);
  return {Instance(std::move(g), unit_segment(), std::move(U), STPath{0, n - 1}), F};
}

TightInstance gen_tight_cycle(int n) {
  if (n < 4) throw InvalidSize("tight cycle needs n >= 4");
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  edges.push_back({0, n - 1});
  std::vector<std::vector<PointId>> U(n, {0});
  U[1] = {0, 1};
  U[2] = {1};
  U[3] = {0, 1};
  Graph g(n, edges);
  EdgeSubset F = all_edges(g);
  return {Instance(std::move(g), unit_segment(), std::move(U), ExplicitList{{F}}), F};
}

TightInstance gen_tight_triangle() {
  Graph g(3, {{0, 1}, {1, 2}, {0, 2}});
  EdgeSubset F = all_edges(g);
  return {Instance(std::move(g), unit_segment(), {{0}, {0, 1}, {1}}, ExplicitList{{F}}), F};
}

TightInstance gen_tight_clique(int k) {
  if (k < 3) throw InvalidSize("tight clique needs k >= 3");
  std::vector<Edge> edges;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) edges.push_back({i, j});
  Graph g(k, edges);
  EdgeSubset F = all_edges(g);
  return {Instance(std::move(g), unit_segment(), std::vector<std::vector<PointId>>(k, {0, 1}), ExplicitList{{F}}), F};
}

TightInstance gen_tight_star(int n) {
  if (n < 3) throw InvalidSize("tight star needs n >= 3");
  // leaves 1..n-1; hub candidates h_i = i - 1 and leaf points l_i = n - 2 + i
  const int leaves = n - 1;
  const int np = 2 * leaves;
  auto hub = [](int i) { return i - 1; };
  auto leaf = [&](int i) { return leaves + i - 1; };
  std::vector<double> d(static_cast<size_t>(np) * np, 0.0);
  auto set = [&](int a, int b, double x) { d[static_cast<size_t>(a) * np + b] = d[static_cast<size_t>(b) * np + a] = x; };
  for (int i = 1; i <= leaves; ++i)
    for (int j = 1; j <= leaves; ++j) {
      if (i != j) {
        set(hub(i), hub(j), 2.0 / 3.0);
        set(leaf(i), leaf(j), 2.0 / 3.0);
      }
      set(hub(j), leaf(i), i == j ? 1.0 : 1.0 / 3.0);
    }
  std::vector<Edge> edges;
  std::vector<std::vector<PointId>> U(n);
  for (int i = 1; i <= leaves; ++i) {
    edges.push_back({0, i});
    U[0].push_back(hub(i));
    U[i] = {leaf(i)};
  }
  Graph g(n, edges);
  EdgeSubset F = all_edges(g);
  return {Instance(std::move(g), MetricSpace::explicit_matrix(np, std::move(d)), std::move(U), ExplicitList{{F}}), F};
}

Instance gen_center_counterexample(double eps) {
  if (!(eps > 0)) throw InvalidSize("eps must be positive");
  Graph g(3, {{0, 1}, {1, 2}, {0, 2}});
  auto space = MetricSpace::euclidean(1, {eps, 0.0, -1.0, 1.0});
  return Instance(std::move(g), std::move(space), {{0}, {1}, {2, 1, 3}}, ExplicitList{{{0}, {1}, {2}}});
}

UnionBoundReport union_bound_check(const Instance& inst, const std::vector<EdgeSubset>& parts, const Caps& caps) {
  UnionBoundReport r;
  std::set<EdgeId> all;
  for (const auto& P : parts) {
    all.insert(P.begin(), P.end());
    const double c = eval_c(inst, P, caps).value;
    const double rho = c > kTol ? cmax(inst, P) / c : 1.0;
    r.rho_max = std::max(r.rho_max, rho);
  }
  const EdgeSubset U(all.begin(), all.end());
  r.cmax_union = cmax(inst, U);
  r.c_union = eval_c(inst, U, caps).value;
  const double T = static_cast<double>(parts.size());
  r.general_ok = r.cmax_union <= T * r.rho_max * r.c_union + kTol;
  std::vector<int> owner(inst.n(), -1);
  r.vertex_disjoint = true;
  for (size_t t = 0; t < parts.size(); ++t)
    for (VertexId v : touched_vertices(inst.graph(), parts[t])) {
      if (owner[v] >= 0 && owner[v] != static_cast<int>(t)) r.vertex_disjoint = false;
      owner[v] = static_cast<int>(t);
    }
  r.disjoint_ok = r.cmax_union <= r.rho_max * r.c_union + kTol;
  return r;
}

}  // namespace locunc
