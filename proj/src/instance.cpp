#include "locunc/instance.hpp"

#include <algorithm>
#include <set>

#include "locunc/errors.hpp"

namespace locunc {

Graph::Graph(int n, std::vector<Edge> edges, bool allow_isolated) : n_(n), adj_(n) {
  if (n < 0) throw InvalidInstance("negative vertex count");
  std::set<std::pair<int, int>> seen;
  edges_.reserve(edges.size());
  for (auto e : edges) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n) throw InvalidInstance("edge endpoint out of range");
    if (e.u == e.v) throw InvalidInstance("loop at vertex " + std::to_string(e.u));
    if (e.u > e.v) std::swap(e.u, e.v);
    if (!seen.insert({e.u, e.v}).second)
      throw InvalidInstance("duplicate edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "}");
    const EdgeId id = static_cast<EdgeId>(edges_.size());
    edges_.push_back(e);
    adj_[e.u].push_back({e.v, id});
    adj_[e.v].push_back({e.u, id});
  }
  if (!allow_isolated)
    for (int v = 0; v < n; ++v)
      if (adj_[v].empty()) throw InvalidInstance("isolated vertex " + std::to_string(v));
}

std::optional<EdgeId> Graph::find_edge(VertexId a, VertexId b) const {
  if (a < 0 || a >= n_ || b < 0 || b >= n_) return std::nullopt;
  for (auto [w, e] : adj_[a])
    if (w == b) return e;
  return std::nullopt;
}

std::string family_name(const FamilyDescriptor& f) {
  static const char* names[] = {"stpath", "spanning", "steiner", "pmedian", "assignment", "explicit"};
  return names[f.index()];
}

namespace {

void check_vertex(const Graph& g, VertexId v, const char* what) {
  if (v < 0 || v >= g.n()) throw InvalidInstance(std::string(what) + " vertex out of range");
}

void check_family(const Graph& g, const FamilyDescriptor& fam) {
  std::visit(
      [&](const auto& f) {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, STPath>) {
          check_vertex(g, f.s, "source");
          check_vertex(g, f.t, "target");
          if (f.s == f.t) throw InvalidInstance("s and t coincide");
        } else if constexpr (std::is_same_v<T, SteinerTree>) {
          std::set<int> s;
          for (int t : f.terminals) {
            check_vertex(g, t, "terminal");
            if (!s.insert(t).second) throw InvalidInstance("duplicate terminal");
          }
        } else if constexpr (std::is_same_v<T, PMedian>) {
          std::set<int> s;
          for (int v : f.clients) check_vertex(g, v, "client");
          for (int v : f.sites) check_vertex(g, v, "site");
          for (int v : f.clients)
            if (!s.insert(v).second) throw InvalidInstance("clients and sites must be distinct");
          for (int v : f.sites)
            if (!s.insert(v).second) throw InvalidInstance("clients and sites must be distinct");
          if (f.p < 1) throw InvalidInstance("p must be positive");
        } else if constexpr (std::is_same_v<T, Assignment>) {
          if (f.left.size() != f.right.size()) throw InvalidInstance("assignment sides differ in size");
          std::set<int> s;
          for (int v : f.left) check_vertex(g, v, "left");
          for (int v : f.right) check_vertex(g, v, "right");
          for (int v : f.left)
            if (!s.insert(v).second) throw InvalidInstance("assignment sides overlap");
          for (int v : f.right)
            if (!s.insert(v).second) throw InvalidInstance("assignment sides overlap");
        } else if constexpr (std::is_same_v<T, ExplicitList>) {
          for (const auto& F : f.members)
            if (!is_valid_subset(g, F)) throw InvalidInstance("explicit member is not a sorted edge subset");
        }
      },
      fam);
}

}  // namespace

Instance::Instance(Graph graph, MetricSpace space, std::vector<std::vector<PointId>> usets, FamilyDescriptor family)
    : graph_(std::move(graph)), space_(std::move(space)), usets_(std::move(usets)), family_(std::move(family)) {
  if (static_cast<int>(usets_.size()) != graph_.n()) throw InvalidInstance("one uncertainty set per vertex required");
  for (size_t i = 0; i < usets_.size(); ++i) {
    if (usets_[i].empty()) throw InvalidInstance("empty uncertainty set at vertex " + std::to_string(i));
    for (PointId p : usets_[i])
      if (p < 0 || p >= space_.size()) throw InvalidPoint("point id " + std::to_string(p) + " out of range");
    sigma_ = std::max(sigma_, static_cast<int>(usets_[i].size()));
  }
  check_family(graph_, family_);
}

double Instance::dmax(VertexId i, VertexId j) const {
  double best = 0;
  for (PointId a : usets_[i])
    for (PointId b : usets_[j]) best = std::max(best, space_(a, b));
  return best;
}

void Instance::fill_dmax_cache() const {
  std::call_once(cache_->once, [&] {
    cache_->edge_dmax.resize(graph_.m());
    for (EdgeId e = 0; e < graph_.m(); ++e) cache_->edge_dmax[e] = dmax(graph_.edge(e).u, graph_.edge(e).v);
  });
}

double Instance::dmax_edge(EdgeId e) const {
  fill_dmax_cache();
  return cache_->edge_dmax[e];
}

long long Instance::scenario_count(long long cap) const {
  long long c = 1;
  for (const auto& u : usets_) {
    c *= static_cast<long long>(u.size());
    if (c > cap) return cap + 1;
  }
  return c;
}

double cost(const Instance& inst, const Scenario& u, const EdgeSubset& F) {
  double s = 0;
  for (EdgeId e : F) {
    const Edge& ed = inst.graph().edge(e);
    s += inst.space()(inst.location(u, ed.u), inst.location(u, ed.v));
  }
  return s;
}

double cmax(const Instance& inst, const EdgeSubset& F) {
  double s = 0;
  for (EdgeId e : F) s += inst.dmax_edge(e);
  return s;
}

std::vector<double> dmax_weights(const Instance& inst) {
  std::vector<double> w(inst.m());
  for (EdgeId e = 0; e < inst.m(); ++e) w[e] = inst.dmax_edge(e);
  return w;
}

MetricSpace worst_case_metric(const Instance& inst) {
  const int n = inst.n();
  std::vector<double> d(static_cast<size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) d[static_cast<size_t>(i) * n + j] = d[static_cast<size_t>(j) * n + i] = inst.dmax(i, j);
  return MetricSpace::explicit_matrix(n, std::move(d));
}

int barycenter_index(const Instance& inst, VertexId i) {
  const auto& U = inst.uset(i);
  int best = 0;
  double best_sum = 0;
  for (size_t k = 0; k < U.size(); ++k) {
    double s = 0;
    for (PointId q : U) s += inst.space()(U[k], q);
    const bool better = s < best_sum - kTol || (s <= best_sum + kTol && U[k] < U[best]);
    if (k == 0 || better) {
      best = static_cast<int>(k);
      best_sum = s;
    }
  }
  return best;
}

PointId barycenter(const Instance& inst, VertexId i) { return inst.uset(i)[barycenter_index(inst, i)]; }

Scenario barycenter_scenario(const Instance& inst) {
  Scenario u;
  u.choice.resize(inst.n());
  for (int i = 0; i < inst.n(); ++i) u.choice[i] = barycenter_index(inst, i);
  return u;
}

Diameter uset_diameter(const Instance& inst, VertexId i) {
  const auto& U = inst.uset(i);
  Diameter r{0, U[0], U[0]};
  for (size_t a = 0; a < U.size(); ++a)
    for (size_t b = a + 1; b < U.size(); ++b) {
      const double x = inst.space()(U[a], U[b]);
      if (x > r.value) r = {x, U[a], U[b]};
    }
  return r;
}

std::vector<VertexId> touched_vertices(const Graph& g, const EdgeSubset& F) {
  std::vector<char> on(g.n(), 0);
  for (EdgeId e : F) on[g.edge(e).u] = on[g.edge(e).v] = 1;
  std::vector<VertexId> out;
  for (int v = 0; v < g.n(); ++v)
    if (on[v]) out.push_back(v);
  return out;
}

bool is_valid_subset(const Graph& g, const EdgeSubset& F) {
  for (size_t k = 0; k < F.size(); ++k) {
    if (F[k] < 0 || F[k] >= g.m()) return false;
    if (k > 0 && F[k] <= F[k - 1]) return false;
  }
  return true;
}

}  // namespace locunc
