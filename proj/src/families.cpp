#include "locunc/families.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <queue>

#include "locunc/errors.hpp"

namespace locunc {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct RollbackDsu {
  std::vector<int> parent, size;
  std::vector<std::pair<int, int>> history;  // (attached root, old size of new root) per union
  explicit RollbackDsu(int n) : parent(n), size(n, 1) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) const {
    while (parent[x] != x) x = parent[x];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size[a] < size[b]) std::swap(a, b);
    history.push_back({b, size[a]});
    parent[b] = a;
    size[a] += size[b];
    return true;
  }
  void rollback() {
    auto [b, old] = history.back();
    history.pop_back();
    size[parent[b]] = old;
    parent[b] = b;
  }
};

void check_weights(const Graph& g, std::span<const double> w) {
  if (static_cast<int>(w.size()) != g.m()) throw InvalidInstance("one weight per edge required");
  for (double x : w)
    if (!(x >= 0)) throw InvalidInstance("weights must be nonnegative");
}

EdgeSubset sorted(EdgeSubset F) {
  std::sort(F.begin(), F.end());
  return F;
}

void require_edge_cap(const Graph& g, const Caps& caps) {
  if (g.m() > caps.enum_edges)
    throw CapExceeded("enumeration limited to " + std::to_string(caps.enum_edges) + " edges, graph has " +
                      std::to_string(g.m()));
}

struct Collector {
  std::vector<EdgeSubset> out;
  long long cap;
  void add(EdgeSubset F) {
    if (static_cast<long long>(out.size()) >= cap)
      throw CapExceeded("family has more than " + std::to_string(cap) + " members");
    out.push_back(sorted(std::move(F)));
  }
};

void enum_paths(const Graph& g, VertexId v, VertexId t, std::vector<char>& seen, EdgeSubset& path, Collector& c) {
  if (v == t) {
    c.add(path);
    return;
  }
  for (auto [w, e] : g.adj(v)) {
    if (seen[w]) continue;
    seen[w] = 1;
    path.push_back(e);
    enum_paths(g, w, t, seen, path, c);
    path.pop_back();
    seen[w] = 0;
  }
}

void enum_spanning(const Graph& g, int e, RollbackDsu& dsu, EdgeSubset& chosen, Collector& c) {
  const int need = g.n() - 1;
  if (static_cast<int>(chosen.size()) == need) {
    c.add(chosen);
    return;
  }
  if (static_cast<int>(chosen.size()) + (g.m() - e) < need) return;
  if (dsu.unite(g.edge(e).u, g.edge(e).v)) {
    chosen.push_back(e);
    enum_spanning(g, e + 1, dsu, chosen, c);
    chosen.pop_back();
    dsu.rollback();
  }
  enum_spanning(g, e + 1, dsu, chosen, c);
}

bool is_steiner_member(const Graph& g, const EdgeSubset& F, const std::vector<char>& terminal, int n_terminals) {
  // F is acyclic here, so it is a tree iff it touches |F| + 1 vertices
  std::vector<int> deg(g.n(), 0);
  for (EdgeId e : F) {
    ++deg[g.edge(e).u];
    ++deg[g.edge(e).v];
  }
  int touched = 0, covered = 0;
  for (int v = 0; v < g.n(); ++v) {
    if (deg[v] == 0) continue;
    ++touched;
    if (terminal[v]) ++covered;
    else if (deg[v] == 1) return false;
  }
  return touched == static_cast<int>(F.size()) + 1 && covered == n_terminals;
}

void enum_steiner(const Graph& g, int e, RollbackDsu& dsu, EdgeSubset& chosen, const std::vector<char>& terminal,
                  int n_terminals, Collector& c) {
  if (e == g.m()) {
    if (!chosen.empty() && is_steiner_member(g, chosen, terminal, n_terminals)) c.add(chosen);
    return;
  }
  if (dsu.unite(g.edge(e).u, g.edge(e).v)) {
    chosen.push_back(e);
    enum_steiner(g, e + 1, dsu, chosen, terminal, n_terminals, c);
    chosen.pop_back();
    dsu.rollback();
  }
  enum_steiner(g, e + 1, dsu, chosen, terminal, n_terminals, c);
}

void enum_pmedian(const Graph& g, const PMedian& f, size_t k, std::vector<int>& use, int distinct, EdgeSubset& chosen,
                  Collector& c) {
  if (k == f.clients.size()) {
    c.add(chosen);
    return;
  }
  for (size_t j = 0; j < f.sites.size(); ++j) {
    auto e = g.find_edge(f.clients[k], f.sites[j]);
    if (!e) continue;
    const int nd = distinct + (use[j] == 0 ? 1 : 0);
    if (nd > f.p) continue;
    ++use[j];
    chosen.push_back(*e);
    enum_pmedian(g, f, k + 1, use, nd, chosen, c);
    chosen.pop_back();
    --use[j];
  }
}

void enum_assignment(const Graph& g, const Assignment& f, size_t k, std::vector<char>& used, EdgeSubset& chosen,
                     Collector& c) {
  if (k == f.left.size()) {
    c.add(chosen);
    return;
  }
  for (size_t j = 0; j < f.right.size(); ++j) {
    if (used[j]) continue;
    auto e = g.find_edge(f.left[k], f.right[j]);
    if (!e) continue;
    used[j] = 1;
    chosen.push_back(*e);
    enum_assignment(g, f, k + 1, used, chosen, c);
    chosen.pop_back();
    used[j] = 0;
  }
}

long long binomial_capped(long long n, long long k, long long cap) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  long long r = 1;
  for (long long i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > cap) return cap + 1;
  }
  return r;
}

EdgeSubset solve_pmedian(const Graph& g, const PMedian& f, std::span<const double> w, const Caps& caps) {
  const int J = static_cast<int>(f.sites.size());
  if (f.clients.empty()) return {};
  if (J == 0) throw Infeasible("p-median without sites");
  if (J > caps.pmedian_sites) throw CapExceeded("p-median solver limited to " + std::to_string(caps.pmedian_sites) + " sites");
  const int q = std::min(f.p, J);
  if (binomial_capped(J, q, caps.pmedian_subsets) > caps.pmedian_subsets)
    throw CapExceeded("too many facility subsets");
  // cost[k][j] for client k and site j, +inf without an edge
  std::vector<std::vector<std::pair<double, EdgeId>>> cost(f.clients.size());
  for (size_t k = 0; k < f.clients.size(); ++k)
    for (int j = 0; j < J; ++j) {
      auto e = g.find_edge(f.clients[k], f.sites[j]);
      cost[k].push_back(e ? std::pair{w[*e], *e} : std::pair{kInf, -1});
    }
  std::vector<int> comb(q);
  std::iota(comb.begin(), comb.end(), 0);
  double best = kInf;
  EdgeSubset best_F;
  while (true) {
    double total = 0;
    EdgeSubset F;
    for (size_t k = 0; k < f.clients.size() && total < kInf; ++k) {
      std::pair<double, EdgeId> pick{kInf, -1};
      for (int j : comb)
        if (cost[k][j].first < pick.first) pick = cost[k][j];
      total += pick.first;
      F.push_back(pick.second);
    }
    if (total < best) {
      best = total;
      best_F = F;
    }
    int i = q - 1;
    while (i >= 0 && comb[i] == J - q + i) --i;
    if (i < 0) break;
    ++comb[i];
    for (int k = i + 1; k < q; ++k) comb[k] = comb[k - 1] + 1;
  }
  if (best == kInf) throw Infeasible("no feasible client assignment");
  return sorted(best_F);
}

EdgeSubset solve_assignment(const Graph& g, const Assignment& f, std::span<const double> w) {
  const int k = static_cast<int>(f.left.size());
  if (k == 0) return {};
  double big = 1;
  for (double x : w) big += x;
  big *= (k + 1);
  // 1-indexed Hungarian method on a k x k cost matrix
  std::vector<std::vector<double>> a(k + 1, std::vector<double>(k + 1, 0));
  std::vector<std::vector<EdgeId>> id(k + 1, std::vector<EdgeId>(k + 1, -1));
  for (int i = 1; i <= k; ++i)
    for (int j = 1; j <= k; ++j) {
      auto e = g.find_edge(f.left[i - 1], f.right[j - 1]);
      a[i][j] = e ? w[*e] : big;
      id[i][j] = e ? *e : -1;
    }
  std::vector<double> u(k + 1, 0), v(k + 1, 0);
  std::vector<int> p(k + 1, 0), way(k + 1, 0);
  for (int i = 1; i <= k; ++i) {
    p[0] = i;
    int j0 = 0;
    std::vector<double> minv(k + 1, kInf);
    std::vector<char> used(k + 1, 0);
    do {
      used[j0] = 1;
      const int i0 = p[j0];
      double delta = kInf;
      int j1 = 0;
      for (int j = 1; j <= k; ++j) {
        if (used[j]) continue;
        const double cur = a[i0][j] - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (int j = 0; j <= k; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      const int j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0);
  }
  EdgeSubset F;
  for (int j = 1; j <= k; ++j) {
    if (id[p[j]][j] < 0) throw Infeasible("no perfect matching between the two sides");
    F.push_back(id[p[j]][j]);
  }
  return sorted(F);
}

// single-source Dijkstra returning distances and the parent edge of each vertex
void dijkstra(const Graph& g, std::span<const double> w, VertexId s, std::vector<double>& dist,
              std::vector<EdgeId>& parent) {
  dist.assign(g.n(), kInf);
  parent.assign(g.n(), -1);
  using Item = std::pair<double, VertexId>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
  dist[s] = 0;
  pq.push({0, s});
  while (!pq.empty()) {
    auto [d, v] = pq.top();
    pq.pop();
    if (d > dist[v]) continue;
    for (auto [x, e] : g.adj(v)) {
      const double nd = d + w[e];
      if (nd < dist[x]) {
        dist[x] = nd;
        parent[x] = e;
        pq.push({nd, x});
      }
    }
  }
}

}  // namespace

FamilyStats family_stats(const Graph& g, const EdgeSubset& F) {
  FamilyStats st;
  st.edge_count = static_cast<int>(F.size());
  std::vector<int> deg(g.n(), 0);
  RollbackDsu dsu(g.n());
  int merges = 0;
  for (EdgeId e : F) {
    ++deg[g.edge(e).u];
    ++deg[g.edge(e).v];
    if (dsu.unite(g.edge(e).u, g.edge(e).v)) ++merges;
  }
  int all_two = 1;
  int hub = 0;
  for (int v = 0; v < g.n(); ++v) {
    if (deg[v] == 0) continue;
    ++st.vertex_count;
    st.max_degree = std::max(st.max_degree, deg[v]);
    if (deg[v] != 2) all_two = 0;
    if (deg[v] == st.edge_count) hub = 1;
  }
  const int components = st.vertex_count - merges;
  st.connected = st.vertex_count > 0 && components == 1;
  st.is_forest = merges == st.edge_count;
  st.is_tree = st.is_forest && st.connected;
  st.is_matching = st.max_degree <= 1;
  st.is_path = st.is_tree && st.max_degree <= 2;
  st.is_cycle = st.connected && all_two && st.vertex_count >= 3;
  st.is_star = st.is_tree && hub;
  const long long k = st.vertex_count;
  st.is_clique = k >= 2 && st.edge_count == k * (k - 1) / 2;
  return st;
}

double total_weight(std::span<const double> w, const EdgeSubset& F) {
  double s = 0;
  for (EdgeId e : F) s += w[e];
  return s;
}

EdgeSubset shortest_path(const Graph& g, std::span<const double> w, VertexId s, VertexId t) {
  check_weights(g, w);
  std::vector<double> dist;
  std::vector<EdgeId> parent;
  dijkstra(g, w, s, dist, parent);
  if (dist[t] == kInf) throw Infeasible("t is not reachable from s");
  EdgeSubset F;
  for (VertexId v = t; v != s;) {
    const EdgeId e = parent[v];
    F.push_back(e);
    v = g.edge(e).u == v ? g.edge(e).v : g.edge(e).u;
  }
  return sorted(F);
}

EdgeSubset minimum_spanning_tree(const Graph& g, std::span<const double> w) {
  check_weights(g, w);
  std::vector<EdgeId> order(g.m());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](EdgeId a, EdgeId b) { return w[a] < w[b]; });
  RollbackDsu dsu(g.n());
  EdgeSubset F;
  for (EdgeId e : order)
    if (dsu.unite(g.edge(e).u, g.edge(e).v)) F.push_back(e);
  if (g.n() > 0 && static_cast<int>(F.size()) != g.n() - 1) throw Infeasible("graph is disconnected");
  return sorted(F);
}

EdgeSubset steiner_tree(const Graph& g, std::span<const double> w, std::span<const VertexId> terminals,
                        const Caps& caps) {
  check_weights(g, w);
  const int k = static_cast<int>(terminals.size());
  if (k <= 1) return {};
  if (k > caps.steiner_terminals)
    throw CapExceeded("Dreyfus-Wagner limited to " + std::to_string(caps.steiner_terminals) + " terminals");
  const int n = g.n();
  std::vector<std::vector<double>> dist(n);
  std::vector<std::vector<EdgeId>> parent(n);
  for (int v = 0; v < n; ++v) dijkstra(g, w, v, dist[v], parent[v]);
  for (int i = 1; i < k; ++i)
    if (dist[terminals[0]][terminals[i]] == kInf) throw Infeasible("terminals are not connected");

  const int kk = k - 1;
  const VertexId root = terminals[kk];
  const int full = (1 << kk) - 1;
  std::vector<std::vector<double>> dp(full + 1, std::vector<double>(n, kInf));
  std::vector<std::vector<int>> via(full + 1, std::vector<int>(n, -1));
  std::vector<std::vector<int>> split(full + 1, std::vector<int>(n, 0));
  for (int i = 0; i < kk; ++i)
    for (int v = 0; v < n; ++v) {
      dp[1 << i][v] = dist[terminals[i]][v];
      via[1 << i][v] = terminals[i];
    }
  std::vector<double> gbest(n);
  for (int S = 1; S <= full; ++S) {
    if ((S & (S - 1)) == 0) continue;
    const int low = S & -S;
    for (int u = 0; u < n; ++u) {
      gbest[u] = kInf;
      for (int T = (S - 1) & S; T > 0; T = (T - 1) & S) {
        if (!(T & low)) continue;
        const double c = dp[T][u] + dp[S ^ T][u];
        if (c < gbest[u]) {
          gbest[u] = c;
          split[S][u] = T;
        }
      }
    }
    for (int v = 0; v < n; ++v)
      for (int u = 0; u < n; ++u) {
        const double c = gbest[u] + dist[u][v];
        if (c < dp[S][v]) {
          dp[S][v] = c;
          via[S][v] = u;
        }
      }
  }

  std::vector<char> in(g.m(), 0);
  auto add_path = [&](VertexId from, VertexId to) {
    for (VertexId v = to; v != from;) {
      const EdgeId e = parent[from][v];
      in[e] = 1;
      v = g.edge(e).u == v ? g.edge(e).v : g.edge(e).u;
    }
  };
  std::vector<std::pair<int, VertexId>> stack{{full, root}};
  while (!stack.empty()) {
    auto [S, v] = stack.back();
    stack.pop_back();
    const VertexId u = via[S][v];
    add_path(u, v);
    if ((S & (S - 1)) == 0) continue;
    stack.push_back({split[S][u], u});
    stack.push_back({S ^ split[S][u], u});
  }

  // the union of shortest paths may close cycles; keep a spanning forest of it, then trim non-terminal leaves
  std::vector<EdgeId> order;
  for (EdgeId e = 0; e < g.m(); ++e)
    if (in[e]) order.push_back(e);
  std::stable_sort(order.begin(), order.end(), [&](EdgeId a, EdgeId b) { return w[a] < w[b]; });
  RollbackDsu dsu(n);
  std::vector<char> keep(g.m(), 0);
  std::vector<int> deg(n, 0);
  for (EdgeId e : order)
    if (dsu.unite(g.edge(e).u, g.edge(e).v)) {
      keep[e] = 1;
      ++deg[g.edge(e).u];
      ++deg[g.edge(e).v];
    }
  std::vector<char> is_terminal(n, 0);
  for (VertexId t : terminals) is_terminal[t] = 1;
  for (bool changed = true; changed;) {
    changed = false;
    for (EdgeId e = 0; e < g.m(); ++e) {
      if (!keep[e]) continue;
      const auto [a, b] = g.edge(e);
      if ((deg[a] == 1 && !is_terminal[a]) || (deg[b] == 1 && !is_terminal[b])) {
        keep[e] = 0;
        --deg[a];
        --deg[b];
        changed = true;
      }
    }
  }
  EdgeSubset F;
  for (EdgeId e = 0; e < g.m(); ++e)
    if (keep[e]) F.push_back(e);
  return F;
}

EdgeSubset solve_deterministic(const FamilyDescriptor& fam, const Graph& g, std::span<const double> w,
                               const Caps& caps) {
  check_weights(g, w);
  return std::visit(
      [&](const auto& f) -> EdgeSubset {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, STPath>) {
          return shortest_path(g, w, f.s, f.t);
        } else if constexpr (std::is_same_v<T, SpanningTree>) {
          return minimum_spanning_tree(g, w);
        } else if constexpr (std::is_same_v<T, SteinerTree>) {
          return steiner_tree(g, w, f.terminals, caps);
        } else if constexpr (std::is_same_v<T, PMedian>) {
          return solve_pmedian(g, f, w, caps);
        } else if constexpr (std::is_same_v<T, Assignment>) {
          return solve_assignment(g, f, w);
        } else {
          if (f.members.empty()) throw Infeasible("empty explicit family");
          const EdgeSubset* best = nullptr;
          double best_w = kInf;
          for (const auto& F : f.members) {
            const double x = total_weight(w, F);
            if (!best || x < best_w) {
              best = &F;
              best_w = x;
            }
          }
          return *best;
        }
      },
      fam);
}

std::vector<EdgeSubset> enumerate_family(const FamilyDescriptor& fam, const Graph& g, const Caps& caps) {
  Collector c{{}, caps.enum_members};
  std::visit(
      [&](const auto& f) {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, STPath>) {
          require_edge_cap(g, caps);
          std::vector<char> seen(g.n(), 0);
          seen[f.s] = 1;
          EdgeSubset path;
          enum_paths(g, f.s, f.t, seen, path, c);
        } else if constexpr (std::is_same_v<T, SpanningTree>) {
          require_edge_cap(g, caps);
          RollbackDsu dsu(g.n());
          EdgeSubset chosen;
          enum_spanning(g, 0, dsu, chosen, c);
        } else if constexpr (std::is_same_v<T, SteinerTree>) {
          require_edge_cap(g, caps);
          if (f.terminals.size() <= 1) {
            c.add({});
          } else {
            std::vector<char> terminal(g.n(), 0);
            for (VertexId t : f.terminals) terminal[t] = 1;
            RollbackDsu dsu(g.n());
            EdgeSubset chosen;
            enum_steiner(g, 0, dsu, chosen, terminal, static_cast<int>(f.terminals.size()), c);
          }
        } else if constexpr (std::is_same_v<T, PMedian>) {
          if (static_cast<int>(f.sites.size()) > caps.enum_sites)
            throw CapExceeded("p-median enumeration limited to " + std::to_string(caps.enum_sites) + " sites");
          std::vector<int> use(f.sites.size(), 0);
          EdgeSubset chosen;
          enum_pmedian(g, f, 0, use, 0, chosen, c);
        } else if constexpr (std::is_same_v<T, Assignment>) {
          std::vector<char> used(f.right.size(), 0);
          EdgeSubset chosen;
          enum_assignment(g, f, 0, used, chosen, c);
        } else {
          for (const auto& F : f.members) c.add(F);
        }
      },
      fam);
  std::sort(c.out.begin(), c.out.end());
  c.out.erase(std::unique(c.out.begin(), c.out.end()), c.out.end());
  return c.out;
}

void for_each_member(const FamilyDescriptor& fam, const Graph& g, const std::function<void(const EdgeSubset&)>& visit,
                     const Caps& caps) {
  for (const auto& F : enumerate_family(fam, g, caps)) visit(F);
}

}  // namespace locunc
