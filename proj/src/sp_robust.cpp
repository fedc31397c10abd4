#include "locunc/sp_robust.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <set>
#include <stdexcept>

#include "locunc/approx.hpp"
#include "locunc/errors.hpp"
#include "locunc/evalc.hpp"
#include "locunc/io.hpp"

namespace locunc {

namespace {

template <class Cost>
struct Entry {
  std::vector<Cost> profile;
  int layer = 0;
  VertexId next = -1;
  int next_idx = -1;
};

double key_of(double x) { return std::nearbyint(x * 1e12) / 1e12; }
std::int64_t key_of(std::int64_t x) { return x; }

template <class Cost>
Cost worst(const std::vector<Cost>& p) {
  return *std::max_element(p.begin(), p.end());
}

template <class Cost>
struct DpOutcome {
  std::vector<VertexId> walk;
  std::vector<Cost> profile;
  ProfileStats stats;
};

// dist(i, k, j, l): cost of edge {i, j} with i at its k-th and j at its l-th location
template <class Cost, class Dist>
DpOutcome<Cost> profile_dp(const Instance& inst, VertexId s, VertexId t, Dist dist, const Cost* limit,
                           const Caps& caps) {
  const Graph& g = inst.graph();
  const int n = g.n();
  std::vector<std::vector<Entry<Cost>>> cell(n);
  std::vector<std::map<std::vector<Cost>, int>> seen(n);
  ProfileStats st;

  auto insert = [&](VertexId i, Entry<Cost> e) {
    std::vector<Cost> key(e.profile.size());
    for (size_t k = 0; k < key.size(); ++k) key[k] = key_of(e.profile[k]);
    if (!seen[i].emplace(std::move(key), static_cast<int>(cell[i].size())).second) return false;
    cell[i].push_back(std::move(e));
    if (++st.n_profiles > caps.sp_profiles) throw CapExceeded("profile table exceeds " + std::to_string(caps.sp_profiles));
    return true;
  };

  insert(t, {std::vector<Cost>(inst.uset(t).size(), Cost{}), 0, -1, -1});
  for (int kappa = 1; kappa <= n - 1; ++kappa) {
    bool grew = false;
    for (VertexId i = 0; i < n; ++i) {
      if (i == t) continue;
      const int si = static_cast<int>(inst.uset(i).size());
      for (auto [j, e] : g.adj(i)) {
        (void)e;
        const int sj = static_cast<int>(inst.uset(j).size());
        for (size_t q = 0; q < cell[j].size(); ++q) {
          if (cell[j][q].layer != kappa - 1) continue;
          Entry<Cost> ne{std::vector<Cost>(si), kappa, j, static_cast<int>(q)};
          bool keep = true;
          for (int l = 0; l < si && keep; ++l) {
            Cost best{};
            for (int lp = 0; lp < sj; ++lp) best = std::max(best, dist(i, l, j, lp) + cell[j][q].profile[lp]);
            ne.profile[l] = best;
            if (limit && best > *limit) keep = false;
          }
          if (!keep) {
            ++st.pruned;
            continue;
          }
          if (insert(i, std::move(ne))) {
            grew = true;
            st.hops = kappa;
          }
        }
      }
    }
    if (!grew) break;
  }
  if (cell[s].empty()) throw Infeasible("no s-t path");

  std::set<Cost> values;
  for (const auto& c : cell)
    for (const auto& e : c) {
      for (Cost x : e.profile) values.insert(key_of(x));
      st.table_bytes += static_cast<long long>(sizeof(Entry<Cost>) + e.profile.size() * sizeof(Cost));
    }
  st.n_values = static_cast<long long>(values.size());

  size_t best = 0;
  for (size_t q = 1; q < cell[s].size(); ++q)
    if (worst(cell[s][q].profile) < worst(cell[s][best].profile)) best = q;
  DpOutcome<Cost> out;
  out.profile = cell[s][best].profile;
  out.stats = st;
  for (VertexId v = s, q = static_cast<int>(best); v >= 0;) {
    out.walk.push_back(v);
    const auto& e = cell[v][q];
    v = e.next;
    q = e.next_idx;
  }
  return out;
}

std::vector<VertexId> excise_cycles(const std::vector<VertexId>& walk, int n) {
  std::vector<int> pos(n, -1);
  std::vector<VertexId> out;
  for (VertexId v : walk) {
    if (pos[v] >= 0) {
      while (static_cast<int>(out.size()) > pos[v] + 1) {
        pos[out.back()] = -1;
        out.pop_back();
      }
      continue;
    }
    pos[v] = static_cast<int>(out.size());
    out.push_back(v);
  }
  return out;
}

// profile of a simple path v0 .. vk under dist, computed from the t end
template <class Cost, class Dist>
std::vector<Cost> path_profile(const Instance& inst, const std::vector<VertexId>& path, Dist dist) {
  std::vector<Cost> p(inst.uset(path.back()).size(), Cost{});
  for (size_t k = path.size() - 1; k-- > 0;) {
    const VertexId i = path[k], j = path[k + 1];
    std::vector<Cost> q(inst.uset(i).size());
    for (size_t l = 0; l < q.size(); ++l) {
      Cost best{};
      for (size_t lp = 0; lp < p.size(); ++lp)
        best = std::max(best, dist(i, static_cast<int>(l), j, static_cast<int>(lp)) + p[lp]);
      q[l] = best;
    }
    p = std::move(q);
  }
  return p;
}

template <class Cost, class Dist>
void finish_path(const Instance& inst, const DpOutcome<Cost>& dp, Dist dist, Cost slack, SpResult& r) {
  r.vertices = excise_cycles(dp.walk, inst.n());
  const auto simple = path_profile<Cost>(inst, r.vertices, dist);
  for (size_t l = 0; l < simple.size(); ++l)
    if (simple[l] > dp.profile[l] + slack) throw std::logic_error("cycle excision increased a profile component");
  for (size_t k = 0; k + 1 < r.vertices.size(); ++k) r.path.push_back(*inst.graph().find_edge(r.vertices[k], r.vertices[k + 1]));
  std::sort(r.path.begin(), r.path.end());
  r.value = eval_c_tree(inst, r.path).value;
  r.stats = dp.stats;
}

std::vector<VertexId> path_vertices(const Graph& g, const EdgeSubset& P, VertexId s, VertexId t) {
  std::vector<std::vector<VertexId>> adj(g.n());
  for (EdgeId e : P) {
    adj[g.edge(e).u].push_back(g.edge(e).v);
    adj[g.edge(e).v].push_back(g.edge(e).u);
  }
  std::vector<VertexId> out{s};
  for (VertexId v = s, prev = -1; v != t;) {
    VertexId nx = adj[v][0] == prev && adj[v].size() > 1 ? adj[v][1] : adj[v][0];
    prev = v;
    v = nx;
    out.push_back(v);
  }
  return out;
}

const STPath& st_family(const Instance& inst) {
  const auto* f = std::get_if<STPath>(&inst.family());
  if (!f) throw InvalidInstance("robust shortest path needs an s-t path family");
  return *f;
}

}  // namespace

std::int64_t round_up_units(double d, double unit) {
  const double q = d / unit;
  if (q >= 4e18) return std::numeric_limits<std::int64_t>::max() / 4;
  auto c = static_cast<std::int64_t>(std::ceil(q));
  while (static_cast<double>(c) * unit < d) ++c;
  return c;
}

SpResult robust_sp_exact(const Instance& inst, const Caps& caps) {
  const auto& f = st_family(inst);
  auto dist = [&](VertexId i, int k, VertexId j, int l) { return inst.d(i, k, j, l); };
  const auto dp = profile_dp<double>(inst, f.s, f.t, dist, nullptr, caps);
  SpResult r;
  r.dp_value = worst(dp.profile);
  finish_path(inst, dp, dist, kTol, r);
  return r;
}

FptasResult robust_sp_fptas(const Instance& inst, double eps, const Caps& caps) {
  if (!(eps > 0)) throw InvalidScale("epsilon must be positive");
  const auto& f = st_family(inst);
  FptasResult r;
  const EdgeSubset pa = heuristic_dmax(inst, caps);
  r.bound_a = eval_c(inst, pa, caps).value;
  const int n = inst.n();
  r.eps_prime = eps / (2.0 * n);
  if (r.bound_a <= 0) {
    // zero-cost path: already optimal
    r.path = pa;
    r.vertices = path_vertices(inst.graph(), pa, f.s, f.t);
    r.value = r.dp_value = 0;
    return r;
  }
  r.unit = r.eps_prime * r.bound_a;
  r.threshold = static_cast<long long>(std::floor(2.0 * n / eps + n + 1e-9));
  const std::int64_t cap = r.threshold + 1;
  auto dist = [&](VertexId i, int k, VertexId j, int l) -> std::int64_t {
    return std::min<std::int64_t>(round_up_units(inst.d(i, k, j, l), r.unit), cap);
  };
  const std::int64_t limit = r.threshold;
  const auto dp = profile_dp<std::int64_t>(inst, f.s, f.t, dist, &limit, caps);
  r.dp_value = static_cast<double>(worst(dp.profile)) * r.unit;
  finish_path(inst, dp, dist, std::int64_t{0}, r);
  return r;
}

void write_sp_stats_csv_header(std::ostream& out) {
  out << "algorithm,epsilon,n_profiles,n_values,table_bytes,hops,pruned,value\n";
}

void write_sp_stats_csv_row(std::ostream& out, const std::string& algo, double eps, const SpResult& r) {
  out << algo << ',' << format_double(eps) << ',' << r.stats.n_profiles << ',' << r.stats.n_values << ','
      << r.stats.table_bytes << ',' << r.stats.hops << ',' << r.stats.pruned << ',' << format_double(r.value) << '\n';
}

}  // namespace locunc
