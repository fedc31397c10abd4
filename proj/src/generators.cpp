#include "locunc/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "locunc/errors.hpp"
#include "locunc/rng.hpp"

namespace locunc {

namespace {

constexpr Point2 kFormatBase[7] = {{2.75, 0.25}, {5.25, 0.25}, {1.5, 2.5}, {4, 2.5},
                                   {6.5, 2.5},   {2.75, 4.75}, {5.25, 4.75}};
constexpr std::pair<int, int> kFormatEdges[9] = {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {1, 4},
                                                 {2, 5}, {3, 6}, {4, 6}, {5, 6}};
constexpr double kFormatShift = 4.5;

struct FormatGraph {
  std::vector<Point2> pos;
  std::vector<Edge> edges;
  std::vector<VertexId> terminals;
};

FormatGraph build_format(int kappa) {
  if (kappa < 1) throw InvalidSize("kappa must be at least 1");
  FormatGraph fg;
  std::vector<int> map(7);
  for (int k = 0; k < 7; ++k) {
    map[k] = k;
    fg.pos.push_back(kFormatBase[k]);
  }
  for (auto [a, b] : kFormatEdges) fg.edges.push_back({a, b});
  fg.terminals = {0, 4, 5};
  for (int c = 1; c < kappa; ++c) {
    std::vector<int> next(7);
    next[0] = map[5];
    next[1] = map[6];
    for (int k = 2; k < 7; ++k) {
      next[k] = static_cast<int>(fg.pos.size());
      fg.pos.push_back({kFormatBase[k][0], kFormatBase[k][1] + kFormatShift * c});
    }
    for (auto [a, b] : kFormatEdges)
      if (!(a == 0 && b == 1)) fg.edges.push_back({next[a], next[b]});
    fg.terminals.push_back(next[4]);
    fg.terminals.push_back(next[5]);
    map = next;
  }
  std::sort(fg.terminals.begin(), fg.terminals.end());
  return fg;
}

double dist2(const Point2& a, const Point2& b) {
  const double dx = a[0] - b[0], dy = a[1] - b[1];
  return dx * dx + dy * dy;
}

int orient(const Point2& a, const Point2& b, const Point2& c) {
  const double v = (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]);
  return (v > 0) - (v < 0);
}

bool on_segment(const Point2& a, const Point2& b, const Point2& p) {
  return std::min(a[0], b[0]) <= p[0] && p[0] <= std::max(a[0], b[0]) && std::min(a[1], b[1]) <= p[1] &&
         p[1] <= std::max(a[1], b[1]);
}

}  // namespace

std::vector<Point2> format_positions(int kappa) { return build_format(kappa).pos; }

Instance gen_format(int kappa, double delta, int sigma, std::uint64_t seed) {
  if (sigma < 1) throw InvalidSize("sigma must be at least 1");
  if (!(delta >= 0) || !std::isfinite(delta)) throw InvalidScale("delta must be a finite nonnegative number");
  FormatGraph fg = build_format(kappa);
  const int n = static_cast<int>(fg.pos.size());
  double dbar = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) dbar += std::sqrt(dist2(fg.pos[i], fg.pos[j]));
  dbar /= n * (n - 1) / 2.0;

  Rng rng = Rng::stream(seed, 0);
  std::vector<std::vector<double>> pts;
  std::vector<std::vector<PointId>> usets(n);
  for (int i = 0; i < n; ++i) {
    const double rho = rng.uniform() * delta * dbar;
    if (rho == 0) {
      usets[i].push_back(static_cast<PointId>(pts.size()));
      pts.push_back({fg.pos[i][0], fg.pos[i][1]});
      continue;
    }
    for (int k = 1; k <= sigma; ++k) {
      const double a = 2 * k * std::numbers::pi / sigma;
      usets[i].push_back(static_cast<PointId>(pts.size()));
      pts.push_back({fg.pos[i][0] + rho * std::cos(a), fg.pos[i][1] + rho * std::sin(a)});
    }
  }
  return Instance(Graph(n, fg.edges), MetricSpace::euclidean(pts), std::move(usets), SteinerTree{fg.terminals});
}

bool segments_cross(const Point2& a, const Point2& b, const Point2& c, const Point2& d) {
  // segments pq and ps share p; they overlap only when q and s lie on the same ray from p
  auto shared = [](const Point2& p, const Point2& q, const Point2& s) {
    return orient(p, q, s) == 0 && (q[0] - p[0]) * (s[0] - p[0]) + (q[1] - p[1]) * (s[1] - p[1]) > 0;
  };
  if (a == c) return shared(a, b, d);
  if (a == d) return shared(a, b, c);
  if (b == c) return shared(b, a, d);
  if (b == d) return shared(b, a, c);
  const int o1 = orient(a, b, c), o2 = orient(a, b, d), o3 = orient(c, d, a), o4 = orient(c, d, b);
  if (o1 != o2 && o3 != o4) return true;
  if (o1 == 0 && on_segment(a, b, c)) return true;
  if (o2 == 0 && on_segment(a, b, d)) return true;
  if (o3 == 0 && on_segment(c, d, a)) return true;
  if (o4 == 0 && on_segment(c, d, b)) return true;
  return false;
}

RoadNet gen_planar_roadnet(int n, int m, int n_clients, int n_sites, int p, int sigma, std::uint64_t seed) {
  if (n < 2) throw InvalidSize("need at least two road vertices");
  if (m < n - 1) throw InvalidSize("m must be at least n - 1");
  if (n >= 3 && m > 3 * n - 6) throw InvalidSize("a planar graph has at most 3n - 6 edges");
  if (n == 2 && m > 1) throw InvalidSize("two vertices admit one edge");
  if (n_clients < 1 || n_sites < 1 || n_clients + n_sites > n)
    throw InvalidSize("clients and sites must be nonempty disjoint subsets of the road vertices");
  if (p < 1) throw InvalidSize("p must be at least 1");
  if (sigma < 1 || sigma > n) throw InvalidSize("sigma must lie in [1, n]");

  Rng rng = Rng::stream(seed, 0);
  RoadNet net;
  net.points.resize(n);
  for (auto& pt : net.points) {
    pt[0] = rng.uniform();
    pt[1] = rng.uniform();
  }
  const auto& P = net.points;

  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.push_back({i, j});
  std::vector<std::pair<int, int>> by_len = pairs;
  std::stable_sort(by_len.begin(), by_len.end(), [&](auto x, auto y) {
    return dist2(P[x.first], P[x.second]) < dist2(P[y.first], P[y.second]);
  });
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<std::vector<char>> present(n, std::vector<char>(n, 0));
  for (auto [i, j] : by_len) {
    const int a = find(i), b = find(j);
    if (a == b) continue;
    parent[a] = b;
    net.roads.push_back({i, j});
    present[i][j] = 1;
  }

  auto crosses_any = [&](int i, int j) {
    for (const auto& e : net.roads)
      if (segments_cross(P[i], P[j], P[e.u], P[e.v])) return true;
    return false;
  };
  std::vector<std::pair<int, int>> cand;
  for (auto [i, j] : pairs)
    if (!present[i][j] && !crosses_any(i, j)) cand.push_back({i, j});
  for (int added = n - 1; added < m; ++added) {
    if (cand.empty()) throw InvalidSize("no further non-crossing road can be added for m = " + std::to_string(m));
    std::vector<double> w(cand.size());
    double total = 0;
    for (size_t k = 0; k < cand.size(); ++k) total += w[k] = 1.0 / dist2(P[cand[k].first], P[cand[k].second]);
    double r = rng.uniform() * total;
    size_t pick = cand.size() - 1;
    for (size_t k = 0; k < cand.size(); ++k) {
      if (r < w[k]) {
        pick = k;
        break;
      }
      r -= w[k];
    }
    const auto [i, j] = cand[pick];
    net.roads.push_back({i, j});
    std::vector<std::pair<int, int>> keep;
    for (size_t k = 0; k < cand.size(); ++k)
      if (k != pick && !segments_cross(P[i], P[j], P[cand[k].first], P[cand[k].second])) keep.push_back(cand[k]);
    cand = std::move(keep);
  }

  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  for (int k = n - 1; k > 0; --k) std::swap(perm[k], perm[rng.below(static_cast<std::uint64_t>(k) + 1)]);
  std::vector<int> clients(perm.begin(), perm.begin() + n_clients);
  std::vector<int> sites(perm.begin() + n_clients, perm.begin() + n_clients + n_sites);
  std::sort(clients.begin(), clients.end());
  std::sort(sites.begin(), sites.end());

  std::vector<WeightedEdge> wedges;
  for (const auto& e : net.roads) wedges.push_back({e.u, e.v, std::sqrt(dist2(P[e.u], P[e.v]))});
  MetricSpace space = MetricSpace::graph_induced(n, std::move(wedges));

  const int nv = n_clients + n_sites;
  net.road_vertex = clients;
  net.road_vertex.insert(net.road_vertex.end(), sites.begin(), sites.end());
  std::vector<std::vector<PointId>> usets(nv);
  for (int v = 0; v < nv; ++v) {
    const int r = net.road_vertex[v];
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return space(r, a) < space(r, b); });
    usets[v].assign(order.begin(), order.begin() + sigma);
  }
  std::vector<Edge> bip;
  PMedian fam;
  for (int c = 0; c < n_clients; ++c) {
    fam.clients.push_back(c);
    for (int s = 0; s < n_sites; ++s) bip.push_back({c, n_clients + s});
  }
  for (int s = 0; s < n_sites; ++s) fam.sites.push_back(n_clients + s);
  fam.p = p;
  net.instance = Instance(Graph(nv, std::move(bip)), std::move(space), std::move(usets), std::move(fam));
  return net;
}

}  // namespace locunc
