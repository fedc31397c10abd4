#include "locunc/metric.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "locunc/errors.hpp"

namespace locunc {

MetricSpace MetricSpace::explicit_matrix(int n, std::vector<double> d, bool validate) {
  if (n < 0 || d.size() != static_cast<size_t>(n) * n) throw MetricViolation("matrix size mismatch");
  check_metric_axioms(n, d, validate && n <= kMaxValidatedPoints);
  MetricSpace s;
  s.kind_ = Kind::ExplicitMatrix;
  s.n_ = n;
  s.validated_ = validate && n <= kMaxValidatedPoints;
  s.d_ = std::move(d);
  return s;
}

MetricSpace MetricSpace::euclidean(int dim, std::vector<double> coords) {
  if (dim <= 0 || coords.size() % dim != 0) throw MetricViolation("coordinate count is not a multiple of the dimension");
  for (double c : coords)
    if (!std::isfinite(c)) throw MetricViolation("non-finite coordinate");
  MetricSpace s;
  s.kind_ = Kind::Euclidean;
  s.dim_ = dim;
  s.n_ = static_cast<int>(coords.size() / dim);
  s.coords_ = std::move(coords);
  return s;
}

MetricSpace MetricSpace::euclidean(const std::vector<std::vector<double>>& points) {
  if (points.empty()) return euclidean(1, {});
  std::vector<double> flat;
  const int dim = static_cast<int>(points.front().size());
  for (const auto& p : points) {
    if (static_cast<int>(p.size()) != dim) throw MetricViolation("mixed point dimensions");
    flat.insert(flat.end(), p.begin(), p.end());
  }
  return euclidean(dim, std::move(flat));
}

MetricSpace MetricSpace::graph_induced(int n, std::vector<WeightedEdge> edges) {
  MetricSpace s;
  s.kind_ = Kind::GraphInduced;
  s.n_ = n;
  s.d_ = all_pairs_shortest_paths(n, edges);
  s.edges_ = std::move(edges);
  return s;
}

double MetricSpace::euclid(PointId a, PointId b) const {
  const double* pa = coords_.data() + static_cast<size_t>(a) * dim_;
  const double* pb = coords_.data() + static_cast<size_t>(b) * dim_;
  double s = 0;
  for (int k = 0; k < dim_; ++k) {
    const double t = pa[k] - pb[k];
    s += t * t;
  }
  return std::sqrt(s);
}

double MetricSpace::distance(PointId a, PointId b) const {
  if (a < 0 || a >= n_ || b < 0 || b >= n_)
    throw InvalidPoint("point id out of range: " + std::to_string(a < 0 || a >= n_ ? a : b));
  return (*this)(a, b);
}

std::vector<double> MetricSpace::to_matrix() const {
  if (kind_ != Kind::Euclidean) return d_;
  std::vector<double> m(static_cast<size_t>(n_) * n_);
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b) m[static_cast<size_t>(a) * n_ + b] = euclid(a, b);
  return m;
}

std::vector<double> all_pairs_shortest_paths(int n, std::span<const WeightedEdge> edges) {
  constexpr double inf = std::numeric_limits<double>::infinity();
  std::vector<double> d(static_cast<size_t>(n) * n, inf);
  for (int i = 0; i < n; ++i) d[static_cast<size_t>(i) * n + i] = 0;
  for (const auto& e : edges) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n) throw InvalidPoint("edge endpoint out of range");
    if (!(e.w >= 0) || !std::isfinite(e.w)) throw MetricViolation("edge weights must be finite and nonnegative");
    double& a = d[static_cast<size_t>(e.u) * n + e.v];
    if (e.w < a) a = d[static_cast<size_t>(e.v) * n + e.u] = e.w;
  }
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i) {
      const double dik = d[static_cast<size_t>(i) * n + k];
      if (dik == inf) continue;
      for (int j = 0; j < n; ++j) {
        const double via = dik + d[static_cast<size_t>(k) * n + j];
        if (via < d[static_cast<size_t>(i) * n + j]) d[static_cast<size_t>(i) * n + j] = via;
      }
    }
  for (double x : d)
    if (x == inf) throw DisconnectedMetric("graph is disconnected");
  return d;
}

void check_metric_axioms(int n, std::span<const double> d, bool triangles) {
  auto at = [&](int a, int b) { return d[static_cast<size_t>(a) * n + b]; };
  for (int a = 0; a < n; ++a) {
    if (std::abs(at(a, a)) > kTol) throw MetricViolation("nonzero diagonal at " + std::to_string(a));
    for (int b = 0; b < n; ++b) {
      if (!std::isfinite(at(a, b)) || at(a, b) < -kTol)
        throw MetricViolation("negative or non-finite distance at (" + std::to_string(a) + "," + std::to_string(b) + ")");
      if (std::abs(at(a, b) - at(b, a)) > kTol)
        throw MetricViolation("asymmetric at (" + std::to_string(a) + "," + std::to_string(b) + ")");
    }
  }
  if (!triangles) return;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (at(a, c) > at(a, b) + at(b, c) + kTol)
          throw MetricViolation("triangle inequality fails for (" + std::to_string(a) + "," + std::to_string(b) +
                                "," + std::to_string(c) + ")");
}

bool is_ptolemaic(const MetricSpace& space, std::span<const PointId> pts, double tol) {
  const size_t k = pts.size();
  if (k < 4) return true;
  for (size_t a = 0; a < k; ++a)
    for (size_t b = a + 1; b < k; ++b)
      for (size_t c = b + 1; c < k; ++c)
        for (size_t e = c + 1; e < k; ++e) {
          const PointId A = pts[a], B = pts[b], C = pts[c], D = pts[e];
          const double p1 = space(A, B) * space(C, D);
          const double p2 = space(A, C) * space(B, D);
          const double p3 = space(A, D) * space(B, C);
          if (p1 > p2 + p3 + tol || p2 > p1 + p3 + tol || p3 > p1 + p2 + tol) return false;
        }
  return true;
}

bool is_ptolemaic(const MetricSpace& space) {
  if (space.kind() == MetricSpace::Kind::Euclidean) return true;
  std::vector<PointId> all(space.size());
  for (int i = 0; i < space.size(); ++i) all[i] = i;
  return is_ptolemaic(space, all);
}

}  // namespace locunc
