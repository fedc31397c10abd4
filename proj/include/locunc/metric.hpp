#pragma once

#include <span>
#include <vector>

namespace locunc {

using PointId = int;

inline constexpr double kTol = 1e-9;
inline constexpr int kMaxValidatedPoints = 512;

struct WeightedEdge {
  int u;
  int v;
  double w;
};

class MetricSpace {
 public:
  enum class Kind { ExplicitMatrix, Euclidean, GraphInduced };

  MetricSpace() = default;

  // row-major n x n matrix; throws MetricViolation unless validate is false
  static MetricSpace explicit_matrix(int n, std::vector<double> d, bool validate = true);
  // coords holds n points of the given dimension, row-major
  static MetricSpace euclidean(int dim, std::vector<double> coords);
  static MetricSpace euclidean(const std::vector<std::vector<double>>& points);
  static MetricSpace graph_induced(int n, std::vector<WeightedEdge> edges);

  Kind kind() const { return kind_; }
  int size() const { return n_; }
  bool validated() const { return validated_; }

  double distance(PointId a, PointId b) const;
  // unchecked
  double operator()(PointId a, PointId b) const {
    return kind_ == Kind::Euclidean ? euclid(a, b) : d_[static_cast<size_t>(a) * n_ + b];
  }

  int dimension() const { return dim_; }
  std::span<const double> coords(PointId a) const {
    return {coords_.data() + static_cast<size_t>(a) * dim_, static_cast<size_t>(dim_)};
  }
  const std::vector<double>& raw_coords() const { return coords_; }
  const std::vector<WeightedEdge>& graph_edges() const { return edges_; }
  std::vector<double> to_matrix() const;

 private:
  double euclid(PointId a, PointId b) const;

  Kind kind_ = Kind::ExplicitMatrix;
  int n_ = 0;
  int dim_ = 0;
  bool validated_ = true;
  std::vector<double> d_;
  std::vector<double> coords_;
  std::vector<WeightedEdge> edges_;
};

// Floyd-Warshall closure. Throws DisconnectedMetric.
std::vector<double> all_pairs_shortest_paths(int n, std::span<const WeightedEdge> edges);

// Throws MetricViolation naming the offending entry.
void check_metric_axioms(int n, std::span<const double> d, bool triangles = true);

bool is_ptolemaic(const MetricSpace& space, std::span<const PointId> points, double tol = kTol);
bool is_ptolemaic(const MetricSpace& space);

}  // namespace locunc
