#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "locunc/metric.hpp"

namespace locunc {

using VertexId = int;
using EdgeId = int;
// sorted list of edge indices into Graph::edges()
using EdgeSubset = std::vector<EdgeId>;

struct Edge {
  VertexId u;
  VertexId v;
  friend bool operator==(const Edge&, const Edge&) = default;
};

class Graph {
 public:
  Graph() = default;
  // edges are stored with u < v in the given order; throws InvalidInstance
  // on loops, duplicates, bad endpoints or isolated vertices
  Graph(int n, std::vector<Edge> edges, bool allow_isolated = false);

  int n() const { return n_; }
  int m() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_[e]; }
  // (neighbor, edge id) pairs in edge order
  const std::vector<std::pair<VertexId, EdgeId>>& adj(VertexId v) const { return adj_[v]; }
  std::optional<EdgeId> find_edge(VertexId a, VertexId b) const;

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::pair<VertexId, EdgeId>>> adj_;
};

struct STPath {
  VertexId s = 0;
  VertexId t = 0;
};
struct SpanningTree {};
struct SteinerTree {
  std::vector<VertexId> terminals;
};
struct PMedian {
  std::vector<VertexId> clients;
  std::vector<VertexId> sites;
  int p = 1;
};
struct Assignment {
  std::vector<VertexId> left;
  std::vector<VertexId> right;
};
struct ExplicitList {
  std::vector<EdgeSubset> members;
};

using FamilyDescriptor = std::variant<STPath, SpanningTree, SteinerTree, PMedian, Assignment, ExplicitList>;

std::string family_name(const FamilyDescriptor& f);

struct Scenario {
  // per-vertex index into U_i
  std::vector<int> choice;
  friend bool operator==(const Scenario&, const Scenario&) = default;
  friend auto operator<=>(const Scenario&, const Scenario&) = default;
};

class Instance {
 public:
  Instance() = default;
  // throws InvalidInstance / InvalidPoint when the parts are inconsistent
  Instance(Graph graph, MetricSpace space, std::vector<std::vector<PointId>> usets, FamilyDescriptor family);

  const Graph& graph() const { return graph_; }
  const MetricSpace& space() const { return space_; }
  const std::vector<std::vector<PointId>>& usets() const { return usets_; }
  const std::vector<PointId>& uset(VertexId i) const { return usets_[i]; }
  const FamilyDescriptor& family() const { return family_; }
  int n() const { return graph_.n(); }
  int m() const { return graph_.m(); }
  int sigma() const { return sigma_; }

  PointId location(const Scenario& u, VertexId i) const { return usets_[i][u.choice[i]]; }
  // d between the k-th point of U_i and the l-th point of U_j
  double d(VertexId i, int k, VertexId j, int l) const { return space_(usets_[i][k], usets_[j][l]); }

  double dmax(VertexId i, VertexId j) const;
  double dmax_edge(EdgeId e) const;
  // number of scenarios, saturating at cap + 1
  long long scenario_count(long long cap) const;

 private:
  void fill_dmax_cache() const;

  Graph graph_;
  MetricSpace space_;
  std::vector<std::vector<PointId>> usets_;
  FamilyDescriptor family_;
  int sigma_ = 0;

  struct Cache {
    std::once_flag once;
    std::vector<double> edge_dmax;
  };
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

double cost(const Instance& inst, const Scenario& u, const EdgeSubset& F);
double cmax(const Instance& inst, const EdgeSubset& F);
std::vector<double> dmax_weights(const Instance& inst);

// points are the vertices, d'(i, j) = dmax(i, j)
MetricSpace worst_case_metric(const Instance& inst);

PointId barycenter(const Instance& inst, VertexId i);
int barycenter_index(const Instance& inst, VertexId i);
Scenario barycenter_scenario(const Instance& inst);

struct Diameter {
  double value = 0;
  PointId a = 0;
  PointId b = 0;
};
Diameter uset_diameter(const Instance& inst, VertexId i);

// vertices touched by F, ascending
std::vector<VertexId> touched_vertices(const Graph& g, const EdgeSubset& F);
bool is_valid_subset(const Graph& g, const EdgeSubset& F);

}  // namespace locunc
