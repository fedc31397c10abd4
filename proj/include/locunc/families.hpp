#pragma once

#include <functional>
#include <span>
#include <vector>

#include "locunc/caps.hpp"
#include "locunc/instance.hpp"

namespace locunc {

struct FamilyStats {
  int max_degree = 0;
  int vertex_count = 0;
  int edge_count = 0;
  bool is_path = false;
  bool is_cycle = false;
  bool is_tree = false;
  bool is_forest = false;
  bool is_star = false;
  bool is_clique = false;
  bool is_matching = false;
  bool connected = false;
};

FamilyStats family_stats(const Graph& g, const EdgeSubset& F);

double total_weight(std::span<const double> w, const EdgeSubset& F);

// Exact minimizer of total weight over the family. Throws Infeasible or CapExceeded.
EdgeSubset solve_deterministic(const FamilyDescriptor& fam, const Graph& g, std::span<const double> w,
                               const Caps& caps = {});

// Visits every member once, in lexicographic order of the sorted edge lists.
void for_each_member(const FamilyDescriptor& fam, const Graph& g, const std::function<void(const EdgeSubset&)>& visit,
                     const Caps& caps = {});
std::vector<EdgeSubset> enumerate_family(const FamilyDescriptor& fam, const Graph& g, const Caps& caps = {});

// Building blocks, exposed for reuse and testing.
EdgeSubset shortest_path(const Graph& g, std::span<const double> w, VertexId s, VertexId t);
EdgeSubset minimum_spanning_tree(const Graph& g, std::span<const double> w);
EdgeSubset steiner_tree(const Graph& g, std::span<const double> w, std::span<const VertexId> terminals,
                        const Caps& caps = {});

}  // namespace locunc
