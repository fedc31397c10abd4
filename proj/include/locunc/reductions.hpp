#pragma once

#include <vector>

#include "locunc/instance.hpp"

namespace locunc {

struct PartitionInput {
  std::vector<long long> a;  // a_i >= 1
  long long K = 0;

  long long total() const;
  int n() const { return static_cast<int>(a.size()); }
};

// smallest K accepted by each construction: 2nA + 1 and (4n - 1)A + 1
long long min_scale_sp(const std::vector<long long>& a);
long long min_scale_mst(const std::vector<long long>& a);

// Vertices: s = 0, v_i = i, w_i = n + i (i = 1..n), t = 2n + 1. The interval
// [-u^-, u^+] of each vertex is replaced by its two endpoints.
Instance gen_partition_sp(const PartitionInput& in);

// Ladder v_0..v_n (ids 0..n), w_0..w_n (ids n+1..2n+1) over the shortest-path
// metric of the two-layer weighted graph, frozen as an explicit matrix.
Instance gen_partition_mst(const PartitionInput& in);

// Edge ids of the path / tree associated with S (mask bit i-1 set means i in S).
EdgeSubset partition_sp_path(const Instance& inst, int n, unsigned mask);
EdgeSubset partition_mst_tree(const Instance& inst, int n, unsigned mask);

// M = {0, 1} on a line, U_i = M, family = {E(G)}
Instance gen_maxcut_evalc(const Graph& g);

// discrete 0/1 metric over the colours used, U_i = L(i), family = {E(G)}
Instance gen_listcol_evalc(const Graph& g, const std::vector<std::vector<int>>& lists);

}  // namespace locunc
