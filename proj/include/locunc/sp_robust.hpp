#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "locunc/caps.hpp"
#include "locunc/instance.hpp"

namespace locunc {

struct ProfileStats {
  long long n_profiles = 0;  // distinct (vertex, profile) pairs kept
  long long n_values = 0;    // distinct profile component values
  long long table_bytes = 0;
  int hops = 0;              // largest hop budget that produced a profile
  long long pruned = 0;      // profiles dropped by the FPTAS threshold
};

struct SpResult {
  EdgeSubset path;                // sorted edge ids
  std::vector<VertexId> vertices; // s .. t
  double value = 0;               // worst-case cost of `path` under the instance metric
  double dp_value = 0;            // optimum of the (possibly rounded) table, in original units
  ProfileStats stats;
};

struct FptasResult : SpResult {
  double bound_a = 0;    // worst-case cost of the bootstrap path
  double eps_prime = 0;  // eps / (2n)
  double unit = 0;       // eps_prime * bound_a
  long long threshold = 0;
};

// Requires an STPath family. Throws Infeasible when t is unreachable from s.
SpResult robust_sp_exact(const Instance& inst, const Caps& caps = {});
FptasResult robust_sp_fptas(const Instance& inst, double eps, const Caps& caps = {});

// ceil(d / unit) in integer units
std::int64_t round_up_units(double d, double unit);

// columns: algorithm,epsilon,n_profiles,n_values,table_bytes,hops,pruned,value
void write_sp_stats_csv_header(std::ostream& out);
void write_sp_stats_csv_row(std::ostream& out, const std::string& algo, double eps, const SpResult& r);

}  // namespace locunc
