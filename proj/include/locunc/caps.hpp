#pragma once

namespace locunc {

struct Caps {
  long long evalc_scenarios = 10'000'000;   // brute-force eval-c
  int evalc_treewidth = 6;                  // treewidth DP dispatch
  long long evalc_table = 10'000'000;       // cells per DP table
  int enum_edges = 20;                      // path/tree enumeration
  int enum_sites = 12;                      // p-median enumeration
  long long enum_members = 5'000'000;       // any enumeration
  int steiner_terminals = 12;               // Dreyfus-Wagner
  int pmedian_sites = 20;                   // p-median exact solver
  long long pmedian_subsets = 1'000'000;    // binomial(|J|, p)
  long long sp_profiles = 20'000'000;       // robust SP profile table
};

}  // namespace locunc
