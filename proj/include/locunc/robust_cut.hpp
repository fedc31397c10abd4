#pragma once

#include <optional>
#include <ostream>
#include <vector>

#include "locunc/caps.hpp"
#include "locunc/instance.hpp"

namespace locunc {

struct CutIteration {
  int iteration = 0;
  double master_value = 0;  // omega~
  double eval_value = 0;    // c(F) of the master solution
  bool added = false;       // whether the witness scenario was added
  double seconds = 0;       // wall time since the start of the run
  EdgeSubset incumbent;
};

struct CutState {
  std::vector<Scenario> scenarios;
  EdgeSubset incumbent;
  double master_value = 0;
  std::vector<CutIteration> log;
};

struct MasterResult {
  EdgeSubset F;
  double value = 0;
};

// min over the family of the max over `scenarios` of cost; first member in
// enumeration order wins ties. An empty scenario list means the all-zero scenario.
MasterResult solve_master(const Instance& inst, const std::vector<Scenario>& scenarios, const Caps& caps = {});

struct CutResult {
  EdgeSubset F;
  double value = 0;
  CutState state;
};

// defaults to the barycenter scenario as the first cut
CutResult cutting_plane(const Instance& inst, std::optional<Scenario> initial = std::nullopt, const Caps& caps = {});

// columns: iteration,master_value,eval_value,added[,seconds]
void write_iteration_log_csv(const CutState& state, std::ostream& out, bool with_time);

}  // namespace locunc
