#pragma once

#include <string>
#include <vector>

#include "locunc/caps.hpp"
#include "locunc/families.hpp"
#include "locunc/instance.hpp"

namespace locunc {

enum class Hypothesis { AnyMetric, Ptolemaic };
enum class Structure { General, Path, Cycle, TriangleCycle, Clique, Star, Tree, MaxDegree, Matching };

struct RatioBound {
  double value = 9;
  Hypothesis hypothesis = Hypothesis::AnyMetric;
  Structure structure = Structure::General;
};

std::string structure_name(Structure s);

EdgeSubset heuristic_center(const Instance& inst, const Caps& caps = {});
EdgeSubset heuristic_dmax(const Instance& inst, const Caps& caps = {});

// smallest proven bound matching the structure of F
RatioBound applicable_bound(const FamilyStats& stats, bool ptolemaic);

// Ptolemy test over the union of all uncertainty sets
bool instance_is_ptolemaic(const Instance& inst);

struct Certification {
  double observed = 1;
  RatioBound bound;
  bool ok = true;
  double cmax = 0;
  double c = 0;
};
Certification certify_ratio(const Instance& inst, const EdgeSubset& F, const Caps& caps = {});
Certification certify_ratio(const Instance& inst, const EdgeSubset& F, bool ptolemaic, const Caps& caps = {});

struct TightInstance {
  Instance instance;
  EdgeSubset F;
};

TightInstance gen_tight_path(int n);
TightInstance gen_tight_cycle(int n);
TightInstance gen_tight_triangle();
TightInstance gen_tight_clique(int k);
TightInstance gen_tight_star(int n);

// three vertices on a line, U1 = {eps}, U2 = {0}, U3 = {-1, 0, 1}; the family
// is the three single edges
Instance gen_center_counterexample(double eps);

struct UnionBoundReport {
  double rho_max = 1;
  double cmax_union = 0;
  double c_union = 0;
  bool general_ok = true;
  bool vertex_disjoint = false;
  bool disjoint_ok = true;  // only meaningful when vertex_disjoint
  bool ok() const { return general_ok && (!vertex_disjoint || disjoint_ok); }
};

// Checks cmax(U) <= T * max rho_t * c(U) for the union U of the parts, and
// cmax(U) <= max rho_t * c(U) when the parts share no vertex.
UnionBoundReport union_bound_check(const Instance& inst, const std::vector<EdgeSubset>& parts, const Caps& caps = {});

}  // namespace locunc
