#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "locunc/instance.hpp"

namespace locunc {

enum class VarKind { Binary, Free, NonNeg };

struct Variable {
  std::string name;
  VarKind kind = VarKind::Free;
  int dim = 1;
  int offset = 0;  // position of the first component in a flat value vector
};

struct Term {
  int var;
  double coef;
};

// sum of terms >= rhs; the first term (coefficient 1) is the variable the row bounds from below
struct LinearRow {
  std::string name;
  std::vector<Term> terms;
  double rhs = 0;
};

// t >= || sum of coef * var + constant ||, all vectors of the model dimension
struct SocRow {
  std::string name;
  int t = -1;
  std::vector<Term> terms;
  std::vector<double> constant;
};

struct ConicModel {
  int n = 0;
  int m = 0;
  int ell = 0;
  std::vector<Variable> vars;
  int objective = -1;  // minimised scalar
  std::vector<LinearRow> linear;
  std::vector<SocRow> soc;
  std::vector<Edge> arcs;  // tail < head
  std::vector<double> big_m;
  std::vector<int> x_var;                 // per edge
  std::vector<int> mu_tail, mu_head;      // per edge, vector variables
  std::vector<std::vector<double>> centroid;  // per vertex
  std::string family;

  int value_size() const;
  int binaries() const;
  int scalar_count() const;
};

struct AdrCounts {
  int binaries = 0;
  int soc = 0;
  int linear = 0;
  int scalars = 0;
  int vectors = 0;
};

// closed-form counts for an instance: binaries m; SOC m + sum_i deg(i)|U_i|;
// linear 1 + sum_i |U_i| + sum_i deg(i)|U_i|
AdrCounts adr_expected_counts(const Instance& inst);
AdrCounts adr_counts(const ConicModel& model);

// throws UnsupportedMetric unless the metric is Euclidean
ConicModel build_adr_model(const Instance& inst);

// mu values for a 0/1 edge vector: on selected arcs the tail takes +centroid(U_tail)
// and the head -centroid(U_head); on other arcs both sides use centroid(U_tail)
// with opposite signs so that the arc's own cone is zero
std::vector<std::vector<double>> adr_default_mu(const ConicModel& model, const std::vector<double>& x);

// smallest objective value consistent with every row once x and mu are fixed;
// mu_tail_head[2e] is the tail vector of arc e and mu_tail_head[2e + 1] the head vector
double adr_bound_evaluate(const ConicModel& model, const std::vector<double>& x,
                          const std::vector<std::vector<double>>& mu_tail_head);
double adr_bound_evaluate(const ConicModel& model, const EdgeSubset& F);

void serialize_model(const ConicModel& model, std::ostream& out);
void serialize_model(const ConicModel& model, const std::string& path);
std::string model_to_string(const ConicModel& model);

}  // namespace locunc
