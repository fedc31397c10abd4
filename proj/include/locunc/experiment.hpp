#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "locunc/caps.hpp"
#include "locunc/instance.hpp"

namespace locunc {

struct ExperimentConfig {
  // format, roadnet, tight-path, tight-cycle, tight-triangle, tight-clique,
  // tight-star, partition-sp, partition-mst
  std::string family = "format";
  std::vector<int> sigmas = {3};
  std::vector<double> deltas = {0.1};
  int kappa = 1;
  int size = 8;        // road vertices, tight-family size or PARTITION length
  int edges = 12;      // road edges
  int clients = 4;
  int sites = 3;
  int p = 2;
  int amax = 6;        // PARTITION entries drawn from [1, amax]
  // exact, center, dmax, adr-emit, sp-dp, fptas
  std::vector<std::string> algorithms = {"exact", "center", "dmax"};
  double epsilon = 0.1;
  std::uint64_t seed = 1;
  int trials = 10;
  int threads = 1;
  bool timing = false;
  Caps caps;

  // throws InvalidSize / InvalidScale naming the offending field
  void validate() const;
};

struct RunRecord {
  int instance = 0;
  std::string family;
  int sigma = 0;
  double delta = 0;
  std::uint64_t seed = 0;
  std::string algorithm;
  std::string status = "ok";  // "ok" or the error message
  double cost = 0;            // worst-case cost c(F) of the returned support
  std::optional<double> exact;
  std::optional<double> gap;  // cost / exact - 1
  double estimate = 0;        // the algorithm's own objective value
  int iterations = 0;
  double seconds = 0;
};

// seed of the k-th generated instance
std::uint64_t trial_seed(std::uint64_t seed, int k);

Instance make_experiment_instance(const ExperimentConfig& cfg, int sigma, double delta, std::uint64_t seed);

std::vector<RunRecord> run_experiment_records(const ExperimentConfig& cfg);

// Writes runs.csv, costs_cdf.csv and estimate_cdf.csv (and times.csv when
// cfg.timing) into out_dir, which must exist; adr-emit also writes one model
// file per instance.
std::vector<RunRecord> run_experiment(const ExperimentConfig& cfg, const std::string& out_dir);

inline constexpr int kCdfSteps = 200;  // x = 0, 0.005, ..., 1

// columns: algorithm,x,percent
void write_cdf_csv(const std::vector<RunRecord>& records, std::ostream& out, bool use_estimate);
// columns: instance,family,sigma,delta,seed,algorithm,status,cost,exact,gap,estimate,iterations[,seconds]
void write_runs_csv(const std::vector<RunRecord>& records, std::ostream& out, bool with_time);
// columns: algorithm,family,sigma,delta,runs,mean_seconds
void write_times_csv(const std::vector<RunRecord>& records, std::ostream& out);

std::string csv_field(const std::string& s);

}  // namespace locunc
