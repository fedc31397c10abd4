#include "locunc/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <fstream>
#include <map>
#include <thread>

#include "locunc/adr.hpp"
#include "locunc/approx.hpp"
#include "locunc/errors.hpp"
#include "locunc/evalc.hpp"
#include "locunc/generators.hpp"
#include "locunc/io.hpp"
#include "locunc/reductions.hpp"
#include "locunc/rng.hpp"
#include "locunc/robust_cut.hpp"
#include "locunc/sp_robust.hpp"

namespace locunc {

namespace {

const std::vector<std::string> kFamilies = {"format",      "roadnet",        "tight-path",   "tight-cycle",  "tight-triangle",
                                            "tight-clique", "tight-star",    "partition-sp", "partition-mst"};
const std::vector<std::string> kAlgorithms = {"exact", "center", "dmax", "adr-emit", "sp-dp", "fptas"};

bool contains(const std::vector<std::string>& v, const std::string& s) {
  return std::find(v.begin(), v.end(), s) != v.end();
}

PartitionInput random_partition(int n, int amax, Rng& rng) {
  PartitionInput in;
  for (int i = 0; i < n; ++i) in.a.push_back(rng.range(1, amax));
  return in;
}

struct Job {
  int id;
  int sigma;
  double delta;
  std::uint64_t seed;
};

std::vector<RunRecord> run_one(const ExperimentConfig& cfg, const Job& job, const std::string* out_dir) {
  std::vector<RunRecord> recs;
  auto base = [&](const std::string& algo) {
    RunRecord r;
    r.instance = job.id;
    r.family = cfg.family;
    r.sigma = job.sigma;
    r.delta = job.delta;
    r.seed = job.seed;
    r.algorithm = algo;
    return r;
  };
  Instance inst;
  try {
    inst = make_experiment_instance(cfg, job.sigma, job.delta, job.seed);
  } catch (const std::exception& ex) {
    for (const auto& a : cfg.algorithms) {
      RunRecord r = base(a);
      r.status = std::string("generation failed: ") + ex.what();
      recs.push_back(std::move(r));
    }
    return recs;
  }
  for (const auto& algo : cfg.algorithms) {
    RunRecord r = base(algo);
    const auto t0 = std::chrono::steady_clock::now();
    try {
      auto worst = [&](const EdgeSubset& F) { return eval_c(inst, F, cfg.caps).value; };
      if (algo == "exact") {
        CutResult cut = cutting_plane(inst, std::nullopt, cfg.caps);
        r.cost = cut.value;
        r.estimate = cut.state.master_value;
        r.iterations = static_cast<int>(cut.state.log.size());
      } else if (algo == "center") {
        EdgeSubset F = heuristic_center(inst, cfg.caps);
        r.cost = worst(F);
        r.estimate = cost(inst, barycenter_scenario(inst), F);
      } else if (algo == "dmax") {
        EdgeSubset F = heuristic_dmax(inst, cfg.caps);
        r.cost = worst(F);
        r.estimate = cmax(inst, F);
      } else if (algo == "adr-emit") {
        ConicModel md = build_adr_model(inst);
        if (out_dir) serialize_model(md, *out_dir + "/adr_" + std::to_string(job.id) + ".txt");
        EdgeSubset F = heuristic_dmax(inst, cfg.caps);
        r.cost = worst(F);
        r.estimate = adr_bound_evaluate(md, F);
      } else if (algo == "sp-dp") {
        SpResult sp = robust_sp_exact(inst, cfg.caps);
        r.cost = sp.value;
        r.estimate = sp.dp_value;
      } else if (algo == "fptas") {
        FptasResult sp = robust_sp_fptas(inst, cfg.epsilon, cfg.caps);
        r.cost = sp.value;
        r.estimate = sp.dp_value;
      }
    } catch (const std::exception& ex) {
      r.status = ex.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    recs.push_back(std::move(r));
  }
  std::optional<double> ref;
  for (const auto& name : {"exact", "sp-dp"})
    for (const auto& r : recs)
      if (!ref && r.algorithm == name && r.status == "ok") ref = r.cost;
  if (ref)
    for (auto& r : recs) {
      if (r.status != "ok") continue;
      r.exact = *ref;
      r.gap = *ref > 0 ? r.cost / *ref - 1 : (r.cost > kTol ? HUGE_VAL : 0.0);
      if (r.algorithm == "exact") r.gap = 0.0;
    }
  return recs;
}

void write_double(std::ostream& out, double x) { out << format_double(x); }

}  // namespace

void ExperimentConfig::validate() const {
  if (!contains(kFamilies, family)) throw InvalidSize("unknown family: " + family);
  if (sigmas.empty() || deltas.empty()) throw InvalidSize("need at least one sigma and one delta");
  for (int s : sigmas)
    if (s < 1) throw InvalidSize("sigma must be at least 1");
  for (double d : deltas)
    if (!(d > 0) || !std::isfinite(d)) throw InvalidScale("delta must be positive");
  if (algorithms.empty()) throw InvalidSize("no algorithm selected");
  for (const auto& a : algorithms)
    if (!contains(kAlgorithms, a)) throw InvalidSize("unknown algorithm: " + a);
  if (!(epsilon > 0) || !std::isfinite(epsilon)) throw InvalidScale("epsilon must be positive");
  if (trials < 1) throw InvalidSize("trials must be at least 1");
  if (threads < 1) throw InvalidSize("threads must be at least 1");
  if (kappa < 1) throw InvalidSize("kappa must be at least 1");
  if (family == "roadnet" && edges < size - 1) throw InvalidSize("road networks need m >= n - 1");
  if (amax < 1) throw InvalidSize("amax must be at least 1");
}

std::uint64_t trial_seed(std::uint64_t seed, int k) { return stream_seed(seed, static_cast<std::uint64_t>(k) + 1); }

Instance make_experiment_instance(const ExperimentConfig& cfg, int sigma, double delta, std::uint64_t seed) {
  const std::string& f = cfg.family;
  if (f == "format") return gen_format(cfg.kappa, delta, sigma, seed);
  if (f == "roadnet") return gen_planar_roadnet(cfg.size, cfg.edges, cfg.clients, cfg.sites, cfg.p, sigma, seed).instance;
  if (f == "tight-path") return gen_tight_path(cfg.size).instance;
  if (f == "tight-cycle") return gen_tight_cycle(cfg.size).instance;
  if (f == "tight-triangle") return gen_tight_triangle().instance;
  if (f == "tight-clique") return gen_tight_clique(cfg.size).instance;
  if (f == "tight-star") return gen_tight_star(cfg.size).instance;
  if (f == "partition-sp" || f == "partition-mst") {
    Rng rng = Rng::stream(seed, 0);
    PartitionInput in = random_partition(cfg.size, cfg.amax, rng);
    const bool sp = f == "partition-sp";
    in.K = sp ? min_scale_sp(in.a) : min_scale_mst(in.a);
    return sp ? gen_partition_sp(in) : gen_partition_mst(in);
  }
  throw InvalidSize("unknown family: " + f);
}

std::vector<RunRecord> run_experiment_records(const ExperimentConfig& cfg) {
  return run_experiment(cfg, std::string());
}

std::vector<RunRecord> run_experiment(const ExperimentConfig& cfg, const std::string& out_dir) {
  cfg.validate();
  std::vector<Job> jobs;
  for (int s : cfg.sigmas)
    for (double d : cfg.deltas)
      for (int t = 0; t < cfg.trials; ++t) {
        const int id = static_cast<int>(jobs.size());
        jobs.push_back({id, s, d, trial_seed(cfg.seed, id)});
      }
  std::vector<std::vector<RunRecord>> slots(jobs.size());
  const std::string* dir = out_dir.empty() ? nullptr : &out_dir;
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t k; (k = next++) < jobs.size();) slots[k] = run_one(cfg, jobs[k], dir);
  };
  const int nt = std::min<int>(cfg.threads, static_cast<int>(jobs.size()));
  if (nt <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < nt; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  std::vector<RunRecord> recs;
  for (auto& s : slots)
    for (auto& r : s) recs.push_back(std::move(r));
  if (dir) {
    auto open = [&](const std::string& name) {
      std::ofstream f(out_dir + "/" + name, std::ios::binary);
      if (!f) throw Error("cannot write " + out_dir + "/" + name);
      return f;
    };
    {
      auto f = open("runs.csv");
      write_runs_csv(recs, f, cfg.timing);
    }
    {
      auto f = open("costs_cdf.csv");
      write_cdf_csv(recs, f, false);
    }
    {
      auto f = open("estimate_cdf.csv");
      write_cdf_csv(recs, f, true);
    }
    if (cfg.timing) {
      auto f = open("times.csv");
      write_times_csv(recs, f);
    }
  }
  return recs;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c == '\n' || c == '\r' ? ' ' : c;
  }
  return q + "\"";
}

void write_runs_csv(const std::vector<RunRecord>& recs, std::ostream& out, bool with_time) {
  out << "instance,family,sigma,delta,seed,algorithm,status,cost,exact,gap,estimate,iterations";
  if (with_time) out << ",seconds";
  out << '\n';
  for (const auto& r : recs) {
    const bool ok = r.status == "ok";
    out << r.instance << ',' << r.family << ',' << r.sigma << ',' << format_double(r.delta) << ',' << r.seed << ','
        << r.algorithm << ',' << csv_field(r.status) << ',';
    if (ok) write_double(out, r.cost);
    out << ',';
    if (r.exact) write_double(out, *r.exact);
    out << ',';
    if (r.gap) write_double(out, *r.gap);
    out << ',';
    if (ok) write_double(out, r.estimate);
    out << ',' << r.iterations;
    if (with_time) out << ',' << format_double(r.seconds);
    out << '\n';
  }
}

void write_cdf_csv(const std::vector<RunRecord>& recs, std::ostream& out, bool use_estimate) {
  out << "algorithm,x,percent\n";
  std::vector<std::string> order;
  std::map<std::string, std::vector<double>> values;
  for (const auto& r : recs) {
    if (r.status != "ok") continue;
    std::optional<double> v;
    if (use_estimate) {
      v = r.cost > 0 ? r.estimate / r.cost - 1 : 0.0;
    } else {
      v = r.gap;
    }
    if (!v) continue;
    if (!values.count(r.algorithm)) order.push_back(r.algorithm);
    values[r.algorithm].push_back(*v);
  }
  for (const auto& a : order) {
    const auto& g = values[a];
    auto row = [&](double x) {
      const auto cnt = std::count_if(g.begin(), g.end(), [&](double v) { return v <= x + kTol; });
      out << a << ',' << format_double(x) << ',' << format_double(100.0 * static_cast<double>(cnt) / g.size()) << '\n';
    };
    for (int k = 0; k <= kCdfSteps; ++k) row(k / static_cast<double>(kCdfSteps));
    const double mx = *std::max_element(g.begin(), g.end());
    if (mx > 1 + kTol) row(mx);
  }
}

void write_times_csv(const std::vector<RunRecord>& recs, std::ostream& out) {
  out << "algorithm,family,sigma,delta,runs,mean_seconds\n";
  struct Acc {
    int runs = 0;
    double total = 0;
  };
  std::vector<std::tuple<std::string, int, double>> order;
  std::map<std::tuple<std::string, int, double>, Acc> acc;
  std::string family;
  for (const auto& r : recs) {
    family = r.family;
    auto key = std::make_tuple(r.algorithm, r.sigma, r.delta);
    if (!acc.count(key)) order.push_back(key);
    acc[key].runs += 1;
    acc[key].total += r.seconds;
  }
  for (const auto& key : order) {
    const Acc& a = acc[key];
    out << std::get<0>(key) << ',' << family << ',' << std::get<1>(key) << ',' << format_double(std::get<2>(key)) << ','
        << a.runs << ',' << format_double(a.total / a.runs) << '\n';
  }
}

}  // namespace locunc
