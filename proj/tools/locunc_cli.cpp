#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "locunc/adr.hpp"
#include "locunc/approx.hpp"
#include "locunc/errors.hpp"
#include "locunc/evalc.hpp"
#include "locunc/experiment.hpp"
#include "locunc/families.hpp"
#include "locunc/io.hpp"
#include "locunc/robust_cut.hpp"
#include "locunc/sp_robust.hpp"

using namespace locunc;

namespace {

void add_caps(CLI::App* sub, Caps& caps) {
  sub->add_option("--cap-evalc-scenarios", caps.evalc_scenarios, "brute-force eval-c scenario limit");
  sub->add_option("--cap-evalc-treewidth", caps.evalc_treewidth, "largest width sent to the treewidth DP");
  sub->add_option("--cap-evalc-table", caps.evalc_table, "cells per treewidth DP table");
  sub->add_option("--cap-enum-edges", caps.enum_edges, "edge limit for family enumeration");
  sub->add_option("--cap-enum-sites", caps.enum_sites, "site limit for p-median enumeration");
  sub->add_option("--cap-enum-members", caps.enum_members, "member limit for any enumeration");
  sub->add_option("--cap-steiner-terminals", caps.steiner_terminals, "terminal limit of the Steiner solver");
  sub->add_option("--cap-pmedian-sites", caps.pmedian_sites, "site limit of the p-median solver");
  sub->add_option("--cap-pmedian-subsets", caps.pmedian_subsets, "facility subset limit of the p-median solver");
  sub->add_option("--cap-sp-profiles", caps.sp_profiles, "profile limit of the robust shortest path DP");
}

std::string join(const EdgeSubset& F) {
  std::string s;
  for (size_t k = 0; k < F.size(); ++k) s += (k ? "," : "") + std::to_string(F[k]);
  return s;
}

EdgeSubset parse_edges(const std::string& text, const Instance& inst) {
  EdgeSubset F;
  std::stringstream ss(text);
  for (std::string tok; std::getline(ss, tok, ',');)
    if (!tok.empty()) F.push_back(std::stoi(tok));
  std::sort(F.begin(), F.end());
  if (!is_valid_subset(inst.graph(), F)) throw InvalidInstance("edge list is not a subset of E");
  return F;
}

EdgeSubset pick_support(const Instance& inst, const std::string& algo, const Caps& caps) {
  if (algo == "exact") return cutting_plane(inst, std::nullopt, caps).F;
  if (algo == "center") return heuristic_center(inst, caps);
  if (algo == "dmax") return heuristic_dmax(inst, caps);
  throw InvalidSize("unknown algorithm: " + algo);
}

std::string out_path(const std::string& dir, const std::string& name) {
  std::filesystem::create_directories(dir);
  return (std::filesystem::path(dir) / name).string();
}

std::ofstream open_out(const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error("cannot write " + path);
  return f;
}

const char* method_name(EvalMethod m) {
  switch (m) {
    case EvalMethod::Empty: return "empty";
    case EvalMethod::Tree: return "tree";
    case EvalMethod::Treewidth: return "treewidth";
    case EvalMethod::BruteForce: return "bruteforce";
  }
  return "?";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Min-max combinatorial optimization under locational uncertainty"};
  app.require_subcommand(1);
  Caps caps;
  ExperimentConfig cfg;
  std::string instance_path, output, edges, algo = "exact", out_dir;
  double epsilon = 0.1;
  bool timing = false;

  auto* gen = app.add_subcommand("gen", "generate an instance file");
  gen->add_option("--family", cfg.family, "format, roadnet, tight-path, tight-cycle, tight-triangle, tight-clique, "
                                          "tight-star, partition-sp or partition-mst")
      ->required();
  int sigma = 3;
  double delta = 0.1;
  gen->add_option("--sigma", sigma, "points per uncertainty set");
  gen->add_option("--delta", delta, "uncertainty radius scale");
  gen->add_option("--seed", cfg.seed, "generator seed");
  gen->add_option("--kappa", cfg.kappa, "format copies");
  gen->add_option("--size", cfg.size, "road vertices, tight-family size or PARTITION length");
  gen->add_option("--edges", cfg.edges, "road edges");
  gen->add_option("--clients", cfg.clients);
  gen->add_option("--sites", cfg.sites);
  gen->add_option("--p", cfg.p, "facilities to open");
  gen->add_option("--amax", cfg.amax, "largest PARTITION entry");
  gen->add_option("-o,--output", output, "instance file (stdout when omitted)");

  auto* solve = app.add_subcommand("solve", "solve the robust problem");
  solve->add_option("instance", instance_path)->required()->check(CLI::ExistingFile);
  solve->add_option("--algo", algo, "exact, center or dmax")->check(CLI::IsMember({"exact", "center", "dmax"}));
  solve->add_option("--out-dir", out_dir, "writes iterations.csv for the exact solver");
  solve->add_flag("--timing", timing, "add wall-clock seconds to iterations.csv");
  add_caps(solve, caps);

  auto* evalc = app.add_subcommand("evalc", "worst-case cost of an edge subset");
  evalc->add_option("instance", instance_path)->required()->check(CLI::ExistingFile);
  evalc->add_option("--edges", edges, "comma-separated edge ids (defaults to the --algo solution)");
  evalc->add_option("--algo", algo, "exact, center or dmax")->check(CLI::IsMember({"exact", "center", "dmax"}));
  add_caps(evalc, caps);

  auto* certify = app.add_subcommand("certify", "compare c^max and c against the proven ratio");
  certify->add_option("instance", instance_path)->required()->check(CLI::ExistingFile);
  certify->add_option("--edges", edges, "comma-separated edge ids (defaults to the --algo solution)");
  certify->add_option("--algo", algo, "exact, center or dmax")->check(CLI::IsMember({"exact", "center", "dmax"}));
  certify->add_option("--out-dir", out_dir, "writes certify.csv");
  add_caps(certify, caps);

  auto* sp = app.add_subcommand("sp", "robust shortest path by profile DP");
  sp->add_option("instance", instance_path)->required()->check(CLI::ExistingFile);
  std::string sp_algo = "exact";
  sp->add_option("--algo", sp_algo, "exact or fptas")->check(CLI::IsMember({"exact", "fptas"}));
  sp->add_option("--epsilon", epsilon, "FPTAS accuracy");
  sp->add_option("--out-dir", out_dir, "writes sp_stats.csv");
  add_caps(sp, caps);

  auto* adr = app.add_subcommand("adr-emit", "write the affine decision rule conic model");
  adr->add_option("instance", instance_path)->required()->check(CLI::ExistingFile);
  adr->add_option("-o,--output", output, "model file (stdout when omitted)");
  adr->add_option("--out-dir", out_dir, "writes model.txt there");
  adr->add_option("--edges", edges, "also print the conservative bound of this support");

  auto* exp = app.add_subcommand("experiment", "batch experiment with CSV output");
  exp->add_option("--family", cfg.family)->required();
  exp->add_option("--sigma", cfg.sigmas, "one or more sigma values")->expected(1, -1);
  exp->add_option("--delta", cfg.deltas, "one or more delta values")->expected(1, -1);
  exp->add_option("--epsilon", cfg.epsilon, "FPTAS accuracy");
  exp->add_option("--seed", cfg.seed);
  exp->add_option("--algo", cfg.algorithms, "exact, center, dmax, adr-emit, sp-dp, fptas")->expected(1, -1);
  exp->add_option("--trials", cfg.trials, "instances per (sigma, delta)");
  exp->add_option("--threads", cfg.threads);
  exp->add_option("--kappa", cfg.kappa);
  exp->add_option("--size", cfg.size);
  exp->add_option("--edges", cfg.edges);
  exp->add_option("--clients", cfg.clients);
  exp->add_option("--sites", cfg.sites);
  exp->add_option("--p", cfg.p);
  exp->add_option("--amax", cfg.amax);
  exp->add_option("--out-dir", out_dir)->required();
  exp->add_flag("--timing", cfg.timing, "also write times.csv and a seconds column");
  add_caps(exp, cfg.caps);

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) {
      Instance inst = make_experiment_instance(cfg, sigma, delta, cfg.seed);
      if (output.empty())
        write_instance(inst, std::cout);
      else
        write_instance(inst, output);
      return 0;
    }
    if (exp->parsed()) {
      std::filesystem::create_directories(out_dir);
      auto recs = run_experiment(cfg, out_dir);
      int failed = 0;
      for (const auto& r : recs) failed += r.status != "ok";
      std::cout << "records " << recs.size() << " failed " << failed << " out " << out_dir << '\n';
      return 0;
    }

    const Instance inst = parse_instance(instance_path);
    if (solve->parsed()) {
      if (algo == "exact") {
        CutResult r = cutting_plane(inst, std::nullopt, caps);
        std::cout << "value " << format_double(r.value) << "\nedges " << join(r.F) << "\niterations "
                  << r.state.log.size() << '\n';
        if (!out_dir.empty()) {
          auto f = open_out(out_path(out_dir, "iterations.csv"));
          write_iteration_log_csv(r.state, f, timing);
        }
      } else {
        EdgeSubset F = pick_support(inst, algo, caps);
        std::cout << "value " << format_double(eval_c(inst, F, caps).value) << "\nedges " << join(F) << '\n';
      }
    } else if (evalc->parsed()) {
      EdgeSubset F = edges.empty() ? pick_support(inst, algo, caps) : parse_edges(edges, inst);
      EvalMethod used;
      EvalResult r = eval_c(inst, F, caps, &used);
      std::cout << "value " << format_double(r.value) << "\nmethod " << method_name(used) << "\nwitness";
      for (int c : r.witness.choice) std::cout << ' ' << c;
      std::cout << '\n';
    } else if (certify->parsed()) {
      EdgeSubset F = edges.empty() ? pick_support(inst, algo, caps) : parse_edges(edges, inst);
      Certification c = certify_ratio(inst, F, caps);
      std::ostringstream csv;
      csv << "id,family,observed,bound,structure,ok\n"
          << csv_field(std::filesystem::path(instance_path).filename().string()) << ',' << family_name(inst.family())
          << ',' << format_double(c.observed) << ',' << format_double(c.bound.value) << ','
          << structure_name(c.bound.structure) << ',' << (c.ok ? "true" : "false") << '\n';
      std::cout << csv.str();
      if (!out_dir.empty()) open_out(out_path(out_dir, "certify.csv")) << csv.str();
      return c.ok ? 0 : 3;
    } else if (sp->parsed()) {
      std::ostringstream csv;
      write_sp_stats_csv_header(csv);
      SpResult r;
      if (sp_algo == "exact") {
        r = robust_sp_exact(inst, caps);
        write_sp_stats_csv_row(csv, "exact", 0, r);
      } else {
        r = robust_sp_fptas(inst, epsilon, caps);
        write_sp_stats_csv_row(csv, "fptas", epsilon, r);
      }
      std::cout << "value " << format_double(r.value) << "\nedges " << join(r.path) << '\n' << csv.str();
      if (!out_dir.empty()) open_out(out_path(out_dir, "sp_stats.csv")) << csv.str();
    } else if (adr->parsed()) {
      ConicModel md = build_adr_model(inst);
      if (!out_dir.empty()) serialize_model(md, out_path(out_dir, "model.txt"));
      if (!output.empty()) serialize_model(md, output);
      if (output.empty() && out_dir.empty()) serialize_model(md, std::cout);
      if (!edges.empty()) {
        EdgeSubset F = parse_edges(edges, inst);
        std::cerr << "bound " << format_double(adr_bound_evaluate(md, F)) << '\n';
      }
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
