#include "locunc/adr.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "locunc/errors.hpp"
#include "locunc/io.hpp"

namespace locunc {

int ConicModel::value_size() const {
  int s = 0;
  for (const auto& v : vars) s += v.dim;
  return s;
}

int ConicModel::binaries() const {
  int c = 0;
  for (const auto& v : vars) c += v.kind == VarKind::Binary;
  return c;
}

int ConicModel::scalar_count() const {
  int c = 0;
  for (const auto& v : vars) c += v.dim == 1;
  return c;
}

AdrCounts adr_expected_counts(const Instance& inst) {
  AdrCounts c;
  const Graph& g = inst.graph();
  int incid = 0, points = 0;
  for (int i = 0; i < g.n(); ++i) {
    const int s = static_cast<int>(inst.uset(i).size());
    incid += static_cast<int>(g.adj(i).size()) * s;
    points += s;
  }
  c.binaries = g.m();
  c.soc = g.m() + incid;
  c.linear = 1 + points + incid;
  // x, omega, mu0, nu_e, nu^k and pi per incidence
  c.scalars = g.m() + 1 + g.n() + g.m() + 2 * incid;
  c.vectors = 2 * g.m();
  return c;
}

AdrCounts adr_counts(const ConicModel& model) {
  AdrCounts c;
  c.binaries = model.binaries();
  c.soc = static_cast<int>(model.soc.size());
  c.linear = static_cast<int>(model.linear.size());
  c.scalars = model.scalar_count();
  c.vectors = static_cast<int>(model.vars.size()) - c.scalars;
  return c;
}

ConicModel build_adr_model(const Instance& inst) {
  const MetricSpace& sp = inst.space();
  if (sp.kind() != MetricSpace::Kind::Euclidean) throw UnsupportedMetric("affine decision rules need a Euclidean metric");
  const Graph& g = inst.graph();
  ConicModel md;
  md.n = g.n();
  md.m = g.m();
  md.ell = sp.dimension();
  md.arcs = g.edges();
  md.family = family_to_string(inst.family());
  const int ell = md.ell;

  auto add = [&](std::string name, VarKind kind, int dim) {
    md.vars.push_back({std::move(name), kind, dim, 0});
    return static_cast<int>(md.vars.size()) - 1;
  };
  auto point = [&](VertexId i, int k) {
    auto c = sp.coords(inst.uset(i)[k]);
    return std::vector<double>(c.begin(), c.end());
  };
  const std::string E = "_";

  for (int e = 0; e < md.m; ++e) md.x_var.push_back(add("x" + E + std::to_string(e), VarKind::Binary, 1));
  md.objective = add("omega", VarKind::Free, 1);
  std::vector<int> mu0(md.n);
  for (int i = 0; i < md.n; ++i) mu0[i] = add("mu0" + E + std::to_string(i), VarKind::Free, 1);
  std::vector<int> nu(md.m);
  for (int e = 0; e < md.m; ++e) nu[e] = add("nu" + E + std::to_string(e), VarKind::NonNeg, 1);

  struct Inc {
    VertexId i;
    EdgeId e;
    int k;
    int nu;
    int pi;
  };
  std::vector<Inc> incs;
  for (int i = 0; i < md.n; ++i)
    for (auto [j, e] : g.adj(i)) {
      (void)j;
      for (int k = 0; k < static_cast<int>(inst.uset(i).size()); ++k) {
        const std::string tag = std::to_string(i) + E + std::to_string(e) + E + std::to_string(k);
        const int v = add("nu" + E + tag, VarKind::NonNeg, 1);
        const int p = add("pi" + E + tag, VarKind::NonNeg, 1);
        incs.push_back({i, e, k, v, p});
      }
    }
  for (int e = 0; e < md.m; ++e) {
    md.mu_tail.push_back(add("mu" + E + std::to_string(md.arcs[e].u) + E + std::to_string(e), VarKind::Free, ell));
    md.mu_head.push_back(add("mu" + E + std::to_string(md.arcs[e].v) + E + std::to_string(e), VarKind::Free, ell));
  }
  int off = 0;
  for (auto& v : md.vars) {
    v.offset = off;
    off += v.dim;
  }

  md.big_m.resize(md.m);
  for (int e = 0; e < md.m; ++e) md.big_m[e] = inst.dmax_edge(e);

  for (int e = 0; e < md.m; ++e)
    md.soc.push_back({"arc" + E + std::to_string(e), nu[e], {{md.mu_tail[e], 1.0}, {md.mu_head[e], 1.0}},
                      std::vector<double>(ell, 0.0)});
  for (const auto& c : incs) {
    const bool tail = md.arcs[c.e].u == c.i;
    const int mu = tail ? md.mu_tail[c.e] : md.mu_head[c.e];
    md.soc.push_back({md.vars[c.nu].name, c.nu, {{mu, tail ? -1.0 : 1.0}}, point(c.i, c.k)});
  }

  for (const auto& c : incs)
    md.linear.push_back({"lin" + E + md.vars[c.pi].name,
                         {{c.pi, 1.0}, {c.nu, -1.0}, {md.x_var[c.e], -md.big_m[c.e]}},
                         -md.big_m[c.e]});
  for (int i = 0; i < md.n; ++i)
    for (int k = 0; k < static_cast<int>(inst.uset(i).size()); ++k) {
      LinearRow r{"vertex" + E + std::to_string(i) + E + std::to_string(k), {{mu0[i], 1.0}}, 0.0};
      for (const auto& c : incs)
        if (c.i == i && c.k == k) r.terms.push_back({c.pi, -1.0});
      md.linear.push_back(std::move(r));
    }
  LinearRow obj{"objective", {{md.objective, 1.0}}, 0.0};
  for (int i = 0; i < md.n; ++i) obj.terms.push_back({mu0[i], -1.0});
  for (int e = 0; e < md.m; ++e) obj.terms.push_back({nu[e], -1.0});
  md.linear.push_back(std::move(obj));

  md.centroid.resize(md.n);
  for (int i = 0; i < md.n; ++i) {
    std::vector<double> c(ell, 0.0);
    const auto& U = inst.uset(i);
    for (int k = 0; k < static_cast<int>(U.size()); ++k) {
      const auto p = point(i, k);
      for (int a = 0; a < ell; ++a) c[a] += p[a];
    }
    for (double& x : c) x /= static_cast<double>(U.size());
    md.centroid[i] = std::move(c);
  }
  return md;
}

std::vector<std::vector<double>> adr_default_mu(const ConicModel& md, const std::vector<double>& x) {
  std::vector<std::vector<double>> mu(2 * md.m);
  for (int e = 0; e < md.m; ++e) {
    const auto& ct = md.centroid[md.arcs[e].u];
    const auto& ch = x[e] > 0.5 ? md.centroid[md.arcs[e].v] : ct;
    mu[2 * e] = ct;
    mu[2 * e + 1] = ch;
    for (double& v : mu[2 * e + 1]) v = -v;
  }
  return mu;
}

double adr_bound_evaluate(const ConicModel& md, const std::vector<double>& x,
                          const std::vector<std::vector<double>>& mu) {
  if (static_cast<int>(x.size()) != md.m || static_cast<int>(mu.size()) != 2 * md.m)
    throw InvalidInstance("x needs one entry per edge and mu two vectors per edge");
  constexpr double lowest = -std::numeric_limits<double>::infinity();
  std::vector<double> val(md.value_size(), 0.0);
  for (const auto& v : md.vars)
    if (v.kind == VarKind::Free && v.dim == 1) val[v.offset] = lowest;
  for (int e = 0; e < md.m; ++e) {
    val[md.vars[md.x_var[e]].offset] = x[e];
    for (int s = 0; s < 2; ++s) {
      const auto& var = md.vars[s == 0 ? md.mu_tail[e] : md.mu_head[e]];
      for (int a = 0; a < md.ell; ++a) val[var.offset + a] = mu[2 * e + s][a];
    }
  }
  for (const auto& r : md.soc) {
    std::vector<double> v = r.constant;
    for (const auto& t : r.terms)
      for (int a = 0; a < md.ell; ++a) v[a] += t.coef * val[md.vars[t.var].offset + a];
    double s = 0;
    for (double c : v) s += c * c;
    double& target = val[md.vars[r.t].offset];
    target = std::max(target, std::sqrt(s));
  }
  for (const auto& r : md.linear) {
    double need = r.rhs;
    for (size_t k = 1; k < r.terms.size(); ++k) need -= r.terms[k].coef * val[md.vars[r.terms[k].var].offset];
    double& target = val[md.vars[r.terms[0].var].offset];
    target = std::max(target, need);
  }
  return val[md.vars[md.objective].offset];
}

double adr_bound_evaluate(const ConicModel& md, const EdgeSubset& F) {
  std::vector<double> x(md.m, 0.0);
  for (EdgeId e : F) x[e] = 1.0;
  return adr_bound_evaluate(md, x, adr_default_mu(md, x));
}

namespace {

const char* kind_tag(VarKind k) {
  switch (k) {
    case VarKind::Binary: return "B";
    case VarKind::Free: return "F";
    case VarKind::NonNeg: return "N";
  }
  return "F";
}

void write_terms(std::ostream& out, const std::vector<Term>& terms) {
  out << terms.size();
  for (const auto& t : terms) out << ' ' << t.var << ':' << format_double(t.coef);
}

}  // namespace

void serialize_model(const ConicModel& md, std::ostream& out) {
  out << "CONIC 1\n";
  out << "DIMS " << md.n << ' ' << md.m << ' ' << md.ell << ' ' << md.vars.size() << ' ' << md.linear.size() << ' '
      << md.soc.size() << '\n';
  if (!md.vars.empty()) {
    out << "VARIABLES " << md.vars.size() << '\n';
    for (size_t v = 0; v < md.vars.size(); ++v)
      out << v << ' ' << md.vars[v].name << ' ' << kind_tag(md.vars[v].kind) << ' ' << md.vars[v].dim << '\n';
  }
  if (md.objective >= 0) out << "OBJECTIVE MIN " << md.objective << '\n';
  if (md.binaries() > 0) {
    out << "BINARIES " << md.binaries() << '\n';
    bool first = true;
    for (size_t v = 0; v < md.vars.size(); ++v)
      if (md.vars[v].kind == VarKind::Binary) {
        out << (first ? "" : " ") << v;
        first = false;
      }
    out << '\n';
  }
  if (!md.linear.empty()) {
    out << "LINEAR " << md.linear.size() << '\n';
    for (const auto& r : md.linear) {
      out << r.name << " GE " << format_double(r.rhs) << ' ';
      write_terms(out, r.terms);
      out << '\n';
    }
  }
  if (!md.soc.empty()) {
    out << "SOC " << md.soc.size() << '\n';
    for (const auto& r : md.soc) {
      out << r.name << ' ' << r.t << ' ';
      write_terms(out, r.terms);
      out << " CONST";
      for (double c : r.constant) out << ' ' << format_double(c);
      out << '\n';
    }
  }
  if (!md.big_m.empty()) {
    out << "BIGM " << md.big_m.size() << '\n';
    for (size_t e = 0; e < md.big_m.size(); ++e)
      out << (e ? " " : "") << format_double(md.big_m[e]);
    out << '\n';
  }
  if (!md.family.empty()) {
    std::string fam = md.family;
    out << "FAMILY " << fam << '\n';
  }
  out << "END\n";
}

void serialize_model(const ConicModel& md, const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error("cannot open " + path + " for writing");
  serialize_model(md, f);
  if (!f) throw Error("write failed: " + path);
}

std::string model_to_string(const ConicModel& md) {
  std::ostringstream out;
  serialize_model(md, out);
  return out.str();
}

}  // namespace locunc
