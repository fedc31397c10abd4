#include "locunc/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "locunc/errors.hpp"

namespace locunc {

std::string format_double(double x) {
  if (x == 0) return "0";
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

namespace {

void write_list(std::ostream& out, const std::vector<int>& v) {
  out << v.size();
  for (int x : v) out << ' ' << x;
}

}  // namespace

std::string family_to_string(const FamilyDescriptor& fam) {
  std::ostringstream out;
  std::visit(
      [&](const auto& f) {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, STPath>) {
          out << "STPATH " << f.s << ' ' << f.t;
        } else if constexpr (std::is_same_v<T, SpanningTree>) {
          out << "SPANNING";
        } else if constexpr (std::is_same_v<T, SteinerTree>) {
          out << "STEINER ";
          write_list(out, f.terminals);
        } else if constexpr (std::is_same_v<T, PMedian>) {
          out << "PMEDIAN " << f.p << ' ';
          write_list(out, f.clients);
          out << ' ';
          write_list(out, f.sites);
        } else if constexpr (std::is_same_v<T, Assignment>) {
          out << "ASSIGNMENT ";
          write_list(out, f.left);
          out << ' ';
          write_list(out, f.right);
        } else {
          out << "EXPLICIT " << f.members.size();
          for (const auto& F : f.members) {
            out << '\n';
            write_list(out, F);
          }
        }
      },
      fam);
  return out.str();
}

void write_instance(const Instance& inst, std::ostream& out) {
  const Graph& g = inst.graph();
  out << "LOCUNC 1\n";
  out << "GRAPH " << g.n() << ' ' << g.m() << '\n';
  for (const auto& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  const MetricSpace& s = inst.space();
  switch (s.kind()) {
    case MetricSpace::Kind::ExplicitMatrix: {
      out << "METRIC EXPLICIT " << s.size() << (s.validated() ? "" : " NOVALIDATE") << '\n';
      const auto d = s.to_matrix();
      for (int a = 0; a < s.size(); ++a) {
        for (int b = 0; b < s.size(); ++b) out << (b ? " " : "") << format_double(d[static_cast<size_t>(a) * s.size() + b]);
        out << '\n';
      }
      break;
    }
    case MetricSpace::Kind::Euclidean:
      out << "METRIC EUCLIDEAN " << s.size() << ' ' << s.dimension() << '\n';
      for (int a = 0; a < s.size(); ++a) {
        const auto c = s.coords(a);
        for (size_t k = 0; k < c.size(); ++k) out << (k ? " " : "") << format_double(c[k]);
        out << '\n';
      }
      break;
    case MetricSpace::Kind::GraphInduced:
      out << "METRIC GRAPH " << s.size() << ' ' << s.graph_edges().size() << '\n';
      for (const auto& e : s.graph_edges()) out << e.u << ' ' << e.v << ' ' << format_double(e.w) << '\n';
      break;
  }
  out << "USETS " << inst.n() << '\n';
  for (int i = 0; i < inst.n(); ++i) {
    write_list(out, inst.uset(i));
    out << '\n';
  }
  out << "FAMILY " << family_to_string(inst.family()) << '\n';
  out << "END\n";
}

void write_instance(const Instance& inst, const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error("cannot open " + path + " for writing");
  write_instance(inst, f);
  if (!f) throw Error("write failed: " + path);
}

std::string instance_to_string(const Instance& inst) {
  std::ostringstream out;
  write_instance(inst, out);
  return out.str();
}

namespace {

class Reader {
 public:
  explicit Reader(std::istream& in) : in_(in) {}

  int line() const { return line_; }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(line_, what); }

  // next line holding data; blank lines are not allowed here
  std::istringstream data() {
    std::string s;
    if (!std::getline(in_, s)) {
      ++line_;
      fail("unexpected end of file");
    }
    ++line_;
    if (s.find_first_not_of(" \t\r") == std::string::npos) fail("empty line");
    return std::istringstream(s);
  }

  // next non-blank, non-comment line
  std::istringstream header() {
    std::string s;
    while (std::getline(in_, s)) {
      ++line_;
      const auto p = s.find_first_not_of(" \t\r");
      if (p == std::string::npos || s[p] == '#') continue;
      return std::istringstream(s);
    }
    ++line_;
    fail("unexpected end of file");
  }

  void expect(std::istringstream& ss, const std::string& word) {
    std::string w;
    if (!(ss >> w) || w != word) fail("expected " + word);
  }

  long long integer(std::istringstream& ss, const char* what) {
    std::string tok;
    if (!(ss >> tok)) fail(std::string("missing ") + what);
    long long v = 0;
    auto r = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (r.ec != std::errc() || r.ptr != tok.data() + tok.size()) fail(std::string("bad integer for ") + what);
    return v;
  }

  int count(std::istringstream& ss, const char* what) {
    const long long v = integer(ss, what);
    if (v < 0 || v > 100'000'000) fail(std::string("bad count for ") + what);
    return static_cast<int>(v);
  }

  double real(std::istringstream& ss, const char* what) {
    std::string tok;
    if (!(ss >> tok)) fail(std::string("missing ") + what);
    double v = 0;
    auto r = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (r.ec != std::errc() || r.ptr != tok.data() + tok.size()) fail(std::string("bad number for ") + what);
    return v;
  }

  std::vector<int> list(std::istringstream& ss, const char* what) {
    const int k = count(ss, what);
    std::vector<int> v(k);
    for (auto& x : v) x = static_cast<int>(integer(ss, what));
    return v;
  }

  void done(std::istringstream& ss) {
    std::string extra;
    if (ss >> extra) fail("trailing token '" + extra + "'");
  }

 private:
  std::istream& in_;
  int line_ = 0;
};

}  // namespace

Instance parse_instance(std::istream& in) {
  Reader r(in);
  auto h = r.header();
  r.expect(h, "LOCUNC");
  if (r.integer(h, "version") != 1) r.fail("unsupported version");

  h = r.header();
  r.expect(h, "GRAPH");
  const int n = r.count(h, "vertex count");
  const int m = r.count(h, "edge count");
  r.done(h);
  std::vector<Edge> edges(m);
  for (auto& e : edges) {
    auto l = r.data();
    e.u = static_cast<int>(r.integer(l, "endpoint"));
    e.v = static_cast<int>(r.integer(l, "endpoint"));
    r.done(l);
  }
  Graph g;
  try {
    g = Graph(n, edges);
  } catch (const Error& ex) {
    r.fail(ex.what());
  }

  h = r.header();
  r.expect(h, "METRIC");
  std::string kind;
  h >> kind;
  MetricSpace space;
  const int metric_line = r.line();
  try {
    if (kind == "EXPLICIT") {
      const int np = r.count(h, "point count");
      std::string flag;
      const bool validate = !(h >> flag && flag == "NOVALIDATE");
      if (!flag.empty() && flag != "NOVALIDATE") r.fail("unknown flag " + flag);
      std::vector<double> d(static_cast<size_t>(np) * np);
      for (int a = 0; a < np; ++a) {
        auto l = r.data();
        for (int b = 0; b < np; ++b) d[static_cast<size_t>(a) * np + b] = r.real(l, "distance");
        r.done(l);
      }
      space = MetricSpace::explicit_matrix(np, std::move(d), validate);
    } else if (kind == "EUCLIDEAN") {
      const int np = r.count(h, "point count");
      const int dim = r.count(h, "dimension");
      r.done(h);
      if (dim < 1) r.fail("dimension must be positive");
      std::vector<double> c(static_cast<size_t>(np) * dim);
      for (int a = 0; a < np; ++a) {
        auto l = r.data();
        for (int k = 0; k < dim; ++k) c[static_cast<size_t>(a) * dim + k] = r.real(l, "coordinate");
        r.done(l);
      }
      space = MetricSpace::euclidean(dim, std::move(c));
    } else if (kind == "GRAPH") {
      const int np = r.count(h, "point count");
      const int ne = r.count(h, "edge count");
      r.done(h);
      std::vector<WeightedEdge> we(ne);
      for (auto& e : we) {
        auto l = r.data();
        e.u = static_cast<int>(r.integer(l, "endpoint"));
        e.v = static_cast<int>(r.integer(l, "endpoint"));
        e.w = r.real(l, "weight");
        r.done(l);
      }
      space = MetricSpace::graph_induced(np, std::move(we));
    } else {
      r.fail("unknown metric kind '" + kind + "'");
    }
  } catch (const ParseError&) {
    throw;
  } catch (const Error& ex) {
    throw ParseError(metric_line, ex.what());
  }

  h = r.header();
  r.expect(h, "USETS");
  const int nu = r.count(h, "set count");
  r.done(h);
  if (nu != n) r.fail("USETS count differs from the vertex count");
  std::vector<std::vector<PointId>> usets(n);
  for (auto& U : usets) {
    auto l = r.data();
    U = r.list(l, "set");
    r.done(l);
    if (U.empty()) r.fail("empty uncertainty set");
  }

  h = r.header();
  r.expect(h, "FAMILY");
  std::string fk;
  h >> fk;
  FamilyDescriptor fam;
  if (fk == "STPATH") {
    STPath f;
    f.s = static_cast<int>(r.integer(h, "s"));
    f.t = static_cast<int>(r.integer(h, "t"));
    fam = f;
  } else if (fk == "SPANNING") {
    fam = SpanningTree{};
  } else if (fk == "STEINER") {
    fam = SteinerTree{r.list(h, "terminals")};
  } else if (fk == "PMEDIAN") {
    PMedian f;
    f.p = static_cast<int>(r.integer(h, "p"));
    f.clients = r.list(h, "clients");
    f.sites = r.list(h, "sites");
    fam = f;
  } else if (fk == "ASSIGNMENT") {
    Assignment f;
    f.left = r.list(h, "left side");
    f.right = r.list(h, "right side");
    fam = f;
  } else if (fk == "EXPLICIT") {
    ExplicitList f;
    const int k = r.count(h, "member count");
    r.done(h);
    for (int i = 0; i < k; ++i) {
      auto l = r.data();
      f.members.push_back(r.list(l, "member"));
      r.done(l);
    }
    fam = f;
  } else {
    r.fail("unknown family '" + fk + "'");
  }
  if (fk != "EXPLICIT") r.done(h);
  const int family_line = r.line();

  h = r.header();
  r.expect(h, "END");
  try {
    return Instance(std::move(g), std::move(space), std::move(usets), std::move(fam));
  } catch (const Error& ex) {
    throw ParseError(family_line, ex.what());
  }
}

Instance parse_instance(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw Error("cannot open " + path);
  return parse_instance(f);
}

Instance instance_from_string(const std::string& text) {
  std::istringstream in(text);
  return parse_instance(in);
}

}  // namespace locunc
