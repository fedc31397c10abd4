#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "locunc/adr.hpp"
#include "locunc/approx.hpp"
#include "locunc/errors.hpp"
#include "locunc/evalc.hpp"
#include "locunc/generators.hpp"
#include "locunc/io.hpp"
#include "locunc/robust_cut.hpp"
#include "locunc/sp_robust.hpp"

namespace py = pybind11;
using namespace locunc;

PYBIND11_MODULE(_locunc, m) {
  m.doc() = "robust combinatorial optimization under locational uncertainty";

  static py::exception<Error> error(m, "Error", PyExc_RuntimeError);
  static py::exception<ParseError> parse_error(m, "ParseError", error.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ParseError& e) {
      parse_error(e.what());
    } catch (const Error& e) {
      error(e.what());
    }
  });

  py::class_<Instance>(m, "Instance")
      .def_property_readonly("n", &Instance::n)
      .def_property_readonly("m", &Instance::m)
      .def_property_readonly("sigma", &Instance::sigma)
      .def_property_readonly("edges",
                             [](const Instance& i) {
                               std::vector<std::pair<int, int>> out;
                               for (const auto& e : i.graph().edges()) out.push_back({e.u, e.v});
                               return out;
                             })
      .def_property_readonly("usets", &Instance::usets)
      .def_property_readonly("family", [](const Instance& i) { return family_name(i.family()); })
      .def("to_string", [](const Instance& i) { return instance_to_string(i); })
      .def("__repr__", [](const Instance& i) {
        return "<Instance n=" + std::to_string(i.n()) + " m=" + std::to_string(i.m()) + " family=" +
               family_name(i.family()) + ">";
      });

  m.def("parse_instance", [](const std::string& text) { return instance_from_string(text); }, py::arg("text"));
  m.def("load_instance", [](const std::string& path) { return parse_instance(path); }, py::arg("path"));

  m.def(
      "eval_c",
      [](const Instance& inst, EdgeSubset F) {
        std::sort(F.begin(), F.end());
        EvalResult r = eval_c(inst, F);
        return py::make_tuple(r.value, r.witness.choice);
      },
      py::arg("instance"), py::arg("edges"), "worst-case cost and a maximizing scenario");
  m.def(
      "eval_c_bruteforce",
      [](const Instance& inst, EdgeSubset F) {
        std::sort(F.begin(), F.end());
        return eval_c_bruteforce(inst, F).value;
      },
      py::arg("instance"), py::arg("edges"));
  m.def(
      "cmax",
      [](const Instance& inst, EdgeSubset F) {
        std::sort(F.begin(), F.end());
        return cmax(inst, F);
      },
      py::arg("instance"), py::arg("edges"));

  m.def(
      "solve",
      [](const Instance& inst, const std::string& algo) {
        EdgeSubset F;
        int iterations = 0;
        if (algo == "exact") {
          CutResult r = cutting_plane(inst);
          F = r.F;
          iterations = static_cast<int>(r.state.log.size());
        } else if (algo == "center") {
          F = heuristic_center(inst);
        } else if (algo == "dmax") {
          F = heuristic_dmax(inst);
        } else {
          throw py::value_error("algo must be exact, center or dmax");
        }
        py::dict d;
        d["edges"] = F;
        d["value"] = eval_c(inst, F).value;
        d["iterations"] = iterations;
        return d;
      },
      py::arg("instance"), py::arg("algo") = "exact");

  m.def(
      "certify",
      [](const Instance& inst, EdgeSubset F) {
        std::sort(F.begin(), F.end());
        Certification c = certify_ratio(inst, F);
        py::dict d;
        d["observed"] = c.observed;
        d["bound"] = c.bound.value;
        d["structure"] = structure_name(c.bound.structure);
        d["ok"] = c.ok;
        d["cmax"] = c.cmax;
        d["c"] = c.c;
        return d;
      },
      py::arg("instance"), py::arg("edges"));

  m.def(
      "robust_sp",
      [](const Instance& inst, std::optional<double> eps) {
        SpResult r = eps ? static_cast<SpResult>(robust_sp_fptas(inst, *eps)) : robust_sp_exact(inst);
        py::dict d;
        d["edges"] = r.path;
        d["vertices"] = r.vertices;
        d["value"] = r.value;
        d["n_profiles"] = r.stats.n_profiles;
        d["n_values"] = r.stats.n_values;
        return d;
      },
      py::arg("instance"), py::arg("epsilon") = py::none());

  m.def("gen_format", &gen_format, py::arg("kappa"), py::arg("delta"), py::arg("sigma"), py::arg("seed"));
  m.def(
      "gen_planar_roadnet",
      [](int n, int m_, int clients, int sites, int p, int sigma, std::uint64_t seed) {
        return gen_planar_roadnet(n, m_, clients, sites, p, sigma, seed).instance;
      },
      py::arg("n"), py::arg("m"), py::arg("clients"), py::arg("sites"), py::arg("p"), py::arg("sigma"),
      py::arg("seed"));
  auto tight = [&](const char* name, TightInstance (*fn)(int)) {
    m.def(
        name, [fn](int n) { auto t = fn(n); return py::make_tuple(t.instance, t.F); }, py::arg("n"));
  };
  tight("gen_tight_path", &gen_tight_path);
  tight("gen_tight_cycle", &gen_tight_cycle);
  tight("gen_tight_clique", &gen_tight_clique);
  tight("gen_tight_star", &gen_tight_star);

  m.def(
      "adr_model", [](const Instance& inst) { return model_to_string(build_adr_model(inst)); }, py::arg("instance"));
  m.def(
      "adr_bound",
      [](const Instance& inst, EdgeSubset F) {
        std::sort(F.begin(), F.end());
        return adr_bound_evaluate(build_adr_model(inst), F);
      },
      py::arg("instance"), py::arg("edges"));
}
