#include "mppa/builtins.hpp"
#include "mppa/error.hpp"
#include "mppa/preproj.hpp"
#include "mppa/report.hpp"
#include "mppa/repvar.hpp"
#include "mppa/witnesses.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace mppa;

namespace {

AlgebraPtr algebra(const std::string& name, const std::string& q) { return builtin(name, {{"q", q}}); }

std::map<std::string, std::string> to_text(const std::map<std::string, Rational>& m) {
  std::map<std::string, std::string> out;
  for (const auto& [k, v] : m) out[k] = to_string(v);
  return out;
}

std::map<std::string, Rational> from_text(const std::map<std::string, std::string>& m) {
  std::map<std::string, Rational> out;
  for (const auto& [k, v] : m) out[k] = parse_rational(v);
  return out;
}

py::list verify(const std::vector<std::string>& suites, int truncation, int trials, std::uint64_t seed,
                bool flip_connes_sign, bool normalized) {
  RunOptions ro;
  ro.suite.truncation = truncation;
  ro.oracle_trials = trials;
  ro.seed = seed;
  ro.conventions.flip_connes_sign = flip_connes_sign;
  ro.conventions.normalized = normalized;
  SuiteReport rep;
  {
    py::gil_scoped_release nogil;
    rep = run_suite(suites, ro);
  }
  py::list out;
  for (const auto& o : rep.outcomes) {
    py::dict d;
    d["id"] = o.id;
    d["suite"] = o.suite;
    d["statement"] = o.statement;
    d["passed"] = o.pass();
    d["exact"] = o.exact.detail;
    d["oracle"] = o.oracle.detail;
    out.append(d);
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_mppa, m) {
  m.doc() = "exact multiplicative preprojective algebra engine";
  py::register_exception<Error>(m, "MppaError", PyExc_ValueError);

  m.def("suite_names", &suite_names);
  m.def("nf", [](const std::string& alg, const std::string& expr, const std::string& q) {
        auto a = algebra(alg, q);
        return a->print(a->parse(expr));
      },
      py::arg("algebra"), py::arg("expr"), py::arg("q") = "1");
  m.def("nf_quiver", [](const std::string& quiver_json, const std::string& expr) {
        auto a = quiver_loc(parse_quiver_json(quiver_json).quiver);
        return a->print(a->parse(expr));
      },
      py::arg("quiver_json"), py::arg("expr"));
  m.def("verify", &verify, py::arg("suites") = std::vector<std::string>{"all"}, py::arg("truncation") = 5,
        py::arg("trials") = 20, py::arg("seed") = 7, py::arg("flip_connes_sign") = false,
        py::arg("normalized") = true);
  m.def("moment_map", [](const std::string& quiver_json) {
        QuiverFile f = parse_quiver_json(quiver_json);
        MomentMap mm = moment_map(f.quiver, f.order);
        std::map<std::string, std::string> out;
        for (const auto& [v, e] : mm.mu) out[v] = mm.alg->print(e);
        return out;
      },
      py::arg("quiver_json"));
  m.def("build_upsilon", [](const std::string& quiver_json, const std::map<std::string, std::string>& q) {
        QuiverFile f = parse_quiver_json(quiver_json);
        auto qv = f.q;
        for (const auto& [k, v] : from_text(q)) qv[k] = v;
        return upsilon_json(build_upsilon(f.quiver, qv, f.order));
      },
      py::arg("quiver_json"), py::arg("q") = std::map<std::string, std::string>{});
  m.def("oracle_equals", [](const std::string& alg, const std::string& a, const std::string& b, int trials,
                            std::uint64_t seed, const std::string& q) {
        auto A = algebra(alg, q);
        return !oracle_equals(*A, *A->parse_expr(a), *A->parse_expr(b), trials, seed).distinct;
      },
      py::arg("algebra"), py::arg("a"), py::arg("b"), py::arg("trials") = 20, py::arg("seed") = 7,
      py::arg("q") = "1");
  m.def("critical_pairs", [](const std::string& alg, int depth) {
        auto A = algebra(alg, "1");
        std::vector<std::pair<std::string, bool>> out;
        for (const auto& p : A->critical_pairs(depth)) out.emplace_back(A->print_word(p.overlap), p.joinable);
        return out;
      },
      py::arg("algebra"), py::arg("depth") = 12);
  m.def("default_q", [](const std::string& quiver_json) { return to_text(parse_quiver_json(quiver_json).q); });
}
