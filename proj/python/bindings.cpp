#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "ncpos/caterpillar.hpp"
#include "ncpos/cli.hpp"
#include "ncpos/factorization.hpp"
#include "ncpos/geom_tree.hpp"
#include "ncpos/labeling.hpp"
#include "ncpos/ncpl.hpp"
#include "ncpos/qsym.hpp"

namespace py = pybind11;
using namespace ncpos;

namespace {

using PyChord = std::pair<int, int>;

PyChord to_py(const Chord& c) { return {c.a(), c.b()}; }

std::vector<std::string> words(const std::vector<FactorSequence>& ws) {
  std::vector<std::string> out;
  out.reserve(ws.size());
  for (const auto& w : ws) out.push_back(w.to_string());
  return out;
}

FactorSequence word(const std::string& text, int n) { return FactorSequence::parse(text, n); }

IndexSet to_set(const std::vector<int>& v) {
  IndexSet s;
  for (int x : v) s.insert(x);
  return s;
}

py::object fraction(const Rational& r) {
  return py::module_::import("fractions").attr("Fraction")(r.str());
}

py::dict schur_dict(const SchurExpansion& s) {
  py::dict d;
  for (const auto& [shape, c] : s.coeffs) d[py::tuple(py::cast(shape.parts()))] = fraction(c);
  return d;
}

py::object expand(const QSymExpr& q) {
  const auto r = expand_in_schur(q);
  if (std::holds_alternative<NotSymmetric>(r)) return py::none();
  return schur_dict(std::get<SchurExpansion>(r));
}

py::dict qsym_dict(const QSymExpr& q) {
  py::dict d;
  for (const auto& [set, c] : q.coeffs()) d[py::tuple(py::cast(set.members()))] = c;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Transposition factorizations of the n-cycle, caterpillars and their descent statistics";

  m.def("enumerate_factorizations", [](int n) { return words(enumerate_factorizations(n)); }, py::arg("n"),
        "F_n as word strings, lexicographic.");
  m.def("enumerate_linearly_ordered", [](int n) { return words(enumerate_linearly_ordered(n)); }, py::arg("n"),
        "U_n as word strings, lexicographic.");
  m.def("is_cycle_factorization", [](const std::string& w, int n) { return is_cycle_factorization(word(w, n)); },
        py::arg("word"), py::arg("n") = 0);
  m.def("is_linearly_ordered", [](const std::string& w, int n) { return is_linearly_ordered(word(w, n)); },
        py::arg("word"), py::arg("n") = 0);
  m.def("gy_conditions", [](const std::string& w, int n) { return gy_conditions(word(w, n)); }, py::arg("word"),
        py::arg("n") = 0);

  m.def("descent_set", [](const std::string& w) { return descent_set_direct(word(w, 0)).members(); },
        py::arg("word"), "Descent positions of a linearly ordered word.");
  m.def("chain_descent", [](const std::string& w) { return chain_descent(word(w, 0)).members(); }, py::arg("word"),
        "Descent positions of the labeling permutation.");
  m.def("phi", [](const std::string& w) { return phi(word(w, 0)).images(); }, py::arg("word"),
        "Labeling permutation as its image list.");
  m.def("main_index", [](const std::string& w) { return main_index(word(w, 0)); }, py::arg("word"));
  m.def("reconstruct",
        [](int n, int main, const std::vector<int>& descents) {
          return reconstruct(n, main, to_set(descents)).word().to_string();
        },
        py::arg("n"), py::arg("main"), py::arg("descents"));
  m.def("descent_distribution",
        [](int n) {
          py::dict d;
          for (const auto& [j, c] : descent_distribution(n)) d[py::tuple(py::cast(j.members()))] = c;
          return d;
        },
        py::arg("n"));

  m.def("geometric_tree", [](const std::string& w, int n) {
        std::vector<PyChord> out;
        const auto tree = build_geometric_graph(word(w, n));
        for (const auto& e : tree.edges()) out.push_back(to_py(e));
        return out;
      },
      py::arg("word"), py::arg("n") = 0, "Sorted edges; raises ValueError unless the chords form a noncrossing tree.");
  m.def("gy_relation", [](const std::string& w, int n) {
        std::vector<std::pair<PyChord, PyChord>> out;
        for (const auto& [a, b] : GYOrder(build_geometric_graph(word(w, n))).relation_pairs()) {
          out.emplace_back(to_py(a), to_py(b));
        }
        return out;
      },
      py::arg("word"), py::arg("n") = 0, "Strict order pairs (e, f) with e below f.");
  m.def("is_convex_caterpillar",
        [](const std::string& w, int n) { return is_convex_caterpillar(build_geometric_graph(word(w, n))); },
        py::arg("word"), py::arg("n") = 0);

  m.def("noncrossing_partitions", [](int n) {
        std::vector<std::vector<Block>> out;
        for (const auto& p : enumerate_noncrossing_partitions(n)) out.push_back(p.blocks());
        return out;
      },
      py::arg("n"));
  m.def("chain_of_factorization", [](const std::string& w) {
        std::vector<std::vector<Block>> out;
        const auto chain = chain_of_factorization(word(w, 0));
        for (const auto& p : chain.partitions()) out.push_back(p.blocks());
        return out;
      },
      py::arg("word"));

  m.def("qsym_of_descents", [](int degree, const std::vector<std::vector<int>>& sets) {
        std::vector<IndexSet> d;
        for (const auto& s : sets) d.push_back(to_set(s));
        return qsym_dict(qsym_of_descent_multiset(degree, d));
      },
      py::arg("degree"), py::arg("descent_sets"), "Fundamental coefficients keyed by descent tuple.");
  m.def("hook_identity_rhs", [](int n) { return qsym_dict(hook_identity_rhs(n)); }, py::arg("n"));
  m.def("expand_in_schur", [](int degree, const std::vector<std::vector<int>>& sets) {
        std::vector<IndexSet> d;
        for (const auto& s : sets) d.push_back(to_set(s));
        return expand(qsym_of_descent_multiset(degree, d));
      },
      py::arg("degree"), py::arg("descent_sets"),
      "Schur coefficients (Fractions) keyed by partition, or None when not symmetric.");
  m.def("expand_linear", [](int n) {
        std::vector<IndexSet> d;
        for (const auto& u : enumerate_linearly_ordered(n)) d.push_back(descent_set_direct(u));
        return expand(qsym_of_descent_multiset(n - 1, d));
      },
      py::arg("n"), "Schur expansion of the descent generating function of U_n.");

  m.def("run_cli", [](const std::vector<std::string>& args) {
        std::ostringstream out;
        std::ostringstream err;
        const int code = cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Runs the command line tool in-process; returns (exit_code, stdout, stderr).");
}
