#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "parkfact/arch.hpp"
#include "parkfact/factorization.hpp"
#include "parkfact/inverse_maps.hpp"
#include "parkfact/parking.hpp"
#include "parkfact/tree.hpp"
#include "parkfact/verify.hpp"

namespace py = pybind11;
using namespace parkfact;

namespace {

using Pair = std::pair<int, int>;

py::dict poly_dict(const BivariatePoly& p) {
  py::dict out;
  for (const auto& [e, c] : p.terms()) {
    py::object coeff = py::reinterpret_steal<py::object>(PyLong_FromString(c.str().c_str(), nullptr, 10));
    out[py::make_tuple(e.q, e.t)] = coeff;
  }
  return out;
}

std::vector<Pair> pairs(const Factorization& f) {
  std::vector<Pair> out;
  for (const auto& t : f.factors()) out.emplace_back(t.lo(), t.hi());
  return out;
}

Factorization from_pairs(const std::vector<Pair>& factors, int n) {
  std::vector<Transposition> ts;
  for (auto [a, b] : factors) ts.emplace_back(a, b);
  return Factorization(n < 0 ? static_cast<int>(factors.size()) : n, std::move(ts));
}

std::vector<std::tuple<int, int, int>> arcs(const ArchDiagram& d) {
  std::vector<std::tuple<int, int, int>> out;
  for (const auto& a : d.arcs()) out.emplace_back(a.left, a.right, a.label);
  return out;
}

ArchDiagram from_arcs(const std::vector<std::tuple<int, int, int>>& triples, int n) {
  std::vector<Arc> out;
  for (auto [l, r, label] : triples) out.push_back(Arc{l, r, label});
  return ArchDiagram(n < 0 ? static_cast<int>(triples.size()) : n, std::move(out));
}

std::vector<int> parents_of(const LabelledTree& t) { return {t.parents().begin() + 1, t.parents().end()}; }

LabelledTree tree_of(std::vector<int> parents) {
  parents.insert(parents.begin(), 0);
  return LabelledTree(std::move(parents));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Parking functions, labelled trees and minimal factorizations of full cycles";

  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const std::logic_error& e) {
      if (dynamic_cast<const std::invalid_argument*>(&e) || dynamic_cast<const std::domain_error*>(&e)) {
        PyErr_SetString(PyExc_ValueError, e.what());
      } else {
        PyErr_SetString(PyExc_RuntimeError, e.what());
      }
    }
  });

  m.def("poly_to_string", [](const py::dict& d) {
    BivariatePoly p;
    for (auto item : d) {
      auto key = item.first.cast<std::pair<unsigned, unsigned>>();
      p += BivariatePoly::monomial(key.first, key.second, BigInt(py::str(item.second).cast<std::string>()));
    }
    return p.to_string();
  }, py::arg("poly"), "Human-readable form of a {(q, t): coefficient} dict.");

  m.def("inversion_enumerator", [](int n) { return poly_dict(inversion_enumerator(n)); }, py::arg("n"),
        "Sum over trees on [n] of q^inv t^coinv, as {(q, t): coefficient}.");
  m.def("factorization_enumerator", [](const std::vector<int>& word) { return poly_dict(factorization_enumerator(FullCycle(word))); },
        py::arg("sigma"), "Sum over F_sigma of q^area_L t^area_U; sigma is the visit word [0, s_1, ..., s_n].");
  m.def("catalan_qt", [](unsigned n) { return poly_dict(catalan_qt(n)); }, py::arg("n"));
  m.def("parking_enumerators", [](int n) {
    const auto e = parking_enumerators(n);
    py::dict out;
    out["area"] = poly_dict(e.area);
    out["bounce"] = poly_dict(e.bounce);
    out["jump_cojump"] = poly_dict(e.jump_cojump);
    out["pinv_copinv"] = poly_dict(e.pinv_copinv);
    return out;
  }, py::arg("n"));

  m.def("is_unimodal", [](const std::vector<int>& word) { return is_unimodal(FullCycle(word)); }, py::arg("sigma"));
  m.def("unimodal_cycles", [](int n) {
    std::vector<std::vector<int>> out;
    for (const auto& c : unimodal_cycles(n)) out.emplace_back(c.word().begin(), c.word().end());
    return out;
  }, py::arg("n"));

  m.def("is_parking", [](const std::vector<int>& a) { return is_parking(a); }, py::arg("entries"));
  m.def("is_major", [](const std::vector<int>& b) { return is_major(b); }, py::arg("entries"));
  m.def("bounce", [](const std::vector<int>& a) { return bounce(ParkingFunction(a)); }, py::arg("parking"));
  m.def("pinv_stats", [](const std::vector<int>& a) {
    const auto s = pinv_stats(ParkingFunction(a));
    return std::make_pair(s.pinv, s.copinv);
  }, py::arg("parking"));
  m.def("theta", [](const std::vector<int>& a) { return parents_of(theta(ParkingFunction(a))); }, py::arg("parking"),
        "Parents of vertices 1..n in the tree of a parking function.");
  m.def("theta_inverse", [](const std::vector<int>& parents) {
    auto p = theta_inverse(tree_of(parents));
    return std::vector<int>(p.entries().begin(), p.entries().end());
  }, py::arg("parents"));
  m.def("tree_stats", [](const std::vector<int>& parents) {
    const auto s = tree_stats(tree_of(parents));
    py::dict out;
    out["inv"] = s.inv;
    out["coinv"] = s.coinv;
    out["depth"] = s.depth;
    return out;
  }, py::arg("parents"));

  m.def("enumerate_factorizations", [](const std::vector<int>& word) {
    std::vector<std::vector<Pair>> out;
    for_each_factorization(FullCycle(word), [&](const Factorization& f) { out.push_back(pairs(f)); });
    return out;
  }, py::arg("sigma"));
  m.def("lower", [](const std::vector<Pair>& f, int n) { return lower(from_pairs(f, n)); }, py::arg("factors"), py::arg("n") = -1);
  m.def("upper", [](const std::vector<Pair>& f, int n) { return upper(from_pairs(f, n)); }, py::arg("factors"), py::arg("n") = -1);
  m.def("areas", [](const std::vector<Pair>& f, int n) {
    const auto a = areas(from_pairs(f, n));
    return std::make_pair(a.lower, a.upper);
  }, py::arg("factors"), py::arg("n") = -1, "(area_L, area_U) of a minimal full-cycle factorization.");

  m.def("l_inverse", [](const std::vector<int>& p, const std::vector<int>& word, bool check) {
    LInverseOptions o;
    o.check_invariants = check;
    return pairs(l_inverse(ParkingFunction(p), FullCycle(word), o));
  }, py::arg("parking"), py::arg("sigma"), py::arg("check_invariants") = false);
  m.def("u_inverse", [](const std::vector<int>& b, const std::vector<int>& word) {
    return pairs(u_inverse(MajorSequence(b), FullCycle(word)));
  }, py::arg("major"), py::arg("sigma"));
  m.def("push_heights", [](const std::vector<int>& p) {
    auto mseq = push_heights(to_path(ParkingFunction(p)));
    return std::vector<int>(mseq.entries().begin(), mseq.entries().end());
  }, py::arg("parking"), "Upper sequence reconstructed by pushing labels of the lower path.");

  m.def("sigma_diagram", [](const std::vector<Pair>& f, const std::vector<int>& word) {
    const FullCycle sigma(word);
    return arcs(sigma_diagram(from_pairs(f, sigma.n()), sigma));
  }, py::arg("factors"), py::arg("sigma"), "Arcs (left, right, label) of the sigma-diagram.");
  m.def("is_valid_arch", [](const std::vector<std::tuple<int, int, int>>& a, int n) { return is_valid_arch(from_arcs(a, n)); },
        py::arg("arcs"), py::arg("n") = -1);
  m.def("caps", [](const std::vector<std::tuple<int, int, int>>& a, int n) {
    std::vector<int> labels;
    for (const auto& c : caps(from_arcs(a, n))) labels.push_back(c.label);
    return labels;
  }, py::arg("arcs"), py::arg("n") = -1, "Cap labels, left to right.");

  m.def("suite_names", &suite_names);
  m.def("run_suite", [](const std::string& name, int max_n) {
    VerifyOptions o;
    o.max_n = max_n;
    SuiteResult r;
    {
      py::gil_scoped_release release;
      r = run_suite(name, o);
    }
    py::dict out;
    out["name"] = r.name;
    out["passed"] = r.passed;
    out["checks"] = r.checks;
    out["counterexample"] = r.counterexample;
    return out;
  }, py::arg("name"), py::arg("max_n") = -1);
}
