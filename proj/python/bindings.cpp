#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "rbd/catalog.hpp"
#include "rbd/design_io.hpp"
#include "rbd/efficiency.hpp"
#include "rbd/errors.hpp"
#include "rbd/families.hpp"
#include "rbd/isomorphism.hpp"
#include "rbd/search.hpp"
#include "rbd/sylvester.hpp"

namespace py = pybind11;
using namespace rbd;

namespace {

py::object fraction(const Rational& q) {
  static py::object make = py::module_::import("fractions").attr("Fraction");
  static py::object to_int = py::module_::import("builtins").attr("int");
  return make(to_int(q.get_num().get_str()), to_int(q.get_den().get_str()));
}

py::object maybe_fraction(const std::optional<Rational>& q) {
  return q ? fraction(*q) : py::none();
}

py::object big_int(const Integer& z) {
  return py::module_::import("builtins").attr("int")(z.get_str());
}

std::vector<std::vector<std::vector<int>>> one_based(const ResolvableDesign& d) {
  std::vector<std::vector<std::vector<int>>> out;
  for (const auto& rep : d.replicates()) {
    auto& r = out.emplace_back();
    for (const auto& b : rep) {
      auto& blk = r.emplace_back();
      for (int x : b) blk.push_back(x + 1);
    }
  }
  return out;
}

ResolvableDesign from_one_based(int v, int k, const std::vector<std::vector<std::vector<int>>>& reps,
                                const std::string& label) {
  std::vector<Replicate> out;
  for (const auto& rep : reps) {
    auto& r = out.emplace_back();
    for (const auto& b : rep) {
      auto& blk = r.emplace_back();
      for (int x : b) blk.push_back(x - 1);
    }
  }
  return ResolvableDesign(v, k, std::move(out), label);
}

ResolvableDesign lookup(const std::string& name) {
  auto entry = find_catalog(name);
  if (!entry) throw py::key_error("no catalog design named '" + name + "'");
  return entry->design.with_label(entry->name);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Resolvable block designs for 36 varieties in blocks of six";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
  py::register_exception<DisconnectedError>(m, "DisconnectedError", PyExc_ArithmeticError);
  py::register_exception<ShapeError>(m, "ShapeError", PyExc_ValueError);

  py::class_<ResolvableDesign>(m, "Design")
      .def(py::init(&from_one_based), py::arg("v"), py::arg("k"), py::arg("replicates"),
           py::arg("label") = "")
      .def_property_readonly("v", &ResolvableDesign::v)
      .def_property_readonly("k", &ResolvableDesign::k)
      .def_property_readonly("r", &ResolvableDesign::r)
      .def_property_readonly("label", &ResolvableDesign::label)
      .def_property_readonly("replicates", &one_based, "Replicates as lists of 1-based blocks")
      .def("text", &write_design)
      .def("is_valid", [](const ResolvableDesign& d) { return validate(d).empty(); })
      .def("problems",
           [](const ResolvableDesign& d) {
             std::vector<std::string> out;
             for (const auto& v : validate(d)) out.push_back(v.message);
             return out;
           })
      .def("without_replicate", &ResolvableDesign::without_replicate, py::arg("index"))
      .def("prefix", &ResolvableDesign::prefix, py::arg("count"))
      .def(py::self == py::self)
      .def("__repr__", [](const ResolvableDesign& d) {
        return "<Design " + (d.label().empty() ? std::string("unnamed") : d.label()) +
               " v=" + std::to_string(d.v()) + " k=" + std::to_string(d.k()) +
               " r=" + std::to_string(d.r()) + ">";
      });

  m.def("read_design", [](const std::string& text) { return read_design(text); }, py::arg("text"));
  m.def("catalog_names", [] {
    std::vector<std::string> out;
    for (const auto& e : catalog()) out.push_back(e.name);
    return out;
  });
  m.def("catalog_design", &lookup, py::arg("name"));
  m.def("gamma", [](int r, const std::string& variant) { return gamma(r, parse_variant(variant)); },
        py::arg("r"), py::arg("variant") = "plain");
  m.def("delta", [](int r, const std::string& variant) { return delta(r, parse_variant(variant)); },
        py::arg("r"), py::arg("variant") = "plain");

  m.def("a_value", [](const ResolvableDesign& d) { return fraction(a_value(d)); }, py::arg("design"),
        "Exact A as a Fraction; raises DisconnectedError");
  m.def("a_value_float", [](const ResolvableDesign& d) { return a_value_float_oracle(d); },
        py::arg("design"));
  m.def("efficiency_factors",
        [](const ResolvableDesign& d) {
          py::list out;
          for (const auto& f : efficiency_spectrum(d).factors)
            out.append(py::make_tuple(f.exact ? fraction(*f.exact) : py::float_(f.value),
                                      f.multiplicity));
          return out;
        },
        py::arg("design"), "(factor, multiplicity) pairs, descending");
  m.def("robustness",
        [](const ResolvableDesign& d, bool exclude) {
          const auto rep = robustness(d, exclude);
          py::list per;
          for (const auto& a : rep.per_replicate) per.append(maybe_fraction(a));
          py::dict out;
          out["per_replicate"] = per;
          out["worst"] = maybe_fraction(rep.worst);
          out["average"] = maybe_fraction(rep.average);
          out["disconnected_deletions"] = rep.disconnected_deletions;
          return out;
        },
        py::arg("design"), py::arg("exclude_disconnected") = false);
  m.def("roy_residual", [](const ResolvableDesign& d) { return fraction(roy_check(d).residual); },
        py::arg("design"));

  m.def("are_isomorphic", [](const ResolvableDesign& a, const ResolvableDesign& b) {
    return are_isomorphic(a, b).isomorphic;
  });
  m.def("same_spectrum", &same_spectrum);
  m.def("concurrence_equivalent", [](const ResolvableDesign& a, const ResolvableDesign& b) {
    return concurrence_equivalent(concurrence_matrix(a), concurrence_matrix(b)).isomorphic;
  });
  m.def("automorphism_order",
        [](const ResolvableDesign& d) { return big_int(automorphism_order(d)); }, py::arg("design"));
  m.def("is_sylvester_design",
        [](const ResolvableDesign& d) { return is_sylvester_design(d).is_sylvester; },
        py::arg("design"));
  m.def("sylvester_checks", [] {
    py::dict out;
    for (const auto& c : verify_sylvester(build_sylvester()).checks) out[py::str(c.name)] = c.passed;
    return out;
  });

  m.def(
      "search",
      [](int v, int k, int r, int restarts, std::uint64_t seed, double budget, int moves,
         double initial_temperature, double final_temperature, double cooling_rate) {
        SearchConfig c;
        c.v = v;
        c.k = k;
        c.r = r;
        c.restarts = restarts;
        c.seed = seed;
        c.time_budget_seconds = budget;
        c.moves_per_temperature = moves;
        c.initial_temperature = initial_temperature;
        c.final_temperature = final_temperature;
        c.cooling_rate = cooling_rate;
        SearchResult res;
        {
          py::gil_scoped_release release;
          res = anneal(c);
        }
        py::dict out;
        out["design"] = res.design;
        out["a"] = fraction(res.a);
        out["a_float"] = res.a_float;
        out["best_restart"] = res.best_restart;
        out["budget_exhausted"] = res.budget_exhausted;
        return out;
      },
      py::arg("v") = 36, py::arg("k") = 6, py::arg("r") = 4, py::arg("restarts") = 8,
      py::arg("seed") = 42, py::arg("budget") = 0.0, py::arg("moves") = SearchConfig{}.moves_per_temperature,
      py::arg("initial_temperature") = SearchConfig{}.initial_temperature,
      py::arg("final_temperature") = SearchConfig{}.final_temperature,
      py::arg("cooling_rate") = SearchConfig{}.cooling_rate);
}
