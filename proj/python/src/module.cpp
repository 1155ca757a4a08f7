#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dkcat/io.hpp"

namespace py = pybind11;
using namespace dkcat;

namespace {

std::optional<Field> optional_field(const std::optional<std::string>& name) {
  if (!name) return std::nullopt;
  return Field::parse(*name);
}

std::string verify_interval(const std::string& builtin, const std::optional<std::string>& field,
                            const std::string& mode_name, int truncation) {
  Mode mode = parse_mode(mode_name);
  Field f = optional_field(field).value_or(Field::rationals());
  AxiomReport co, cyl;
  if (builtin == "chain") {
    co = verify_cocategory(chain_interval(f), mode);
    cyl = verify_cylinder(chain_interval(f));
  } else if (builtin == "smod") {
    co = verify_cocategory(smod_interval(f, truncation), mode);
    cyl = verify_cylinder(smod_interval(f, truncation));
  } else if (builtin == "cat") {
    co = verify_cocategory(cat_interval(), mode);
    cyl = verify_cylinder(cat_interval());
  } else {
    throw std::invalid_argument("unknown builtin '" + builtin + "' (chain, smod, cat)");
  }
  return Json{{"cocategory", to_json(co)}, {"cylinder", to_json(cyl)}, {"passed", co.passed() && cyl.passed()}}.dump();
}

std::string verify_hopf(const std::string& algebra, const std::optional<std::string>& field,
                        const std::string& mode_name, const std::string& actions) {
  HopfAlgebra h = hopf_from_json(Json::parse(algebra), optional_field(field));
  HopfInterval iv = hopf_interval(h, parse_action_kind(actions));
  AxiomReport co = verify_cocategory(iv, parse_mode(mode_name));
  AxiomReport cyl = verify_cylinder(iv);
  return Json{{"cocategory", to_json(co)},
              {"cylinder", to_json(cyl)},
              {"semisimple", is_semisimple(h)},
              {"passed", co.passed() && cyl.passed()}}
      .dump();
}

std::string dold_kan(std::size_t trials, std::uint64_t seed, int max_degree, std::size_t max_rank,
                     const std::string& field, bool inject_fault) {
  DoldKanOptions o;
  o.field = Field::parse(field);
  o.trials = trials;
  o.seed = seed;
  o.max_degree = max_degree;
  o.max_rank = max_rank;
  if (inject_fault) o.signs = ShuffleSigns::unsigned_terms;
  return to_json(run_dold_kan_suite(o)).dump();
}

std::string path_object(const std::string& category, const std::optional<std::string>& field,
                        std::size_t max_objects) {
  auto a = std::make_shared<const ChainCategory>(category_from_json(Json::parse(category), optional_field(field)));
  CategoryReport r = validate(*a);
  if (!r.ok) throw StructuralError("category is invalid: " + r.witness);
  PathObjectBundle b = build_path_object(a, chain_interval(a->field()), max_objects);
  return path_object_summary(b, verify_path_object(b)).dump();
}

std::string dk_check(const std::string& functor, const std::optional<std::string>& field) {
  ChainFunctor f = functor_from_json(Json::parse(functor), optional_field(field));
  CategoryReport r = validate(f);
  if (!r.ok) throw StructuralError("not a functor: " + r.witness);
  return to_json(dk_verdict(f)).dump();
}

std::string characterization(std::size_t trials, std::uint64_t seed, const std::string& field) {
  return to_json(run_characterization_suite(Field::parse(field), trials, seed)).dump();
}

std::string suite_category(const std::string& name, const std::string& field) {
  for (const auto& [n, c] : path_object_suite(Field::parse(field)))
    if (n == name) return to_json(c).dump();
  throw std::invalid_argument("unknown suite category '" + name + "'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact checks for chain complexes, simplicial modules and dg-categories";

  static py::exception<Error> error(m, "Error");
  py::register_exception<ShapeError>(m, "ShapeError", error.ptr());
  py::register_exception<FieldMismatch>(m, "FieldMismatch", error.ptr());
  py::register_exception<UnsupportedField>(m, "UnsupportedField", error.ptr());
  py::register_exception<StructuralError>(m, "StructuralError", error.ptr());
  py::register_exception<FormatError>(m, "FormatError", error.ptr());

  py::class_<Field>(m, "Field")
      .def_static("rationals", &Field::rationals)
      .def_static("prime", &Field::prime, py::arg("p"))
      .def_static("parse", &Field::parse, py::arg("name"))
      .def_property_readonly("name", &Field::name)
      .def_property_readonly("characteristic", &Field::characteristic)
      .def_property_readonly("is_prime_field", &Field::is_prime_field)
      .def("__eq__", [](const Field& a, const Field& b) { return a == b; })
      .def("__repr__", [](const Field& f) { return "Field(" + f.name() + ")"; });

  py::class_<ChainComplex>(m, "ChainComplex")
      .def_static("unit", &ChainComplex::unit, py::arg("field"))
      .def_static("zero", &ChainComplex::zero, py::arg("field"))
      .def_static("sphere", &ChainComplex::sphere, py::arg("field"), py::arg("n"))
      .def_static("disk", &ChainComplex::disk, py::arg("field"), py::arg("n"))
      .def_static(
          "from_json", [](const std::string& s, const Field& f) { return complex_from_json(Json::parse(s), f); },
          py::arg("text"), py::arg("field"))
      .def("to_json", [](const ChainComplex& c) { return canonical_dump(to_json(c)); })
      .def_property_readonly("field", &ChainComplex::field)
      .def_property_readonly("ranks", &ChainComplex::ranks)
      .def_property_readonly("top", &ChainComplex::top)
      .def("is_valid", [](const ChainComplex& c) { return validate(c).ok; })
      .def("homology", [](const ChainComplex& c) { return homology(c); })
      .def("__eq__", [](const ChainComplex& a, const ChainComplex& b) { return a == b; });

  m.def("tensor", py::overload_cast<const ChainComplex&, const ChainComplex&>(&tensor), py::arg("c"), py::arg("d"));
  m.def(
      "normalize_gamma",
      [](const ChainComplex& c, int truncation) { return normalize(gamma(c, truncation)); }, py::arg("complex"),
      py::arg("truncation"));
  m.def("chain_interval_json", [](const Field& f) { return canonical_dump(to_json(chain_interval(f))); },
        py::arg("field"));

  m.def("_verify_interval", &verify_interval, py::arg("builtin"), py::arg("field") = py::none(),
        py::arg("mode") = "strict", py::arg("truncation") = 2);
  m.def("_verify_hopf", &verify_hopf, py::arg("algebra"), py::arg("field") = py::none(), py::arg("mode") = "strict",
        py::arg("actions") = "trivial");
  m.def("_dold_kan", &dold_kan, py::arg("trials"), py::arg("seed"), py::arg("max_degree"), py::arg("max_rank"),
        py::arg("field"), py::arg("inject_fault"));
  m.def("_path_object", &path_object, py::arg("category"), py::arg("field") = py::none(),
        py::arg("max_objects") = 64);
  m.def("_dk_check", &dk_check, py::arg("functor"), py::arg("field") = py::none());
  m.def("_characterization", &characterization, py::arg("trials"), py::arg("seed"), py::arg("field"));
  m.def("_suite_category", &suite_category, py::arg("name"), py::arg("field"));
}
