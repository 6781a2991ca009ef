#include <pybind11/pybind11.h>

#include <optional>
#include <string>
#include <variant>

#include "hopfsc/bicrossed.hpp"
#include "hopfsc/drinfeld.hpp"
#include "hopfsc/interchange.hpp"
#include "hopfsc/morphism.hpp"
#include "hopfsc/reproduce.hpp"

// Python face of the engine. Every function speaks JSON text in the same
// formats the command-line tool reads and writes; the pure-python package
// wrapping this module turns those strings into dicts.

namespace py = pybind11;

namespace {

using namespace hopfsc;

std::optional<FieldId> field_arg(const std::string &field) {
  if (field.empty()) return std::nullopt;
  return parse_field_id(field);
}

Json parse_text(const std::string &text, const char *what) {
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded()) throw input_error(std::string(what) + " is not valid JSON");
  return j;
}

AnyAlgebra algebra_arg(const std::string &text) { return algebra_from_json(parse_text(text, "algebra argument")); }
AnyPair pair_arg(const std::string &text) { return pair_from_json(parse_text(text, "pair argument")); }

// The Fp-only operations need verified pairs over one common prime.
MatchedPairData<Fp> verified_fp_pair(const std::string &text, const char *what) {
  AnyPair mp = pair_arg(text);
  if (!std::holds_alternative<MatchedPairData<Fp>>(mp))
    throw input_error(std::string(what) + " must live over a prime field");
  ensure_verified(mp, what);
  return std::get<MatchedPairData<Fp>>(mp);
}

std::string algebra_text(const std::string &designator, const std::string &field) {
  AnyAlgebra a = resolve_algebra(designator, field_arg(field));
  return std::visit([](const auto &H) { return dump_json(algebra_to_json(H)); }, a);
}

std::string pair_text(const std::string &designator, const std::string &field) {
  AnyPair mp = resolve_pair(designator, field_arg(field));
  return dump_json(pair_to_json(mp));
}

std::string verify_text(const std::string &algebra_json) {
  AnyAlgebra a = algebra_arg(algebra_json);
  return std::visit([](auto &H) { return dump_json(axiom_checks_json(check_hopf_axioms(H))); }, a);
}

std::string check_pair_text(const std::string &pair_json) {
  AnyPair mp = pair_arg(pair_json);
  return std::visit(
      [](auto &p) {
        ensure_verified(p.A, "factor A");
        ensure_verified(p.H, "factor H");
        return dump_json(pair_checks_json(check_matched_pair(p)));
      },
      mp);
}

std::string probe_text(const std::string &algebra_json, const std::string &kind) {
  AnyAlgebra a = algebra_arg(algebra_json);
  ensure_verified(a, "algebra argument");
  return std::visit([&](const auto &H) { return dump_json(probe_json(H, kind)); }, a);
}

std::string bicross_text(const std::string &pair_json) {
  AnyPair mp = pair_arg(pair_json);
  ensure_verified(mp, "pair argument");
  return std::visit([](const auto &p) { return dump_json(algebra_to_json(bicrossed_product(p))); }, mp);
}

std::string double_text(const std::string &algebra_json) {
  AnyAlgebra a = algebra_arg(algebra_json);
  ensure_verified(a, "algebra argument");
  return std::visit([](const auto &H) { return dump_json(algebra_to_json(drinfeld_double(H))); }, a);
}

std::string census_text(std::uint32_t prime) {
  return dump_json(census_json(prime, enumerate_matched_pairs_h4h4(prime)));
}

std::string isomorphic_text(const std::string &pair_e, const std::string &pair_f) {
  MatchedPairData<Fp> E = verified_fp_pair(pair_e, "first pair");
  MatchedPairData<Fp> F = verified_fp_pair(pair_f, "second pair");
  if (E.A.field.p != F.A.field.p) throw input_error("the two pairs live over different prime fields");
  IsoResult r = are_isomorphic(E, F);
  Json j = Json::object();
  j["isomorphic"] = r.isomorphic;
  if (r.witness) j["witness_matrix"] = detail::mat_to_json(*r.witness);
  return dump_json(j);
}

std::string automorphisms_text(const std::string &pair_json) {
  GroupReport g = automorphism_group(verified_fp_pair(pair_json, "pair argument"));
  Json j = Json::object();
  j["order"] = g.order;
  j["abelian"] = g.abelian;
  j["one_parameter"] = g.one_parameter;
  j["relations_verified"] = g.relations_verified;
  if (!g.detail.empty()) j["detail"] = g.detail;
  return dump_json(j);
}

std::string reproduce_text(std::uint32_t prime) { return dump_json(reproduce_to_json(reproduce(prime))); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact structure-constant engine for finite-dimensional Hopf algebras";

  py::register_exception<input_error>(m, "InputError", PyExc_ValueError);
  py::register_exception<math_check_error>(m, "MathCheckError", PyExc_ValueError);

  m.def("algebra", &algebra_text, py::arg("designator"), py::arg("field") = std::string(),
        "Resolve a preset name (h4, kc2, h16:<scale>, h4xh4) or a JSON file to algebra JSON.");
  m.def("pair", &pair_text, py::arg("designator"), py::arg("field") = std::string(),
        "Resolve a pair preset (trivial, canonical:<scale>, double) or a JSON file to pair JSON.");
  m.def("verify", &verify_text, py::arg("algebra_json"), "Run the Hopf axiom checks; returns a report.");
  m.def("check_pair", &check_pair_text, py::arg("pair_json"),
        "Run the matched-pair compatibility checks; returns a report.");
  m.def("probe", &probe_text, py::arg("algebra_json"), py::arg("kind"),
        "Report grouplikes, primitives, integrals, or semisimple for a verified algebra.");
  m.def("bicross", &bicross_text, py::arg("pair_json"), "Bicrossed product of a matched pair, as algebra JSON.");
  m.def("drinfeld_double", &double_text, py::arg("algebra_json"),
        "Drinfel'd double of a Hopf algebra, as algebra JSON.");
  m.def("census", &census_text, py::arg("prime"), py::call_guard<py::gil_scoped_release>(),
        "Enumerate all matched pairs of two Sweedler algebras over F_p.");
  m.def("isomorphic", &isomorphic_text, py::arg("pair_e"), py::arg("pair_f"),
        py::call_guard<py::gil_scoped_release>(),
        "Decide whether two bicrossed products are isomorphic; includes a witness matrix when they are.");
  m.def("automorphisms", &automorphisms_text, py::arg("pair_json"), py::call_guard<py::gil_scoped_release>(),
        "Automorphism group of a bicrossed product: order, commutativity, composition relations.");
  m.def("reproduce", &reproduce_text, py::arg("prime"), py::call_guard<py::gil_scoped_release>(),
        "Census, isomorphism classes, automorphism orders, and the double, over one prime.");
}
