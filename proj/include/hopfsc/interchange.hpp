#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

#include "hopfsc/bicrossed.hpp"
#include "hopfsc/drinfeld.hpp"
#include "hopfsc/hopf.hpp"
#include "hopfsc/matched_pair.hpp"
#include "hopfsc/presets.hpp"
#include "hopfsc/probe.hpp"
#include "hopfsc/scalar.hpp"

// JSON interchange for algebras and matched pairs, plus name-based lookup of
// the built-in presets. The on-disk algebra format is
//
//   { "field": "Q" | {"Fp": p},
//     "dim": n,
//     "basis": ["1", "g", ...],
//     "mult":  [[i, j, k, "c"], ...],      e_i e_j = sum_k c e_k
//     "unit":  ["c", ...],
//     "comult": [[i, j, k, "c"], ...],     Delta(e_i) = sum c e_j (x) e_k
//     "counit": ["c", ...],
//     "antipode": [["c", ...], ...] }      row-major matrix, column = source
//
// Scalars travel as decimal strings ("3", "-1/2", a residue mod p); tensor
// entries not listed are zero. A matched pair is two algebras plus two action
// tables in the same sparse triple format:
//
//   { "A": {...}, "H": {...},
//     "left_action":  [[i, j, k, "c"], ...],   e_i |> e_j = sum_k c e_k in A
//     "right_action": [[i, j, k, "c"], ...] }  e_i <| e_j = sum_k c e_k in H
//
// Serialization is deterministic: keys in the order above, sparse entries in
// row-major index order, no floating point anywhere.

namespace hopfsc {

using Json = nlohmann::ordered_json;

// A deserialized algebra lives over one of the two supported scalar types.
using AnyAlgebra = std::variant<HopfAlgebra<Rat>, HopfAlgebra<Fp>>;
using AnyPair = std::variant<MatchedPairData<Rat>, MatchedPairData<Fp>>;

// A mathematical check that failed on user-supplied data. CLI callers map
// this to a distinct exit code from input_error (malformed data).
class math_check_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Runtime tag for the scalar field, used wherever the field is chosen by
// command-line text rather than a template parameter.
struct FieldId {
  bool is_rational = true;
  std::uint32_t p = 0;

  static FieldId rationals() { return FieldId{true, 0}; }
  static FieldId prime(std::uint32_t p) {
    Fp::field(p);  // validates
    return FieldId{false, p};
  }

  friend bool operator==(const FieldId &, const FieldId &) = default;
};

// "Q" or "Fp:<p>", the syntax of the --field flag.
inline FieldId parse_field_id(const std::string &text) {
  if (text == "Q") return FieldId::rationals();
  if (text.rfind("Fp:", 0) == 0) {
    const std::string digits = text.substr(3);
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
      throw input_error("bad field \"" + text + "\": expected Q or Fp:<odd prime>");
    return FieldId::prime(static_cast<std::uint32_t>(std::stoul(digits)));
  }
  throw input_error("bad field \"" + text + "\": expected Q or Fp:<odd prime>");
}

inline std::string field_id_text(const FieldId &f) {
  return f.is_rational ? "Q" : "Fp:" + std::to_string(f.p);
}

inline FieldId field_of(const AnyAlgebra &a) {
  if (std::holds_alternative<HopfAlgebra<Rat>>(a)) return FieldId::rationals();
  return FieldId::prime(std::get<HopfAlgebra<Fp>>(a).field.p);
}

inline FieldId field_of(const AnyPair &mp) {
  if (std::holds_alternative<MatchedPairData<Rat>>(mp)) return FieldId::rationals();
  return FieldId::prime(std::get<MatchedPairData<Fp>>(mp).A.field.p);
}

namespace detail {

inline Json field_to_json(const Rat::Desc &) { return Json("Q"); }
inline Json field_to_json(const Fp::Desc &d) {
  Json j = Json::object();
  j["Fp"] = d.p;
  return j;
}

template <class K>
Json tensor_to_json(const Tensor3<K> &t) {
  Json arr = Json::array();
  for (int i = 0; i < t.d1(); ++i)
    for (int j = 0; j < t.d2(); ++j)
      for (int k = 0; k < t.d3(); ++k)
        if (!t.at(i, j, k).is_zero()) arr.push_back(Json::array({i, j, k, t.at(i, j, k).str()}));
  return arr;
}

template <class K>
Json vec_to_json(const Vec<K> &v) {
  Json arr = Json::array();
  for (const K &c : v) arr.push_back(c.str());
  return arr;
}

template <class K>
Json mat_to_json(const Mat<K> &m) {
  Json rows = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

inline const Json &need(const Json &j, const char *key, const char *what) {
  if (!j.is_object())
    throw input_error(std::string(what) + " must be a JSON object");
  auto it = j.find(key);
  if (it == j.end())
    throw input_error(std::string(what) + " is missing the \"" + key + "\" key");
  return *it;
}

template <class K>
K scalar_from_json(typename K::Desc d, const Json &j, const std::string &where) {
  if (j.is_number_integer()) return K::from_int(d, j.get<long>());
  if (!j.is_string())
    throw input_error("scalar in " + where + " must be a decimal string");
  std::optional<K> v = K::parse(d, j.get<std::string>());
  if (!v) throw input_error("bad scalar \"" + j.get<std::string>() + "\" in " + where);
  return *v;
}

inline int index_from_json(const Json &j, int bound, const std::string &where) {
  if (!j.is_number_integer())
    throw input_error("index in " + where + " must be an integer");
  long v = j.get<long>();
  if (v < 0 || v >= bound)
    throw input_error("index " + std::to_string(v) + " out of range in " + where);
  return static_cast<int>(v);
}

// Sparse [[i, j, k, "c"], ...] triples; repeated indices accumulate.
template <class K>
Tensor3<K> tensor_from_json(typename K::Desc d, const Json &arr, int d1, int d2, int d3, const std::string &where) {
  if (!arr.is_array()) throw input_error(where + " must be an array of [i, j, k, coefficient] entries");
  Tensor3<K> t(d1, d2, d3, K::zero(d));
  for (const Json &e : arr) {
    if (!e.is_array() || e.size() != 4)
      throw input_error("each " + where + " entry must be [i, j, k, coefficient]");
    int i = index_from_json(e[0], d1, where);
    int j = index_from_json(e[1], d2, where);
    int k = index_from_json(e[2], d3, where);
    t.at(i, j, k) += scalar_from_json<K>(d, e[3], where);
  }
  return t;
}

template <class K>
Vec<K> vec_from_json(typename K::Desc d, const Json &arr, int n, const std::string &where) {
  if (!arr.is_array() || arr.size() != static_cast<std::size_t>(n))
    throw input_error(where + " must be an array of " + std::to_string(n) + " scalars");
  Vec<K> v = zero_vec<K>(n, d);
  for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = scalar_from_json<K>(d, arr[static_cast<std::size_t>(i)], where);
  return v;
}

template <class K>
Mat<K> mat_from_json(typename K::Desc d, const Json &rows, int n, const std::string &where) {
  if (!rows.is_array() || rows.size() != static_cast<std::size_t>(n))
    throw input_error(where + " must be a " + std::to_string(n) + "x" + std::to_string(n) + " array of scalars");
  Mat<K> m(n, n, K::zero(d));
  for (int i = 0; i < n; ++i) {
    const Json &row = rows[static_cast<std::size_t>(i)];
    if (!row.is_array() || row.size() != static_cast<std::size_t>(n))
      throw input_error(where + " must be a " + std::to_string(n) + "x" + std::to_string(n) + " array of scalars");
    for (int j = 0; j < n; ++j) m.at(i, j) = scalar_from_json<K>(d, row[static_cast<std::size_t>(j)], where);
  }
  return m;
}

}  // namespace detail

template <class K>
Json algebra_to_json(const HopfAlgebra<K> &H) {
  Json j = Json::object();
  j["field"] = detail::field_to_json(H.field);
  j["dim"] = H.dim;
  j["basis"] = H.basis;
  j["mult"] = detail::tensor_to_json(H.mult);
  j["unit"] = detail::vec_to_json(H.unit);
  j["comult"] = detail::tensor_to_json(H.comult);
  j["counit"] = detail::vec_to_json(H.counit);
  j["antipode"] = detail::mat_to_json(H.antipode);
  return j;
}

// Field tag of a serialized algebra, without deserializing the rest.
inline FieldId field_of_json(const Json &j) {
  const Json &f = detail::need(j, "field", "algebra JSON");
  if (f.is_string() && f.get<std::string>() == "Q") return FieldId::rationals();
  if (f.is_object() && f.contains("Fp") && f["Fp"].is_number_integer()) {
    long p = f["Fp"].get<long>();
    if (p < 3) throw input_error("bad \"field\" in algebra JSON: Fp characteristic must be an odd prime");
    return FieldId::prime(static_cast<std::uint32_t>(p));
  }
  throw input_error("bad \"field\" in algebra JSON: expected \"Q\" or {\"Fp\": p}");
}

// Structure constants are read verbatim; the result is NOT verified. Run
// verify() before handing it to operations that require a Hopf algebra.
template <class K>
HopfAlgebra<K> algebra_from_json(const Json &j, typename K::Desc d) {
  const Json &dimj = detail::need(j, "dim", "algebra JSON");
  if (!dimj.is_number_integer() || dimj.get<long>() < 1 || dimj.get<long>() > 4096)
    throw input_error("algebra JSON \"dim\" must be a positive integer");
  const int n = static_cast<int>(dimj.get<long>());

  HopfAlgebra<K> H;
  H.field = d;
  H.dim = n;

  const Json &names = detail::need(j, "basis", "algebra JSON");
  if (!names.is_array() || names.size() != static_cast<std::size_t>(n))
    throw input_error("algebra JSON \"basis\" must list one name per dimension");
  for (const Json &s : names) {
    if (!s.is_string()) throw input_error("algebra JSON \"basis\" entries must be strings");
    H.basis.push_back(s.get<std::string>());
  }

  H.mult = detail::tensor_from_json<K>(d, detail::need(j, "mult", "algebra JSON"), n, n, n, "\"mult\"");
  H.unit = detail::vec_from_json<K>(d, detail::need(j, "unit", "algebra JSON"), n, "\"unit\"");
  H.comult = detail::tensor_from_json<K>(d, detail::need(j, "comult", "algebra JSON"), n, n, n, "\"comult\"");
  H.counit = detail::vec_from_json<K>(d, detail::need(j, "counit", "algebra JSON"), n, "\"counit\"");
  H.antipode = detail::mat_from_json<K>(d, detail::need(j, "antipode", "algebra JSON"), n, "\"antipode\"");
  validate_shape(H);
  return H;
}

inline AnyAlgebra algebra_from_json(const Json &j) {
  FieldId f = field_of_json(j);
  if (f.is_rational) return algebra_from_json<Rat>(j, Rat::Desc{});
  return algebra_from_json<Fp>(j, Fp::field(f.p));
}

template <class K>
Json pair_to_json(const MatchedPairData<K> &mp) {
  Json j = Json::object();
  j["A"] = algebra_to_json(mp.A);
  j["H"] = algebra_to_json(mp.H);
  j["left_action"] = detail::tensor_to_json(mp.lact.t);
  j["right_action"] = detail::tensor_to_json(mp.ract.t);
  return j;
}

inline Json pair_to_json(const AnyPair &mp) {
  if (std::holds_alternative<MatchedPairData<Rat>>(mp)) return pair_to_json(std::get<MatchedPairData<Rat>>(mp));
  return pair_to_json(std::get<MatchedPairData<Fp>>(mp));
}

// Like algebra_from_json, the result is NOT verified.
template <class K>
MatchedPairData<K> pair_from_json(const Json &j, typename K::Desc d) {
  MatchedPairData<K> mp;
  mp.A = algebra_from_json<K>(detail::need(j, "A", "pair JSON"), d);
  mp.H = algebra_from_json<K>(detail::need(j, "H", "pair JSON"), d);
  mp.lact.side = Side::left;
  mp.lact.t = detail::tensor_from_json<K>(d, detail::need(j, "left_action", "pair JSON"), mp.H.dim, mp.A.dim, mp.A.dim,
                                          "\"left_action\"");
  mp.ract.side = Side::right;
  mp.ract.t = detail::tensor_from_json<K>(d, detail::need(j, "right_action", "pair JSON"), mp.H.dim, mp.A.dim, mp.H.dim,
                                          "\"right_action\"");
  return mp;
}

inline AnyPair pair_from_json(const Json &j) {
  FieldId fa = field_of_json(detail::need(j, "A", "pair JSON"));
  FieldId fh = field_of_json(detail::need(j, "H", "pair JSON"));
  if (!(fa == fh))
    throw input_error("pair JSON mixes fields: A over " + field_id_text(fa) + ", H over " + field_id_text(fh));
  if (fa.is_rational) return pair_from_json<Rat>(j, Rat::Desc{});
  return pair_from_json<Fp>(j, Fp::field(fa.p));
}

// The one dump format used everywhere, so repeated runs are byte-identical.
inline std::string dump_json(const Json &j) { return j.dump(2) + "\n"; }

inline Json read_json_file(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open " + path);
  Json j = Json::parse(in, nullptr, false);
  if (j.is_discarded()) throw input_error(path + " is not valid JSON");
  return j;
}

inline void write_json_file(const std::string &path, const Json &j) {
  std::ofstream out(path);
  if (!out) throw input_error("cannot write " + path);
  out << dump_json(j);
  if (!out) throw input_error("failed writing " + path);
}

namespace detail {

template <class K>
std::optional<K> parse_scale(typename K::Desc d, const std::string &name, const char *prefix) {
  const std::size_t n = std::char_traits<char>::length(prefix);
  if (name.rfind(prefix, 0) != 0) return std::nullopt;
  std::optional<K> v = K::parse(d, name.substr(n));
  if (!v)
    throw input_error("bad scale in \"" + name + "\": expected " + prefix + "<scalar>");
  return v;
}

}  // namespace detail

inline bool is_algebra_preset_name(const std::string &name) {
  return name == "h4" || name == "kc2" || name == "h4xh4" || name == "h16" || name.rfind("h16:", 0) == 0;
}

// h4, kc2, h4xh4, h16:<scale>. Presets built from raw structure constants
// come back unverified, exactly like algebras read from a file; products of
// verified algebras come back verified.
template <class K>
HopfAlgebra<K> algebra_preset(const std::string &name, typename K::Desc d) {
  if (name == "h4") return sweedler_h4<K>(d);
  if (name == "kc2") return group_algebra_c2<K>(d);
  if (name == "h4xh4") return tensor_square_h4<K>(d);
  if (name == "h16") throw input_error("preset h16 needs a scale, e.g. h16:1");
  if (std::optional<K> lam = detail::parse_scale<K>(d, name, "h16:")) return h16_lambda<K>(d, *lam);
  throw input_error("unknown preset \"" + name + "\"");
}

// Accepts a preset name or a path to an algebra JSON file. For presets the
// field is taken from `f` (rationals when absent); for files the field is
// whatever the file declares, checked against `f` when both are given.
inline AnyAlgebra resolve_algebra(const std::string &designator, const std::optional<FieldId> &f) {
  if (is_algebra_preset_name(designator)) {
    FieldId fid = f.value_or(FieldId::rationals());
    if (fid.is_rational) return algebra_preset<Rat>(designator, Rat::Desc{});
    return algebra_preset<Fp>(designator, Fp::field(fid.p));
  }
  if (!std::filesystem::exists(designator))
    throw input_error("\"" + designator + "\" is neither a preset (h4, kc2, h16:<scale>, h4xh4) nor a file");
  AnyAlgebra a = algebra_from_json(read_json_file(designator));
  if (f && !(*f == field_of(a)))
    throw input_error(designator + " is over " + field_id_text(field_of(a)) + ", not the requested " + field_id_text(*f));
  return a;
}

namespace detail {

// Presets carry known-good constants; a failure here is a build bug, not bad
// input, hence verify-or-throw with internal_error.
template <class K>
HopfAlgebra<K> verified_preset(const std::string &name, typename K::Desc d) {
  HopfAlgebra<K> H = algebra_preset<K>(name, d);
  if (!H.verified) {
    AxiomReport rep = verify(H);
    if (!H.verified) throw internal_error("preset " + name + " failed the axiom check:\n" + rep.summary());
  }
  return H;
}

template <class K>
MatchedPairData<K> pair_preset(typename K::Desc d, const std::string &designator) {
  if (designator == "trivial" || designator == "h4xh4") {
    HopfAlgebra<K> A = sweedler_h4<K>(d, true);
    HopfAlgebra<K> H = sweedler_h4<K>(d, false);
    verify(A);
    verify(H);
    return trivial_pair(A, H);
  }
  if (std::optional<K> lam = parse_scale<K>(d, designator, "canonical:")) return canonical_pair<K>(d, *lam);
  if (std::optional<K> lam = parse_scale<K>(d, designator, "h16:")) return canonical_pair<K>(d, *lam);
  if (designator == "double") return canonical_double_actions(verified_preset<K>("h4", d));
  throw input_error("unknown pair \"" + designator + "\"");
}

}  // namespace detail

inline bool is_pair_preset_name(const std::string &name) {
  return name == "trivial" || name == "h4xh4" || name == "double" || name.rfind("canonical:", 0) == 0 ||
         name.rfind("h16:", 0) == 0;
}

// Pair designators: trivial (equivalently h4xh4), canonical:<scale>
// (equivalently h16:<scale>), double (the double of the four-dimensional
// preset), or a path to a pair JSON file. Presets come back verified; file
// pairs come back unverified.
inline AnyPair resolve_pair(const std::string &designator, const std::optional<FieldId> &f) {
  if (is_pair_preset_name(designator)) {
    FieldId fid = f.value_or(FieldId::rationals());
    if (fid.is_rational) return detail::pair_preset<Rat>(Rat::Desc{}, designator);
    return detail::pair_preset<Fp>(Fp::field(fid.p), designator);
  }
  if (!std::filesystem::exists(designator))
    throw input_error("\"" + designator +
                      "\" is neither a pair preset (trivial, canonical:<scale>, double) nor a file");
  AnyPair mp = pair_from_json(read_json_file(designator));
  if (f && !(*f == field_of(mp)))
    throw input_error(designator + " is over " + field_id_text(field_of(mp)) + ", not the requested " + field_id_text(*f));
  return mp;
}

// Upgrades an unverified user-supplied object, throwing math_check_error with
// the first failing check named. No-op when already verified.
template <class K>
void ensure_verified(HopfAlgebra<K> &H, const std::string &what) {
  if (H.verified) return;
  AxiomReport rep = verify(H);
  if (!H.verified) {
    for (const AxiomCheck &c : rep.checks)
      if (!c.ok) throw math_check_error(what + " fails the \"" + c.name + "\" axiom" + (c.detail.empty() ? "" : ": " + c.detail));
    throw internal_error("axiom report inconsistent with verified flag");
  }
}

template <class K>
void ensure_verified(MatchedPairData<K> &mp, const std::string &what) {
  if (mp.verified) return;
  ensure_verified(mp.A, what + " factor A");
  ensure_verified(mp.H, what + " factor H");
  CheckReport rep = check_matched_pair(mp);
  mp.verified = rep.all_ok();
  if (!mp.verified) {
    for (const CheckItem &it : rep.items)
      if (!it.ok) {
        std::string msg = what + " fails the \"" + it.name + "\" condition";
        if (!it.witnesses.empty()) msg += " at " + it.witnesses.front();
        throw math_check_error(msg);
      }
    throw internal_error("matched-pair report inconsistent with verified flag");
  }
}

inline void ensure_verified(AnyAlgebra &a, const std::string &what) {
  std::visit([&](auto &H) { ensure_verified(H, what); }, a);
}

inline void ensure_verified(AnyPair &mp, const std::string &what) {
  std::visit([&](auto &p) { ensure_verified(p, what); }, mp);
}

// Report serializers shared by the command-line driver and the Python module.

inline Json axiom_checks_json(const AxiomReport &rep) {
  Json j = Json::object();
  j["ok"] = rep.all_ok();
  Json checks = Json::array();
  for (const AxiomCheck &c : rep.checks) {
    Json e = Json::object();
    e["name"] = c.name;
    e["ok"] = c.ok;
    if (!c.ok && !c.detail.empty()) e["detail"] = c.detail;
    checks.push_back(std::move(e));
  }
  j["checks"] = std::move(checks);
  return j;
}

inline Json pair_checks_json(const CheckReport &rep) {
  Json j = Json::object();
  j["ok"] = rep.all_ok();
  Json checks = Json::array();
  for (const CheckItem &it : rep.items) {
    Json e = Json::object();
    e["name"] = it.name;
    e["ok"] = it.ok;
    if (!it.witnesses.empty()) e["witnesses"] = it.witnesses;
    checks.push_back(std::move(e));
  }
  j["checks"] = std::move(checks);
  return j;
}

inline Json census_json(std::uint32_t prime, const MatchedPairCensus &c) {
  Json j = Json::object();
  j["prime"] = prime;
  j["count"] = c.pairs.size();
  Json pairs = Json::array();
  for (const PairLabel &l : c.labels) {
    Json e = Json::object();
    switch (l.kind) {
      case PairLabel::trivial:
        e["kind"] = "trivial";
        break;
      case PairLabel::canonical:
        e["kind"] = "canonical";
        e["lambda"] = l.lambda.str();
        break;
      default:
        e["kind"] = "unclassified";
        break;
    }
    pairs.push_back(std::move(e));
  }
  j["pairs"] = std::move(pairs);
  j["left_family_counts"] = c.left_family_counts;
  j["right_family_counts"] = c.right_family_counts;
  return j;
}

// Invariant reports on a verified algebra, keyed the way the probe
// subcommand prints them. Elements are rendered against the basis names.
template <class K>
Json probe_json(const HopfAlgebra<K> &H, const std::string &kind) {
  require_verified(H, "probe");
  Json j = Json::object();
  if (kind == "grouplikes") {
    std::vector<Vec<K>> gl = group_likes_auto(H);
    j["count"] = gl.size();
    Json arr = Json::array();
    for (const auto &g : gl) arr.push_back(format_linear(H, g));
    j["group_likes"] = std::move(arr);
    return j;
  }
  if (kind == "primitives") {
    std::vector<Vec<K>> gl = group_likes_auto(H);
    Json arr = Json::array();
    for (const auto &a : gl)
      for (const auto &b : gl) {
        std::vector<Vec<K>> basis = skew_primitives(H, a, b);
        Json e = Json::object();
        e["a"] = format_linear(H, a);
        e["b"] = format_linear(H, b);
        e["dim"] = basis.size();
        Json bs = Json::array();
        for (const auto &v : basis) bs.push_back(format_linear(H, v));
        e["basis"] = std::move(bs);
        arr.push_back(std::move(e));
      }
    j["skew_primitives"] = std::move(arr);
    return j;
  }
  if (kind == "integrals") {
    IntegralSpaces<K> s = integral_spaces(H);
    auto side = [&](const std::vector<Vec<K>> &vs) {
      Json arr = Json::array();
      for (const auto &v : vs) {
        Json e = Json::object();
        e["element"] = format_linear(H, v);
        e["counit"] = H.counit_of(v).str();
        arr.push_back(std::move(e));
      }
      return arr;
    };
    j["left"] = side(s.left);
    j["right"] = side(s.right);
    j["unimodular"] = s.unimodular;
    return j;
  }
  if (kind == "semisimple") {
    j["semisimple"] = is_semisimple(H);
    return j;
  }
  throw input_error("unknown probe \"" + kind + "\": expected grouplikes, primitives, integrals, or semisimple");
}

}  // namespace hopfsc
