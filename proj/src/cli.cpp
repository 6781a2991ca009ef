#include "hopfsc/cli.hpp"

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"

#include "hopfsc/bicrossed.hpp"
#include "hopfsc/drinfeld.hpp"
#include "hopfsc/interchange.hpp"
#include "hopfsc/morphism.hpp"
#include "hopfsc/probe.hpp"
#include "hopfsc/reproduce.hpp"

namespace hopfsc::cli {
namespace {

struct Ctx {
  std::ostream &out;
  std::ostream &err;
};

std::optional<FieldId> parse_field_flag(const std::string &text) {
  if (text.empty()) return std::nullopt;
  return parse_field_id(text);
}

// Data output goes to stdout unless --out redirects it; progress and
// diagnostics stay on stderr either way.
void emit(Ctx &ctx, const std::string &out_path, const Json &j) {
  if (out_path.empty()) {
    ctx.out << dump_json(j);
  } else {
    write_json_file(out_path, j);
    ctx.err << "wrote " << out_path << std::endl;
  }
}

int do_verify(Ctx &ctx, const std::string &designator, const std::string &field_text, bool as_json) {
  AnyAlgebra a = resolve_algebra(designator, parse_field_flag(field_text));
  std::string field_name = field_id_text(field_of(a));
  return std::visit(
      [&](auto &H) {
        AxiomReport rep = check_hopf_axioms(H);
        if (as_json) {
          Json j = Json::object();
          j["input"] = designator;
          j["field"] = field_name;
          j["dim"] = H.dim;
          Json body = axiom_checks_json(rep);
          j["ok"] = body["ok"];
          j["checks"] = std::move(body["checks"]);
          ctx.out << dump_json(j);
        } else {
          ctx.out << designator << ": dim " << H.dim << " over " << field_name << "\n"
                  << rep.summary() << (rep.all_ok() ? "all axioms hold\n" : "NOT a Hopf algebra\n");
        }
        return rep.all_ok() ? 0 : 1;
      },
      a);
}

int do_probe(Ctx &ctx, const std::string &kind, const std::string &designator, const std::string &field_text,
             bool as_json) {
  AnyAlgebra a = resolve_algebra(designator, parse_field_flag(field_text));
  ensure_verified(a, designator);
  Json j = std::visit([&](const auto &H) { return probe_json(H, kind); }, a);
  if (as_json) {
    ctx.out << dump_json(j);
    return 0;
  }
  if (kind == "grouplikes") {
    ctx.out << "group-like elements: " << j["count"].get<std::size_t>() << "\n";
    for (const auto &g : j["group_likes"]) ctx.out << "  " << g.get<std::string>() << "\n";
  } else if (kind == "primitives") {
    for (const auto &e : j["skew_primitives"]) {
      ctx.out << "P(" << e["a"].get<std::string>() << ", " << e["b"].get<std::string>() << "): dim "
              << e["dim"].get<std::size_t>() << "\n";
      for (const auto &v : e["basis"]) ctx.out << "  " << v.get<std::string>() << "\n";
    }
  } else if (kind == "integrals") {
    auto side = [&](const char *name, const Json &arr) {
      ctx.out << name << " integrals: dim " << arr.size() << "\n";
      for (const auto &e : arr)
        ctx.out << "  " << e["element"].get<std::string>() << "   (counit " << e["counit"].get<std::string>() << ")\n";
    };
    side("left", j["left"]);
    side("right", j["right"]);
    ctx.out << "unimodular: " << (j["unimodular"].get<bool>() ? "yes" : "no") << "\n";
  } else {
    ctx.out << "semisimple: " << (j["semisimple"].get<bool>() ? "yes" : "no") << "\n";
  }
  return 0;
}

template <class K>
int mp_check_impl(Ctx &ctx, MatchedPairData<K> &p, const std::string &designator, bool as_json) {
  ensure_verified(p.A, designator + ": factor A");
  ensure_verified(p.H, designator + ": factor H");
  CheckReport rep = check_matched_pair(p);
  if (as_json) {
    Json j = Json::object();
    j["input"] = designator;
    Json body = pair_checks_json(rep);
    j["ok"] = body["ok"];
    j["checks"] = std::move(body["checks"]);
    ctx.out << dump_json(j);
  } else {
    ctx.out << rep.summary() << (rep.all_ok() ? "matched pair\n" : "NOT a matched pair\n");
  }
  return rep.all_ok() ? 0 : 1;
}

int do_mp_check(Ctx &ctx, const std::string &designator, const std::string &field_text, bool as_json) {
  AnyPair mp = resolve_pair(designator, parse_field_flag(field_text));
  return std::visit([&](auto &p) { return mp_check_impl(ctx, p, designator, as_json); }, mp);
}

int do_mp_canonical(Ctx &ctx, const std::string &lambda_text, const std::string &field_text,
                    const std::string &out_path) {
  FieldId fid = parse_field_flag(field_text).value_or(FieldId::rationals());
  if (fid.is_rational) {
    std::optional<Rat> lam = Rat::parse(Rat::Desc{}, lambda_text);
    if (!lam) throw input_error("bad --lambda \"" + lambda_text + "\": expected a rational like 3 or -1/2");
    emit(ctx, out_path, pair_to_json(canonical_pair<Rat>(Rat::Desc{}, *lam)));
  } else {
    Fp::Desc d = Fp::field(fid.p);
    std::optional<Fp> lam = Fp::parse(d, lambda_text);
    if (!lam) throw input_error("bad --lambda \"" + lambda_text + "\": expected an integer residue");
    emit(ctx, out_path, pair_to_json(canonical_pair<Fp>(d, *lam)));
  }
  return 0;
}

int do_mp_census(Ctx &ctx, std::uint32_t prime, const std::string &out_path) {
  ctx.err << "enumerating matched pairs over F_" << prime << std::endl;
  MatchedPairCensus c = enumerate_matched_pairs_h4h4(prime);
  emit(ctx, out_path, census_json(prime, c));
  return 0;
}

int do_bicross(Ctx &ctx, const std::string &pair_text, const std::string &field_text, const std::string &out_path) {
  AnyPair mp = resolve_pair(pair_text, parse_field_flag(field_text));
  ensure_verified(mp, pair_text);
  Json j = std::visit([&](const auto &p) { return algebra_to_json(bicrossed_product(p)); }, mp);
  emit(ctx, out_path, j);
  return 0;
}

int do_iso(Ctx &ctx, const std::string &e_text, const std::string &f_text, std::uint32_t prime,
           const std::string &out_path) {
  FieldId fid = FieldId::prime(prime);
  AnyPair pe = resolve_pair(e_text, fid);
  ensure_verified(pe, e_text);
  AnyPair pf = resolve_pair(f_text, fid);
  ensure_verified(pf, f_text);
  ctx.err << "searching for an isomorphism of bicrossed products over F_" << prime << std::endl;
  IsoResult r = are_isomorphic(std::get<MatchedPairData<Fp>>(pe), std::get<MatchedPairData<Fp>>(pf));
  Json j = Json::object();
  j["E"] = e_text;
  j["F"] = f_text;
  j["prime"] = prime;
  j["isomorphic"] = r.isomorphic;
  if (r.witness) j["witness_matrix"] = detail::mat_to_json(*r.witness);
  emit(ctx, out_path, j);
  return r.isomorphic ? 0 : 1;
}

int do_aut(Ctx &ctx, const std::string &e_text, std::uint32_t prime, const std::string &out_path) {
  AnyPair pe = resolve_pair(e_text, FieldId::prime(prime));
  ensure_verified(pe, e_text);
  ctx.err << "solving for automorphisms over F_" << prime << std::endl;
  GroupReport g = automorphism_group(std::get<MatchedPairData<Fp>>(pe));
  Json j = Json::object();
  j["E"] = e_text;
  j["prime"] = prime;
  j["order"] = g.order;
  j["abelian"] = g.abelian;
  j["one_parameter"] = g.one_parameter;
  j["relations_verified"] = g.relations_verified;
  if (!g.detail.empty()) j["detail"] = g.detail;
  emit(ctx, out_path, j);
  return g.relations_verified ? 0 : 1;
}

int do_double(Ctx &ctx, const std::string &designator, const std::string &field_text, const std::string &out_path) {
  AnyAlgebra a = resolve_algebra(designator, parse_field_flag(field_text));
  ensure_verified(a, designator);
  Json j = std::visit([&](const auto &H) { return algebra_to_json(drinfeld_double(H)); }, a);
  emit(ctx, out_path, j);
  return 0;
}

int do_reproduce(Ctx &ctx, std::uint32_t prime, const std::string &out_path) {
  ReproduceReport rep = reproduce(prime, &ctx.err);
  emit(ctx, out_path, reproduce_to_json(rep));
  return 0;
}

}  // namespace

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
  Ctx ctx{out, err};
  CLI::App app{"exact structure-constant engine for finite-dimensional Hopf algebras"};
  app.require_subcommand(1);

  std::string alg, field_text, out_path, lambda_text, pair_text, e_text, f_text, kind;
  bool as_json = false;
  std::uint32_t prime = 0;

  const char *preset_help = "preset (h4, kc2, h16:<scale>, h4xh4) or algebra JSON file";
  const char *pair_help = "pair preset (trivial, canonical:<scale>, double) or pair JSON file";
  const char *field_help = "Q or Fp:<p>; default Q for presets, the file's own field otherwise";
  const char *out_help = "write the JSON here instead of stdout";

  auto *verify_cmd = app.add_subcommand("verify", "run the Hopf axiom checks on an algebra");
  verify_cmd->add_option("algebra", alg, preset_help)->required();
  verify_cmd->add_option("--field", field_text, field_help);
  verify_cmd->add_flag("--json", as_json, "machine-readable report");

  auto *probe_cmd = app.add_subcommand("probe", "report invariants of a verified algebra");
  probe_cmd->add_option("what", kind, "grouplikes, primitives, integrals, or semisimple")
      ->required()
      ->check(CLI::IsMember({"grouplikes", "primitives", "integrals", "semisimple"}));
  probe_cmd->add_option("algebra", alg, preset_help)->required();
  probe_cmd->add_option("--field", field_text, field_help);
  probe_cmd->add_flag("--json", as_json, "machine-readable report");

  auto *mp_cmd = app.add_subcommand("mp", "matched pairs: check, construct, enumerate");
  mp_cmd->require_subcommand(1);
  auto *mp_check = mp_cmd->add_subcommand("check", "run the compatibility checks on a pair");
  mp_check->add_option("pair", pair_text, pair_help)->required();
  mp_check->add_option("--field", field_text, field_help);
  mp_check->add_flag("--json", as_json, "machine-readable report");
  auto *mp_canon = mp_cmd->add_subcommand("canonical", "emit the canonical pair at a given scale");
  mp_canon->add_option("--lambda", lambda_text, "scale parameter (use --lambda=-1 for negatives)")->required();
  mp_canon->add_option("--field", field_text, field_help);
  mp_canon->add_option("--out", out_path, out_help);
  auto *mp_census = mp_cmd->add_subcommand("census", "enumerate all matched pairs of two Sweedler algebras");
  mp_census->add_option("--prime", prime, "odd prime field size")->required();
  mp_census->add_option("--out", out_path, out_help);

  auto *bicross_cmd = app.add_subcommand("bicross", "build the bicrossed product of a matched pair");
  bicross_cmd->add_option("--pair", pair_text, pair_help)->required();
  bicross_cmd->add_option("--field", field_text, field_help);
  bicross_cmd->add_option("--out", out_path, out_help);

  auto *iso_cmd = app.add_subcommand("iso", "decide isomorphism of two bicrossed products");
  iso_cmd->add_option("E", e_text, pair_help)->required();
  iso_cmd->add_option("F", f_text, pair_help)->required();
  iso_cmd->add_option("--prime", prime, "odd prime field size")->required();
  iso_cmd->add_option("--out", out_path, out_help);

  auto *aut_cmd = app.add_subcommand("aut", "automorphism group of a bicrossed product");
  aut_cmd->add_option("E", e_text, pair_help)->required();
  aut_cmd->add_option("--prime", prime, "odd prime field size")->required();
  aut_cmd->add_option("--out", out_path, out_help);

  auto *double_cmd = app.add_subcommand("double", "build the Drinfel'd double of a Hopf algebra");
  double_cmd->add_option("algebra", alg, preset_help)->required();
  double_cmd->add_option("--field", field_text, field_help);
  double_cmd->add_option("--out", out_path, out_help);

  auto *rep_cmd = app.add_subcommand("reproduce", "census, classification, automorphisms, and the double, over one prime");
  rep_cmd->add_option("--prime", prime, "odd prime field size")->required();
  rep_cmd->add_option("--out", out_path, out_help);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e, ctx.out, ctx.err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(verify_cmd)) return do_verify(ctx, alg, field_text, as_json);
    if (app.got_subcommand(probe_cmd)) return do_probe(ctx, kind, alg, field_text, as_json);
    if (app.got_subcommand(mp_cmd)) {
      if (mp_cmd->got_subcommand(mp_check)) return do_mp_check(ctx, pair_text, field_text, as_json);
      if (mp_cmd->got_subcommand(mp_canon)) return do_mp_canonical(ctx, lambda_text, field_text, out_path);
      return do_mp_census(ctx, prime, out_path);
    }
    if (app.got_subcommand(bicross_cmd)) return do_bicross(ctx, pair_text, field_text, out_path);
    if (app.got_subcommand(iso_cmd)) return do_iso(ctx, e_text, f_text, prime, out_path);
    if (app.got_subcommand(aut_cmd)) return do_aut(ctx, e_text, prime, out_path);
    if (app.got_subcommand(double_cmd)) return do_double(ctx, alg, field_text, out_path);
    if (app.got_subcommand(rep_cmd)) return do_reproduce(ctx, prime, out_path);
  } catch (const math_check_error &e) {
    ctx.err << "check failed: " << e.what() << std::endl;
    return 1;
  } catch (const input_error &e) {
    ctx.err << "error: " << e.what() << std::endl;
    return 2;
  } catch (const internal_error &e) {
    ctx.err << "internal error: " << e.what() << std::endl;
    return 2;
  } catch (const std::exception &e) {
    ctx.err << "error: " << e.what() << std::endl;
    return 2;
  }
  return 2;
}

int run(int argc, const char *const *argv) { return run(argc, argv, std::cout, std::cerr); }

}  // namespace hopfsc::cli
