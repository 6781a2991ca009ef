#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "hopfsc/cli.hpp"
#include "hopfsc/interchange.hpp"

#include <cstdio>
#include <sstream>
#include <string>
#include <unistd.h>
#include <vector>

using namespace hopfsc;

namespace {

const std::string kDataDir = TEST_DATA_DIR;

struct CliResult {
  int rc;
  std::string out;
  std::string err;
};

CliResult call(const std::vector<std::string> &args) {
  std::vector<const char *> argv;
  argv.push_back("hopfsc");
  for (const std::string &a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int rc = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {rc, out.str(), err.str()};
}

std::string temp_path(const std::string &stem) {
  return "/tmp/hopfsc_cli_" + std::to_string(::getpid()) + "_" + stem + ".json";
}

bool contains(const std::string &hay, const std::string &needle) { return hay.find(needle) != std::string::npos; }

}  // namespace

TEST_CASE("verify subcommand reports axioms and exit codes") {
  CliResult ok = call({"verify", "h4"});
  CHECK(ok.rc == 0);
  CHECK(contains(ok.out, "dim 4 over Q"));
  CHECK(contains(ok.out, "ok   antipode-right"));
  CHECK(contains(ok.out, "all axioms hold"));

  CliResult fp = call({"verify", "h16:3", "--field", "Fp:5", "--json"});
  CHECK(fp.rc == 0);
  Json j = Json::parse(fp.out);
  CHECK(j["ok"] == true);
  CHECK(j["field"] == "Fp:5");
  CHECK(j["dim"] == 16);
  CHECK(j["checks"].size() == 8);

  CliResult bad = call({"verify", kDataDir + "/h4_bad_antipode.json"});
  CHECK(bad.rc == 1);
  CHECK(contains(bad.out, "FAIL antipode-left"));
  CHECK(contains(bad.out, "NOT a Hopf algebra"));

  CliResult unknown = call({"verify", "nope"});
  CHECK(unknown.rc == 2);
  CHECK(contains(unknown.err, "error:"));
  CHECK(unknown.out.empty());

  CliResult badfield = call({"verify", "h4", "--field", "Fp:9"});
  CHECK(badfield.rc == 2);
}

TEST_CASE("probe subcommand prints invariants") {
  CliResult gl = call({"probe", "grouplikes", "h4", "--field", "Fp:5"});
  CHECK(gl.rc == 0);
  CHECK(contains(gl.out, "group-like elements: 2"));
  CHECK(contains(gl.out, "  1\n"));
  CHECK(contains(gl.out, "  g\n"));

  CliResult glj = call({"probe", "grouplikes", "h4", "--field", "Fp:5", "--json"});
  CHECK(glj.rc == 0);
  Json j = Json::parse(glj.out);
  CHECK(j["count"] == 2);
  CHECK(j["group_likes"] == Json::array({"1", "g"}));

  CliResult pr = call({"probe", "primitives", "h4"});  // rationals by default
  CHECK(pr.rc == 0);
  CHECK(contains(pr.out, "P(1, g): dim 2"));
  CHECK(contains(pr.out, "  1 - g\n"));
  CHECK(contains(pr.out, "  x\n"));

  CliResult in = call({"probe", "integrals", "h16:1", "--field", "Fp:5"});
  CHECK(in.rc == 0);
  CHECK(contains(in.out, "unimodular: yes"));
  CHECK(contains(in.out, "(counit 0)"));

  CliResult h4in = call({"probe", "integrals", "h4"});
  CHECK(h4in.rc == 0);
  CHECK(contains(h4in.out, "left integrals: dim 1"));
  CHECK(contains(h4in.out, "  x + gx"));
  CHECK(contains(h4in.out, "unimodular: no"));

  CliResult ss = call({"probe", "semisimple", "kc2"});
  CHECK(ss.rc == 0);
  CHECK(contains(ss.out, "semisimple: yes"));

  CliResult badkind = call({"probe", "idempotents", "h4"});
  CHECK(badkind.rc == 2);

  CliResult badalg = call({"probe", "grouplikes", kDataDir + "/h4_bad_antipode.json"});
  CHECK(badalg.rc == 1);
  CHECK(contains(badalg.err, "check failed:"));
}

TEST_CASE("mp check validates pairs from presets and files") {
  CliResult tv = call({"mp", "check", "trivial", "--field", "Fp:3"});
  CHECK(tv.rc == 0);
  CHECK(contains(tv.out, "ok   mp4"));
  CHECK(contains(tv.out, "matched pair"));

  CliResult cj = call({"mp", "check", "canonical:2", "--field", "Fp:5", "--json"});
  CHECK(cj.rc == 0);
  Json j = Json::parse(cj.out);
  CHECK(j["ok"] == true);
  CHECK(j["checks"].size() == 6);

  CliResult dd = call({"mp", "check", "double"});
  CHECK(dd.rc == 0);

  // corrupt one action cell and the check fails with exit code 1
  Fp::Desc d3 = Fp::field(3);
  MatchedPairData<Fp> mp = canonical_pair<Fp>(d3, Fp::one(d3));
  mp.lact.t.at(2, 2, 0) += Fp::one(d3);
  std::string path = temp_path("broken_pair");
  write_json_file(path, pair_to_json(mp));
  CliResult broken = call({"mp", "check", path});
  CHECK(broken.rc == 1);
  CHECK(contains(broken.out, "FAIL"));
  CHECK(contains(broken.out, "NOT a matched pair"));
  std::remove(path.c_str());
}

TEST_CASE("mp canonical emits a pair that round trips through a file") {
  CliResult c = call({"mp", "canonical", "--lambda", "2", "--field", "Fp:5"});
  CHECK(c.rc == 0);
  Json j = Json::parse(c.out);
  bool found = false;
  for (const Json &e : j["left_action"])
    if (e == Json::array({2, 2, 0, "2"})) found = true;
  CHECK(found);

  std::string path = temp_path("canon_pair");
  CliResult saved = call({"mp", "canonical", "--lambda", "2", "--field", "Fp:5", "--out", path});
  CHECK(saved.rc == 0);
  CHECK(saved.out.empty());
  CHECK(contains(saved.err, "wrote " + path));
  CliResult checked = call({"mp", "check", path});
  CHECK(checked.rc == 0);
  std::remove(path.c_str());

  // rational scale, including a fraction
  CliResult q = call({"mp", "canonical", "--lambda=-1/2"});
  CHECK(q.rc == 0);
  Json qj = Json::parse(q.out);
  CHECK(qj["A"]["field"] == "Q");
  bool frac = false;
  for (const Json &e : qj["left_action"])
    if (e == Json::array({2, 2, 0, "-1/2"})) frac = true;
  CHECK(frac);

  CHECK(call({"mp", "canonical", "--lambda", "pi"}).rc == 2);
}

TEST_CASE("mp census enumerates and reports") {
  CliResult c = call({"mp", "census", "--prime", "3"});
  CHECK(c.rc == 0);
  CHECK(contains(c.err, "enumerating matched pairs over F_3"));
  Json j = Json::parse(c.out);
  CHECK(j["count"] == 4);
  CHECK(j["pairs"].size() == 4);
  CHECK(j["left_family_counts"] == Json::array({1, 9, 9, 81}));

  CHECK(call({"mp", "census", "--prime", "4"}).rc == 2);
  CHECK(call({"mp", "census"}).rc == 2);  // --prime is required
}

TEST_CASE("bicross builds a product that verifies") {
  std::string path = temp_path("bicross");
  CliResult b = call({"bicross", "--pair", "canonical:1", "--field", "Fp:3", "--out", path});
  CHECK(b.rc == 0);
  CliResult v = call({"verify", path});
  CHECK(v.rc == 0);
  CHECK(contains(v.out, "dim 16 over Fp:3"));
  CliResult in = call({"probe", "integrals", path});
  CHECK(in.rc == 0);
  CHECK(contains(in.out, "unimodular: yes"));
  std::remove(path.c_str());

  CliResult q = call({"bicross", "--pair", "trivial"});
  CHECK(q.rc == 0);
  Json j = Json::parse(q.out);
  CHECK(j["dim"] == 16);
  CHECK(j["field"] == "Q");
}

TEST_CASE("iso decides isomorphism with matching exit codes") {
  CliResult no = call({"iso", "trivial", "canonical:0", "--prime", "3"});
  CHECK(no.rc == 1);
  Json nj = Json::parse(no.out);
  CHECK(nj["isomorphic"] == false);
  CHECK_FALSE(nj.contains("witness_matrix"));

  CliResult yes = call({"iso", "double", "h16:1", "--prime", "3"});
  CHECK(yes.rc == 0);
  Json yj = Json::parse(yes.out);
  CHECK(yj["isomorphic"] == true);
  REQUIRE(yj.contains("witness_matrix"));
  CHECK(yj["witness_matrix"].size() == 16);
  CHECK(yj["witness_matrix"][0].size() == 16);

  CliResult rescale = call({"iso", "canonical:1", "canonical:2", "--prime", "5"});
  CHECK(rescale.rc == 0);

  CHECK(call({"iso", "trivial", "canonical:0"}).rc == 2);  // --prime is required
}

TEST_CASE("aut reports the group shape") {
  CliResult a = call({"aut", "h16:1", "--prime", "3"});
  CHECK(a.rc == 0);
  Json j = Json::parse(a.out);
  CHECK(j["order"] == 4);
  CHECK(j["abelian"] == true);
  CHECK(j["one_parameter"] == true);
  CHECK(j["relations_verified"] == true);

  CliResult t = call({"aut", "trivial", "--prime", "3"});
  CHECK(t.rc == 0);
  Json tj = Json::parse(t.out);
  CHECK(tj["order"] == 8);
  CHECK(tj["abelian"] == false);
  CHECK(tj["one_parameter"] == false);
}

TEST_CASE("double builds the expected products") {
  std::string path = temp_path("double");
  CliResult d = call({"double", "h4", "--field", "Fp:3", "--out", path});
  CHECK(d.rc == 0);
  CliResult v = call({"verify", path});
  CHECK(v.rc == 0);
  CHECK(contains(v.out, "dim 16 over Fp:3"));
  std::remove(path.c_str());

  CliResult kq = call({"double", "kc2"});
  CHECK(kq.rc == 0);
  Json j = Json::parse(kq.out);
  CHECK(j["dim"] == 4);
  CHECK(j["field"] == "Q");
}

TEST_CASE("reproduce summarizes the full pipeline over one prime") {
  CliResult r = call({"reproduce", "--prime", "3"});
  CHECK(r.rc == 0);
  CHECK_FALSE(r.err.empty());  // progress notes
  Json j = Json::parse(r.out);
  CHECK(j["prime"] == 3);
  CHECK(j["matched_pairs"] == 4);
  CHECK(j["iso_classes"] == 3);
  CHECK(j["classes"] == Json::array({Json::array({"trivial"}), Json::array({"canonical:0"}),
                                     Json::array({"canonical:1", "canonical:2"})}));
  CHECK(j["aut_orders"]["tensor"] == 8);
  CHECK(j["aut_orders"]["h16_0"] == 8);
  CHECK(j["aut_orders"]["h16_1"] == 4);
  CHECK(j["aut_relations_verified"] == true);
  CHECK(j["double_is_h16_1"] == true);
}

TEST_CASE("usage errors exit with code 2") {
  CHECK(call({}).rc == 2);
  CHECK(call({"verify"}).rc == 2);
  CHECK(call({"mp"}).rc == 2);
  CHECK(call({"frobnicate"}).rc == 2);
  CHECK(call({"verify", "h4", "--bogus"}).rc == 2);
  CHECK(call({"--help"}).rc == 0);
  CHECK(contains(call({"--help"}).out, "verify"));
}
