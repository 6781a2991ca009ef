#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hopfsc/matched_pair.hpp"

#include <string>
#include <vector>

using namespace hopfsc;

namespace {

template <class K>
MatchedPairData<K> sweedler_trivial_pair(typename K::Desc d) {
  HopfAlgebra<K> A = sweedler_h4<K>(d, true);
  HopfAlgebra<K> H = sweedler_h4<K>(d, false);
  verify(A);
  verify(H);
  return trivial_pair(A, H);
}

}  // namespace

TEST_CASE("the trivial pair verifies and lists every compatibility item") {
  MatchedPairData<Rat> mp = sweedler_trivial_pair<Rat>(Rat::Desc{});
  CHECK(mp.verified);
  CheckReport rep = check_matched_pair(mp);
  CHECK(rep.all_ok());
  const char *names[] = {"left-action-module-coalgebra", "right-action-module-coalgebra",
                         "mp1", "mp2", "mp3", "mp4"};
  CHECK(rep.items.size() == 6);
  for (const char *n : names) CHECK(rep.find(n) != nullptr);

  // trivial actions act through the counits
  Fp::Desc d = Fp::field(7);
  MatchedPairData<Fp> mf = sweedler_trivial_pair<Fp>(d);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      Vec<Fp> la = apply_action(mf.lact, d, mf.H.basis_vector(i), mf.A.basis_vector(j));
      CHECK(la == scaled(mf.A.basis_vector(j), mf.H.counit[static_cast<std::size_t>(i)]));
      Vec<Fp> ra = apply_action(mf.ract, d, mf.H.basis_vector(i), mf.A.basis_vector(j));
      CHECK(ra == scaled(mf.H.basis_vector(i), mf.A.counit[static_cast<std::size_t>(j)]));
    }
}

TEST_CASE("canonical pairs verify over prime fields and over the rationals") {
  for (uint32_t p : {3u, 5u}) {
    Fp::Desc d = Fp::field(p);
    for (uint32_t l = 0; l < p; ++l) {
      MatchedPairData<Fp> mp = canonical_pair<Fp>(d, Fp(d, l));
      CHECK(mp.verified);
      CHECK(check_matched_pair(mp).all_ok());
    }
  }
  MatchedPairData<Rat> mq = canonical_pair<Rat>(Rat::Desc{}, Rat(1));
  CHECK(mq.verified);
  MatchedPairData<Rat> mq2 = canonical_pair<Rat>(Rat::Desc{}, Rat(-3, 7));
  CHECK(mq2.verified);
}

TEST_CASE("canonical action tables carry the one-parameter twist") {
  Fp::Desc d = Fp::field(5);
  Fp l(d, 2);
  MatchedPairData<Fp> mp = canonical_pair<Fp>(d, l);
  // x |> X = lambda - lambda G
  CHECK(mp.lact.t.at(2, 2, 0) == l);
  CHECK(mp.lact.t.at(2, 2, 1) == -l);
  CHECK(mp.lact.t.at(2, 2, 2) == Fp::zero(d));
  // g |> X = -X and g |> GX = -GX (the reflection)
  CHECK(mp.lact.t.at(1, 2, 2) == -Fp::one(d));
  CHECK(mp.lact.t.at(1, 3, 3) == -Fp::one(d));
  // x <| X = lambda - lambda g, gx <| X = -lambda + lambda g
  CHECK(mp.ract.t.at(2, 2, 0) == l);
  CHECK(mp.ract.t.at(2, 2, 1) == -l);
  CHECK(mp.ract.t.at(3, 2, 0) == -l);
  CHECK(mp.ract.t.at(3, 2, 1) == l);

  // lambda = 0 still reflects, so it differs from the trivial pair
  MatchedPairData<Fp> m0 = canonical_pair<Fp>(d, Fp::zero(d));
  MatchedPairData<Fp> tv = sweedler_trivial_pair<Fp>(d);
  CHECK_FALSE(m0.lact == tv.lact);
  CHECK(m0.lact.t.at(1, 2, 2) == -Fp::one(d));
  CHECK(tv.lact.t.at(1, 2, 2) == Fp::one(d));
}

TEST_CASE("apply_action extends tables bilinearly") {
  Fp::Desc d = Fp::field(7);
  MatchedPairData<Fp> mp = canonical_pair<Fp>(d, Fp(d, 3));
  Vec<Fp> h = mp.H.zvec();
  h[1] = Fp(d, 2);
  h[2] = Fp(d, 5);
  Vec<Fp> a = mp.A.zvec();
  a[2] = Fp(d, 4);
  a[3] = Fp::one(d);
  Vec<Fp> got = apply_action(mp.lact, d, h, a);
  Vec<Fp> want = mp.A.zvec();
  const int hs[] = {1, 2}, as[] = {2, 3};
  const Fp hc[] = {Fp(d, 2), Fp(d, 5)}, ac[] = {Fp(d, 4), Fp::one(d)};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      axpy(want, hc[i] * ac[j], mp.lact.cell(hs[i], as[j], d));
  CHECK(got == want);
}

TEST_CASE("module-coalgebra checker isolates each failure kind") {
  Fp::Desc d = Fp::field(5);
  HopfAlgebra<Fp> A = sweedler_h4<Fp>(d, true);
  HopfAlgebra<Fp> H = sweedler_h4<Fp>(d, false);
  verify(A);
  verify(H);

  SUBCASE("the trivial left action passes all four items") {
    CheckReport rep = check_module_coalgebra(H, A, trivial_left_action(H, A));
    CHECK(rep.all_ok());
    CHECK(rep.items.size() == 4);
    CHECK(rep.find("unit-action") != nullptr);
    CHECK(rep.find("module-associativity") != nullptr);
    CHECK(rep.find("coalgebra-map-comult") != nullptr);
    CHECK(rep.find("coalgebra-map-counit") != nullptr);
  }

  SUBCASE("breaking the unit row is caught with a witness") {
    ActionTable<Fp> act = trivial_left_action(H, A);
    act.t.at(0, 2, 2) = Fp(d, 2);  // 1 |> X = 2X
    CheckReport rep = check_module_coalgebra(H, A, act);
    CHECK_FALSE(rep.find("unit-action")->ok);
    REQUIRE_FALSE(rep.find("unit-action")->witnesses.empty());
    CHECK(rep.find("unit-action")->witnesses.front() == "(1, X)");
  }

  SUBCASE("a counit-breaking cell is caught") {
    ActionTable<Fp> act = trivial_left_action(H, A);
    act.t.at(1, 2, 0) = Fp::one(d);  // g |> X = 1 + X, counit 1 instead of 0
    CheckReport rep = check_module_coalgebra(H, A, act);
    CHECK_FALSE(rep.find("coalgebra-map-counit")->ok);
  }

  SUBCASE("shape mismatches are input errors") {
    ActionTable<Fp> act = trivial_left_action(H, A);
    HopfAlgebra<Fp> C = group_algebra_c2<Fp>(d);
    verify(C);
    CHECK_THROWS_AS(check_module_coalgebra(C, A, act), input_error);
  }
}

TEST_CASE("a left twist without the matching right twist fails exactly mp4") {
  Fp::Desc d = Fp::field(5);
  HopfAlgebra<Fp> A = sweedler_h4<Fp>(d, true);
  HopfAlgebra<Fp> H = sweedler_h4<Fp>(d, false);
  verify(A);
  verify(H);
  const Fp z = Fp::zero(d), o = Fp::one(d);
  MatchedPairData<Fp> mp{A, H, left_action_family<Fp>(d, 4, z, o, z, o), trivial_right_action(H, A), false};
  CheckReport rep = verify_matched_pair(mp);
  CHECK_FALSE(mp.verified);
  CHECK(rep.find("left-action-module-coalgebra")->ok);
  CHECK(rep.find("right-action-module-coalgebra")->ok);
  CHECK(rep.find("mp1")->ok);
  CHECK_FALSE(rep.find("mp4")->ok);
  const std::vector<std::string> &w = rep.find("mp4")->witnesses;
  REQUIRE_FALSE(w.empty());
  CHECK(w.front() == "(x, X)");  // first failing basis pair in scan order
}

TEST_CASE("family constructors round-trip through the classifiers") {
  Fp::Desc d = Fp::field(5);
  const Fp z = Fp::zero(d);
  Fp a(d, 1), b(d, 2), c(d, 3), e(d, 4);

  ActionFamily f1 = classify_right_action(right_action_family<Fp>(d, 1, z, z, z, z), d);
  CHECK(f1.family == 1);
  CHECK(f1.params.empty());

  ActionFamily f2 = classify_right_action(right_action_family<Fp>(d, 2, z, z, c, e), d);
  CHECK(f2.family == 2);
  REQUIRE(f2.params.size() == 2);
  CHECK(f2.params[0] == c);
  CHECK(f2.params[1] == e);

  ActionFamily f3 = classify_right_action(right_action_family<Fp>(d, 3, a, b, z, z), d);
  CHECK(f3.family == 3);

  ActionFamily f4 = classify_right_action(right_action_family<Fp>(d, 4, a, b, c, e), d);
  CHECK(f4.family == 4);
  REQUIRE(f4.params.size() == 4);
  CHECK(f4.params[2] == c);

  ActionFamily g4 = classify_left_action(left_action_family<Fp>(d, 4, a, b, c, e), d);
  CHECK(g4.family == 4);
  REQUIRE(g4.params.size() == 4);
  CHECK(g4.params[0] == a);
  CHECK(g4.params[3] == e);

  // a table outside every family reports 0
  ActionTable<Fp> odd = right_action_family<Fp>(d, 1, z, z, z, z);
  odd.t.at(2, 2, 2) = Fp::one(d);  // x <| X = x
  ActionFamily f0 = classify_right_action(odd, d);
  CHECK(f0.family == 0);

  CHECK_THROWS_AS(right_action_family<Fp>(d, 5, z, z, z, z), input_error);
  CHECK_THROWS_AS(left_action_family<Fp>(d, 0, z, z, z, z), input_error);
}

TEST_CASE("matched-pair checks reject malformed inputs") {
  Fp::Desc d = Fp::field(3);
  MatchedPairData<Fp> mp = sweedler_trivial_pair<Fp>(d);
  MatchedPairData<Fp> swapped = mp;
  std::swap(swapped.lact, swapped.ract);
  CHECK_THROWS_AS(check_matched_pair(swapped), input_error);

  HopfAlgebra<Fp> other = sweedler_h4<Fp>(Fp::field(5), true);
  verify(other);
  MatchedPairData<Fp> crossed = mp;
  crossed.A = other;
  CHECK_THROWS_AS(check_matched_pair(crossed), input_error);
}
