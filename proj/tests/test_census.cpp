#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hopfsc/matched_pair.hpp"

using namespace hopfsc;

TEST_CASE("stage-one action enumeration over F_3 finds one hundred actions per side") {
  Fp::Desc d = Fp::field(3);
  HopfAlgebra<Fp> A = sweedler_h4<Fp>(d, true);
  HopfAlgebra<Fp> H = sweedler_h4<Fp>(d, false);
  verify(A);
  verify(H);
  std::vector<ActionTable<Fp>> lefts = enumerate_module_coalgebra_actions(H, A, Side::left);
  std::vector<ActionTable<Fp>> rights = enumerate_module_coalgebra_actions(H, A, Side::right);
  // 1 + p^2 + p^2 + p^4 split across the four families
  CHECK(lefts.size() == 100);
  CHECK(rights.size() == 100);
  // deterministic order and no duplicates
  for (std::size_t i = 0; i + 1 < lefts.size(); ++i)
    CHECK(detail::action_coeff_less(lefts[i], lefts[i + 1]));
  // every left table passes the module-coalgebra axioms it was enumerated for
  CHECK(check_module_coalgebra(H, A, lefts.front()).all_ok());
  CHECK(check_module_coalgebra(H, A, lefts.back()).all_ok());
  CHECK(check_module_coalgebra(H, A, rights[rights.size() / 2]).all_ok());
}

TEST_CASE("the full census over F_3: one trivial pair plus one canonical pair per scalar") {
  MatchedPairCensus census = enumerate_matched_pairs_h4h4(3);
  Fp::Desc d = Fp::field(3);

  REQUIRE(census.pairs.size() == 4);
  REQUIRE(census.labels.size() == 4);
  CHECK(census.left_family_counts == std::array<std::size_t, 4>{1, 9, 9, 81});
  CHECK(census.right_family_counts == std::array<std::size_t, 4>{1, 9, 9, 81});

  CHECK(census.labels[0].kind == PairLabel::trivial);
  for (int i = 1; i < 4; ++i) {
    CHECK(census.labels[static_cast<std::size_t>(i)].kind == PairLabel::canonical);
    CHECK(census.labels[static_cast<std::size_t>(i)].lambda == Fp(d, static_cast<uint32_t>(i - 1)));
  }

  // the stored pairs are the verified closed-form pairs, not lookalikes
  HopfAlgebra<Fp> A = sweedler_h4<Fp>(d, true);
  HopfAlgebra<Fp> H = sweedler_h4<Fp>(d, false);
  verify(A);
  verify(H);
  CHECK(census.pairs[0].verified);
  CHECK(census.pairs[0].lact == trivial_left_action(H, A));
  CHECK(census.pairs[0].ract == trivial_right_action(H, A));
  for (int i = 1; i < 4; ++i) {
    MatchedPairData<Fp> want = canonical_pair<Fp>(d, Fp(d, static_cast<uint32_t>(i - 1)));
    CHECK(census.pairs[static_cast<std::size_t>(i)].verified);
    CHECK(census.pairs[static_cast<std::size_t>(i)].lact == want.lact);
    CHECK(census.pairs[static_cast<std::size_t>(i)].ract == want.ract);
  }
}

TEST_CASE("the census rejects invalid field sizes") {
  CHECK_THROWS_AS(enumerate_matched_pairs_h4h4(2), input_error);
  CHECK_THROWS_AS(enumerate_matched_pairs_h4h4(9), input_error);
}

TEST_CASE("group algebras admit only the trivial actions on each other") {
  Fp::Desc d = Fp::field(5);
  HopfAlgebra<Fp> A = group_algebra_c2<Fp>(d);
  HopfAlgebra<Fp> H = group_algebra_c2<Fp>(d);
  verify(A);
  verify(H);
  std::vector<ActionTable<Fp>> lefts = enumerate_module_coalgebra_actions(H, A, Side::left);
  std::vector<ActionTable<Fp>> rights = enumerate_module_coalgebra_actions(H, A, Side::right);
  REQUIRE(lefts.size() == 1);
  REQUIRE(rights.size() == 1);
  CHECK(lefts[0] == trivial_left_action(H, A));
  CHECK(rights[0] == trivial_right_action(H, A));
}

TEST_CASE("action enumeration requires verified algebras") {
  Fp::Desc d = Fp::field(3);
  HopfAlgebra<Fp> A = sweedler_h4<Fp>(d, true);
  HopfAlgebra<Fp> H = sweedler_h4<Fp>(d, false);
  verify(H);
  CHECK_THROWS_AS(enumerate_module_coalgebra_actions(H, A, Side::left), input_error);
}
