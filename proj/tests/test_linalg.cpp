#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hopfsc/linalg.hpp"

#include <optional>
#include <vector>

using namespace hopfsc;

namespace {

Mat<Rat> rat_matrix(int rows, int cols, std::initializer_list<long> entries) {
  Mat<Rat> m(rows, cols, Rat());
  auto it = entries.begin();
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m.at(i, j) = Rat(*it++);
  return m;
}

Vec<Rat> rat_vec(std::initializer_list<long> entries) {
  Vec<Rat> v;
  for (long e : entries) v.push_back(Rat(e));
  return v;
}

}  // namespace

TEST_CASE("matrix application and multiplication agree with hand values") {
  Mat<Rat> m = rat_matrix(2, 3, {1, 2, 3, 4, 5, 6});
  Vec<Rat> v = rat_vec({1, 0, -1});
  Vec<Rat> mv = m.apply(v);
  CHECK(mv == rat_vec({-2, -2}));

  Mat<Rat> n = rat_matrix(3, 2, {1, 0, 0, 1, 1, 1});
  Mat<Rat> mn = m.mul(n);
  CHECK(mn.at(0, 0) == Rat(4));
  CHECK(mn.at(0, 1) == Rat(5));
  CHECK(mn.at(1, 0) == Rat(10));
  CHECK(mn.at(1, 1) == Rat(11));
  CHECK(m.transpose().at(2, 1) == Rat(6));
}

TEST_CASE("rank and rref handle fractions exactly") {
  Mat<Rat> m(3, 3, Rat());
  m.at(0, 0) = Rat(1, 2);
  m.at(0, 1) = Rat(1, 3);
  m.at(1, 0) = Rat(1, 4);
  m.at(1, 1) = Rat(1, 6);
  m.at(2, 2) = Rat(7);
  // row1 = row0 / 2, so rank is 2
  CHECK(m.rank() == 2);

  Mat<Rat> id = Mat<Rat>::identity(4, Rat::Desc{});
  CHECK(id.rank() == 4);
}

TEST_CASE("inverse round-trips and detects singularity") {
  Mat<Rat> m = rat_matrix(3, 3, {2, 1, 0, 1, 1, 0, 0, 0, 3});
  std::optional<Mat<Rat>> inv = m.inverse();
  REQUIRE(inv.has_value());
  CHECK(m.mul(*inv) == Mat<Rat>::identity(3, Rat::Desc{}));
  CHECK(inv->mul(m) == Mat<Rat>::identity(3, Rat::Desc{}));

  Mat<Rat> sing = rat_matrix(2, 2, {1, 2, 2, 4});
  CHECK_FALSE(sing.inverse().has_value());
}

TEST_CASE("inverse over a prime field") {
  Fp::Desc d = Fp::field(5);
  Mat<Fp> m(2, 2, Fp::zero(d));
  m.at(0, 0) = Fp(d, 2);
  m.at(0, 1) = Fp(d, 3);
  m.at(1, 0) = Fp(d, 1);
  m.at(1, 1) = Fp(d, 4);
  // det = 8 - 3 = 5 = 0 mod 5, singular
  CHECK_FALSE(m.inverse().has_value());
  m.at(1, 1) = Fp(d, 1);  // det = 2 - 3 = -1
  REQUIRE(m.inverse().has_value());
  CHECK(m.mul(*m.inverse()) == Mat<Fp>::identity(2, d));
}

TEST_CASE("nullspace is echelon-normalized and complete") {
  // x + y + z = 0 over Q: kernel has dimension 2
  Mat<Rat> m = rat_matrix(1, 3, {1, 1, 1});
  std::vector<Vec<Rat>> ker = nullspace(m);
  REQUIRE(ker.size() == 2);
  for (const auto &v : ker) CHECK(is_zero_vec(m.apply(v)));
  // leading entries are monic and at distinct indices
  CHECK(detail::leading_index(ker[0]) != detail::leading_index(ker[1]));
  for (const auto &v : ker) CHECK(v[static_cast<std::size_t>(detail::leading_index(v))].is_one());
}

TEST_CASE("solve finds the unique solution when it exists") {
  Mat<Rat> m = rat_matrix(2, 2, {1, 1, 1, -1});
  Vec<Rat> rhs = rat_vec({3, 1});
  std::optional<Vec<Rat>> x = solve(m, rhs);
  REQUIRE(x.has_value());
  CHECK(*x == rat_vec({2, 1}));

  // inconsistent system
  Mat<Rat> bad = rat_matrix(2, 1, {1, 1});
  CHECK_FALSE(solve(bad, rat_vec({1, 2})).has_value());
}

TEST_CASE("solve_affine returns a particular solution plus the kernel") {
  Mat<Rat> m = rat_matrix(1, 2, {1, 1});
  std::optional<AffineSpace<Rat>> s = solve_affine(m, rat_vec({4}));
  REQUIRE(s.has_value());
  CHECK(m.apply(s->particular) == rat_vec({4}));
  REQUIRE(s->directions.size() == 1);
  CHECK(is_zero_vec(m.apply(s->directions[0])));
}

TEST_CASE("span predicates") {
  std::vector<Vec<Rat>> basis = {rat_vec({1, 0, 1}), rat_vec({0, 1, 0})};
  CHECK(in_span(basis, rat_vec({2, 3, 2})));
  CHECK_FALSE(in_span(basis, rat_vec({1, 0, 0})));
  std::vector<Vec<Rat>> same = {rat_vec({1, 1, 1}), rat_vec({1, -1, 1})};
  CHECK(same_span(basis, same));
  std::vector<Vec<Rat>> other = {rat_vec({1, 0, 0}), rat_vec({0, 1, 0})};
  CHECK_FALSE(same_span(basis, other));
}

TEST_CASE("affine enumeration visits every point exactly once") {
  Fp::Desc d = Fp::field(3);
  AffineSpace<Fp> s;
  s.particular = zero_vec<Fp>(2, d);
  s.directions = {basis_vec<Fp>(2, 0, d), basis_vec<Fp>(2, 1, d)};
  int count = 0;
  for_each_affine_point(s, 3, [&](const Vec<Fp> &) {
    ++count;
    return true;
  });
  CHECK(count == 9);

  // early exit stops the walk
  count = 0;
  for_each_affine_point(s, 3, [&](const Vec<Fp> &) {
    ++count;
    return count < 4;
  });
  CHECK(count == 4);
}

TEST_CASE("axpy and vector helpers") {
  Vec<Rat> v = rat_vec({1, 2});
  axpy(v, Rat(3), rat_vec({1, 1}));
  CHECK(v == rat_vec({4, 5}));
  CHECK(vec_sub(v, rat_vec({4, 5})) == rat_vec({0, 0}));
  CHECK(scaled(rat_vec({1, -2}), Rat(-2)) == rat_vec({-2, 4}));
  CHECK(vec_add(rat_vec({1, 1}), rat_vec({2, 3})) == rat_vec({3, 4}));
}

TEST_CASE("from_columns assembles in column order") {
  Mat<Rat> m = Mat<Rat>::from_columns({rat_vec({1, 2}), rat_vec({3, 4})});
  CHECK(m.at(0, 1) == Rat(3));
  CHECK(m.column(0) == rat_vec({1, 2}));
}
