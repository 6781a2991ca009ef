#pragma once

#include <string>
#include <vector>

#include "hopfsc/hopf.hpp"

// Built-in algebras used throughout: the 4-dimensional Sweedler algebra, the
// group algebra of the order-2 group, and their tensor square. Also a small
// generators-and-relations checker so presentations like "x.X + X.x =
// lambda(1 - G.g)" can be verified against structure constants directly.

namespace hopfsc {

// Basis (1, g, x, gx) with g^2 = 1, x^2 = 0, xg = -gx, Delta(g) = g (x) g,
// Delta(x) = x (x) 1 + g (x) x, S(x) = -gx. upper_names swaps in (1, G, X, GX)
// so two copies can coexist in one product without name clashes.
template <class K>
HopfAlgebra<K> sweedler_h4(typename K::Desc d, bool upper_names = false) {
  HopfAlgebra<K> H;
  H.field = d;
  H.dim = 4;
  H.basis = upper_names ? std::vector<std::string>{"1", "G", "X", "GX"}
                        : std::vector<std::string>{"1", "g", "x", "gx"};
  const K z = K::zero(d), o = K::one(d), m = -o;
  H.mult = Tensor3<K>(4, 4, 4, z);
  H.comult = Tensor3<K>(4, 4, 4, z);
  H.unit = {o, z, z, z};
  H.counit = {o, o, z, z};
  H.antipode = Mat<K>(4, 4, z);

  auto M = [&](int i, int j, int k, const K &c) { H.mult.at(i, j, k) = c; };
  // row 1
  for (int j = 0; j < 4; ++j) M(0, j, j, o);
  // row g: g.1 = g, g.g = 1, g.x = gx, g.gx = x
  M(1, 0, 1, o);
  M(1, 1, 0, o);
  M(1, 2, 3, o);
  M(1, 3, 2, o);
  // row x: x.1 = x, x.g = -gx, x.x = 0, x.gx = 0
  M(2, 0, 2, o);
  M(2, 1, 3, m);
  // row gx: gx.1 = gx, gx.g = -x
  M(3, 0, 3, o);
  M(3, 1, 2, m);

  auto C = [&](int i, int j, int k, const K &c) { H.comult.at(i, j, k) = c; };
  C(0, 0, 0, o);                  // Delta(1) = 1 (x) 1
  C(1, 1, 1, o);                  // Delta(g) = g (x) g
  C(2, 2, 0, o);
  C(2, 1, 2, o);                  // Delta(x) = x (x) 1 + g (x) x
  C(3, 3, 1, o);
  C(3, 0, 3, o);                  // Delta(gx) = gx (x) g + 1 (x) gx

  H.antipode.at(0, 0) = o;        // S(1) = 1
  H.antipode.at(1, 1) = o;        // S(g) = g
  H.antipode.at(3, 2) = m;        // S(x) = -gx
  H.antipode.at(2, 3) = o;        // S(gx) = x
  return H;
}

// Group algebra of the cyclic group of order 2, basis (1, g).
template <class K>
HopfAlgebra<K> group_algebra_c2(typename K::Desc d) {
  HopfAlgebra<K> H;
  H.field = d;
  H.dim = 2;
  H.basis = {"1", "g"};
  const K z = K::zero(d), o = K::one(d);
  H.mult = Tensor3<K>(2, 2, 2, z);
  H.comult = Tensor3<K>(2, 2, 2, z);
  H.unit = {o, z};
  H.counit = {o, o};
  H.antipode = Mat<K>::identity(2, d);
  H.mult.at(0, 0, 0) = o;
  H.mult.at(0, 1, 1) = o;
  H.mult.at(1, 0, 1) = o;
  H.mult.at(1, 1, 0) = o;
  H.comult.at(0, 0, 0) = o;
  H.comult.at(1, 1, 1) = o;
  return H;
}

// Tensor square of the Sweedler algebra, upper-named factor first. Its basis
// order matches the bicrossed product built from the trivial matched pair, so
// the two can be compared coefficient by coefficient.
template <class K>
HopfAlgebra<K> tensor_square_h4(typename K::Desc d) {
  HopfAlgebra<K> A = sweedler_h4<K>(d, true);
  HopfAlgebra<K> H = sweedler_h4<K>(d, false);
  verify(A);
  verify(H);
  return tensor_product(A, H);
}

// ---- generators-and-relations checking ------------------------------------

// A word is a product of basis elements by index; the empty word is the unit.
template <class K>
struct RelTerm {
  K coeff;
  std::vector<int> word;
};

template <class K>
struct Relation {
  std::string name;
  std::vector<RelTerm<K>> lhs;
  std::vector<RelTerm<K>> rhs;
};

template <class K>
Vec<K> eval_word(const HopfAlgebra<K> &H, const std::vector<int> &word) {
  Vec<K> acc = H.unit;
  for (int ix : word) acc = H.product(acc, H.basis_vector(ix));
  return acc;
}

template <class K>
Vec<K> eval_side(const HopfAlgebra<K> &H, const std::vector<RelTerm<K>> &side) {
  Vec<K> acc = H.zvec();
  for (const auto &t : side) axpy(acc, t.coeff, eval_word(H, t.word));
  return acc;
}

struct RelationResult {
  std::string name;
  bool ok;
  std::string lhs_value;
  std::string rhs_value;
};

template <class K>
std::vector<RelationResult> verify_presentation(const HopfAlgebra<K> &H, const std::vector<Relation<K>> &rels) {
  std::vector<RelationResult> out;
  for (const auto &r : rels) {
    Vec<K> l = eval_side(H, r.lhs);
    Vec<K> rr = eval_side(H, r.rhs);
    out.push_back({r.name, l == rr, format_linear(H, l), format_linear(H, rr)});
  }
  return out;
}

// The defining relations of the 16-dimensional bicrossed products, phrased
// against the product basis where g, x live at indices 1, 2 and G, X at 4, 8.
template <class K>
std::vector<Relation<K>> h16_relations(typename K::Desc d, const K &lambda) {
  const K o = K::one(d), m = -o;
  const int g = 1, x = 2, G = 4, X = 8;
  std::vector<Relation<K>> rels;
  auto t = [](K c, std::vector<int> w) { return RelTerm<K>{c, std::move(w)}; };
  rels.push_back({"g^2 = 1", {t(o, {g, g})}, {t(o, {})}});
  rels.push_back({"G^2 = 1", {t(o, {G, G})}, {t(o, {})}});
  rels.push_back({"x^2 = 0", {t(o, {x, x})}, {}});
  rels.push_back({"X^2 = 0", {t(o, {X, X})}, {}});
  rels.push_back({"xg = -gx", {t(o, {x, g})}, {t(m, {g, x})}});
  rels.push_back({"XG = -GX", {t(o, {X, G})}, {t(m, {G, X})}});
  rels.push_back({"gG = Gg", {t(o, {g, G})}, {t(o, {G, g})}});
  rels.push_back({"gX = -Xg", {t(o, {g, X})}, {t(m, {X, g})}});
  rels.push_back({"xG = -Gx", {t(o, {x, G})}, {t(m, {G, x})}});
  rels.push_back({"xX + Xx = lambda(1 - Gg)",
                  {t(o, {x, X}), t(o, {X, x})},
                  {t(lambda, {}), t(-lambda, {G, g})}});
  return rels;
}

}  // namespace hopfsc
