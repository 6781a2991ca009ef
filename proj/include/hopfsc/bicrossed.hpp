#pragma once

#include <string>
#include <utility>

#include "hopfsc/hopf.hpp"
#include "hopfsc/matched_pair.hpp"

// Bicrossed product A |><| H of a matched pair: the tensor coalgebra with
// the smash-style multiplication
//
//   (a |><| g)(b |><| h) = sum a (g1 |> b1)  |><|  (g2 <| b2) h
//
// and antipode S(a |><| h) = (1 |><| S_H(h)) . (S_A(a) |><| 1). The basis
// is A-major: (i, p) -> i * dim H + p.

namespace hopfsc {

template <class K>
HopfAlgebra<K> bicrossed_product(const MatchedPairData<K> &mp) {
  if (!mp.verified)
    throw input_error("bicrossed_product requires a verified matched pair (run the compatibility check first)");
  const HopfAlgebra<K> &A = mp.A, &H = mp.H;
  require_verified(A, "bicrossed_product");
  require_verified(H, "bicrossed_product");
  const int na = A.dim, nh = H.dim, n = na * nh;
  auto idx = [&](int i, int p) { return i * nh + p; };

  HopfAlgebra<K> E;
  E.field = A.field;
  E.dim = n;
  E.mult = Tensor3<K>(n, n, n, E.zero());
  E.comult = Tensor3<K>(n, n, n, E.zero());
  E.unit = zero_vec<K>(n, E.field);
  E.counit = zero_vec<K>(n, E.field);
  E.antipode = Mat<K>(n, n, E.zero());
  for (int i = 0; i < na; ++i)
    for (int p = 0; p < nh; ++p)
      E.basis.push_back(detail::joined_name(A.basis[static_cast<std::size_t>(i)], H.basis[static_cast<std::size_t>(p)]));

  detail::SparseComult<K> dh(H), da(A);
  typename K::Desc d = E.field;

  // multiplication: Sweedler expansion over Delta(e_p^H) and Delta(e_j^A)
  for (int i = 0; i < na; ++i)
    for (int p = 0; p < nh; ++p)
      for (int j = 0; j < na; ++j)
        for (int q = 0; q < nh; ++q) {
          for (const auto &lp : dh.rows[static_cast<std::size_t>(p)])
            for (const auto &lj : da.rows[static_cast<std::size_t>(j)]) {
              K coeff = lp.coeff * lj.coeff;
              Vec<K> left = A.product(A.basis_vector(i), mp.lact.cell(lp.first, lj.first, d));
              Vec<K> right = H.product(mp.ract.cell(lp.second, lj.second, d), H.basis_vector(q));
              for (int k = 0; k < na; ++k) {
                if (left[static_cast<std::size_t>(k)].is_zero()) continue;
                K ck = coeff * left[static_cast<std::size_t>(k)];
                for (int l = 0; l < nh; ++l) {
                  const K &r = right[static_cast<std::size_t>(l)];
                  if (!r.is_zero()) E.mult.at(idx(i, p), idx(j, q), idx(k, l)) += ck * r;
                }
              }
            }
        }

  // tensor coalgebra, unit and counit
  for (int i = 0; i < na; ++i)
    for (int p = 0; p < nh; ++p)
      for (int j = 0; j < na; ++j)
        for (int k = 0; k < na; ++k)
          for (int q = 0; q < nh; ++q)
            for (int l = 0; l < nh; ++l) {
              const K &ca = A.comult.at(i, j, k);
              if (ca.is_zero()) continue;
              const K &ch = H.comult.at(p, q, l);
              if (!ch.is_zero()) E.comult.at(idx(i, p), idx(j, q), idx(k, l)) += ca * ch;
            }
  for (int i = 0; i < na; ++i)
    for (int p = 0; p < nh; ++p) {
      E.unit[static_cast<std::size_t>(idx(i, p))] = A.unit[static_cast<std::size_t>(i)] * H.unit[static_cast<std::size_t>(p)];
      E.counit[static_cast<std::size_t>(idx(i, p))] = A.counit[static_cast<std::size_t>(i)] * H.counit[static_cast<std::size_t>(p)];
    }

  // antipode column by column, using the finished multiplication table
  for (int i = 0; i < na; ++i)
    for (int p = 0; p < nh; ++p) {
      Vec<K> sa = A.antipode_of(A.basis_vector(i));
      Vec<K> sh = H.antipode_of(H.basis_vector(p));
      Vec<K> one_sh = zero_vec<K>(n, d);
      Vec<K> sa_one = zero_vec<K>(n, d);
      for (int j = 0; j < na; ++j)
        for (int q = 0; q < nh; ++q) {
          one_sh[static_cast<std::size_t>(idx(j, q))] = A.unit[static_cast<std::size_t>(j)] * sh[static_cast<std::size_t>(q)];
          sa_one[static_cast<std::size_t>(idx(j, q))] = sa[static_cast<std::size_t>(j)] * H.unit[static_cast<std::size_t>(q)];
        }
      Vec<K> s = E.product(one_sh, sa_one);
      for (int r = 0; r < n; ++r) E.antipode.at(r, idx(i, p)) = s[static_cast<std::size_t>(r)];
    }

  AxiomReport rep = check_hopf_axioms(E);
  if (!rep.all_ok())
    throw internal_error("bicrossed product of a verified matched pair failed the Hopf axioms:\n" + rep.summary());
  E.verified = true;
  return E;
}

// The sixteen-dimensional family: the bicrossed product of the canonical
// (H4, H4) pair at a given lambda. Presented by the relations returned by
// h16_relations, in particular xX + Xx = lambda(1 - Gg).
template <class K>
HopfAlgebra<K> h16_lambda(typename K::Desc d, const K &lambda) {
  return bicrossed_product(canonical_pair<K>(d, lambda));
}

}  // namespace hopfsc
