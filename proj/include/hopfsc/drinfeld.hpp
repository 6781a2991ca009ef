#pragma once

#include <utility>

#include "hopfsc/bicrossed.hpp"
#include "hopfsc/matched_pair.hpp"
#include "hopfsc/morphism.hpp"

namespace hopfsc {

// Canonical actions tying a Hopf algebra H to the coopposite of its dual:
//   (h |> f)(a) = f(S^{-1}(h_2) a h_1)       left action of H on (H*)^cop
//   h <| f      = f(S^{-1}(h_3) h_1) h_2     right action of (H*)^cop on H
// The bicrossed product of this pair is the Drinfel'd double of H.
template <class K>
MatchedPairData<K> canonical_double_actions(const HopfAlgebra<K> &H) {
  require_verified(H, "canonical_double_actions");
  auto sinv_opt = H.antipode.inverse();
  if (!sinv_opt) throw input_error("canonical_double_actions needs an invertible antipode");
  const Mat<K> &sinv = *sinv_opt;
  HopfAlgebra<K> A = twist(dual(H), false, true);
  typename K::Desc d = H.field;
  const int n = H.dim;

  detail::SparseComult<K> legs(H);
  auto d2 = detail::double_comult_legs(H);

  ActionTable<K> lact{Side::left, Tensor3<K>(n, n, n, K::zero(d))};
  for (int i = 0; i < n; ++i)
    for (const auto &leg : legs.rows[static_cast<std::size_t>(i)]) {
      Vec<K> s2 = sinv.column(leg.second);
      for (int k = 0; k < n; ++k) {
        Vec<K> w = H.product(H.product(s2, H.basis_vector(k)), H.basis_vector(leg.first));
        for (int j = 0; j < n; ++j) {
          K c = leg.coeff * w[static_cast<std::size_t>(j)];
          if (!c.is_zero()) lact.t.at(i, j, k) += c;
        }
      }
    }

  ActionTable<K> ract{Side::right, Tensor3<K>(n, n, n, K::zero(d))};
  for (int i = 0; i < n; ++i)
    for (const auto &t3 : d2[static_cast<std::size_t>(i)]) {
      Vec<K> w = H.product(sinv.column(t3.third), H.basis_vector(t3.first));
      for (int j = 0; j < n; ++j) {
        K c = t3.coeff * w[static_cast<std::size_t>(j)];
        if (!c.is_zero()) ract.t.at(i, j, t3.second) += c;
      }
    }

  MatchedPairData<K> mp{std::move(A), H, std::move(lact), std::move(ract), false};
  CheckReport rep = verify_matched_pair(mp);
  if (!mp.verified)
    throw internal_error("canonical double actions failed the matched-pair axioms:\n" + rep.summary());
  return mp;
}

template <class K>
HopfAlgebra<K> drinfeld_double(const HopfAlgebra<K> &H) {
  return bicrossed_product(canonical_double_actions(H));
}

}  // namespace hopfsc
