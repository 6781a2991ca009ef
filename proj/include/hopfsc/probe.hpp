#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "hopfsc/hopf.hpp"

// Structure probes: group-like elements, skew-primitive spaces, integrals,
// unimodularity, and the integral-based semisimplicity test.

namespace hopfsc {

inline constexpr long long kGroupLikeScanBudget = 100000000;  // candidate evaluations

namespace detail {

template <class K>
bool vec_lex_less(const Vec<K> &a, const Vec<K> &b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == b[i]) continue;
    return a[i] < b[i];
  }
  return false;
}

// unit first, then lexicographic; callers rely on this being deterministic
template <class K>
void sort_group_likes(const HopfAlgebra<K> &H, std::vector<Vec<K>> &out) {
  std::sort(out.begin(), out.end(), vec_lex_less<K>);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  auto it = std::find(out.begin(), out.end(), H.unit);
  if (it != out.end()) std::rotate(out.begin(), it, it + 1);
}

// A group-like set is a group: close the verified seed under products and
// antipode images. Group-likes are linearly independent, so more than dim
// of them means the input data is inconsistent.
template <class K>
void close_group_like_set(const HopfAlgebra<K> &H, std::vector<Vec<K>> &set) {
  auto contains = [&](const Vec<K> &v) { return std::find(set.begin(), set.end(), v) != set.end(); };
  if (!set.empty() && !contains(H.unit)) set.push_back(H.unit);
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (static_cast<int>(set.size()) > H.dim)
      throw internal_error("group-like closure exceeded the algebra dimension");
    Vec<K> inv = H.antipode_of(set[i]);
    if (!(H.product(set[i], inv) == H.unit) || !(H.product(inv, set[i]) == H.unit))
      throw internal_error("antipode image of a group-like is not its inverse");
    if (!contains(inv)) set.push_back(inv);
    for (std::size_t j = 0; j <= i; ++j) {
      Vec<K> ab = H.product(set[i], set[j]);
      Vec<K> ba = H.product(set[j], set[i]);
      if (!H.is_group_like(ab) || !H.is_group_like(ba))
        throw internal_error("product of group-likes is not group-like");
      if (!contains(ab)) set.push_back(ab);
      if (!contains(ba)) set.push_back(ba);
    }
  }
}

// Backtracking enumeration over F_p. Coordinates are assigned in index
// order; the defining equations sum(i) c_i comult(i,j,k) = c_j c_k are
// checked as soon as every coordinate they mention is set, which prunes the
// p^dim space down to a handful of visited nodes in practice. Each partial
// assignment counts against the scan budget.
inline std::vector<Vec<Fp>> enumerate_group_likes_fp(const HopfAlgebra<Fp> &H) {
  const int n = H.dim;
  const uint32_t p = H.field.p;
  // equation (j,k) becomes checkable at depth max(j, k, last i with
  // comult(i,j,k) != 0)
  std::vector<std::vector<std::pair<int, int>>> eqs_at(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) {
      int ready = std::max(j, k);
      for (int i = 0; i < n; ++i)
        if (!H.comult.at(i, j, k).is_zero()) ready = std::max(ready, i);
      eqs_at[static_cast<std::size_t>(ready)].push_back({j, k});
    }

  std::vector<Vec<Fp>> found;
  Vec<Fp> c(static_cast<std::size_t>(n), Fp::zero(H.field));
  long long nodes = 0;

  auto holds = [&](int j, int k, int depth) {
    Fp lhs = Fp::zero(H.field);
    for (int i = 0; i <= depth; ++i) {
      const Fp &cc = H.comult.at(i, j, k);
      if (!cc.is_zero()) lhs += c[static_cast<std::size_t>(i)] * cc;
    }
    return lhs == c[static_cast<std::size_t>(j)] * c[static_cast<std::size_t>(k)];
  };

  auto dfs = [&](auto &&self, int depth) -> void {
    if (depth == n) {
      Fp eps = H.counit_of(c);
      if (eps.is_one()) found.push_back(c);
      return;
    }
    for (uint32_t val = 0; val < p; ++val) {
      if (++nodes > kGroupLikeScanBudget)
        throw input_error("group-like scan bound exceeded; supply an explicit candidate list instead");
      c[static_cast<std::size_t>(depth)] = Fp(H.field, val);
      bool ok = true;
      for (auto [j, k] : eqs_at[static_cast<std::size_t>(depth)])
        if (!holds(j, k, depth)) {
          ok = false;
          break;
        }
      if (ok) self(self, depth + 1);
    }
    c[static_cast<std::size_t>(depth)] = Fp::zero(H.field);
  };
  dfs(dfs, 0);
  return found;
}

}  // namespace detail

// All c with Delta(c) = c (x) c and eps(c) = 1. Enumerates over F_p (guarded
// by the scan budget); over the rationals the equation is quadratic and no
// enumeration is attempted, so candidates are required there.
template <class K>
std::vector<Vec<K>> group_likes(const HopfAlgebra<K> &H) {
  require_verified(H, "group_likes");
  if constexpr (std::is_same_v<K, Fp>) {
    std::vector<Vec<K>> out = detail::enumerate_group_likes_fp(H);
    std::size_t enumerated = out.size();
    detail::close_group_like_set(H, out);
    if (out.size() != enumerated)
      throw internal_error("group-like closure added elements the enumeration missed");
    detail::sort_group_likes(H, out);
    return out;
  } else {
    throw input_error("group-like enumeration needs a finite field; over Q supply an explicit candidate list");
  }
}

// Candidate mode: verify each candidate and complete the survivors to a
// group (products and inverses of group-likes are group-likes).
template <class K>
std::vector<Vec<K>> group_likes(const HopfAlgebra<K> &H, const std::vector<Vec<K>> &candidates) {
  require_verified(H, "group_likes");
  std::vector<Vec<K>> out;
  for (const auto &cand : candidates) {
    if (static_cast<int>(cand.size()) != H.dim) throw input_error("group-like candidate has wrong dimension");
    if (H.is_group_like(cand)) out.push_back(cand);
  }
  detail::close_group_like_set(H, out);
  detail::sort_group_likes(H, out);
  return out;
}

// Group-likes with no candidate list required: full enumeration over F_p,
// the unit and the basis vectors (then closure under products and inverses)
// over the rationals. The rational fallback covers every algebra whose
// group-likes are basis elements, which includes all presets shipped here.
template <class K>
std::vector<Vec<K>> group_likes_auto(const HopfAlgebra<K> &H) {
  if constexpr (std::is_same_v<K, Fp>) {
    return group_likes(H);
  } else {
    std::vector<Vec<K>> cands;
    cands.push_back(H.unit);
    for (int i = 0; i < H.dim; ++i) cands.push_back(H.basis_vector(i));
    return group_likes(H, cands);
  }
}

// P_{a,b}(H) = { c : Delta(c) = c (x) a + b (x) c } for group-likes a, b.
// Returned as the canonical reduced-echelon kernel basis.
template <class K>
std::vector<Vec<K>> skew_primitives(const HopfAlgebra<K> &H, const Vec<K> &a, const Vec<K> &b) {
  require_verified(H, "skew_primitives");
  if (static_cast<int>(a.size()) != H.dim || static_cast<int>(b.size()) != H.dim)
    throw input_error("skew-primitive anchor has wrong dimension");
  if (!H.is_group_like(a) || !H.is_group_like(b))
    throw input_error("skew-primitive anchors must be group-like elements");
  const int n = H.dim;
  Mat<K> m(n * n, n, H.zero());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        K entry = H.comult.at(i, j, k);
        if (i == j) entry -= a[static_cast<std::size_t>(k)];
        if (i == k) entry -= b[static_cast<std::size_t>(j)];
        m.at(j * n + k, i) = entry;
      }
  return nullspace(m);
}

template <class K>
struct IntegralSpaces {
  std::vector<Vec<K>> left;   // t with h t = eps(h) t for all h
  std::vector<Vec<K>> right;  // t with t h = eps(h) t for all h
  bool unimodular = false;    // left and right spaces coincide
};

template <class K>
IntegralSpaces<K> integral_spaces(const HopfAlgebra<K> &H) {
  require_verified(H, "integral_spaces");
  const int n = H.dim;
  auto solve_side = [&](bool left) {
    // stack (L_h - eps(h) I) over all basis h; rows indexed (h, target coord)
    Mat<K> m(n * n, n, H.zero());
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
          K entry = left ? H.mult.at(i, j, k) : H.mult.at(j, i, k);
          if (j == k) entry -= H.counit[static_cast<std::size_t>(i)];
          m.at(i * n + k, j) = entry;
        }
    return nullspace(m);
  };
  IntegralSpaces<K> out;
  out.left = solve_side(true);
  out.right = solve_side(false);
  if (out.left.empty() || out.right.empty())
    throw internal_error("integral space is zero-dimensional; a finite-dimensional Hopf algebra always has one");
  if (out.left.size() != 1 || out.right.size() != 1)
    throw internal_error("integral space has dimension > 1; input structure constants are inconsistent");
  for (int i = 0; i < n; ++i) {  // re-verify the absorber property post-solve
    Vec<K> h = H.basis_vector(i);
    K e = H.counit[static_cast<std::size_t>(i)];
    if (!(H.product(h, out.left[0]) == scaled(out.left[0], e)))
      throw internal_error("solved left integral fails the absorber identity");
    if (!(H.product(out.right[0], h) == scaled(out.right[0], e)))
      throw internal_error("solved right integral fails the absorber identity");
  }
  out.unimodular = same_span(out.left, out.right);
  return out;
}

// Maschke-type criterion: semisimple iff eps does not kill the integral.
template <class K>
bool is_semisimple(const HopfAlgebra<K> &H) {
  IntegralSpaces<K> spaces = integral_spaces(H);
  return !H.counit_of(spaces.left[0]).is_zero();
}

}  // namespace hopfsc
