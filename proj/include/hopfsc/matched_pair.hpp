#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hopfsc/hopf.hpp"
#include "hopfsc/presets.hpp"
#include "hopfsc/probe.hpp"

// Matched pairs (A, H, |>, <|) of Hopf algebras: action tables, the module-
// coalgebra and compatibility checks mp1..mp4, the trivial and canonical
// (H4, H4) pairs, and the exhaustive census of matched pairs over F_p.
//
// Action tables always put the H index first and the A index second:
//   left  |> : H (x) A -> A   t(i,j,k) = coefficient of e_k in e_i |> e_j
//   right <| : H (x) A -> H   t(i,j,k) = coefficient of e_k in e_i <| e_j

namespace hopfsc {

enum class Side { left, right };

template <class K>
struct ActionTable {
  Side side = Side::left;
  Tensor3<K> t;

  Vec<K> cell(int i, int j, typename K::Desc d) const {
    Vec<K> out = zero_vec<K>(t.d3(), d);
    for (int k = 0; k < t.d3(); ++k) out[static_cast<std::size_t>(k)] = t.at(i, j, k);
    return out;
  }

  friend bool operator==(const ActionTable &a, const ActionTable &b) { return a.side == b.side && a.t == b.t; }
};

// bilinear extension of the table to arbitrary vectors
template <class K>
Vec<K> apply_action(const ActionTable<K> &act, typename K::Desc d, const Vec<K> &h, const Vec<K> &a) {
  Vec<K> out = zero_vec<K>(act.t.d3(), d);
  for (int i = 0; i < act.t.d1(); ++i) {
    if (h[static_cast<std::size_t>(i)].is_zero()) continue;
    for (int j = 0; j < act.t.d2(); ++j) {
      if (a[static_cast<std::size_t>(j)].is_zero()) continue;
      K c = h[static_cast<std::size_t>(i)] * a[static_cast<std::size_t>(j)];
      for (int k = 0; k < act.t.d3(); ++k) {
        const K &e = act.t.at(i, j, k);
        if (!e.is_zero()) out[static_cast<std::size_t>(k)] += c * e;
      }
    }
  }
  return out;
}

template <class K>
ActionTable<K> trivial_left_action(const HopfAlgebra<K> &H, const HopfAlgebra<K> &A) {
  ActionTable<K> act;
  act.side = Side::left;
  act.t = Tensor3<K>(H.dim, A.dim, A.dim, A.zero());
  for (int i = 0; i < H.dim; ++i)
    for (int j = 0; j < A.dim; ++j) act.t.at(i, j, j) = H.counit[static_cast<std::size_t>(i)];
  return act;
}

template <class K>
ActionTable<K> trivial_right_action(const HopfAlgebra<K> &H, const HopfAlgebra<K> &A) {
  ActionTable<K> act;
  act.side = Side::right;
  act.t = Tensor3<K>(H.dim, A.dim, H.dim, H.zero());
  for (int i = 0; i < H.dim; ++i)
    for (int j = 0; j < A.dim; ++j) act.t.at(i, j, i) = A.counit[static_cast<std::size_t>(j)];
  return act;
}

template <class K>
struct MatchedPairData {
  HopfAlgebra<K> A;       // target of |>
  HopfAlgebra<K> H;       // target of <|
  ActionTable<K> lact;    // |> : H (x) A -> A
  ActionTable<K> ract;    // <| : H (x) A -> H
  bool verified = false;  // set once check_matched_pair has passed
};

struct CheckItem {
  std::string name;
  bool ok = true;
  std::vector<std::string> witnesses;  // failing basis tuples, capped
};

struct CheckReport {
  std::vector<CheckItem> items;

  bool all_ok() const {
    for (const auto &it : items)
      if (!it.ok) return false;
    return true;
  }
  const CheckItem *find(const std::string &name) const {
    for (const auto &it : items)
      if (it.name == name) return &it;
    return nullptr;
  }
  std::string summary() const {
    std::string s;
    for (const auto &it : items) {
      s += it.ok ? "ok   " : "FAIL ";
      s += it.name;
      if (!it.ok && !it.witnesses.empty()) s += " at " + it.witnesses.front();
      s += "\n";
    }
    return s;
  }
};

inline constexpr std::size_t kWitnessCap = 64;

namespace detail {

inline void add_witness(CheckItem &item, std::string w) {
  item.ok = false;
  if (item.witnesses.size() < kWitnessCap) item.witnesses.push_back(std::move(w));
}

// nonzero coproduct legs of one basis element, flattened for tight loops
template <class K>
struct SparseComult {
  struct Leg {
    int first, second;
    K coeff;
  };
  std::vector<std::vector<Leg>> rows;

  explicit SparseComult(const HopfAlgebra<K> &H) : rows(static_cast<std::size_t>(H.dim)) {
    for (int i = 0; i < H.dim; ++i)
      for (int j = 0; j < H.dim; ++j)
        for (int k = 0; k < H.dim; ++k) {
          const K &c = H.comult.at(i, j, k);
          if (!c.is_zero()) rows[static_cast<std::size_t>(i)].push_back({j, k, c});
        }
  }
};

}  // namespace detail

// Coalgebra-map and module axioms for one action. The acting algebra is H
// for a left action and A for a right action; the other one is the module.
template <class K>
CheckReport check_module_coalgebra(const HopfAlgebra<K> &H, const HopfAlgebra<K> &A, const ActionTable<K> &act) {
  require_verified(H, "check_module_coalgebra");
  require_verified(A, "check_module_coalgebra");
  if (act.t.d1() != H.dim || act.t.d2() != A.dim) throw input_error("action table shape does not match the algebras");
  const bool left = act.side == Side::left;
  const HopfAlgebra<K> &T = left ? A : H;
  if (act.t.d3() != T.dim) throw input_error("action table target dimension is wrong");
  typename K::Desc d = H.field;
  auto pair_name = [&](int i, int j) {
    return "(" + H.basis[static_cast<std::size_t>(i)] + ", " + A.basis[static_cast<std::size_t>(j)] + ")";
  };

  CheckReport rep;

  {
    CheckItem it{"unit-action", true, {}};
    if (left) {  // 1 |> a = a
      for (int j = 0; j < A.dim; ++j)
        if (!(apply_action(act, d, H.unit, A.basis_vector(j)) == A.basis_vector(j)))
          detail::add_witness(it, pair_name(0, j));
    } else {  // h <| 1 = h
      for (int i = 0; i < H.dim; ++i)
        if (!(apply_action(act, d, H.basis_vector(i), A.unit) == H.basis_vector(i)))
          detail::add_witness(it, pair_name(i, 0));
    }
    rep.items.push_back(std::move(it));
  }

  {
    CheckItem it{"module-associativity", true, {}};
    if (left) {  // (g h) |> a = g |> (h |> a)
      for (int i = 0; i < H.dim; ++i)
        for (int j = 0; j < H.dim; ++j) {
          Vec<K> gh = H.product(H.basis_vector(i), H.basis_vector(j));
          for (int a = 0; a < A.dim; ++a) {
            Vec<K> lhs = apply_action(act, d, gh, A.basis_vector(a));
            Vec<K> rhs = apply_action(act, d, H.basis_vector(i), apply_action(act, d, H.basis_vector(j), A.basis_vector(a)));
            if (!(lhs == rhs))
              detail::add_witness(it, "(" + H.basis[static_cast<std::size_t>(i)] + " " + H.basis[static_cast<std::size_t>(j)] +
                                          "; " + A.basis[static_cast<std::size_t>(a)] + ")");
          }
        }
    } else {  // h <| (a b) = (h <| a) <| b
      for (int a = 0; a < A.dim; ++a)
        for (int b = 0; b < A.dim; ++b) {
          Vec<K> ab = A.product(A.basis_vector(a), A.basis_vector(b));
          for (int i = 0; i < H.dim; ++i) {
            Vec<K> lhs = apply_action(act, d, H.basis_vector(i), ab);
            Vec<K> rhs = apply_action(act, d, apply_action(act, d, H.basis_vector(i), A.basis_vector(a)), A.basis_vector(b));
            if (!(lhs == rhs))
              detail::add_witness(it, "(" + H.basis[static_cast<std::size_t>(i)] + "; " + A.basis[static_cast<std::size_t>(a)] +
                                          " " + A.basis[static_cast<std::size_t>(b)] + ")");
          }
        }
    }
    rep.items.push_back(std::move(it));
  }

  {
    CheckItem it{"coalgebra-map-comult", true, {}};
    detail::SparseComult<K> dh(H), da(A);
    Mat<K> want(T.dim, T.dim, T.zero());
    for (int i = 0; i < H.dim; ++i)
      for (int j = 0; j < A.dim; ++j) {
        Mat<K> got = T.coproduct(act.cell(i, j, d));
        for (int m = 0; m < T.dim; ++m)
          for (int n = 0; n < T.dim; ++n) want.at(m, n) = T.zero();
        for (const auto &lh : dh.rows[static_cast<std::size_t>(i)])
          for (const auto &la : da.rows[static_cast<std::size_t>(j)]) {
            K coeff = lh.coeff * la.coeff;
            for (int m = 0; m < T.dim; ++m) {
              const K &u = act.t.at(lh.first, la.first, m);
              if (u.is_zero()) continue;
              for (int n = 0; n < T.dim; ++n) {
                const K &v = act.t.at(lh.second, la.second, n);
                if (!v.is_zero()) want.at(m, n) += coeff * u * v;
              }
            }
          }
        if (!(got == want)) detail::add_witness(it, pair_name(i, j));
      }
    rep.items.push_back(std::move(it));
  }

  {
    CheckItem it{"coalgebra-map-counit", true, {}};
    for (int i = 0; i < H.dim; ++i)
      for (int j = 0; j < A.dim; ++j) {
        K want = H.counit[static_cast<std::size_t>(i)] * A.counit[static_cast<std::size_t>(j)];
        if (!(T.counit_of(act.cell(i, j, d)) == want)) detail::add_witness(it, pair_name(i, j));
      }
    rep.items.push_back(std::move(it));
  }

  return rep;
}

namespace detail {

// mp4 on one basis pair: sum h1 <| a1 (x) h2 |> a2 = sum h2 <| a2 (x) h1 |> a1
template <class K>
bool mp4_holds_at(const SparseComult<K> &dh, const SparseComult<K> &da, const ActionTable<K> &lact,
                  const ActionTable<K> &ract, const HopfAlgebra<K> &H, const HopfAlgebra<K> &A, int i, int j) {
  const int nh = H.dim, na = A.dim;
  for (int m = 0; m < nh; ++m)
    for (int n = 0; n < na; ++n) {
      K lhs = H.zero(), rhs = H.zero();
      for (const auto &lh : dh.rows[static_cast<std::size_t>(i)])
        for (const auto &la : da.rows[static_cast<std::size_t>(j)]) {
          K coeff = lh.coeff * la.coeff;
          lhs += coeff * ract.t.at(lh.first, la.first, m) * lact.t.at(lh.second, la.second, n);
          rhs += coeff * ract.t.at(lh.second, la.second, m) * lact.t.at(lh.first, la.first, n);
        }
      if (!(lhs == rhs)) return false;
    }
  return true;
}

// mp2 on one basis triple: g |> (a b) = sum (g1 |> a1) ((g2 <| a2) |> b)
template <class K>
bool mp2_holds_at(const SparseComult<K> &dh, const SparseComult<K> &da, const ActionTable<K> &lact,
                  const ActionTable<K> &ract, const HopfAlgebra<K> &H, const HopfAlgebra<K> &A, int g, int a, int b) {
  typename K::Desc d = H.field;
  Vec<K> lhs = apply_action(lact, d, H.basis_vector(g), A.product(A.basis_vector(a), A.basis_vector(b)));
  Vec<K> rhs = A.zvec();
  for (const auto &lh : dh.rows[static_cast<std::size_t>(g)])
    for (const auto &la : da.rows[static_cast<std::size_t>(a)]) {
      Vec<K> inner = apply_action(lact, d, ract.cell(lh.second, la.second, d), A.basis_vector(b));
      Vec<K> term = A.product(lact.cell(lh.first, la.first, d), inner);
      axpy(rhs, lh.coeff * la.coeff, term);
    }
  return lhs == rhs;
}

// mp3 on one basis triple: (g h) <| a = sum (g <| (h1 |> a1)) (h2 <| a2)
template <class K>
bool mp3_holds_at(const SparseComult<K> &dh, const SparseComult<K> &da, const ActionTable<K> &lact,
                  const ActionTable<K> &ract, const HopfAlgebra<K> &H, const HopfAlgebra<K> &A, int g, int h, int a) {
  typename K::Desc d = H.field;
  Vec<K> lhs = apply_action(ract, d, H.product(H.basis_vector(g), H.basis_vector(h)), A.basis_vector(a));
  Vec<K> rhs = H.zvec();
  for (const auto &lh : dh.rows[static_cast<std::size_t>(h)])
    for (const auto &la : da.rows[static_cast<std::size_t>(a)]) {
      Vec<K> inner = apply_action(ract, d, H.basis_vector(g), lact.cell(lh.first, la.first, d));
      Vec<K> term = H.product(inner, ract.cell(lh.second, la.second, d));
      axpy(rhs, lh.coeff * la.coeff, term);
    }
  return lhs == rhs;
}

template <class K>
bool mp4_holds(const HopfAlgebra<K> &A, const HopfAlgebra<K> &H, const ActionTable<K> &lact, const ActionTable<K> &ract,
               const SparseComult<K> &dh, const SparseComult<K> &da) {
  for (int i = 0; i < H.dim; ++i)
    for (int j = 0; j < A.dim; ++j)
      if (!mp4_holds_at(dh, da, lact, ract, H, A, i, j)) return false;
  return true;
}

template <class K>
bool mp2_holds(const HopfAlgebra<K> &A, const HopfAlgebra<K> &H, const ActionTable<K> &lact, const ActionTable<K> &ract,
               const SparseComult<K> &dh, const SparseComult<K> &da) {
  for (int g = 0; g < H.dim; ++g)
    for (int a = 0; a < A.dim; ++a)
      for (int b = 0; b < A.dim; ++b)
        if (!mp2_holds_at(dh, da, lact, ract, H, A, g, a, b)) return false;
  return true;
}

template <class K>
bool mp3_holds(const HopfAlgebra<K> &A, const HopfAlgebra<K> &H, const ActionTable<K> &lact, const ActionTable<K> &ract,
               const SparseComult<K> &dh, const SparseComult<K> &da) {
  for (int g = 0; g < H.dim; ++g)
    for (int h = 0; h < H.dim; ++h)
      for (int a = 0; a < A.dim; ++a)
        if (!mp3_holds_at(dh, da, lact, ract, H, A, g, h, a)) return false;
  return true;
}

}  // namespace detail

// Full compatibility report: both module-coalgebra structures, then the
// normalization mp1 and the compatibilities mp2, mp3, mp4. Each failing
// axiom records the basis tuples where it breaks (up to a cap), in scan
// order, so specific counterexamples stay retrievable even when an earlier
// tuple also fails.
template <class K>
CheckReport check_matched_pair(const MatchedPairData<K> &mp) {
  const HopfAlgebra<K> &A = mp.A, &H = mp.H;
  typename K::Desc d = H.field;
  if (!(A.field == H.field)) throw input_error("matched pair requires both algebras over one field");
  if (mp.lact.side != Side::left || mp.ract.side != Side::right)
    throw input_error("matched pair needs one left and one right action table");

  CheckReport rep;
  {
    CheckItem it{"left-action-module-coalgebra", true, {}};
    CheckReport sub = check_module_coalgebra(H, A, mp.lact);
    for (const auto &s : sub.items)
      if (!s.ok)
        for (const auto &w : s.witnesses) detail::add_witness(it, s.name + " " + w);
    rep.items.push_back(std::move(it));
  }
  {
    CheckItem it{"right-action-module-coalgebra", true, {}};
    CheckReport sub = check_module_coalgebra(H, A, mp.ract);
    for (const auto &s : sub.items)
      if (!s.ok)
        for (const auto &w : s.witnesses) detail::add_witness(it, s.name + " " + w);
    rep.items.push_back(std::move(it));
  }

  {
    CheckItem it{"mp1", true, {}};
    for (int i = 0; i < H.dim; ++i)  // h |> 1 = eps(h) 1
      if (!(apply_action(mp.lact, d, H.basis_vector(i), A.unit) == scaled(A.unit, H.counit[static_cast<std::size_t>(i)])))
        detail::add_witness(it, "(" + H.basis[static_cast<std::size_t>(i)] + " |> 1)");
    for (int j = 0; j < A.dim; ++j)  // 1 <| a = eps(a) 1
      if (!(apply_action(mp.ract, d, H.unit, A.basis_vector(j)) == scaled(H.unit, A.counit[static_cast<std::size_t>(j)])))
        detail::add_witness(it, "(1 <| " + A.basis[static_cast<std::size_t>(j)] + ")");
    rep.items.push_back(std::move(it));
  }

  detail::SparseComult<K> dh(H), da(A);
  {
    CheckItem it{"mp2", true, {}};
    for (int g = 0; g < H.dim; ++g)
      for (int a = 0; a < A.dim; ++a)
        for (int b = 0; b < A.dim; ++b)
          if (!detail::mp2_holds_at(dh, da, mp.lact, mp.ract, H, A, g, a, b))
            detail::add_witness(it, "(" + H.basis[static_cast<std::size_t>(g)] + "; " + A.basis[static_cast<std::size_t>(a)] +
                                        ", " + A.basis[static_cast<std::size_t>(b)] + ")");
    rep.items.push_back(std::move(it));
  }
  {
    CheckItem it{"mp3", true, {}};
    for (int g = 0; g < H.dim; ++g)
      for (int h = 0; h < H.dim; ++h)
        for (int a = 0; a < A.dim; ++a)
          if (!detail::mp3_holds_at(dh, da, mp.lact, mp.ract, H, A, g, h, a))
            detail::add_witness(it, "(" + H.basis[static_cast<std::size_t>(g)] + ", " + H.basis[static_cast<std::size_t>(h)] +
                                        "; " + A.basis[static_cast<std::size_t>(a)] + ")");
    rep.items.push_back(std::move(it));
  }
  {
    CheckItem it{"mp4", true, {}};
    for (int i = 0; i < H.dim; ++i)
      for (int j = 0; j < A.dim; ++j)
        if (!detail::mp4_holds_at(dh, da, mp.lact, mp.ract, H, A, i, j))
          detail::add_witness(it, "(" + H.basis[static_cast<std::size_t>(i)] + ", " + A.basis[static_cast<std::size_t>(j)] + ")");
    rep.items.push_back(std::move(it));
  }
  return rep;
}

template <class K>
CheckReport verify_matched_pair(MatchedPairData<K> &mp) {
  CheckReport rep = check_matched_pair(mp);
  mp.verified = rep.all_ok();
  return rep;
}

template <class K>
MatchedPairData<K> trivial_pair(const HopfAlgebra<K> &A, const HopfAlgebra<K> &H) {
  MatchedPairData<K> mp{A, H, trivial_left_action(H, A), trivial_right_action(H, A), false};
  verify_matched_pair(mp);
  if (!mp.verified) throw internal_error("trivial actions failed the matched-pair axioms");
  return mp;
}

// ---- the (H4, H4) action families -----------------------------------------
//
// Right actions <| : H4 (x) H4' -> H4 with 1 <| a = eps(a)1 come in four
// families; rows 1 and g are always (1,1,0,0) and (g,g,0,0), and the x and
// gx rows are each either trivial or a two-parameter skew-primitive row.
// Left actions |> are the mirror picture on the other tensor factor, with
// the g row either fixing X, GX or reflecting them.

template <class K>
ActionTable<K> right_action_family(typename K::Desc d, int family, const K &a, const K &b, const K &c, const K &dd) {
  if (family < 1 || family > 4) throw input_error("right action family index must be 1..4");
  const K z = K::zero(d), o = K::one(d);
  ActionTable<K> act;
  act.side = Side::right;
  act.t = Tensor3<K>(4, 4, 4, z);
  auto set_cell = [&](int i, int j, std::array<K, 4> v) {
    for (int k = 0; k < 4; ++k) act.t.at(i, j, k) = v[static_cast<std::size_t>(k)];
  };
  // col 0: h <| 1 = h; row 0: 1 <| a = eps(a)1; row g: (g, g, 0, 0)
  for (int i = 0; i < 4; ++i) act.t.at(i, 0, i) = o;
  set_cell(0, 1, {o, z, z, z});
  set_cell(1, 1, {z, o, z, z});
  bool x_param = family == 3 || family == 4;
  bool gx_param = family == 2 || family == 4;
  if (x_param) {
    set_cell(2, 1, {a, -a, -o, z});   // x <| G  = a - ag - x
    set_cell(2, 2, {b, -b, z, z});    // x <| X  = b - bg
    set_cell(2, 3, {-b, b, z, z});    // x <| GX = -b + bg
  } else {
    set_cell(2, 1, {z, z, o, z});     // x <| G  = x
  }
  if (gx_param) {
    set_cell(3, 1, {c, -c, z, -o});   // gx <| G  = c - cg - gx
    set_cell(3, 2, {dd, -dd, z, z});  // gx <| X  = d - dg
    set_cell(3, 3, {-dd, dd, z, z});  // gx <| GX = -d + dg
  } else {
    set_cell(3, 1, {z, z, z, o});     // gx <| G = gx
  }
  return act;
}

template <class K>
ActionTable<K> left_action_family(typename K::Desc d, int family, const K &s, const K &t, const K &u, const K &v) {
  if (family < 1 || family > 4) throw input_error("left action family index must be 1..4");
  const K z = K::zero(d), o = K::one(d);
  ActionTable<K> act;
  act.side = Side::left;
  act.t = Tensor3<K>(4, 4, 4, z);
  auto set_cell = [&](int i, int j, std::array<K, 4> vv) {
    for (int k = 0; k < 4; ++k) act.t.at(i, j, k) = vv[static_cast<std::size_t>(k)];
  };
  // row 0: 1 |> a = a; col 0: h |> 1 = eps(h)1; g |> 1 = 1, g |> G = G
  for (int j = 0; j < 4; ++j) act.t.at(0, j, j) = o;
  set_cell(1, 0, {o, z, z, z});
  set_cell(1, 1, {z, o, z, z});
  bool X_param = family == 3 || family == 4;    // g row reflects X
  bool GX_param = family == 2 || family == 4;   // g row reflects GX
  if (X_param) {
    set_cell(1, 2, {s, -s, -o, z});  // g |> X = s - sG - X
    set_cell(2, 2, {t, -t, z, z});   // x |> X = t - tG
    set_cell(3, 2, {t, -t, z, z});   // gx |> X = t - tG
  } else {
    set_cell(1, 2, {z, z, o, z});    // g |> X = X
  }
  if (GX_param) {
    set_cell(1, 3, {u, -u, z, -o});  // g |> GX = u - uG - GX
    set_cell(2, 3, {v, -v, z, z});   // x |> GX = v - vG
    set_cell(3, 3, {v, -v, z, z});   // gx |> GX = v - vG
  } else {
    set_cell(1, 3, {z, z, z, o});    // g |> GX = GX
  }
  return act;
}

// The one-parameter family of nontrivial matched pairs on (H4, H4): the
// reflection left action with x |> X = lambda - lambda G and the right
// action with x <| X = lambda - lambda g.
template <class K>
MatchedPairData<K> canonical_pair(typename K::Desc d, const K &lambda) {
  HopfAlgebra<K> A = sweedler_h4<K>(d, true);
  HopfAlgebra<K> H = sweedler_h4<K>(d, false);
  verify(A);
  verify(H);
  if (!A.verified || !H.verified) throw internal_error("Sweedler preset failed its own axioms");
  MatchedPairData<K> mp;
  mp.A = std::move(A);
  mp.H = std::move(H);
  const K z = K::zero(d);
  mp.lact = left_action_family<K>(d, 4, z, lambda, z, lambda);
  mp.ract = right_action_family<K>(d, 4, z, lambda, z, -lambda);
  verify_matched_pair(mp);
  if (!mp.verified) throw internal_error("canonical matched pair failed mp1..mp4");
  return mp;
}

// Family classification of a census action against the closed forms above.
struct ActionFamily {
  int family = 0;                // 1..4, or 0 when the table matches none
  std::vector<Fp> params;        // (a,b) / (c,d) / (a,b,c,d) resp. (s,t) / (u,v) / (s,t,u,v)
};

inline ActionFamily classify_right_action(const ActionTable<Fp> &act, Fp::Desc d) {
  const Fp o = Fp::one(d);
  auto x_trivial = act.t.at(2, 1, 2) == o;    // x <| G has +x or -x
  auto gx_trivial = act.t.at(3, 1, 3) == o;
  ActionFamily out;
  Fp a = act.t.at(2, 1, 0), b = act.t.at(2, 2, 0);
  Fp c = act.t.at(3, 1, 0), dd = act.t.at(3, 2, 0);
  const Fp z = Fp::zero(d);
  if (x_trivial && gx_trivial) out = {1, {}};
  else if (x_trivial) out = {2, {c, dd}};
  else if (gx_trivial) out = {3, {a, b}};
  else out = {4, {a, b, c, dd}};
  ActionTable<Fp> expect = right_action_family<Fp>(d, out.family, x_trivial ? z : a, x_trivial ? z : b,
                                                   gx_trivial ? z : c, gx_trivial ? z : dd);
  if (!(expect == act)) return {0, {}};
  return out;
}

inline ActionFamily classify_left_action(const ActionTable<Fp> &act, Fp::Desc d) {
  const Fp o = Fp::one(d);
  auto X_trivial = act.t.at(1, 2, 2) == o;    // g |> X has +X or -X
  auto GX_trivial = act.t.at(1, 3, 3) == o;
  ActionFamily out;
  Fp s = act.t.at(1, 2, 0), t = act.t.at(2, 2, 0);
  Fp u = act.t.at(1, 3, 0), v = act.t.at(2, 3, 0);
  const Fp z = Fp::zero(d);
  if (X_trivial && GX_trivial) out = {1, {}};
  else if (X_trivial) out = {2, {u, v}};
  else if (GX_trivial) out = {3, {s, t}};
  else out = {4, {s, t, u, v}};
  ActionTable<Fp> expect = left_action_family<Fp>(d, out.family, X_trivial ? z : s, X_trivial ? z : t,
                                                  GX_trivial ? z : u, GX_trivial ? z : v);
  if (!(expect == act)) return {0, {}};
  return out;
}

// ---- exhaustive enumeration over F_p ---------------------------------------

namespace detail {

// Enumerates every action table with the normalized row/column that is a
// module coalgebra, by walking the free cells (i >= 1, j >= 1) in row-major
// order. The coalgebra-map condition at each cell is an affine-linear system
// in that cell's unknown vector given all earlier cells (it is quadratic
// only when both basis elements are group-like, in which case the cell must
// itself be a group-like of the target); module associativity is screened
// incrementally on every triple that is already fully assigned.
class ActionSearch {
 public:
  ActionSearch(const HopfAlgebra<Fp> &H, const HopfAlgebra<Fp> &A, Side side)
      : H_(H), A_(A), T_(side == Side::left ? A : H), side_(side), dh_(H), da_(A),
        table_(H.dim, A.dim, T_.dim, Fp::zero(H.field)),
        assigned_(static_cast<std::size_t>(H.dim) * static_cast<std::size_t>(A.dim), false) {
    check_triangular(H_);
    check_triangular(A_);
    target_group_likes_ = group_likes(T_);
  }

  std::vector<ActionTable<Fp>> run() {
    const Fp::Desc d = H_.field;
    const Fp o = Fp::one(d);
    // normalization row/column plus the unit action
    if (side_ == Side::left) {
      for (int j = 0; j < A_.dim; ++j) set_cell_basis(0, j, j, o);
      for (int i = 1; i < H_.dim; ++i)
        for (int k = 0; k < T_.dim; ++k)
          table_.at(i, 0, k) = H_.counit[static_cast<std::size_t>(i)] * A_.unit[static_cast<std::size_t>(k)];
    } else {
      for (int i = 0; i < H_.dim; ++i) set_cell_basis(i, 0, i, o);
      for (int j = 1; j < A_.dim; ++j)
        for (int k = 0; k < T_.dim; ++k)
          table_.at(0, j, k) = A_.counit[static_cast<std::size_t>(j)] * H_.unit[static_cast<std::size_t>(k)];
    }
    for (int i = 0; i < H_.dim; ++i) mark(i, 0);
    for (int j = 0; j < A_.dim; ++j) mark(0, j);

    free_cells_.clear();
    for (int i = 1; i < H_.dim; ++i)
      for (int j = 1; j < A_.dim; ++j) free_cells_.push_back({i, j});

    results_.clear();
    descend(0);
    return std::move(results_);
  }

 private:
  static void check_triangular(const HopfAlgebra<Fp> &X) {
    for (int i = 0; i < X.dim; ++i)
      for (int j = 0; j < X.dim; ++j)
        for (int k = 0; k < X.dim; ++k)
          if (!X.comult.at(i, j, k).is_zero() && (j > i || k > i))
            throw input_error("action enumeration needs a coalgebra-triangular basis order");
  }

  bool is_pointlike(const HopfAlgebra<Fp> &X, int i) const {
    for (int j = 0; j < X.dim; ++j)
      for (int k = 0; k < X.dim; ++k) {
        const Fp &c = X.comult.at(i, j, k);
        bool diag = j == i && k == i;
        if (diag && !c.is_one()) return false;
        if (!diag && !c.is_zero()) return false;
      }
    return true;
  }

  void set_cell_basis(int i, int j, int k, const Fp &c) { table_.at(i, j, k) = c; }

  void mark(int i, int j) { assigned_[static_cast<std::size_t>(i) * A_.dim + j] = true; }
  void unmark(int i, int j) { assigned_[static_cast<std::size_t>(i) * A_.dim + j] = false; }
  bool is_assigned(int i, int j) const { return assigned_[static_cast<std::size_t>(i) * A_.dim + j]; }

  void write_cell(int i, int j, const Vec<Fp> &w) {
    for (int k = 0; k < T_.dim; ++k) table_.at(i, j, k) = w[static_cast<std::size_t>(k)];
  }

  // evaluate one module-associativity triple if every needed cell is known;
  // returns false only on a definite violation
  bool triple_consistent(int p, int q, int r) const {
    const Fp::Desc d = H_.field;
    Vec<Fp> lhs = zero_vec<Fp>(T_.dim, d);
    if (side_ == Side::left) {  // (e_p e_q) |> e_r vs e_p |> (e_q |> e_r)
      for (int k = 0; k < H_.dim; ++k) {
        const Fp &m = H_.mult.at(p, q, k);
        if (m.is_zero()) continue;
        if (!is_assigned(k, r)) return true;
        for (int t = 0; t < T_.dim; ++t) lhs[static_cast<std::size_t>(t)] += m * table_.at(k, r, t);
      }
      if (!is_assigned(q, r)) return true;
      Vec<Fp> rhs = zero_vec<Fp>(T_.dim, d);
      for (int m = 0; m < A_.dim; ++m) {
        const Fp &w = table_.at(q, r, m);
        if (w.is_zero()) continue;
        if (!is_assigned(p, m)) return true;
        for (int t = 0; t < T_.dim; ++t) rhs[static_cast<std::size_t>(t)] += w * table_.at(p, m, t);
      }
      return lhs == rhs;
    }
    // e_p <| (e_q e_r) vs (e_p <| e_q) <| e_r
    for (int k = 0; k < A_.dim; ++k) {
      const Fp &m = A_.mult.at(q, r, k);
      if (m.is_zero()) continue;
      if (!is_assigned(p, k)) return true;
      for (int t = 0; t < T_.dim; ++t) lhs[static_cast<std::size_t>(t)] += m * table_.at(p, k, t);
    }
    if (!is_assigned(p, q)) return true;
    Vec<Fp> rhs = zero_vec<Fp>(T_.dim, d);
    for (int m = 0; m < H_.dim; ++m) {
      const Fp &w = table_.at(p, q, m);
      if (w.is_zero()) continue;
      if (!is_assigned(m, r)) return true;
      for (int t = 0; t < T_.dim; ++t) rhs[static_cast<std::size_t>(t)] += w * table_.at(m, r, t);
    }
    return lhs == rhs;
  }

  bool screen_modules() const {
    if (side_ == Side::left) {
      for (int p = 1; p < H_.dim; ++p)
        for (int q = 1; q < H_.dim; ++q)
          for (int r = 1; r < A_.dim; ++r)
            if (!triple_consistent(p, q, r)) return false;
    } else {
      for (int p = 1; p < H_.dim; ++p)
        for (int q = 1; q < A_.dim; ++q)
          for (int r = 1; r < A_.dim; ++r)
            if (!triple_consistent(p, q, r)) return false;
    }
    return true;
  }

  void descend(std::size_t depth) {
    if (depth == free_cells_.size()) {
      ActionTable<Fp> act;
      act.side = side_;
      act.t = table_;
      CheckReport rep = check_module_coalgebra(H_, A_, act);
      if (!rep.all_ok())
        throw internal_error("action search leaf failed the full module-coalgebra check");
      results_.push_back(std::move(act));
      return;
    }
    auto [i, j] = free_cells_[depth];
    const Fp::Desc d = H_.field;

    auto try_value = [&](const Vec<Fp> &w) {
      write_cell(i, j, w);
      mark(i, j);
      if (screen_modules()) descend(depth + 1);
      unmark(i, j);
      return true;  // keep enumerating
    };

    bool quad = !H_.comult.at(i, i, i).is_zero() && !A_.comult.at(j, j, j).is_zero();
    if (quad) {
      if (!is_pointlike(H_, i) || !is_pointlike(A_, j))
        throw input_error("action enumeration needs group-like or skew-primitive basis elements");
      for (const auto &g : target_group_likes_) try_value(g);
      return;
    }

    // affine system M w = rhs over the target: coalgebra-map rows (m,n)
    // plus the counit row
    const int nt = T_.dim;
    Mat<Fp> M(nt * nt + 1, nt, Fp::zero(d));
    Vec<Fp> rhs = zero_vec<Fp>(nt * nt + 1, d);
    for (int q = 0; q < nt; ++q)
      for (int m = 0; m < nt; ++m)
        for (int n = 0; n < nt; ++n) M.at(m * nt + n, q) = T_.comult.at(q, m, n);
    for (const auto &lh : dh_.rows[static_cast<std::size_t>(i)])
      for (const auto &la : da_.rows[static_cast<std::size_t>(j)]) {
        Fp coeff = lh.coeff * la.coeff;
        bool first_is_cell = lh.first == i && la.first == j;
        bool second_is_cell = lh.second == i && la.second == j;
        if (first_is_cell && second_is_cell)
          throw internal_error("quadratic term in a cell classified as linear");
        if (first_is_cell) {  // w (x) u with u known
          for (int m = 0; m < nt; ++m)
            for (int n = 0; n < nt; ++n) M.at(m * nt + n, m) -= coeff * table_.at(lh.second, la.second, n);
        } else if (second_is_cell) {  // u (x) w
          for (int m = 0; m < nt; ++m)
            for (int n = 0; n < nt; ++n) M.at(m * nt + n, n) -= coeff * table_.at(lh.first, la.first, m);
        } else {  // fully known
          for (int m = 0; m < nt; ++m)
            for (int n = 0; n < nt; ++n)
              rhs[static_cast<std::size_t>(m * nt + n)] += coeff * table_.at(lh.first, la.first, m) * table_.at(lh.second, la.second, n);
        }
      }
    for (int q = 0; q < nt; ++q) M.at(nt * nt, q) = T_.counit[static_cast<std::size_t>(q)];
    rhs[static_cast<std::size_t>(nt * nt)] = H_.counit[static_cast<std::size_t>(i)] * A_.counit[static_cast<std::size_t>(j)];

    auto space = solve_affine(M, rhs);
    if (!space) return;  // no admissible value for this cell
    for_each_affine_point(*space, d.p, [&](const Vec<Fp> &w) { return try_value(w); });
  }

  const HopfAlgebra<Fp> &H_, &A_, &T_;
  Side side_;
  SparseComult<Fp> dh_, da_;
  Tensor3<Fp> table_;
  std::vector<bool> assigned_;
  std::vector<std::pair<int, int>> free_cells_;
  std::vector<Vec<Fp>> target_group_likes_;
  std::vector<ActionTable<Fp>> results_;
};

inline bool action_coeff_less(const ActionTable<Fp> &a, const ActionTable<Fp> &b) {
  for (int i = 0; i < a.t.d1(); ++i)
    for (int j = 0; j < a.t.d2(); ++j)
      for (int k = 0; k < a.t.d3(); ++k) {
        const Fp &x = a.t.at(i, j, k), &y = b.t.at(i, j, k);
        if (x == y) continue;
        return x < y;
      }
  return false;
}

}  // namespace detail

// All normalized module-coalgebra actions of the given side, in a
// deterministic coefficient order.
inline std::vector<ActionTable<Fp>> enumerate_module_coalgebra_actions(const HopfAlgebra<Fp> &H,
                                                                       const HopfAlgebra<Fp> &A, Side side) {
  require_verified(H, "enumerate_module_coalgebra_actions");
  require_verified(A, "enumerate_module_coalgebra_actions");
  detail::ActionSearch search(H, A, side);
  std::vector<ActionTable<Fp>> out = search.run();
  std::sort(out.begin(), out.end(), detail::action_coeff_less);
  return out;
}

// Census entry labels: every matched pair on (H4, H4) is expected to be the
// trivial pair or the canonical pair at one lambda; anything else is
// reported as unclassified rather than silently dropped.
struct PairLabel {
  enum Kind { trivial, canonical, unclassified } kind = unclassified;
  Fp lambda;
};

struct MatchedPairCensus {
  std::vector<MatchedPairData<Fp>> pairs;
  std::vector<PairLabel> labels;                  // parallel to pairs
  std::array<std::size_t, 4> left_family_counts{};   // stage-1 census per family
  std::array<std::size_t, 4> right_family_counts{};
};

// Exhaustive matched-pair census on (H4, H4) over F_p: stage 1 enumerates
// both action sides, stage 2 screens every combination by mp4 (the cheapest
// discriminator), then mp2 and mp3, and survivors get the full check.
inline MatchedPairCensus enumerate_matched_pairs_h4h4(uint32_t prime) {
  Fp::Desc d = Fp::field(prime);
  HopfAlgebra<Fp> A = sweedler_h4<Fp>(d, true);
  HopfAlgebra<Fp> H = sweedler_h4<Fp>(d, false);
  verify(A);
  verify(H);

  MatchedPairCensus census;
  std::vector<ActionTable<Fp>> lefts = enumerate_module_coalgebra_actions(H, A, Side::left);
  std::vector<ActionTable<Fp>> rights = enumerate_module_coalgebra_actions(H, A, Side::right);
  for (const auto &act : lefts) {
    ActionFamily fam = classify_left_action(act, d);
    if (fam.family == 0) throw internal_error("stage-1 left action escapes the four closed-form families");
    ++census.left_family_counts[static_cast<std::size_t>(fam.family - 1)];
  }
  for (const auto &act : rights) {
    ActionFamily fam = classify_right_action(act, d);
    if (fam.family == 0) throw internal_error("stage-1 right action escapes the four closed-form families");
    ++census.right_family_counts[static_cast<std::size_t>(fam.family - 1)];
  }

  detail::SparseComult<Fp> dh(H), da(A);
  for (const auto &l : lefts)
    for (const auto &r : rights) {
      if (!detail::mp4_holds(A, H, l, r, dh, da)) continue;
      if (!detail::mp2_holds(A, H, l, r, dh, da)) continue;
      if (!detail::mp3_holds(A, H, l, r, dh, da)) continue;
      MatchedPairData<Fp> mp{A, H, l, r, false};
      verify_matched_pair(mp);
      if (!mp.verified) throw internal_error("mp2-mp4 survivor failed the full matched-pair check");
      census.pairs.push_back(std::move(mp));
    }

  // classify and order: trivial first, canonical by ascending lambda
  ActionTable<Fp> triv_l = trivial_left_action(H, A);
  ActionTable<Fp> triv_r = trivial_right_action(H, A);
  auto label_of = [&](const MatchedPairData<Fp> &mp) -> PairLabel {
    if (mp.lact == triv_l && mp.ract == triv_r) return {PairLabel::trivial, Fp::zero(d)};
    Fp lambda = mp.lact.t.at(2, 2, 0);  // x |> X = lambda - lambda G
    MatchedPairData<Fp> want = canonical_pair<Fp>(d, lambda);
    if (mp.lact == want.lact && mp.ract == want.ract) return {PairLabel::canonical, lambda};
    return {PairLabel::unclassified, Fp::zero(d)};
  };
  std::vector<std::pair<MatchedPairData<Fp>, PairLabel>> tagged;
  tagged.reserve(census.pairs.size());
  for (auto &mp : census.pairs) {
    PairLabel label = label_of(mp);
    tagged.push_back({std::move(mp), label});
  }
  std::sort(tagged.begin(), tagged.end(), [](const auto &x, const auto &y) {
    auto rank = [](const PairLabel &l) { return l.kind == PairLabel::trivial ? 0 : l.kind == PairLabel::canonical ? 1 : 2; };
    if (rank(x.second) != rank(y.second)) return rank(x.second) < rank(y.second);
    if (x.second.kind == PairLabel::canonical && y.second.kind == PairLabel::canonical)
      return x.second.lambda < y.second.lambda;
    return detail::action_coeff_less(x.first.lact, y.first.lact);
  });
  census.pairs.clear();
  census.labels.clear();
  for (auto &[mp, label] : tagged) {
    census.pairs.push_back(std::move(mp));
    census.labels.push_back(label);
  }
  return census;
}

}  // namespace hopfsc
