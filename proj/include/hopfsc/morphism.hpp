#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "hopfsc/bicrossed.hpp"
#include "hopfsc/matched_pair.hpp"
#include "hopfsc/presets.hpp"
#include "hopfsc/probe.hpp"

namespace hopfsc {

// ---------------------------------------------------------------------------
// Morphism predicates on structure-constant data. Columns of f hold the
// images of the source basis vectors.
// ---------------------------------------------------------------------------

template <class K>
bool is_unitary_coalgebra_map(const HopfAlgebra<K> &S, const HopfAlgebra<K> &T, const Mat<K> &f) {
  if (f.rows() != T.dim || f.cols() != S.dim) return false;
  if (!(f.apply(S.unit) == T.unit)) return false;
  for (int j = 0; j < S.dim; ++j) {
    K e = K::zero(S.field);
    for (int i = 0; i < T.dim; ++i) e += T.counit[static_cast<std::size_t>(i)] * f.at(i, j);
    if (!(e == S.counit[static_cast<std::size_t>(j)])) return false;
  }
  for (int j = 0; j < S.dim; ++j) {
    Mat<K> lhs = T.coproduct(f.column(j));
    Mat<K> rhs(T.dim, T.dim, K::zero(S.field));
    for (int r = 0; r < S.dim; ++r)
      for (int s = 0; s < S.dim; ++s) {
        const K &c = S.comult.at(j, r, s);
        if (c.is_zero()) continue;
        for (int m = 0; m < T.dim; ++m) {
          K cm = c * f.at(m, r);
          if (cm.is_zero()) continue;
          for (int n = 0; n < T.dim; ++n) rhs.at(m, n) += cm * f.at(n, s);
        }
      }
    if (!(lhs == rhs)) return false;
  }
  return true;
}

template <class K>
bool is_algebra_map(const HopfAlgebra<K> &S, const HopfAlgebra<K> &T, const Mat<K> &f) {
  if (f.rows() != T.dim || f.cols() != S.dim) return false;
  if (!(f.apply(S.unit) == T.unit)) return false;
  for (int i = 0; i < S.dim; ++i)
    for (int j = 0; j < S.dim; ++j) {
      Vec<K> lhs = f.apply(S.product(S.basis_vector(i), S.basis_vector(j)));
      Vec<K> rhs = T.product(f.column(i), f.column(j));
      if (!(lhs == rhs)) return false;
    }
  return true;
}

template <class K>
bool is_bialgebra_morphism(const HopfAlgebra<K> &S, const HopfAlgebra<K> &T, const Mat<K> &f) {
  return is_algebra_map(S, T, f) && is_unitary_coalgebra_map(S, T, f);
}

// ---------------------------------------------------------------------------
// Unitary coalgebra endomorphisms of the Sweedler algebra. Every such map is
// either the trivial one h -> eps(h) 1, or fixes 1 and g and sends
//   x  -> alpha (1 - g) + beta x,      gx -> gamma (1 - g) + delta gx.
// ---------------------------------------------------------------------------

template <class K>
struct CoalgebraMapFamily {
  bool trivial = false;
  K alpha, beta, gamma, delta;  // meaningful only when trivial is false
  Mat<K> matrix;                // column j holds the image of basis vector j
};

template <class K>
CoalgebraMapFamily<K> trivial_coalgebra_map(typename K::Desc d) {
  Mat<K> m(4, 4, K::zero(d));
  m.at(0, 0) = K::one(d);
  m.at(0, 1) = K::one(d);
  const K z = K::zero(d);
  return {true, z, z, z, z, std::move(m)};
}

template <class K>
CoalgebraMapFamily<K> parametric_coalgebra_map(typename K::Desc d, const K &alpha, const K &beta,
                                               const K &gamma, const K &delta) {
  Mat<K> m(4, 4, K::zero(d));
  m.at(0, 0) = K::one(d);
  m.at(1, 1) = K::one(d);
  m.at(0, 2) = alpha;
  m.at(1, 2) = -alpha;
  m.at(2, 2) = beta;
  m.at(0, 3) = gamma;
  m.at(1, 3) = -gamma;
  m.at(3, 3) = delta;
  return {false, alpha, beta, gamma, delta, std::move(m)};
}

// The trivial map first, then the parametric family in lexicographic
// parameter order: p^4 + 1 maps in total.
inline std::vector<CoalgebraMapFamily<Fp>> unitary_coalgebra_maps(uint32_t prime) {
  Fp::Desc d = Fp::field(prime);
  HopfAlgebra<Fp> H = sweedler_h4<Fp>(d);
  std::vector<CoalgebraMapFamily<Fp>> out;
  out.reserve(static_cast<std::size_t>(prime) * prime * prime * prime + 1);
  out.push_back(trivial_coalgebra_map<Fp>(d));
  for (uint32_t a = 0; a < prime; ++a)
    for (uint32_t b = 0; b < prime; ++b)
      for (uint32_t c = 0; c < prime; ++c)
        for (uint32_t e = 0; e < prime; ++e)
          out.push_back(parametric_coalgebra_map<Fp>(d, Fp(d, a), Fp(d, b), Fp(d, c), Fp(d, e)));
  for (const auto &f : out)
    if (!is_unitary_coalgebra_map(H, H, f.matrix))
      throw internal_error("unitary coalgebra map table failed its defining equations");
  return out;
}

// The multiplicative sublist: the trivial map and x -> beta x, gx -> beta gx.
inline std::vector<CoalgebraMapFamily<Fp>> hopf_endomorphisms(uint32_t prime) {
  Fp::Desc d = Fp::field(prime);
  HopfAlgebra<Fp> H = sweedler_h4<Fp>(d);
  std::vector<CoalgebraMapFamily<Fp>> out;
  for (auto &f : unitary_coalgebra_maps(prime))
    if (is_algebra_map(H, H, f.matrix)) out.push_back(std::move(f));
  return out;
}

namespace detail {

template <class K>
struct MapImages {
  std::vector<Vec<K>> img;  // img[j] is the image of basis vector j
};

template <class K>
MapImages<K> images_of(const Mat<K> &m) {
  MapImages<K> out;
  out.img.reserve(static_cast<std::size_t>(m.cols()));
  for (int j = 0; j < m.cols(); ++j) out.img.push_back(m.column(j));
  return out;
}

template <class K>
Vec<K> apply_images(const MapImages<K> &F, const Vec<K> &v, typename K::Desc d) {
  Vec<K> out = zero_vec<K>(static_cast<int>(F.img[0].size()), d);
  for (std::size_t k = 0; k < v.size(); ++k)
    if (!v[k].is_zero()) axpy(out, v[k], F.img[k]);
  return out;
}

template <class K>
void accumulate_outer(Mat<K> &m, const K &c, const Vec<K> &x, const Vec<K> &y) {
  for (int i = 0; i < m.rows(); ++i) {
    K cx = c * x[static_cast<std::size_t>(i)];
    if (cx.is_zero()) continue;
    for (int j = 0; j < m.cols(); ++j) m.at(i, j) += cx * y[static_cast<std::size_t>(j)];
  }
}

// sum f(c1) (x) g(c2) == sum f(c2) (x) g(c1) on every basis element of the
// source coalgebra
template <class K>
bool symmetric_coproduct_pairing(const SparseComult<K> &legs, const MapImages<K> &F,
                                 const MapImages<K> &G, typename K::Desc d) {
  const int nf = static_cast<int>(F.img[0].size());
  const int ng = static_cast<int>(G.img[0].size());
  for (const auto &row : legs.rows) {
    Mat<K> lhs(nf, ng, K::zero(d)), rhs(nf, ng, K::zero(d));
    for (const auto &leg : row) {
      accumulate_outer(lhs, leg.coeff, F.img[static_cast<std::size_t>(leg.first)],
                       G.img[static_cast<std::size_t>(leg.second)]);
      accumulate_outer(rhs, leg.coeff, F.img[static_cast<std::size_t>(leg.second)],
                       G.img[static_cast<std::size_t>(leg.first)]);
    }
    if (!(lhs == rhs)) return false;
  }
  return true;
}

// F(cc') == sum F(c1) (G(c2) |>' F(c')) for all basis pairs of the source;
// F lands in the target A factor and G in the target H factor
template <class K>
bool left_edge_multiplicative(const HopfAlgebra<K> &src, const SparseComult<K> &legs,
                              const HopfAlgebra<K> &dstA, const ActionTable<K> &lact,
                              const MapImages<K> &F, const MapImages<K> &G) {
  typename K::Desc d = src.field;
  for (int a = 0; a < src.dim; ++a)
    for (int b = 0; b < src.dim; ++b) {
      Vec<K> lhs = apply_images(F, src.product(src.basis_vector(a), src.basis_vector(b)), d);
      Vec<K> rhs = zero_vec<K>(dstA.dim, d);
      for (const auto &leg : legs.rows[static_cast<std::size_t>(a)]) {
        Vec<K> act = apply_action(lact, d, G.img[static_cast<std::size_t>(leg.second)],
                                  F.img[static_cast<std::size_t>(b)]);
        axpy(rhs, leg.coeff, dstA.product(F.img[static_cast<std::size_t>(leg.first)], act));
      }
      if (!(lhs == rhs)) return false;
    }
  return true;
}

// G(cc') == sum (G(c) <|' F(c'1)) G(c'2) for all basis pairs of the source
template <class K>
bool right_edge_multiplicative(const HopfAlgebra<K> &src, const SparseComult<K> &legs,
                               const HopfAlgebra<K> &dstH, const ActionTable<K> &ract,
                               const MapImages<K> &F, const MapImages<K> &G) {
  typename K::Desc d = src.field;
  for (int a = 0; a < src.dim; ++a)
    for (int b = 0; b < src.dim; ++b) {
      Vec<K> lhs = apply_images(G, src.product(src.basis_vector(a), src.basis_vector(b)), d);
      Vec<K> rhs = zero_vec<K>(dstH.dim, d);
      for (const auto &leg : legs.rows[static_cast<std::size_t>(b)]) {
        Vec<K> act = apply_action(ract, d, G.img[static_cast<std::size_t>(a)],
                                  F.img[static_cast<std::size_t>(leg.first)]);
        axpy(rhs, leg.coeff, dstH.product(act, G.img[static_cast<std::size_t>(leg.second)]));
      }
      if (!(lhs == rhs)) return false;
    }
  return true;
}

template <class K>
struct TripleLeg {
  int first, second, third;
  K coeff;
};

// (Delta (x) id) Delta on each basis element; coassociativity makes the
// bracketing irrelevant.
template <class K>
std::vector<std::vector<TripleLeg<K>>> double_comult_legs(const HopfAlgebra<K> &H) {
  SparseComult<K> one(H);
  std::vector<std::vector<TripleLeg<K>>> rows(static_cast<std::size_t>(H.dim));
  for (int i = 0; i < H.dim; ++i) {
    std::map<std::tuple<int, int, int>, K> acc;
    for (const auto &outer : one.rows[static_cast<std::size_t>(i)])
      for (const auto &inner : one.rows[static_cast<std::size_t>(outer.first)]) {
        K c = outer.coeff * inner.coeff;
        auto key = std::make_tuple(inner.first, inner.second, outer.second);
        auto it = acc.find(key);
        if (it == acc.end())
          acc.emplace(key, std::move(c));
        else
          it->second += c;
      }
    for (auto &[key, c] : acc)
      if (!c.is_zero())
        rows[static_cast<std::size_t>(i)].push_back(
            {std::get<0>(key), std::get<1>(key), std::get<2>(key), c});
  }
  return rows;
}

// shared precomputation for the two cross conditions
template <class K>
struct QuadrupleContext {
  const MatchedPairData<K> &src;
  const MatchedPairData<K> &dst;
  SparseComult<K> legsA, legsH;
  std::vector<std::vector<TripleLeg<K>>> d2A, d2H;

  QuadrupleContext(const MatchedPairData<K> &s, const MatchedPairData<K> &t)
      : src(s), dst(t), legsA(s.A), legsH(s.H), d2A(double_comult_legs(s.A)), d2H(double_comult_legs(s.H)) {}
};

// r(h1)(v(h2) |>' u(b)) == u(h1 |> b1)(p(h2 |> b2) |>' r(h3 <| b3))
template <class K>
bool cross_condition_a(const QuadrupleContext<K> &cx, const MapImages<K> &U, const MapImages<K> &P,
                       const MapImages<K> &R, const MapImages<K> &V) {
  typename K::Desc d = cx.src.A.field;
  const MatchedPairData<K> &dst = cx.dst;
  for (int h = 0; h < cx.src.H.dim; ++h)
    for (int b = 0; b < cx.src.A.dim; ++b) {
      Vec<K> lhs = dst.A.zvec();
      for (const auto &leg : cx.legsH.rows[static_cast<std::size_t>(h)]) {
        Vec<K> act = apply_action(dst.lact, d, V.img[static_cast<std::size_t>(leg.second)],
                                  U.img[static_cast<std::size_t>(b)]);
        axpy(lhs, leg.coeff, dst.A.product(R.img[static_cast<std::size_t>(leg.first)], act));
      }
      Vec<K> rhs = dst.A.zvec();
      for (const auto &th : cx.d2H[static_cast<std::size_t>(h)])
        for (const auto &ta : cx.d2A[static_cast<std::size_t>(b)]) {
          K c = th.coeff * ta.coeff;
          Vec<K> u1 = apply_images(U, cx.src.lact.cell(th.first, ta.first, d), d);
          Vec<K> p2 = apply_images(P, cx.src.lact.cell(th.second, ta.second, d), d);
          Vec<K> r3 = apply_images(R, cx.src.ract.cell(th.third, ta.third, d), d);
          axpy(rhs, c, dst.A.product(u1, apply_action(dst.lact, d, p2, r3)));
        }
      if (!(lhs == rhs)) return false;
    }
  return true;
}

// (v(h) <|' u(b1)) p(b2) == (p(h1 |> b1) <|' r(h2 <| b2)) v(h3 <| b3)
template <class K>
bool cross_condition_b(const QuadrupleContext<K> &cx, const MapImages<K> &U, const MapImages<K> &P,
                       const MapImages<K> &R, const MapImages<K> &V) {
  typename K::Desc d = cx.src.A.field;
  const MatchedPairData<K> &dst = cx.dst;
  for (int h = 0; h < cx.src.H.dim; ++h)
    for (int b = 0; b < cx.src.A.dim; ++b) {
      Vec<K> lhs = dst.H.zvec();
      for (const auto &leg : cx.legsA.rows[static_cast<std::size_t>(b)]) {
        Vec<K> act = apply_action(dst.ract, d, V.img[static_cast<std::size_t>(h)],
                                  U.img[static_cast<std::size_t>(leg.first)]);
        axpy(lhs, leg.coeff, dst.H.product(act, P.img[static_cast<std::size_t>(leg.second)]));
      }
      Vec<K> rhs = dst.H.zvec();
      for (const auto &th : cx.d2H[static_cast<std::size_t>(h)])
        for (const auto &ta : cx.d2A[static_cast<std::size_t>(b)]) {
          K c = th.coeff * ta.coeff;
          Vec<K> p1 = apply_images(P, cx.src.lact.cell(th.first, ta.first, d), d);
          Vec<K> r2 = apply_images(R, cx.src.ract.cell(th.second, ta.second, d), d);
          Vec<K> v3 = apply_images(V, cx.src.ract.cell(th.third, ta.third, d), d);
          axpy(rhs, c, dst.H.product(apply_action(dst.ract, d, p1, r2), v3));
        }
      if (!(lhs == rhs)) return false;
    }
  return true;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Assembly: psi(a (x) h) = u(a1)(p(a2) |>' r(h1)) (x) (p(a3) <|' r(h2)) v(h3)
// on the A-major product bases of the two bicrossed products.
// ---------------------------------------------------------------------------

template <class K>
Mat<K> assemble_morphism(const MatchedPairData<K> &src, const MatchedPairData<K> &dst, const Mat<K> &u,
                         const Mat<K> &p, const Mat<K> &r, const Mat<K> &v) {
  typename K::Desc d = src.A.field;
  const int na = src.A.dim, nh = src.H.dim;
  const int ma = dst.A.dim, mh = dst.H.dim;
  auto d2A = detail::double_comult_legs(src.A);
  auto d2H = detail::double_comult_legs(src.H);
  detail::MapImages<K> U = detail::images_of(u), P = detail::images_of(p);
  detail::MapImages<K> R = detail::images_of(r), V = detail::images_of(v);
  Mat<K> out(ma * mh, na * nh, K::zero(d));
  for (int i = 0; i < na; ++i)
    for (int q = 0; q < nh; ++q) {
      const int col = i * nh + q;
      for (const auto &ta : d2A[static_cast<std::size_t>(i)])
        for (const auto &th : d2H[static_cast<std::size_t>(q)]) {
          K c = ta.coeff * th.coeff;
          Vec<K> first = dst.A.product(
              U.img[static_cast<std::size_t>(ta.first)],
              apply_action(dst.lact, d, P.img[static_cast<std::size_t>(ta.second)],
                           R.img[static_cast<std::size_t>(th.first)]));
          Vec<K> second = dst.H.product(
              apply_action(dst.ract, d, P.img[static_cast<std::size_t>(ta.third)],
                           R.img[static_cast<std::size_t>(th.second)]),
              V.img[static_cast<std::size_t>(th.third)]);
          for (int m = 0; m < ma; ++m) {
            K cm = c * first[static_cast<std::size_t>(m)];
            if (cm.is_zero()) continue;
            for (int n = 0; n < mh; ++n) {
              K val = cm * second[static_cast<std::size_t>(n)];
              if (!val.is_zero()) out.at(m * mh + n, col) += val;
            }
          }
        }
    }
  return out;
}

template <class K>
struct MorphismQuadruple {
  CoalgebraMapFamily<K> u;  // A -> A'
  CoalgebraMapFamily<K> p;  // A -> H'
  CoalgebraMapFamily<K> r;  // H -> A'
  CoalgebraMapFamily<K> v;  // H -> H'
  Mat<K> assembled;         // bialgebra morphism between the two bicrossed products
};

template <class K>
Mat<K> assemble_morphism(const MatchedPairData<K> &src, const MatchedPairData<K> &dst,
                         const CoalgebraMapFamily<K> &u, const CoalgebraMapFamily<K> &p,
                         const CoalgebraMapFamily<K> &r, const CoalgebraMapFamily<K> &v) {
  return assemble_morphism(src, dst, u.matrix, p.matrix, r.matrix, v.matrix);
}

template <class K>
bool is_sweedler_presented(const HopfAlgebra<K> &B) {
  return B.dim == 4 && same_structure_constants(B, sweedler_h4<K>(B.field));
}

// ---------------------------------------------------------------------------
// Quadruple solver. Morphisms of bicrossed products correspond to quadruples
// (u, p, r, v) of unitary coalgebra maps subject to eight conditions: the
// symmetric-coproduct condition and two multiplicativity conditions for each
// of the edges (u, p) and (r, v), plus two cross conditions tying the edges
// together through the source actions. Both source factors carry the same
// structure constants here, so one edge list serves both sides.
// ---------------------------------------------------------------------------

inline std::vector<MorphismQuadruple<Fp>> solve_quadruples(const MatchedPairData<Fp> &src,
                                                           const MatchedPairData<Fp> &dst) {
  if (!src.verified || !dst.verified)
    throw input_error("solve_quadruples requires verified matched pairs (run the compatibility check first)");
  if (src.A.field.p != dst.A.field.p)
    throw input_error("solve_quadruples requires one common base field");
  if (!is_sweedler_presented(src.A) || !is_sweedler_presented(src.H) || !is_sweedler_presented(dst.A) ||
      !is_sweedler_presented(dst.H))
    throw input_error("solve_quadruples needs both pairs presented on the Sweedler basis (rebase first)");
  Fp::Desc d = src.A.field;

  std::vector<CoalgebraMapFamily<Fp>> maps = unitary_coalgebra_maps(d.p);
  std::vector<detail::MapImages<Fp>> imgs;
  imgs.reserve(maps.size());
  for (const auto &f : maps) imgs.push_back(detail::images_of(f.matrix));

  detail::QuadrupleContext<Fp> cx(src, dst);

  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t fi = 0; fi < maps.size(); ++fi)
    for (std::size_t gi = 0; gi < maps.size(); ++gi) {
      if (!detail::symmetric_coproduct_pairing(cx.legsA, imgs[fi], imgs[gi], d)) continue;
      if (!detail::left_edge_multiplicative(src.A, cx.legsA, dst.A, dst.lact, imgs[fi], imgs[gi])) continue;
      if (!detail::right_edge_multiplicative(src.A, cx.legsA, dst.H, dst.ract, imgs[fi], imgs[gi])) continue;
      edges.push_back({fi, gi});
    }

  HopfAlgebra<Fp> esrc = bicrossed_product(src);
  HopfAlgebra<Fp> edst = bicrossed_product(dst);
  std::vector<MorphismQuadruple<Fp>> out;
  for (const auto &[ui, pi] : edges)
    for (const auto &[ri, vi] : edges) {
      if (!detail::cross_condition_a(cx, imgs[ui], imgs[pi], imgs[ri], imgs[vi])) continue;
      if (!detail::cross_condition_b(cx, imgs[ui], imgs[pi], imgs[ri], imgs[vi])) continue;
      Mat<Fp> psi = assemble_morphism(src, dst, maps[ui].matrix, maps[pi].matrix, maps[ri].matrix,
                                      maps[vi].matrix);
      if (!is_bialgebra_morphism(esrc, edst, psi))
        throw internal_error("solved quadruple assembled to a map failing the bialgebra equations");
      out.push_back({maps[ui], maps[pi], maps[ri], maps[vi], std::move(psi)});
    }
  return out;
}

// ---------------------------------------------------------------------------
// Change of basis. A dimension-4 algebra with group-likes {1, gamma} and a
// square-zero (1, gamma)-primitive y such that 1, gamma, y, gamma y is a
// basis carrying exactly the Sweedler constants gets recognized here.
// ---------------------------------------------------------------------------

template <class K>
HopfAlgebra<K> transport_structure(const HopfAlgebra<K> &B, const Mat<K> &Q, const Mat<K> &Qinv,
                                   std::vector<std::string> names) {
  const int n = B.dim;
  HopfAlgebra<K> T;
  T.field = B.field;
  T.dim = n;
  T.basis = std::move(names);
  T.mult = Tensor3<K>(n, n, n, B.zero());
  T.comult = Tensor3<K>(n, n, n, B.zero());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Vec<K> prod = Qinv.apply(B.product(Q.column(i), Q.column(j)));
      for (int k = 0; k < n; ++k) T.mult.at(i, j, k) = prod[static_cast<std::size_t>(k)];
    }
  for (int i = 0; i < n; ++i) {
    Mat<K> grid = Qinv.mul(B.coproduct(Q.column(i))).mul(Qinv.transpose());
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) T.comult.at(i, j, k) = grid.at(j, k);
  }
  T.unit = Qinv.apply(B.unit);
  T.counit = zero_vec<K>(n, B.field);
  for (int j = 0; j < n; ++j) {
    K e = K::zero(B.field);
    for (int i = 0; i < n; ++i) e += B.counit[static_cast<std::size_t>(i)] * Q.at(i, j);
    T.counit[static_cast<std::size_t>(j)] = e;
  }
  T.antipode = Qinv.mul(B.antipode).mul(Q);
  AxiomReport rep = check_hopf_axioms(T);
  if (!rep.all_ok()) throw internal_error("conjugated Hopf structure failed the axiom check");
  T.verified = true;
  return T;
}

inline std::optional<Mat<Fp>> sweedler_change_of_basis(const HopfAlgebra<Fp> &B) {
  require_verified(B, "sweedler_change_of_basis");
  Fp::Desc d = B.field;
  if (B.dim != 4) return std::nullopt;
  if (is_sweedler_presented(B)) return Mat<Fp>::identity(4, d);
  HopfAlgebra<Fp> ref = sweedler_h4<Fp>(d);
  std::vector<Vec<Fp>> gl = group_likes(B);
  if (gl.size() != 2) return std::nullopt;
  Vec<Fp> one = B.unit;
  Vec<Fp> gamma;
  if (gl[0] == one)
    gamma = gl[1];
  else if (gl[1] == one)
    gamma = gl[0];
  else
    return std::nullopt;
  std::vector<Vec<Fp>> prim = skew_primitives(B, one, gamma);
  if (prim.empty()) return std::nullopt;
  std::vector<uint32_t> t(prim.size(), 0);
  auto bump = [&]() {
    for (std::size_t i = t.size(); i-- > 0;) {
      if (++t[i] < d.p) return true;
      t[i] = 0;
    }
    return false;
  };
  while (bump()) {
    Vec<Fp> y = zero_vec<Fp>(4, d);
    for (std::size_t i = 0; i < prim.size(); ++i)
      if (t[i]) axpy(y, Fp(d, t[i]), prim[i]);
    Vec<Fp> ysq = B.product(y, y);
    bool square_zero = true;
    for (const auto &c : ysq)
      if (!c.is_zero()) {
        square_zero = false;
        break;
      }
    if (!square_zero) continue;
    Mat<Fp> Q = Mat<Fp>::from_columns({one, gamma, y, B.product(gamma, y)});
    auto Qi = Q.inverse();
    if (!Qi) continue;
    if (same_structure_constants(transport_structure(B, Q, *Qi, ref.basis), ref)) return Q;
  }
  return std::nullopt;
}

struct RebasedPair {
  MatchedPairData<Fp> pair;  // Sweedler-presented copy
  Mat<Fp> qa, qh;            // columns: the new basis written in the old coordinates
};

inline std::optional<RebasedPair> rebase_to_sweedler(const MatchedPairData<Fp> &mp) {
  if (!mp.verified)
    throw input_error("rebase_to_sweedler requires a verified matched pair (run the compatibility check first)");
  std::optional<Mat<Fp>> qa = sweedler_change_of_basis(mp.A);
  std::optional<Mat<Fp>> qh = sweedler_change_of_basis(mp.H);
  if (!qa || !qh) return std::nullopt;
  Fp::Desc d = mp.A.field;
  auto qai = qa->inverse();
  auto qhi = qh->inverse();
  if (!qai || !qhi) throw internal_error("change-of-basis matrix is singular");
  HopfAlgebra<Fp> A = transport_structure(mp.A, *qa, *qai, sweedler_h4<Fp>(d, true).basis);
  HopfAlgebra<Fp> H = transport_structure(mp.H, *qh, *qhi, sweedler_h4<Fp>(d, false).basis);
  ActionTable<Fp> lact{Side::left, Tensor3<Fp>(4, 4, 4, Fp::zero(d))};
  ActionTable<Fp> ract{Side::right, Tensor3<Fp>(4, 4, 4, Fp::zero(d))};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      Vec<Fp> la = qai->apply(apply_action(mp.lact, d, qh->column(i), qa->column(j)));
      Vec<Fp> ra = qhi->apply(apply_action(mp.ract, d, qh->column(i), qa->column(j)));
      for (int k = 0; k < 4; ++k) {
        lact.t.at(i, j, k) = la[static_cast<std::size_t>(k)];
        ract.t.at(i, j, k) = ra[static_cast<std::size_t>(k)];
      }
    }
  MatchedPairData<Fp> out{std::move(A), std::move(H), std::move(lact), std::move(ract), false};
  verify_matched_pair(out);
  if (!out.verified) throw internal_error("conjugated matched pair failed the compatibility axioms");
  return RebasedPair{std::move(out), std::move(*qa), std::move(*qh)};
}

template <class K>
Mat<K> kronecker_product(const Mat<K> &X, const Mat<K> &Y, typename K::Desc d) {
  Mat<K> out(X.rows() * Y.rows(), X.cols() * Y.cols(), K::zero(d));
  for (int i1 = 0; i1 < X.rows(); ++i1)
    for (int j1 = 0; j1 < X.cols(); ++j1) {
      const K &x = X.at(i1, j1);
      if (x.is_zero()) continue;
      for (int i2 = 0; i2 < Y.rows(); ++i2)
        for (int j2 = 0; j2 < Y.cols(); ++j2)
          out.at(i1 * Y.rows() + i2, j1 * Y.cols() + j2) = x * Y.at(i2, j2);
    }
  return out;
}

// ---------------------------------------------------------------------------
// Isomorphism testing and automorphism groups for bicrossed products whose
// factors are Sweedler algebras in some basis.
// ---------------------------------------------------------------------------

struct IsoResult {
  bool isomorphic = false;
  std::optional<Mat<Fp>> witness;  // invertible bialgebra morphism on the original bases
};

inline IsoResult are_isomorphic(const MatchedPairData<Fp> &E, const MatchedPairData<Fp> &F) {
  std::optional<RebasedPair> re = rebase_to_sweedler(E);
  std::optional<RebasedPair> rf = rebase_to_sweedler(F);
  if (!re || !rf)
    throw input_error("isomorphism search covers pairs whose factors are Sweedler algebras in some basis");
  Fp::Desc d = E.A.field;
  std::vector<MorphismQuadruple<Fp>> quads = solve_quadruples(re->pair, rf->pair);
  const int n = E.A.dim * E.H.dim;
  for (const auto &q : quads) {
    if (q.assembled.rank() != n) continue;
    Mat<Fp> te = kronecker_product(re->qa, re->qh, d);
    Mat<Fp> tf = kronecker_product(rf->qa, rf->qh, d);
    auto tei = te.inverse();
    if (!tei) throw internal_error("basis transport matrix is singular");
    Mat<Fp> w = tf.mul(q.assembled).mul(*tei);
    HopfAlgebra<Fp> eorig = bicrossed_product(E);
    HopfAlgebra<Fp> forig = bicrossed_product(F);
    if (!is_bialgebra_morphism(eorig, forig, w))
      throw internal_error("transported isomorphism witness failed the bialgebra equations");
    return {true, std::move(w)};
  }
  return {false, std::nullopt};
}

// Ψ-shaped automorphisms exchange the roles of the two tensor factors through
// the maps p, r while u, v are trivial; Φ-shaped ones act inside the factors
// through u, v while p, r are trivial.
struct AutLabel {
  bool swaps_factors = false;
  Fp alpha, beta;
};

struct GroupReport {
  std::vector<MorphismQuadruple<Fp>> elements;  // bijective, sorted by matrix entries
  std::vector<Mat<Fp>> matrices;                // on the original basis, parallel to elements
  std::vector<AutLabel> labels;                 // parallel; empty when labeling fails
  std::size_t order = 0;
  bool abelian = false;
  bool relations_verified = false;  // composition schema checked on all ordered pairs
  bool one_parameter = false;       // every label satisfies alpha * beta = 1
  std::string detail;               // diagnostic when labeling or the schema fails
};

namespace detail {

// matrix product x . y applies y first
inline AutLabel compose_labels(const AutLabel &x, const AutLabel &y) {
  if (x.swaps_factors && y.swaps_factors) return {false, x.beta * y.alpha, x.alpha * y.beta};
  if (!x.swaps_factors && !y.swaps_factors) return {false, x.alpha * y.alpha, x.beta * y.beta};
  if (x.swaps_factors) return {true, x.alpha * y.alpha, x.beta * y.beta};
  return {true, x.beta * y.alpha, x.alpha * y.beta};
}

inline std::vector<Fp> flat(const Mat<Fp> &m) {
  std::vector<Fp> v;
  v.reserve(static_cast<std::size_t>(m.rows()) * static_cast<std::size_t>(m.cols()));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) v.push_back(m.at(i, j));
  return v;
}

}  // namespace detail

inline GroupReport automorphism_group(const MatchedPairData<Fp> &E) {
  std::optional<RebasedPair> re = rebase_to_sweedler(E);
  if (!re)
    throw input_error("automorphism search covers pairs whose factors are Sweedler algebras in some basis");
  Fp::Desc d = E.A.field;
  std::vector<MorphismQuadruple<Fp>> quads = solve_quadruples(re->pair, re->pair);
  Mat<Fp> t = kronecker_product(re->qa, re->qh, d);
  auto ti = t.inverse();
  if (!ti) throw internal_error("basis transport matrix is singular");
  const int n = E.A.dim * E.H.dim;

  GroupReport rep;
  for (auto &q : quads) {
    if (q.assembled.rank() != n) continue;
    rep.matrices.push_back(t.mul(q.assembled).mul(*ti));
    rep.elements.push_back(std::move(q));
  }
  std::vector<std::size_t> idx(rep.elements.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::vector<std::vector<Fp>> keys;
  keys.reserve(rep.matrices.size());
  for (const auto &m : rep.matrices) keys.push_back(detail::flat(m));
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return keys[a] < keys[b]; });
  {
    std::vector<MorphismQuadruple<Fp>> se;
    std::vector<Mat<Fp>> sm;
    se.reserve(idx.size());
    sm.reserve(idx.size());
    for (std::size_t i : idx) {
      se.push_back(std::move(rep.elements[i]));
      sm.push_back(std::move(rep.matrices[i]));
    }
    rep.elements = std::move(se);
    rep.matrices = std::move(sm);
  }
  rep.order = rep.elements.size();

  std::map<std::vector<Fp>, std::size_t> by_matrix;
  for (std::size_t i = 0; i < rep.matrices.size(); ++i)
    if (!by_matrix.emplace(detail::flat(rep.matrices[i]), i).second)
      throw internal_error("duplicate automorphism in the solved set");
  if (by_matrix.find(detail::flat(Mat<Fp>::identity(n, d))) == by_matrix.end())
    throw internal_error("identity automorphism missing from the solved set");

  std::vector<std::vector<std::size_t>> comp(rep.order, std::vector<std::size_t>(rep.order, 0));
  for (std::size_t i = 0; i < rep.order; ++i) {
    for (std::size_t j = 0; j < rep.order; ++j) {
      auto it = by_matrix.find(detail::flat(rep.matrices[i].mul(rep.matrices[j])));
      if (it == by_matrix.end()) throw internal_error("automorphism set is not closed under composition");
      comp[i][j] = it->second;
    }
    auto inv = rep.matrices[i].inverse();
    if (!inv || by_matrix.find(detail::flat(*inv)) == by_matrix.end())
      throw internal_error("automorphism set is not closed under inverse");
  }
  rep.abelian = true;
  for (std::size_t i = 0; i < rep.order && rep.abelian; ++i)
    for (std::size_t j = i + 1; j < rep.order; ++j)
      if (comp[i][j] != comp[j][i]) {
        rep.abelian = false;
        break;
      }

  auto param_shape = [](const CoalgebraMapFamily<Fp> &f) {
    return !f.trivial && f.alpha.is_zero() && f.gamma.is_zero() && f.beta == f.delta && !f.beta.is_zero();
  };
  bool labeled = true;
  std::vector<AutLabel> labels;
  for (const auto &q : rep.elements) {
    if (q.u.trivial && q.v.trivial && param_shape(q.p) && param_shape(q.r))
      labels.push_back({true, q.p.beta, q.r.beta});
    else if (q.p.trivial && q.r.trivial && param_shape(q.u) && param_shape(q.v))
      labels.push_back({false, q.u.beta, q.v.beta});
    else {
      labeled = false;
      rep.detail = "automorphism outside the two labeled families";
      break;
    }
  }
  if (!labeled) return rep;

  std::map<std::tuple<bool, Fp, Fp>, std::size_t> by_label;
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (!by_label.emplace(std::make_tuple(labels[i].swaps_factors, labels[i].alpha, labels[i].beta), i)
             .second) {
      rep.detail = "two automorphisms share one label";
      return rep;
    }
  rep.labels = labels;
  rep.relations_verified = true;
  for (std::size_t i = 0; i < rep.order && rep.relations_verified; ++i)
    for (std::size_t j = 0; j < rep.order; ++j) {
      AutLabel want = detail::compose_labels(labels[i], labels[j]);
      auto it = by_label.find(std::make_tuple(want.swaps_factors, want.alpha, want.beta));
      if (it == by_label.end() || comp[i][j] != it->second) {
        rep.relations_verified = false;
        rep.detail = "composition left the labeled schema";
        break;
      }
    }
  if (rep.relations_verified) {
    rep.one_parameter = true;
    Fp one = Fp::one(d);
    for (const auto &l : labels)
      if (!(l.alpha * l.beta == one)) {
        rep.one_parameter = false;
        break;
      }
  }
  return rep;
}

}  // namespace hopfsc
