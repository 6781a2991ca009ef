#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <vector>

#include "hopfsc/scalar.hpp"

// Small dense exact linear algebra. Everything here is deterministic:
// elimination always pivots on the first nonzero entry in column order, and
// basis vectors of solution spaces are normalized monic at their leading
// coordinate and sorted by it. Tests freeze concrete bases, so the convention
// matters as much as the math.

namespace hopfsc {

template <class K>
using Vec = std::vector<K>;

template <class K>
Vec<K> zero_vec(int n, typename K::Desc d) {
  return Vec<K>(static_cast<std::size_t>(n), K::zero(d));
}

template <class K>
Vec<K> basis_vec(int n, int i, typename K::Desc d) {
  Vec<K> v = zero_vec<K>(n, d);
  v[static_cast<std::size_t>(i)] = K::one(d);
  return v;
}

template <class K>
bool is_zero_vec(const Vec<K> &v) {
  for (const K &x : v)
    if (!x.is_zero()) return false;
  return true;
}

// v += c * w
template <class K>
void axpy(Vec<K> &v, const K &c, const Vec<K> &w) {
  if (v.size() != w.size()) throw internal_error("axpy size mismatch");
  for (std::size_t i = 0; i < v.size(); ++i) v[i] += c * w[i];
}

template <class K>
Vec<K> scaled(Vec<K> v, const K &c) {
  for (K &x : v) x = x * c;
  return v;
}

template <class K>
Vec<K> vec_add(Vec<K> a, const Vec<K> &b) {
  axpy(a, K::one(a.empty() ? typename K::Desc{} : a[0].desc()), b);
  return a;
}

template <class K>
Vec<K> vec_sub(Vec<K> a, const Vec<K> &b) {
  if (a.size() != b.size()) throw internal_error("vector size mismatch");
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

template <class K>
class Mat {
 public:
  Mat() = default;
  Mat(int rows, int cols, const K &fill)
      : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), fill) {}

  static Mat identity(int n, typename K::Desc d) {
    Mat m(n, n, K::zero(d));
    for (int i = 0; i < n; ++i) m.at(i, i) = K::one(d);
    return m;
  }

  // column j holds the image of the j-th basis vector
  static Mat from_columns(const std::vector<Vec<K>> &cols) {
    if (cols.empty()) throw internal_error("from_columns on empty list");
    Mat m(static_cast<int>(cols[0].size()), static_cast<int>(cols.size()), K::zero(cols[0][0].desc()));
    for (int j = 0; j < m.cols_; ++j) {
      if (cols[static_cast<std::size_t>(j)].size() != static_cast<std::size_t>(m.rows_))
        throw internal_error("from_columns ragged input");
      for (int i = 0; i < m.rows_; ++i) m.at(i, j) = cols[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
    }
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  K &at(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
  const K &at(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

  Vec<K> column(int j) const {
    Vec<K> c;
    c.reserve(static_cast<std::size_t>(rows_));
    for (int i = 0; i < rows_; ++i) c.push_back(at(i, j));
    return c;
  }

  Vec<K> apply(const Vec<K> &v) const {
    if (static_cast<int>(v.size()) != cols_) throw internal_error("matrix/vector size mismatch");
    Vec<K> out = zero_vec<K>(rows_, a_[0].desc());
    for (int j = 0; j < cols_; ++j) {
      if (v[static_cast<std::size_t>(j)].is_zero()) continue;
      for (int i = 0; i < rows_; ++i) out[static_cast<std::size_t>(i)] += at(i, j) * v[static_cast<std::size_t>(j)];
    }
    return out;
  }

  Mat mul(const Mat &b) const {
    if (cols_ != b.rows_) throw internal_error("matrix product size mismatch");
    Mat out(rows_, b.cols_, K::zero(a_[0].desc()));
    for (int i = 0; i < rows_; ++i)
      for (int k = 0; k < cols_; ++k) {
        const K &aik = at(i, k);
        if (aik.is_zero()) continue;
        for (int j = 0; j < b.cols_; ++j) out.at(i, j) += aik * b.at(k, j);
      }
    return out;
  }

  Mat transpose() const {
    Mat out(cols_, rows_, a_[0]);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
    return out;
  }

  // In-place reduction to reduced row echelon form; returns the pivot columns.
  std::vector<int> rref() {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < cols_ && r < rows_; ++c) {
      int pr = -1;
      for (int i = r; i < rows_; ++i)
        if (!at(i, c).is_zero()) {
          pr = i;
          break;
        }
      if (pr < 0) continue;
      if (pr != r)
        for (int j = 0; j < cols_; ++j) std::swap(at(pr, j), at(r, j));
      K inv = at(r, c).inv();
      for (int j = c; j < cols_; ++j) at(r, j) = at(r, j) * inv;
      for (int i = 0; i < rows_; ++i) {
        if (i == r || at(i, c).is_zero()) continue;
        K f = at(i, c);
        for (int j = c; j < cols_; ++j) at(i, j) -= f * at(r, j);
      }
      pivots.push_back(c);
      ++r;
    }
    return pivots;
  }

  int rank() const {
    Mat m = *this;
    return static_cast<int>(m.rref().size());
  }

  std::optional<Mat> inverse() const {
    if (rows_ != cols_) throw internal_error("inverse of a non-square matrix");
    auto d = a_[0].desc();
    Mat aug(rows_, 2 * cols_, K::zero(d));
    for (int i = 0; i < rows_; ++i) {
      for (int j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
      aug.at(i, cols_ + i) = K::one(d);
    }
    std::vector<int> piv = aug.rref();
    // pivots that land in the identity block mean the left block lost rank
    if (static_cast<int>(piv.size()) != rows_ || (!piv.empty() && piv.back() >= cols_)) return std::nullopt;
    Mat out(rows_, cols_, K::zero(d));
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) out.at(i, j) = aug.at(i, cols_ + j);
    return out;
  }

  friend bool operator==(const Mat &a, const Mat &b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<K> a_;
};

namespace detail {

template <class K>
int leading_index(const Vec<K> &v) {
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) return static_cast<int>(i);
  return static_cast<int>(v.size());
}

}  // namespace detail

// Canonical basis of { x : m x = 0 }: the reduced echelon rows of any spanning
// set, so leading entries are monic, sit at distinct coordinates, and the
// basis is independent of how the kernel was found.
template <class K>
std::vector<Vec<K>> nullspace(Mat<K> m) {
  if (m.rows() == 0 || m.cols() == 0) return {};
  auto d = m.at(0, 0).desc();
  std::vector<int> pivots = m.rref();
  std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
  for (int c : pivots) is_pivot[static_cast<std::size_t>(c)] = true;
  std::vector<Vec<K>> basis;
  for (int f = 0; f < m.cols(); ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    Vec<K> v = zero_vec<K>(m.cols(), d);
    v[static_cast<std::size_t>(f)] = K::one(d);
    for (std::size_t r = 0; r < pivots.size(); ++r)
      v[static_cast<std::size_t>(pivots[r])] = -m.at(static_cast<int>(r), f);
    basis.push_back(std::move(v));
  }
  if (basis.empty()) return basis;
  Mat<K> rows(static_cast<int>(basis.size()), m.cols(), K::zero(d));
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (int j = 0; j < m.cols(); ++j) rows.at(static_cast<int>(i), j) = basis[i][static_cast<std::size_t>(j)];
  rows.rref();
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (int j = 0; j < m.cols(); ++j) basis[i][static_cast<std::size_t>(j)] = rows.at(static_cast<int>(i), j);
  return basis;
}

// Solution set of an inhomogeneous system m x = rhs.
template <class K>
struct AffineSpace {
  Vec<K> particular;
  std::vector<Vec<K>> directions;
};

template <class K>
std::optional<AffineSpace<K>> solve_affine(const Mat<K> &m, const Vec<K> &rhs) {
  if (static_cast<int>(rhs.size()) != m.rows()) throw internal_error("solve_affine size mismatch");
  if (m.cols() == 0) throw internal_error("solve_affine on empty system");
  auto d = m.at(0, 0).desc();
  Mat<K> aug(m.rows(), m.cols() + 1, K::zero(d));
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols()) = rhs[static_cast<std::size_t>(i)];
  }
  std::vector<int> pivots = aug.rref();
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;  // 0 = 1 row
  AffineSpace<K> out;
  out.particular = zero_vec<K>(m.cols(), d);
  for (std::size_t r = 0; r < pivots.size(); ++r)
    out.particular[static_cast<std::size_t>(pivots[r])] = aug.at(static_cast<int>(r), m.cols());
  std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
  for (int c : pivots) is_pivot[static_cast<std::size_t>(c)] = true;
  for (int f = 0; f < m.cols(); ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    Vec<K> v = zero_vec<K>(m.cols(), d);
    v[static_cast<std::size_t>(f)] = K::one(d);
    for (std::size_t r = 0; r < pivots.size(); ++r)
      v[static_cast<std::size_t>(pivots[r])] = -aug.at(static_cast<int>(r), f);
    out.directions.push_back(std::move(v));
  }
  return out;
}

template <class K>
std::optional<Vec<K>> solve(const Mat<K> &m, const Vec<K> &rhs) {
  auto s = solve_affine(m, rhs);
  if (!s) return std::nullopt;
  return s->particular;
}

// Does v lie in the span of the given vectors?
template <class K>
bool in_span(const std::vector<Vec<K>> &span, const Vec<K> &v) {
  if (span.empty()) return is_zero_vec(v);
  Mat<K> m = Mat<K>::from_columns(span);
  return solve(m, v).has_value();
}

template <class K>
bool same_span(const std::vector<Vec<K>> &a, const std::vector<Vec<K>> &b) {
  for (const auto &v : a)
    if (!in_span(b, v)) return false;
  for (const auto &v : b)
    if (!in_span(a, v)) return false;
  return true;
}

// Enumerates every point of an affine space over F_p in lexicographic order of
// the direction coefficients (last direction varies fastest). The callback
// returns false to stop early; the function reports whether it ran to the end.
inline bool for_each_affine_point(const AffineSpace<Fp> &s, std::uint32_t p,
                                  const std::function<bool(const Vec<Fp> &)> &fn) {
  std::size_t dims = s.directions.size();
  std::vector<std::uint32_t> t(dims, 0);
  Fp::Desc d{p};
  for (;;) {
    Vec<Fp> point = s.particular;
    for (std::size_t i = 0; i < dims; ++i)
      if (t[i] != 0) axpy(point, Fp(d, t[i]), s.directions[i]);
    if (!fn(point)) return false;
    std::size_t i = dims;
    while (i > 0) {
      --i;
      if (++t[i] < p) break;
      t[i] = 0;
      if (i == 0) return true;
    }
    if (dims == 0) return true;
  }
}

}  // namespace hopfsc
