// Copyright 2026 The Topoalg Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef TOPOALG_MATRIX_HPP
#define TOPOALG_MATRIX_HPP

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>
#include <utility>
#include <vector>

#include "topoalg/scalar.hpp"

namespace topoalg {

namespace detail {
inline void require(bool cond, const char* msg) {
  if (!cond) throw std::invalid_argument(msg);
}
}  // namespace detail

template <FieldScalar F>
struct Triplet {
  int row = 0;
  int col = 0;
  F value{0};
};

/// Sparse matrix with canonical column-major triplet storage.  Triplets are
/// sorted by (col, row) and never hold zeros, so identical maps serialize to
/// identical bytes.
template <FieldScalar F>
class Mat {
 public:
  Mat() : rows_(0), cols_(0) {}
  Mat(int rows, int cols) : rows_(rows), cols_(cols) {
    detail::require(rows >= 0 && cols >= 0, "Mat: negative dimension");
  }

  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m.t_.push_back({i, i, F(1)});
    return m;
  }

  static Mat from_entries(int rows, int cols, const std::map<std::pair<int, int>, F>& colrow_entries) {
    Mat m(rows, cols);
    for (const auto& [cr, v] : colrow_entries) {
      detail::require(cr.second >= 0 && cr.second < rows && cr.first >= 0 && cr.first < cols,
                      "Mat: entry out of range");
      if (!v.is_zero()) m.t_.push_back({cr.second, cr.first, v});
    }
    return m;
  }

  static Mat from_rows(const std::vector<std::vector<F>>& rows, int cols) {
    std::map<std::pair<int, int>, F> e;
    for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
      detail::require(static_cast<int>(rows[r].size()) == cols, "Mat: ragged rows");
      for (int c = 0; c < cols; ++c)
        if (!rows[r][c].is_zero()) e[{c, r}] = rows[r][c];
    }
    return from_entries(static_cast<int>(rows.size()), cols, e);
  }

  static Mat from_cols(const std::vector<std::vector<F>>& cols, int rows) {
    std::map<std::pair<int, int>, F> e;
    for (int c = 0; c < static_cast<int>(cols.size()); ++c) {
      detail::require(static_cast<int>(cols[c].size()) == rows, "Mat: ragged cols");
      for (int r = 0; r < rows; ++r)
        if (!cols[c][r].is_zero()) e[{c, r}] = cols[c][r];
    }
    return from_entries(rows, static_cast<int>(cols.size()), e);
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const std::vector<Triplet<F>>& triplets() const { return t_; }

  F at(int r, int c) const {
    auto it = std::lower_bound(t_.begin(), t_.end(), std::make_pair(c, r), [](const Triplet<F>& t, const std::pair<int, int>& k) {
      return std::make_pair(t.col, t.row) < k;
    });
    if (it != t_.end() && it->col == c && it->row == r) return it->value;
    return F(0);
  }

  std::vector<std::vector<F>> dense_rows() const {
    std::vector<std::vector<F>> d(rows_, std::vector<F>(cols_, F(0)));
    for (const auto& t : t_) d[t.row][t.col] = t.value;
    return d;
  }

  std::vector<F> apply(const std::vector<F>& x) const {
    detail::require(static_cast<int>(x.size()) == cols_, "Mat::apply: size mismatch");
    std::vector<F> y(rows_, F(0));
    for (const auto& t : t_) y[t.row] += t.value * x[t.col];
    return y;
  }

  Mat operator*(const Mat& o) const {
    detail::require(cols_ == o.rows_, "Mat::operator*: shape mismatch");
    std::map<std::pair<int, int>, F> e;
    // o is column-major sorted, so accumulate per column of the product.
    for (const auto& tb : o.t_)
      for (const auto& ta : t_)
        if (ta.col == tb.row) {
          F& slot = e[{tb.col, ta.row}];
          slot = slot + ta.value * tb.value;
        }
    for (auto it = e.begin(); it != e.end();)
      it = it->second.is_zero() ? e.erase(it) : std::next(it);
    return from_entries(rows_, o.cols_, e);
  }

  Mat operator+(const Mat& o) const { return add_scaled(o, F(1)); }
  Mat operator-(const Mat& o) const { return add_scaled(o, F(-1)); }

  Mat add_scaled(const Mat& o, const F& a) const {
    detail::require(rows_ == o.rows_ && cols_ == o.cols_, "Mat: shape mismatch");
    std::map<std::pair<int, int>, F> e;
    for (const auto& t : t_) e[{t.col, t.row}] = t.value;
    for (const auto& t : o.t_) {
      F& slot = e[{t.col, t.row}];
      slot = slot + a * t.value;
    }
    for (auto it = e.begin(); it != e.end();)
      it = it->second.is_zero() ? e.erase(it) : std::next(it);
    return from_entries(rows_, cols_, e);
  }

  Mat scale(const F& a) const {
    Mat m(rows_, cols_);
    if (a.is_zero()) return m;
    m.t_ = t_;
    for (auto& t : m.t_) t.value = t.value * a;
    return m;
  }

  Mat transpose() const {
    std::map<std::pair<int, int>, F> e;
    for (const auto& t : t_) e[{t.row, t.col}] = t.value;
    return from_entries(cols_, rows_, e);
  }

  static Mat vstack(const Mat& a, const Mat& b) {
    detail::require(a.cols_ == b.cols_, "Mat::vstack: width mismatch");
    std::map<std::pair<int, int>, F> e;
    for (const auto& t : a.t_) e[{t.col, t.row}] = t.value;
    for (const auto& t : b.t_) e[{t.col, t.row + a.rows_}] = t.value;
    return from_entries(a.rows_ + b.rows_, a.cols_, e);
  }

  static Mat hstack(const Mat& a, const Mat& b) {
    detail::require(a.rows_ == b.rows_, "Mat::hstack: height mismatch");
    std::map<std::pair<int, int>, F> e;
    for (const auto& t : a.t_) e[{t.col, t.row}] = t.value;
    for (const auto& t : b.t_) e[{t.col + a.cols_, t.row}] = t.value;
    return from_entries(a.rows_, a.cols_ + b.cols_, e);
  }

  bool operator==(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_ || t_.size() != o.t_.size()) return false;
    for (std::size_t i = 0; i < t_.size(); ++i)
      if (t_[i].row != o.t_[i].row || t_[i].col != o.t_[i].col || !(t_[i].value == o.t_[i].value)) return false;
    return true;
  }

 private:
  int rows_, cols_;
  std::vector<Triplet<F>> t_;
};

/// Row-reduce in place; returns pivot column per surviving row.
template <FieldScalar F>
std::vector<int> rref_rows(std::vector<std::vector<F>>& rows) {
  std::vector<int> pivots;
  if (rows.empty()) return pivots;
  const int cols = static_cast<int>(rows[0].size());
  std::size_t rank = 0;
  for (int c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t sel = rank;
    while (sel < rows.size() && rows[sel][c].is_zero()) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[rank], rows[sel]);
    const F inv = rows[rank][c].inverse();
    for (int j = c; j < cols; ++j) rows[rank][j] = rows[rank][j] * inv;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][c].is_zero()) continue;
      const F f = rows[r][c];
      for (int j = c; j < cols; ++j) rows[r][j] = rows[r][j] - f * rows[rank][j];
    }
    pivots.push_back(c);
    ++rank;
  }
  rows.resize(rank);
  return pivots;
}

template <FieldScalar F>
int rank(const Mat<F>& m) {
  auto rows = m.dense_rows();
  return static_cast<int>(rref_rows(rows).size());
}

/// Basis of the right kernel {x : m x = 0}, rows in reduced echelon form.
template <FieldScalar F>
Mat<F> kernel_mat(const Mat<F>& m) {
  auto rows = m.dense_rows();
  const std::vector<int> pivots = rref_rows(rows);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int p : pivots) is_pivot[p] = true;
  std::vector<std::vector<F>> basis;
  for (int c = 0; c < m.cols(); ++c) {
    if (is_pivot[c]) continue;
    std::vector<F> v(m.cols(), F(0));
    v[c] = F(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -rows[r][c];
    basis.push_back(std::move(v));
  }
  auto piv2 = rref_rows(basis);
  (void)piv2;
  return Mat<F>::from_rows(basis, m.cols());
}

/// Pivot columns of m; their columns span the image.
template <FieldScalar F>
std::vector<int> image_pivot_cols(const Mat<F>& m) {
  auto rows = m.dense_rows();
  return rref_rows(rows);
}

/// One solution of m x = b, if any.
template <FieldScalar F>
std::optional<std::vector<F>> solve(const Mat<F>& m, const std::vector<F>& b) {
  detail::require(static_cast<int>(b.size()) == m.rows(), "solve: size mismatch");
  auto rows = m.dense_rows();
  for (int r = 0; r < m.rows(); ++r) rows[r].push_back(b[r]);
  const std::vector<int> pivots = rref_rows(rows);
  for (std::size_t r = 0; r < pivots.size(); ++r)
    if (pivots[r] == m.cols()) return std::nullopt;
  std::vector<F> x(m.cols(), F(0));
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = rows[r][m.cols()];
  return x;
}

/// Subspace of a fixed coordinate space, stored as a reduced-echelon row
/// basis.  The representation is canonical: equality is row-by-row equality.
template <FieldScalar F>
class Subspace {
 public:
  Subspace() : ambient_(0) {}
  explicit Subspace(int ambient) : ambient_(ambient), rows_(0, ambient) {}

  static Subspace zero(int ambient) { return Subspace(ambient); }
  static Subspace full(int ambient) {
    Subspace s(ambient);
    s.rows_ = Mat<F>::identity(ambient);
    return s;
  }
  static Subspace span(int ambient, std::vector<std::vector<F>> vecs) {
    for (const auto& v : vecs) detail::require(static_cast<int>(v.size()) == ambient, "Subspace: bad vector length");
    rref_rows(vecs);
    Subspace s(ambient);
    s.rows_ = Mat<F>::from_rows(vecs, ambient);
    return s;
  }
  static Subspace row_space(const Mat<F>& m) {
    auto rows = m.dense_rows();
    rref_rows(rows);
    Subspace s(m.cols());
    s.rows_ = Mat<F>::from_rows(rows, m.cols());
    return s;
  }
  static Subspace col_space(const Mat<F>& m) { return row_space(m.transpose()); }

  int ambient() const { return ambient_; }
  int dim() const { return rows_.rows(); }
  const Mat<F>& basis() const { return rows_; }

  std::vector<F> reduce(std::vector<F> v) const {
    detail::require(static_cast<int>(v.size()) == ambient_, "Subspace::reduce: bad length");
    auto rows = rows_.dense_rows();
    for (const auto& row : rows) {
      int p = 0;
      while (p < ambient_ && row[p].is_zero()) ++p;
      if (p == ambient_ || v[p].is_zero()) continue;
      const F f = v[p];
      for (int j = p; j < ambient_; ++j) v[j] = v[j] - f * row[j];
    }
    return v;
  }

  bool contains(const std::vector<F>& v) const {
    for (const auto& c : reduce(v))
      if (!c.is_zero()) return false;
    return true;
  }

  bool includes(const Subspace& o) const {
    detail::require(ambient_ == o.ambient_, "Subspace::includes: ambient mismatch");
    auto rows = o.rows_.dense_rows();
    for (const auto& r : rows)
      if (!contains(r)) return false;
    return true;
  }

  Subspace sum(const Subspace& o) const {
    detail::require(ambient_ == o.ambient_, "Subspace::sum: ambient mismatch");
    auto rows = rows_.dense_rows();
    auto more = o.rows_.dense_rows();
    rows.insert(rows.end(), more.begin(), more.end());
    return span(ambient_, std::move(rows));
  }

  /// Zassenhaus: row-reduce [A|A; B|0], read the intersection off the
  /// trailing block of rows whose leading half vanished.
  Subspace intersect(const Subspace& o) const {
    detail::require(ambient_ == o.ambient_, "Subspace::intersect: ambient mismatch");
    std::vector<std::vector<F>> work;
    for (const auto& r : rows_.dense_rows()) {
      std::vector<F> w(2 * ambient_, F(0));
      for (int j = 0; j < ambient_; ++j) w[j] = w[j + ambient_] = r[j];
      work.push_back(std::move(w));
    }
    for (const auto& r : o.rows_.dense_rows()) {
      std::vector<F> w(2 * ambient_, F(0));
      for (int j = 0; j < ambient_; ++j) w[j] = r[j];
      work.push_back(std::move(w));
    }
    rref_rows(work);
    std::vector<std::vector<F>> inter;
    for (const auto& w : work) {
      bool left_zero = true;
      for (int j = 0; j < ambient_ && left_zero; ++j) left_zero = w[j].is_zero();
      if (!left_zero) continue;
      inter.emplace_back(w.begin() + ambient_, w.end());
    }
    return span(ambient_, std::move(inter));
  }

  bool operator==(const Subspace& o) const { return ambient_ == o.ambient_ && rows_ == o.rows_; }
  bool operator!=(const Subspace& o) const { return !(*this == o); }

  /// Canonical key: used to sort and deduplicate families of subspaces.
  std::string key() const {
    std::ostringstream os;
    os << dim() << '|';
    for (const auto& t : rows_.triplets()) os << t.col << ',' << t.row << ',' << t.value.str() << ';';
    return os.str();
  }

 private:
  int ambient_;
  Mat<F> rows_;
};

}  // namespace topoalg

#endif  // TOPOALG_MATRIX_HPP
