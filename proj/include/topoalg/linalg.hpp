// Copyright 2026 The Topoalg Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef TOPOALG_LINALG_HPP
#define TOPOALG_LINALG_HPP

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "topoalg/matrix.hpp"

namespace topoalg {

/// Finite-dimensional space presented by an ordered list of distinct labels.
struct FinSpace {
  std::vector<std::string> labels;

  FinSpace() = default;
  explicit FinSpace(std::vector<std::string> names) : labels(std::move(names)) {
    std::set<std::string> seen(labels.begin(), labels.end());
    detail::require(seen.size() == labels.size(), "FinSpace: duplicate labels");
  }

  static FinSpace anonymous(int n, const std::string& prefix) {
    std::vector<std::string> names;
    names.reserve(n);
    for (int i = 0; i < n; ++i) names.push_back(prefix + "." + std::to_string(i));
    return FinSpace(std::move(names));
  }

  int dim() const { return static_cast<int>(labels.size()); }
  bool operator==(const FinSpace& o) const { return labels == o.labels; }
};

/// Linear map with explicit source/target, matrix of shape target x source.
template <FieldScalar F>
struct LinMap {
  FinSpace source;
  FinSpace target;
  Mat<F> matrix;

  LinMap() = default;
  LinMap(FinSpace src, FinSpace dst, Mat<F> m) : source(std::move(src)), target(std::move(dst)), matrix(std::move(m)) {
    detail::require(matrix.rows() == target.dim() && matrix.cols() == source.dim(),
                    "LinMap: matrix shape does not match spaces");
  }

  static LinMap zero(FinSpace src, FinSpace dst) {
    const int r = dst.dim(), c = src.dim();
    return LinMap(std::move(src), std::move(dst), Mat<F>(r, c));
  }
  static LinMap identity(const FinSpace& v) { return LinMap(v, v, Mat<F>::identity(v.dim())); }

  std::vector<F> apply(const std::vector<F>& x) const { return matrix.apply(x); }
  int rank() const { return topoalg::rank(matrix); }
  bool is_injective() const { return rank() == source.dim(); }
  bool is_surjective() const { return rank() == target.dim(); }
};

/// g after f.
template <FieldScalar F>
LinMap<F> compose(const LinMap<F>& g, const LinMap<F>& f) {
  detail::require(f.target == g.source, "compose: middle spaces differ");
  return LinMap<F>(f.source, g.target, g.matrix * f.matrix);
}

template <FieldScalar F>
struct SubspaceWithInclusion {
  FinSpace space;
  LinMap<F> inclusion;  // space -> ambient
};

template <FieldScalar F>
struct QuotientWithProjection {
  FinSpace space;
  LinMap<F> projection;  // ambient -> space
};

/// Basis of ker f together with its inclusion into the source.
template <FieldScalar F>
SubspaceWithInclusion<F> kernel(const LinMap<F>& f) {
  const Mat<F> basis = kernel_mat(f.matrix);  // rows = kernel vectors
  FinSpace k = FinSpace::anonymous(basis.rows(), "ker");
  return {k, LinMap<F>(k, f.source, basis.transpose())};
}

/// Basis of im f (pivot columns of the matrix) with inclusion into the target.
template <FieldScalar F>
SubspaceWithInclusion<F> image(const LinMap<F>& f) {
  const std::vector<int> pivots = image_pivot_cols(f.matrix);
  std::vector<std::vector<F>> cols;
  for (int c : pivots) {
    std::vector<F> v(f.target.dim(), F(0));
    for (int r = 0; r < f.target.dim(); ++r) v[r] = f.matrix.at(r, c);
    cols.push_back(std::move(v));
  }
  FinSpace im = FinSpace::anonymous(static_cast<int>(cols.size()), "im");
  return {im, LinMap<F>(im, f.target, Mat<F>::from_cols(cols, f.target.dim()))};
}

/// V / W for an injective inclusion W -> V.  The projection matrix is the
/// reduction onto the non-pivot coordinates of a reduced basis of W.
template <FieldScalar F>
QuotientWithProjection<F> quotient(const FinSpace& v, const LinMap<F>& inclusion) {
  detail::require(inclusion.target == v, "quotient: inclusion target mismatch");
  detail::require(inclusion.is_injective(), "quotient: inclusion is not injective");
  auto wrows = inclusion.matrix.transpose().dense_rows();
  const std::vector<int> pivots = rref_rows(wrows);
  std::vector<bool> is_pivot(v.dim(), false);
  for (int p : pivots) is_pivot[p] = true;

  std::vector<std::string> labels;
  std::vector<int> cobasis;
  for (int c = 0; c < v.dim(); ++c)
    if (!is_pivot[c]) {
      cobasis.push_back(c);
      labels.push_back(v.labels[c] + "+W");
    }
  FinSpace q{FinSpace(std::move(labels))};

  // e_c reduces, modulo W, to e_c minus the pivot-row tail hitting c.
  std::map<std::pair<int, int>, F> entries;
  for (int c = 0; c < v.dim(); ++c) {
    std::vector<F> residual(v.dim(), F(0));
    residual[c] = F(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      const F f = residual[pivots[r]];
      if (f.is_zero()) continue;
      for (int j = 0; j < v.dim(); ++j) residual[j] = residual[j] - f * wrows[r][j];
    }
    for (std::size_t qi = 0; qi < cobasis.size(); ++qi)
      if (!residual[cobasis[qi]].is_zero()) entries[{c, static_cast<int>(qi)}] = residual[cobasis[qi]];
  }
  return {q, LinMap<F>(v, q, Mat<F>::from_entries(q.dim(), v.dim(), entries))};
}

}  // namespace topoalg

#endif  // TOPOALG_LINALG_HPP
