// Copyright 2026 The Topoalg Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef TOPOALG_MODEL_HPP
#define TOPOALG_MODEL_HPP

#include <string>
#include <vector>

#include "topoalg/tensor.hpp"

namespace topoalg {

/// Brute-force stand-in for a linearly topologized space: a finite space with
/// an explicit filter base of "open" subspaces.  This is the ground-truth
/// model against which the flag calculus is compared.
template <FieldScalar F>
struct TruncatedModel {
  FinSpace space;
  std::vector<Subspace<F>> opens;  // closed under intersection, contains the whole space

  static TruncatedModel make(FinSpace sp, std::vector<Subspace<F>> base) {
    TruncatedModel m;
    m.space = std::move(sp);
    for (const auto& s : base)
      detail::require(s.ambient() == m.space.dim(), "TruncatedModel: open has wrong ambient");
    base.push_back(Subspace<F>::full(m.space.dim()));
    // close under finite intersection
    bool grew = true;
    while (grew) {
      grew = false;
      const std::size_t n = base.size();
      for (std::size_t i = 0; i < n && !grew; ++i)
        for (std::size_t j = i + 1; j < n && !grew; ++j) {
          Subspace<F> x = base[i].intersect(base[j]);
          bool known = false;
          for (const auto& s : base) known = known || s == x;
          if (!known) {
            base.push_back(x);
            grew = true;
          }
        }
      detail::require(base.size() <= 64, "TruncatedModel: intersection closure exceeds budget");
    }
    WindowTopologyBase<F>::dedupe(base);
    m.opens = std::move(base);
    return m;
  }

  /// Window of a flagged space as a truncated model: the opens are the flag
  /// traces on the window.
  static TruncatedModel from_window(const Window& w) {
    TruncatedModel m;
    m.space = w.realized;
    m.opens = WindowTopologyBase<F>::flag_traces(w);
    return m;
  }

  bool is_discrete_as_presented() const {
    for (const auto& s : opens)
      if (s.dim() == 0) return true;
    return false;
  }
};

namespace oracle {

struct Budget {
  int max_dim_per_factor = 6;
  int max_opens_per_factor = 32;
  std::size_t max_states = 20000;
};

template <FieldScalar F>
void check_budget(const std::vector<TruncatedModel<F>>& ms, const Budget& b) {
  for (const auto& m : ms) {
    detail::require(m.space.dim() <= b.max_dim_per_factor, "oracle: factor dimension exceeds budget");
    detail::require(static_cast<int>(m.opens.size()) <= b.max_opens_per_factor, "oracle: opens exceed budget");
  }
}

/// Coordinates of the plain tensor product of the model spaces, factor 0
/// slowest.  Mirrors ProductWindow's row-major convention.
template <FieldScalar F>
struct ModelProduct {
  std::vector<int> dims;
  std::vector<int> strides;
  int total = 1;

  explicit ModelProduct(const std::vector<TruncatedModel<F>>& ms) {
    for (const auto& m : ms) dims.push_back(m.space.dim());
    strides.assign(dims.size(), 1);
    for (int p = static_cast<int>(dims.size()) - 2; p >= 0; --p) strides[p] = strides[p + 1] * dims[p + 1];
    for (int d : dims) total *= d;
  }

  /// a (x) e_m in factor `pos` (x) b over the remaining coordinates: the
  /// subspace P (x) v patterns used by the defining conditions.
  Subspace<F> line_tensor(int pos, const Subspace<F>& p, const std::vector<F>& v_rest,
                          const std::vector<int>& rest_positions) const {
    // v_rest is a vector in the tensor of the factors listed in rest_positions.
    std::vector<std::vector<F>> gens;
    const auto rows = p.basis().dense_rows();
    // strides of the "rest" product
    std::vector<int> rest_strides(rest_positions.size(), 1);
    for (int i = static_cast<int>(rest_positions.size()) - 2; i >= 0; --i)
      rest_strides[i] = rest_strides[i + 1] * dims[rest_positions[i + 1]];
    for (const auto& a : rows) {
      std::vector<F> g(total, F(0));
      for (int i = 0; i < static_cast<int>(a.size()); ++i) {
        if (a[i].is_zero()) continue;
        for (int rj = 0; rj < static_cast<int>(v_rest.size()); ++rj) {
          if (v_rest[rj].is_zero()) continue;
          int idx = strides[pos] * i;
          int rem = rj;
          for (std::size_t t = 0; t < rest_positions.size(); ++t) {
            idx += strides[rest_positions[t]] * (rem / rest_strides[t]);
            rem %= rest_strides[t];
          }
          g[idx] = a[i] * v_rest[rj];
        }
      }
      gens.push_back(std::move(g));
    }
    return Subspace<F>::span(total, gens);
  }
};

/// Does Q satisfy the defining condition of the star topology?  For every
/// nonempty J and every basis tensor v of the complementary factors there
/// must be listed opens P_j with (tensor of P_j) (x) v inside Q; checking v
/// on basis tensors suffices because opens are closed under intersection.
template <FieldScalar F>
bool is_star_open(const std::vector<TruncatedModel<F>>& ms, const Subspace<F>& q) {
  const ModelProduct<F> mp(ms);
  const int n = static_cast<int>(ms.size());
  for (int mask = 1; mask < (1 << n); ++mask) {
    std::vector<int> in_j, rest;
    for (int p = 0; p < n; ++p) ((mask >> p) & 1 ? in_j : rest).push_back(p);
    int rest_total = 1;
    for (int p : rest) rest_total *= mp.dims[p];
    for (int rv = 0; rv < rest_total; ++rv) {
      std::vector<F> v(rest_total, F(0));
      v[rv] = F(1);
      bool found = false;
      // candidate opens for the J factors: all tuples of listed opens
      std::vector<std::size_t> pick(in_j.size(), 0);
      while (!found) {
        // generators of (tensor of picked opens), assembled in J-order
        std::vector<const Subspace<F>*> picks;
        for (std::size_t t = 0; t < in_j.size(); ++t) picks.push_back(&ms[in_j[t]].opens[pick[t]]);
        std::vector<std::vector<F>> acc;
        acc.push_back({F(1)});
        for (const auto* ps : picks) {
          std::vector<std::vector<F>> next;
          for (const auto& a : acc)
            for (const auto& row : ps->basis().dense_rows()) {
              std::vector<F> g;
              g.reserve(a.size() * row.size());
              for (const auto& x : a)
                for (const auto& y : row) g.push_back(x * y);
              next.push_back(std::move(g));
            }
          acc = std::move(next);
        }
        // embed acc (x) v into full coordinates
        std::vector<std::vector<F>> embedded;
        for (const auto& a : acc) {
          std::vector<F> g(mp.total, F(0));
          // index decomposition over J factors
          std::vector<int> jdims;
          for (int p : in_j) jdims.push_back(mp.dims[p]);
          std::vector<int> jstrides(jdims.size(), 1);
          for (int i = static_cast<int>(jdims.size()) - 2; i >= 0; --i) jstrides[i] = jstrides[i + 1] * jdims[i + 1];
          std::vector<int> rstrides(rest.size(), 1);
          for (int i = static_cast<int>(rest.size()) - 2; i >= 0; --i) rstrides[i] = rstrides[i + 1] * mp.dims[rest[i + 1]];
          for (int ai = 0; ai < static_cast<int>(a.size()); ++ai) {
            if (a[ai].is_zero()) continue;
            for (int rj = 0; rj < rest_total; ++rj) {
              if (v[rj].is_zero()) continue;
              int idx = 0, rem = ai;
              for (std::size_t t = 0; t < in_j.size(); ++t) {
                idx += mp.strides[in_j[t]] * (rem / jstrides[t]);
                rem %= jstrides[t];
              }
              int rrem = rj;
              for (std::size_t t = 0; t < rest.size(); ++t) {
                idx += mp.strides[rest[t]] * (rrem / rstrides[t]);
                rrem %= rstrides[t];
              }
              g[idx] = a[ai] * v[rj];
            }
          }
          embedded.push_back(std::move(g));
        }
        found = q.includes(Subspace<F>::span(mp.total, embedded));
        if (found) break;
        // next pick
        std::size_t t = 0;
        while (t < pick.size() && ++pick[t] == ms[in_j[t]].opens.size()) pick[t++] = 0;
        if (t == pick.size()) break;
      }
      if (!found) return false;
    }
  }
  return true;
}

/// Defining condition of the order topology, binary case with factor at
/// position `outer` quotiented first.
template <FieldScalar F>
bool is_arrow_open(const std::vector<TruncatedModel<F>>& ms, const Subspace<F>& q, int outer) {
  detail::require(ms.size() == 2, "oracle: arrow condition implemented for binary models");
  const ModelProduct<F> mp(ms);
  const int inner = 1 - outer;
  // (a = inner): for every basis vector of the outer factor, some open of the
  // inner factor tensored with it lies in q.
  for (int m = 0; m < mp.dims[outer]; ++m) {
    std::vector<F> e(mp.dims[outer], F(0));
    e[m] = F(1);
    bool ok = false;
    for (const auto& p : ms[inner].opens)
      if (q.includes(mp.line_tensor(inner, p, e, {outer}))) {
        ok = true;
        break;
      }
    if (!ok) return false;
  }
  // (a = outer): some open of the outer factor with the full inner factor.
  for (const auto& p : ms[outer].opens) {
    std::vector<std::vector<F>> gens;
    for (const auto& prow : p.basis().dense_rows())
      for (int i = 0; i < mp.dims[inner]; ++i) {
        std::vector<F> g(mp.total, F(0));
        for (int j = 0; j < mp.dims[outer]; ++j)
          if (!prow[j].is_zero()) g[mp.strides[outer] * j + mp.strides[inner] * i] = prow[j];
        gens.push_back(std::move(g));
      }
    if (q.includes(Subspace<F>::span(mp.total, gens))) return true;
  }
  return false;
}

template <FieldScalar F>
bool is_shriek_open(const std::vector<TruncatedModel<F>>& ms, const Subspace<F>& q) {
  // base element: sum over factors of P_i (x) (everything else)
  const ModelProduct<F> mp(ms);
  const int n = static_cast<int>(ms.size());
  std::vector<std::size_t> pick(n, 0);
  while (true) {
    Subspace<F> sum = Subspace<F>::zero(mp.total);
    for (int p = 0; p < n; ++p) {
      std::vector<int> rest;
      for (int t = 0; t < n; ++t)
        if (t != p) rest.push_back(t);
      int rest_total = 1;
      for (int t : rest) rest_total *= mp.dims[t];
      for (int rv = 0; rv < rest_total; ++rv) {
        std::vector<F> v(rest_total, F(0));
        v[rv] = F(1);
        sum = sum.sum(mp.line_tensor(p, ms[p].opens[pick[p]], v, rest));
      }
    }
    if (q.includes(sum)) return true;
    int t = 0;
    while (t < n && ++pick[t] == ms[t].opens.size()) pick[t++] = 0;
    if (t == n) return false;
  }
}

/// Generated base of the chosen topology on the tensor product of the
/// models, straight from the defining conditions.  Every returned subspace
/// is re-verified against the definitional opens test.
template <FieldScalar F>
std::vector<Subspace<F>> topology_base(const std::vector<TruncatedModel<F>>& ms, const TensorTopology& top,
                                       const Budget& budget = Budget{}) {
  check_budget(ms, budget);
  const ModelProduct<F> mp(ms);
  const int n = static_cast<int>(ms.size());

  auto shriek = [&]() {
    std::vector<Subspace<F>> out;
    std::vector<std::size_t> pick(n, 0);
    while (true) {
      Subspace<F> sum = Subspace<F>::zero(mp.total);
      for (int p = 0; p < n; ++p) {
        std::vector<int> rest;
        for (int t = 0; t < n; ++t)
          if (t != p) rest.push_back(t);
        int rest_total = 1;
        for (int t : rest) rest_total *= mp.dims[t];
        for (int rv = 0; rv < rest_total; ++rv) {
          std::vector<F> v(rest_total, F(0));
          v[rv] = F(1);
          sum = sum.sum(mp.line_tensor(p, ms[p].opens[pick[p]], v, rest));
        }
      }
      out.push_back(sum);
      detail::require(out.size() <= budget.max_states, "oracle: base enumeration exceeds budget");
      int t = 0;
      while (t < n && ++pick[t] == ms[t].opens.size()) pick[t++] = 0;
      if (t == n) break;
    }
    WindowTopologyBase<F>::dedupe(out);
    return out;
  };

  auto arrow = [&](int outer) {
    detail::require(n == 2, "oracle: arrow base implemented for binary models");
    const int inner = 1 - outer;
    std::vector<Subspace<F>> states{Subspace<F>::zero(mp.total)};
    for (int m = 0; m < mp.dims[outer]; ++m) {
      std::vector<F> e(mp.dims[outer], F(0));
      e[m] = F(1);
      std::vector<Subspace<F>> next;
      for (const auto& st : states)
        for (const auto& p : ms[inner].opens) next.push_back(st.sum(mp.line_tensor(inner, p, e, {outer})));
      WindowTopologyBase<F>::dedupe(next);
      detail::require(next.size() <= budget.max_states, "oracle: base enumeration exceeds budget");
      states = std::move(next);
    }
    std::vector<Subspace<F>> out;
    for (const auto& st : states)
      for (const auto& p : ms[outer].opens) {
        Subspace<F> term = Subspace<F>::zero(mp.total);
        for (int i = 0; i < mp.dims[inner]; ++i) {
          std::vector<F> e(mp.dims[inner], F(0));
          e[i] = F(1);
          term = term.sum(mp.line_tensor(outer, p, e, {inner}));
        }
        out.push_back(st.sum(term));
      }
    WindowTopologyBase<F>::dedupe(out);
    return out;
  };

  std::vector<Subspace<F>> base;
  switch (top.kind) {
    case TensorKind::Shriek:
      base = shriek();
      for (const auto& q : base) detail::require(is_shriek_open(ms, q), "oracle: generated element fails definition");
      break;
    case TensorKind::Arrow: {
      detail::require(top.order.size() == ms.size(), "oracle: bad arrow order");
      const int outer = top.order.back();
      base = arrow(outer);
      for (const auto& q : base) detail::require(is_arrow_open(ms, q, outer), "oracle: generated element fails definition");
      break;
    }
    case TensorKind::Star: {
      const auto b12 = arrow(1);
      const auto b21 = arrow(0);
      base = WindowTopologyBase<F>::star_base(b12, b21);
      for (const auto& q : base) detail::require(is_star_open(ms, q), "oracle: generated element fails definition");
      break;
    }
  }
  return base;
}

}  // namespace oracle

}  // namespace topoalg

#endif  // TOPOALG_MODEL_HPP
