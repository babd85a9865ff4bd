// Copyright 2026 The Topoalg Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef TOPOALG_OPERAD_HPP
#define TOPOALG_OPERAD_HPP

#include <map>
#include <optional>
#include <vector>

#include "topoalg/linalg.hpp"

namespace topoalg {

/// Linear order on n arguments: the sequence of 0-based argument labels.
using Order = std::vector<int>;

/// Substitute `inner` into label i of `outer`.  Inner labels shift to
/// i..i+n_in-1, outer labels above i shift up by n_in-1.
inline Order compose_order(const Order& outer, int i, const Order& inner) {
  const int nin = static_cast<int>(inner.size());
  Order out;
  for (int l : outer) {
    if (l == i)
      for (int m : inner) out.push_back(m + i);
    else
      out.push_back(l < i ? l : l + nin - 1);
  }
  return out;
}

/// Relabel by pi: entry l becomes pi[l].  Chosen so that order realizations
/// m_sigma(x) = x_{sigma(1)} ... x_{sigma(n)} are equivariant.
inline Order act_order(const Order& s, const std::vector<int>& pi) {
  Order out;
  for (int l : s) out.push_back(pi[l]);
  return out;
}

/// Dense table of an n-ary multilinear map on a dim-d space: value vectors
/// indexed by basis tuples (argument 0 slowest).
template <RingScalar S>
struct MultiMap {
  int arity = 0;
  int dim = 0;
  std::vector<S> table;  // size dim^arity * dim

  static MultiMap zero(int arity, int dim) {
    MultiMap m;
    m.arity = arity;
    m.dim = dim;
    std::size_t n = 1;
    for (int i = 0; i < arity; ++i) n *= dim;
    m.table.assign(n * dim, S(0));
    return m;
  }

  std::size_t tuples() const {
    std::size_t n = 1;
    for (int i = 0; i < arity; ++i) n *= dim;
    return n;
  }

  S& at(std::size_t tuple, int out) { return table[tuple * dim + out]; }
  const S& at(std::size_t tuple, int out) const { return table[tuple * dim + out]; }

  std::size_t tuple_of(const std::vector<int>& idx) const {
    std::size_t t = 0;
    for (int i : idx) t = t * dim + i;
    return t;
  }

  bool is_zero() const {
    for (const auto& v : table)
      if (!v.is_zero()) return false;
    return true;
  }

  MultiMap operator+(const MultiMap& o) const {
    MultiMap r = *this;
    for (std::size_t i = 0; i < table.size(); ++i) r.table[i] = r.table[i] + o.table[i];
    return r;
  }
  MultiMap operator-() const {
    MultiMap r = *this;
    for (auto& v : r.table) v = -v;
    return r;
  }

  /// Argument permutation: (f . pi)(x_0..x_{n-1}) = f(x_{pi(0)}, ..).
  MultiMap act(const std::vector<int>& pi) const {
    MultiMap r = zero(arity, dim);
    std::vector<int> idx(arity, 0);
    for (std::size_t t = 0; t < tuples(); ++t) {
      std::vector<int> permuted(arity);
      for (int p = 0; p < arity; ++p) permuted[p] = idx[pi[p]];
      const std::size_t src = tuple_of(permuted);
      for (int o = 0; o < dim; ++o) r.at(t, o) = at(src, o);
      for (int p = arity - 1; p >= 0; --p) {
        if (++idx[p] < dim) break;
        idx[p] = 0;
      }
    }
    return r;
  }

  /// Operadic composition: plug `inner` into argument slot i.
  MultiMap compose(int i, const MultiMap& inner) const {
    const int nout = arity, nin = inner.arity;
    MultiMap r = zero(nout + nin - 1, dim);
    std::vector<int> idx(r.arity, 0);
    for (std::size_t t = 0; t < r.tuples(); ++t) {
      std::vector<int> inner_idx(idx.begin() + i, idx.begin() + i + nin);
      const std::size_t ti = inner.tuple_of(inner_idx);
      for (int k = 0; k < dim; ++k) {
        const S& c = inner.at(ti, k);
        if (c.is_zero()) continue;
        std::vector<int> outer_idx;
        outer_idx.reserve(nout);
        for (int p = 0; p < i; ++p) outer_idx.push_back(idx[p]);
        outer_idx.push_back(k);
        for (int p = i + nin; p < r.arity; ++p) outer_idx.push_back(idx[p]);
        const std::size_t to = tuple_of(outer_idx);
        for (int o = 0; o < dim; ++o) {
          const S& vo = at(to, o);
          if (!vo.is_zero()) r.at(t, o) = r.at(t, o) + c * vo;
        }
      }
      for (int p = r.arity - 1; p >= 0; --p) {
        if (++idx[p] < dim) break;
        idx[p] = 0;
      }
    }
    return r;
  }
};

/// Element of the order-graded operation space: one multilinear component
/// per linear order, almost all zero.
template <RingScalar S>
struct ChiralOp {
  int arity = 0;
  int dim = 0;
  std::map<Order, MultiMap<S>> comps;

  static ChiralOp zero(int arity, int dim) { return {arity, dim, {}}; }

  void add_comp(const Order& o, const MultiMap<S>& m) {
    auto it = comps.find(o);
    if (it == comps.end()) {
      if (!m.is_zero()) comps[o] = m;
      return;
    }
    it->second = it->second + m;
    if (it->second.is_zero()) comps.erase(it);
  }

  ChiralOp operator+(const ChiralOp& o) const {
    ChiralOp r = *this;
    for (const auto& [ord, m] : o.comps) r.add_comp(ord, m);
    return r;
  }
  ChiralOp operator-() const {
    ChiralOp r = *this;
    for (auto& [ord, m] : r.comps) m = -m;
    return r;
  }

  /// Diagonal action on maps and orders.
  ChiralOp act(const std::vector<int>& pi) const {
    ChiralOp r = zero(arity, dim);
    for (const auto& [ord, m] : comps) r.add_comp(act_order(ord, pi), m.act(pi));
    return r;
  }

  ChiralOp compose(int i, const ChiralOp& inner) const {
    ChiralOp r = zero(arity + inner.arity - 1, dim);
    for (const auto& [so, mo] : comps)
      for (const auto& [si, mi] : inner.comps) r.add_comp(compose_order(so, i, si), mo.compose(i, mi));
    return r;
  }

  bool is_zero() const { return comps.empty(); }
};

/// Binary associative structure constants: c[i][j] = coordinates of e_i e_j.
template <RingScalar S>
struct AssocTable {
  int dim = 0;
  std::vector<S> c;  // c[(i*dim + j)*dim + k]

  static AssocTable zero(int dim) {
    AssocTable t;
    t.dim = dim;
    t.c.assign(static_cast<std::size_t>(dim) * dim * dim, S(0));
    return t;
  }
  S& at(int i, int j, int k) { return c[(static_cast<std::size_t>(i) * dim + j) * dim + k]; }
  const S& at(int i, int j, int k) const { return c[(static_cast<std::size_t>(i) * dim + j) * dim + k]; }

  std::vector<S> mul(const std::vector<S>& x, const std::vector<S>& y) const {
    std::vector<S> z(dim, S(0));
    for (int i = 0; i < dim; ++i) {
      if (x[i].is_zero()) continue;
      for (int j = 0; j < dim; ++j) {
        if (y[j].is_zero()) continue;
        const S f = x[i] * y[j];
        for (int k = 0; k < dim; ++k) {
          const S& cc = at(i, j, k);
          if (!cc.is_zero()) z[k] = z[k] + f * cc;
        }
      }
    }
    return z;
  }
};

template <RingScalar S>
struct AssociativityWitness {
  int i = 0, j = 0, k = 0;
  std::vector<S> defect;  // (e_i e_j) e_k - e_i (e_j e_k)
};

/// Brute-force associativity scan over basis triples; the independent side
/// of the dictionary test.
template <RingScalar S>
std::optional<AssociativityWitness<S>> associativity_witness(const AssocTable<S>& t) {
  std::vector<S> ei(t.dim, S(0)), ej(t.dim, S(0)), ek(t.dim, S(0));
  for (int i = 0; i < t.dim; ++i)
    for (int j = 0; j < t.dim; ++j)
      for (int k = 0; k < t.dim; ++k) {
        std::fill(ei.begin(), ei.end(), S(0));
        std::fill(ej.begin(), ej.end(), S(0));
        std::fill(ek.begin(), ek.end(), S(0));
        ei[i] = S(1);
        ej[j] = S(1);
        ek[k] = S(1);
        const auto left = t.mul(t.mul(ei, ej), ek);
        const auto right = t.mul(ei, t.mul(ej, ek));
        bool equal = true;
        std::vector<S> defect(t.dim, S(0));
        for (int o = 0; o < t.dim; ++o) {
          defect[o] = left[o] - right[o];
          equal = equal && defect[o].is_zero();
        }
        if (!equal) return AssociativityWitness<S>{i, j, k, defect};
      }
  return std::nullopt;
}

/// The order-graded operation attached to a binary product: the product on
/// the order (0,1) and minus the transposed product on (1,0).  Its first
/// component recovers the product.
template <RingScalar S>
ChiralOp<S> chiral_from_assoc(const AssocTable<S>& t) {
  ChiralOp<S> mu = ChiralOp<S>::zero(2, t.dim);
  MultiMap<S> f = MultiMap<S>::zero(2, t.dim);
  MultiMap<S> g = MultiMap<S>::zero(2, t.dim);
  for (int i = 0; i < t.dim; ++i)
    for (int j = 0; j < t.dim; ++j)
      for (int k = 0; k < t.dim; ++k) {
        f.at(f.tuple_of({i, j}), k) = t.at(i, j, k);
        g.at(g.tuple_of({i, j}), k) = -t.at(j, i, k);
      }
  mu.add_comp({0, 1}, f);
  mu.add_comp({1, 0}, g);
  return mu;
}

template <RingScalar S>
bool is_skew(const ChiralOp<S>& mu) {
  return (mu.act({1, 0}) + mu).is_zero();
}

/// Sum of the cyclic rotations of mu o_1 mu; vanishes exactly when mu is a
/// Lie bracket for the order-graded structure.
template <RingScalar S>
ChiralOp<S> jacobiator(const ChiralOp<S>& mu) {
  const ChiralOp<S> t = mu.compose(0, mu);
  const std::vector<int> rho{1, 2, 0};
  const std::vector<int> rho2{2, 0, 1};
  return t + t.act(rho) + t.act(rho2);
}

template <RingScalar S>
struct JacobiWitness {
  Order order;
  std::vector<int> tuple;
  std::vector<S> defect;
};

template <RingScalar S>
struct JacobiVerdict {
  bool holds = false;
  std::optional<JacobiWitness<S>> witness;
};

template <RingScalar S>
JacobiVerdict<S> jacobi_check(const ChiralOp<S>& mu) {
  const ChiralOp<S> jac = jacobiator(mu);
  JacobiVerdict<S> v;
  v.holds = jac.is_zero();
  if (v.holds) return v;
  for (const auto& [ord, m] : jac.comps) {
    std::vector<int> idx(m.arity, 0);
    for (std::size_t t = 0; t < m.tuples(); ++t) {
      bool nonzero = false;
      for (int o = 0; o < m.dim && !nonzero; ++o) nonzero = !m.at(t, o).is_zero();
      if (nonzero) {
        std::vector<S> defect(m.dim, S(0));
        for (int o = 0; o < m.dim; ++o) defect[o] = m.at(t, o);
        v.witness = JacobiWitness<S>{ord, idx, defect};
        return v;
      }
      for (int p = m.arity - 1; p >= 0; --p) {
        if (++idx[p] < m.dim) break;
        idx[p] = 0;
      }
    }
  }
  return v;
}

}  // namespace topoalg

#endif  // TOPOALG_OPERAD_HPP
