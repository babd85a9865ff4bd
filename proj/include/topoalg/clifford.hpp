// Copyright 2026 The Topoalg Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef TOPOALG_CLIFFORD_HPP
#define TOPOALG_CLIFFORD_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "topoalg/envelope.hpp"

namespace topoalg {

/// Clifford algebra window of a hyperbolic pair: n covector generators a*_i
/// and n vector generators a_i over a coefficient window, with relations
/// {a*_i, a_j} = pairing(i, j), {a_i, a_j} = {a*_i, a*_j} = 0.  Normal
/// order puts covectors left of vectors, each block ascending.  The pairing
/// must be nondegenerate.
template <FieldScalar F>
class CliffordWindow {
 public:
  // monomial: (star mask, vector mask)
  using Mono = std::pair<std::uint32_t, std::uint32_t>;
  struct Element {
    std::map<Mono, std::vector<F>> terms;
    bool coeff_dirty = false;

    bool is_zero() const { return terms.empty(); }
  };

  CliffordWindow(int n, CoeffRing<F> ring, Mat<F> pairing) : n_(n), ring_(std::move(ring)), pairing_(std::move(pairing)) {
    detail::require(n >= 0 && n < 31, "CliffordWindow: rank out of range");
    detail::require(pairing_.rows() == n && pairing_.cols() == n, "CliffordWindow: pairing shape");
    detail::require(rank(pairing_) == n, "CliffordWindow: hyperbolic pairing must be nondegenerate");
  }

  static CliffordWindow standard(int n) { return CliffordWindow(n, CoeffRing<F>::trivial(), Mat<F>::identity(n)); }

  int rank_n() const { return n_; }
  long dim() const { return (1L << (2 * n_)) * ring_.dim(); }

  Element one() const {
    Element e;
    e.terms[{0, 0}] = ring_.one;
    return e;
  }

  Element gen_star(int i) const {
    Element e;
    e.terms[{1u << i, 0}] = ring_.one;
    return e;
  }

  Element gen_vec(int i) const {
    Element e;
    e.terms[{0, 1u << i}] = ring_.one;
    return e;
  }

  Element add(const Element& a, const Element& b) const {
    Element r = a;
    r.coeff_dirty = a.coeff_dirty || b.coeff_dirty;
    for (const auto& [m, c] : b.terms) accumulate(r, m, c);
    return r;
  }

  Element scale(const Element& a, const F& s) const {
    Element r;
    r.coeff_dirty = a.coeff_dirty;
    if (s.is_zero()) return r;
    for (const auto& [m, c] : a.terms) {
      auto cc = c;
      for (auto& x : cc) x = x * s;
      r.terms[m] = std::move(cc);
    }
    return r;
  }

  Element mul(const Element& a, const Element& b) const {
    Element r;
    r.coeff_dirty = a.coeff_dirty || b.coeff_dirty;
    for (const auto& [ma, ca] : a.terms)
      for (const auto& [mb, cb] : b.terms) {
        // multiply coefficients, then fold a's generator sequence into mb
        std::vector<F> coeff(ring_.dim(), F(0));
        bool dirty = false;
        for (int i = 0; i < ring_.dim(); ++i) {
          if (ca[i].is_zero()) continue;
          for (int j = 0; j < ring_.dim(); ++j) {
            if (cb[j].is_zero()) continue;
            auto p = ring_.mul_basis(i, j);
            if (!p) {
              dirty = true;
              continue;
            }
            const F s = ca[i] * cb[j];
            for (int u = 0; u < ring_.dim(); ++u) coeff[u] = coeff[u] + s * (*p)[u];
          }
        }
        r.coeff_dirty = r.coeff_dirty || dirty;
        Element piece;
        piece.terms[mb] = coeff;
        // left-multiply by a's generators, vectors first (rightmost first)
        for (int i = n_ - 1; i >= 0; --i)
          if (ma.second & (1u << i)) piece = left_mul_vec(i, piece);
        for (int i = n_ - 1; i >= 0; --i)
          if (ma.first & (1u << i)) piece = left_mul_star(i, piece);
        for (const auto& [m, c] : piece.terms) accumulate(r, m, c);
        r.coeff_dirty = r.coeff_dirty || piece.coeff_dirty;
      }
    return r;
  }

  Element commutator(const Element& a, const Element& b) const { return add(mul(a, b), scale(mul(b, a), F(-1))); }

  bool equal(const Element& a, const Element& b) const { return add(a, scale(b, F(-1))).is_zero(); }

  /// All normal-ordered monomials, (star mask, vec mask) lexicographic.
  std::vector<Mono> monomials() const {
    std::vector<Mono> out;
    for (std::uint32_t s = 0; s < (1u << n_); ++s)
      for (std::uint32_t v = 0; v < (1u << n_); ++v) out.push_back({s, v});
    return out;
  }

  std::string label(const Mono& m) const {
    std::string s;
    for (int i = 0; i < n_; ++i)
      if (m.first & (1u << i)) s += "a*" + std::to_string(i);
    for (int i = 0; i < n_; ++i)
      if (m.second & (1u << i)) s += "a" + std::to_string(i);
    return s.empty() ? "1" : s;
  }

 private:
  static void accumulate(Element& e, const Mono& m, const std::vector<F>& c) {
    auto it = e.terms.find(m);
    if (it == e.terms.end()) {
      for (const auto& x : c)
        if (!x.is_zero()) {
          e.terms[m] = c;
          return;
        }
      return;
    }
    bool zero = true;
    for (std::size_t i = 0; i < c.size(); ++i) {
      it->second[i] = it->second[i] + c[i];
      zero = zero && it->second[i].is_zero();
    }
    if (zero) e.terms.erase(it);
  }

  static int bits_below(std::uint32_t mask, int i) { return __builtin_popcount(mask & ((1u << i) - 1)); }

  Element left_mul_star(int j, const Element& x) const {
    Element r;
    r.coeff_dirty = x.coeff_dirty;
    for (const auto& [m, c] : x.terms) {
      if (m.first & (1u << j)) continue;  // a*_j squared
      const int sign = bits_below(m.first, j) % 2 ? -1 : 1;
      auto cc = c;
      if (sign < 0)
        for (auto& v : cc) v = -v;
      accumulate(r, {m.first | (1u << j), m.second}, cc);
    }
    return r;
  }

  Element left_mul_vec(int j, const Element& x) const {
    Element r;
    r.coeff_dirty = x.coeff_dirty;
    for (const auto& [m, c] : x.terms) {
      // move a_j right past the star block: the i-th star contracts with
      // sign (-1)^{i-1}
      for (int s = 0; s < n_; ++s) {
        if (!(m.first & (1u << s))) continue;
        const F p = pairing_.at(s, j);
        if (!p.is_zero()) {
          auto cc = c;
          const int hit_sign = bits_below(m.first, s) % 2 ? -1 : 1;
          for (auto& v : cc) v = v * p * F(hit_sign);
          accumulate(r, {m.first & ~(1u << s), m.second}, cc);
        }
      }
      // then insert into the vector block
      const int stars = __builtin_popcount(m.first);
      if (!(m.second & (1u << j))) {
        const int sgn = ((stars + bits_below(m.second, j)) % 2) ? -1 : 1;
        auto cc = c;
        if (sgn < 0)
          for (auto& v : cc) v = -v;
        accumulate(r, {m.first, m.second | (1u << j)}, cc);
      }
    }
    return r;
  }

  int n_;
  CoeffRing<F> ring_;
  Mat<F> pairing_;
};

/// Matrix of the adjoint action of the quadratic part span{a*_r a_s} on the
/// vector window: [a*_r a_s, a_j] acts as minus the pairing times a rank-one
/// map, so the action fills the whole endomorphism window.
template <FieldScalar F>
Mat<F> clifford_quadratic_action(const CliffordWindow<F>& cl) {
  const int n = cl.rank_n();
  std::vector<std::vector<F>> rows;  // one row per quadratic generator, flattened n x n action
  for (int r = 0; r < n; ++r)
    for (int s = 0; s < n; ++s) {
      const auto quad = cl.mul(cl.gen_star(r), cl.gen_vec(s));
      std::vector<F> flat(n * n, F(0));
      for (int j = 0; j < n; ++j) {
        const auto br = cl.commutator(quad, cl.gen_vec(j));
        for (int t = 0; t < n; ++t) {
          auto it = br.terms.find({0u, 1u << t});
          if (it != br.terms.end()) flat[t * n + j] = it->second[0];
        }
      }
      rows.push_back(std::move(flat));
    }
  return Mat<F>::from_rows(rows, n * n);
}

}  // namespace topoalg

#endif  // TOPOALG_CLIFFORD_HPP
