// Copyright 2026 The Topoalg Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef TOPOALG_UCHR_HPP
#define TOPOALG_UCHR_HPP

#include <string>
#include <vector>

#include "topoalg/algebroid.hpp"

namespace topoalg {

/// Straightening engine of the enveloping algebra of a chiral extension:
/// generators are the free module basis, the anchor feeds the relation
/// g . r = r g + g(r), and the cocycle lands in the bracket's ring part.
/// Quotients U (P + I) are taken through the coefficient window (exact
/// quotient rings) or through the degree cap; mixed quotients with a
/// nontrivial ideal against a nontrivial anchor are out of range here and
/// rejected by the coefficient ring itself escaping.
template <FieldScalar F>
EnvelopeAlgebra<F> chiral_envelope(const ExtensionDatum<F>& e, int degree_cap) {
  const auto& b = e.base;
  // left-ideal quotients through a reducing coefficient window would need
  // right-handed reduction; only faithful windows are supported
  detail::require(!b.ring.quotient_ring, "chiral_envelope: quotient coefficient windows are out of range");
  typename EnvelopeAlgebra<F>::Config cfg;
  cfg.R = b.ring;
  const int q = b.ring_dim();
  auto bracket = b.bracket;
  auto cocycle = e.cocycle;
  cfg.bracket = [bracket, cocycle, q](GenId x, GenId y) {
    typename EnvelopeAlgebra<F>::BracketResult out;
    for (const auto& [c, coeff] : bracket(x.k, y.k)) {
      // ring-valued structure constants: scalar part on the unit plus a
      // genuinely ring-weighted part would need coefficient moves; the
      // catalog brackets are scalar multiples of the unit.
      for (int u = 1; u < q; ++u)
        detail::require(coeff[u].is_zero(), "chiral_envelope: non-scalar structure constants unsupported");
      out.gen_terms.emplace_back(GenId{0, c}, coeff[0]);
    }
    out.r_part = cocycle(x.k, y.k);
    return out;
  };
  auto anchor = b.anchor;
  cfg.anchor = [anchor](GenId g, int j) { return anchor(g.k, j); };
  cfg.ideal_cut = 1 << 27;
  cfg.floor = -(1 << 27);
  cfg.degree_cap = degree_cap;
  return EnvelopeAlgebra<F>(cfg);
}

/// Normal-order basis of the envelope window: ring basis times weakly
/// increasing generator words up to the degree cap.
template <FieldScalar F>
struct EnvelopeWindow {
  EnvelopeAlgebra<F> env;
  std::vector<std::vector<GenId>> words;  // by degree-major, lexicographic
  FinSpace basis;                         // (word, ring basis) pairs, ring fast

  int dim() const { return basis.dim(); }
  int pos(int word_idx, int rslot) const { return word_idx * env.config().R.dim() + rslot; }

  std::optional<std::vector<F>> coords(const EnvElement<F>& x) const {
    if (!x.clean()) return std::nullopt;
    std::vector<F> v(dim(), F(0));
    for (const auto& [w, coeffs] : x.terms) {
      int wi = -1;
      for (std::size_t i = 0; i < words.size(); ++i)
        if (words[i] == w) wi = static_cast<int>(i);
      if (wi < 0) return std::nullopt;
      for (int s = 0; s < env.config().R.dim(); ++s) v[pos(wi, s)] = coeffs[s];
    }
    return v;
  }
};

template <FieldScalar F>
EnvelopeWindow<F> envelope_window(const ExtensionDatum<F>& e, int degree_cap) {
  EnvelopeWindow<F> w{chiral_envelope(e, degree_cap), {}, {}};
  const int rk = e.base.rank();
  std::vector<std::vector<GenId>> level{{}};
  w.words.push_back({});
  for (int k = 1; k <= degree_cap; ++k) {
    std::vector<std::vector<GenId>> next;
    for (const auto& word : level)
      for (int a = word.empty() ? 0 : word.back().k; a < rk; ++a) {
        auto nw = word;
        nw.push_back(GenId{0, a});
        next.push_back(nw);
      }
    w.words.insert(w.words.end(), next.begin(), next.end());
    level = std::move(next);
  }
  std::vector<std::string> names;
  for (const auto& word : w.words)
    for (int s = 0; s < e.base.ring_dim(); ++s) {
      std::string n = e.base.ring.basis.labels[s];
      for (const auto& g : word) n += "." + e.base.gen_names[g.k];
      names.push_back(n);
    }
  w.basis = FinSpace(std::move(names));
  return w;
}

/// The envelope window as a filtered window algebra (levels = word length),
/// with products that escape the window marked undefined.
template <FieldScalar F>
WindowAlgebra<F> envelope_window_algebra(const ExtensionDatum<F>& e, int degree_cap) {
  const EnvelopeWindow<F> w = envelope_window(e, degree_cap);
  WindowAlgebra<F> a;
  a.space = w.basis;
  const int q = e.base.ring_dim();
  const int d = w.dim();
  a.table.assign(d, std::vector<std::optional<std::vector<F>>>(d));
  auto element_of = [&](int idx) {
    const int wi = idx / q, s = idx % q;
    std::vector<F> r(q, F(0));
    r[s] = F(1);
    return w.env.mul(w.env.from_r(r), w.env.monomial(w.words[wi]));
  };
  std::vector<EnvElement<F>> basis_elements;
  for (int i = 0; i < d; ++i) basis_elements.push_back(element_of(i));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      auto prod = w.env.mul(basis_elements[i], basis_elements[j]);
      auto coords = w.coords(prod);
      if (coords) a.table[i][j] = *coords;
    }
  a.unit.assign(d, F(0));
  a.unit[0] = F(1);  // empty word, unit slot
  for (int i = 0; i < d; ++i) a.level.push_back(static_cast<int>(w.words[i / q].size()));
  return a;
}

/// The algebra of polynomial-coefficient differential operators, windowed
/// by x-degree <= m and order <= n.
template <FieldScalar F>
WindowAlgebra<F> weyl_window(int x_cap, int order_cap) {
  auto theta = AlgebroidPres<F>::tangent_polynomials(x_cap);
  auto e = ExtensionDatum<F>::trivial(std::move(theta), F(1), "weyl");
  return envelope_window_algebra(e, order_cap);
}

/// Graded dimensions of the envelope window, computed by spanning actual
/// straightened products.
template <FieldScalar F>
std::vector<long> envelope_dims(const ExtensionDatum<F>& e, int degree_cap) {
  const EnvelopeAlgebra<F> env = chiral_envelope(e, degree_cap);
  const int q = e.base.ring_dim();
  EnvSpan<F> span;
  std::vector<EnvElement<F>> ring_elements;
  for (int s = 0; s < q; ++s) {
    std::vector<F> r(q, F(0));
    r[s] = F(1);
    ring_elements.push_back(env.from_r(r));
    span.insert(ring_elements.back());
  }
  std::vector<long> dims{span.rank_of_degree(0)};
  std::vector<EnvElement<F>> level = ring_elements;
  for (int k = 1; k <= degree_cap; ++k) {
    std::vector<EnvElement<F>> next;
    for (const auto& x : level)
      for (int a = 0; a < e.base.rank(); ++a) {
        auto prod = env.mul(x, env.generator(GenId{0, a}));
        if (prod.coeff_dirty || prod.is_zero()) continue;  // capped ring: skip escapes
        detail::require(!prod.degree_dirty, "envelope_dims: degree cap too small");
        if (span.insert(prod, true)) next.push_back(prod);
      }
    dims.push_back(span.rank_of_degree(k));
    level = std::move(next);
  }
  return dims;
}

struct WeakPBWVerdict {
  bool holds = true;
  std::vector<long> envelope, sym;
};

/// Graded comparison of the envelope window against the symmetric algebra
/// of the free module, per degree up to the cap.
template <FieldScalar F>
WeakPBWVerdict weak_pbw_2_10(const ExtensionDatum<F>& e, int degree_cap) {
  detail::require(e.flat_certified, "weak_pbw_2_10: missing flatness certificate");
  WeakPBWVerdict v;
  v.envelope = envelope_dims(e, degree_cap);
  for (int k = 0; k <= degree_cap; ++k) {
    v.sym.push_back(sym_free_dim(e.base.ring_dim(), e.base.rank(), k));
    v.holds = v.holds && v.envelope[k] == v.sym[k];
  }
  return v;
}

/// Axioms of a discrete module presented by matrices: a unital commutative
/// action of the ring window, the anchor as the commutation rule between
/// generators and the ring, brackets plus cocycle on generator pairs, and
/// the bimodule compatibility (r l) m = r (l m) built into the composite
/// action.
template <FieldScalar F>
struct ModuleCheckReport {
  bool valid = true;
  std::string witness;
};

template <FieldScalar F>
ModuleCheckReport<F> discrete_module_check(const ExtensionDatum<F>& e, const std::vector<Mat<F>>& rho_ring,
                                           const std::vector<Mat<F>>& rho_gen, int module_dim) {
  ModuleCheckReport<F> rep;
  const auto& b = e.base;
  const int q = b.ring_dim(), rk = b.rank();
  detail::require(static_cast<int>(rho_ring.size()) == q && static_cast<int>(rho_gen.size()) == rk,
                  "discrete_module_check: table sizes");
  auto fail = [&](const std::string& why) {
    rep.valid = false;
    if (rep.witness.empty()) rep.witness = why;
  };
  const Mat<F> id = Mat<F>::identity(module_dim);
  const Mat<F> zero(module_dim, module_dim);
  if (!(rho_ring[0] == id)) fail("unit does not act as the identity");
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j) {
      auto p = b.ring.mul_basis(i, j);
      if (!p) continue;
      Mat<F> expect(module_dim, module_dim);
      for (int s = 0; s < q; ++s)
        if (!(*p)[s].is_zero()) expect = expect + rho_ring[s].scale((*p)[s]);
      if (!(rho_ring[i] * rho_ring[j] == expect)) fail("ring action is not multiplicative");
      if (!(rho_ring[i] * rho_ring[j] == rho_ring[j] * rho_ring[i])) fail("ring action is not commutative");
    }
  for (int a = 0; a < rk; ++a)
    for (int j = 0; j < q; ++j) {
      auto acted = b.anchor(a, j);
      if (!acted) continue;
      Mat<F> expect(module_dim, module_dim);
      for (int s = 0; s < q; ++s)
        if (!(*acted)[s].is_zero()) expect = expect + rho_ring[s].scale((*acted)[s]);
      const Mat<F> comm = rho_gen[a] * rho_ring[j] - rho_ring[j] * rho_gen[a];
      if (!(comm == expect)) fail("generator-ring commutation disagrees with the anchor");
    }
  for (int a = 0; a < rk; ++a)
    for (int c = 0; c < rk; ++c) {
      Mat<F> expect(module_dim, module_dim);
      for (const auto& [g, coeff] : b.bracket(a, c))
        for (int s = 0; s < q; ++s)
          if (!coeff[s].is_zero()) expect = expect + (rho_ring[s] * rho_gen[g]).scale(coeff[s]);
      const auto cv = e.cocycle(a, c);
      for (int s = 0; s < q; ++s)
        if (!cv[s].is_zero()) expect = expect + rho_ring[s].scale(cv[s]);
      const Mat<F> comm = rho_gen[a] * rho_gen[c] - rho_gen[c] * rho_gen[a];
      if (!(comm == expect)) fail("generator bracket disagrees with structure constants plus cocycle");
    }
  (void)zero;
  return rep;
}

}  // namespace topoalg

#endif  // TOPOALG_UCHR_HPP
