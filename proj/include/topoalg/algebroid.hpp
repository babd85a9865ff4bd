// Copyright 2026 The Topoalg Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef TOPOALG_ALGEBROID_HPP
#define TOPOALG_ALGEBROID_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "topoalg/envelope.hpp"
#include "topoalg/lie.hpp"
#include "topoalg/matrix.hpp"
#include "topoalg/sym.hpp"

namespace topoalg {

/// Lie algebroid window over a commutative coefficient window: the module
/// of sections is free with a designated basis, the anchor acts on ring
/// basis elements, and the bracket of free generators has ring-valued
/// structure constants.  The k-window bracket is derived by the Leibniz
/// rule, so validation reduces to the anchor being a derivation and Jacobi
/// holding on derived slots.
template <FieldScalar F>
struct AlgebroidPres {
  std::string name;
  CoeffRing<F> ring;
  std::vector<std::string> gen_names;
  // anchor(a, j): action of generator a on ring basis element j
  std::function<std::optional<std::vector<F>>(int, int)> anchor;
  // bracket(a, b): [g_a, g_b] = sum_c (ring coords) g_c
  std::function<std::vector<std::pair<int, std::vector<F>>>(int, int)> bracket;
  std::vector<int> ring_level;  // flag level of each ring basis element

  int rank() const { return static_cast<int>(gen_names.size()); }
  int ring_dim() const { return ring.dim(); }
  /// carrier window of the module: basis r_i g_a, i fast
  int module_dim() const { return ring_dim() * rank(); }
  int module_pos(int i, int a) const { return a * ring_dim() + i; }

  // Catalog.

  /// Tangent algebroid of k[[t]] on the window R = k[[t]]/t^q, free on d/dt.
  static AlgebroidPres tangent_power_series(int q) {
    AlgebroidPres a;
    a.name = "Theta(k[[t]])/t^" + std::to_string(q);
    a.ring = CoeffRing<F>::truncated_power_series(q);
    a.gen_names = {"d"};
    a.anchor = [q](int, int j) -> std::optional<std::vector<F>> {
      std::vector<F> v(q, F(0));
      if (j >= 1) v[j - 1] = F(j);
      return v;
    };
    a.bracket = [q](int, int) { return std::vector<std::pair<int, std::vector<F>>>{}; };
    for (int j = 0; j < q; ++j) a.ring_level.push_back(j);
    return a;
  }

  /// Vector fields vanishing at the origin, t d/dt and beyond: these
  /// preserve every t^j ideal, so quotient windows carry honest actions.
  static AlgebroidPres tangent_power_series_positive(int q) {
    AlgebroidPres a;
    a.name = "t.Theta(k[[t]])/t^" + std::to_string(q);
    a.ring = CoeffRing<F>::truncated_power_series(q);
    a.gen_names = {"td"};
    a.anchor = [q](int, int j) -> std::optional<std::vector<F>> {
      std::vector<F> v(q, F(0));
      v[j] = F(j);
      return v;
    };
    a.bracket = [](int, int) { return std::vector<std::pair<int, std::vector<F>>>{}; };
    for (int j = 0; j < q; ++j) a.ring_level.push_back(j);
    return a;
  }

  /// Tangent algebroid of the discrete polynomial ring, x-degree capped.
  static AlgebroidPres tangent_polynomials(int cap) {
    AlgebroidPres a;
    a.name = "Theta(k[x])<=x^" + std::to_string(cap);
    a.ring = CoeffRing<F>::capped_polynomials(cap);
    a.gen_names = {"d"};
    a.anchor = [cap](int, int j) -> std::optional<std::vector<F>> {
      std::vector<F> v(cap + 1, F(0));
      if (j >= 1) v[j - 1] = F(j);
      return v;
    };
    a.bracket = [](int, int) { return std::vector<std::pair<int, std::vector<F>>>{}; };
    a.ring_level.assign(cap + 1, 0);  // discrete ring: one flag step
    return a;
  }

  /// Finite-dimensional Lie algebra over R = k with zero anchor.
  static AlgebroidPres finite_lie(const std::vector<std::string>& names,
                                  std::function<std::vector<std::pair<int, F>>(int, int)> lie_bracket,
                                  const std::string& label) {
    AlgebroidPres a;
    a.name = label;
    a.ring = CoeffRing<F>::trivial();
    a.gen_names = names;
    a.anchor = [](int, int) { return std::optional<std::vector<F>>{{F(0)}}; };
    a.bracket = [lie_bracket](int x, int y) {
      std::vector<std::pair<int, std::vector<F>>> out;
      for (const auto& [c, coeff] : lie_bracket(x, y)) out.emplace_back(c, std::vector<F>{coeff});
      return out;
    };
    a.ring_level = {0};
    return a;
  }

  static AlgebroidPres abelian_over_k(int rank) {
    std::vector<std::string> names;
    for (int i = 0; i < rank; ++i) names.push_back("g" + std::to_string(i));
    return finite_lie(
        names, [](int, int) { return std::vector<std::pair<int, F>>{}; }, "abelian^" + std::to_string(rank));
  }

  /// Two-dimensional nonabelian Lie algebra [x, y] = y.
  static AlgebroidPres nonabelian2() {
    return finite_lie(
        {"x", "y"},
        [](int a, int b) {
          std::vector<std::pair<int, F>> out;
          if (a == 0 && b == 1) out.emplace_back(1, F(1));
          if (a == 1 && b == 0) out.emplace_back(1, F(-1));
          return out;
        },
        "nonabelian2");
  }

  static AlgebroidPres sl2_over_k() {
    return finite_lie(
        {"e", "h", "f"},
        [](int a, int b) {
          std::vector<std::pair<int, F>> out;
          auto t = [&](int c, long v) { out.emplace_back(c, F(v)); };
          if (a == 0 && b == 2) t(1, 1);
          else if (a == 2 && b == 0) t(1, -1);
          else if (a == 1 && b == 0) t(0, 2);
          else if (a == 0 && b == 1) t(0, -2);
          else if (a == 1 && b == 2) t(2, -2);
          else if (a == 2 && b == 1) t(2, 2);
          return out;
        },
        "sl2");
  }
};

/// Anchor-derivation and Jacobi checks on the window, skipping triples whose
/// ring products escape.
template <FieldScalar F>
bool validate_algebroid(const AlgebroidPres<F>& a) {
  const int q = a.ring_dim();
  // anchor is a derivation: g(r_i r_j) = g(r_i) r_j + r_i g(r_j)
  for (int g = 0; g < a.rank(); ++g)
    for (int i = 0; i < q; ++i)
      for (int j = 0; j < q; ++j) {
        if (!a.ring.product_exact(i, j)) continue;  // boundary: derivative of a reduced product is unsound
        auto prod = a.ring.mul_basis(i, j);
        auto gi = a.anchor(g, i);
        auto gj = a.anchor(g, j);
        if (!prod || !gi || !gj) continue;
        std::vector<F> lhs(q, F(0));
        bool defined = true;
        for (int s = 0; s < q && defined; ++s) {
          if ((*prod)[s].is_zero()) continue;
          auto gs = a.anchor(g, s);
          if (!gs) {
            defined = false;
            break;
          }
          for (int u = 0; u < q; ++u) lhs[u] = lhs[u] + (*prod)[s] * (*gs)[u];
        }
        if (!defined) continue;
        std::vector<F> rhs(q, F(0));
        bool rhs_def = true;
        auto add_mul = [&](const std::vector<F>& x, int basis_j) {
          for (int s = 0; s < q && rhs_def; ++s) {
            if (x[s].is_zero()) continue;
            auto p = a.ring.mul_basis(s, basis_j);
            if (!p || !a.ring.product_exact(s, basis_j)) {
              rhs_def = false;
              return;
            }
            for (int u = 0; u < q; ++u) rhs[u] = rhs[u] + x[s] * (*p)[u];
          }
        };
        add_mul(*gi, j);
        add_mul(*gj, i);
        if (!rhs_def) continue;
        for (int u = 0; u < q; ++u)
          if (!(lhs[u] - rhs[u]).is_zero()) return false;
      }
  // Jacobi on free generators with constant coefficients: catalog brackets
  // are scalar, so double brackets suffice.
  for (int x = 0; x < a.rank(); ++x)
    for (int y = 0; y < a.rank(); ++y)
      for (int z = 0; z < a.rank(); ++z) {
        std::map<int, std::vector<F>> jac;
        auto add = [&](int gen, const std::vector<F>& coeff, const F& sign) {
          auto& slot = jac[gen];
          if (slot.empty()) slot.assign(q, F(0));
          for (int u = 0; u < q; ++u) slot[u] = slot[u] + sign * coeff[u];
        };
        bool defined = true;
        auto double_bracket = [&](int p, int r, int s, const F& sign) {
          for (const auto& [mid, cm] : a.bracket(r, s))
            for (const auto& [out, co] : a.bracket(p, mid)) {
              // cm and co multiply in the ring
              std::vector<F> prod(q, F(0));
              for (int u = 0; u < q && defined; ++u) {
                if (cm[u].is_zero()) continue;
                for (int v = 0; v < q; ++v) {
                  if (co[v].is_zero()) continue;
                  auto pr = a.ring.mul_basis(u, v);
                  if (!pr) {
                    defined = false;
                    return;
                  }
                  for (int w = 0; w < q; ++w) prod[w] = prod[w] + cm[u] * co[v] * (*pr)[w];
                }
              }
              add(out, prod, sign);
            }
        };
        double_bracket(x, y, z, F(1));
        double_bracket(y, z, x, F(1));
        double_bracket(z, x, y, F(1));
        if (!defined) continue;
        for (const auto& [gen, coeff] : jac)
          for (const auto& c : coeff)
            if (!c.is_zero()) return false;
      }
  return true;
}

enum class ExtensionTag { Classical, Chiral, LambdaChiral, TopologicalOnly };

/// Split presentation of a topological R-extension of a Lie algebroid:
/// carrier R + L with an alternating R-bilinear cocycle on the free
/// generators, the lambda recording which twisted right action
/// l . r = r l + lambda l(r) is certified, and the topology family on the
/// split carrier (product opens, or the twisted rigidified family).
template <FieldScalar F>
struct ExtensionDatum {
  AlgebroidPres<F> base;
  std::function<std::vector<F>(int, int)> cocycle;  // c(g_a, g_b) in ring coords
  F lambda{0};
  enum class OpensKind { Product, Rigidified } opens_kind = OpensKind::Product;
  bool flat_certified = true;  // free module: by catalog
  std::string name;

  int carrier_dim() const { return base.ring_dim() + base.module_dim(); }

  static ExtensionDatum split(AlgebroidPres<F> b, std::function<std::vector<F>(int, int)> c, F lambda,
                              const std::string& name) {
    ExtensionDatum e;
    e.base = std::move(b);
    e.cocycle = std::move(c);
    e.lambda = lambda;
    e.name = name;
    return e;
  }

  static ExtensionDatum trivial(AlgebroidPres<F> b, F lambda, const std::string& name) {
    const int q = b.ring_dim();
    return split(
        std::move(b), [q](int, int) { return std::vector<F>(q, F(0)); }, lambda, name);
  }
};

namespace ext_internal {

/// Flag level of the L-part basis element r_i g_a.
template <FieldScalar F>
int l_level(const AlgebroidPres<F>& b, int i, int a) {
  (void)a;
  return b.ring_level[i];
}

/// Carrier coordinates: [ring | module], module basis r_i g_a with i fast.
template <FieldScalar F>
std::vector<F> carrier_ring_vec(const ExtensionDatum<F>& e, const std::vector<F>& r) {
  std::vector<F> v(e.carrier_dim(), F(0));
  for (int i = 0; i < e.base.ring_dim(); ++i) v[i] = r[i];
  return v;
}

/// Opens family on the carrier window, indexed by (L depth n, R depth m).
template <FieldScalar F>
Subspace<F> opens(const ExtensionDatum<F>& e, int n, int m) {
  const auto& b = e.base;
  const int q = b.ring_dim(), rk = b.rank(), cd = e.carrier_dim();
  std::vector<std::vector<F>> gens;
  // ring part of depth >= m
  for (int i = 0; i < q; ++i)
    if (b.ring_level[i] >= m) {
      std::vector<F> v(cd, F(0));
      v[i] = F(1);
      gens.push_back(std::move(v));
    }
  // module part of depth >= n
  for (int a = 0; a < rk; ++a)
    for (int i = 0; i < q; ++i)
      if (l_level(b, i, a) >= n) {
        std::vector<F> v(cd, F(0));
        v[q + b.module_pos(i, a)] = F(1);
        gens.push_back(std::move(v));
      }
  if (e.opens_kind == ExtensionDatum<F>::OpensKind::Rigidified) {
    // diagonal part: l . i = i l + l(i) for i of ring depth >= m, l any
    for (int a = 0; a < rk; ++a)
      for (int j = 0; j < q; ++j)  // l = r_j g_a
        for (int i = 0; i < q; ++i) {
          if (b.ring_level[i] < m) continue;
          auto prod = b.ring.mul_basis(i, j);
          auto acted = b.anchor(a, i);  // g_a(r_i)
          if (!prod || !acted) continue;
          std::vector<F> v(cd, F(0));
          for (int s = 0; s < q; ++s) {
            if (!(*prod)[s].is_zero()) v[q + b.module_pos(s, a)] = (*prod)[s];
          }
          // l(i) = (r_j g_a)(r_i) = r_j . g_a(r_i)
          for (int s = 0; s < q; ++s) {
            if ((*acted)[s].is_zero()) continue;
            auto p2 = b.ring.mul_basis(j, s);
            if (!p2) continue;
            for (int u = 0; u < q; ++u) v[u] = v[u] + (*acted)[s] * (*p2)[u];
          }
          gens.push_back(std::move(v));
        }
  }
  return Subspace<F>::span(cd, gens);
}

/// r . w for the left action (lambda = 0) on the split carrier.
template <FieldScalar F>
std::optional<std::vector<F>> left_act(const ExtensionDatum<F>& e, int rbasis, const std::vector<F>& w) {
  const auto& b = e.base;
  const int q = b.ring_dim(), rk = b.rank(), cd = e.carrier_dim();
  std::vector<F> out(cd, F(0));
  for (int i = 0; i < q; ++i) {
    if (w[i].is_zero()) continue;
    auto p = b.ring.mul_basis(rbasis, i);
    if (!p) return std::nullopt;
    for (int u = 0; u < q; ++u) out[u] = out[u] + w[i] * (*p)[u];
  }
  for (int a = 0; a < rk; ++a)
    for (int i = 0; i < q; ++i) {
      const F c = w[q + b.module_pos(i, a)];
      if (c.is_zero()) continue;
      auto p = b.ring.mul_basis(rbasis, i);
      if (!p) return std::nullopt;
      for (int u = 0; u < q; ++u) out[q + b.module_pos(u, a)] = out[q + b.module_pos(u, a)] + c * (*p)[u];
    }
  return out;
}

/// w . r with the lambda twist: r w + lambda pi(w)(r).
template <FieldScalar F>
std::optional<std::vector<F>> right_act(const ExtensionDatum<F>& e, const std::vector<F>& w, int rbasis,
                                        const F& lambda) {
  auto out = left_act(e, rbasis, w);
  if (!out) return std::nullopt;
  if (lambda.is_zero()) return out;
  const auto& b = e.base;
  const int q = b.ring_dim(), rk = b.rank();
  for (int a = 0; a < rk; ++a)
    for (int i = 0; i < q; ++i) {
      const F c = w[q + b.module_pos(i, a)];
      if (c.is_zero()) continue;
      // (r_i g_a)(r) = r_i . g_a(r)
      auto acted = b.anchor(a, rbasis);
      if (!acted) return std::nullopt;
      for (int s = 0; s < q; ++s) {
        if ((*acted)[s].is_zero()) continue;
        auto p = b.ring.mul_basis(i, s);
        if (!p) return std::nullopt;
        for (int u = 0; u < q; ++u) (*out)[u] = (*out)[u] + lambda * c * (*acted)[s] * (*p)[u];
      }
    }
  return out;
}

}  // namespace ext_internal

struct ExtensionReport {
  ExtensionTag tag = ExtensionTag::TopologicalOnly;
  bool left_arrow = false;       // left action is order-continuous
  bool right_arrow = false;      // lambda-twisted right action is order-continuous
  bool left_shriek = false;      // left action is !-continuous
  bool classical = false;        // lambda = 0 and left_shriek
  bool chiral = false;           // arrow certificates at lambda = 1, or the
                                 // open-ideal criterion for classical data
  bool chiral_by_criterion = false;
  std::string lambda_str;
  int depth = 0;
};

/// Evaluate the continuity certificates on carrier windows to the given
/// depth and classify.  For classical data the criterion "every open ideal
/// I admits an open ideal J with L(J) inside I" decides chirality.
template <FieldScalar F>
ExtensionReport classify_extension(const ExtensionDatum<F>& e, int depth) {
  using ext_internal::left_act;
  using ext_internal::opens;
  using ext_internal::right_act;
  ExtensionReport rep;
  rep.depth = depth;
  rep.lambda_str = e.lambda.str();
  const auto& b = e.base;
  const int q = b.ring_dim(), cd = e.carrier_dim();

  int max_rlevel = 0;
  for (int l : b.ring_level) max_rlevel = std::max(max_rlevel, l);
  const int rdepth = std::min(depth, max_rlevel + 1);

  auto ring_flag = [&](int m) {
    std::vector<std::vector<F>> gens;
    for (int i = 0; i < q; ++i)
      if (b.ring_level[i] >= m) {
        std::vector<F> v(q, F(0));
        v[i] = F(1);
        gens.push_back(std::move(v));
      }
    return Subspace<F>::span(q, gens);
  };

  // left arrow continuity: for each target open O(n, m):
  //  (i) per window vector v, deep ring times v stays inside;
  //  (ii) some open O' with all of R times O' inside.
  bool left_arrow = true, right_arrow = true, left_shriek = true;
  for (int n = 0; n <= depth && (left_arrow || right_arrow || left_shriek); ++n)
    for (int m = 0; m <= rdepth; ++m) {
      const Subspace<F> target = opens(e, n, m);
      // (i) per carrier basis vector
      for (int c = 0; c < cd && left_arrow; ++c) {
        std::vector<F> v(cd, F(0));
        v[c] = F(1);
        bool found = false;
        for (int mp = 0; mp <= rdepth + 2 && !found; ++mp) {
          bool ok = true;
          for (int i = 0; i < q && ok; ++i) {
            if (b.ring_level[i] < mp) continue;
            auto rv = left_act(e, i, v);
            ok = rv.has_value() && target.contains(*rv);
          }
          found = ok;
        }
        left_arrow = found;
      }
      // (ii) uniform open for the left action; also the shriek half
      {
        bool found = false;
        for (int np = 0; np <= depth + 2 && !found; ++np)
          for (int mp = 0; mp <= rdepth + 2 && !found; ++mp) {
            bool ok = true;
            const Subspace<F> src = opens(e, np, mp);
            for (const auto& row : src.basis().dense_rows())
              for (int i = 0; i < q && ok; ++i) {
                auto rv = left_act(e, i, row);
                ok = rv.has_value() && target.contains(*rv);
              }
            found = ok;
          }
        left_arrow = left_arrow && found;
      }
      // shriek: additionally a uniform ring depth absorbing the whole window
      {
        bool found = false;
        for (int mp = 0; mp <= rdepth + 2 && !found; ++mp) {
          bool ok = true;
          for (int i = 0; i < q && ok; ++i) {
            if (b.ring_level[i] < mp) continue;
            for (int c = 0; c < cd && ok; ++c) {
              std::vector<F> v(cd, F(0));
              v[c] = F(1);
              auto rv = left_act(e, i, v);
              ok = rv.has_value() && target.contains(*rv);
            }
          }
          found = ok;
        }
        left_shriek = left_shriek && found && left_arrow;
      }
      // right action with the lambda twist
      {
        // (i) per ring basis element r: some open O' with O' . r inside
        for (int i = 0; i < q && right_arrow; ++i) {
          bool found = false;
          for (int np = 0; np <= depth + 2 && !found; ++np)
            for (int mp = 0; mp <= rdepth + 2 && !found; ++mp) {
              bool ok = true;
              const Subspace<F> src = opens(e, np, mp);
              for (const auto& row : src.basis().dense_rows()) {
                auto rv = right_act(e, row, i, e.lambda);
                ok = ok && rv.has_value() && target.contains(*rv);
              }
              found = ok;
            }
          right_arrow = found;
        }
        // (ii) uniform ring depth against the whole window
        bool found = false;
        for (int mp = 0; mp <= rdepth + 2 && !found; ++mp) {
          bool ok = true;
          for (int i = 0; i < q && ok; ++i) {
            if (b.ring_level[i] < mp) continue;
            for (int c = 0; c < cd && ok; ++c) {
              std::vector<F> v(cd, F(0));
              v[c] = F(1);
              auto rv = right_act(e, v, i, e.lambda);
              ok = rv.has_value() && target.contains(*rv);
            }
          }
          found = ok;
        }
        right_arrow = right_arrow && found;
      }
    }
  rep.left_arrow = left_arrow;
  rep.right_arrow = right_arrow;
  rep.left_shriek = left_shriek;

  // the open-ideal criterion: every I admits J with L(J) inside I
  {
    bool crit = true;
    for (int m = 0; m <= rdepth && crit; ++m) {
      const Subspace<F> target = ring_flag(m);
      bool found = false;
      for (int mp = 0; mp <= rdepth + 2 && !found; ++mp) {
        bool ok = true;
        for (int a = 0; a < b.rank() && ok; ++a)
          for (int jj = 0; jj < q && ok; ++jj) {
            if (b.ring_level[jj] < mp) continue;
            auto acted = b.anchor(a, jj);
            ok = acted.has_value() && target.contains(*acted);
          }
        found = ok;
      }
      crit = found;
    }
    rep.chiral_by_criterion = crit;
  }

  rep.classical = e.lambda.is_zero() && rep.left_shriek;
  rep.chiral = (e.lambda.is_one() && rep.left_arrow && rep.right_arrow) ||
               (rep.classical && rep.chiral_by_criterion);
  if (rep.classical && rep.chiral) rep.tag = ExtensionTag::Chiral;  // both: report the stronger
  else if (rep.chiral) rep.tag = ExtensionTag::Chiral;
  else if (rep.classical) rep.tag = ExtensionTag::Classical;
  else if (rep.left_arrow && rep.right_arrow) rep.tag = ExtensionTag::LambdaChiral;
  else rep.tag = ExtensionTag::TopologicalOnly;
  return rep;
}

/// Baer combination a1 E1 + a2 E2 over a shared base: cocycles combine
/// linearly and so do the lambdas.
template <FieldScalar F>
ExtensionDatum<F> baer_combine(const F& a1, const ExtensionDatum<F>& e1, const F& a2, const ExtensionDatum<F>& e2) {
  detail::require(e1.base.name == e2.base.name && e1.base.rank() == e2.base.rank() &&
                      e1.base.ring_dim() == e2.base.ring_dim(),
                  "baer_combine: base algebroids differ");
  const int q = e1.base.ring_dim();
  auto c1 = e1.cocycle, c2 = e2.cocycle;
  auto combined = [a1, a2, c1, c2, q](int x, int y) {
    std::vector<F> out(q, F(0));
    const auto v1 = c1(x, y);
    const auto v2 = c2(x, y);
    for (int i = 0; i < q; ++i) out[i] = a1 * v1[i] + a2 * v2[i];
    return out;
  };
  ExtensionDatum<F> e = ExtensionDatum<F>::split(e1.base, combined, a1 * e1.lambda + a2 * e2.lambda,
                                                 "(" + e1.name + ")+(" + e2.name + ")");
  return e;
}

/// The inverse extension: negated cocycle, swapped module structures.  In
/// the lambda bookkeeping the certified twist moves from lambda to
/// 1 - lambda.
template <FieldScalar F>
ExtensionDatum<F> inverse_extension(const ExtensionDatum<F>& e) {
  const int q = e.base.ring_dim();
  auto c = e.cocycle;
  auto negated = [c, q](int x, int y) {
    std::vector<F> out = c(x, y);
    for (auto& v : out) v = -v;
    return out;
  };
  ExtensionDatum<F> out = ExtensionDatum<F>::split(e.base, negated, F(1) - e.lambda, "inv(" + e.name + ")");
  out.opens_kind = e.opens_kind;
  return out;
}

/// Criterion for the inverse of a classical extension to be chiral: every
/// open ideal I admits an open P in L with P(R) inside I.
template <FieldScalar F>
bool inverse_criterion(const ExtensionDatum<F>& e, int depth) {
  const auto& b = e.base;
  const int q = b.ring_dim();
  int max_rlevel = 0;
  for (int l : b.ring_level) max_rlevel = std::max(max_rlevel, l);
  const int rdepth = std::min(depth, max_rlevel + 1);
  for (int m = 0; m <= rdepth; ++m) {
    std::vector<std::vector<F>> tgens;
    for (int i = 0; i < q; ++i)
      if (b.ring_level[i] >= m) {
        std::vector<F> v(q, F(0));
        v[i] = F(1);
        tgens.push_back(std::move(v));
      }
    const Subspace<F> target = Subspace<F>::span(q, tgens);
    bool found = false;
    for (int np = 0; np <= depth + 2 && !found; ++np) {
      bool ok = true;
      // P = module elements of depth >= np: (r_i g_a)(r_j) for ring_level(i) >= np
      for (int a = 0; a < b.rank() && ok; ++a)
        for (int i = 0; i < q && ok; ++i) {
          if (b.ring_level[i] < np) continue;
          for (int j = 0; j < q && ok; ++j) {
            auto acted = b.anchor(a, j);
            if (!acted) {
              ok = false;
              break;
            }
            std::vector<F> val(q, F(0));
            bool defined = true;
            for (int s = 0; s < q && defined; ++s) {
              if ((*acted)[s].is_zero()) continue;
              auto p = b.ring.mul_basis(i, s);
              if (!p) defined = false;
              else
                for (int u = 0; u < q; ++u) val[u] = val[u] + (*acted)[s] * (*p)[u];
            }
            ok = defined && target.contains(val);
          }
        }
      found = ok;
    }
    if (!found) return false;
  }
  return true;
}

/// The rigidified extension of L_R = R (x) L for a Lie algebra acting on R:
/// trivial cocycle on the split carrier, but the twisted flag family
/// <P, I> = R P + {i l + l(i)} + I.
template <FieldScalar F>
ExtensionDatum<F> rigidified(const TateLieAlgebra<F>& lie, const CoeffRing<F>& ring,
                             const std::function<std::optional<std::vector<F>>(GenId, int)>& action,
                             const std::vector<int>& ring_level, int l_window_lo, int l_window_hi,
                             const std::string& name) {
  AlgebroidPres<F> base;
  base.name = "R(x)" + lie.carrier().label();
  base.ring = ring;
  base.ring_level = ring_level;
  const auto slots = lie.slots(l_window_lo, l_window_hi);
  for (const auto& g : slots)
    base.gen_names.push_back(lie.carrier().slot_labels(g.index)[g.k]);
  base.anchor = [lie, action, slots](int a, int j) { return action(slots[a], j); };
  const int q = ring.dim();
  base.bracket = [lie, slots, q, l_window_lo, l_window_hi](int a, int b_) {
    std::vector<std::pair<int, std::vector<F>>> out;
    for (const auto& t : lie.bracket(slots[a], slots[b_])) {
      // locate the slot in the window; brackets escaping the window are not
      // representable and the caller's window must be chosen to avoid them
      int pos = -1;
      for (std::size_t s = 0; s < slots.size(); ++s)
        if (slots[s] == t.gen) pos = static_cast<int>(s);
      detail::require(pos >= 0, "rigidified: bracket escapes the chosen L window");
      std::vector<F> coeff(q, F(0));
      coeff[0] = t.coeff;  // scalar times the unit
      out.emplace_back(pos, coeff);
    }
    return out;
  };
  ExtensionDatum<F> e = ExtensionDatum<F>::trivial(std::move(base), F(1), name);
  e.opens_kind = ExtensionDatum<F>::OpensKind::Rigidified;
  return e;
}

/// Push-out description of the rigidified carrier: the quotient of
/// L (->) R + R (->) L + R by l (x) r - r (x) l - l(r) is isomorphic to the
/// split carrier via l (x) r -> r l + l(r), r (x) l -> r l, r -> r.
template <FieldScalar F>
struct PushoutReport {
  int model_dim = 0, carrier_dim = 0;
  bool relations_die = true;
  bool isomorphism = false;
};

template <FieldScalar F>
PushoutReport<F> rigidified_pushout_check(const ExtensionDatum<F>& e) {
  PushoutReport<F> rep;
  const auto& b = e.base;
  const int q = b.ring_dim(), rk = b.rank();
  const int lr = rk * q;  // L (x) R coordinates: (a, j), j fast
  const int rl = q * rk;  // R (x) L coordinates: (j, a), a fast ... keep (a, j) too
  const int model = lr + rl + q;
  rep.model_dim = model;
  rep.carrier_dim = e.carrier_dim();

  auto to_carrier = [&](int part, int a, int j) {
    // part 0: l (x) r; part 1: r (x) l; part 2: r alone (a unused)
    std::vector<F> v(e.carrier_dim(), F(0));
    if (part == 2) {
      v[j] = F(1);
      return std::optional<std::vector<F>>(v);
    }
    // r l: module element r_j g_a
    v[q + b.module_pos(j, a)] = F(1);
    if (part == 0) {
      // plus l(r) = g_a(r_j)
      auto acted = b.anchor(a, j);
      if (!acted) return std::optional<std::vector<F>>{};
      for (int u = 0; u < q; ++u) v[u] = v[u] + (*acted)[u];
    }
    return std::optional<std::vector<F>>(v);
  };

  // matrix of the model map and the relation subspace
  std::vector<std::vector<F>> map_rows(e.carrier_dim(), std::vector<F>(model, F(0)));
  auto col_lr = [&](int a, int j) { return a * q + j; };
  auto col_rl = [&](int j, int a) { return lr + a * q + j; };
  auto col_r = [&](int j) { return lr + rl + j; };
  for (int a = 0; a < rk; ++a)
    for (int j = 0; j < q; ++j) {
      auto v = to_carrier(0, a, j);
      if (!v) return rep;  // window too small to express the map
      for (int r = 0; r < e.carrier_dim(); ++r) map_rows[r][col_lr(a, j)] = (*v)[r];
      auto w = to_carrier(1, a, j);
      for (int r = 0; r < e.carrier_dim(); ++r) map_rows[r][col_rl(j, a)] = (*w)[r];
    }
  for (int j = 0; j < q; ++j) {
    auto v = to_carrier(2, 0, j);
    for (int r = 0; r < e.carrier_dim(); ++r) map_rows[r][col_r(j)] = (*v)[r];
  }
  const Mat<F> mapm = Mat<F>::from_rows(map_rows, model);

  std::vector<std::vector<F>> rel;
  for (int a = 0; a < rk; ++a)
    for (int j = 0; j < q; ++j) {
      std::vector<F> v(model, F(0));
      v[col_lr(a, j)] = F(1);
      v[col_rl(j, a)] = v[col_rl(j, a)] - F(1);
      auto acted = b.anchor(a, j);
      if (!acted) return rep;
      for (int u = 0; u < q; ++u) v[col_r(u)] = v[col_r(u)] - (*acted)[u];
      rel.push_back(std::move(v));
    }
  const Mat<F> relm = Mat<F>::from_rows(rel, model);
  // relations die under the map
  const Mat<F> image_of_rel = mapm * relm.transpose();
  rep.relations_die = image_of_rel == Mat<F>(e.carrier_dim(), static_cast<int>(rel.size()));
  // induced map on the quotient is an isomorphism: rank of map = carrier
  // dim, and model dim - relation rank = carrier dim
  const int relrank = rank(relm);
  rep.isomorphism = rep.relations_die && rank(mapm) == e.carrier_dim() && model - relrank == e.carrier_dim();
  return rep;
}

/// Unique window isomorphism between two rigidification-compatible data:
/// theta = identity on R, identity mod R on L, determined by an R-linear
/// beta: L -> R with beta([l, l']) = (c2 - c1)(l, l') + l beta(l') -
/// l' beta(l) and beta vanishing on the lifted copy of L.  The constraint
/// system is solved exactly; the verdict reports solvability and uniqueness.
template <FieldScalar F>
struct UniqueIsoReport {
  bool exists = false;
  bool unique = false;
  std::vector<F> beta_on_gens;  // beta(g_a) ring coords, concatenated
};

template <FieldScalar F>
UniqueIsoReport<F> rigidified_unique_iso(const ExtensionDatum<F>& e1, const ExtensionDatum<F>& e2,
                                         bool require_kappa = true) {
  detail::require(e1.base.name == e2.base.name && e1.base.rank() == e2.base.rank(),
                  "rigidified_unique_iso: different bases");
  const auto& b = e1.base;
  const int q = b.ring_dim(), rk = b.rank();
  // unknowns: beta(g_a) in R, a = 0..rk-1; kappa-compatibility pins
  // beta(g_a) = 0 on the lifted generators, so the system is
  //   0 = (c2 - c1)(g_a, g_b) + g_a beta(g_b) - g_b beta(g_a)
  // with beta R-linear (beta determined by its values on generators).
  const int unknowns = rk * q;
  std::vector<std::vector<F>> rows;
  std::vector<F> rhs;
  if (require_kappa)
    for (int a = 0; a < rk; ++a)
      for (int u = 0; u < q; ++u) {
        std::vector<F> row(unknowns, F(0));
        row[a * q + u] = F(1);
        rows.push_back(std::move(row));
        rhs.push_back(F(0));
      }
  // cocycle comparison on generator pairs:
  //   g_a beta(g_c) - g_c beta(g_a) - beta([g_a, g_c]) = c1(a,c) - c2(a,c)
  for (int a = 0; a < rk; ++a)
    for (int c = 0; c < rk; ++c) {
      const auto d = e2.cocycle(a, c);
      const auto d1 = e1.cocycle(a, c);
      for (int u = 0; u < q; ++u) {
        std::vector<F> row(unknowns, F(0));
        for (int s = 0; s < q; ++s) {
          auto acts = b.anchor(a, s);
          if (acts) row[c * q + s] = row[c * q + s] + (*acts)[u];
          auto acts2 = b.anchor(c, s);
          if (acts2) row[a * q + s] = row[a * q + s] - (*acts2)[u];
        }
        for (const auto& [out, coeff] : b.bracket(a, c)) {
          for (int s = 1; s < q; ++s)
            detail::require(coeff[s].is_zero(), "rigidified_unique_iso: non-scalar structure constants unsupported");
          row[out * q + u] = row[out * q + u] - coeff[0];
        }
        rows.push_back(std::move(row));
        rhs.push_back(d1[u] - d[u]);
      }
    }
  // solve rows . beta = rhs
  std::vector<std::vector<F>> aug = rows;
  for (std::size_t r = 0; r < aug.size(); ++r) aug[r].push_back(rhs[r]);
  auto pivots = rref_rows(aug);
  UniqueIsoReport<F> rep;
  bool solvable = true;
  for (std::size_t r = 0; r < pivots.size(); ++r)
    if (pivots[r] == unknowns) solvable = false;
  rep.exists = solvable;
  if (!solvable) return rep;
  std::vector<std::vector<F>> homo = rows;
  const int hrank = static_cast<int>(rref_rows(homo).size());
  rep.unique = hrank == unknowns;
  rep.beta_on_gens.assign(unknowns, F(0));
  for (std::size_t r = 0; r < pivots.size(); ++r)
    if (pivots[r] < unknowns) rep.beta_on_gens[pivots[r]] = aug[r][unknowns];
  return rep;
}

}  // namespace topoalg

#endif  // TOPOALG_ALGEBROID_HPP
