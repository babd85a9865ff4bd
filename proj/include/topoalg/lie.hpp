// Copyright 2026 The Topoalg Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef TOPOALG_LIE_HPP
#define TOPOALG_LIE_HPP

#include <functional>
#include <vector>

#include "topoalg/flagged.hpp"

namespace topoalg {

/// Basis slot identifier inside a flagged carrier.
struct GenId {
  int index = 0;
  int k = 0;

  friend bool operator<(const GenId& a, const GenId& b) {
    return a.index != b.index ? a.index < b.index : a.k < b.k;
  }
  friend bool operator==(const GenId& a, const GenId& b) { return a.index == b.index && a.k == b.k; }
  friend bool operator>(const GenId& a, const GenId& b) { return b < a; }
};

template <FieldScalar F>
struct LieTerm {
  GenId gen;
  F coeff{0};
};

/// Topological Lie algebra on a flagged carrier, given by sparse structure
/// constants on slots with a support certificate sigma: [P_a, P_b] lies in
/// P_{sigma(a,b)}, and sigma(a,b) grows as min(a,b) does.  A cofinal list of
/// indices with [P_n, P_n] inside P_n witnesses the open-subalgebra base.
template <FieldScalar F>
class TateLieAlgebra {
 public:
  using Bracket = std::function<std::vector<LieTerm<F>>(GenId, GenId)>;
  using Sigma = std::function<int(int, int)>;

  struct ValidationError {
    enum Kind { Jacobi, Antisymmetry, SigmaViolation } kind;
    GenId a, b, c;
  };

  static TateLieAlgebra make(FlaggedSpace carrier, Bracket bracket, Sigma sigma, int subalgebra_from,
                             int probe_lo = -3, int probe_hi = 4) {
    TateLieAlgebra l;
    l.carrier_ = std::move(carrier);
    l.bracket_ = std::move(bracket);
    l.sigma_ = std::move(sigma);
    l.subalgebra_from_ = subalgebra_from;
    if (auto err = l.validate(probe_lo, probe_hi)) {
      switch (err->kind) {
        case ValidationError::Jacobi:
          throw std::invalid_argument("TateLieAlgebra: Jacobi fails on a slot triple");
        case ValidationError::Antisymmetry:
          throw std::invalid_argument("TateLieAlgebra: bracket is not antisymmetric");
        case ValidationError::SigmaViolation:
          throw std::invalid_argument("TateLieAlgebra: bracket escapes its sigma support bound");
      }
    }
    return l;
  }

  const FlaggedSpace& carrier() const { return carrier_; }
  int subalgebra_from() const { return subalgebra_from_; }
  int sigma(int a, int b) const { return sigma_(a, b); }

  std::vector<LieTerm<F>> bracket(const GenId& a, const GenId& b) const { return bracket_(a, b); }

  std::vector<GenId> slots(int lo, int hi) const {
    std::vector<GenId> out;
    for (int n = lo; n < hi; ++n)
      for (int k = 0; k < carrier_.graded_dim(n); ++k) out.push_back({n, k});
    return out;
  }

  /// Antisymmetry, Jacobi and the sigma bound on all slot triples of a probe
  /// range.  Structure constants are finitely supported per pair, so the
  /// checks are exact.
  std::optional<ValidationError> validate(int lo, int hi) const {
    const auto gen_list = slots(lo, hi);
    auto add_into = [](std::map<GenId, F>& acc, const std::vector<LieTerm<F>>& ts, const F& scale) {
      for (const auto& t : ts) {
        F& slot = acc[t.gen];
        slot = slot + scale * t.coeff;
      }
    };
    for (const auto& a : gen_list)
      for (const auto& b : gen_list) {
        std::map<GenId, F> anti;
        add_into(anti, bracket_(a, b), F(1));
        add_into(anti, bracket_(b, a), F(1));
        for (const auto& [g, c] : anti)
          if (!c.is_zero()) return ValidationError{ValidationError::Antisymmetry, a, b, {}};
        for (const auto& t : bracket_(a, b))
          if (!t.coeff.is_zero() && t.gen.index < sigma_(a.index, b.index))
            return ValidationError{ValidationError::SigmaViolation, a, b, {}};
      }
    for (const auto& a : gen_list)
      for (const auto& b : gen_list)
        for (const auto& c : gen_list) {
          std::map<GenId, F> jac;
          for (const auto& t : bracket_(a, b)) add_into(jac, bracket_(t.gen, c), t.coeff);
          for (const auto& t : bracket_(b, c)) add_into(jac, bracket_(t.gen, a), t.coeff);
          for (const auto& t : bracket_(c, a)) add_into(jac, bracket_(t.gen, b), t.coeff);
          for (const auto& [g, x] : jac)
            if (!x.is_zero()) return ValidationError{ValidationError::Jacobi, a, b, c};
        }
    return std::nullopt;
  }

  // Catalog.

  static TateLieAlgebra abelian_laurent() {
    return make(
        FlaggedSpace::laurent("k((t))"), [](GenId, GenId) { return std::vector<LieTerm<F>>{}; },
        [](int, int) { return 1 << 28; }, /*subalgebra_from=*/0);
  }

  /// g (x) k[t,1/t] for g = sl2 on the basis e,h,f (k = 0,1,2 per index).
  static TateLieAlgebra sl2_loop() {
    FlaggedSpace::Spec spec;
    spec.label = "sl2[t,1/t]";
    spec.fill = 3;
    for (int n = -8; n <= 8; ++n)
      spec.slot_labels[n] = {"e(x)t^" + std::to_string(n), "h(x)t^" + std::to_string(n), "f(x)t^" + std::to_string(n)};
    FlaggedSpace carrier = FlaggedSpace::make(spec);
    auto br = [](GenId a, GenId b) {
      // basis order e=0, h=1, f=2; [e,f]=h, [h,e]=2e, [h,f]=-2f
      std::vector<LieTerm<F>> out;
      const int n = a.index + b.index;
      auto term = [&](int k, long c) { out.push_back({{n, k}, F(c)}); };
      const int x = a.k, y = b.k;
      if (x == 0 && y == 2) term(1, 1);
      else if (x == 2 && y == 0) term(1, -1);
      else if (x == 1 && y == 0) term(0, 2);
      else if (x == 0 && y == 1) term(0, -2);
      else if (x == 1 && y == 2) term(2, -2);
      else if (x == 2 && y == 1) term(2, 2);
      return out;
    };
    return make(std::move(carrier), br, [](int a, int b) { return a + b; }, /*subalgebra_from=*/0);
  }

  /// Vector fields t^a d/dt on k[[t]]: [t^a d, t^b d] = (b-a) t^{a+b-1} d.
  static TateLieAlgebra witt_positive() {
    FlaggedSpace::Spec spec;
    spec.label = "k[[t]]d";
    spec.fill = 1;
    spec.compact_below = 0;
    for (int n = 0; n <= 16; ++n) spec.slot_labels[n] = {"t^" + std::to_string(n) + "d"};
    FlaggedSpace carrier = FlaggedSpace::make(spec);
    auto br = [](GenId a, GenId b) {
      std::vector<LieTerm<F>> out;
      const long c = b.index - a.index;
      if (c != 0 && a.index + b.index - 1 >= 0) out.push_back({{a.index + b.index - 1, 0}, F(c)});
      return out;
    };
    return make(std::move(carrier), br, [](int a, int b) { return a + b - 1; }, /*subalgebra_from=*/1, 0, 5);
  }

 private:
  FlaggedSpace carrier_;
  Bracket bracket_;
  Sigma sigma_;
  int subalgebra_from_ = 0;
};

}  // namespace topoalg

#endif  // TOPOALG_LIE_HPP
