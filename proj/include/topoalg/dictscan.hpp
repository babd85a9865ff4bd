// Copyright 2026 The Topoalg Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef TOPOALG_DICTSCAN_HPP
#define TOPOALG_DICTSCAN_HPP

#include <cstdint>
#include <vector>

#include "topoalg/operad.hpp"

namespace topoalg {

/// Symbolic expansion of the order-graded Jacobiator of a binary skew pair,
/// derived once through the generic order operad: each ternary order
/// collects terms f_outer(f_inner(x_{a0}, x_{a1}), x_{a2}) where comp 0 is
/// the (0,1) component (the product) and comp 1 the (1,0) component (minus
/// the transposed product).
struct JacobiPlanTerm {
  int outer_comp = 0, inner_comp = 0;
  int a0 = 0, a1 = 0, a2 = 0;
};

struct JacobiPlan {
  std::vector<std::pair<Order, std::vector<JacobiPlanTerm>>> orders;
};

inline JacobiPlan build_jacobi_plan() {
  const std::vector<Order> binary{{0, 1}, {1, 0}};
  const std::vector<std::vector<int>> rotations{{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};
  std::map<Order, std::vector<JacobiPlanTerm>> acc;
  for (const auto& pi : rotations)
    for (int oc = 0; oc < 2; ++oc)
      for (int ic = 0; ic < 2; ++ic) {
        const Order composed = compose_order(binary[oc], 0, binary[ic]);
        const Order target = act_order(composed, pi);
        acc[target].push_back({oc, ic, pi[0], pi[1], pi[2]});
      }
  JacobiPlan plan;
  for (auto& [o, terms] : acc) plan.orders.emplace_back(o, std::move(terms));
  return plan;
}

/// Dense table scan over small dimensions with plain integer arithmetic.
/// `c[(i*dim + j)*dim + k]` are the structure constants.
struct DictScanReport {
  long tables = 0;
  long associative = 0;
  long jacobi_witnesses = 0;  // tables where the Jacobiator has a defect
  long mismatches = 0;        // tables violating the equivalence
  bool equivalence_held() const { return mismatches == 0 && associative + jacobi_witnesses == tables; }
};

namespace dictscan_internal {

struct SmallTable {
  int dim;
  const long* c;
  long at(int i, int j, int k) const { return c[(i * dim + j) * dim + k]; }

  // z = e_i e_j as a dense vector
  void mul_basis(int i, int j, long* z) const {
    for (int k = 0; k < dim; ++k) z[k] = at(i, j, k);
  }
  // z = x . e_j
  void mul_vec_basis(const long* x, int j, long* z) const {
    for (int k = 0; k < dim; ++k) z[k] = 0;
    for (int i = 0; i < dim; ++i) {
      if (!x[i]) continue;
      for (int k = 0; k < dim; ++k) z[k] += x[i] * at(i, j, k);
    }
  }
  void mul_basis_vec(int i, const long* y, long* z) const {
    for (int k = 0; k < dim; ++k) z[k] = 0;
    for (int j = 0; j < dim; ++j) {
      if (!y[j]) continue;
      for (int k = 0; k < dim; ++k) z[k] += y[j] * at(i, j, k);
    }
  }

  bool associative() const {
    long t1[8], t2[8];
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j)
        for (int k = 0; k < dim; ++k) {
          mul_basis(i, j, t1);
          long lhs[8];
          mul_vec_basis(t1, k, lhs);
          mul_basis(j, k, t2);
          long rhs[8];
          mul_basis_vec(i, t2, rhs);
          for (int s = 0; s < dim; ++s)
            if (lhs[s] != rhs[s]) return false;
        }
    return true;
  }

  // one component value: comp 0 is xy, comp 1 is -yx
  void comp(int which, int x, int y, long* z) const {
    if (which == 0) {
      mul_basis(x, y, z);
    } else {
      mul_basis(y, x, z);
      for (int k = 0; k < dim; ++k) z[k] = -z[k];
    }
  }
  void comp_vec(int which, const long* x, int y, long* z) const {
    if (which == 0) {
      mul_vec_basis(x, y, z);
    } else {
      mul_basis_vec(y, x, z);
      for (int k = 0; k < dim; ++k) z[k] = -z[k];
    }
  }

  /// Does the Jacobiator have a nonzero entry?  Evaluated lazily, order by
  /// order and tuple by tuple, through the symbolic plan.
  bool jacobi_defect(const JacobiPlan& plan) const {
    long inner[8], val[8], acc[8];
    for (const auto& [order, terms] : plan.orders) {
      (void)order;
      int tuple[3];
      for (tuple[0] = 0; tuple[0] < dim; ++tuple[0])
        for (tuple[1] = 0; tuple[1] < dim; ++tuple[1])
          for (tuple[2] = 0; tuple[2] < dim; ++tuple[2]) {
            for (int k = 0; k < dim; ++k) acc[k] = 0;
            for (const auto& t : terms) {
              comp(t.inner_comp, tuple[t.a0], tuple[t.a1], inner);
              comp_vec(t.outer_comp, inner, tuple[t.a2], val);
              for (int k = 0; k < dim; ++k) acc[k] += val[k];
            }
            for (int k = 0; k < dim; ++k)
              if (acc[k]) return true;
          }
    }
    return false;
  }
};

inline void scan_one(const SmallTable& t, const JacobiPlan& plan, DictScanReport& rep) {
  ++rep.tables;
  const bool assoc = t.associative();
  const bool defect = t.jacobi_defect(plan);
  if (assoc) ++rep.associative;
  if (defect) ++rep.jacobi_witnesses;
  if (assoc == defect) ++rep.mismatches;
}

}  // namespace dictscan_internal

/// Exhaustive sweep over all structure constants in {-1, 0, 1} for the
/// given dimension (1 or 2 at desk scale: 3 and 6561 tables).
inline DictScanReport dictionary_scan_exhaustive(int dim, const JacobiPlan& plan) {
  detail::require(dim >= 1 && dim <= 2, "dictionary_scan_exhaustive: feasible only up to dim 2");
  DictScanReport rep;
  const int entries = dim * dim * dim;
  std::vector<long> c(entries, -1);
  while (true) {
    dictscan_internal::scan_one({dim, c.data()}, plan, rep);
    int p = 0;
    while (p < entries && ++c[p] == 2) c[p++] = -1;
    if (p == entries) break;
  }
  return rep;
}

/// Exhaustive sweep over dimension-3 monomial tables: every basis product
/// is 0 or a signed basis vector (7^9 tables).
inline DictScanReport dictionary_scan_dim3_monomial(const JacobiPlan& plan) {
  DictScanReport rep;
  long c[27];
  // symbol s in 0..6: 0 or (sign, target)
  int sym[9] = {0, 0, 0, 0, 0, 0, 0, 0, 0};
  auto apply = [&]() {
    for (int e = 0; e < 27; ++e) c[e] = 0;
    for (int p = 0; p < 9; ++p) {
      const int s = sym[p];
      if (s == 0) continue;
      const int target = (s - 1) % 3;
      const long sign = s <= 3 ? 1 : -1;
      c[p * 3 + target] = sign;
    }
  };
  while (true) {
    apply();
    dictscan_internal::scan_one({3, c}, plan, rep);
    int p = 0;
    while (p < 9 && ++sym[p] == 7) sym[p++] = 0;
    if (p == 9) break;
  }
  return rep;
}

/// Seeded deterministic sample of dense dimension-3 tables over {-1, 0, 1}.
inline DictScanReport dictionary_scan_dim3_sampled(long count, std::uint64_t seed, const JacobiPlan& plan) {
  DictScanReport rep;
  std::uint64_t s = seed ? seed : 0x9e3779b97f4a7c15ULL;
  auto next = [&s]() {
    s ^= s << 13;
    s ^= s >> 7;
    s ^= s << 17;
    return s;
  };
  long c[27];
  for (long trial = 0; trial < count; ++trial) {
    std::uint64_t bits = next();
    for (int e = 0; e < 27; ++e) {
      if (e % 20 == 0) bits = next();
      c[e] = static_cast<long>(bits % 3) - 1;
      bits /= 3;
    }
    dictscan_internal::scan_one({3, c}, plan, rep);
  }
  return rep;
}

}  // namespace topoalg

#endif  // TOPOALG_DICTSCAN_HPP
