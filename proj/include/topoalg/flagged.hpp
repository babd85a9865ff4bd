// Copyright 2026 The Topoalg Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef TOPOALG_FLAGGED_HPP
#define TOPOALG_FLAGGED_HPP

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <vector>

#include "topoalg/linalg.hpp"

namespace topoalg {

/// One basis slot of a flagged presentation: the k-th basis vector of the
/// graded piece P_index / P_{index+1}.
struct Slot {
  int index = 0;
  int k = 0;
  std::string label;

  friend bool operator<(const Slot& a, const Slot& b) {
    if (a.index != b.index) return a.index < b.index;
    if (a.k != b.k) return a.k < b.k;
    return a.label < b.label;
  }
  friend bool operator==(const Slot& a, const Slot& b) { return a.index == b.index && a.k == b.k; }
};

/// Finite-dimensional subquotient P_lo / P_hi of a flagged space, realized on
/// the ordered slot basis.  This is the unit of all computation.
struct Window {
  std::string space_label;
  int lo = 0;
  int hi = 0;
  std::vector<Slot> slots;  // ordered by (index, k)
  FinSpace realized;

  int dim() const { return realized.dim(); }

  int slot_pos(int index, int k) const {
    for (std::size_t i = 0; i < slots.size(); ++i)
      if (slots[i].index == index && slots[i].k == k) return static_cast<int>(i);
    return -1;
  }
};

/// Complete separated linearly topologized space presented by a decreasing
/// flag of open subspaces P_n with finite graded pieces.  P_n is the closure
/// of the span of slots with index >= n; a marker `compact_below = c` pins
/// P_n = V for n <= c, `discrete_above = d` pins P_n = 0 for n >= d, and an
/// absent marker leaves that side unbounded.
class FlaggedSpace {
 public:
  struct Spec {
    std::string label;
    std::map<int, int> dims;           // explicit graded dims
    int fill = 0;                      // graded dim elsewhere inside the support
    std::optional<int> compact_below;  // P_n = V for n <= this
    std::optional<int> discrete_above; // P_n = 0 for n >= this
    std::map<int, std::vector<std::string>> slot_labels;
    std::string symbol;                // cosmetic: single-slot levels print as symbol^n
    bool derive_markers = true;        // finitely supported specs get markers unless truncated
  };

  FlaggedSpace() : memo_(std::make_shared<Memo>()) {}

  static FlaggedSpace make(Spec spec) {
    FlaggedSpace v;
    for (const auto& [n, d] : spec.dims) {
      detail::require(d >= 0, "FlaggedSpace: negative graded dim");
      (void)n;
    }
    detail::require(spec.fill >= 0, "FlaggedSpace: negative fill dim");
    if (spec.compact_below && spec.discrete_above)
      detail::require(*spec.compact_below <= *spec.discrete_above,
                      "FlaggedSpace: inconsistent boundedness markers");
    for (const auto& [n, d] : spec.dims) {
      const bool outside = (spec.compact_below && n < *spec.compact_below) ||
                           (spec.discrete_above && n >= *spec.discrete_above);
      detail::require(!outside || d == 0, "FlaggedSpace: explicit dim outside declared support");
    }
    if (spec.fill == 0 && spec.derive_markers) {
      // finitely supported: derive the boundedness markers
      int lo = 0, hi = 0;
      bool any = false;
      for (const auto& [n, d] : spec.dims)
        if (d > 0) {
          lo = any ? std::min(lo, n) : n;
          hi = any ? std::max(hi, n + 1) : n + 1;
          any = true;
        }
      if (!spec.compact_below) spec.compact_below = any ? lo : 0;
      if (!spec.discrete_above) spec.discrete_above = any ? hi : 0;
    }
    v.s_ = std::move(spec);
    return v;
  }

  // Catalog presentations.
  static FlaggedSpace laurent(const std::string& label = "k((t))") {
    Spec s;
    s.label = label;
    s.fill = 1;
    s.symbol = "t";
    return make(std::move(s));
  }
  static FlaggedSpace power_series(const std::string& label = "k[[t]]") {
    Spec s;
    s.label = label;
    s.fill = 1;
    s.compact_below = 0;
    s.symbol = "t";
    return make(std::move(s));
  }
  /// k[t] presented as a discrete space: t^d sits at slot -1-d.
  static FlaggedSpace polynomials(const std::string& label = "k[t]") {
    Spec s;
    s.label = label;
    s.fill = 1;
    s.discrete_above = 0;
    s.symbol = "t@";  // slot n prints as t^(-1-n)
    return make(std::move(s));
  }
  /// Finite-dimensional discrete space, all slots at index -1.
  static FlaggedSpace finite_discrete(int n, const std::string& label = "k^n") {
    Spec s;
    s.label = label;
    s.dims[-1] = n;
    s.compact_below = -1;
    s.discrete_above = 0;
    return make(std::move(s));
  }

  const std::string& label() const { return s_.label; }

  int graded_dim(int n) const {
    if (s_.compact_below && n < *s_.compact_below) return 0;
    if (s_.discrete_above && n >= *s_.discrete_above) return 0;
    auto it = s_.dims.find(n);
    return it == s_.dims.end() ? s_.fill : it->second;
  }

  bool is_compact() const { return s_.compact_below.has_value(); }
  bool is_discrete() const { return s_.discrete_above.has_value(); }
  std::optional<int> compact_below() const { return s_.compact_below; }
  std::optional<int> discrete_above() const { return s_.discrete_above; }

  std::vector<std::string> slot_labels(int n) const {
    const int d = graded_dim(n);
    auto it = s_.slot_labels.find(n);
    if (it != s_.slot_labels.end()) {
      detail::require(static_cast<int>(it->second.size()) == d, "FlaggedSpace: slot label count mismatch");
      return it->second;
    }
    std::vector<std::string> out;
    for (int k = 0; k < d; ++k) {
      if (d == 1 && s_.symbol == "t") out.push_back("t^" + std::to_string(n));
      else if (d == 1 && s_.symbol == "t@") out.push_back("t^" + std::to_string(-1 - n));
      else out.push_back(s_.label + "[" + std::to_string(n) + "]." + std::to_string(k));
    }
    return out;
  }

  /// Realize the subquotient P_lo / P_hi.  Realizations are memoized; the
  /// table takes shared locks for reads and an exclusive lock to insert.
  Window window(int lo, int hi) const {
    detail::require(lo <= hi, "window: lo > hi");
    {
      std::shared_lock rd(memo_->mu);
      auto it = memo_->table.find({lo, hi});
      if (it != memo_->table.end()) return it->second;
    }
    Window w;
    w.space_label = s_.label;
    w.lo = lo;
    w.hi = hi;
    std::vector<std::string> names;
    for (int n = lo; n < hi; ++n) {
      const auto labels = slot_labels(n);
      for (int k = 0; k < static_cast<int>(labels.size()); ++k) {
        w.slots.push_back({n, k, labels[k]});
        names.push_back(labels[k]);
      }
    }
    w.realized = FinSpace(std::move(names));
    std::unique_lock wr(memo_->mu);
    memo_->table.emplace(std::make_pair(lo, hi), w);
    return w;
  }

  /// Dual in the flag calculus: slot n pairs with dual slot -n, so
  /// graded_dim*(n) = graded_dim(-n) and window(V*, 1-hi, 1-lo) is the
  /// linear dual of window(V, lo, hi).
  FlaggedSpace dual() const {
    Spec s;
    s.label = s_.label + "*";
    s.fill = s_.fill;
    for (const auto& [n, d] : s_.dims) s.dims[-n] = d;
    if (s_.discrete_above) s.compact_below = 1 - *s_.discrete_above;
    if (s_.compact_below) s.discrete_above = 1 - *s_.compact_below;
    for (const auto& [n, labels] : s_.slot_labels) {
      std::vector<std::string> starred;
      for (const auto& l : labels) starred.push_back(l + "*");
      s.slot_labels[-n] = std::move(starred);
    }
    return make(std::move(s));
  }

  const Spec& spec() const { return s_; }

 private:
  struct Memo {
    std::shared_mutex mu;
    std::map<std::pair<int, int>, Window> table;
  };

  Spec s_;
  std::shared_ptr<Memo> memo_;
};

inline FlaggedSpace dual_tate(const FlaggedSpace& v) { return v.dual(); }

/// Projection from a window onto a nested window (from.lo <= to.lo <=
/// to.hi <= from.hi): keep the shared slots, kill the rest.  These compose
/// functorially.
template <FieldScalar F>
LinMap<F> refine(const Window& from, const Window& to) {
  detail::require(from.space_label == to.space_label, "refine: different spaces");
  detail::require(from.lo <= to.lo && to.hi <= from.hi, "refine: windows not nested");
  std::map<std::pair<int, int>, F> entries;
  for (std::size_t j = 0; j < from.slots.size(); ++j) {
    const Slot& s = from.slots[j];
    if (s.index < to.lo || s.index >= to.hi) continue;
    const int i = to.slot_pos(s.index, s.k);
    detail::require(i >= 0, "refine: slot mismatch");
    entries[{static_cast<int>(j), i}] = F(1);
  }
  return LinMap<F>(from.realized, to.realized, Mat<F>::from_entries(to.dim(), from.dim(), entries));
}

/// Canonical pairing matrix between window(V*, 1-hi, 1-lo) and
/// window(V, lo, hi): dual slot -n against slot n, matching k.
template <FieldScalar F>
Mat<F> dual_pairing(const Window& wdual, const Window& w) {
  detail::require(wdual.lo == 1 - w.hi && wdual.hi == 1 - w.lo, "dual_pairing: windows not dual");
  std::map<std::pair<int, int>, F> entries;
  for (std::size_t i = 0; i < wdual.slots.size(); ++i)
    for (std::size_t j = 0; j < w.slots.size(); ++j)
      if (wdual.slots[i].index == -w.slots[j].index && wdual.slots[i].k == w.slots[j].k)
        entries[{static_cast<int>(j), static_cast<int>(i)}] = F(1);
  return Mat<F>::from_entries(wdual.dim(), w.dim(), entries);
}

}  // namespace topoalg

#endif  // TOPOALG_FLAGGED_HPP
