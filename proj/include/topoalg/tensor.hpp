// Copyright 2026 The Topoalg Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef TOPOALG_TENSOR_HPP
#define TOPOALG_TENSOR_HPP

#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "topoalg/flagged.hpp"

namespace topoalg {

enum class TensorKind { Star, Shriek, Arrow };

/// Topology selector for a completed tensor product.  Arrow carries the
/// evaluation order (a permutation of factor ids); the strongest topology
/// and the projective-limit one are order-free.
struct TensorTopology {
  TensorKind kind = TensorKind::Shriek;
  std::vector<int> order;  // Arrow only

  static TensorTopology star() { return {TensorKind::Star, {}}; }
  static TensorTopology shriek() { return {TensorKind::Shriek, {}}; }
  static TensorTopology arrow(std::vector<int> order) { return {TensorKind::Arrow, std::move(order)}; }
};

struct WindowSpec {
  int lo = 0;
  int hi = 0;
};

/// Realized window of a completed tensor product: the tensor product of the
/// factor windows, with basis tuples ordered row-major in evaluation order.
/// For the arrow product the outermost (last-in-order) factor is the one
/// quotiented first; at window level every topology realizes this same
/// subquotient and the differences live in the topology bases and maps.
struct ProductWindow {
  std::vector<int> factor_order;  // position -> factor id
  std::vector<Window> windows;    // by position
  FinSpace realized;
  std::vector<int> strides;

  int dim() const { return realized.dim(); }

  int tuple_index(const std::vector<int>& slot_positions) const {
    int idx = 0;
    for (std::size_t p = 0; p < strides.size(); ++p) idx += strides[p] * slot_positions[p];
    return idx;
  }
};

inline ProductWindow product_window(const std::vector<FlaggedSpace>& factors, const std::vector<int>& order,
                                    const std::vector<WindowSpec>& specs_by_factor) {
  detail::require(!factors.empty(), "product_window: no factors");
  detail::require(order.size() == factors.size() && specs_by_factor.size() == factors.size(),
                  "product_window: order/spec size mismatch");
  ProductWindow pw;
  pw.factor_order = order;
  for (int fid : order) {
    detail::require(fid >= 0 && fid < static_cast<int>(factors.size()), "product_window: bad order");
    pw.windows.push_back(factors[fid].window(specs_by_factor[fid].lo, specs_by_factor[fid].hi));
  }
  const int n = static_cast<int>(pw.windows.size());
  pw.strides.assign(n, 1);
  for (int p = n - 2; p >= 0; --p) pw.strides[p] = pw.strides[p + 1] * pw.windows[p + 1].dim();
  const int total = pw.strides.empty() ? 0 : pw.strides[0] * pw.windows[0].dim();

  std::vector<std::string> labels(total);
  std::vector<int> cursor(n, 0);
  for (int idx = 0; idx < total; ++idx) {
    std::string name;
    for (int p = 0; p < n; ++p) {
      if (p) name += "(x)";
      name += pw.windows[p].realized.labels[cursor[p]];
    }
    labels[idx] = name;
    for (int p = n - 1; p >= 0; --p) {
      if (++cursor[p] < pw.windows[p].dim()) break;
      cursor[p] = 0;
    }
  }
  pw.realized = FinSpace(std::move(labels));
  return pw;
}

inline ProductWindow product_window(const std::vector<FlaggedSpace>& factors,
                                    const std::vector<WindowSpec>& specs_by_factor) {
  std::vector<int> order(factors.size());
  std::iota(order.begin(), order.end(), 0);
  return product_window(factors, order, specs_by_factor);
}

/// The canonical map between two realizations of the same tensor product:
/// slots are matched by (factor id, flag index, k); tuples that leave the
/// target window die.  Covers refinements, the arrow -> shriek projections
/// and the order-swap identifications in one stroke.
template <FieldScalar F>
LinMap<F> match_map(const ProductWindow& from, const ProductWindow& to) {
  detail::require(from.factor_order.size() == to.factor_order.size(), "match_map: arity mismatch");
  std::vector<int> to_pos_of_factor(from.factor_order.size());
  {
    std::vector<int> seen(from.factor_order.size(), 0);
    for (std::size_t p = 0; p < to.factor_order.size(); ++p) {
      to_pos_of_factor[to.factor_order[p]] = static_cast<int>(p);
      seen[to.factor_order[p]] += 1;
    }
    for (int s : seen) detail::require(s == 1, "match_map: factor sets differ");
  }
  const int n = static_cast<int>(from.factor_order.size());
  std::map<std::pair<int, int>, F> entries;
  std::vector<int> cursor(n, 0);
  const int total = from.dim();
  for (int idx = 0; idx < total; ++idx) {
    std::vector<int> to_positions(n, -1);
    bool alive = true;
    for (int p = 0; p < n && alive; ++p) {
      const Slot& s = from.windows[p].slots[cursor[p]];
      const int tp = to_pos_of_factor[from.factor_order[p]];
      const int pos = to.windows[tp].slot_pos(s.index, s.k);
      if (pos < 0) alive = false;
      else to_positions[tp] = pos;
    }
    if (alive) entries[{idx, to.tuple_index(to_positions)}] = F(1);
    for (int p = n - 1; p >= 0; --p) {
      if (++cursor[p] < from.windows[p].dim()) break;
      cursor[p] = 0;
    }
  }
  return LinMap<F>(from.realized, to.realized, Mat<F>::from_entries(to.dim(), from.dim(), entries));
}

namespace internal {
inline WindowSpec meet(const WindowSpec& a, const WindowSpec& b) {
  WindowSpec m{std::max(a.lo, b.lo), std::min(a.hi, b.hi)};
  detail::require(m.lo <= m.hi, "star spec: arrow windows are incompatible over the shriek window");
  return m;
}
}  // namespace internal

/// Window of the binary star product over a compatible pair of arrow specs:
/// the kernel of the difference map out of the two arrow windows into the
/// common shriek window.
template <FieldScalar F>
struct StarWindow {
  ProductWindow a12, a21, shriek_meet;
  FinSpace realized;
  LinMap<F> into_sum;  // realized -> a12 (+) a21 coordinates
  Subspace<F> kernel;  // same data as a subspace

  int dim() const { return realized.dim(); }
};

template <FieldScalar F>
StarWindow<F> star_window(const FlaggedSpace& u, const FlaggedSpace& v, const WindowSpec& u12, const WindowSpec& v12,
                          const WindowSpec& u21, const WindowSpec& v21) {
  StarWindow<F> sw;
  const std::vector<FlaggedSpace> factors{u, v};
  sw.a12 = product_window(factors, {0, 1}, {u12, v12});
  sw.a21 = product_window(factors, {1, 0}, {u21, v21});
  sw.shriek_meet = product_window(factors, {internal::meet(u12, u21), internal::meet(v12, v21)});
  const LinMap<F> r12 = match_map<F>(sw.a12, sw.shriek_meet);
  const LinMap<F> r21 = match_map<F>(sw.a21, sw.shriek_meet);
  const Mat<F> diff = Mat<F>::hstack(r12.matrix, r21.matrix.scale(F(-1)));
  const Mat<F> basis = kernel_mat(diff);  // rows = kernel vectors
  sw.realized = FinSpace::anonymous(basis.rows(), "star");
  FinSpace sum = FinSpace::anonymous(sw.a12.dim() + sw.a21.dim(), "a12+a21");
  sw.into_sum = LinMap<F>(sw.realized, sum, basis.transpose());
  sw.kernel = Subspace<F>::row_space(basis);
  return sw;
}

/// Window evaluation of a completed tensor product.  Shriek and arrow
/// realize the product of factor windows; the binary star realizes the
/// (1.1.2)-style kernel and is returned through star_window instead.
inline ProductWindow tensor_window(const TensorTopology& top, const std::vector<FlaggedSpace>& factors,
                                   const std::vector<WindowSpec>& specs) {
  detail::require(top.kind != TensorKind::Star, "tensor_window: use star_window for the star product");
  if (top.kind == TensorKind::Arrow) {
    detail::require(top.order.size() == factors.size(), "tensor_window: arrow order arity mismatch");
    return product_window(factors, top.order, specs);
  }
  return product_window(factors, specs);
}

/// The pair of canonical comparison maps on aligned windows:
/// star -> arrow is mono, arrow -> shriek is epi.
template <FieldScalar F>
struct CanonicalMaps {
  StarWindow<F> star;
  ProductWindow arrow12, shriek;
  LinMap<F> star_to_arrow;
  LinMap<F> arrow_to_shriek;
  bool star_to_arrow_injective = false;
  bool arrow_to_shriek_surjective = false;
};

template <FieldScalar F>
CanonicalMaps<F> canonical_maps(const FlaggedSpace& u, const FlaggedSpace& v, const WindowSpec& su,
                                const WindowSpec& sv) {
  CanonicalMaps<F> cm;
  cm.star = star_window<F>(u, v, su, sv, su, sv);
  cm.arrow12 = cm.star.a12;
  cm.shriek = cm.star.shriek_meet;
  // project the kernel onto its a12 block
  std::map<std::pair<int, int>, F> proj;
  for (int c = 0; c < cm.star.dim(); ++c)
    for (int r = 0; r < cm.arrow12.dim(); ++r) {
      const F x = cm.star.into_sum.matrix.at(r, c);
      if (!x.is_zero()) proj[{c, r}] = x;
    }
  cm.star_to_arrow = LinMap<F>(cm.star.realized, cm.arrow12.realized,
                               Mat<F>::from_entries(cm.arrow12.dim(), cm.star.dim(), proj));
  cm.arrow_to_shriek = match_map<F>(cm.arrow12, cm.shriek);
  cm.star_to_arrow_injective = cm.star_to_arrow.is_injective();
  cm.arrow_to_shriek_surjective = cm.arrow_to_shriek.is_surjective();
  return cm;
}

/// Rank bookkeeping for 0 -> U (*) V -> U (->) V + V (->) U -> U (!) V -> 0
/// on one aligned window spec.
struct Exact112Report {
  int dim_star = 0, dim_a12 = 0, dim_a21 = 0, dim_shriek = 0;
  bool left_injective = false;
  bool middle_exact = false;
  bool right_surjective = false;
  bool exact() const { return left_injective && middle_exact && right_surjective; }
};

template <FieldScalar F>
Exact112Report check_exact_112(const FlaggedSpace& u, const FlaggedSpace& v, const WindowSpec& su,
                               const WindowSpec& sv) {
  Exact112Report rep;
  StarWindow<F> sw = star_window<F>(u, v, su, sv, su, sv);
  rep.dim_star = sw.dim();
  rep.dim_a12 = sw.a12.dim();
  rep.dim_a21 = sw.a21.dim();
  rep.dim_shriek = sw.shriek_meet.dim();

  // Left arrow: the diagonal x -> (x, swap x) out of the common window.
  const LinMap<F> swap = match_map<F>(sw.a12, sw.a21);
  const Mat<F> diag = Mat<F>::vstack(Mat<F>::identity(sw.a12.dim()), swap.matrix);
  rep.left_injective = rank(diag) == sw.a12.dim();

  // Exactness in the middle: image of the diagonal equals the kernel of the
  // difference map (dimension count plus containment).
  const Subspace<F> diag_image = Subspace<F>::col_space(diag);
  rep.middle_exact = (diag_image.dim() == sw.kernel.dim()) && sw.kernel.includes(diag_image);

  const LinMap<F> r12 = match_map<F>(sw.a12, sw.shriek_meet);
  const LinMap<F> r21 = match_map<F>(sw.a21, sw.shriek_meet);
  const Mat<F> diff = Mat<F>::hstack(r12.matrix, r21.matrix.scale(F(-1)));
  rep.right_surjective = rank(diff) == sw.shriek_meet.dim();
  return rep;
}

/// Short exact sequence of flagged spaces given by an index-preserving slot
/// selection: sub = selected slots of total (a closed embedding), quotient =
/// the complement (an open surjection).
class FlaggedSES {
 public:
  static FlaggedSES split_at(const FlaggedSpace& total, int split_index, const std::string& sub_label,
                             const std::string& quot_label) {
    FlaggedSES s;
    s.total_ = total;
    s.kind_ = Kind::IndexAtLeast;
    s.threshold_ = split_index;
    s.build(sub_label, quot_label);
    return s;
  }

  /// sub = slots (index, k) with k < head_dims[index]; used for split
  /// sequences of finite discrete spaces.
  static FlaggedSES head_slots(const FlaggedSpace& total, const std::map<int, int>& head_dims,
                               const std::string& sub_label, const std::string& quot_label) {
    FlaggedSES s;
    s.total_ = total;
    s.kind_ = Kind::HeadSlots;
    s.heads_ = head_dims;
    for (const auto& [n, d] : head_dims)
      detail::require(d >= 0 && d <= total.graded_dim(n), "FlaggedSES: head dim out of range");
    s.build(sub_label, quot_label);
    return s;
  }

  /// Validates that a window-level inclusion is an admissible monomorphism
  /// in this calculus (an index-preserving slot selection) and derives the
  /// sequence from it.  Anything else is rejected.
  template <FieldScalar F>
  static FlaggedSES from_window_inclusion(const FlaggedSpace& total, const Window& probe, const LinMap<F>& inclusion,
                                          const std::string& sub_label, const std::string& quot_label) {
    detail::require(inclusion.target == probe.realized, "FlaggedSES: inclusion target is not the probe window");
    detail::require(inclusion.is_injective(), "FlaggedSES: not an admissible mono (not injective)");
    std::map<int, int> heads;
    std::set<int> used;
    for (int c = 0; c < inclusion.matrix.cols(); ++c) {
      int hit = -1;
      for (int r = 0; r < inclusion.matrix.rows(); ++r) {
        const F x = inclusion.matrix.at(r, c);
        if (x.is_zero()) continue;
        detail::require(hit < 0 && x == F(1), "FlaggedSES: not an admissible mono (not a slot selection)");
        hit = r;
      }
      detail::require(hit >= 0 && !used.count(hit), "FlaggedSES: not an admissible mono (degenerate column)");
      used.insert(hit);
      const Slot& s = probe.slots[hit];
      detail::require(s.k == heads[s.index], "FlaggedSES: not an admissible mono (non-contiguous slots)");
      heads[s.index] += 1;
    }
    return head_slots(total, heads, sub_label, quot_label);
  }

  const FlaggedSpace& sub() const { return sub_; }
  const FlaggedSpace& total() const { return total_; }
  const FlaggedSpace& quot() const { return quot_; }

  bool in_sub(int index, int k) const {
    if (kind_ == Kind::IndexAtLeast) return index >= threshold_;
    auto it = heads_.find(index);
    return it != heads_.end() && k < it->second;
  }

  int sub_dim(int index) const {
    if (kind_ == Kind::IndexAtLeast) return index >= threshold_ ? total_.graded_dim(index) : 0;
    auto it = heads_.find(index);
    return it == heads_.end() ? 0 : it->second;
  }

  /// Window-level inclusion sub -> total.
  template <FieldScalar F>
  LinMap<F> inclusion(int lo, int hi) const {
    const Window wt = total_.window(lo, hi);
    const Window ws = sub_.window(lo, hi);
    std::map<std::pair<int, int>, F> e;
    for (std::size_t j = 0; j < ws.slots.size(); ++j) {
      const int r = wt.slot_pos(ws.slots[j].index, sub_slot_in_total(ws.slots[j].index, ws.slots[j].k));
      detail::require(r >= 0, "FlaggedSES: slot mismatch");
      e[{static_cast<int>(j), r}] = F(1);
    }
    return LinMap<F>(ws.realized, wt.realized, Mat<F>::from_entries(wt.dim(), ws.dim(), e));
  }

  /// Window-level projection total -> quot.
  template <FieldScalar F>
  LinMap<F> projection(int lo, int hi) const {
    const Window wt = total_.window(lo, hi);
    const Window wq = quot_.window(lo, hi);
    std::map<std::pair<int, int>, F> e;
    for (std::size_t j = 0; j < wt.slots.size(); ++j) {
      const Slot& s = wt.slots[j];
      if (in_sub(s.index, s.k)) continue;
      const int r = wq.slot_pos(s.index, s.k - sub_dim(s.index));
      detail::require(r >= 0, "FlaggedSES: slot mismatch");
      e[{static_cast<int>(j), r}] = F(1);
    }
    return LinMap<F>(wt.realized, wq.realized, Mat<F>::from_entries(wq.dim(), wt.dim(), e));
  }

 private:
  enum class Kind { IndexAtLeast, HeadSlots };

  int sub_slot_in_total(int index, int k) const {
    // sub slots are the leading k-range (HeadSlots) or everything (split).
    (void)index;
    return k;
  }

  void build(const std::string& sub_label, const std::string& quot_label) {
    FlaggedSpace::Spec ss, qs;
    ss.label = sub_label;
    qs.label = quot_label;
    const auto& tspec = total_.spec();
    if (kind_ == Kind::IndexAtLeast) {
      ss.fill = tspec.fill;
      ss.dims = tspec.dims;
      ss.compact_below = tspec.compact_below ? std::max(*tspec.compact_below, threshold_) : threshold_;
      ss.discrete_above = tspec.discrete_above;
      qs.fill = tspec.fill;
      qs.dims = tspec.dims;
      qs.compact_below = tspec.compact_below;
      qs.discrete_above = tspec.discrete_above ? std::min(*tspec.discrete_above, threshold_) : threshold_;
      // drop explicit dims outside the derived support
      for (auto it = ss.dims.begin(); it != ss.dims.end();)
        it = (it->first < *ss.compact_below) ? ss.dims.erase(it) : std::next(it);
      for (auto it = qs.dims.begin(); it != qs.dims.end();)
        it = (it->first >= *qs.discrete_above) ? qs.dims.erase(it) : std::next(it);
    } else {
      // explicit finite selection: sub supported exactly on the listed indices
      ss.fill = 0;
      qs.fill = tspec.fill;
      qs.dims = tspec.dims;
      qs.compact_below = tspec.compact_below;
      qs.discrete_above = tspec.discrete_above;
      for (const auto& [n, d] : heads_) {
        ss.dims[n] = d;
        qs.dims[n] = total_.graded_dim(n) - d;
      }
      ss.compact_below = heads_.empty() ? 0 : heads_.begin()->first;
      ss.discrete_above = heads_.empty() ? 0 : heads_.rbegin()->first + 1;
    }
    sub_ = FlaggedSpace::make(ss);
    quot_ = FlaggedSpace::make(qs);
  }

  FlaggedSpace total_, sub_, quot_;
  Kind kind_ = Kind::IndexAtLeast;
  int threshold_ = 0;
  std::map<int, int> heads_;
};

struct SESWindowReport {
  int dim_sub = 0, dim_total = 0, dim_quot = 0;
  bool left_injective = false, middle_exact = false, right_surjective = false;
  bool exact() const { return left_injective && middle_exact && right_surjective; }
};

struct TensorExactnessReport {
  std::vector<SESWindowReport> windows;
  bool exact = true;
};

/// Tensor a short exact sequence with a fixed space and verify exactness on
/// every queried window.  The realization is topology-independent, so the
/// verdict covers all three products on these windows.
template <FieldScalar F>
TensorExactnessReport tensor_exactness(const FlaggedSES& seq, const FlaggedSpace& w, const TensorTopology& top,
                                       const std::vector<std::pair<WindowSpec, WindowSpec>>& queries) {
  (void)top;  // realization and maps are shared by the three products
  TensorExactnessReport out;
  for (const auto& [sq, swin] : queries) {
    const LinMap<F> inc = seq.inclusion<F>(sq.lo, sq.hi);
    const LinMap<F> prj = seq.projection<F>(sq.lo, sq.hi);
    const Window ww = w.window(swin.lo, swin.hi);

    auto tensor_with_id = [&](const Mat<F>& m) {
      // m (x) id on tuple coordinates, sequence factor slow, w fast.
      std::map<std::pair<int, int>, F> e;
      for (const auto& t : m.triplets())
        for (int s = 0; s < ww.dim(); ++s) e[{t.col * ww.dim() + s, t.row * ww.dim() + s}] = t.value;
      return Mat<F>::from_entries(m.rows() * ww.dim(), m.cols() * ww.dim(), e);
    };

    const Mat<F> inc_t = tensor_with_id(inc.matrix);
    const Mat<F> prj_t = tensor_with_id(prj.matrix);
    SESWindowReport rep;
    rep.dim_sub = inc_t.cols();
    rep.dim_total = inc_t.rows();
    rep.dim_quot = prj_t.rows();
    rep.left_injective = rank(inc_t) == inc_t.cols();
    rep.right_surjective = rank(prj_t) == prj_t.rows();
    const Subspace<F> im = Subspace<F>::col_space(inc_t);
    const Subspace<F> ker = Subspace<F>::row_space(kernel_mat(prj_t));
    rep.middle_exact = im.dim() == ker.dim() && ker.includes(im);
    out.windows.push_back(rep);
    out.exact = out.exact && rep.exact();
  }
  return out;
}

/// Flag-predicted topology base on a binary tensor window, as explicit
/// subspaces of the product coordinates.  Used as the structured side of the
/// oracle comparison.
template <FieldScalar F>
class WindowTopologyBase {
 public:
  static std::vector<Subspace<F>> flag_traces(const Window& w) {
    std::vector<Subspace<F>> out;
    for (int s = w.lo; s <= w.hi; ++s) {
      std::vector<std::vector<F>> gens;
      for (std::size_t i = 0; i < w.slots.size(); ++i)
        if (w.slots[i].index >= s) {
          std::vector<F> v(w.dim(), F(0));
          v[i] = F(1);
          gens.push_back(std::move(v));
        }
      out.push_back(Subspace<F>::span(w.dim(), gens));
    }
    dedupe(out);
    return out;
  }

  /// P (x) Q inside the product coordinates of a binary window.
  static Subspace<F> tensor_pair(const ProductWindow& pw, const Subspace<F>& p, const Subspace<F>& q) {
    detail::require(pw.windows.size() == 2, "tensor_pair: binary only");
    std::vector<std::vector<F>> gens;
    const auto pr = p.basis().dense_rows();
    const auto qr = q.basis().dense_rows();
    for (const auto& a : pr)
      for (const auto& b : qr) {
        std::vector<F> v(pw.dim(), F(0));
        for (std::size_t i = 0; i < a.size(); ++i)
          for (std::size_t j = 0; j < b.size(); ++j)
            v[pw.tuple_index({static_cast<int>(i), static_cast<int>(j)})] = a[i] * b[j];
        gens.push_back(std::move(v));
      }
    return Subspace<F>::span(pw.dim(), gens);
  }

  static std::vector<Subspace<F>> shriek_base(const ProductWindow& pw, const std::vector<Subspace<F>>& opens1,
                                              const std::vector<Subspace<F>>& opens2) {
    const Subspace<F> full1 = Subspace<F>::full(pw.windows[0].dim());
    const Subspace<F> full2 = Subspace<F>::full(pw.windows[1].dim());
    std::vector<Subspace<F>> out;
    for (const auto& p : opens1)
      for (const auto& q : opens2) out.push_back(tensor_pair(pw, p, full2).sum(tensor_pair(pw, full1, q)));
    dedupe(out);
    return out;
  }

  /// Base of the order topology on a binary window, in the coordinates of
  /// pw.  The outermost (last-in-order) position gets a per-slot choice of
  /// opens from the other factor, plus one uniform open of its own tensored
  /// with the full inner factor.
  static std::vector<Subspace<F>> arrow_base(const ProductWindow& pw, const std::vector<Subspace<F>>& opens0,
                                             const std::vector<Subspace<F>>& opens1, int outer_position) {
    detail::require(pw.windows.size() == 2, "arrow_base: binary only");
    detail::require(outer_position == 0 || outer_position == 1, "arrow_base: bad position");
    const int inner = 1 - outer_position;
    const auto& inner_opens = inner == 0 ? opens0 : opens1;
    const auto& outer_opens = inner == 0 ? opens1 : opens0;
    const Subspace<F> full_inner = Subspace<F>::full(pw.windows[inner].dim());
    const int d_out = pw.windows[outer_position].dim();

    auto pair_by_position = [&](const Subspace<F>& at_inner, const Subspace<F>& at_outer) {
      return inner == 0 ? tensor_pair(pw, at_inner, at_outer) : tensor_pair(pw, at_outer, at_inner);
    };

    std::vector<Subspace<F>> states;
    states.push_back(Subspace<F>::zero(pw.dim()));
    for (int m = 0; m < d_out; ++m) {
      std::vector<F> em(d_out, F(0));
      em[m] = F(1);
      const Subspace<F> line = Subspace<F>::span(d_out, {em});
      std::vector<Subspace<F>> next;
      for (const auto& st : states)
        for (const auto& p : inner_opens) next.push_back(st.sum(pair_by_position(p, line)));
      dedupe(next);
      states = std::move(next);
    }
    std::vector<Subspace<F>> out;
    for (const auto& st : states)
      for (const auto& q : outer_opens) out.push_back(st.sum(pair_by_position(full_inner, q)));
    dedupe(out);
    return out;
  }

  static std::vector<Subspace<F>> star_base(const std::vector<Subspace<F>>& base12,
                                            const std::vector<Subspace<F>>& base21) {
    std::vector<Subspace<F>> out;
    for (const auto& a : base12)
      for (const auto& b : base21) out.push_back(a.intersect(b));
    dedupe(out);
    return out;
  }

  static void dedupe(std::vector<Subspace<F>>& v) {
    std::sort(v.begin(), v.end(), [](const Subspace<F>& a, const Subspace<F>& b) { return a.key() < b.key(); });
    v.erase(std::unique(v.begin(), v.end()), v.end());
  }
};

}  // namespace topoalg

#endif  // TOPOALG_TENSOR_HPP
