// Copyright 2026 The Topoalg Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef TOPOALG_TATEHOM_HPP
#define TOPOALG_TATEHOM_HPP

#include <array>
#include <string>
#include <vector>

#include "topoalg/tensor.hpp"

namespace topoalg {

/// A Tate space with a chosen lattice decomposition: the c-lattice is the
/// flag piece P_s, the d-lattice is the span of slots below s.
struct TateSplit {
  FlaggedSpace space;
  int split_index = 0;

  bool in_c(int slot_index) const { return slot_index >= split_index; }
};

enum class HomVariant { All, C, D, F };

/// Topology a Hom block carries, per variant.  The f/d block between
/// c-lattices (and its mirror) carries the ind topology; a legacy switch
/// reproduces the older discrete convention so the two can be compared.
enum class BlockTopology { DiscreteTop, CompactTop, ProTop, IndTop };

/// Window of a Hom space between parts of two split Tate spaces: matrix
/// units E[target slot; source slot], target-major order.
struct HomWindow {
  std::vector<std::pair<Slot, Slot>> pairs;  // (target, source)
  FinSpace realized;
  Window source_window, target_window;

  int dim() const { return realized.dim(); }

  int pair_pos(const Slot& t, const Slot& s) const {
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if (pairs[i].first == t && pairs[i].second == s) return static_cast<int>(i);
    return -1;
  }
};

/// part: 'c', 'd' or 'a' (no restriction).
inline HomWindow hom_window(const TateSplit& f, char src_part, const TateSplit& g, char dst_part,
                            const WindowSpec& sspec, const WindowSpec& tspec) {
  auto in_part = [](const TateSplit& ts, char part, int index) {
    return part == 'a' || (part == 'c') == ts.in_c(index);
  };
  HomWindow hw;
  hw.source_window = f.space.window(sspec.lo, sspec.hi);
  hw.target_window = g.space.window(tspec.lo, tspec.hi);
  std::vector<std::string> labels;
  for (const Slot& t : hw.target_window.slots) {
    if (!in_part(g, dst_part, t.index)) continue;
    for (const Slot& s : hw.source_window.slots) {
      if (!in_part(f, src_part, s.index)) continue;
      hw.pairs.emplace_back(t, s);
      labels.push_back("E[" + t.label + ";" + s.label + "]");
    }
  }
  hw.realized = FinSpace(std::move(labels));
  return hw;
}

struct HomBlock {
  char src = 'c', dst = 'c';
  BlockTopology topology = BlockTopology::DiscreteTop;
  bool flagged_presentable = false;  // single-flag presentation exists (cd, dc)
};

struct HomBlockTable {
  TateSplit f, g;
  HomVariant variant = HomVariant::All;
  bool legacy = false;
  std::array<HomBlock, 4> blocks;  // order: cc, cd, dc, dd

  const HomBlock& block(char src, char dst) const {
    for (const auto& b : blocks)
      if (b.src == src && b.dst == dst) return b;
    throw std::invalid_argument("HomBlockTable: no such block");
  }

  HomWindow window(char src, char dst, const WindowSpec& sspec, const WindowSpec& tspec) const {
    return hom_window(f, src, g, dst, sspec, tspec);
  }
};

/// The four-block presentation of the chosen Hom variant.  Maps from the
/// c-lattice to the d-lattice form a discrete space, the mirror block is
/// compact, and the remaining blocks carry pro/ind topologies depending on
/// the variant; `legacy` switches the two ind blocks to the older discrete
/// reading so tests can demonstrate the difference.
inline HomBlockTable hom_space(const TateSplit& f, const TateSplit& g, HomVariant v, bool legacy = false) {
  HomBlockTable t;
  t.f = f;
  t.g = g;
  t.variant = v;
  t.legacy = legacy;
  const BlockTopology ind = legacy ? BlockTopology::DiscreteTop : BlockTopology::IndTop;
  HomBlock cc{'c', 'c', (v == HomVariant::All || v == HomVariant::C) ? BlockTopology::ProTop : ind, false};
  HomBlock cd{'c', 'd', BlockTopology::DiscreteTop, true};
  HomBlock dc{'d', 'c', BlockTopology::CompactTop, true};
  HomBlock dd{'d', 'd', (v == HomVariant::All || v == HomVariant::D) ? BlockTopology::ProTop : ind, false};
  t.blocks = {cc, cd, dc, dd};
  return t;
}

/// Depth-truncated flagged presentation of a cd or dc block, graded by
/// (target index - source index).  The cd block is discrete, the dc block
/// compact; dims within |i| <= depth are exact.
inline FlaggedSpace hom_block_flagged(const TateSplit& f, const TateSplit& g, char src, char dst, int depth) {
  detail::require((src == 'c' && dst == 'd') || (src == 'd' && dst == 'c'),
                  "hom_block_flagged: only the cd and dc blocks are single-flagged");
  FlaggedSpace::Spec spec;
  spec.label = std::string("Hom(") + f.space.label() + "_" + src + "," + g.space.label() + "_" + dst + ")";
  const int sf = f.split_index, sg = g.split_index;
  for (int i = -depth; i <= depth; ++i) {
    // count pairs (n, m) with m - n = i in the block ranges
    int lo_n, hi_n;
    if (src == 'c') {  // n >= sf, m = n + i < sg
      lo_n = sf;
      hi_n = sg - i;
    } else {  // n < sf, m = n + i >= sg
      lo_n = sg - i;
      hi_n = sf;
    }
    int d = 0;
    for (int n = lo_n; n < hi_n; ++n) d += f.space.graded_dim(n) * g.space.graded_dim(n + i);
    if (d > 0) spec.dims[i] = d;
  }
  if (src == 'c') spec.discrete_above = sg - sf;  // all slots sit strictly below
  else spec.compact_below = sg - sf + 1;
  // truncated presentation: exact within |i| <= depth, unbounded beyond
  spec.fill = 0;
  spec.derive_markers = false;
  return FlaggedSpace::make(spec);
}

/// Which tensor realization matches which Hom variant:
/// All ~ F* (!) G, C ~ F* (->) G, D ~ G (->) F*, F ~ F* (*) G.
struct TensorHomReport {
  int hom_dim = 0, tensor_dim = 0;
  bool bijective = false;
  bool pairing_ok = false;
  bool ok() const { return bijective && pairing_ok; }
};

template <FieldScalar F>
TensorHomReport identify_tensor_hom(const TateSplit& fs, const TateSplit& gs, HomVariant v, const WindowSpec& sspec,
                                    const WindowSpec& tspec) {
  TensorHomReport rep;
  const FlaggedSpace du = dual_tate(fs.space);
  const WindowSpec duspec{1 - sspec.hi, 1 - sspec.lo};
  const HomWindow hw = hom_window(fs, 'a', gs, 'a', sspec, tspec);
  rep.hom_dim = hw.dim();

  const std::vector<FlaggedSpace> factors{du, gs.space};
  std::vector<int> order = (v == HomVariant::D) ? std::vector<int>{1, 0} : std::vector<int>{0, 1};
  const ProductWindow pw = product_window(factors, order, {duspec, tspec});
  const Window wdu = du.window(duspec.lo, duspec.hi);

  // E[t;s] corresponds to (dual slot of s) (x) t.
  std::map<std::pair<int, int>, F> iso;
  for (std::size_t i = 0; i < hw.pairs.size(); ++i) {
    const Slot& t = hw.pairs[i].first;
    const Slot& s = hw.pairs[i].second;
    const int pd = wdu.slot_pos(-s.index, s.k);
    const int pt = pw.windows[order[0] == 0 ? 1 : 0].slot_pos(t.index, t.k);
    detail::require(pd >= 0 && pt >= 0, "identify_tensor_hom: misaligned specs");
    const int tuple = (v == HomVariant::D) ? pw.tuple_index({pt, pd}) : pw.tuple_index({pd, pt});
    iso[{static_cast<int>(i), tuple}] = F(1);
  }
  const Mat<F> iso_m = Mat<F>::from_entries(pw.dim(), hw.dim(), iso);

  if (v == HomVariant::F) {
    // the star window over the aligned pair of arrow specs: the kernel is
    // the diagonal copy of the matrix space
    auto sw = star_window<F>(du, gs.space, duspec, tspec, duspec, tspec);
    rep.tensor_dim = sw.dim();
    const LinMap<F> swap = match_map<F>(sw.a12, sw.a21);
    const Mat<F> into = Mat<F>::vstack(iso_m, swap.matrix * iso_m);
    rep.bijective = (rep.tensor_dim == rep.hom_dim) && rank(into) == rep.hom_dim &&
                    sw.kernel.includes(Subspace<F>::col_space(into));
  } else {
    rep.tensor_dim = pw.dim();
    rep.bijective = rep.tensor_dim == rep.hom_dim && rank(iso_m) == rep.hom_dim;
  }

  // Pairing identity: applying E[t;s] to a source vector agrees with
  // contracting (dual s) (x) t against it.
  const Window wsrc = hw.source_window;
  const Window wtgt = hw.target_window;
  const Mat<F> pairing = dual_pairing<F>(wdu, wsrc);
  bool ok = true;
  for (std::size_t i = 0; i < hw.pairs.size() && ok; ++i) {
    const Slot& t = hw.pairs[i].first;
    const Slot& s = hw.pairs[i].second;
    for (int j = 0; j < wsrc.dim() && ok; ++j) {
      // application
      std::vector<F> applied(wtgt.dim(), F(0));
      if (wsrc.slots[j] == s) applied[wtgt.slot_pos(t.index, t.k)] = F(1);
      // contraction of the tensor image
      std::vector<F>contracted(wtgt.dim(), F(0));
      const int pd = wdu.slot_pos(-s.index, s.k);
      const F coeff = pairing.at(pd, j);
      if (!coeff.is_zero()) contracted[wtgt.slot_pos(t.index, t.k)] = coeff;
      for (int r = 0; r < wtgt.dim() && ok; ++r) ok = applied[r] == contracted[r];
    }
  }
  rep.pairing_ok = ok;
  return rep;
}

struct HomSequenceReport {
  int dim_f = 0, dim_c = 0, dim_d = 0, dim_all = 0;
  bool left_injective = false, middle_exact = false, right_surjective = false;
  bool exact() const { return left_injective && middle_exact && right_surjective; }
};

/// 0 -> Hom_f -> Hom_c (+) Hom_d -> Hom -> 0 on aligned windows, via the
/// tensor identification.
template <FieldScalar F>
HomSequenceReport check_hom_sequence(const TateSplit& fs, const TateSplit& gs, const WindowSpec& sspec,
                                     const WindowSpec& tspec) {
  const FlaggedSpace du = dual_tate(fs.space);
  const WindowSpec duspec{1 - sspec.hi, 1 - sspec.lo};
  const Exact112Report e = check_exact_112<F>(du, gs.space, duspec, tspec);
  HomSequenceReport rep;
  rep.dim_f = e.dim_star;
  rep.dim_c = e.dim_a12;
  rep.dim_d = e.dim_a21;
  rep.dim_all = e.dim_shriek;
  rep.left_injective = e.left_injective;
  rep.middle_exact = e.middle_exact;
  rep.right_surjective = e.right_surjective;
  return rep;
}

/// Corrected-vs-legacy comparison on the f-variant (c -> c) block.  In the
/// legacy reading the block is discrete, so {0} is a base element; in the
/// ind topology every base element assigns each source column a finite
/// target depth, hence has nonzero trace on any deeper window.  The report
/// carries one concrete matrix unit witnessing the strict difference.
template <FieldScalar F>
struct LegacyRegressionReport {
  bool legacy_zero_is_open = false;
  bool corrected_zero_is_open = false;
  std::string witness;          // matrix unit in the corrected base element, not in 0
  int witness_window_depth = 0;
  bool strict_difference() const { return legacy_zero_is_open && !corrected_zero_is_open && !witness.empty(); }
};

template <FieldScalar F>
LegacyRegressionReport<F> check_legacy_regression(const TateSplit& fs, const TateSplit& gs, int depth) {
  LegacyRegressionReport<F> rep;
  const auto corrected = hom_space(fs, gs, HomVariant::F, false);
  const auto legacy = hom_space(fs, gs, HomVariant::F, true);
  rep.legacy_zero_is_open = legacy.block('c', 'c').topology == BlockTopology::DiscreteTop;
  rep.corrected_zero_is_open = corrected.block('c', 'c').topology == BlockTopology::DiscreteTop;

  // Deepest uniform ind base element within the probe: every source column
  // at target depth `depth`; its trace on the (depth+1)-deep window still
  // contains matrix units.
  const int sf = fs.split_index, sg = gs.split_index;
  const WindowSpec sspec{sf, sf + 1};
  const WindowSpec tspec{sg, sg + depth + 1};
  const HomWindow hw = hom_window(fs, 'c', gs, 'c', sspec, tspec);
  std::vector<std::vector<F>> gens;
  std::string witness;
  for (std::size_t i = 0; i < hw.pairs.size(); ++i)
    if (hw.pairs[i].first.index >= sg + depth) {
      std::vector<F> v(hw.dim(), F(0));
      v[i] = F(1);
      gens.push_back(std::move(v));
      if (witness.empty()) witness = hw.realized.labels[i];
    }
  const auto trace = Subspace<F>::span(hw.dim(), gens);
  if (trace.dim() > 0 && !Subspace<F>::zero(hw.dim()).includes(trace)) {
    rep.witness = witness;
    rep.witness_window_depth = depth + 1;
  }
  return rep;
}

/// Aligned total windows do not depend on the split index; re-chopping the
/// four blocks preserves the total dimension and the identity matrix is the
/// canonical isomorphism.
struct SplitIndependenceReport {
  int total_dim_1 = 0, total_dim_2 = 0;
  std::array<int, 4> block_dims_1{}, block_dims_2{};
  bool ok() const {
    int s1 = 0, s2 = 0;
    for (int d : block_dims_1) s1 += d;
    for (int d : block_dims_2) s2 += d;
    return total_dim_1 == total_dim_2 && s1 == total_dim_1 && s2 == total_dim_2;
  }
};

inline SplitIndependenceReport split_independence(const FlaggedSpace& f, const FlaggedSpace& g, int s1, int s2,
                                                  const WindowSpec& sspec, const WindowSpec& tspec) {
  SplitIndependenceReport rep;
  const TateSplit f1{f, s1}, f2{f, s2}, g1{g, s1}, g2{g, s2};
  rep.total_dim_1 = hom_window(f1, 'a', g1, 'a', sspec, tspec).dim();
  rep.total_dim_2 = hom_window(f2, 'a', g2, 'a', sspec, tspec).dim();
  const char parts[4][2] = {{'c', 'c'}, {'c', 'd'}, {'d', 'c'}, {'d', 'd'}};
  for (int b = 0; b < 4; ++b) {
    rep.block_dims_1[b] = hom_window(f1, parts[b][0], g1, parts[b][1], sspec, tspec).dim();
    rep.block_dims_2[b] = hom_window(f2, parts[b][0], g2, parts[b][1], sspec, tspec).dim();
  }
  return rep;
}

}  // namespace topoalg

#endif  // TOPOALG_TATEHOM_HPP
