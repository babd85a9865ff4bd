#include <catch2/catch_amalgamated.hpp>

#include "topoalg/tatehom.hpp"

using namespace topoalg;
using F = Rational;

namespace {
const TateSplit KT{FlaggedSpace::laurent(), 0};
}

TEST_CASE("hom block table") {
  SECTION("blocks k[[t]] -> k[[t]] at bidegree depth 3 have dim 9") {
    auto hw = hom_window(KT, 'c', KT, 'c', {0, 3}, {0, 3});
    REQUIRE(hw.dim() == 9);
    REQUIRE(hw.realized.labels[0] == "E[t^0;t^0]");
  }
  SECTION("block types per variant") {
    for (auto v : {HomVariant::All, HomVariant::C, HomVariant::D, HomVariant::F}) {
      auto t = hom_space(KT, KT, v);
      REQUIRE(t.block('c', 'd').topology == BlockTopology::DiscreteTop);
      REQUIRE(t.block('d', 'c').topology == BlockTopology::CompactTop);
    }
    REQUIRE(hom_space(KT, KT, HomVariant::All).block('c', 'c').topology == BlockTopology::ProTop);
    REQUIRE(hom_space(KT, KT, HomVariant::F).block('c', 'c').topology == BlockTopology::IndTop);
    REQUIRE(hom_space(KT, KT, HomVariant::D).block('c', 'c').topology == BlockTopology::IndTop);
    REQUIRE(hom_space(KT, KT, HomVariant::F).block('d', 'd').topology == BlockTopology::IndTop);
  }
  SECTION("the c->d block window is variant independent") {
    // all four variants present the same window of maps F_c -> G_d
    auto all = hom_space(KT, KT, HomVariant::All).window('c', 'd', {-2, 2}, {-2, 2});
    auto fv = hom_space(KT, KT, HomVariant::F).window('c', 'd', {-2, 2}, {-2, 2});
    REQUIRE(all.realized.labels == fv.realized.labels);
    REQUIRE(all.dim() == 4);  // sources t^0,t^1 to targets t^-2,t^-1
  }
  SECTION("zero target gives zero blocks") {
    TateSplit z{FlaggedSpace::finite_discrete(0, "0"), 0};
    for (const char* b : {"cc", "cd", "dc", "dd"})
      REQUIRE(hom_window(KT, b[0], z, b[1], {-3, 3}, {-3, 3}).dim() == 0);
  }
  SECTION("flagged presentations of the cd and dc blocks") {
    auto cd = hom_block_flagged(KT, KT, 'c', 'd', 4);
    REQUIRE(cd.is_discrete());
    REQUIRE(!cd.is_compact());
    REQUIRE(cd.graded_dim(-1) == 1);  // only t^0 -> t^-1
    REQUIRE(cd.graded_dim(-3) == 3);  // t^0,t^1,t^2 shifted down by 3
    auto dc = hom_block_flagged(KT, KT, 'd', 'c', 4);
    REQUIRE(dc.is_compact());
    REQUIRE(!dc.is_discrete());
    REQUIRE(dc.graded_dim(1) == 1);
    REQUIRE(dc.graded_dim(3) == 3);
    REQUIRE_THROWS_AS(hom_block_flagged(KT, KT, 'c', 'c', 3), std::invalid_argument);
  }
}

TEST_CASE("tensor product realizations of Hom") {
  SECTION("finite discrete: all four variants are the full matrix space") {
    TateSplit u{FlaggedSpace::finite_discrete(2, "U"), 0};
    TateSplit v{FlaggedSpace::finite_discrete(3, "V"), 0};
    for (auto var : {HomVariant::All, HomVariant::C, HomVariant::D, HomVariant::F}) {
      auto rep = identify_tensor_hom<F>(u, v, var, {-1, 0}, {-1, 0});
      REQUIRE(rep.hom_dim == 6);
      REQUIRE(rep.tensor_dim == 6);
      REQUIRE(rep.ok());
    }
  }
  SECTION("k((t)) at depth 3: window isomorphism with pairing identity") {
    for (auto var : {HomVariant::All, HomVariant::C, HomVariant::D, HomVariant::F}) {
      auto rep = identify_tensor_hom<F>(KT, KT, var, {-1, 2}, {-1, 2});
      REQUIRE(rep.hom_dim == 9);
      REQUIRE(rep.ok());
    }
  }
}

TEST_CASE("hom sequence on windows") {
  SECTION("k((t)) at depths up to 3") {
    for (int d = 1; d <= 3; ++d) {
      auto rep = check_hom_sequence<F>(KT, KT, {-d, d}, {-d, d});
      REQUIRE(rep.dim_f + rep.dim_all == rep.dim_c + rep.dim_d);
      REQUIRE(rep.exact());
    }
  }
  SECTION("finite discrete source degenerates to the diagonal") {
    TateSplit u{FlaggedSpace::finite_discrete(2, "U"), 0};
    auto rep = check_hom_sequence<F>(u, KT, {-1, 0}, {-1, 1});
    REQUIRE(rep.dim_f == rep.dim_all);
    REQUIRE(rep.dim_c == rep.dim_all);
    REQUIRE(rep.dim_d == rep.dim_all);
    REQUIRE(rep.exact());
  }
  SECTION("compact source, discrete target: all variants coincide") {
    TateSplit c{FlaggedSpace::power_series(), 0};
    TateSplit d{FlaggedSpace::polynomials(), 0};
    auto rep = check_hom_sequence<F>(c, d, {0, 3}, {-3, 0});
    REQUIRE(rep.dim_f == rep.dim_all);
    REQUIRE(rep.exact());
    // block table inspection: everything lands in the c->d block
    REQUIRE(hom_window(c, 'c', d, 'd', {0, 3}, {-3, 0}).dim() == rep.dim_all);
    REQUIRE(hom_window(c, 'd', d, 'd', {0, 3}, {-3, 0}).dim() == 0);
    REQUIRE(hom_window(c, 'c', d, 'c', {0, 3}, {-3, 0}).dim() == 0);
  }
}

TEST_CASE("legacy topologies differ on the f-variant c->c block") {
  auto rep = check_legacy_regression<F>(KT, KT, 3);
  REQUIRE(rep.legacy_zero_is_open);
  REQUIRE(!rep.corrected_zero_is_open);
  REQUIRE(rep.strict_difference());
  REQUIRE(rep.witness == "E[t^3;t^0]");
}

TEST_CASE("split independence of aligned windows") {
  for (int s2 : {-1, 1}) {
    auto rep = split_independence(FlaggedSpace::laurent(), FlaggedSpace::laurent(), 0, s2, {-2, 2}, {-2, 2});
    REQUIRE(rep.ok());
    REQUIRE(rep.total_dim_1 == 16);
  }
}
