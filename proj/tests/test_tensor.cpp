#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "topoalg/tensor.hpp"

using namespace topoalg;
using F = Rational;

TEST_CASE("tensor window realizations") {
  auto kt = FlaggedSpace::laurent();
  SECTION("shriek window of k((t)) (x) k((t)) on (-1,1)^2 has dim 4") {
    auto pw = tensor_window(TensorTopology::shriek(), {kt, kt}, {{-1, 1}, {-1, 1}});
    REQUIRE(pw.dim() == 4);
    REQUIRE(pw.realized.labels[0] == "t^-1(x)t^-1");
  }
  SECTION("arrow window with U-window (-1,2), V-window (0,1) has dim 3") {
    auto pw = tensor_window(TensorTopology::arrow({0, 1}), {kt, kt}, {{-1, 2}, {0, 1}});
    REQUIRE(pw.dim() == 3);
  }
  SECTION("star window dim equals dimA12 + dimA21 - dimShriek when the difference map is onto") {
    // Misaligned specs; expected value frozen from the rank formula with the
    // difference map checked surjective by independent row reduction.
    auto sw = star_window<F>(kt, kt, {-2, 1}, {0, 2}, {0, 2}, {-1, 2});
    REQUIRE(sw.a12.dim() == 6);
    REQUIRE(sw.a21.dim() == 6);
    REQUIRE(sw.shriek_meet.dim() == 2);

    const LinMap<F> r12 = match_map<F>(sw.a12, sw.shriek_meet);
    const LinMap<F> r21 = match_map<F>(sw.a21, sw.shriek_meet);
    oracles::QMat diff(sw.shriek_meet.dim(), std::vector<mpq_class>(12, 0));
    for (int r = 0; r < sw.shriek_meet.dim(); ++r) {
      for (int c = 0; c < 6; ++c) diff[r][c] = mpq_class(r12.matrix.at(r, c).str());
      for (int c = 0; c < 6; ++c) diff[r][6 + c] = -mpq_class(r21.matrix.at(r, c).str());
    }
    REQUIRE(oracles::naive_rank(diff) == sw.shriek_meet.dim());  // onto
    REQUIRE(sw.dim() == 6 + 6 - 2);
    REQUIRE(sw.dim() == oracles::naive_nullity(diff, 12));
  }
  SECTION("incompatible star specs are rejected") {
    REQUIRE_THROWS_AS(star_window<F>(kt, kt, {-2, -1}, {0, 1}, {0, 1}, {0, 1}), std::invalid_argument);
  }
}

TEST_CASE("canonical maps: star -> arrow mono, arrow -> shriek epi") {
  auto kt = FlaggedSpace::laurent();
  SECTION("finite discrete factors: both maps are isomorphisms") {
    auto u = FlaggedSpace::finite_discrete(2, "U");
    auto v = FlaggedSpace::finite_discrete(3, "V");
    auto cm = canonical_maps<F>(u, v, {-1, 0}, {-1, 0});
    REQUIRE(cm.star.dim() == 6);
    REQUIRE(cm.star_to_arrow.rank() == 6);
    REQUIRE(cm.arrow_to_shriek.rank() == 6);
    REQUIRE(cm.star_to_arrow_injective);
    REQUIRE(cm.arrow_to_shriek_surjective);
  }
  SECTION("one trivial factor: isomorphisms") {
    auto one = FlaggedSpace::finite_discrete(1, "k");
    auto cm = canonical_maps<F>(kt, one, {-2, 2}, {-1, 0});
    REQUIRE(cm.star.dim() == 4);
    REQUIRE(cm.star_to_arrow.rank() == 4);
    REQUIRE(cm.arrow_to_shriek.rank() == 4);
  }
  SECTION("k((t)) (x) k((t)) at depth 4: mono and epi by rank") {
    auto cm = canonical_maps<F>(kt, kt, {-2, 2}, {-2, 2});
    REQUIRE(cm.star_to_arrow_injective);
    REQUIRE(cm.arrow_to_shriek_surjective);
  }
}

TEST_CASE("the four-term window sequence is exact") {
  auto kt = FlaggedSpace::laurent();
  auto ks = FlaggedSpace::power_series();
  auto kp = FlaggedSpace::polynomials();
  auto fd = FlaggedSpace::finite_discrete(2, "W");
  SECTION("finite discrete pair") {
    auto rep = check_exact_112<F>(fd, fd, {-1, 0}, {-1, 0});
    REQUIRE(rep.dim_star == rep.dim_shriek);
    REQUIRE(rep.dim_star == rep.dim_a12);
    REQUIRE(rep.exact());
  }
  SECTION("catalog pairs at small depth") {
    for (const auto& u : {kt, ks, kp, fd})
      for (const auto& v : {kt, ks, kp, fd})
        for (int lo = -2; lo <= 0; ++lo) {
          auto rep = check_exact_112<F>(u, v, {lo, lo + 3}, {lo, lo + 2});
          INFO(u.label() << " vs " << v.label() << " at lo=" << lo);
          REQUIRE(rep.exact());
        }
  }
}

TEST_CASE("tensoring preserves exact sequences on windows") {
  auto kt = FlaggedSpace::laurent();
  SECTION("0 -> k[[t]] -> k((t)) -> k((t))/k[[t]] -> 0 tensored with k((t))") {
    auto ses = FlaggedSES::split_at(kt, 0, "k[[t]]", "k((t))/k[[t]]");
    REQUIRE(ses.sub().is_compact());
    REQUIRE(ses.quot().is_discrete());
    std::vector<std::pair<WindowSpec, WindowSpec>> queries;
    for (int lo = -2; lo <= 0; ++lo) queries.push_back({{lo, lo + 4}, {-2, 2}});
    auto rep = tensor_exactness<F>(ses, kt, TensorTopology::shriek(), queries);
    REQUIRE(rep.exact);
    for (const auto& w : rep.windows) REQUIRE(w.dim_total == w.dim_sub + w.dim_quot);
  }
  SECTION("tensoring with a 1-dim space changes nothing") {
    auto one = FlaggedSpace::finite_discrete(1, "k");
    auto ses = FlaggedSES::split_at(kt, 0, "sub", "quot");
    auto rep = tensor_exactness<F>(ses, one, TensorTopology::arrow({0, 1}), {{{-2, 2}, {-1, 0}}});
    REQUIRE(rep.exact);
    REQUIRE(rep.windows[0].dim_total == kt.window(-2, 2).dim());
  }
  SECTION("split sequence of finite discrete spaces") {
    auto v = FlaggedSpace::finite_discrete(5, "V");
    auto ses = FlaggedSES::head_slots(v, {{-1, 2}}, "A", "B");
    REQUIRE(ses.sub().graded_dim(-1) == 2);
    REQUIRE(ses.quot().graded_dim(-1) == 3);
    auto rep = tensor_exactness<F>(ses, v, TensorTopology::star(), {{{-1, 0}, {-1, 0}}});
    REQUIRE(rep.exact);
  }
  SECTION("non-admissible window inclusions are rejected") {
    auto v = FlaggedSpace::finite_discrete(2, "V");
    Window w = v.window(-1, 0);
    // a skew line, not a slot selection
    FinSpace line = FinSpace::anonymous(1, "L");
    LinMap<F> skew(line, w.realized, Mat<F>::from_rows({{F(1)}, {F(1)}}, 1));
    REQUIRE_THROWS_AS(FlaggedSES::from_window_inclusion(v, w, skew, "s", "q"), std::invalid_argument);
    // while an honest slot selection is accepted
    LinMap<F> sel(line, w.realized, Mat<F>::from_rows({{F(1)}, {F(0)}}, 1));
    auto ses = FlaggedSES::from_window_inclusion(v, w, sel, "s", "q");
    REQUIRE(ses.sub().graded_dim(-1) == 1);
  }
}

TEST_CASE("refinements commute with the canonical comparison maps") {
  auto kt = FlaggedSpace::laurent();
  // arrow -> shriek projections on nested specs commute with refinement
  for (int d = 1; d <= 2; ++d) {
    auto big12 = product_window({kt, kt}, {0, 1}, {{-d - 1, d + 1}, {-d, d}});
    auto small12 = product_window({kt, kt}, {0, 1}, {{-d, d}, {-d, d}});
    auto big_sh = product_window({kt, kt}, {{-d, d + 1}, {-d, d}});
    auto small_sh = product_window({kt, kt}, {{-d, d}, {-d, d}});
    auto path1 = compose(match_map<F>(big_sh, small_sh), match_map<F>(big12, big_sh));
    auto path2 = compose(match_map<F>(small12, small_sh), match_map<F>(big12, small12));
    REQUIRE(path1.matrix == path2.matrix);
  }
}
