#include <catch2/catch_amalgamated.hpp>

#include "topoalg/algebra.hpp"
#include "topoalg/envelope.hpp"

using namespace topoalg;
using S = Rational;
using WA = WindowAlgebra<S>;

namespace {
std::vector<std::string> open_keys(const std::vector<Subspace<S>>& v) {
  std::vector<std::string> k;
  for (const auto& s : v) k.push_back(s.key());
  std::sort(k.begin(), k.end());
  k.erase(std::unique(k.begin(), k.end()), k.end());
  return k;
}
}  // namespace

TEST_CASE("continuity certificates and the product dictionary") {
  const int depth = 3;
  auto ks = TopAlgebraPres<S>::power_series_algebra();
  auto kt = TopAlgebraPres<S>::laurent_algebra();

  auto cks = check_certificates(ks, depth);
  REQUIRE(cks.flag_left_ideals);
  REQUIRE(cks.flag_two_sided_ideals);
  REQUIRE(cks.multiplication_continuous);
  REQUIRE(cks.bracket_continuous);

  auto ckt = check_certificates(kt, depth);
  REQUIRE(ckt.multiplication_continuous);  // a topological algebra
  REQUIRE(!ckt.flag_left_ideals);          // but no open ideal base: not chiral
  REQUIRE(!ckt.flag_two_sided_ideals);

  AssocTable<S> m2 = AssocTable<S>::zero(2);
  m2.at(0, 0, 0) = S(1);
  m2.at(0, 1, 1) = S(1);
  m2.at(1, 0, 1) = S(1);  // k[e]/(e^2 - ... ) style commutative table
  auto fin = TopAlgebraPres<S>::finite_algebra(m2, "A2");
  auto cf = check_certificates(fin, depth);
  REQUIRE(cf.flag_left_ideals);
  REQUIRE(cf.flag_two_sided_ideals);
  REQUIRE(cf.bracket_continuous);

  // the dictionary: the arrow-continuity package is exactly an open left
  // ideal base plus a continuous bracket
  for (const auto* rep : {&cks, &ckt, &cf}) {
    const bool arrow_class = rep->flag_left_ideals && rep->bracket_continuous && rep->multiplication_continuous;
    const bool base_and_bracket = rep->flag_left_ideals && rep->bracket_continuous;
    REQUIRE(arrow_class == (base_and_bracket && rep->multiplication_continuous));
  }
}

TEST_CASE("completions by ideal refinement") {
  SECTION("a commutative chiral presentation is already complete") {
    auto a = WA::truncated_power_series(4);
    auto ch = completion_ch(a);
    REQUIRE(ch.identity);
    REQUIRE(ch.failing_generators.empty());
    auto sh = completion_shriek(a);
    REQUIRE(sh.identity);
  }
  SECTION("matrix window: star presentation refines to the arrow one") {
    auto star = WA::end_of_window(3, true);
    auto arrow = WA::end_of_window(3, false);
    std::vector<Subspace<S>> refined;
    auto rep = completion_ch(star, &refined);
    REQUIRE(rep.failing_generators.empty());
    REQUIRE(!rep.identity);
    REQUIRE(open_keys(refined) == open_keys(arrow.opens));
  }
  SECTION("simple matrix window: two-sided refinement keeps only 0 and A") {
    auto star = WA::end_of_window(3, true);
    std::vector<Subspace<S>> refined;
    completion_shriek(star, &refined);
    auto keys = open_keys(refined);
    REQUIRE(keys.size() == 2);
    REQUIRE(keys == open_keys({Subspace<S>::zero(9), Subspace<S>::full(9)}));
  }
  SECTION("adjunction laws on windows") {
    auto star = WA::end_of_window(2, true);
    std::vector<Subspace<S>> once, twice;
    completion_ch(star, &once);
    WA mid = star;
    mid.opens = once;
    auto rep = completion_ch(mid, &twice);
    REQUIRE(rep.identity);  // ch after ch is ch
    std::vector<Subspace<S>> sh_direct, sh_after_ch;
    completion_shriek(star, &sh_direct);
    completion_shriek(mid, &sh_after_ch);
    REQUIRE(open_keys(sh_direct) == open_keys(sh_after_ch));  // shriek after ch is shriek
  }
}

TEST_CASE("free algebras") {
  auto kt = FlaggedSpace::laurent();
  SECTION("tensor algebra window dims") {
    REQUIRE(free_shriek(kt, 2, {-1, 1}).total == 7);    // 1 + 2 + 4
    REQUIRE(free_shriek(kt, 0, {-1, 1}).total == 1);
    REQUIRE(free_shriek(kt, 2, {-1, 2}).total == 13);   // 1 + 3 + 9
  }
  SECTION("transition maps are surjections") {
    auto t = free_shriek_transition<S>(kt, 2, {-1, 2}, {-1, 1});
    REQUIRE(t.source.dim() == 13);
    REQUIRE(t.target.dim() == 7);
    REQUIRE(t.is_surjective());
  }
  SECTION("free star product continuity") {
    REQUIRE(free_star_continuity(FlaggedSpace::finite_discrete(3, "V"), 4).verdict == ContinuityVerdict::Continuous);
    REQUIRE(free_star_continuity(FlaggedSpace::polynomials(), 4).verdict == ContinuityVerdict::Continuous);
    REQUIRE(free_star_continuity(FlaggedSpace::power_series(), 4).verdict == ContinuityVerdict::Continuous);
    auto rep = free_star_continuity(kt, 6);
    REQUIRE(rep.verdict == ContinuityVerdict::DiscontinuousWithWitness);
    REQUIRE(rep.witness_tail_slot == -7);
  }
}

TEST_CASE("graded windows of filtered algebras") {
  SECTION("commutative filtration has zero bracket") {
    auto a = WA::truncated_power_series(4);  // level = t-degree
    auto gr = grhat(a, 3);
    REQUIRE(gr.ring_filtration);
    REQUIRE(gr.commutative);
    REQUIRE(gr.bracket_zero);
    REQUIRE(gr.graded_dims == std::vector<int>{1, 1, 1, 1});
    REQUIRE(gr.leibniz_ok);
    REQUIRE(gr.jacobi_ok);
  }
  SECTION("filtration with A_0 = A puts everything in degree 0") {
    auto a = WA::truncated_power_series(3);
    std::fill(a.level.begin(), a.level.end(), 0);
    auto gr = grhat(a, 0);
    REQUIRE(gr.graded_dims == std::vector<int>{3});
    REQUIRE(gr.bracket_zero);
  }
  SECTION("a non-ring filtration is reported") {
    auto a = WA::truncated_power_series(4);
    a.level = {0, 0, 1, 2};  // t has level 0, so t.t = t^2 lands above 0+0
    auto gr = grhat(a, 3);
    REQUIRE(!gr.ring_filtration);
  }
}

TEST_CASE("admissibility search") {
  SECTION("k[[t]] with the degree filtration: zero-ideal witness") {
    auto a = TopAlgebraPres<S>::power_series_algebra();
    auto v = admissibility_check(a, [](int index) { return index; }, 3);
    REQUIRE(!v.admissible_to_depth);
    REQUIRE(v.witness.find("zero ideal") != std::string::npos);
  }
  SECTION("finite-dimensional discrete algebras are admissible") {
    AssocTable<S> t = AssocTable<S>::zero(2);
    t.at(0, 0, 0) = S(1);
    auto a = TopAlgebraPres<S>::finite_algebra(t, "A");
    auto v = admissibility_check(a, [](int) { return 0; }, 3);
    REQUIRE(v.admissible_to_depth);
  }
  SECTION("standard filtration on the sl2 loop envelope, depth 3") {
    auto v = admissibility_check_envelope(TateLieAlgebra<S>::sl2_loop(), 3);
    REQUIRE(v.admissible_to_depth);
  }
}
