#include <catch2/catch_amalgamated.hpp>

#include "topoalg/model.hpp"

using namespace topoalg;
using F = Rational;
using SS = Subspace<F>;

namespace {

std::vector<F> unit(int n, int i) {
  std::vector<F> v(n, F(0));
  v[i] = F(1);
  return v;
}

std::vector<std::string> keys(const std::vector<SS>& v) {
  std::vector<std::string> k;
  for (const auto& s : v) k.push_back(s.key());
  std::sort(k.begin(), k.end());
  return k;
}

}  // namespace

TEST_CASE("oracle topology on truncated models") {
  SECTION("both factors discrete: the base is {0}") {
    auto m = TruncatedModel<F>::make(FinSpace::anonymous(2, "a"), {SS::zero(2)});
    auto m2 = TruncatedModel<F>::make(FinSpace::anonymous(2, "b"), {SS::zero(2)});
    REQUIRE(m.is_discrete_as_presented());
    for (auto top : {TensorTopology::shriek(), TensorTopology::arrow({0, 1}), TensorTopology::star()}) {
      auto base = oracle::topology_base<F>({m, m2}, top);
      bool has_zero = false;
      for (const auto& s : base) has_zero = has_zero || s.dim() == 0;
      REQUIRE(has_zero);  // {0} generates: every subspace containing 0 is open
    }
  }

  SECTION("factor 1 with opens {V,W,0}, factor 2 discrete: shriek base is the sums pattern") {
    const SS w = SS::span(2, {unit(2, 0)});
    auto m1 = TruncatedModel<F>::make(FinSpace::anonymous(2, "a"), {w, SS::zero(2)});
    auto m2 = TruncatedModel<F>::make(FinSpace::anonymous(2, "b"), {SS::zero(2)});
    auto base = oracle::topology_base<F>({m1, m2}, TensorTopology::shriek());
    // frozen by direct enumeration: {whole, W (x) V2, 0}
    const auto pw = product_window({FlaggedSpace::finite_discrete(2, "a"), FlaggedSpace::finite_discrete(2, "b")},
                                   {{-1, 0}, {-1, 0}});
    const SS wv2 = WindowTopologyBase<F>::tensor_pair(pw, w, SS::full(2));
    REQUIRE(base.size() == 3);
    REQUIRE(keys(base) == keys({SS::full(4), wv2, SS::zero(4)}));
  }

  SECTION("star base equals the intersection closure of the two order bases") {
    // flag-trace opens of small k((t)) windows on both factors
    auto kt = FlaggedSpace::laurent();
    Window w1 = kt.window(-1, 1), w2 = kt.window(0, 2);
    auto m1 = TruncatedModel<F>::from_window(w1);
    auto m2 = TruncatedModel<F>::from_window(w2);
    auto star = oracle::topology_base<F>({m1, m2}, TensorTopology::star());
    auto b12 = oracle::topology_base<F>({m1, m2}, TensorTopology::arrow({0, 1}));
    auto b21 = oracle::topology_base<F>({m1, m2}, TensorTopology::arrow({1, 0}));
    auto closure = WindowTopologyBase<F>::star_base(b12, b21);
    REQUIRE(keys(star) == keys(closure));
    // and every element passes the raw defining condition
    for (const auto& q : star) REQUIRE(oracle::is_star_open<F>({m1, m2}, q));
  }

  SECTION("budget enforcement") {
    auto m = TruncatedModel<F>::make(FinSpace::anonymous(2, "a"), {SS::zero(2)});
    oracle::Budget tight;
    tight.max_dim_per_factor = 1;
    REQUIRE_THROWS_AS(oracle::topology_base<F>({m, m}, TensorTopology::shriek(), tight), std::invalid_argument);
  }
}

TEST_CASE("flag calculus agrees with the oracle on catalog windows") {
  auto kt = FlaggedSpace::laurent();
  auto ks = FlaggedSpace::power_series();
  auto kp = FlaggedSpace::polynomials();
  struct Case {
    FlaggedSpace u, v;
    WindowSpec su, sv;
  };
  const std::vector<Case> cases = {
      {kt, kt, {-1, 1}, {0, 2}},
      {ks, kt, {0, 2}, {-1, 1}},
      {kp, ks, {-2, 0}, {0, 2}},
  };
  for (const auto& c : cases) {
    Window wu = c.u.window(c.su.lo, c.su.hi);
    Window wv = c.v.window(c.sv.lo, c.sv.hi);
    auto mu = TruncatedModel<F>::from_window(wu);
    auto mv = TruncatedModel<F>::from_window(wv);
    auto pw = product_window({c.u, c.v}, {c.su, c.sv});
    const auto opens_u = WindowTopologyBase<F>::flag_traces(wu);
    const auto opens_v = WindowTopologyBase<F>::flag_traces(wv);

    INFO(c.u.label() << " (x) " << c.v.label());
    // shriek
    auto flag_sh = WindowTopologyBase<F>::shriek_base(pw, opens_u, opens_v);
    auto orc_sh = oracle::topology_base<F>({mu, mv}, TensorTopology::shriek());
    REQUIRE(keys(flag_sh) == keys(orc_sh));
    // both arrow orders
    auto flag_12 = WindowTopologyBase<F>::arrow_base(pw, opens_u, opens_v, 1);
    auto orc_12 = oracle::topology_base<F>({mu, mv}, TensorTopology::arrow({0, 1}));
    REQUIRE(keys(flag_12) == keys(orc_12));
    auto flag_21 = WindowTopologyBase<F>::arrow_base(pw, opens_u, opens_v, 0);
    auto orc_21 = oracle::topology_base<F>({mu, mv}, TensorTopology::arrow({1, 0}));
    REQUIRE(keys(flag_21) == keys(orc_21));
    // star
    auto flag_star = WindowTopologyBase<F>::star_base(flag_12, flag_21);
    auto orc_star = oracle::topology_base<F>({mu, mv}, TensorTopology::star());
    REQUIRE(keys(flag_star) == keys(orc_star));
  }
}
