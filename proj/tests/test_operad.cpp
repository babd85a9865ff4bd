#include <catch2/catch_amalgamated.hpp>

#include "topoalg/operad.hpp"

using namespace topoalg;
using S = Rational;

namespace {

// k[x]/x^n as a table: e_i e_j = e_{i+j} (or 0 past the cap).
AssocTable<S> truncated_poly(int n) {
  auto t = AssocTable<S>::zero(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i + j < n) t.at(i, j, i + j) = S(1);
  return t;
}

// 2x2 matrix algebra on the basis E11, E12, E21, E22.
AssocTable<S> mat2() {
  auto idx = [](int a, int b) { return 2 * a + b; };
  auto t = AssocTable<S>::zero(4);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c)
        for (int d = 0; d < 2; ++d)
          if (b == c) t.at(idx(a, b), idx(c, d), idx(a, d)) = S(1);
  return t;
}

}  // namespace

TEST_CASE("order operad plumbing") {
  SECTION("composition of orders") {
    // substitute (1,0) into slot 0 of (0,1): arguments 0,1 become the block
    REQUIRE(compose_order({0, 1}, 0, {0, 1}) == Order{0, 1, 2});
    REQUIRE(compose_order({0, 1}, 0, {1, 0}) == Order{1, 0, 2});
    REQUIRE(compose_order({1, 0}, 0, {0, 1}) == Order{2, 0, 1});
    REQUIRE(compose_order({1, 0}, 0, {1, 0}) == Order{2, 1, 0});
  }
  SECTION("commutator element of the order algebra satisfies Jacobi") {
    // mu = (0,1) - (1,0) acting on a genuinely noncommutative algebra
    auto t = mat2();
    auto f = chiral_from_assoc(t);
    REQUIRE(is_skew(f));
    REQUIRE(jacobiator(f).is_zero());
  }
  SECTION("order realization is a homomorphism for composition") {
    // m_sigma o_i m_rho = m_{sigma o_i rho} on 2x2 matrices
    auto t = mat2();
    ChiralOp<S> a = ChiralOp<S>::zero(2, 4), b = ChiralOp<S>::zero(2, 4);
    MultiMap<S> ma = MultiMap<S>::zero(2, 4), mb = MultiMap<S>::zero(2, 4);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        for (int k = 0; k < 4; ++k) {
          ma.at(ma.tuple_of({i, j}), k) = t.at(i, j, k);
          mb.at(mb.tuple_of({i, j}), k) = t.at(j, i, k);  // transposed product = realization of (1,0)
        }
    a.add_comp({0, 1}, ma);
    b.add_comp({1, 0}, mb);
    // realization of (1,0) o_0 (0,1) = (2,0,1): x2 (x0 x1)
    auto c = b.compose(0, a);
    REQUIRE(c.comps.size() == 1);
    const Order expect{2, 0, 1};
    REQUIRE(c.comps.begin()->first == expect);
    // check one value: component on (E11, E12, E21): x2 (x0 x1) = E21 E11 E12 = E22
    const auto& m = c.comps.begin()->second;
    std::vector<int> tup{0, 1, 2};  // E11, E12, E21
    REQUIRE(m.at(m.tuple_of(tup), 3) == S(1));
  }
}

TEST_CASE("products to brackets") {
  SECTION("one-dimensional unital algebra: components are (xy, -xy)") {
    auto t = AssocTable<S>::zero(1);
    t.at(0, 0, 0) = S(1);
    auto mu = chiral_from_assoc(t);
    REQUIRE(mu.comps.at({0, 1}).at(0, 0) == S(1));
    REQUIRE(mu.comps.at({1, 0}).at(0, 0) == S(-1));
    REQUIRE(jacobi_check(mu).holds);
  }
  SECTION("2x2 matrices: Jacobi holds exhaustively on basis triples") {
    REQUIRE(jacobi_check(chiral_from_assoc(mat2())).holds);
    REQUIRE(!associativity_witness(mat2()).has_value());
  }
  SECTION("non-associative table e.e=f, f.e=e yields a witness triple") {
    auto t = AssocTable<S>::zero(2);
    t.at(0, 0, 1) = S(1);  // e.e = f
    t.at(1, 0, 0) = S(1);  // f.e = e
    auto aw = associativity_witness(t);
    REQUIRE(aw.has_value());
    // (ee)e = fe = e but e(ee) = ef = 0, so the defect at (e,e,e) is e
    REQUIRE(aw->i == 0);
    REQUIRE(aw->j == 0);
    REQUIRE(aw->k == 0);
    REQUIRE(aw->defect == std::vector<S>{S(1), S(0)});
    auto jv = jacobi_check(chiral_from_assoc(t));
    REQUIRE(!jv.holds);
    REQUIRE(jv.witness.has_value());
    bool defect_nonzero = false;
    for (const auto& d : jv.witness->defect) defect_nonzero = defect_nonzero || !d.is_zero();
    REQUIRE(defect_nonzero);
  }
  SECTION("zero operation satisfies Jacobi") {
    REQUIRE(jacobi_check(ChiralOp<S>::zero(2, 3)).holds);
  }
  SECTION("k[x]/x^3") { REQUIRE(jacobi_check(chiral_from_assoc(truncated_poly(3))).holds); }
}

TEST_CASE("the dictionary is a bijection onto skew Jacobi pairs") {
  // round trip product -> graded pair -> first component, plus the
  // equivalence Jacobi <-> associative, exhaustively for dim 1 tables over
  // {-1,0,1} and a structured sweep in dim 2.
  for (long a : {-1L, 0L, 1L}) {
    auto t = AssocTable<S>::zero(1);
    t.at(0, 0, 0) = S(a);
    auto mu = chiral_from_assoc(t);
    REQUIRE(is_skew(mu));
    const bool assoc = !associativity_witness(t).has_value();
    REQUIRE(assoc == jacobi_check(mu).holds);
    if (!mu.comps.empty()) REQUIRE(mu.comps.at({0, 1}).at(0, 0) == S(a));
  }
  long table[8];
  for (long mask = 0; mask < 6561; ++mask) {
    long m = mask;
    for (int p = 0; p < 8; ++p) {
      table[p] = m % 3 - 1;
      m /= 3;
    }
    auto t = AssocTable<S>::zero(2);
    int p = 0;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        for (int k = 0; k < 2; ++k) t.at(i, j, k) = S(table[p++]);
    const bool assoc = !associativity_witness(t).has_value();
    auto mu = chiral_from_assoc(t);
    REQUIRE(is_skew(mu));
    REQUIRE(assoc == jacobi_check(mu).holds);
  }
}
