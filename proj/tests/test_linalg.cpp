#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "topoalg/linalg.hpp"

using topoalg::FinSpace;
using topoalg::LinMap;
using topoalg::Mat;
using topoalg::PrimeField;
using topoalg::Rational;
using topoalg::Subspace;

namespace {

template <topoalg::FieldScalar F>
Mat<F> mat(const std::vector<std::vector<long>>& rows, int cols) {
  std::vector<std::vector<F>> conv;
  for (const auto& r : rows) conv.emplace_back(r.begin(), r.end());
  return Mat<F>::from_rows(conv, cols);
}

}  // namespace

TEST_CASE("kernel basics") {
  FinSpace v3 = FinSpace::anonymous(3, "v");
  FinSpace v4 = FinSpace::anonymous(4, "w");

  SECTION("zero map on dim-3 space has kernel dim 3") {
    auto f = LinMap<Rational>::zero(v3, v3);
    REQUIRE(topoalg::kernel(f).space.dim() == 3);
  }
  SECTION("identity on dim-4 space has kernel dim 0") {
    auto f = LinMap<Rational>::identity(v4);
    REQUIRE(topoalg::kernel(f).space.dim() == 0);
  }
  SECTION("2x3 matrix [[1,0,1],[0,1,1]] has kernel spanned by (1,1,-1)") {
    // Row reduction by hand: x3 free, x1 = -x3, x2 = -x3; scale by -1.
    FinSpace v2 = FinSpace::anonymous(2, "t");
    LinMap<Rational> f(v3, v2, mat<Rational>({{1, 0, 1}, {0, 1, 1}}, 3));
    auto ker = topoalg::kernel(f);
    REQUIRE(ker.space.dim() == 1);
    std::vector<Rational> gen{ker.inclusion.matrix.at(0, 0), ker.inclusion.matrix.at(1, 0),
                              ker.inclusion.matrix.at(2, 0)};
    auto sp = Subspace<Rational>::span(3, {gen});
    REQUIRE(sp.contains({Rational(1), Rational(1), Rational(-1)}));
    // Kernel really maps to zero.
    REQUIRE(compose(f, ker.inclusion).matrix == Mat<Rational>(2, 1));
  }
}

TEST_CASE("image basics") {
  FinSpace v2 = FinSpace::anonymous(2, "v");
  SECTION("identity on dim-2 has image dim 2") {
    REQUIRE(topoalg::image(LinMap<Rational>::identity(v2)).space.dim() == 2);
  }
  SECTION("zero map has image dim 0") {
    REQUIRE(topoalg::image(LinMap<Rational>::zero(v2, v2)).space.dim() == 0);
  }
  SECTION("[[1,2],[2,4]] has image dim 1") {
    LinMap<Rational> f(v2, v2, mat<Rational>({{1, 2}, {2, 4}}, 2));
    REQUIRE(topoalg::image(f).space.dim() == 1);
  }
}

TEST_CASE("quotient basics") {
  FinSpace v3 = FinSpace::anonymous(3, "v");
  SECTION("dim 3 / dim 1 = dim 2") {
    FinSpace w = FinSpace::anonymous(1, "w");
    LinMap<Rational> inc(w, v3, mat<Rational>({{1}, {1}, {0}}, 1));
    auto q = topoalg::quotient(v3, inc);
    REQUIRE(q.space.dim() == 2);
    REQUIRE(q.projection.is_surjective());
    REQUIRE(compose(q.projection, inc).matrix == Mat<Rational>(2, 1));
  }
  SECTION("W = V gives quotient dim 0") {
    auto q = topoalg::quotient(v3, LinMap<Rational>::identity(v3));
    REQUIRE(q.space.dim() == 0);
  }
  SECTION("W = 0 gives an isomorphism") {
    FinSpace w0 = FinSpace::anonymous(0, "w");
    auto q = topoalg::quotient(v3, LinMap<Rational>::zero(w0, v3));
    REQUIRE(q.space.dim() == 3);
    REQUIRE(q.projection.rank() == 3);
  }
  SECTION("non-injective inclusion is rejected") {
    FinSpace w = FinSpace::anonymous(2, "w");
    LinMap<Rational> bad(w, v3, mat<Rational>({{1, 2}, {1, 2}, {0, 0}}, 2));
    REQUIRE_THROWS_AS(topoalg::quotient(v3, bad), std::invalid_argument);
  }
}

TEST_CASE("rank-nullity on random sparse matrices up to dim 50") {
  oracles::Rng rng(20260809);
  for (int trial = 0; trial < 25; ++trial) {
    const int rows = static_cast<int>(rng.pick(1, 50));
    const int cols = static_cast<int>(rng.pick(1, 50));
    std::vector<std::vector<long>> entries(rows, std::vector<long>(cols, 0));
    oracles::QMat qm(rows, std::vector<mpq_class>(cols, 0));
    const int fill = static_cast<int>(rng.pick(0, rows * cols / 3));
    for (int k = 0; k < fill; ++k) {
      int r = static_cast<int>(rng.pick(0, rows - 1));
      int c = static_cast<int>(rng.pick(0, cols - 1));
      long v = rng.pick(-9, 9);
      entries[r][c] = v;
      qm[r][c] = v;
    }
    FinSpace src = FinSpace::anonymous(cols, "s");
    FinSpace dst = FinSpace::anonymous(rows, "d");
    LinMap<Rational> f(src, dst, mat<Rational>(entries, cols));
    auto ker = topoalg::kernel(f);
    auto im = topoalg::image(f);
    REQUIRE(ker.space.dim() + im.space.dim() == cols);
    REQUIRE(im.space.dim() == oracles::naive_rank(qm));
  }
}

TEST_CASE("exactness of 0 -> W -> V -> V/W -> 0") {
  oracles::Rng rng(77);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = static_cast<int>(rng.pick(1, 8));
    const int k = static_cast<int>(rng.pick(0, n));
    std::vector<std::vector<long>> wcols(n, std::vector<long>(k, 0));
    for (int c = 0; c < k; ++c)
      for (int r = 0; r < n; ++r) wcols[r][c] = rng.pick(-3, 3);
    FinSpace v = FinSpace::anonymous(n, "v");
    FinSpace w = FinSpace::anonymous(k, "w");
    LinMap<Rational> inc(w, v, mat<Rational>(wcols, k));
    if (!inc.is_injective()) continue;
    auto q = topoalg::quotient(v, inc);
    REQUIRE(q.space.dim() == n - k);
    REQUIRE(q.projection.is_surjective());
    REQUIRE(compose(q.projection, inc).matrix == Mat<Rational>(n - k, k));
    REQUIRE(topoalg::kernel(q.projection).space.dim() == k);
  }
}

TEST_CASE("F_p arithmetic agrees with rational arithmetic mod p") {
  PrimeField::set_modulus(10007);
  oracles::Rng rng(31337);
  for (int trial = 0; trial < 10; ++trial) {
    const int rows = static_cast<int>(rng.pick(1, 20));
    const int cols = static_cast<int>(rng.pick(1, 20));
    std::vector<std::vector<long>> entries(rows, std::vector<long>(cols, 0));
    for (auto& r : entries)
      for (auto& x : r) x = rng.pick(-4, 4);
    FinSpace src = FinSpace::anonymous(cols, "s");
    FinSpace dst = FinSpace::anonymous(rows, "d");
    LinMap<Rational> fq(src, dst, mat<Rational>(entries, cols));
    LinMap<PrimeField> fp(src, dst, mat<PrimeField>(entries, cols));
    // Small integer matrices avoid p in denominators, so ranks agree.
    REQUIRE(fq.rank() == fp.rank());
    REQUIRE(topoalg::kernel(fq).space.dim() == topoalg::kernel(fp).space.dim());
  }
}

TEST_CASE("subspace calculus") {
  using S = Subspace<Rational>;
  auto e = [](int i) {
    std::vector<Rational> v(3, Rational(0));
    v[i] = Rational(1);
    return v;
  };
  S a = S::span(3, {e(0), e(1)});
  S b = S::span(3, {e(1), e(2)});
  REQUIRE(a.intersect(b).dim() == 1);
  REQUIRE(a.sum(b).dim() == 3);
  REQUIRE(a.intersect(b).contains(e(1)));
  REQUIRE(a.sum(b) == S::full(3));
  REQUIRE(S::zero(3).dim() == 0);
  REQUIRE(a.includes(S::span(3, {e(0)})));
  REQUIRE(!a.includes(b));
  REQUIRE(a.key() != b.key());
}
