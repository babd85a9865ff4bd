// Test-only brute-force oracles, kept independent of the library's
// elimination code: plain dense Gaussian elimination over mpq_class.
#ifndef TOPOALG_TESTS_ORACLES_HPP
#define TOPOALG_TESTS_ORACLES_HPP

#include <gmpxx.h>

#include <cstdint>
#include <vector>

namespace oracles {

using QMat = std::vector<std::vector<mpq_class>>;

inline int naive_rank(QMat m) {
  if (m.empty()) return 0;
  const std::size_t cols = m[0].size();
  int rank = 0;
  for (std::size_t c = 0; c < cols; ++c) {
    std::size_t sel = rank;
    while (sel < m.size() && sgn(m[sel][c]) == 0) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[rank], m[sel]);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (static_cast<int>(r) == rank || sgn(m[r][c]) == 0) continue;
      mpq_class f = m[r][c] / m[rank][c];
      for (std::size_t j = c; j < cols; ++j) m[r][j] -= f * m[rank][j];
    }
    ++rank;
  }
  return rank;
}

inline int naive_nullity(const QMat& m, int cols) { return cols - naive_rank(m); }

// Deterministic xorshift for reproducible property tests.
struct Rng {
  std::uint64_t s;
  explicit Rng(std::uint64_t seed) : s(seed ? seed : 0x9e3779b97f4a7c15ULL) {}
  std::uint64_t next() {
    s ^= s << 13;
    s ^= s >> 7;
    s ^= s << 17;
    return s;
  }
  long pick(long lo, long hi) { return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1)); }
};

}  // namespace oracles

#endif
