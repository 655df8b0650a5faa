#include <random>

#include "doctest.h"
#include "tropglue/linalg.hpp"

using namespace tropglue;

namespace {

// Fraction-free (Bareiss) rank over the integers.
std::size_t bareiss_rank(std::vector<std::vector<BigInt>> m) {
  const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  std::size_t rank = 0;
  BigInt prev = 1;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[rank]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      for (std::size_t k = c + 1; k < cols; ++k) {
        m[r][k] = (m[rank][c] * m[r][k] - m[r][c] * m[rank][k]) / prev;
      }
      m[r][c] = 0;
    }
    prev = m[rank][c];
    ++rank;
  }
  return rank;
}

}  // namespace

TEST_CASE("unique solution") {
  LinearSystem s(2);
  s.add_row({{0, 1}, {1, 1}}, 3);
  s.add_row({{0, 1}, {1, -1}}, 1);
  const auto sol = s.solve();
  REQUIRE(sol.consistent);
  CHECK(sol.rank == 2);
  CHECK(sol.nullity == 0);
  CHECK(sol.values[0] == 2);
  CHECK(sol.values[1] == 1);
}

TEST_CASE("inconsistent and underdetermined systems") {
  LinearSystem bad(1);
  bad.add_row({{0, 1}}, 1);
  bad.add_row({{0, 2}}, 3);
  CHECK_FALSE(bad.solve().consistent);

  LinearSystem free(3);
  free.add_row({{0, 1}, {2, 1}}, make_rat(1, 2));
  const auto sol = free.solve();
  REQUIRE(sol.consistent);
  CHECK(sol.nullity == 2);
}

TEST_CASE("rank agrees with Bareiss elimination on random integer systems") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> v(-3, 3), dim(1, 7);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t rows = static_cast<std::size_t>(dim(rng)), cols = static_cast<std::size_t>(dim(rng));
    LinearSystem s(cols);
    std::vector<std::vector<BigInt>> m(rows, std::vector<BigInt>(cols));
    for (std::size_t r = 0; r < rows; ++r) {
      std::vector<std::pair<std::size_t, Rat>> terms;
      for (std::size_t c = 0; c < cols; ++c) {
        // Sparse rows make rank deficiency common.
        const int x = (rng() % 3 == 0) ? v(rng) : 0;
        m[r][c] = x;
        if (x != 0) terms.emplace_back(c, Rat(x));
      }
      s.add_row(terms, 0);
    }
    const auto sol = s.solve();
    REQUIRE(sol.consistent);
    REQUIRE(sol.rank == bareiss_rank(m));
    REQUIRE(sol.nullity == cols - sol.rank);
  }
}
