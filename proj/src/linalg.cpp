#include "tropglue/linalg.hpp"

#include <utility>

namespace tropglue {

void LinearSystem::add_row(const std::vector<std::pair<std::size_t, Rat>>& terms, const Rat& rhs) {
  std::vector<Rat> row(unknowns_ + 1, Rat(0));
  for (const auto& [index, coeff] : terms) row.at(index) += coeff;
  row[unknowns_] = rhs;
  rows_.push_back(std::move(row));
}

LinearSystem::Solution LinearSystem::solve() const {
  auto m = rows_;
  const std::size_t n = unknowns_;
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    const Rat inv = 1 / m[r][c];
    for (std::size_t k = c; k <= n; ++k) m[r][k] *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      const Rat f = m[i][c];
      for (std::size_t k = c; k <= n; ++k) m[i][k] -= f * m[r][k];
    }
    pivot_cols.push_back(c);
    ++r;
  }

  Solution sol;
  sol.rank = r;
  sol.nullity = n - r;
  for (std::size_t i = r; i < m.size(); ++i) {
    if (m[i][n] != 0) return sol;
  }
  sol.consistent = true;
  sol.values.assign(n, Rat(0));
  for (std::size_t i = 0; i < r; ++i) sol.values[pivot_cols[i]] = m[i][n];
  return sol;
}

}  // namespace tropglue
