#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "tropglue/lattice.hpp"

namespace tropglue {

// Dense affine system A x = b over Q.
class LinearSystem {
 public:
  explicit LinearSystem(std::size_t unknowns) : unknowns_(unknowns) {}

  std::size_t unknowns() const { return unknowns_; }
  std::size_t rows() const { return rows_.size(); }

  // Adds sum(coeff_i * x_{index_i}) = rhs.
  void add_row(const std::vector<std::pair<std::size_t, Rat>>& terms, const Rat& rhs);

  struct Solution {
    bool consistent = false;
    std::size_t rank = 0;
    std::size_t nullity = 0;
    // Particular solution with every free variable set to zero; empty if inconsistent.
    std::vector<Rat> values;
  };

  Solution solve() const;

 private:
  std::size_t unknowns_;
  std::vector<std::vector<Rat>> rows_;  // each row has unknowns_ + 1 entries (last = rhs)
};

}  // namespace tropglue
