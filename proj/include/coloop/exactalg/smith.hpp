#pragma once

#include <cstddef>
#include <vector>

#include "coloop/exactalg/ring.hpp"
#include "coloop/exactalg/sparse_matrix.hpp"

namespace coloop {

struct SmithForm {
  // Positive diagonal entries d1 | d2 | ... | dr of the Smith normal form.
  std::vector<Integer> invariant_factors;
  std::size_t rank() const { return invariant_factors.size(); }
};

// Exact Smith normal form over the integers by sparse elimination. Pivots are
// chosen by smallest absolute value, ties broken by row and column counts.
SmithForm smith_normal_form(const SparseMatrix& m);

// Rank over the given ring (over Z this is the rank over Q).
std::size_t rank(const SparseMatrix& m, const RingSpec& ring);

std::size_t rank_mod_p(const SparseMatrix& m, unsigned long p);

}  // namespace coloop
