#pragma once

#include <vector>

#include "coloop/exactalg/chain_complex.hpp"
#include "coloop/simplicial/simplicial_set.hpp"

namespace coloop {

// Normalized chains in degrees [lo, hi]: nondegenerate simplices as basis,
// faces landing on degenerate simplices dropped. Both window edges carry
// their outside boundary, so every degree is certified.
ChainComplexWindow normalized_chains(const SimplicialSet& X, int lo, int hi);

struct AwTerm {
  int front;  // nondegenerate front face on vertices 0..p
  int back;   // nondegenerate back face on vertices p..n
  bool operator==(const AwTerm&) const = default;
};

// Alexander-Whitney coproduct of a nondegenerate simplex; pairs with a
// degenerate factor vanish in normalized chains and are omitted.
std::vector<AwTerm> aw_coproduct(const SimplicialSet& X, int simplex);

}  // namespace coloop
