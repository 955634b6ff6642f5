#pragma once

#include <string>
#include <vector>

#include "coloop/cyclic/cyclic_complex.hpp"
#include "coloop/homalg/cobar.hpp"
#include "coloop/simplicial/coalgebra.hpp"

namespace coloop {

enum class MixedSide { cohoch, hoch };

struct CyclicHomologyResult {
  HomologyResult homology;
  std::vector<std::string> warnings;
  bool truncated = false;
};

// Homology of a cyclic variant of (coHoch(C), d, P) or (Hoch(Omega C), delta, B)
// on degrees [lo, hi]. The mixed complex is built far enough above hi that
// every degree of the window is reliable. Throws IdentityFailure if the mixed
// complex fails its identities.
CyclicHomologyResult cyclic_homology(const CategoricalCoalgebra& C, const CyclicVariantSpec& spec, int lo, int hi,
                                     const RingSpec& ring, WordCap cap = {}, MixedSide side = MixedSide::cohoch);

// Positive cyclic homology of (coHoch(C), d, P) on [0, hi]: the S^1-equivariant
// homology of the free loop space.
CyclicHomologyResult equivariant_homology(const CategoricalCoalgebra& C, int hi, const RingSpec& ring,
                                          WordCap cap = {});

struct MixedMapReport {
  int top = -1;  // mixed complexes built on [0, top]
  bool truncated = false;
  std::vector<IdentityCheck> checks;  // pi delta = d pi, pi B = P pi, homology iso
  // alpha-bar intertwining B and P; expected to fail.
  bool alpha_intertwines = true;
  std::string alpha_witness;  // first coHoch generator where B alpha != alpha P
  std::vector<std::size_t> hoch_betti, cohoch_betti, induced_rank;  // over Q, degrees [0, top - 1]
};

// Compares (Hoch(Omega C), delta, B) and (coHoch(C), d, P) through pi-bar.
MixedMapReport check_mixed_map_pi(const CategoricalCoalgebra& C, int top, WordCap cap = {});

}  // namespace coloop
