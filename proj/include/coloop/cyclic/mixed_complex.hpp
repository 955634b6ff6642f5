#pragma once

#include <string>
#include <vector>

#include "coloop/exactalg/sparse_matrix.hpp"
#include "coloop/homalg/words.hpp"

namespace coloop {

class HochschildComplex;
class CoHochschildComplex;

enum class MixedProvenance { hoch, cohoch, custom };

std::string provenance_name(MixedProvenance p);

// Graded module on degrees [0, top] with b of degree -1 and B of degree +1.
// b[n]: M_n -> M_{n-1}; B[n]: M_n -> M_{n+1} for n < top (B[top] has no rows
// because M_{top+1} is outside the window).
struct MixedComplexWindow {
  int top = -1;
  std::vector<std::vector<std::string>> labels;
  std::vector<SparseMatrix> b;
  std::vector<SparseMatrix> B;
  MixedProvenance provenance = MixedProvenance::custom;
  bool truncated = false;

  std::size_t rank_at(int n) const { return n < 0 || n > top ? 0 : labels[n].size(); }
  // Throws ValidationError on inconsistent shapes.
  void validate() const;
};

// b^2 = 0, B^2 = 0 and bB + Bb = 0 wherever every factor lies in the window;
// a failure names the degree and first nonzero entry.
std::vector<IdentityCheck> verify_mixed(const MixedComplexWindow& M);

MixedComplexWindow as_mixed(const HochschildComplex& hoch);
MixedComplexWindow as_mixed(const CoHochschildComplex& cohoch);

}  // namespace coloop
