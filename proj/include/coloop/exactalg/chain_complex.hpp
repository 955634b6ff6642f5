#pragma once

#include <optional>
#include <string>
#include <vector>

#include "coloop/exactalg/ring.hpp"
#include "coloop/exactalg/sparse_matrix.hpp"

namespace coloop {

// A chain complex known in degrees [lo, hi]. boundary[n - lo] maps C_n to
// C_{n-1}. At n = lo the matrix has zero rows unless complete_below is set,
// in which case its rows are the generators of C_{lo-1} (possibly none).
// When complete_above is set, boundary_above is the map C_{hi+1} -> C_hi.
// Degrees at an incomplete edge are not reliable.
//
// truncated: the generators themselves were cut off (word-length cap), so no
// degree is certified even when it is reliable.
struct ChainComplexWindow {
  int lo = 0;
  int hi = -1;
  std::vector<std::vector<std::string>> labels;
  std::vector<SparseMatrix> boundary;
  SparseMatrix boundary_above;
  bool complete_below = false;
  bool complete_above = false;
  bool truncated = false;
  std::string truncation_note;

  static ChainComplexWindow empty(int lo, int hi);

  bool contains(int n) const { return n >= lo && n <= hi; }
  std::size_t rank_at(int n) const;  // number of generators, 0 outside the window
  const std::vector<std::string>& labels_at(int n) const { return labels.at(n - lo); }
  const SparseMatrix& boundary_at(int n) const { return boundary.at(n - lo); }
  bool boundary_certified() const { return complete_below && complete_above; }

  // Throws ValidationError if matrix shapes do not match the label counts.
  void validate() const;
  // Degree n such that boundary(n-1) * boundary(n) != 0, if any.
  std::optional<int> first_square_failure() const;
};

struct DegreeHomology {
  int degree = 0;
  std::size_t betti = 0;
  std::vector<Integer> torsion;  // coefficients > 1, nondecreasing; integers only
  bool certified = false;
};

struct HomologyResult {
  RingSpec ring;
  int reliable_lo = 0;
  int reliable_hi = -1;
  std::vector<DegreeHomology> degrees;

  const DegreeHomology* at(int n) const;
  bool all_certified() const;
};

HomologyResult homology_window(const ChainComplexWindow& complex, const RingSpec& ring);

// Cone of a chain map F: S -> T (F[n] in degree n, both windows starting at
// 0): Cone_n = S_{n-1} + T_n with d(s, t) = (-ds, Fs + dt).
ChainComplexWindow mapping_cone(const ChainComplexWindow& S, const ChainComplexWindow& T,
                                const std::vector<SparseMatrix>& F);
// Rank over a field (Q when given Z) of the map F induces on homology, read
// off the long exact sequence of the cone; degrees [0, reliable top].
std::vector<std::size_t> induced_homology_ranks(const ChainComplexWindow& S, const ChainComplexWindow& T,
                                                const std::vector<SparseMatrix>& F, const RingSpec& field);

}  // namespace coloop
