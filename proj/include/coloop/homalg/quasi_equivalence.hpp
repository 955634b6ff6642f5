#pragma once

#include <string>
#include <vector>

#include "coloop/homalg/hochschild.hpp"
#include "coloop/simplicial/morphism.hpp"

namespace coloop {

// Omega f on a monomial: each letter {c} goes to {f0 c} - f1bar(c) id.
Chain<Monomial> cobar_on_morphism(const CoalgebraMorphism& f, const CobarAlgebra& target, const Monomial& m);
// coHoch(f)(c{w}) = f0(c){Omega f(w)}.
Chain<CoHochGenerator> cohoch_on_morphism(const CoalgebraMorphism& f, const CobarAlgebra& target,
                                          const CoHochGenerator& g);

SparseMatrix cobar_morphism_matrix(const CoalgebraMorphism& f, const CobarAlgebra& source,
                                   const CobarAlgebra& target, int x, int y, int n);

// D' Omega f = Omega f D on every object pair and d' coHoch(f) = coHoch(f) d,
// degrees [1, max_degree]. Under a word cap, generators at the cap are skipped.
std::vector<IdentityCheck> morphism_chain_checks(const CoalgebraMorphism& f, const CobarAlgebra& source,
                                                 const CobarAlgebra& target);

struct PairComparison {
  std::string source_pair;  // "x -> y"
  std::string target_pair;
  std::vector<std::size_t> source_betti;  // rational Betti numbers, degrees [0, reliable_hi]
  std::vector<std::size_t> target_betti;
  std::vector<std::size_t> map_rank;      // rank of the induced map on homology
  int failing_degree = -1;
};

struct QuasiEquivalenceReport {
  int reliable_hi = -1;
  bool truncated = false;
  bool quasi_equivalence_in_window = true;
  int failing_degree = -1;
  std::vector<PairComparison> pairs;
  std::string verdict;  // "quasi-iso in window" or "fails at degree n"
};

// Windowed check that Omega f is a quasi-equivalence: for every pair of
// objects, the induced map on homology of morphism complexes is read off the
// mapping cone (over Q). Essential surjectivity on H_0 is checked as
// surjectivity of the object map.
QuasiEquivalenceReport quasi_equivalence_report(const CoalgebraMorphism& f, int max_degree, WordCap cap = {});

}  // namespace coloop
