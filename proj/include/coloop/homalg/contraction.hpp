#pragma once

#include <vector>

#include "coloop/homalg/hochschild.hpp"

namespace coloop {

// Iterated reduced coproducts of c with every factor of positive degree,
// including c itself: (coefficient, [c(1), ..., c(k)]).
std::vector<std::pair<Integer, std::vector<int>>> iterated_coproducts(const CategoricalCoalgebra& C, int c);

// pi: B(A,A,A) -> Q.  pi(a0[]a2) = a0 [] x [] a2, pi(a0[{c1|...|cq}]a2) sums
// over splitting off one letter, zero for two or more bar entries.
Chain<QGenerator> contraction_pi(const CobarAlgebra& A, const BarGenerator& g);
// alpha: Q -> B(A,A,A), expanding the middle element into bar entries.
Chain<BarGenerator> contraction_alpha(const CobarAlgebra& A, const QGenerator& q);
// H: B(A,A,A) -> B(A,A,A) of degree +1, zero unless the first bar entry has
// at least two letters.
Chain<BarGenerator> contraction_homotopy(const CobarAlgebra& A, const BarGenerator& g);

// Induced maps between Hoch and coHoch.
Chain<CoHochGenerator> pi_bar(const CobarAlgebra& A, const HochGenerator& g);
Chain<HochGenerator> alpha_bar(const CobarAlgebra& A, const CoHochGenerator& g);
Chain<HochGenerator> homotopy_bar(const CobarAlgebra& A, const HochGenerator& g);

// Matrices of the descended maps in degree n.
SparseMatrix pi_bar_matrix(const HochschildComplex& hoch, const CoHochschildComplex& cohoch, int n);
SparseMatrix alpha_bar_matrix(const HochschildComplex& hoch, const CoHochschildComplex& cohoch, int n);
SparseMatrix homotopy_bar_matrix(const HochschildComplex& hoch, int n);  // n -> n+1

// pi alpha = id, alpha pi - id = delta H + H delta, both chain maps, on
// B(A,A,A) and Q and again on Hoch and coHoch; degrees [0, max_degree - 1].
std::vector<IdentityCheck> contraction_checks(const CobarAlgebra& A);

}  // namespace coloop
