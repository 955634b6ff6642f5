#include "coloop/cyclic/equivariant.hpp"

#include "coloop/errors.hpp"
#include "coloop/homalg/contraction.hpp"

namespace coloop {

CyclicHomologyResult cyclic_homology(const CategoricalCoalgebra& C, const CyclicVariantSpec& spec, int lo, int hi,
                                     const RingSpec& ring, WordCap cap, MixedSide side) {
  int reach = spec.needs_truncation() ? 2 * spec.u_truncation : 0;
  int top = hi + 1 + reach;
  CobarAlgebra A(C, top, cap);
  MixedComplexWindow M;
  if (side == MixedSide::cohoch)
    M = as_mixed(CoHochschildComplex(A));
  else
    M = as_mixed(HochschildComplex(A));
  for (const auto& chk : verify_mixed(M))
    if (!chk.passed) throw IdentityFailure("mixed complex: " + chk.name + " fails, " + chk.detail);

  ChainComplexWindow K = cyclic_complex(M, spec, lo, hi);
  CyclicHomologyResult out;
  out.homology = homology_window(K, ring);
  out.truncated = K.truncated;
  out.warnings = A.warnings();
  if (spec.needs_truncation()) out.warnings.push_back(K.truncation_note);
  return out;
}

CyclicHomologyResult equivariant_homology(const CategoricalCoalgebra& C, int hi, const RingSpec& ring, WordCap cap) {
  return cyclic_homology(C, {CyclicVariant::positive, 0}, 0, hi, ring, cap, MixedSide::cohoch);
}

MixedMapReport check_mixed_map_pi(const CategoricalCoalgebra& C, int top, WordCap cap) {
  if (top < 1) throw ValidationError("check_mixed_map_pi: window must reach degree 1");
  CobarAlgebra A(C, top, cap);
  HochschildComplex hoch(A);
  CoHochschildComplex cohoch(A);
  MixedMapReport report;
  report.top = top;
  report.truncated = A.truncated();

  IdentityCheck chain{"pi delta = d pi", true, ""};
  IdentityCheck mixed{"pi B = P pi", true, ""};
  auto record = [](IdentityCheck& into, const IdentityCheck& c, int n) {
    if (into.passed && !c.passed) {
      into.passed = false;
      into.detail = "degree " + std::to_string(n) + ": " + c.detail;
    }
  };
  std::vector<SparseMatrix> pi;
  for (int n = 0; n <= top; ++n) pi.push_back(pi_bar_matrix(hoch, cohoch, n));
  for (int n = 0; n <= top; ++n) {
    if (n >= 1) record(chain, check_equal("", pi[n - 1] * hoch.b_matrix(n), cohoch.b_matrix(n) * pi[n]), n);
    if (n < top) record(mixed, check_equal("", pi[n + 1] * hoch.B_matrix(n), cohoch.B_matrix(n) * pi[n]), n);
  }

  for (int n = 0; n < top && report.alpha_intertwines; ++n) {
    SparseMatrix lhs = hoch.B_matrix(n) * alpha_bar_matrix(hoch, cohoch, n);
    SparseMatrix rhs = alpha_bar_matrix(hoch, cohoch, n + 1) * cohoch.B_matrix(n);
    SparseMatrix diff = lhs - rhs;
    std::size_t row = 0, col = 0;
    Integer value;
    if (diff.first_nonzero(row, col, value)) {
      report.alpha_intertwines = false;
      report.alpha_witness = cohoch.label(cohoch.basis().at(n)[col]);
    }
  }

  RingSpec Q = RingSpec::rationals();
  ChainComplexWindow S = hoch.complex(), T = cohoch.complex();
  auto hs = homology_window(S, Q), ht = homology_window(T, Q);
  report.induced_rank = induced_homology_ranks(S, T, pi, Q);
  IdentityCheck iso{"pi induces an isomorphism on homology", true, ""};
  for (int n = 0; n < static_cast<int>(report.induced_rank.size()); ++n) {
    std::size_t bs = hs.at(n)->betti, bt = ht.at(n)->betti, r = report.induced_rank[n];
    report.hoch_betti.push_back(bs);
    report.cohoch_betti.push_back(bt);
    if (iso.passed && (r != bs || r != bt)) {
      iso.passed = false;
      iso.detail = "degree " + std::to_string(n) + ": ranks " + std::to_string(bs) + " -> " + std::to_string(bt) +
                   ", induced rank " + std::to_string(r);
    }
  }
  report.checks = {chain, mixed, iso};
  return report;
}

}  // namespace coloop
