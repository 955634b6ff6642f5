#include "coloop/cyclic/mixed_complex.hpp"

#include "coloop/errors.hpp"
#include "coloop/homalg/hochschild.hpp"

namespace coloop {

std::string provenance_name(MixedProvenance p) {
  switch (p) {
    case MixedProvenance::hoch:
      return "hoch";
    case MixedProvenance::cohoch:
      return "cohoch";
    case MixedProvenance::custom:
      break;
  }
  return "custom";
}

void MixedComplexWindow::validate() const {
  std::size_t levels = static_cast<std::size_t>(top + 1);
  if (labels.size() != levels || b.size() != levels || B.size() != levels)
    throw ValidationError("mixed complex: per-degree data does not cover [0, top]");
  for (int n = 0; n <= top; ++n) {
    if (b[n].cols() != rank_at(n) || b[n].rows() != rank_at(n - 1))
      throw ValidationError("mixed complex: b has the wrong shape in degree " + std::to_string(n));
    if (B[n].cols() != rank_at(n) || B[n].rows() != rank_at(n + 1))
      throw ValidationError("mixed complex: B has the wrong shape in degree " + std::to_string(n));
  }
}

std::vector<IdentityCheck> verify_mixed(const MixedComplexWindow& M) {
  M.validate();
  IdentityCheck bb{"b^2 = 0", true, ""}, BB{"B^2 = 0", true, ""}, bB{"bB + Bb = 0", true, ""};
  auto record = [](IdentityCheck& into, const IdentityCheck& c, int n) {
    if (into.passed && !c.passed) {
      into.passed = false;
      into.detail = "degree " + std::to_string(n) + ": " + c.detail;
    }
  };
  for (int n = 0; n <= M.top; ++n) {
    if (n >= 1) record(bb, check_zero("", M.b[n - 1] * M.b[n]), n);
    if (n + 1 < M.top) record(BB, check_zero("", M.B[n + 1] * M.B[n]), n);
    if (n < M.top) {
      SparseMatrix s = M.b[n + 1] * M.B[n];
      if (n >= 1) s = s + M.B[n - 1] * M.b[n];
      record(bB, check_zero("", s), n);
    }
  }
  return {bb, BB, bB};
}

namespace {

template <class Complex>
MixedComplexWindow build(const Complex& K, MixedProvenance provenance) {
  MixedComplexWindow M;
  M.top = K.basis().top();
  M.provenance = provenance;
  M.truncated = K.algebra().truncated();
  for (int n = 0; n <= M.top; ++n) {
    std::vector<std::string> labels;
    for (const auto& g : K.basis().at(n)) labels.push_back(K.label(g));
    M.labels.push_back(std::move(labels));
    M.b.push_back(K.b_matrix(n));
    M.B.push_back(n < M.top ? K.B_matrix(n) : SparseMatrix(0, K.basis().at(n).size()));
  }
  return M;
}

}  // namespace

MixedComplexWindow as_mixed(const HochschildComplex& hoch) { return build(hoch, MixedProvenance::hoch); }

MixedComplexWindow as_mixed(const CoHochschildComplex& cohoch) { return build(cohoch, MixedProvenance::cohoch); }

}  // namespace coloop
