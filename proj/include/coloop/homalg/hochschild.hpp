#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "coloop/homalg/two_sided.hpp"

namespace coloop {

// [a1|...|ap]m: non-identity words a_i and a word m closing the cycle,
// target(a_p) = source(m), target(m) = source(a_1).
struct HochGenerator {
  std::vector<Monomial> bars;
  Monomial tail;

  std::size_t letters() const {
    std::size_t n = tail.length();
    for (const auto& m : bars) n += m.length();
    return n;
  }
  friend bool operator<(const HochGenerator& a, const HochGenerator& b) {
    if (a.letters() != b.letters()) return a.letters() < b.letters();
    if (a.bars.size() != b.bars.size()) return a.bars.size() < b.bars.size();
    if (a.bars != b.bars) return a.bars < b.bars;
    return a.tail < b.tail;
  }
  bool operator==(const HochGenerator&) const = default;
};

// c{c1|...|cp}: a coalgebra basis element followed by a word from its
// target back to its source.
struct CoHochGenerator {
  int head = -1;
  Monomial word;

  friend bool operator<(const CoHochGenerator& a, const CoHochGenerator& b) {
    if (a.word.length() != b.word.length()) return a.word.length() < b.word.length();
    if (a.head != b.head) return a.head < b.head;
    return a.word < b.word;
  }
  bool operator==(const CoHochGenerator&) const = default;
};

// Hoch is B(A,A,A) (x)_{A^e} A by basis identification:
//   a0[t]a' (x) m  ->  (-1)^{|a0|(|[t]| + |a'| + |m|)} [t](a' m a0).
// The section sends [t]m to id[t]id (x) m.
BarGenerator hoch_section(const CobarAlgebra& A, const HochGenerator& g);
std::optional<std::pair<HochGenerator, int>> hoch_project(const CobarAlgebra& A, const BarGenerator& b,
                                                          const Monomial& m);

// coHoch is Q(A,C,A) (x)_{A^e} A: a[]c[]b (x) m -> (-1)^{|a|(|c| + |b| + |m|)} c{b m a}.
QGenerator cohoch_section(const CobarAlgebra& A, const CoHochGenerator& g);
std::optional<std::pair<CoHochGenerator, int>> cohoch_project(const CobarAlgebra& A, const QGenerator& q,
                                                              const Monomial& m);

// Pushes a bimodule map F: B(A,A,A) -> B(A,A,A) through the identification.
template <class F>
Chain<HochGenerator> descend_to_hoch(const CobarAlgebra& A, const HochGenerator& g, F&& f) {
  Chain<HochGenerator> out;
  for (const auto& [b, v] : f(hoch_section(A, g)))
    if (auto r = hoch_project(A, b, g.tail)) add_term(out, r->first, Integer(v * r->second));
  return out;
}

class HochschildComplex {
 public:
  explicit HochschildComplex(const CobarAlgebra& A);

  const CobarAlgebra& algebra() const { return *A_; }
  int degree(const HochGenerator& g) const;
  int bar_degree(const HochGenerator& g) const;
  std::string label(const HochGenerator& g) const;

  Chain<HochGenerator> differential(const HochGenerator& g) const;
  // Connes operator: cyclic rotations of [a1|...|ap|m] followed by the identity.
  Chain<HochGenerator> connes(const HochGenerator& g) const;

  const GradedBasis<HochGenerator>& basis() const { return basis_; }
  ChainComplexWindow complex() const;
  SparseMatrix b_matrix(int n) const;  // degree n -> n-1
  SparseMatrix B_matrix(int n) const;  // degree n -> n+1

 private:
  const CobarAlgebra* A_;
  GradedBasis<HochGenerator> basis_;
};

class CoHochschildComplex {
 public:
  explicit CoHochschildComplex(const CobarAlgebra& A);

  const CobarAlgebra& algebra() const { return *A_; }
  int degree(const CoHochGenerator& g) const;
  std::string label(const CoHochGenerator& g) const;

  Chain<CoHochGenerator> differential(const CoHochGenerator& g) const;
  // Rotation operator, nonzero only when the head has degree 0.
  Chain<CoHochGenerator> rotation(const CoHochGenerator& g) const;

  const GradedBasis<CoHochGenerator>& basis() const { return basis_; }
  ChainComplexWindow complex() const;
  SparseMatrix b_matrix(int n) const;
  SparseMatrix B_matrix(int n) const;

 private:
  const CobarAlgebra* A_;
  GradedBasis<CoHochGenerator> basis_;
};

}  // namespace coloop
