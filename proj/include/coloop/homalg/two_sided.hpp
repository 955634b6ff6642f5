#pragma once

#include <string>
#include <vector>

#include "coloop/homalg/cobar.hpp"

namespace coloop {

// a0[a1|...|ap]a_{p+1} in the normalized two-sided bar construction
// B(A, A, A) of the cobar category A: bar entries are non-identity words,
// the outer factors are arbitrary words.
struct BarGenerator {
  Monomial left;
  std::vector<Monomial> bars;
  Monomial right;

  std::size_t letters() const {
    std::size_t n = left.length() + right.length();
    for (const auto& m : bars) n += m.length();
    return n;
  }
  friend bool operator<(const BarGenerator& a, const BarGenerator& b) {
    if (a.letters() != b.letters()) return a.letters() < b.letters();
    if (a.bars.size() != b.bars.size()) return a.bars.size() < b.bars.size();
    if (!(a.left == b.left)) return a.left < b.left;
    if (a.bars != b.bars) return a.bars < b.bars;
    return a.right < b.right;
  }
  bool operator==(const BarGenerator&) const = default;
};

// a [] c [] b in Q(A, C, A).
struct QGenerator {
  Monomial left;
  int middle = -1;
  Monomial right;

  friend bool operator<(const QGenerator& a, const QGenerator& b) {
    if (a.middle != b.middle) return a.middle < b.middle;
    if (a.left.length() + a.right.length() != b.left.length() + b.right.length())
      return a.left.length() + a.right.length() < b.left.length() + b.right.length();
    if (!(a.left == b.left)) return a.left < b.left;
    return a.right < b.right;
  }
  bool operator==(const QGenerator&) const = default;
};

int bar_degree(const CobarAlgebra& A, const BarGenerator& g);
Chain<BarGenerator> bar_differential(const CobarAlgebra& A, const BarGenerator& g);
int q_degree(const CobarAlgebra& A, const QGenerator& g);
// d(a[]c[]b) = Da[]c[]b + (-1)^|a| a[]d~c[]b + (-1)^{|a|+|c|} a[]c[]Db
//   + sum (-1)^|a| (a{c'})[]c''[]b - sum (-1)^{|a|+|c'|} a[]c'[]({c''}b)
Chain<QGenerator> q_differential(const CobarAlgebra& A, const QGenerator& g);

class BarComplex {
 public:
  explicit BarComplex(const CobarAlgebra& A);

  const CobarAlgebra& algebra() const { return *A_; }
  int degree(const BarGenerator& g) const;
  int bar_degree(const BarGenerator& g) const;  // sum of |a_i| + 1 over the bar entries
  std::size_t letters(const BarGenerator& g) const { return g.letters(); }
  std::string label(const BarGenerator& g) const;

  Chain<BarGenerator> differential(const BarGenerator& g) const;

  const GradedBasis<BarGenerator>& basis() const { return basis_; }
  ChainComplexWindow complex() const;

 private:
  const CobarAlgebra* A_;
  GradedBasis<BarGenerator> basis_;
};

class QComplex {
 public:
  explicit QComplex(const CobarAlgebra& A);

  const CobarAlgebra& algebra() const { return *A_; }
  int degree(const QGenerator& g) const;
  std::size_t letters(const QGenerator& g) const { return g.left.length() + g.right.length(); }
  std::string label(const QGenerator& g) const;

  Chain<QGenerator> differential(const QGenerator& g) const;

  const GradedBasis<QGenerator>& basis() const { return basis_; }
  ChainComplexWindow complex() const;

 private:
  const CobarAlgebra* A_;
  GradedBasis<QGenerator> basis_;
};

}  // namespace coloop
