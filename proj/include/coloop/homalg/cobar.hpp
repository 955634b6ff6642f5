#pragma once

#include <optional>
#include <string>
#include <vector>

#include "coloop/homalg/words.hpp"
#include "coloop/simplicial/coalgebra.hpp"

namespace coloop {

// The cobar dg category of a categorical coalgebra, cut to degrees
// [0, max_degree]. Objects are the degree-0 basis elements; morphisms are
// monomials of desuspended positive-degree elements.
//
// Degree-1 elements become degree-0 letters. If they form no directed cycle
// every degree is finite and the enumeration is exact; otherwise words are
// cut at a length cap and everything built on top is marked truncated.
class CobarAlgebra {
 public:
  CobarAlgebra(const CategoricalCoalgebra& C, int max_degree, WordCap cap = {});

  const CategoricalCoalgebra& coalgebra() const { return *C_; }
  int max_degree() const { return max_degree_; }
  // -1 when no cap is in force
  int word_cap() const { return cap_; }
  bool truncated() const { return truncated_; }
  WordBound bound() const { return {cap_}; }
  const std::vector<std::string>& warnings() const { return warnings_; }

  int letter_degree(int c) const { return C_->degree(c) - 1; }
  int degree(const Monomial& m) const;
  Monomial identity(int x) const { return {x, x, {}}; }
  Monomial letter(int c) const { return {C_->source(c), C_->target(c), {c}}; }
  // Concatenation; nullopt when target(a) != source(b).
  std::optional<Monomial> compose(const Monomial& a, const Monomial& b) const;
  // Word from explicit letters, or id_object when letters is empty.
  Monomial word(std::vector<int> letters, int object) const;

  // D{c} = -{d~c} + sum (-1)^{|c'|} {c'|c''} - h(c) id, extended as a derivation.
  const Chain<Monomial>& letter_differential(int c) const { return letter_d_.at(c); }
  Chain<Monomial> differential(const Monomial& m) const;

  // All monomials of degree <= max_degree within the cap, sorted.
  const std::vector<Monomial>& monomials() const { return monomials_; }
  const std::vector<Monomial>& monomials_from(int x) const;

  // Morphism complex Omega C(x, y) on degrees [0, max_degree].
  GradedBasis<Monomial> hom_basis(int x, int y) const;
  ChainComplexWindow hom_complex(int x, int y) const;

  std::string label(const Monomial& m) const { return monomial_label(*C_, m); }

 private:
  void enumerate(int cap);

  const CategoricalCoalgebra* C_;
  int max_degree_;
  int cap_ = -1;
  bool truncated_ = false;
  std::vector<std::string> warnings_;
  std::vector<int> letters_;  // positive-degree basis elements
  std::vector<Chain<Monomial>> letter_d_;
  std::vector<Monomial> monomials_;
  std::map<int, std::vector<Monomial>> by_source_;
};

// True when the degree-1 elements, read as arrows source -> target, contain
// no directed cycle (so every cobar degree is finite).
bool degree_one_quiver_acyclic(const CategoricalCoalgebra& C);

// Default cap used by "auto" when the enumeration cannot be exact.
int automatic_word_cap(int max_degree);

}  // namespace coloop
