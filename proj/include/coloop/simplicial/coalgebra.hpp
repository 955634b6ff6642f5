#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "coloop/exactalg/ring.hpp"
#include "coloop/simplicial/simplicial_set.hpp"

namespace coloop {

using LinearImage = std::vector<std::pair<int, Integer>>;  // (basis index, coefficient), sorted

struct CoproductTerm {
  Integer coef;
  int left;
  int right;
};

// Curved coalgebra with set-like degree-0 part: basis elements carry a degree and endpoints in C_0, the
// coproduct is counital and coassociative, d is a coderivation with
// d^2 = (h (x) id)(Delta - Delta^op), and the curvature h: C_2 -> R
// satisfies h o d = 0.
class CategoricalCoalgebra {
 public:
  struct Element {
    std::string label;
    int degree = 0;
    int source = -1;
    int target = -1;
  };

  // Checks every axiom and throws IdentityFailure listing the failures.
  static CategoricalCoalgebra from_data(std::string name, std::vector<Element> elements,
                                        std::vector<std::vector<CoproductTerm>> coproduct,
                                        std::vector<LinearImage> boundary,
                                        std::vector<Integer> curvature);

  const std::string& name() const { return name_; }
  int size() const { return static_cast<int>(elements_.size()); }
  const Element& element(int i) const { return elements_.at(i); }
  const std::string& label(int i) const { return elements_.at(i).label; }
  int degree(int i) const { return elements_.at(i).degree; }
  int source(int i) const { return elements_.at(i).source; }
  int target(int i) const { return elements_.at(i).target; }
  int max_degree() const;
  const std::vector<int>& objects() const { return objects_; }
  std::vector<int> of_degree(int n) const;
  int index_of(const std::string& label) const;

  const std::vector<CoproductTerm>& coproduct(int i) const { return coproduct_.at(i); }
  const LinearImage& boundary(int i) const { return boundary_.at(i); }
  const Integer& curvature(int i) const { return curvature_.at(i); }
  bool curved() const;

  // Empty when the structure satisfies every axiom.
  std::vector<std::string> axiom_failures() const;

 private:
  std::string name_;
  std::vector<Element> elements_;
  std::vector<std::vector<CoproductTerm>> coproduct_;
  std::vector<LinearImage> boundary_;
  std::vector<Integer> curvature_;
  std::vector<int> objects_;
  std::map<std::string, int> index_;
};

// Normalized chains of X with the corrected differential
// d~ = d + (id (x) e - e (x) id) o Delta and curvature h = e o d + (e (x) e) o Delta,
// where e is 1 on nondegenerate 1-simplices (Koszul signs, e of degree -1).
CategoricalCoalgebra categorical_coalgebra(const SimplicialSet& X);

// Direct construction on the n-simplex: d~ keeps only the inner faces
// sum_{i=1}^{k-1} (-1)^i d_i and the curvature vanishes.
CategoricalCoalgebra simplex_coalgebra(int n);

LinearImage normalize_image(std::map<int, Integer> acc);

}  // namespace coloop
