#pragma once

#include <string>
#include <vector>

#include "coloop/homalg/words.hpp"
#include "coloop/simplicial/coalgebra.hpp"

namespace coloop {

// Morphism (f0, f1): C -> C'. f0 is a degree-0 coalgebra map given on basis
// elements; f1 has degree -1 and lands in C'_0. Being a bicomodule map forces
// f1(c) = f1bar(c) f0(source c) with f0(source c) = f0(target c), so only the
// scalars f1bar on degree-1 elements are stored.
struct CoalgebraMorphism {
  const CategoricalCoalgebra* source = nullptr;
  const CategoricalCoalgebra* target = nullptr;
  std::vector<LinearImage> f0;
  std::vector<Integer> f1bar;

  // Object of C' that an object of C is sent to.
  int object_image(int x) const;
};

// One check per morphism equation: f0 set-like on objects, f0 a coalgebra
// map, f1 a bicomodule map, f0 d = d' f0 + (f1bar (x) f0)(Delta - Delta^op),
// and h' f0 = h - f1bar d - (f1bar (x) f1bar) Delta on C_2.
std::vector<IdentityCheck> validate_morphism(const CoalgebraMorphism& f);

CoalgebraMorphism identity_morphism(const CategoricalCoalgebra& C);
// (g0 f0, g1 f0 + g0 f1). Throws ValidationError if the middle coalgebras differ.
CoalgebraMorphism compose_morphisms(const CoalgebraMorphism& g, const CoalgebraMorphism& f);
// Coalgebra map induced by collapsing a connected simplicial set to its vertex:
// objects go to the point, everything of positive degree to 0, f1 = 0.
CoalgebraMorphism collapse_to_point(const CategoricalCoalgebra& C, const CategoricalCoalgebra& point);

bool operator==(const CoalgebraMorphism& a, const CoalgebraMorphism& b);

}  // namespace coloop
