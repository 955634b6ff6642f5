#pragma once

#include <string>
#include <vector>

#include "coloop/simplicial/simplicial_set.hpp"

namespace coloop {

SimplicialSet point_set();
// One vertex and one nondegenerate n-simplex with all faces degenerate; n >= 1.
SimplicialSet sphere_set(int n);
// Standard n-simplex: every nonempty subset of {0..n} is nondegenerate.
SimplicialSet simplex_set(int n);
// One vertex and one sphere cell per listed dimension.
SimplicialSet wedge_set(const std::vector<int>& dims);

// Resolves "builtin:point", "builtin:sphere/<n>", "builtin:simplex/<n>",
// "builtin:wedge/<d1>,<d2>,..." or a path to a JSON file.
SimplicialSet load_simplicial_set(const std::string& source);
SimplicialSet parse_simplicial_set_json(const std::string& text);
std::string simplicial_set_to_json(const SimplicialSet& X);

}  // namespace coloop
