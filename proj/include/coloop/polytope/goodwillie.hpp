#pragma once

#include <map>
#include <string>
#include <vector>

#include "coloop/exactalg/ring.hpp"
#include "coloop/polytope/nstring.hpp"

namespace coloop {

// eps = 0 and eps = 1/4; every eps in (0, 1/2) gives the same combinatorics.
enum class GoodwillieRegime { eps0, eps_quarter };

Rational regime_epsilon(GoodwillieRegime r);

struct GoodwillieVertex {
  std::vector<Rational> coordinates;  // (a_1, ..., a_n)
  bool cube = false;                  // a vertex of I^n, otherwise a point of U

  auto operator<=>(const GoodwillieVertex&) const = default;
};

// Cube vertices followed by U = {((i-1)/n, a_2, ..., a_n) : a_i = -1,
// a_j in {eps, 1 - eps} for j != i}; each part in lexicographic order.
std::vector<GoodwillieVertex> goodwillie_vertices(int n, GoodwillieRegime regime);
constexpr int max_goodwillie_dimension = 12;

// The cell {a_i <= 0 for i in S, a_i >= 0 otherwise}, S a subset of {2..n}.
struct PrismCell {
  std::vector<int> S;
  int simplex_dim = 0;  // |S| + 1
  int cube_dim = 0;     // n - |S| - 1
  std::vector<std::size_t> neighbours;  // cells sharing a facet: |S xor T| = 1
};

// Cells indexed by subsets of {2..n} in binary order.
std::vector<PrismCell> prism_decomposition(int n);
// Vertices of the cell: filtered by sign at eps = 0 and carried to eps = 1/4
// through the vertex bijection p_eps.
std::vector<GoodwillieVertex> prism_vertices(int n, const PrismCell& cell, GoodwillieRegime regime);

std::size_t vertex_count(int n);  // by enumerating goodwillie_vertices
// Sum over the cells of (facets of the prism - (n - 1)).
std::size_t facet_count(int n);

// p_eps: eps -> 0 and 1 - eps -> 1 on coordinates 2..n.
std::vector<Rational> p_eps(const std::vector<Rational>& a, GoodwillieRegime regime);
// p: negative coordinates -> 0.
std::vector<Rational> p_clamp(const std::vector<Rational>& a);

// rho = p o p_eps on the vertices of G_n^{1/4}, identified with the vertices
// of F_n through their cube coordinates. Throws IdentityFailure if some
// image is not a vertex of F_n.
std::vector<std::pair<GoodwillieVertex, NString>> rho_on_vertices(int n);

std::string coordinates_string(const std::vector<Rational>& a);  // "(1/3, 0, 1)"

}  // namespace coloop
