#include "coloop/polytope/goodwillie.hpp"

#include <algorithm>

#include "coloop/errors.hpp"
#include "coloop/polytope/freehedron.hpp"

namespace coloop {

Rational regime_epsilon(GoodwillieRegime r) { return r == GoodwillieRegime::eps0 ? Rational(0) : Rational(1, 4); }

namespace {

void check_n(int n) {
  if (n < 2 || n > max_goodwillie_dimension)
    throw ValidationError("Goodwillie dimension must lie in [2, " + std::to_string(max_goodwillie_dimension) + "]");
}

}  // namespace

std::vector<GoodwillieVertex> goodwillie_vertices(int n, GoodwillieRegime regime) {
  check_n(n);
  std::vector<GoodwillieVertex> cube, u;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    GoodwillieVertex v{{}, true};
    for (int j = 0; j < n; ++j) v.coordinates.push_back(Rational((mask >> (n - 1 - j)) & 1u));
    cube.push_back(std::move(v));
  }
  Rational eps = regime_epsilon(regime);
  for (int i = 2; i <= n; ++i)
    for (unsigned mask = 0; mask < (1u << (n - 2)); ++mask) {
      GoodwillieVertex v{{Rational(i - 1, n)}, false};
      v.coordinates[0].canonicalize();
      int bit = n - 3;
      for (int j = 2; j <= n; ++j) {
        if (j == i) {
          v.coordinates.push_back(Rational(-1));
          continue;
        }
        bool high = (mask >> bit--) & 1u;
        v.coordinates.push_back(high ? Rational(1 - eps) : eps);
      }
      u.push_back(std::move(v));
    }
  std::sort(cube.begin(), cube.end());
  std::sort(u.begin(), u.end());
  cube.insert(cube.end(), u.begin(), u.end());
  return cube;
}

std::vector<PrismCell> prism_decomposition(int n) {
  check_n(n);
  std::vector<PrismCell> cells;
  unsigned count = 1u << (n - 1);
  for (unsigned mask = 0; mask < count; ++mask) {
    PrismCell c;
    for (int i = 2; i <= n; ++i)
      if (mask & (1u << (i - 2))) c.S.push_back(i);
    c.simplex_dim = static_cast<int>(c.S.size()) + 1;
    c.cube_dim = n - static_cast<int>(c.S.size()) - 1;
    for (int b = 0; b < n - 1; ++b) c.neighbours.push_back(mask ^ (1u << b));
    std::sort(c.neighbours.begin(), c.neighbours.end());
    cells.push_back(std::move(c));
  }
  return cells;
}

std::vector<Rational> p_eps(const std::vector<Rational>& a, GoodwillieRegime regime) {
  Rational eps = regime_epsilon(regime);
  std::vector<Rational> out = a;
  for (std::size_t j = 1; j < out.size(); ++j) {
    if (out[j] == eps)
      out[j] = 0;
    else if (out[j] == 1 - eps)
      out[j] = 1;
  }
  return out;
}

std::vector<Rational> p_clamp(const std::vector<Rational>& a) {
  std::vector<Rational> out = a;
  for (auto& x : out)
    if (x < 0) x = 0;
  return out;
}

std::vector<GoodwillieVertex> prism_vertices(int n, const PrismCell& cell, GoodwillieRegime regime) {
  std::vector<GoodwillieVertex> out;
  for (const auto& v : goodwillie_vertices(n, regime)) {
    auto a = p_eps(v.coordinates, regime);
    bool inside = true;
    for (int i = 2; i <= n && inside; ++i) {
      bool in_S = std::binary_search(cell.S.begin(), cell.S.end(), i);
      inside = in_S ? a[i - 1] <= 0 : a[i - 1] >= 0;
    }
    if (inside) out.push_back(v);
  }
  return out;
}

std::size_t vertex_count(int n) { return goodwillie_vertices(n, GoodwillieRegime::eps_quarter).size(); }

std::size_t facet_count(int n) {
  std::size_t total = 0;
  for (const auto& c : prism_decomposition(n)) {
    std::size_t prism_facets = static_cast<std::size_t>(c.simplex_dim + 1 + 2 * c.cube_dim);
    total += prism_facets - c.neighbours.size();
  }
  return total;
}

std::vector<std::pair<GoodwillieVertex, NString>> rho_on_vertices(int n) {
  check_n(n);
  auto coords = vertex_coordinates(enumerate_faces(n));
  std::map<std::vector<Rational>, NString> by_point;
  for (const auto& [s, a] : coords) by_point.emplace(a, s);
  std::vector<std::pair<GoodwillieVertex, NString>> out;
  for (const auto& v : goodwillie_vertices(n, GoodwillieRegime::eps_quarter)) {
    auto image = p_clamp(p_eps(v.coordinates, GoodwillieRegime::eps_quarter));
    auto it = by_point.find(image);
    if (it == by_point.end())
      throw IdentityFailure("rho: " + coordinates_string(image) + " is not a vertex of the freehedron");
    out.emplace_back(v, it->second);
  }
  return out;
}

std::string coordinates_string(const std::vector<Rational>& a) {
  std::string out = "(";
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) out += ", ";
    out += a[i].get_str();
  }
  return out + ")";
}

}  // namespace coloop
