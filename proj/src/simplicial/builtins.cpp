#include "coloop/simplicial/builtins.hpp"

#include <algorithm>

#include "coloop/errors.hpp"

namespace coloop {

namespace {

std::vector<int> full_collapse_word(int n) {
  // s_{n-2} ... s_0 applied to the vertex gives the degenerate (n-1)-simplex
  std::vector<int> word;
  for (int j = n - 2; j >= 0; --j) word.push_back(j);
  return word;
}

std::string subset_id(const std::vector<int>& subset, int n) {
  std::string id;
  for (std::size_t k = 0; k < subset.size(); ++k) {
    if (k && n >= 10) id += ',';
    id += std::to_string(subset[k]);
  }
  return id;
}

}  // namespace

SimplicialSet point_set() {
  return SimplicialSet::build("point", {{SimplexRecord{"v", {}}}});
}

SimplicialSet sphere_set(int n) {
  if (n < 1) throw ValidationError("sphere: dimension must be at least 1, got " + std::to_string(n));
  std::vector<std::vector<SimplexRecord>> cells(n + 1);
  cells[0].push_back({"v", {}});
  SimplexRecord top{"sigma", {}};
  for (int i = 0; i <= n; ++i) top.faces.push_back({full_collapse_word(n), "v"});
  cells[n].push_back(top);
  return SimplicialSet::build("sphere/" + std::to_string(n), std::move(cells));
}

SimplicialSet simplex_set(int n) {
  if (n < 0) throw ValidationError("simplex: dimension must be nonnegative");
  if (n > 20) throw ValidationError("simplex: dimension above 20 is not supported");
  std::vector<std::vector<SimplexRecord>> cells(n + 1);
  for (unsigned mask = 1; mask < (1u << (n + 1)); ++mask) {
    std::vector<int> subset;
    for (int v = 0; v <= n; ++v)
      if (mask & (1u << v)) subset.push_back(v);
    int k = static_cast<int>(subset.size()) - 1;
    SimplexRecord rec{subset_id(subset, n), {}};
    if (k > 0)
      for (int i = 0; i <= k; ++i) {
        std::vector<int> f = subset;
        f.erase(f.begin() + i);
        rec.faces.push_back({{}, subset_id(f, n)});
      }
    cells[k].push_back(rec);
  }
  for (auto& level : cells)
    std::sort(level.begin(), level.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
  return SimplicialSet::build("simplex/" + std::to_string(n), std::move(cells));
}

SimplicialSet wedge_set(const std::vector<int>& dims) {
  if (dims.empty()) throw ValidationError("wedge: needs at least one sphere");
  int top = 0;
  for (int d : dims) {
    if (d < 1) throw ValidationError("wedge: sphere dimensions must be at least 1");
    top = std::max(top, d);
  }
  std::vector<std::vector<SimplexRecord>> cells(top + 1);
  cells[0].push_back({"v", {}});
  std::string name = "wedge/";
  for (std::size_t k = 0; k < dims.size(); ++k) {
    int d = dims[k];
    SimplexRecord rec{"sigma" + std::to_string(k + 1), {}};
    for (int i = 0; i <= d; ++i) rec.faces.push_back({full_collapse_word(d), "v"});
    cells[d].push_back(rec);
    name += (k ? "," : "") + std::to_string(d);
  }
  return SimplicialSet::build(name, std::move(cells));
}

}  // namespace coloop
