#include "coloop/simplicial/simplicial_set.hpp"

#include <algorithm>

#include "coloop/errors.hpp"

namespace coloop {

bool SimplexRef::nondegenerate() const {
  for (std::size_t k = 0; k + 1 < collapse.size(); ++k)
    if (collapse[k] == collapse[k + 1]) return false;
  return true;
}

std::vector<int> SimplexRef::degeneracies() const {
  std::vector<int> word;
  for (int k = static_cast<int>(collapse.size()) - 2; k >= 0; --k)
    if (collapse[k] == collapse[k + 1]) word.push_back(k);
  return word;
}

std::vector<int> degeneracies_to_collapse(const std::vector<int>& word, int target_dim) {
  int n = target_dim + static_cast<int>(word.size());
  std::vector<int> values(n + 1);
  for (int k = 0; k <= n; ++k) values[k] = k;
  // s_{j1} ... s_{jk} y = y o sigma_{jk} o ... o sigma_{j1}; sigma_{j1} acts first
  for (int j : word)
    for (int& v : values)
      if (v > j) --v;
  return values;
}

SimplicialSet SimplicialSet::build(std::string name,
                                   std::vector<std::vector<SimplexRecord>> by_dimension) {
  SimplicialSet X;
  X.name_ = std::move(name);
  X.raw_ = by_dimension;
  if (by_dimension.empty() || by_dimension.front().empty())
    throw ValidationError("simplicial set '" + X.name_ + "': no vertices");
  for (int n = 0; n < static_cast<int>(by_dimension.size()); ++n) {
    X.by_dimension_.emplace_back();
    for (auto& rec : by_dimension[n]) {
      if (rec.id.empty()) throw ValidationError("simplicial set: empty simplex id");
      if (X.index_.count(rec.id))
        throw ValidationError("simplicial set: duplicate simplex id '" + rec.id + "'");
      int idx = static_cast<int>(X.records_.size());
      X.index_[rec.id] = idx;
      X.records_.push_back(rec);
      X.dims_.push_back(n);
      X.by_dimension_.back().push_back(idx);
    }
  }
  while (X.by_dimension_.size() > 1 && X.by_dimension_.back().empty()) {
    X.by_dimension_.pop_back();
    X.raw_.pop_back();
  }

  X.faces_.resize(X.records_.size());
  for (int idx = 0; idx < X.size(); ++idx) {
    const auto& rec = X.records_[idx];
    int n = X.dims_[idx];
    int expected = n == 0 ? 0 : n + 1;
    if (static_cast<int>(rec.faces.size()) != expected)
      throw ValidationError("simplex '" + rec.id + "': expected " + std::to_string(expected) +
                            " faces, found " + std::to_string(rec.faces.size()));
    for (int i = 0; i < expected; ++i) {
      const auto& f = rec.faces[i];
      auto it = X.index_.find(f.target);
      if (it == X.index_.end())
        throw ValidationError("simplex '" + rec.id + "': face " + std::to_string(i) +
                              " targets unknown simplex '" + f.target + "'");
      int tdim = X.dims_[it->second];
      int k = static_cast<int>(f.degeneracies.size());
      if (tdim + k != n - 1)
        throw ValidationError("simplex '" + rec.id + "': face " + std::to_string(i) +
                              " has dimension " + std::to_string(tdim + k) + ", expected " +
                              std::to_string(n - 1));
      for (int a = 0; a < k; ++a) {
        int j = f.degeneracies[a];
        // s_j applied to a simplex of dimension tdim + (k - 1 - a) needs j <= that dimension
        if (j < 0 || j > tdim + (k - 1 - a) || (a > 0 && f.degeneracies[a - 1] <= j))
          throw ValidationError("simplex '" + rec.id + "': face " + std::to_string(i) +
                                " degeneracy word is not a strictly decreasing valid word");
      }
      X.faces_[idx].push_back({degeneracies_to_collapse(f.degeneracies, tdim), it->second});
    }
  }

  for (int idx = 0; idx < X.size(); ++idx) {
    int n = X.dims_[idx];
    if (n < 2) continue;
    SimplexRef self = X.identity(idx);
    for (int j = 1; j <= n; ++j)
      for (int i = 0; i < j; ++i) {
        SimplexRef lhs = X.face(X.face(self, j), i);
        SimplexRef rhs = X.face(X.face(self, i), j - 1);
        if (!(lhs == rhs))
          throw ValidationError("simplicial identity d_i d_j = d_{j-1} d_i fails at simplex '" +
                                X.records_[idx].id + "' with i=" + std::to_string(i) +
                                ", j=" + std::to_string(j));
      }
  }
  return X;
}

int SimplicialSet::index_of(const std::string& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) throw ValidationError("unknown simplex '" + id + "'");
  return it->second;
}

const std::vector<int>& SimplicialSet::of_dimension(int n) const {
  static const std::vector<int> none;
  if (n < 0 || n >= static_cast<int>(by_dimension_.size())) return none;
  return by_dimension_[n];
}

SimplexRef SimplicialSet::identity(int index) const {
  SimplexRef s;
  s.target = index;
  s.collapse.resize(dims_.at(index) + 1);
  for (int k = 0; k <= dims_[index]; ++k) s.collapse[k] = k;
  return s;
}

SimplexRef SimplicialSet::face(const SimplexRef& s, int i) const {
  std::vector<int> rest;
  rest.reserve(s.collapse.size() - 1);
  for (int k = 0; k < static_cast<int>(s.collapse.size()); ++k)
    if (k != i) rest.push_back(s.collapse[k]);
  int top = s.collapse.back();
  std::vector<bool> hit(top + 1, false);
  for (int v : rest) hit[v] = true;
  int missing = -1;
  for (int v = 0; v <= top; ++v)
    if (!hit[v]) {
      missing = v;
      break;
    }
  if (missing < 0) return {std::move(rest), s.target};
  // rest misses one value: it factors through the coface skipping `missing`
  const SimplexRef& inner = faces_[s.target][missing];
  SimplexRef out;
  out.target = inner.target;
  for (int v : rest) out.collapse.push_back(inner.collapse[v < missing ? v : v - 1]);
  return out;
}

SimplexRef SimplicialSet::iterated_face(SimplexRef s, const std::vector<int>& indices) const {
  for (int i : indices) s = face(s, i);
  return s;
}

SimplexRef SimplicialSet::front(const SimplexRef& s, int p) const {
  SimplexRef out = s;
  for (int i = s.dim(); i > p; --i) out = face(out, i);
  return out;
}

SimplexRef SimplicialSet::back(const SimplexRef& s, int q) const {
  SimplexRef out = s;
  for (int i = s.dim(); i > q; --i) out = face(out, 0);
  return out;
}

int SimplicialSet::first_vertex(int index) const { return front(identity(index), 0).target; }

int SimplicialSet::last_vertex(int index) const { return back(identity(index), 0).target; }

bool SimplicialSet::one_reduced() const {
  return of_dimension(0).size() == 1 && of_dimension(1).empty();
}

std::vector<std::string> SimplicialSet::warnings() const {
  std::vector<std::string> w;
  if (!one_reduced()) w.push_back("simplicial set '" + name_ + "' is not 1-reduced");
  return w;
}

}  // namespace coloop
