#include "coloop/simplicial/chains.hpp"

#include <map>

namespace coloop {

namespace {

SparseMatrix simplicial_boundary(const SimplicialSet& X, int n) {
  const auto& cols = X.of_dimension(n);
  const auto& rows = X.of_dimension(n - 1);
  std::map<int, std::size_t> row_of;
  for (std::size_t r = 0; r < rows.size(); ++r) row_of[rows[r]] = r;
  SparseMatrix d(rows.size(), cols.size());
  if (n <= 0) return d;
  for (std::size_t c = 0; c < cols.size(); ++c) {
    SparseMatrix::Column col;
    SimplexRef self = X.identity(cols[c]);
    for (int i = 0; i <= n; ++i) {
      SimplexRef f = X.face(self, i);
      if (f.nondegenerate()) col.push_back({row_of.at(f.target), Integer(i % 2 == 0 ? 1 : -1)});
    }
    d.set_column(c, std::move(col));
  }
  return d;
}

}  // namespace

ChainComplexWindow normalized_chains(const SimplicialSet& X, int lo, int hi) {
  ChainComplexWindow w;
  w.lo = lo;
  w.hi = hi;
  for (int n = lo; n <= hi; ++n) {
    std::vector<std::string> labels;
    for (int idx : X.of_dimension(n)) labels.push_back(X.id(idx));
    w.labels.push_back(std::move(labels));
    w.boundary.push_back(simplicial_boundary(X, n));
  }
  w.boundary_above = simplicial_boundary(X, hi + 1);
  w.complete_below = true;
  w.complete_above = true;
  return w;
}

std::vector<AwTerm> aw_coproduct(const SimplicialSet& X, int simplex) {
  std::vector<AwTerm> out;
  SimplexRef self = X.identity(simplex);
  int n = self.dim();
  for (int p = 0; p <= n; ++p) {
    SimplexRef f = X.front(self, p);
    SimplexRef b = X.back(self, n - p);
    if (f.nondegenerate() && b.nondegenerate()) out.push_back({f.target, b.target});
  }
  return out;
}

}  // namespace coloop
