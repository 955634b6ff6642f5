#pragma once

#include <algorithm>
#include <set>
#include <vector>

#include "coloop/exactalg/ring.hpp"

namespace coloop::testing {

using Point = std::vector<Rational>;

// Basis of the nullspace of a rational matrix, by reduced row echelon form.
inline std::vector<Point> nullspace(std::vector<Point> m, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    Rational inv = 1 / m[r][c];
    for (auto& v : m[r]) v *= inv;
    for (std::size_t i = 0; i < m.size(); ++i)
      if (i != r && m[i][c] != 0) {
        Rational f = m[i][c];
        for (std::size_t j = 0; j < cols; ++j) m[i][j] -= f * m[r][j];
      }
    pivots.push_back(c);
    ++r;
  }
  std::vector<Point> out;
  for (std::size_t free = 0; free < cols; ++free) {
    if (std::find(pivots.begin(), pivots.end(), free) != pivots.end()) continue;
    Point v(cols, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m[i][free];
    out.push_back(v);
  }
  return out;
}

inline std::size_t affine_rank(const std::vector<Point>& pts) {
  if (pts.empty()) return 0;
  std::size_t n = pts[0].size();
  std::vector<Point> rows;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    Point d(n);
    for (std::size_t j = 0; j < n; ++j) d[j] = pts[i][j] - pts[0][j];
    rows.push_back(d);
  }
  if (rows.empty()) return 0;
  return n - nullspace(rows, n).size();
}

struct Hull {
  std::set<Point> facets;  // (c_1..c_n, b) with c.x <= b, scaled so the first nonzero |entry| is 1
  std::vector<Point> vertices;
};

// Facets of a full-dimensional polytope by brute force over n-subsets of the
// points; vertices are the points lying on facets whose normals span R^n.
inline Hull exact_hull(const std::vector<Point>& pts) {
  std::size_t n = pts[0].size(), N = pts.size();
  Hull h;
  std::vector<std::size_t> idx(n);
  for (std::size_t i = 0; i < n; ++i) idx[i] = i;
  while (true) {
    std::vector<Point> rows;
    for (auto i : idx) {
      Point row(pts[i]);
      row.push_back(-1);
      rows.push_back(row);
    }
    auto ns = nullspace(rows, n + 1);
    if (ns.size() == 1) {
      Point c = ns[0];
      int above = 0, below = 0;
      for (const auto& p : pts) {
        Rational s = -c[n];
        for (std::size_t j = 0; j < n; ++j) s += c[j] * p[j];
        if (s > 0) ++above;
        if (s < 0) ++below;
      }
      if (above == 0 || below == 0) {
        if (above > 0) for (auto& v : c) v = -v;
        Rational scale = 0;
        for (const auto& v : c)
          if (v != 0) {
            scale = abs(v);
            break;
          }
        for (auto& v : c) v /= scale;
        h.facets.insert(c);
      }
    }
    std::size_t k = n;
    while (k > 0 && idx[k - 1] == N - n + k - 1) --k;
    if (k == 0) break;
    ++idx[k - 1];
    for (std::size_t j = k; j < n; ++j) idx[j] = idx[j - 1] + 1;
  }
  for (const auto& p : pts) {
    std::vector<Point> normals;
    for (const auto& f : h.facets) {
      Rational s = -f[n];
      for (std::size_t j = 0; j < n; ++j) s += f[j] * p[j];
      if (s == 0) normals.push_back(Point(f.begin(), f.end() - 1));
    }
    if (!normals.empty() && n - nullspace(normals, n).size() == n) h.vertices.push_back(p);
  }
  return h;
}

}  // namespace coloop::testing
