#include "coloop/simplicial/coalgebra.hpp"

#include <algorithm>
#include <tuple>

#include "coloop/errors.hpp"
#include "coloop/simplicial/builtins.hpp"
#include "coloop/simplicial/chains.hpp"

namespace coloop {

namespace {

int sign(int exponent) { return exponent % 2 == 0 ? 1 : -1; }

using Pair = std::pair<int, int>;
using Triple = std::tuple<int, int, int>;

template <class K>
void accumulate(std::map<K, Integer>& acc, const K& key, const Integer& v) {
  if (v == 0) return;
  auto [it, fresh] = acc.emplace(key, v);
  if (!fresh) {
    it->second += v;
    if (it->second == 0) acc.erase(it);
  }
}

}  // namespace

LinearImage normalize_image(std::map<int, Integer> acc) {
  LinearImage out;
  for (auto& [k, v] : acc)
    if (v != 0) out.emplace_back(k, v);
  return out;
}

CategoricalCoalgebra CategoricalCoalgebra::from_data(std::string name, std::vector<Element> elements,
                                                     std::vector<std::vector<CoproductTerm>> coproduct,
                                                     std::vector<LinearImage> boundary,
                                                     std::vector<Integer> curvature) {
  CategoricalCoalgebra C;
  C.name_ = std::move(name);
  C.elements_ = std::move(elements);
  C.coproduct_ = std::move(coproduct);
  C.boundary_ = std::move(boundary);
  C.curvature_ = std::move(curvature);
  std::size_t n = C.elements_.size();
  if (C.coproduct_.size() != n || C.boundary_.size() != n || C.curvature_.size() != n)
    throw ValidationError("coalgebra '" + C.name_ + "': structure maps do not match the basis size");
  for (std::size_t i = 0; i < n; ++i) {
    const auto& e = C.elements_[i];
    if (C.index_.count(e.label)) throw ValidationError("coalgebra: duplicate label '" + e.label + "'");
    C.index_[e.label] = static_cast<int>(i);
    if (e.degree == 0) C.objects_.push_back(static_cast<int>(i));
    if (e.source < 0 || e.target < 0 || e.source >= static_cast<int>(n) || e.target >= static_cast<int>(n))
      throw ValidationError("coalgebra: element '" + e.label + "' has endpoints out of range");
  }
  auto failures = C.axiom_failures();
  if (!failures.empty()) {
    std::string msg = "coalgebra '" + C.name_ + "' violates its axioms:";
    for (std::size_t k = 0; k < failures.size() && k < 8; ++k) msg += "\n  " + failures[k];
    throw IdentityFailure(msg);
  }
  return C;
}

int CategoricalCoalgebra::max_degree() const {
  int m = 0;
  for (const auto& e : elements_) m = std::max(m, e.degree);
  return m;
}

std::vector<int> CategoricalCoalgebra::of_degree(int n) const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i)
    if (elements_[i].degree == n) out.push_back(i);
  return out;
}

int CategoricalCoalgebra::index_of(const std::string& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) throw ValidationError("coalgebra: unknown element '" + label + "'");
  return it->second;
}

bool CategoricalCoalgebra::curved() const {
  for (const auto& h : curvature_)
    if (h != 0) return true;
  return false;
}

std::vector<std::string> CategoricalCoalgebra::axiom_failures() const {
  std::vector<std::string> fails;
  auto deg = [&](int i) { return elements_[i].degree; };
  for (int c = 0; c < size(); ++c) {
    const std::string& name = elements_[c].label;
    const auto& el = elements_[c];

    // degrees and set-like degree 0
    for (const auto& t : coproduct_[c])
      if (deg(t.left) + deg(t.right) != el.degree) fails.push_back("coproduct of " + name + " is not degree 0");
    for (const auto& [t, v] : boundary_[c])
      if (deg(t) != el.degree - 1) fails.push_back("boundary of " + name + " is not degree -1");
    if (curvature_[c] != 0 && el.degree != 2) fails.push_back("curvature nonzero off degree 2 at " + name);
    if (el.degree == 0) {
      if (coproduct_[c].size() != 1 || coproduct_[c][0].left != c || coproduct_[c][0].right != c ||
          coproduct_[c][0].coef != 1)
        fails.push_back("degree-0 element " + name + " is not set-like");
      if (el.source != c || el.target != c) fails.push_back("object " + name + " has wrong endpoints");
      continue;
    }
    if (deg(el.source) != 0 || deg(el.target) != 0)
      fails.push_back("endpoints of " + name + " are not objects");

    // counit, and the coactions rho_l / rho_r give source and target
    std::map<int, Integer> left_counit, right_counit;
    for (const auto& t : coproduct_[c]) {
      if (deg(t.left) == 0) {
        accumulate(left_counit, t.right, t.coef);
        if (t.left != el.source || t.right != c || t.coef != 1)
          fails.push_back("left coaction of " + name + " does not pick its source");
      }
      if (deg(t.right) == 0) {
        accumulate(right_counit, t.left, t.coef);
        if (t.right != el.target || t.left != c || t.coef != 1)
          fails.push_back("right coaction of " + name + " does not pick its target");
      }
    }
    std::map<int, Integer> self{{c, Integer(1)}};
    if (left_counit != self || right_counit != self) fails.push_back("counit fails at " + name);

    // coassociativity
    std::map<Triple, Integer> lhs, rhs;
    for (const auto& t : coproduct_[c]) {
      for (const auto& u : coproduct_[t.left])
        accumulate(lhs, Triple{u.left, u.right, t.right}, t.coef * u.coef);
      for (const auto& u : coproduct_[t.right])
        accumulate(rhs, Triple{t.left, u.left, u.right}, t.coef * u.coef);
    }
    if (lhs != rhs) fails.push_back("coassociativity fails at " + name);

    // d is a coderivation: Delta d = (d (x) id + id (x) d) Delta
    std::map<Pair, Integer> dl, dr;
    for (const auto& [t, v] : boundary_[c])
      for (const auto& u : coproduct_[t]) accumulate(dl, Pair{u.left, u.right}, v * u.coef);
    for (const auto& t : coproduct_[c]) {
      for (const auto& [b, v] : boundary_[t.left]) accumulate(dr, Pair{b, t.right}, t.coef * v);
      for (const auto& [b, v] : boundary_[t.right])
        accumulate(dr, Pair{t.left, b}, t.coef * v * sign(deg(t.left)));
    }
    if (dl != dr) fails.push_back("d is not a coderivation at " + name);

    if (el.degree == 1 && !boundary_[c].empty()) fails.push_back("projection to C_0 does not kill d at " + name);

    if (el.degree == 3) {
      Integer hd = 0;
      for (const auto& [t, v] : boundary_[c]) hd += v * curvature_[t];
      if (hd != 0) fails.push_back("h o d is nonzero at " + name);
    }

    // d^2 = (h (x) id)(Delta - Delta^op)
    std::map<int, Integer> dd, curv;
    for (const auto& [t, v] : boundary_[c])
      for (const auto& [t2, w] : boundary_[t]) accumulate(dd, t2, v * w);
    for (const auto& t : coproduct_[c]) {
      if (curvature_[t.left] != 0) accumulate(curv, t.right, t.coef * curvature_[t.left]);
      if (curvature_[t.right] != 0)
        accumulate(curv, t.left, -t.coef * curvature_[t.right] * sign(deg(t.left) * deg(t.right)));
    }
    if (dd != curv) fails.push_back("d^2 differs from the curvature term at " + name);
  }
  return fails;
}

CategoricalCoalgebra categorical_coalgebra(const SimplicialSet& X) {
  int n = X.size();
  std::vector<CategoricalCoalgebra::Element> elements(n);
  std::vector<std::vector<CoproductTerm>> coproduct(n);
  std::vector<LinearImage> boundary(n);
  std::vector<Integer> curvature(n, Integer(0));
  auto e = [&](int idx) { return X.dimension(idx) == 1 ? 1 : 0; };
  for (int idx = 0; idx < n; ++idx) {
    int dim = X.dimension(idx);
    elements[idx] = {X.id(idx), dim, X.first_vertex(idx), X.last_vertex(idx)};
    for (const auto& t : aw_coproduct(X, idx)) coproduct[idx].push_back({Integer(1), t.front, t.back});

    std::map<int, Integer> acc;
    Integer h = 0;
    SimplexRef self = X.identity(idx);
    if (dim > 0)
      for (int i = 0; i <= dim; ++i) {
        SimplexRef f = X.face(self, i);
        if (!f.nondegenerate()) continue;
        accumulate(acc, f.target, Integer(sign(i)));
        if (dim == 2) h += sign(i) * e(f.target);
      }
    for (const auto& t : coproduct[idx]) {
      // (id (x) e)(a (x) b) = (-1)^{|a|} a e(b);  (e (x) id)(a (x) b) = e(a) b
      if (e(t.right)) accumulate(acc, t.left, Integer(sign(X.dimension(t.left))));
      if (e(t.left)) accumulate(acc, t.right, Integer(-1));
      if (dim == 2 && e(t.left) && e(t.right)) h -= 1;
    }
    boundary[idx] = normalize_image(std::move(acc));
    curvature[idx] = h;
  }
  return CategoricalCoalgebra::from_data(X.name(), std::move(elements), std::move(coproduct),
                                         std::move(boundary), std::move(curvature));
}

CategoricalCoalgebra simplex_coalgebra(int n) {
  if (n < 0 || n > 20) throw ValidationError("simplex_coalgebra: dimension out of range");
  std::vector<std::vector<int>> subsets;
  for (unsigned mask = 1; mask < (1u << (n + 1)); ++mask) {
    std::vector<int> s;
    for (int v = 0; v <= n; ++v)
      if (mask & (1u << v)) s.push_back(v);
    subsets.push_back(s);
  }
  auto label = [&](const std::vector<int>& s) {
    std::string id;
    for (std::size_t k = 0; k < s.size(); ++k) {
      if (k && n >= 10) id += ',';
      id += std::to_string(s[k]);
    }
    return id;
  };
  std::stable_sort(subsets.begin(), subsets.end(), [&](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return label(a) < label(b);
  });
  std::map<std::vector<int>, int> index;
  for (std::size_t i = 0; i < subsets.size(); ++i) index[subsets[i]] = static_cast<int>(i);

  std::size_t m = subsets.size();
  std::vector<CategoricalCoalgebra::Element> elements(m);
  std::vector<std::vector<CoproductTerm>> coproduct(m);
  std::vector<LinearImage> boundary(m);
  std::vector<Integer> curvature(m, Integer(0));
  for (std::size_t i = 0; i < m; ++i) {
    const auto& s = subsets[i];
    int k = static_cast<int>(s.size()) - 1;
    elements[i] = {label(s), k, index.at({s.front()}), index.at({s.back()})};
    for (int p = 0; p <= k; ++p) {
      std::vector<int> f(s.begin(), s.begin() + p + 1), b(s.begin() + p, s.end());
      coproduct[i].push_back({Integer(1), index.at(f), index.at(b)});
    }
    std::map<int, Integer> acc;
    for (int j = 1; j < k; ++j) {
      std::vector<int> f = s;
      f.erase(f.begin() + j);
      accumulate(acc, index.at(f), Integer(sign(j)));
    }
    boundary[i] = normalize_image(std::move(acc));
  }
  return CategoricalCoalgebra::from_data("simplex/" + std::to_string(n), std::move(elements),
                                         std::move(coproduct), std::move(boundary), std::move(curvature));
}

}  // namespace coloop
