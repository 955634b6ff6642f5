#include "coloop/polytope/freehedron.hpp"

#include <algorithm>
#include <set>

#include "coloop/errors.hpp"

namespace coloop {

std::string FacetLabel::name(int n) const {
  std::string tail = std::to_string(i) + "," + std::to_string(n) + "}";
  switch (kind) {
    case FacetKind::zero_upper:
      return "C'_{0," + tail;
    case FacetKind::zero_lower:
      return "C''_{0," + tail;
    case FacetKind::zero_first:
      return "C_{0," + tail;
    case FacetKind::one:
      return "C_{1," + tail;
  }
  return "?";
}

std::vector<FacetLabel> facet_labels(int n) {
  std::vector<FacetLabel> out;
  for (int i = 2; i <= n; ++i) out.push_back({FacetKind::zero_upper, i});
  for (int i = 2; i <= n; ++i) out.push_back({FacetKind::zero_lower, i});
  if (n >= 1) out.push_back({FacetKind::zero_first, 1});
  for (int i = 1; i <= n; ++i) out.push_back({FacetKind::one, i});
  return out;
}

namespace {

std::vector<int> range(int a, int b) {
  std::vector<int> out;
  for (int v = a; v <= b; ++v) out.push_back(v);
  return out;
}

bool interior(const std::vector<int>& b, int x) {
  return b.front() < x && x < b.back() && std::binary_search(b.begin(), b.end(), x);
}

std::optional<NString> try_apply(const NString& s, const FaceTransformation& t) {
  try {
    return apply_transformation(s, t);
  } catch (const ValidationError&) {
    return std::nullopt;
  }
}

std::optional<NString> break_at(const NString& s, int x, FaceKind outer) {
  if (std::binary_search(s.marked().begin(), s.marked().end(), x)) return try_apply(s, {outer, s.l, x});
  for (int j = 0; j <= s.k(); ++j)
    if (j != s.l && interior(s.blocks[j], x)) return try_apply(s, {FaceKind::inner_break, j, x});
  return std::nullopt;
}

}  // namespace

NString facet_string(int n, const FacetLabel& f) {
  if (n < 1) throw ValidationError("facet_string: n must be positive");
  NString s;
  s.n = n;
  switch (f.kind) {
    case FacetKind::zero_upper:
      s.blocks = {range(0, f.i - 1), range(f.i - 1, n)};
      s.l = 1;
      break;
    case FacetKind::zero_lower:
      s.blocks = {range(0, f.i - 1), range(f.i - 1, n)};
      s.l = 0;
      break;
    case FacetKind::zero_first:
      s.blocks = {{0}, range(0, n)};
      s.l = 0;
      break;
    case FacetKind::one:
      if (f.i == 1) {
        s.blocks = {range(0, n), {n}};
        s.l = 1;
      } else {
        s.blocks = {range(0, n)};
        s.blocks[0].erase(s.blocks[0].begin() + (f.i - 1));
      }
      break;
  }
  if (!s.valid()) throw ValidationError("facet_string: no facet " + f.name(n));
  return s;
}

namespace {

std::optional<NString> transform_for_facet(const NString& s, const FacetLabel& f) {
  switch (f.kind) {
    case FacetKind::zero_upper:
      return break_at(s, f.i - 1, FaceKind::left_outer_break);
    case FacetKind::zero_lower:
      return break_at(s, f.i - 1, FaceKind::right_outer_break);
    case FacetKind::zero_first:
      return try_apply(s, {FaceKind::right_outer_break, s.l, s.marked().front()});
    case FacetKind::one:
      if (f.i == 1) return try_apply(s, {FaceKind::left_outer_break, s.l, s.marked().back()});
      for (int j = 0; j <= s.k(); ++j)
        if (interior(s.blocks[j], f.i - 1)) return try_apply(s, {FaceKind::drop, j, f.i - 1});
      return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace

std::optional<NString> intersect_with_facet(const FacePoset& P, const NString& s, const FacetLabel& f) {
  auto r = transform_for_facet(s, f);
  if (!r) return r;
  auto it = P.index.find(*r);
  if (it == P.index.end()) return std::nullopt;
  for (const auto& g : facets_containing(P, it->second))
    if (g == f) return r;
  return std::nullopt;
}

std::vector<std::size_t> FacePoset::f_vector() const {
  std::vector<std::size_t> out(n + 1, 0);
  for (const auto& s : faces) ++out.at(s.dimension());
  return out;
}

std::vector<std::size_t> FacePoset::of_dimension(int d) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < faces.size(); ++i)
    if (faces[i].dimension() == d) out.push_back(i);
  return out;
}

FacePoset enumerate_faces(int n) {
  if (n < 1 || n > max_freehedron_dimension)
    throw ValidationError("freehedron dimension must lie in [1, " + std::to_string(max_freehedron_dimension) + "]");
  std::set<NString> seen{top_string(n)};
  std::vector<NString> frontier{top_string(n)};
  while (!frontier.empty()) {
    std::vector<NString> next;
    for (const auto& s : frontier)
      for (const auto& t : applicable_transformations(s)) {
        NString f = apply_transformation(s, t);
        if (seen.insert(f).second) next.push_back(f);
      }
    frontier = std::move(next);
  }
  FacePoset P;
  P.n = n;
  P.faces.assign(seen.begin(), seen.end());
  std::stable_sort(P.faces.begin(), P.faces.end(),
                   [](const NString& a, const NString& b) { return a.dimension() > b.dimension(); });
  for (std::size_t i = 0; i < P.faces.size(); ++i) P.index.emplace(P.faces[i], i);
  P.covers.resize(P.faces.size());
  for (std::size_t i = 0; i < P.faces.size(); ++i) {
    std::set<std::size_t> below;
    for (const auto& t : applicable_transformations(P.faces[i]))
      below.insert(P.index.at(apply_transformation(P.faces[i], t)));
    P.covers[i].assign(below.begin(), below.end());
  }
  return P;
}

std::vector<FacetLabel> facets_containing(const FacePoset& P, std::size_t face) {
  std::vector<FacetLabel> out;
  for (const auto& f : facet_labels(P.n)) {
    std::size_t top = P.index.at(facet_string(P.n, f));
    std::vector<std::size_t> stack{top};
    std::set<std::size_t> visited{top};
    bool found = false;
    while (!stack.empty() && !found) {
      std::size_t v = stack.back();
      stack.pop_back();
      if (v == face) found = true;
      for (std::size_t w : P.covers[v])
        if (P.faces[w].dimension() >= P.faces[face].dimension() && visited.insert(w).second) stack.push_back(w);
    }
    if (found) out.push_back(f);
  }
  return out;
}

std::map<NString, std::vector<Rational>> vertex_coordinates(const FacePoset& P) {
  std::map<NString, std::vector<Rational>> out;
  for (std::size_t v : P.of_dimension(0)) {
    std::vector<std::optional<Rational>> a(P.n + 1);
    std::map<int, int> lower_upper;  // i -> bitmask of C'' (1) and C' (2)
    for (const auto& f : facets_containing(P, v)) {
      switch (f.kind) {
        case FacetKind::zero_upper:
          a[f.i] = 0;
          lower_upper[f.i] |= 2;
          break;
        case FacetKind::zero_lower:
          a[f.i] = 0;
          lower_upper[f.i] |= 1;
          break;
        case FacetKind::zero_first:
          a[1] = 0;
          break;
        case FacetKind::one:
          a[f.i] = 1;
          break;
      }
    }
    for (const auto& [i, mask] : lower_upper)
      if (mask == 3) a[1] = Rational(i - 1, P.n);
    std::vector<Rational> coords;
    for (int i = 1; i <= P.n; ++i) {
      if (!a[i]) throw IdentityFailure("vertex " + to_string(P.faces[v]) + " has no coordinate a_" + std::to_string(i));
      a[i]->canonicalize();
      coords.push_back(*a[i]);
    }
    out.emplace(P.faces[v], std::move(coords));
  }
  return out;
}

FreehedronCalculus::FreehedronCalculus(int n) : n_(n) {
  if (n < 1 || n > max_freehedron_dimension)
    throw ValidationError("freehedron dimension must lie in [1, " + std::to_string(max_freehedron_dimension) + "]");
  C_ = std::make_unique<CategoricalCoalgebra>(simplex_coalgebra(n));
  A_ = std::make_unique<CobarAlgebra>(*C_, n);
  for (int c = 0; c < C_->size(); ++c) {
    const std::string& label = C_->label(c);
    std::vector<int> vs;
    if (n >= 10) {
      std::size_t pos = 0;
      while (pos <= label.size()) {
        std::size_t comma = label.find(',', pos);
        vs.push_back(std::stoi(label.substr(pos, comma - pos)));
        if (comma == std::string::npos) break;
        pos = comma + 1;
      }
    } else {
      for (char ch : label) vs.push_back(ch - '0');
    }
    vertices_.push_back(std::move(vs));
  }
}

QGenerator FreehedronCalculus::to_q(const NString& s) const {
  if (s.n != n_) throw ValidationError("n-string dimension does not match the calculus");
  auto element = [&](const std::vector<int>& b) {
    auto it = std::find(vertices_.begin(), vertices_.end(), b);
    if (it == vertices_.end()) throw ValidationError("n-string block is not a simplex");
    return static_cast<int>(it - vertices_.begin());
  };
  std::vector<int> left, right;
  for (int i = 0; i < s.l; ++i) left.push_back(element(s.blocks[i]));
  for (int i = s.l + 1; i <= s.k(); ++i) right.push_back(element(s.blocks[i]));
  int middle = element(s.marked());
  return {A_->word(left, C_->source(middle)), middle, A_->word(right, C_->target(middle))};
}

NString FreehedronCalculus::from_q(const QGenerator& g) const {
  NString s;
  s.n = n_;
  for (int c : g.left.letters) s.blocks.push_back(vertices_.at(c));
  s.l = static_cast<int>(s.blocks.size());
  s.blocks.push_back(vertices_.at(g.middle));
  for (int c : g.right.letters) s.blocks.push_back(vertices_.at(c));
  auto bad = s.violations();
  if (!bad.empty()) throw ValidationError("Q generator is not an n-string: " + bad.front());
  return s;
}

SignedStringSum FreehedronCalculus::boundary(const NString& s) const {
  SignedStringSum out;
  for (const auto& [g, v] : q_differential(*A_, to_q(s))) out.emplace_back(v, from_q(g));
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.second < b.second; });
  return out;
}

SignedStringSum FreehedronCalculus::boundary(const SignedStringSum& sum) const {
  std::map<NString, Integer> acc;
  for (const auto& [v, s] : sum)
    for (const auto& [w, t] : boundary(s)) acc[t] += v * w;
  SignedStringSum out;
  for (auto& [s, v] : acc)
    if (v != 0) out.emplace_back(v, s);
  return out;
}

std::string to_string(const SignedStringSum& sum) {
  if (sum.empty()) return "0";
  std::string out;
  for (const auto& [v, s] : sum) {
    bool negative = v < 0;
    Integer mag = negative ? Integer(-v) : v;
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    if (mag != 1) out += mag.get_str() + " ";
    out += to_string(s);
  }
  return out;
}

}  // namespace coloop
