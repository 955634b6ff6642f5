#include "coloop/homalg/hochschild.hpp"

#include <functional>

namespace coloop {

namespace {

std::optional<Monomial> compose3(const CobarAlgebra& A, const Monomial& a, const Monomial& b,
                                 const Monomial& c) {
  auto ab = A.compose(a, b);
  if (!ab) return std::nullopt;
  return A.compose(*ab, c);
}

}  // namespace

BarGenerator hoch_section(const CobarAlgebra& A, const HochGenerator& g) {
  return {A.identity(g.tail.target), g.bars, A.identity(g.tail.source)};
}

std::optional<std::pair<HochGenerator, int>> hoch_project(const CobarAlgebra& A, const BarGenerator& b,
                                                          const Monomial& m) {
  auto w = compose3(A, b.right, m, b.left);
  if (!w) return std::nullopt;
  long rest = bar_degree(A, b) + A.degree(b.right) + A.degree(m);
  return std::pair{HochGenerator{b.bars, *w}, koszul(A.degree(b.left) * rest)};
}

QGenerator cohoch_section(const CobarAlgebra& A, const CoHochGenerator& g) {
  const auto& C = A.coalgebra();
  return {A.identity(C.source(g.head)), g.head, A.identity(C.target(g.head))};
}

std::optional<std::pair<CoHochGenerator, int>> cohoch_project(const CobarAlgebra& A, const QGenerator& q,
                                                              const Monomial& m) {
  auto w = compose3(A, q.right, m, q.left);
  if (!w) return std::nullopt;
  long rest = A.coalgebra().degree(q.middle) + A.degree(q.right) + A.degree(m);
  return std::pair{CoHochGenerator{q.middle, *w}, koszul(A.degree(q.left) * rest)};
}

HochschildComplex::HochschildComplex(const CobarAlgebra& A) : A_(&A), basis_(A.max_degree()) {
  int top = A.max_degree();
  WordBound bound = A.bound();
  for (const auto& m : A.monomials())
    if (m.source == m.target) basis_.add(A.degree(m), HochGenerator{{}, m});
  std::vector<Monomial> bars;
  std::function<void(int, std::size_t)> extend = [&](int deg, std::size_t used) {
    int first = bars.front().source;
    for (const auto& a : A.monomials_from(bars.back().target)) {
      if (a.target == first && deg + A.degree(a) <= top && bound.allows(used + a.length()))
        basis_.add(deg + A.degree(a), HochGenerator{bars, a});
      if (a.identity() || deg + A.degree(a) + 1 > top || !bound.allows(used + a.length())) continue;
      bars.push_back(a);
      extend(deg + A.degree(a) + 1, used + a.length());
      bars.pop_back();
    }
  };
  for (const auto& a : A.monomials()) {
    if (a.identity() || A.degree(a) + 1 > top) continue;
    bars.push_back(a);
    extend(A.degree(a) + 1, a.length());
    bars.pop_back();
  }
  basis_.finalize();
}

int HochschildComplex::bar_degree(const HochGenerator& g) const {
  int d = 0;
  for (const auto& a : g.bars) d += A_->degree(a) + 1;
  return d;
}

int HochschildComplex::degree(const HochGenerator& g) const { return bar_degree(g) + A_->degree(g.tail); }

std::string HochschildComplex::label(const HochGenerator& g) const {
  std::string s = "[";
  for (std::size_t i = 0; i < g.bars.size(); ++i) s += (i ? "|" : "") + A_->label(g.bars[i]);
  return s + "]" + A_->label(g.tail);
}

Chain<HochGenerator> HochschildComplex::differential(const HochGenerator& g) const {
  const CobarAlgebra& A = *A_;
  Chain<HochGenerator> out = descend_to_hoch(A, g, [&](const BarGenerator& b) { return bar_differential(A, b); });
  BarGenerator sec = hoch_section(A, g);
  int t = bar_degree(g);
  for (const auto& [m, v] : A.differential(g.tail))
    if (auto r = hoch_project(A, sec, m)) add_term(out, r->first, Integer(koszul(t) * r->second * v));
  return out;
}

Chain<HochGenerator> HochschildComplex::connes(const HochGenerator& g) const {
  Chain<HochGenerator> out;
  if (g.tail.identity()) return out;
  std::vector<Monomial> items = g.bars;
  items.push_back(g.tail);
  std::vector<long> shifted;
  for (const auto& a : items) shifted.push_back(A_->degree(a) + 1);
  long t = 0;
  for (std::size_t j = 0; j + 1 < items.size(); ++j) t += shifted[j];
  long total = t + shifted.back();
  long before = 0;
  for (std::size_t i = 0; i < items.size(); ++i) {
    std::vector<Monomial> rotated(items.begin() + i, items.end());
    rotated.insert(rotated.end(), items.begin(), items.begin() + i);
    int x = rotated.front().source;
    add_term(out, HochGenerator{rotated, A_->identity(x)}, Integer(koszul(t) * koszul(before * (total - before))));
    before += shifted[i];
  }
  return out;
}

ChainComplexWindow HochschildComplex::complex() const {
  return assemble_complex(
      basis_, [&](const HochGenerator& g) { return differential(g); },
      [](const HochGenerator& g) { return g.letters(); }, [&](const HochGenerator& g) { return label(g); },
      A_->bound(), A_->truncated());
}

SparseMatrix HochschildComplex::b_matrix(int n) const {
  return operator_matrix(
      basis_, n, basis_, n - 1, [&](const HochGenerator& g) { return differential(g); },
      [](const HochGenerator& g) { return g.letters(); }, A_->bound());
}

SparseMatrix HochschildComplex::B_matrix(int n) const {
  return operator_matrix(
      basis_, n, basis_, n + 1, [&](const HochGenerator& g) { return connes(g); },
      [](const HochGenerator& g) { return g.letters(); }, A_->bound());
}

CoHochschildComplex::CoHochschildComplex(const CobarAlgebra& A) : A_(&A), basis_(A.max_degree()) {
  const auto& C = A.coalgebra();
  WordBound bound = A.bound();
  for (int c = 0; c < C.size(); ++c) {
    if (C.degree(c) > A.max_degree()) continue;
    for (const auto& w : A.monomials_from(C.target(c)))
      if (w.target == C.source(c) && C.degree(c) + A.degree(w) <= A.max_degree() && bound.allows(w.length()))
        basis_.add(C.degree(c) + A.degree(w), CoHochGenerator{c, w});
  }
  basis_.finalize();
}

int CoHochschildComplex::degree(const CoHochGenerator& g) const {
  return A_->coalgebra().degree(g.head) + A_->degree(g.word);
}

std::string CoHochschildComplex::label(const CoHochGenerator& g) const {
  std::string s = A_->coalgebra().label(g.head) + "{";
  for (std::size_t i = 0; i < g.word.letters.size(); ++i)
    s += (i ? "|" : "") + A_->coalgebra().label(g.word.letters[i]);
  return s + "}";
}

Chain<CoHochGenerator> CoHochschildComplex::differential(const CoHochGenerator& g) const {
  const CobarAlgebra& A = *A_;
  Chain<CoHochGenerator> out;
  QGenerator sec = cohoch_section(A, g);
  for (const auto& [q, v] : q_differential(A, sec))
    if (auto r = cohoch_project(A, q, g.word)) add_term(out, r->first, Integer(v * r->second));
  int c = A.coalgebra().degree(g.head);
  for (const auto& [m, v] : A.differential(g.word))
    if (auto r = cohoch_project(A, sec, m)) add_term(out, r->first, Integer(koszul(c) * r->second * v));
  return out;
}

Chain<CoHochGenerator> CoHochschildComplex::rotation(const CoHochGenerator& g) const {
  Chain<CoHochGenerator> out;
  const auto& C = A_->coalgebra();
  if (C.degree(g.head) != 0) return out;
  const auto& L = g.word.letters;
  long total = 0;
  for (int c : L) total += A_->letter_degree(c);
  long before = 0;
  for (std::size_t i = 0; i < L.size(); ++i) {
    std::vector<int> rest(L.begin() + i + 1, L.end());
    rest.insert(rest.end(), L.begin(), L.begin() + i);
    add_term(out, CoHochGenerator{L[i], A_->word(rest, C.target(L[i]))}, Integer(koszul(before * (total - before))));
    before += A_->letter_degree(L[i]);
  }
  return out;
}

ChainComplexWindow CoHochschildComplex::complex() const {
  return assemble_complex(
      basis_, [&](const CoHochGenerator& g) { return differential(g); },
      [](const CoHochGenerator& g) { return g.word.length(); },
      [&](const CoHochGenerator& g) { return label(g); }, A_->bound(), A_->truncated());
}

SparseMatrix CoHochschildComplex::b_matrix(int n) const {
  return operator_matrix(
      basis_, n, basis_, n - 1, [&](const CoHochGenerator& g) { return differential(g); },
      [](const CoHochGenerator& g) { return g.word.length(); }, A_->bound());
}

SparseMatrix CoHochschildComplex::B_matrix(int n) const {
  return operator_matrix(
      basis_, n, basis_, n + 1, [&](const CoHochGenerator& g) { return rotation(g); },
      [](const CoHochGenerator& g) { return g.word.length(); }, A_->bound());
}

}  // namespace coloop
