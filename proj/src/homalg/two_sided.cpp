#include "coloop/homalg/two_sided.hpp"

#include <functional>

namespace coloop {

BarComplex::BarComplex(const CobarAlgebra& A) : A_(&A), basis_(A.max_degree()) {
  int top = A.max_degree();
  WordBound bound = A.bound();
  std::vector<Monomial> bars;
  std::function<void(const Monomial&, int, std::size_t)> extend = [&](const Monomial& left, int deg,
                                                                      std::size_t used) {
    int at = bars.empty() ? left.target : bars.back().target;
    for (const auto& right : A.monomials_from(at)) {
      int d = deg + A.degree(right);
      if (d <= top && bound.allows(used + right.length())) basis_.add(d, BarGenerator{left, bars, right});
    }
    for (const auto& a : A.monomials_from(at)) {
      if (a.identity()) continue;
      int d = deg + A.degree(a) + 1;
      if (d > top || !bound.allows(used + a.length())) continue;
      bars.push_back(a);
      extend(left, d, used + a.length());
      bars.pop_back();
    }
  };
  for (const auto& left : A.monomials()) extend(left, A.degree(left), left.length());
  basis_.finalize();
}

int bar_degree(const CobarAlgebra& A, const BarGenerator& g) {
  int d = 0;
  for (const auto& a : g.bars) d += A.degree(a) + 1;
  return d;
}

int BarComplex::bar_degree(const BarGenerator& g) const { return coloop::bar_degree(*A_, g); }

int BarComplex::degree(const BarGenerator& g) const {
  return A_->degree(g.left) + bar_degree(g) + A_->degree(g.right);
}

std::string BarComplex::label(const BarGenerator& g) const {
  std::string s = A_->label(g.left) + "[";
  for (std::size_t i = 0; i < g.bars.size(); ++i) s += (i ? "|" : "") + A_->label(g.bars[i]);
  return s + "]" + A_->label(g.right);
}

Chain<BarGenerator> BarComplex::differential(const BarGenerator& g) const { return bar_differential(*A_, g); }

Chain<BarGenerator> bar_differential(const CobarAlgebra& A, const BarGenerator& g) {
  Chain<BarGenerator> out;
  std::size_t p = g.bars.size();
  for (const auto& [m, v] : A.differential(g.left)) add_term(out, BarGenerator{m, g.bars, g.right}, v);
  int eps = A.degree(g.left);
  for (std::size_t i = 0; i < p; ++i) {
    for (const auto& [m, v] : A.differential(g.bars[i])) {
      if (m.identity()) continue;
      BarGenerator h = g;
      h.bars[i] = m;
      add_term(out, h, Integer(-koszul(eps) * v));
    }
    eps += A.degree(g.bars[i]) + 1;
  }
  for (const auto& [m, v] : A.differential(g.right))
    add_term(out, BarGenerator{g.left, g.bars, m}, Integer(koszul(eps) * v));

  eps = A.degree(g.left);
  for (std::size_t i = 0; i + 1 < p; ++i) {
    eps += A.degree(g.bars[i]) + 1;
    BarGenerator h{g.left, {}, g.right};
    for (std::size_t j = 0; j < p; ++j) {
      if (j == i) {
        h.bars.push_back(*A.compose(g.bars[i], g.bars[i + 1]));
        ++j;
      } else {
        h.bars.push_back(g.bars[j]);
      }
    }
    add_term(out, h, Integer(koszul(eps)));
  }
  if (p >= 1) {
    BarGenerator h{*A.compose(g.left, g.bars.front()), {g.bars.begin() + 1, g.bars.end()}, g.right};
    add_term(out, h, Integer(koszul(A.degree(g.left))));
    int before_last = A.degree(g.left);
    for (std::size_t i = 0; i + 1 < p; ++i) before_last += A.degree(g.bars[i]) + 1;
    BarGenerator k{g.left, {g.bars.begin(), g.bars.end() - 1}, *A.compose(g.bars.back(), g.right)};
    add_term(out, k, Integer(-koszul(before_last)));
  }
  return out;
}

ChainComplexWindow BarComplex::complex() const {
  return assemble_complex(
      basis_, [&](const BarGenerator& g) { return differential(g); },
      [](const BarGenerator& g) { return g.letters(); }, [&](const BarGenerator& g) { return label(g); },
      A_->bound(), A_->truncated());
}

QComplex::QComplex(const CobarAlgebra& A) : A_(&A), basis_(A.max_degree()) {
  const CategoricalCoalgebra& C = A.coalgebra();
  WordBound bound = A.bound();
  for (const auto& left : A.monomials())
    for (int c = 0; c < C.size(); ++c) {
      if (C.source(c) != left.target) continue;
      int d = A.degree(left) + C.degree(c);
      if (d > A.max_degree()) continue;
      for (const auto& right : A.monomials_from(C.target(c)))
        if (d + A.degree(right) <= A.max_degree() && bound.allows(left.length() + right.length()))
          basis_.add(d + A.degree(right), QGenerator{left, c, right});
    }
  basis_.finalize();
}

int q_degree(const CobarAlgebra& A, const QGenerator& g) {
  return A.degree(g.left) + A.coalgebra().degree(g.middle) + A.degree(g.right);
}

int QComplex::degree(const QGenerator& g) const { return q_degree(*A_, g); }

std::string QComplex::label(const QGenerator& g) const {
  return A_->label(g.left) + " [] " + A_->coalgebra().label(g.middle) + " [] " + A_->label(g.right);
}

Chain<QGenerator> QComplex::differential(const QGenerator& g) const { return q_differential(*A_, g); }

Chain<QGenerator> q_differential(const CobarAlgebra& A, const QGenerator& g) {
  const CategoricalCoalgebra& C = A.coalgebra();
  Chain<QGenerator> out;
  int a = A.degree(g.left);
  int c = C.degree(g.middle);
  for (const auto& [m, v] : A.differential(g.left)) add_term(out, QGenerator{m, g.middle, g.right}, v);
  for (const auto& [t, v] : C.boundary(g.middle))
    add_term(out, QGenerator{g.left, t, g.right}, Integer(koszul(a) * v));
  for (const auto& [m, v] : A.differential(g.right))
    add_term(out, QGenerator{g.left, g.middle, m}, Integer(koszul(a + c) * v));
  for (const auto& t : C.coproduct(g.middle)) {
    if (C.degree(t.left) >= 1)
      add_term(out, QGenerator{*A.compose(g.left, A.letter(t.left)), t.right, g.right},
               Integer(koszul(a) * t.coef));
    if (C.degree(t.right) >= 1)
      add_term(out, QGenerator{g.left, t.left, *A.compose(A.letter(t.right), g.right)},
               Integer(-koszul(a + C.degree(t.left)) * t.coef));
  }
  return out;
}

ChainComplexWindow QComplex::complex() const {
  return assemble_complex(
      basis_, [&](const QGenerator& g) { return differential(g); },
      [&](const QGenerator& g) { return letters(g); }, [&](const QGenerator& g) { return label(g); },
      A_->bound(), A_->truncated());
}

}  // namespace coloop
