#include "coloop/homalg/contraction.hpp"

namespace coloop {

std::vector<std::pair<Integer, std::vector<int>>> iterated_coproducts(const CategoricalCoalgebra& C, int c) {
  std::vector<std::pair<Integer, std::vector<int>>> all{{Integer(1), {c}}};
  std::vector<std::pair<Integer, std::vector<int>>> frontier = all;
  while (!frontier.empty()) {
    std::vector<std::pair<Integer, std::vector<int>>> next;
    for (const auto& [k, word] : frontier)
      for (const auto& t : C.coproduct(word.back())) {
        if (C.degree(t.left) < 1 || C.degree(t.right) < 1) continue;
        std::vector<int> split(word.begin(), word.end() - 1);
        split.push_back(t.left);
        split.push_back(t.right);
        next.push_back({k * t.coef, std::move(split)});
      }
    all.insert(all.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  return all;
}

Chain<QGenerator> contraction_pi(const CobarAlgebra& A, const BarGenerator& g) {
  Chain<QGenerator> out;
  if (g.bars.empty()) {
    add_term(out, QGenerator{g.left, g.left.target, g.right}, Integer(1));
    return out;
  }
  if (g.bars.size() > 1) return out;
  const auto& L = g.bars.front().letters;
  int before = 0;
  for (std::size_t i = 0; i < L.size(); ++i) {
    int c = L[i];
    Monomial head = A.word({L.begin(), L.begin() + i}, g.bars.front().source);
    Monomial tail = A.word({L.begin() + i + 1, L.end()}, A.coalgebra().target(c));
    add_term(out, QGenerator{*A.compose(g.left, head), c, *A.compose(tail, g.right)}, Integer(koszul(before)));
    before += A.letter_degree(c);
  }
  return out;
}

Chain<BarGenerator> contraction_alpha(const CobarAlgebra& A, const QGenerator& q) {
  Chain<BarGenerator> out;
  if (A.coalgebra().degree(q.middle) == 0) {
    add_term(out, BarGenerator{q.left, {}, q.right}, Integer(1));
    return out;
  }
  for (const auto& [k, word] : iterated_coproducts(A.coalgebra(), q.middle)) {
    BarGenerator b{q.left, {}, q.right};
    for (int c : word) b.bars.push_back(A.letter(c));
    add_term(out, b, k);
  }
  return out;
}

Chain<BarGenerator> contraction_homotopy(const CobarAlgebra& A, const BarGenerator& g) {
  Chain<BarGenerator> out;
  if (g.bars.empty() || g.bars.front().length() < 2) return out;
  const auto& C = A.coalgebra();
  const auto& L = g.bars.front().letters;
  int a0 = A.degree(g.left);
  for (std::size_t i = 0; i + 1 < L.size(); ++i) {
    int c = L[i];
    Monomial left = *A.compose(g.left, A.word({L.begin(), L.begin() + i}, g.bars.front().source));
    Monomial rest = A.word({L.begin() + i + 1, L.end()}, C.target(c));
    int sign = -koszul(a0 + C.degree(c));
    for (const auto& [k, word] : iterated_coproducts(C, c)) {
      BarGenerator b{left, {}, g.right};
      for (int x : word) b.bars.push_back(A.letter(x));
      b.bars.push_back(rest);
      b.bars.insert(b.bars.end(), g.bars.begin() + 1, g.bars.end());
      add_term(out, b, Integer(k * sign));
    }
  }
  return out;
}

Chain<CoHochGenerator> pi_bar(const CobarAlgebra& A, const HochGenerator& g) {
  Chain<CoHochGenerator> out;
  for (const auto& [q, v] : contraction_pi(A, hoch_section(A, g)))
    if (auto r = cohoch_project(A, q, g.tail)) add_term(out, r->first, Integer(v * r->second));
  return out;
}

Chain<HochGenerator> alpha_bar(const CobarAlgebra& A, const CoHochGenerator& g) {
  Chain<HochGenerator> out;
  for (const auto& [b, v] : contraction_alpha(A, cohoch_section(A, g)))
    if (auto r = hoch_project(A, b, g.word)) add_term(out, r->first, Integer(v * r->second));
  return out;
}

Chain<HochGenerator> homotopy_bar(const CobarAlgebra& A, const HochGenerator& g) {
  return descend_to_hoch(A, g, [&](const BarGenerator& b) { return contraction_homotopy(A, b); });
}

namespace {

std::size_t count_letters(const BarGenerator& g) { return g.letters(); }
std::size_t count_letters(const QGenerator& g) { return g.left.length() + g.right.length(); }
std::size_t count_letters(const HochGenerator& g) { return g.letters(); }
std::size_t count_letters(const CoHochGenerator& g) { return g.word.length(); }

template <class K, class L, class Op>
SparseMatrix map_matrix(const GradedBasis<K>& from, int n, const GradedBasis<L>& to, int m, Op&& op,
                        WordBound bound) {
  return operator_matrix(from, n, to, m, op, [](const L& k) { return count_letters(k); }, bound);
}

std::string at_degree(const std::string& what, int n) { return what + " (degree " + std::to_string(n) + ")"; }

}  // namespace

SparseMatrix pi_bar_matrix(const HochschildComplex& hoch, const CoHochschildComplex& cohoch, int n) {
  const CobarAlgebra& A = hoch.algebra();
  return map_matrix(
      hoch.basis(), n, cohoch.basis(), n, [&](const HochGenerator& g) { return pi_bar(A, g); }, A.bound());
}

SparseMatrix alpha_bar_matrix(const HochschildComplex& hoch, const CoHochschildComplex& cohoch, int n) {
  const CobarAlgebra& A = hoch.algebra();
  return map_matrix(
      cohoch.basis(), n, hoch.basis(), n, [&](const CoHochGenerator& g) { return alpha_bar(A, g); }, A.bound());
}

SparseMatrix homotopy_bar_matrix(const HochschildComplex& hoch, int n) {
  const CobarAlgebra& A = hoch.algebra();
  return map_matrix(
      hoch.basis(), n, hoch.basis(), n + 1, [&](const HochGenerator& g) { return homotopy_bar(A, g); },
      A.bound());
}

std::vector<IdentityCheck> contraction_checks(const CobarAlgebra& A) {
  std::vector<IdentityCheck> checks;
  WordBound bound = A.bound();
  int top = A.max_degree();

  BarComplex bar(A);
  QComplex q(A);
  auto pi = [&](int n) {
    return map_matrix(bar.basis(), n, q.basis(), n, [&](const BarGenerator& g) { return contraction_pi(A, g); },
                      bound);
  };
  auto alpha = [&](int n) {
    return map_matrix(q.basis(), n, bar.basis(), n, [&](const QGenerator& g) { return contraction_alpha(A, g); },
                      bound);
  };
  auto H = [&](int n) {
    return map_matrix(bar.basis(), n, bar.basis(), n + 1,
                      [&](const BarGenerator& g) { return contraction_homotopy(A, g); }, bound);
  };
  auto dB = [&](int n) {
    return map_matrix(bar.basis(), n, bar.basis(), n - 1,
                      [&](const BarGenerator& g) { return bar_differential(A, g); }, bound);
  };
  auto dQ = [&](int n) {
    return map_matrix(q.basis(), n, q.basis(), n - 1, [&](const QGenerator& g) { return q_differential(A, g); },
                      bound);
  };

  IdentityCheck pa{"pi alpha = id on Q", true, ""}, ht{"alpha pi - id = delta H + H delta", true, ""},
      pc{"pi is a chain map", true, ""}, ac{"alpha is a chain map", true, ""};
  auto absorb = [](IdentityCheck& into, IdentityCheck c, int n) {
    if (into.passed && !c.passed) {
      into.passed = false;
      into.detail = at_degree(c.detail, n);
    }
  };
  for (int n = 0; n < top; ++n) {
    std::size_t nb = bar.basis().at(n).size();
    absorb(pa, check_equal("", pi(n) * alpha(n), SparseMatrix::identity(q.basis().at(n).size())), n);
    SparseMatrix lhs = alpha(n) * pi(n) - SparseMatrix::identity(nb);
    SparseMatrix rhs = dB(n + 1) * H(n);
    if (n > 0) rhs = rhs + H(n - 1) * dB(n);
    absorb(ht, check_equal("", lhs, rhs), n);
    if (n > 0) {
      absorb(pc, check_equal("", dQ(n) * pi(n), pi(n - 1) * dB(n)), n);
      absorb(ac, check_equal("", dB(n) * alpha(n), alpha(n - 1) * dQ(n)), n);
    }
  }
  checks.insert(checks.end(), {pa, ht, pc, ac});

  HochschildComplex hoch(A);
  CoHochschildComplex cohoch(A);
  IdentityCheck pab{"pi-bar alpha-bar = id on coHoch", true, ""},
      htb{"alpha-bar pi-bar - id = delta H-bar + H-bar delta", true, ""},
      pcb{"pi-bar is a chain map", true, ""}, acb{"alpha-bar is a chain map", true, ""};
  for (int n = 0; n < top; ++n) {
    SparseMatrix P = pi_bar_matrix(hoch, cohoch, n), Al = alpha_bar_matrix(hoch, cohoch, n);
    absorb(pab, check_equal("", P * Al, SparseMatrix::identity(cohoch.basis().at(n).size())), n);
    SparseMatrix lhs = Al * P - SparseMatrix::identity(hoch.basis().at(n).size());
    SparseMatrix rhs = hoch.b_matrix(n + 1) * homotopy_bar_matrix(hoch, n);
    if (n > 0) rhs = rhs + homotopy_bar_matrix(hoch, n - 1) * hoch.b_matrix(n);
    absorb(htb, check_equal("", lhs, rhs), n);
    if (n > 0) {
      absorb(pcb, check_equal("", cohoch.b_matrix(n) * P, pi_bar_matrix(hoch, cohoch, n - 1) * hoch.b_matrix(n)),
             n);
      absorb(acb,
             check_equal("", hoch.b_matrix(n) * Al, alpha_bar_matrix(hoch, cohoch, n - 1) * cohoch.b_matrix(n)), n);
    }
  }
  checks.insert(checks.end(), {pab, htb, pcb, acb});
  return checks;
}

}  // namespace coloop
