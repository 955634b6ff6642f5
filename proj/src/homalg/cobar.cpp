#include "coloop/homalg/cobar.hpp"

#include <algorithm>

namespace coloop {

bool degree_one_quiver_acyclic(const CategoricalCoalgebra& C) {
  std::map<int, std::vector<int>> out;
  for (int c : C.of_degree(1)) out[C.source(c)].push_back(C.target(c));
  // 0 unvisited, 1 on stack, 2 done
  std::map<int, int> state;
  std::function<bool(int)> cyclic_from = [&](int v) {
    state[v] = 1;
    for (int w : out[v]) {
      if (state[w] == 1) return true;
      if (state[w] == 0 && cyclic_from(w)) return true;
    }
    state[v] = 2;
    return false;
  };
  for (int x : C.objects())
    if (state[x] == 0 && cyclic_from(x)) return false;
  return true;
}

int automatic_word_cap(int max_degree) { return std::max(4, max_degree + 3); }

CobarAlgebra::CobarAlgebra(const CategoricalCoalgebra& C, int max_degree, WordCap cap)
    : C_(&C), max_degree_(max_degree) {
  if (max_degree < 0) throw ValidationError("cobar: max degree must be nonnegative");
  for (int c = 0; c < C.size(); ++c)
    if (C.degree(c) >= 1) letters_.push_back(c);

  letter_d_.resize(C.size());
  for (int c : letters_) {
    Chain<Monomial>& out = letter_d_[c];
    int x = C.source(c), y = C.target(c);
    for (const auto& [t, v] : C.boundary(c))
      if (C.degree(t) >= 1) add_term(out, Monomial{x, y, {t}}, Integer(-v));
    for (const auto& term : C.coproduct(c))
      if (C.degree(term.left) >= 1 && C.degree(term.right) >= 1)
        add_term(out, Monomial{x, y, {term.left, term.right}}, term.coef * koszul(C.degree(term.left)));
    if (C.curvature(c) != 0 && x == y) add_term(out, identity(x), Integer(-C.curvature(c)));
  }

  if (degree_one_quiver_acyclic(C)) {
    enumerate(-1);
    std::size_t longest = 0;
    for (const auto& m : monomials_) longest = std::max(longest, m.length());
    if (!cap.automatic && static_cast<int>(longest) > cap.value) {
      truncated_ = true;
      enumerate(cap.value);
    }
  } else {
    truncated_ = true;
    enumerate(cap.automatic ? automatic_word_cap(max_degree) : cap.value);
  }
  if (truncated_)
    warnings_.push_back("not certified: word-length truncated (cap " + std::to_string(cap_) + ") for '" +
                        C.name() + "'");
}

void CobarAlgebra::enumerate(int cap) {
  cap_ = cap;
  monomials_.clear();
  by_source_.clear();
  for (int x : C_->objects()) monomials_.push_back(identity(x));
  std::vector<std::pair<Monomial, int>> frontier;
  for (int c : letters_)
    if (letter_degree(c) <= max_degree_) frontier.push_back({letter(c), letter_degree(c)});
  while (!frontier.empty()) {
    std::vector<std::pair<Monomial, int>> next;
    for (auto& [m, d] : frontier) {
      if (cap < 0 || static_cast<int>(m.length()) < cap)
        for (int c : letters_)
          if (C_->source(c) == m.target && d + letter_degree(c) <= max_degree_) {
            Monomial w = m;
            w.letters.push_back(c);
            w.target = C_->target(c);
            next.push_back({std::move(w), d + letter_degree(c)});
          }
      monomials_.push_back(std::move(m));
    }
    frontier = std::move(next);
  }
  std::sort(monomials_.begin(), monomials_.end());
  for (const auto& m : monomials_) by_source_[m.source].push_back(m);
}

int CobarAlgebra::degree(const Monomial& m) const {
  int d = 0;
  for (int c : m.letters) d += letter_degree(c);
  return d;
}

std::optional<Monomial> CobarAlgebra::compose(const Monomial& a, const Monomial& b) const {
  if (a.target != b.source) return std::nullopt;
  Monomial m{a.source, b.target, a.letters};
  m.letters.insert(m.letters.end(), b.letters.begin(), b.letters.end());
  return m;
}

Monomial CobarAlgebra::word(std::vector<int> letters, int object) const {
  if (letters.empty()) return identity(object);
  Monomial m{C_->source(letters.front()), C_->target(letters.back()), std::move(letters)};
  return m;
}

Chain<Monomial> CobarAlgebra::differential(const Monomial& m) const {
  Chain<Monomial> out;
  int before = 0;
  for (std::size_t i = 0; i < m.letters.size(); ++i) {
    int c = m.letters[i];
    for (const auto& [piece, v] : letter_d_[c]) {
      std::vector<int> letters(m.letters.begin(), m.letters.begin() + i);
      letters.insert(letters.end(), piece.letters.begin(), piece.letters.end());
      letters.insert(letters.end(), m.letters.begin() + i + 1, m.letters.end());
      add_term(out, word(std::move(letters), m.source), v * koszul(before));
    }
    before += letter_degree(c);
  }
  return out;
}

const std::vector<Monomial>& CobarAlgebra::monomials_from(int x) const {
  static const std::vector<Monomial> none;
  auto it = by_source_.find(x);
  return it == by_source_.end() ? none : it->second;
}

GradedBasis<Monomial> CobarAlgebra::hom_basis(int x, int y) const {
  GradedBasis<Monomial> basis(max_degree_);
  for (const auto& m : monomials_from(x))
    if (m.target == y) basis.add(degree(m), m);
  basis.finalize();
  return basis;
}

ChainComplexWindow CobarAlgebra::hom_complex(int x, int y) const {
  auto basis = hom_basis(x, y);
  return assemble_complex(
      basis, [&](const Monomial& m) { return differential(m); },
      [](const Monomial& m) { return m.length(); }, [&](const Monomial& m) { return label(m); }, bound(),
      truncated_);
}

}  // namespace coloop
