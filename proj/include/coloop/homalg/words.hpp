#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "coloop/errors.hpp"
#include "coloop/exactalg/chain_complex.hpp"
#include "coloop/exactalg/sparse_matrix.hpp"

namespace coloop {

inline int koszul(long exponent) { return exponent % 2 == 0 ? 1 : -1; }

// Composable word {c1|...|cp} of positive-degree coalgebra elements from
// source to target. The empty word is id_source.
struct Monomial {
  int source = -1;
  int target = -1;
  std::vector<int> letters;

  bool identity() const { return letters.empty(); }
  std::size_t length() const { return letters.size(); }

  // length first, then letters, then endpoints
  friend bool operator<(const Monomial& a, const Monomial& b) {
    if (a.letters.size() != b.letters.size()) return a.letters.size() < b.letters.size();
    if (a.letters != b.letters) return a.letters < b.letters;
    if (a.source != b.source) return a.source < b.source;
    return a.target < b.target;
  }
  bool operator==(const Monomial&) const = default;
};

template <class K>
using Chain = std::map<K, Integer>;

template <class K>
void add_term(Chain<K>& chain, const K& key, const Integer& coef) {
  if (coef == 0) return;
  auto [it, fresh] = chain.emplace(key, coef);
  if (!fresh) {
    it->second += coef;
    if (it->second == 0) chain.erase(it);
  }
}

template <class K>
void add_chain(Chain<K>& chain, const Chain<K>& other, const Integer& scale = 1) {
  for (const auto& [k, v] : other) add_term(chain, k, v * scale);
}

template <class K, class F>
Chain<K> apply_linear(const Chain<K>& chain, F&& f) {
  Chain<K> out;
  for (const auto& [k, v] : chain) add_chain(out, f(k), v);
  return out;
}

// Ordered generators per degree in [0, top].
template <class K>
class GradedBasis {
 public:
  explicit GradedBasis(int top = -1) : by_degree_(top + 1) {}

  int top() const { return static_cast<int>(by_degree_.size()) - 1; }
  void add(int degree, K key) {
    if (degree >= 0 && degree <= top()) by_degree_[degree].push_back(std::move(key));
  }
  void finalize() {
    index_.assign(by_degree_.size(), {});
    for (std::size_t n = 0; n < by_degree_.size(); ++n) {
      auto& level = by_degree_[n];
      std::sort(level.begin(), level.end());
      level.erase(std::unique(level.begin(), level.end()), level.end());
      for (std::size_t i = 0; i < level.size(); ++i) index_[n].emplace(level[i], i);
    }
  }
  const std::vector<K>& at(int n) const {
    static const std::vector<K> none;
    return n < 0 || n > top() ? none : by_degree_[n];
  }
  std::optional<std::size_t> find(int n, const K& key) const {
    if (n < 0 || n > top()) return std::nullopt;
    auto it = index_[n].find(key);
    if (it == index_[n].end()) return std::nullopt;
    return it->second;
  }
  std::size_t total() const {
    std::size_t s = 0;
    for (const auto& level : by_degree_) s += level.size();
    return s;
  }

 private:
  std::vector<std::vector<K>> by_degree_;
  std::vector<std::map<K, std::size_t>> index_;
};

// Describes what to do with an image term that is not in the target basis:
// terms longer than the word cap are dropped (the cap only removes a
// subcomplex of long words), anything else is an internal error.
struct WordBound {
  int cap = -1;  // -1: no cap
  bool allows(std::size_t letters) const { return cap < 0 || static_cast<int>(letters) <= cap; }
};

// Matrix of a linear operator between two degrees of graded bases.
template <class K, class L, class Op, class Count>
SparseMatrix operator_matrix(const GradedBasis<K>& from_basis, int from, const GradedBasis<L>& to_basis,
                             int to, Op&& op, Count&& letters, WordBound bound) {
  const auto& src = from_basis.at(from);
  const auto& dst = to_basis.at(to);
  SparseMatrix m(dst.size(), src.size());
  for (std::size_t c = 0; c < src.size(); ++c) {
    SparseMatrix::Column col;
    for (const auto& [key, coef] : op(src[c])) {
      auto row = to_basis.find(to, key);
      if (!row) {
        if (!bound.allows(letters(key))) continue;
        throw IdentityFailure("operator image leaves the enumerated basis in degree " + std::to_string(to));
      }
      col.push_back({*row, coef});
    }
    m.set_column(c, std::move(col));
  }
  return m;
}

// Chain complex on degrees [0, top] of a graded basis; degree top is an
// open edge, degree 0 is complete.
template <class K, class Op, class Count, class Label>
ChainComplexWindow assemble_complex(const GradedBasis<K>& basis, Op&& d, Count&& letters, Label&& label,
                                    WordBound bound, bool truncated) {
  ChainComplexWindow w;
  w.lo = 0;
  w.hi = basis.top();
  w.complete_below = true;
  w.complete_above = false;
  w.truncated = truncated;
  if (truncated) w.truncation_note = "word-length truncated";
  for (int n = 0; n <= basis.top(); ++n) {
    std::vector<std::string> labels;
    for (const auto& k : basis.at(n)) labels.push_back(label(k));
    w.labels.push_back(std::move(labels));
    w.boundary.push_back(operator_matrix(basis, n, basis, n - 1, d, letters, bound));
  }
  return w;
}

// One named matrix identity and whether it held; detail names the first
// failing entry.
struct IdentityCheck {
  std::string name;
  bool passed = true;
  std::string detail;
};

IdentityCheck check_zero(std::string name, const SparseMatrix& m);
IdentityCheck check_equal(std::string name, const SparseMatrix& lhs, const SparseMatrix& rhs);
bool all_passed(const std::vector<IdentityCheck>& checks);

class CategoricalCoalgebra;

// "{012|123}", or "id_v" for the empty word at v.
std::string monomial_label(const CategoricalCoalgebra& C, const Monomial& m);

// Word-length cap setting: automatic, or an explicit bound on the total
// number of cobar letters in a generator.
struct WordCap {
  bool automatic = true;
  int value = 0;

  static WordCap parse(const std::string& token);  // "auto" or a positive integer
  std::string token() const;
};

}  // namespace coloop
