#include "coloop/homalg/words.hpp"

#include <charconv>

#include "coloop/simplicial/coalgebra.hpp"

namespace coloop {

std::string monomial_label(const CategoricalCoalgebra& C, const Monomial& m) {
  if (m.identity()) return "id_" + C.label(m.source);
  std::string s = "{";
  for (std::size_t i = 0; i < m.letters.size(); ++i) {
    if (i) s += '|';
    s += C.label(m.letters[i]);
  }
  return s + "}";
}

IdentityCheck check_zero(std::string name, const SparseMatrix& m) {
  IdentityCheck check{std::move(name), true, ""};
  std::size_t r = 0, c = 0;
  Integer v;
  if (m.first_nonzero(r, c, v)) {
    check.passed = false;
    check.detail = "entry (" + std::to_string(r) + ", " + std::to_string(c) + ") = " + v.get_str();
  }
  return check;
}

IdentityCheck check_equal(std::string name, const SparseMatrix& lhs, const SparseMatrix& rhs) {
  if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols())
    return {std::move(name), false, "shape mismatch"};
  return check_zero(std::move(name), lhs - rhs);
}

bool all_passed(const std::vector<IdentityCheck>& checks) {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

WordCap WordCap::parse(const std::string& token) {
  if (token == "auto") return {};
  int v = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
  if (ec != std::errc() || ptr != token.data() + token.size() || v <= 0)
    throw ValidationError("word cap must be 'auto' or a positive integer, got '" + token + "'");
  return {false, v};
}

std::string WordCap::token() const { return automatic ? "auto" : std::to_string(value); }

}  // namespace coloop
