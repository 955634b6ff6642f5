#include "coloop/cyclic/cyclic_complex.hpp"

#include <map>
#include <utility>

#include "coloop/errors.hpp"

namespace coloop {

VariantShape variant_shape(CyclicVariant v) {
  switch (v) {
    case CyclicVariant::polynomial:
      return {true, false, false, false, true};
    case CyclicVariant::positive:
      return {true, false, true, false, true};
    case CyclicVariant::inverse_polynomial:
      return {false, true, false, false, false};
    case CyclicVariant::negative:
      return {false, true, false, true, false};
    case CyclicVariant::laurent:
      return {true, true, false, false, false};
    case CyclicVariant::laurent_series_u:
      return {true, true, true, false, false};
    case CyclicVariant::laurent_series_inverse:
      return {true, true, false, true, false};
    case CyclicVariant::periodic:
      return {true, true, true, true, false};
  }
  throw ValidationError("unknown cyclic variant");
}

std::string variant_name(CyclicVariant v) {
  VariantShape s = variant_shape(v);
  std::string open = s.series_in_u ? "[[" : "[";
  std::string close = s.series_in_inverse ? "]]" : "]";
  if (s.positive_powers && s.negative_powers) return "M" + open + "u, u^-1" + close;
  if (s.positive_powers) return "M" + open + "u" + (s.series_in_u ? "]]" : "]");
  return "M" + std::string(s.series_in_inverse ? "[[" : "[") + "u^-1" + close;
}

std::string variant_token(CyclicVariant v) {
  switch (v) {
    case CyclicVariant::positive:
      return "positive";
    case CyclicVariant::negative:
      return "negative";
    case CyclicVariant::periodic:
      return "periodic";
    default:
      return variant_name(v);
  }
}

const std::vector<CyclicVariant>& all_variants() {
  static const std::vector<CyclicVariant> all{
      CyclicVariant::polynomial, CyclicVariant::positive,         CyclicVariant::inverse_polynomial,
      CyclicVariant::negative,   CyclicVariant::laurent,          CyclicVariant::laurent_series_u,
      CyclicVariant::laurent_series_inverse, CyclicVariant::periodic};
  return all;
}

CyclicVariant parse_variant(const std::string& token) {
  for (CyclicVariant v : all_variants())
    if (token == variant_token(v) || token == variant_name(v)) return v;
  throw ValidationError("unknown cyclic variant '" + token + "'");
}

std::vector<int> exponents_at(const MixedComplexWindow& M, const CyclicVariantSpec& spec, int n) {
  VariantShape s = variant_shape(spec.variant);
  int lowest = s.negative_powers ? -spec.u_truncation : 0;
  int highest = s.positive_powers ? M.top : 0;
  std::vector<int> out;
  for (int i = lowest; i <= highest; ++i) {
    int k = n - 2 * i;
    if (k >= 0 && k <= M.top) out.push_back(i);
  }
  return out;
}

namespace {

// (exponent, index in M_{n-2i}) in the order used for the basis of degree n.
using Generator = std::pair<int, std::size_t>;

std::string power_label(const std::string& m, int i) {
  if (i == 0) return m;
  return m + " u^" + std::to_string(i);
}

}  // namespace

ChainComplexWindow cyclic_complex(const MixedComplexWindow& M, const CyclicVariantSpec& spec, int lo, int hi) {
  M.validate();
  if (lo > hi) throw ValidationError("cyclic complex: empty window");
  VariantShape shape = variant_shape(spec.variant);
  if (shape.negative_powers && spec.u_truncation < 0)
    throw ValidationError("cyclic complex: u truncation must be nonnegative");
  int reach = shape.negative_powers ? 2 * spec.u_truncation : 0;
  if (hi + reach > M.top)
    throw ValidationError("cyclic complex: degree " + std::to_string(hi) + " needs the mixed complex up to degree " +
                          std::to_string(hi + reach) + ", available up to " + std::to_string(M.top));
  int lowest = shape.negative_powers ? -spec.u_truncation : 0;

  auto generators = [&](int n) {
    std::vector<Generator> out;
    for (int i : exponents_at(M, spec, n))
      for (std::size_t k = 0; k < M.rank_at(n - 2 * i); ++k) out.emplace_back(i, k);
    return out;
  };
  auto boundary = [&](int n, const std::vector<Generator>& from, const std::vector<Generator>& to) {
    std::map<Generator, std::size_t> row;
    for (std::size_t r = 0; r < to.size(); ++r) row.emplace(to[r], r);
    SparseMatrix d(to.size(), from.size());
    for (std::size_t c = 0; c < from.size(); ++c) {
      auto [i, k] = from[c];
      int m = n - 2 * i;
      SparseMatrix::Column col;
      for (const auto& e : M.b[m].column(k)) col.push_back({row.at({i, e.row}), e.value});
      if (i - 1 >= lowest) {
        if (m >= M.top) throw ValidationError("cyclic complex: B leaves the mixed complex window");
        for (const auto& e : M.B[m].column(k)) col.push_back({row.at({i - 1, e.row}), e.value});
      }
      d.set_column(c, std::move(col));
    }
    return d;
  };

  ChainComplexWindow out;
  out.lo = lo;
  out.hi = hi;
  out.complete_below = true;
  std::vector<Generator> below = generators(lo - 1);
  for (int n = lo; n <= hi; ++n) {
    std::vector<Generator> here = generators(n);
    std::vector<std::string> labels;
    for (auto [i, k] : here) labels.push_back(power_label(M.labels[n - 2 * i][k], i));
    out.labels.push_back(std::move(labels));
    out.boundary.push_back(boundary(n, here, below));
    below = std::move(here);
  }
  if (hi + 1 + reach <= M.top) {
    out.complete_above = true;
    out.boundary_above = boundary(hi + 1, generators(hi + 1), below);
  }
  out.truncated = M.truncated || shape.negative_powers;
  if (shape.negative_powers)
    out.truncation_note = "not certified: u-adic truncation at |i| <= " + std::to_string(spec.u_truncation) + " for " +
                          variant_name(spec.variant);
  if (M.truncated) {
    if (!out.truncation_note.empty()) out.truncation_note += "; ";
    out.truncation_note += "mixed complex is word-length truncated";
  }
  out.validate();
  return out;
}

}  // namespace coloop
