#pragma once

#include <string>
#include <vector>

#include "coloop/cyclic/mixed_complex.hpp"
#include "coloop/exactalg/chain_complex.hpp"

namespace coloop {

// The eight u-adic completions of M with d = b + u^{-1} B, |u| = 2.
// A bracket [ allows only finite sums in that direction, [[ allows power series.
enum class CyclicVariant {
  polynomial,                 // M[u]
  positive,                   // M[[u]]
  inverse_polynomial,         // M[u^-1]
  negative,                   // M[[u^-1]]
  laurent,                    // M[u, u^-1]
  laurent_series_u,           // M[[u, u^-1]
  laurent_series_inverse,     // M[u, u^-1]]
  periodic,                   // M[[u, u^-1]]
};

struct VariantShape {
  bool positive_powers = false;  // u^i with i > 0 present; u^0 always is
  bool negative_powers = false;  // u^i with i < 0 present
  bool series_in_u = false;
  bool series_in_inverse = false;
  bool quotient = false;  // quotient of the periodic complex (no negative powers)
};

VariantShape variant_shape(CyclicVariant v);
std::string variant_name(CyclicVariant v);  // "M[[u]]", ...
// "positive", "negative", "periodic", or the bracket name for the others.
std::string variant_token(CyclicVariant v);
CyclicVariant parse_variant(const std::string& token);  // accepts both forms
const std::vector<CyclicVariant>& all_variants();

struct CyclicVariantSpec {
  CyclicVariant variant = CyclicVariant::positive;
  // Largest |i| kept for negative exponents; ignored by variants without them.
  int u_truncation = 4;

  bool needs_truncation() const { return variant_shape(variant).negative_powers; }
};

// Exponents i with m u^i of degree n present for some m in M_{n-2i} within
// the window; ascending.
std::vector<int> exponents_at(const MixedComplexWindow& M, const CyclicVariantSpec& spec, int n);

// Chain groups in degrees [lo, hi]: degree n is the sum of M_{n-2i} u^i over
// allowed exponents, with d(m u^i) = (bm) u^i + (Bm) u^{i-1}; terms leaving
// the allowed exponents are dropped (the dropped parts are subcomplexes, so
// the result is a quotient complex). Variants with negative powers need
// hi + 2 u_truncation <= M.top and are marked truncated. Throws
// ValidationError for windows that leave the data of M. The window is
// complete below always and complete above when M reaches far enough.
ChainComplexWindow cyclic_complex(const MixedComplexWindow& M, const CyclicVariantSpec& spec, int lo, int hi);

}  // namespace coloop
