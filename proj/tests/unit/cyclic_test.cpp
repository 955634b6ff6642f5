#include <doctest.h>

#include "coloop/cyclic/equivariant.hpp"
#include "coloop/homalg/hochschild.hpp"
#include "coloop/simplicial/builtins.hpp"

using namespace coloop;

namespace {

std::string failures(const std::vector<IdentityCheck>& checks) {
  std::string out;
  for (const auto& c : checks)
    if (!c.passed) out += c.name + " (" + c.detail + "); ";
  return out;
}

struct Built {
  CategoricalCoalgebra C;
  CobarAlgebra A;
  Built(const SimplicialSet& X, int top) : C(categorical_coalgebra(X)), A(C, top) {}
};

}  // namespace

TEST_SUITE("cyclic") {
  TEST_CASE("mixed identities hold on both sides") {
    for (const auto& X : {point_set(), simplex_set(2), sphere_set(2), sphere_set(3), wedge_set({2, 2}),
                          wedge_set({2, 3})}) {
      CAPTURE(X.name());
      Built b(X, 6);
      auto hoch = as_mixed(HochschildComplex(b.A));
      auto cohoch = as_mixed(CoHochschildComplex(b.A));
      CHECK(hoch.provenance == MixedProvenance::hoch);
      CHECK(failures(verify_mixed(hoch)) == "");
      CHECK(failures(verify_mixed(cohoch)) == "");
    }
  }

  TEST_CASE("a non-anticommuting operator is caught") {
    Built b(sphere_set(2), 5);
    auto M = as_mixed(CoHochschildComplex(b.A));
    for (int n = 0; n < M.top; ++n) M.B[n] = M.b[n + 1].transpose();
    M.validate();
    auto checks = verify_mixed(M);
    REQUIRE(checks.size() == 3);
    CHECK_FALSE(checks[2].passed);
    CHECK(checks[2].detail.find("degree") != std::string::npos);
  }

  TEST_CASE("variant names round trip") {
    CHECK(all_variants().size() == 8);
    for (auto v : all_variants()) {
      CHECK(parse_variant(variant_token(v)) == v);
      CHECK(parse_variant(variant_name(v)) == v);
    }
    CHECK(variant_name(CyclicVariant::negative) == "M[[u^-1]]");
    CHECK_THROWS_AS(parse_variant("M[[v]]"), ValidationError);
  }

  TEST_CASE("chain group ranks of the variants") {
    Built b(sphere_set(2), 14);
    auto M = as_mixed(CoHochschildComplex(b.A));
    const int U = 2;
    for (int n = 0; n <= 6; ++n) {
      std::size_t positive = 0, negative = 0, periodic = 0;
      for (int i = -U; 2 * i <= n; ++i) {
        std::size_t r = M.rank_at(n - 2 * i);
        periodic += r;
        if (i >= 0) positive += r;
        if (i <= 0) negative += r;
      }
      auto rank = [&](CyclicVariant v) { return cyclic_complex(M, {v, U}, 0, 6).rank_at(n); };
      CAPTURE(n);
      CHECK(rank(CyclicVariant::positive) == positive);
      CHECK(rank(CyclicVariant::polynomial) == positive);
      CHECK(rank(CyclicVariant::negative) == negative);
      CHECK(rank(CyclicVariant::inverse_polynomial) == negative);
      CHECK(rank(CyclicVariant::periodic) == periodic);
      CHECK(rank(CyclicVariant::laurent) == periodic);
      CHECK(rank(CyclicVariant::periodic) >= rank(CyclicVariant::positive));
      CHECK(rank(CyclicVariant::periodic) >= rank(CyclicVariant::negative));
    }
  }

  TEST_CASE("every variant is a complex") {
    Built b(wedge_set({2, 3}), 12);
    auto M = as_mixed(CoHochschildComplex(b.A));
    for (auto v : all_variants()) {
      CAPTURE(variant_name(v));
      auto w = cyclic_complex(M, {v, 2}, 0, 6);
      CHECK_FALSE(w.first_square_failure());
      CHECK(w.truncated == variant_shape(v).negative_powers);
    }
    CHECK_THROWS_AS(cyclic_complex(M, {CyclicVariant::negative, 5}, 0, 6), ValidationError);
  }

  TEST_CASE("equivariant homology of a point") {
    auto C = categorical_coalgebra(point_set());
    auto r = equivariant_homology(C, 8, RingSpec::integers());
    CHECK_FALSE(r.truncated);
    for (int n = 0; n <= 8; ++n) {
      CHECK(r.homology.at(n)->betti == (n % 2 == 0 ? 1u : 0u));
      CHECK(r.homology.at(n)->torsion.empty());
      CHECK(r.homology.at(n)->certified);
    }
  }

  TEST_CASE("negative and periodic variants of a point") {
    auto C = categorical_coalgebra(point_set());
    auto neg = cyclic_homology(C, {CyclicVariant::negative, 3}, 0, 4, RingSpec::integers());
    CHECK(neg.truncated);
    CHECK(neg.homology.at(0)->betti == 1);
    CHECK(neg.homology.at(1)->betti == 0);
    CHECK_FALSE(neg.homology.at(0)->certified);
  }

  TEST_CASE("positive cyclic homology agrees across the two sides") {
    for (const auto& X : {sphere_set(2), sphere_set(3)}) {
      CAPTURE(X.name());
      auto C = categorical_coalgebra(X);
      auto a = cyclic_homology(C, {}, 0, 4, RingSpec::rationals(), {}, MixedSide::cohoch);
      auto b = cyclic_homology(C, {}, 0, 4, RingSpec::rationals(), {}, MixedSide::hoch);
      for (int n = 0; n <= 4; ++n) CHECK(a.homology.at(n)->betti == b.homology.at(n)->betti);
    }
  }

  TEST_CASE("pi-bar is a map of mixed complexes, alpha-bar is not") {
    for (const auto& X : {point_set(), sphere_set(2), sphere_set(3), wedge_set({2, 2})}) {
      CAPTURE(X.name());
      auto r = check_mixed_map_pi(categorical_coalgebra(X), 5);
      CHECK(failures(r.checks) == "");
      CHECK(r.hoch_betti == r.cohoch_betti);
      CHECK(r.induced_rank == r.hoch_betti);
    }
    auto r = check_mixed_map_pi(categorical_coalgebra(sphere_set(2)), 5);
    CHECK_FALSE(r.alpha_intertwines);
    CHECK_FALSE(r.alpha_witness.empty());
  }
}
