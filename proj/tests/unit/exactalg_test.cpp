#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "coloop/errors.hpp"
#include "coloop/exactalg/chain_complex.hpp"
#include "coloop/exactalg/smith.hpp"

using namespace coloop;

namespace {

using Dense = std::vector<std::vector<Integer>>;

Integer det(Dense m) {
  // cofactor expansion, fine for the sizes used here
  std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  Integer out = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c] == 0) continue;
    Dense minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Integer> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      minor.push_back(row);
    }
    Integer term = m[0][c] * det(minor);
    out += (c % 2 == 0) ? term : Integer(-term);
  }
  return out;
}

void subsets(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
             std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

// Invariant factors from determinantal divisors: d_k = gcd of k x k minors.
std::vector<Integer> oracle_invariant_factors(const Dense& m) {
  std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  std::vector<Integer> out;
  Integer prev = 1;
  for (std::size_t k = 1; k <= std::min(rows, cols); ++k) {
    std::vector<std::vector<std::size_t>> rs, cs;
    std::vector<std::size_t> cur;
    subsets(rows, k, 0, cur, rs);
    subsets(cols, k, 0, cur, cs);
    Integer g = 0;
    for (const auto& r : rs)
      for (const auto& c : cs) {
        Dense sub;
        for (auto i : r) {
          std::vector<Integer> row;
          for (auto j : c) row.push_back(m[i][j]);
          sub.push_back(row);
        }
        Integer d = det(sub);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
      }
    if (g == 0) break;
    out.push_back(g / prev);
    prev = g;
  }
  return out;
}

std::size_t oracle_rank_mod_p(Dense m, long p) {
  std::size_t rows = m.size(), cols = rows ? m[0].size() : 0, r = 0;
  for (auto& row : m)
    for (auto& v : row) {
      v %= p;
      if (v < 0) v += p;
    }
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[r]);
    Integer inv;
    Integer pp = p;
    mpz_invert(inv.get_mpz_t(), m[r][c].get_mpz_t(), pp.get_mpz_t());
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Integer f = m[i][c] * inv;
      for (std::size_t j = 0; j < cols; ++j) {
        m[i][j] -= f * m[r][j];
        m[i][j] %= p;
        if (m[i][j] < 0) m[i][j] += p;
      }
    }
    ++r;
  }
  return r;
}

Dense random_dense(std::mt19937& rng, std::size_t rows, std::size_t cols, int range, double density) {
  std::uniform_int_distribution<int> val(-range, range);
  std::bernoulli_distribution keep(density);
  Dense m(rows, std::vector<Integer>(cols, 0));
  for (auto& row : m)
    for (auto& v : row)
      if (keep(rng)) v = val(rng);
  return m;
}

}  // namespace

TEST_SUITE("exactalg") {
  TEST_CASE("smith form matches determinantal divisors on random matrices") {
    std::mt19937 rng(20240611);
    for (int trial = 0; trial < 300; ++trial) {
      std::size_t rows = 1 + rng() % 4, cols = 1 + rng() % 5;
      Dense m = random_dense(rng, rows, cols, 6, 0.6);
      auto got = smith_normal_form(SparseMatrix::from_dense(m)).invariant_factors;
      auto want = oracle_invariant_factors(m);
      INFO("trial " << trial);
      CHECK(got == want);
      for (std::size_t i = 1; i < got.size(); ++i) CHECK(got[i] % got[i - 1] == 0);
    }
  }

  TEST_CASE("rank mod p matches dense elimination") {
    std::mt19937 rng(77);
    for (int trial = 0; trial < 200; ++trial) {
      std::size_t rows = 1 + rng() % 6, cols = 1 + rng() % 6;
      Dense m = random_dense(rng, rows, cols, 9, 0.5);
      auto s = SparseMatrix::from_dense(m);
      for (unsigned long p : {2ul, 3ul, 5ul, 7ul}) CHECK(rank_mod_p(s, p) == oracle_rank_mod_p(m, static_cast<long>(p)));
      CHECK(rank(s, RingSpec::integers()) == smith_normal_form(s).rank());
    }
  }

  TEST_CASE("smith form of a known matrix") {
    auto m = SparseMatrix::from_dense({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}});
    auto f = smith_normal_form(m).invariant_factors;
    REQUIRE(f.size() == 3);
    CHECK(f[0] == 2);
    CHECK(f[1] == 6);
    CHECK(f[2] == 12);
  }

  TEST_CASE("sparse matrix algebra") {
    auto a = SparseMatrix::from_dense({{1, 2}, {0, -1}, {3, 0}});
    auto b = SparseMatrix::from_dense({{0, 1, 1}, {2, 0, -1}});
    CHECK((a * b).dense() == Dense{{4, 1, -1}, {-2, 0, 1}, {0, 3, 3}});
    CHECK(a.transpose().transpose() == a);
    CHECK((a - a).is_zero());
    CHECK((a + (-a)).is_zero());
    CHECK(SparseMatrix::identity(3) * SparseMatrix::identity(3) == SparseMatrix::identity(3));
    CHECK_THROWS_AS(SparseMatrix::from_triplets(2, 2, {{0, 0, 1}, {0, 0, 2}}), ValidationError);
    CHECK_THROWS_AS(SparseMatrix::from_triplets(2, 2, {{2, 0, 1}}), ValidationError);
    CHECK_THROWS_AS(SparseMatrix::from_triplets(2, 2, {{0, 0, 0}}), ValidationError);
  }

  TEST_CASE("ring parsing") {
    CHECK(RingSpec::parse("z") == RingSpec::integers());
    CHECK(RingSpec::parse("q") == RingSpec::rationals());
    CHECK(RingSpec::parse("zp:7") == RingSpec::prime_field(7));
    CHECK(RingSpec::parse("zp:7").name() == "Z/7");
    CHECK(RingSpec::prime_field(5).token() == "zp:5");
    CHECK_THROWS_AS(RingSpec::parse("zp:8"), ValidationError);
    CHECK_THROWS_AS(RingSpec::parse("r"), ValidationError);
    CHECK_THROWS_AS(RingSpec::parse("zp:"), ValidationError);
    CHECK(is_prime(2));
    CHECK(is_prime(97));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(91));
  }

  TEST_CASE("homology of a small complex over several rings") {
    // cellular chains of RP^2: Z <-0- Z <-2- Z
    ChainComplexWindow w;
    w.lo = 0;
    w.hi = 2;
    w.labels = {{"v"}, {"e"}, {"f"}};
    w.boundary = {SparseMatrix(0, 1), SparseMatrix::from_dense({{0}}), SparseMatrix::from_dense({{2}})};
    w.boundary_above = SparseMatrix(1, 0);
    w.complete_below = w.complete_above = true;
    w.validate();
    auto z = homology_window(w, RingSpec::integers());
    CHECK(z.at(0)->betti == 1);
    CHECK(z.at(1)->betti == 0);
    CHECK(z.at(1)->torsion == std::vector<Integer>{2});
    CHECK(z.at(2)->betti == 0);
    CHECK(z.all_certified());
    auto q = homology_window(w, RingSpec::rationals());
    CHECK(q.at(1)->betti == 0);
    CHECK(q.at(1)->torsion.empty());
    auto f2 = homology_window(w, RingSpec::prime_field(2));
    CHECK(f2.at(1)->betti == 1);
    CHECK(f2.at(2)->betti == 1);
  }

  TEST_CASE("open top edge is not reliable") {
    ChainComplexWindow w;
    w.lo = 0;
    w.hi = 1;
    w.labels = {{"v"}, {"e"}};
    w.boundary = {SparseMatrix(0, 1), SparseMatrix::from_dense({{0}})};
    w.complete_below = true;
    auto h = homology_window(w, RingSpec::integers());
    CHECK(h.reliable_hi == 0);
  }

  TEST_CASE("square failure is located") {
    ChainComplexWindow w;
    w.lo = 0;
    w.hi = 2;
    w.labels = {{"a"}, {"b"}, {"c"}};
    w.boundary = {SparseMatrix(0, 1), SparseMatrix::from_dense({{1}}), SparseMatrix::from_dense({{1}})};
    w.complete_below = true;
    CHECK(w.first_square_failure() == 2);
  }
}
