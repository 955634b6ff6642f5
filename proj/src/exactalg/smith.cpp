#include "coloop/exactalg/smith.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>

namespace coloop {

namespace {

class IntegerEliminator {
 public:
  explicit IntegerEliminator(const SparseMatrix& m) : rows_(m.rows()), col_rows_(m.cols()) {
    for (std::size_t c = 0; c < m.cols(); ++c)
      for (const auto& e : m.column(c)) {
        rows_[e.row].emplace(c, e.value);
        col_rows_[c].insert(e.row);
      }
  }

  std::vector<Integer> run() {
    std::vector<Integer> pivots;
    unit_phase(pivots);
    std::size_t r = 0, c = 0;
    while (pick_smallest(r, c)) pivots.push_back(reduce(r, c));
    return pivots;
  }

 private:
  // Columns are visited in order of increasing size and any unit entry is
  // taken as pivot, preferring the shortest row.
  void unit_phase(std::vector<Integer>& pivots) {
    std::vector<std::size_t> order(col_rows_.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return col_rows_[a].size() < col_rows_[b].size();
    });
    for (std::size_t c : order) {
      std::size_t best = SIZE_MAX, best_len = SIZE_MAX;
      for (std::size_t r : col_rows_[c]) {
        const Integer& v = rows_[r].at(c);
        if ((v == 1 || v == -1) && rows_[r].size() < best_len) {
          best = r;
          best_len = rows_[r].size();
        }
      }
      if (best != SIZE_MAX) pivots.push_back(reduce(best, c));
    }
  }

  bool pick_smallest(std::size_t& pr, std::size_t& pc) {
    bool found = false;
    Integer best_abs;
    std::size_t best_count = 0;
    for (std::size_t r = 0; r < rows_.size(); ++r)
      for (const auto& [c, v] : rows_[r]) {
        Integer a = abs(v);
        std::size_t count = rows_[r].size() + col_rows_[c].size();
        if (!found || a < best_abs || (a == best_abs && count < best_count)) {
          found = true;
          best_abs = a;
          best_count = count;
          pr = r;
          pc = c;
        }
      }
    return found;
  }

  // rows_[target] -= q * rows_[source]
  void row_axpy(std::size_t target, const Integer& q, std::size_t source) {
    auto& dst = rows_[target];
    for (const auto& [c, v] : rows_[source]) {
      auto it = dst.find(c);
      if (it == dst.end()) {
        dst.emplace(c, -q * v);
        col_rows_[c].insert(target);
      } else {
        it->second -= q * v;
        if (it->second == 0) {
          dst.erase(it);
          col_rows_[c].erase(target);
        }
      }
    }
  }

  Integer reduce(std::size_t r, std::size_t c) {
    for (;;) {
      Integer p = rows_[r].at(c);
      bool moved = false;
      std::vector<std::size_t> others(col_rows_[c].begin(), col_rows_[c].end());
      for (std::size_t r2 : others) {
        if (r2 == r) continue;
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), rows_[r2].at(c).get_mpz_t(), p.get_mpz_t());
        if (q != 0) row_axpy(r2, q, r);
        if (rows_[r2].count(c)) {
          r = r2;
          moved = true;
          break;
        }
      }
      if (moved) continue;
      // Column c is clear apart from the pivot; column operations against c
      // now only touch row r.
      for (auto& [c2, a] : rows_[r]) {
        if (c2 == c) continue;
        Integer rem;
        mpz_tdiv_r(rem.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t());
        if (rem != 0) {
          a = rem;
          c = c2;
          moved = true;
          break;
        }
      }
      if (moved) continue;
      for (const auto& [c2, a] : rows_[r]) col_rows_[c2].erase(r);
      rows_[r].clear();
      return abs(p);
    }
  }

  std::vector<std::map<std::size_t, Integer>> rows_;
  std::vector<std::set<std::size_t>> col_rows_;
};

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

}  // namespace

SmithForm smith_normal_form(const SparseMatrix& m) {
  IntegerEliminator elim(m);
  std::vector<Integer> diag = elim.run();
  std::vector<Integer> ones, rest;
  for (auto& d : diag) (d == 1 ? ones : rest).push_back(d);
  for (std::size_t i = 0; i < rest.size(); ++i)
    for (std::size_t j = i + 1; j < rest.size(); ++j) {
      Integer g = gcd(rest[i], rest[j]);
      Integer l = rest[i] / g * rest[j];
      rest[i] = g;
      rest[j] = l;
    }
  SmithForm out;
  out.invariant_factors = std::move(ones);
  out.invariant_factors.insert(out.invariant_factors.end(), rest.begin(), rest.end());
  std::stable_sort(out.invariant_factors.begin(), out.invariant_factors.end());
  return out;
}

std::size_t rank_mod_p(const SparseMatrix& m, unsigned long p) {
  std::vector<std::map<std::size_t, std::uint64_t>> rows(m.rows());
  std::vector<std::set<std::size_t>> col_rows(m.cols());
  for (std::size_t c = 0; c < m.cols(); ++c)
    for (const auto& e : m.column(c)) {
      Integer v;
      mpz_fdiv_r_ui(v.get_mpz_t(), e.value.get_mpz_t(), p);
      if (v != 0) {
        rows[e.row].emplace(c, v.get_ui());
        col_rows[c].insert(e.row);
      }
    }
  std::vector<std::size_t> order(m.cols());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return col_rows[a].size() < col_rows[b].size(); });
  std::size_t rank = 0;
  for (std::size_t c : order) {
    if (col_rows[c].empty()) continue;
    std::size_t r = *std::min_element(col_rows[c].begin(), col_rows[c].end(), [&](auto a, auto b) {
      return rows[a].size() < rows[b].size();
    });
    std::uint64_t inv = powmod(rows[r].at(c), p - 2, p);
    std::vector<std::size_t> others(col_rows[c].begin(), col_rows[c].end());
    for (std::size_t r2 : others) {
      if (r2 == r) continue;
      std::uint64_t q = mulmod(rows[r2].at(c), inv, p);
      for (const auto& [c2, v] : rows[r]) {
        std::uint64_t sub = mulmod(q, v, p);
        auto it = rows[r2].find(c2);
        if (it == rows[r2].end()) {
          rows[r2].emplace(c2, (p - sub) % p);
          col_rows[c2].insert(r2);
        } else {
          it->second = (it->second + p - sub) % p;
          if (it->second == 0) {
            rows[r2].erase(it);
            col_rows[c2].erase(r2);
          }
        }
      }
    }
    for (const auto& [c2, v] : rows[r]) col_rows[c2].erase(r);
    rows[r].clear();
    ++rank;
  }
  return rank;
}

std::size_t rank(const SparseMatrix& m, const RingSpec& ring) {
  if (ring.kind == RingKind::prime_field) return rank_mod_p(m, ring.prime);
  return smith_normal_form(m).rank();
}

}  // namespace coloop
