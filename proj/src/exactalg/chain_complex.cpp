#include "coloop/exactalg/chain_complex.hpp"

#include <algorithm>

#include "coloop/errors.hpp"
#include "coloop/exactalg/smith.hpp"

namespace coloop {

ChainComplexWindow ChainComplexWindow::empty(int lo, int hi) {
  ChainComplexWindow w;
  w.lo = lo;
  w.hi = hi;
  for (int n = lo; n <= hi; ++n) {
    w.labels.emplace_back();
    w.boundary.emplace_back(0, 0);
  }
  return w;
}

std::size_t ChainComplexWindow::rank_at(int n) const {
  if (!contains(n)) return 0;
  return labels[n - lo].size();
}

void ChainComplexWindow::validate() const {
  if (hi < lo - 1) throw ValidationError("chain complex: empty window with hi < lo - 1");
  std::size_t count = static_cast<std::size_t>(hi - lo + 1);
  if (labels.size() != count || boundary.size() != count)
    throw ValidationError("chain complex: expected one label list and one boundary per degree");
  for (int n = lo; n <= hi; ++n) {
    const auto& d = boundary[n - lo];
    std::size_t expected_rows = n == lo ? (complete_below ? d.rows() : 0) : rank_at(n - 1);
    if (d.cols() != rank_at(n) || d.rows() != expected_rows)
      throw ValidationError("chain complex: boundary in degree " + std::to_string(n) +
                            " has shape " + std::to_string(d.rows()) + "x" +
                            std::to_string(d.cols()) + ", expected " +
                            std::to_string(expected_rows) + "x" + std::to_string(rank_at(n)));
  }
  if (complete_above && boundary_above.rows() != rank_at(hi))
    throw ValidationError("chain complex: boundary above the window has " +
                          std::to_string(boundary_above.rows()) + " rows, expected " +
                          std::to_string(rank_at(hi)));
}

std::optional<int> ChainComplexWindow::first_square_failure() const {
  for (int n = lo + 1; n <= hi; ++n) {
    if (n == lo + 1 && !complete_below) continue;
    if (!(boundary_at(n - 1) * boundary_at(n)).is_zero()) return n;
  }
  if (complete_above && hi >= lo && !(boundary_at(hi) * boundary_above).is_zero()) return hi + 1;
  return std::nullopt;
}

const DegreeHomology* HomologyResult::at(int n) const {
  for (const auto& d : degrees)
    if (d.degree == n) return &d;
  return nullptr;
}

bool HomologyResult::all_certified() const {
  for (const auto& d : degrees)
    if (!d.certified) return false;
  return true;
}

HomologyResult homology_window(const ChainComplexWindow& complex, const RingSpec& ring) {
  complex.validate();
  HomologyResult out;
  out.ring = ring;
  out.reliable_lo = complex.complete_below ? complex.lo : complex.lo + 1;
  out.reliable_hi = complex.complete_above ? complex.hi : complex.hi - 1;

  // ranks[n - lo] is the rank of the boundary leaving degree n, for n in [lo, hi + 1]
  std::vector<std::size_t> ranks(complex.hi - complex.lo + 2, 0);
  std::vector<SmithForm> smith(complex.hi - complex.lo + 2);
  for (int n = complex.lo; n <= complex.hi + 1; ++n) {
    if (n == complex.hi + 1 && !complex.complete_above) continue;
    if (n < out.reliable_lo || n > out.reliable_hi + 1) continue;
    const auto& d = n == complex.hi + 1 ? complex.boundary_above : complex.boundary_at(n);
    if (ring.kind == RingKind::integers) {
      smith[n - complex.lo] = smith_normal_form(d);
      ranks[n - complex.lo] = smith[n - complex.lo].rank();
    } else {
      ranks[n - complex.lo] = rank(d, ring);
    }
  }
  for (int n = out.reliable_lo; n <= out.reliable_hi; ++n) {
    DegreeHomology h;
    h.degree = n;
    std::size_t dim = complex.rank_at(n);
    std::size_t out_rank = ranks[n - complex.lo];
    std::size_t in_rank = ranks[n + 1 - complex.lo];
    h.betti = dim - out_rank - in_rank;
    if (ring.kind == RingKind::integers)
      for (const auto& f : smith[n + 1 - complex.lo].invariant_factors)
        if (f > 1) h.torsion.push_back(f);
    h.certified = !complex.truncated;
    out.degrees.push_back(std::move(h));
  }
  return out;
}

ChainComplexWindow mapping_cone(const ChainComplexWindow& S, const ChainComplexWindow& T,
                                const std::vector<SparseMatrix>& F) {
  ChainComplexWindow cone;
  cone.lo = 0;
  cone.hi = T.hi;
  cone.complete_below = true;
  auto size = [](const ChainComplexWindow& w, int n) { return w.rank_at(n); };
  for (int n = 0; n <= T.hi; ++n) {
    std::vector<std::string> labels;
    if (n >= 1)
      for (const auto& l : S.labels_at(n - 1)) labels.push_back("s " + l);
    for (const auto& l : T.labels_at(n)) labels.push_back(l);
    cone.labels.push_back(std::move(labels));
    std::size_t s_in = n >= 1 ? size(S, n - 1) : 0, t_in = size(T, n);
    std::size_t s_out = n >= 2 ? size(S, n - 2) : 0, t_out = n >= 1 ? size(T, n - 1) : 0;
    SparseMatrix d(s_out + t_out, s_in + t_in);
    for (std::size_t c = 0; c < s_in; ++c) {
      SparseMatrix::Column col;
      if (n >= 2)
        for (const auto& e : S.boundary_at(n - 1).column(c)) col.push_back({e.row, Integer(-e.value)});
      for (const auto& e : F[n - 1].column(c)) col.push_back({s_out + e.row, e.value});
      d.set_column(c, std::move(col));
    }
    for (std::size_t c = 0; c < t_in; ++c) {
      SparseMatrix::Column col;
      if (n >= 1)
        for (const auto& e : T.boundary_at(n).column(c)) col.push_back({s_out + e.row, e.value});
      d.set_column(s_in + c, std::move(col));
    }
    cone.boundary.push_back(std::move(d));
  }
  return cone;
}


std::vector<std::size_t> induced_homology_ranks(const ChainComplexWindow& S, const ChainComplexWindow& T,
                                                const std::vector<SparseMatrix>& F, const RingSpec& field) {
  RingSpec ring = field.kind == RingKind::integers ? RingSpec::rationals() : field;
  auto hs = homology_window(S, ring), ht = homology_window(T, ring);
  auto hc = homology_window(mapping_cone(S, T, F), ring);
  int hi = std::min({hs.reliable_hi, ht.reliable_hi, hc.reliable_hi});
  std::vector<std::size_t> ranks;
  std::size_t prev_rank = 0, prev_source = 0;
  for (int n = 0; n <= hi; ++n) {
    // dim H_n(cone) = (dim H_n(T) - r_n) + (dim H_{n-1}(S) - r_{n-1})
    std::size_t r = ht.at(n)->betti + prev_source - prev_rank - hc.at(n)->betti;
    ranks.push_back(r);
    prev_rank = r;
    prev_source = hs.at(n)->betti;
  }
  return ranks;
}

}  // namespace coloop
