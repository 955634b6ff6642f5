#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "coloop/exactalg/ring.hpp"
#include "coloop/homalg/two_sided.hpp"
#include "coloop/polytope/nstring.hpp"

namespace coloop {

// Facets of the subdivided cube F_n:
//   zero_upper  C'_{0,i,n}:  a_i = 0, a_1 >= (i-1)/n   (2 <= i <= n)
//   zero_lower  C''_{0,i,n}: a_i = 0, a_1 <= (i-1)/n   (2 <= i <= n)
//   zero_first  C_{0,1,n}:   a_1 = 0
//   one         C_{1,i,n}:   a_i = 1                    (1 <= i <= n)
enum class FacetKind { zero_upper, zero_lower, zero_first, one };

struct FacetLabel {
  FacetKind kind = FacetKind::one;
  int i = 1;

  std::string name(int n) const;  // "C'_{0,2,3}", "C_{1,1,3}", ...
  auto operator<=>(const FacetLabel&) const = default;
};

std::vector<FacetLabel> facet_labels(int n);  // the 3n - 1 facets
NString facet_string(int n, const FacetLabel& f);

struct FacePoset {
  int n = 0;
  std::vector<NString> faces;  // by decreasing dimension, then string order
  std::map<NString, std::size_t> index;
  std::vector<std::vector<std::size_t>> covers;  // codimension-one faces of each face

  std::vector<std::size_t> f_vector() const;  // number of faces of each dimension 0..n
  std::vector<std::size_t> of_dimension(int d) const;
};

// Faces reachable from top_string(n) by face transformations.
FacePoset enumerate_faces(int n);
constexpr int max_freehedron_dimension = 8;

// Facets whose face lies above the given face.
std::vector<FacetLabel> facets_containing(const FacePoset& P, std::size_t face);
// Face s meet facet f, through the transformation matching f; nullopt when
// no transformation applies or its result does not lie in f (the
// correspondence alone does not see that, e.g., C'_{0,i,n} misses C_{0,1,n}).
std::optional<NString> intersect_with_facet(const FacePoset& P, const NString& s, const FacetLabel& f);
// Cube coordinates of every vertex, read off the facets containing it.
std::map<NString, std::vector<Rational>> vertex_coordinates(const FacePoset& P);

using SignedStringSum = std::vector<std::pair<Integer, NString>>;  // sorted by string, no zeros

// The face calculus of F_n transported from Q(A, C, A) for C the n-simplex:
// block s_i is the simplex on the vertex set s_i, blocks left of the marked
// one form the left word, blocks right of it the right word.
class FreehedronCalculus {
 public:
  explicit FreehedronCalculus(int n);
  FreehedronCalculus(const FreehedronCalculus&) = delete;
  FreehedronCalculus& operator=(const FreehedronCalculus&) = delete;

  int n() const { return n_; }
  const CobarAlgebra& algebra() const { return *A_; }

  QGenerator to_q(const NString& s) const;
  // Throws ValidationError unless g runs from vertex 0 to vertex n.
  NString from_q(const QGenerator& g) const;
  // Sum over i of (d1_i - d0_i) with signs of the Q differential.
  SignedStringSum boundary(const NString& s) const;
  SignedStringSum boundary(const SignedStringSum& sum) const;

 private:
  int n_;
  std::unique_ptr<CategoricalCoalgebra> C_;
  std::unique_ptr<CobarAlgebra> A_;
  std::vector<std::vector<int>> vertices_;  // basis element -> vertex set
};

std::string to_string(const SignedStringSum& sum);

}  // namespace coloop
