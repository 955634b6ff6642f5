#pragma once

#include <map>
#include <string>
#include <vector>

namespace coloop {

// d_i of a nondegenerate simplex, in Eilenberg-Zilber form s_{j1} ... s_{jk} y
// with j1 > ... > jk and y nondegenerate.
struct FaceImage {
  std::vector<int> degeneracies;
  std::string target;
  bool operator==(const FaceImage&) const = default;
};

struct SimplexRecord {
  std::string id;
  std::vector<FaceImage> faces;  // d_0 ... d_n; empty for vertices
};

// A possibly degenerate simplex y o collapse, where collapse is a nondecreasing
// surjection [n] -> [dim y] listed by its values and y is a nondegenerate simplex.
struct SimplexRef {
  std::vector<int> collapse;
  int target = -1;

  int dim() const { return static_cast<int>(collapse.size()) - 1; }
  bool nondegenerate() const;
  std::vector<int> degeneracies() const;  // EZ word, strictly decreasing
  bool operator==(const SimplexRef&) const = default;
};

std::vector<int> degeneracies_to_collapse(const std::vector<int>& word, int target_dim);

// Finite simplicial set given by its nondegenerate simplices and their faces.
class SimplicialSet {
 public:
  // Validates the data (face counts, dimensions, EZ words, simplicial
  // identities d_i d_j = d_{j-1} d_i for i < j) and throws ValidationError
  // naming the first offending simplex and index pair.
  static SimplicialSet build(std::string name, std::vector<std::vector<SimplexRecord>> by_dimension);

  const std::string& name() const { return name_; }
  int max_dimension() const { return static_cast<int>(by_dimension_.size()) - 1; }
  int size() const { return static_cast<int>(records_.size()); }

  const SimplexRecord& record(int index) const { return records_.at(index); }
  const std::string& id(int index) const { return records_.at(index).id; }
  int dimension(int index) const { return dims_.at(index); }
  int index_of(const std::string& id) const;
  const std::vector<int>& of_dimension(int n) const;
  const std::vector<std::vector<SimplexRecord>>& records_by_dimension() const { return raw_; }

  SimplexRef identity(int index) const;
  SimplexRef face(const SimplexRef& s, int i) const;
  // d_{from} ... applied right to left: faces listed in application order
  SimplexRef iterated_face(SimplexRef s, const std::vector<int>& indices) const;
  SimplexRef front(const SimplexRef& s, int p) const;  // vertices 0..p
  SimplexRef back(const SimplexRef& s, int q) const;   // last q+1 vertices
  int first_vertex(int index) const;
  int last_vertex(int index) const;

  // One vertex and no nondegenerate 1-simplices.
  bool one_reduced() const;
  std::vector<std::string> warnings() const;

 private:
  std::string name_;
  std::vector<std::vector<SimplexRecord>> raw_;
  std::vector<SimplexRecord> records_;
  std::vector<int> dims_;
  std::vector<std::vector<int>> by_dimension_;
  std::vector<std::vector<SimplexRef>> faces_;
  std::map<std::string, int> index_;
};

}  // namespace coloop
