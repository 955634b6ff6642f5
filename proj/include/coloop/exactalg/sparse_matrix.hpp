#pragma once

#include <cstddef>
#include <tuple>
#include <vector>

#include "coloop/exactalg/ring.hpp"

namespace coloop {

// Column-major sparse integer matrix. Every stored entry is nonzero, row
// indices inside a column are strictly increasing and in range.
class SparseMatrix {
 public:
  struct Entry {
    std::size_t row;
    Integer value;
    bool operator==(const Entry&) const = default;
  };
  using Column = std::vector<Entry>;
  using Triplet = std::tuple<std::size_t, std::size_t, Integer>;

  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols);

  // Throws ValidationError on duplicate positions, zero values or out-of-range indices.
  static SparseMatrix from_triplets(std::size_t rows, std::size_t cols,
                                    const std::vector<Triplet>& entries);
  static SparseMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t nnz() const;

  const Column& column(std::size_t c) const { return columns_[c]; }
  // Replaces a column; entries may be unsorted and contain repeats or zeros,
  // they are combined.
  void set_column(std::size_t c, Column entries);
  Integer at(std::size_t r, std::size_t c) const;

  SparseMatrix transpose() const;
  SparseMatrix operator*(const SparseMatrix& rhs) const;
  SparseMatrix operator+(const SparseMatrix& rhs) const;
  SparseMatrix operator-(const SparseMatrix& rhs) const;
  SparseMatrix operator-() const;

  bool is_zero() const;
  bool operator==(const SparseMatrix& rhs) const;

  std::vector<std::vector<Integer>> dense() const;
  static SparseMatrix from_dense(const std::vector<std::vector<Integer>>& rows);

  // First nonzero entry (column-major scan) as (row, col, value), if any.
  bool first_nonzero(std::size_t& row, std::size_t& col, Integer& value) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Column> columns_;
};

}  // namespace coloop
