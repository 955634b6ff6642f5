#include "coloop/exactalg/sparse_matrix.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "coloop/errors.hpp"

namespace coloop {

namespace {

SparseMatrix::Column normalize(SparseMatrix::Column entries) {
  std::sort(entries.begin(), entries.end(),
            [](const auto& a, const auto& b) { return a.row < b.row; });
  SparseMatrix::Column out;
  out.reserve(entries.size());
  for (auto& e : entries) {
    if (!out.empty() && out.back().row == e.row)
      out.back().value += e.value;
    else
      out.push_back(std::move(e));
  }
  SparseMatrix::Column compact;
  compact.reserve(out.size());
  for (auto& e : out)
    if (e.value != 0) compact.push_back(std::move(e));
  return compact;
}

}  // namespace

SparseMatrix::SparseMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), columns_(cols) {}

SparseMatrix SparseMatrix::from_triplets(std::size_t rows, std::size_t cols,
                                         const std::vector<Triplet>& entries) {
  SparseMatrix m(rows, cols);
  for (const auto& [r, c, v] : entries) {
    if (r >= rows || c >= cols)
      throw ValidationError("sparse matrix: entry (" + std::to_string(r) + "," +
                            std::to_string(c) + ") out of range");
    if (v == 0)
      throw ValidationError("sparse matrix: explicit zero at (" + std::to_string(r) + "," +
                            std::to_string(c) + ")");
    m.columns_[c].push_back({r, v});
  }
  for (std::size_t c = 0; c < cols; ++c) {
    auto& col = m.columns_[c];
    std::sort(col.begin(), col.end(), [](const auto& a, const auto& b) { return a.row < b.row; });
    for (std::size_t i = 1; i < col.size(); ++i)
      if (col[i].row == col[i - 1].row)
        throw ValidationError("sparse matrix: duplicate entry at (" + std::to_string(col[i].row) +
                              "," + std::to_string(c) + ")");
  }
  return m;
}

SparseMatrix SparseMatrix::identity(std::size_t n) {
  SparseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.columns_[i].push_back({i, Integer(1)});
  return m;
}

std::size_t SparseMatrix::nnz() const {
  std::size_t n = 0;
  for (const auto& c : columns_) n += c.size();
  return n;
}

void SparseMatrix::set_column(std::size_t c, Column entries) {
  for (const auto& e : entries)
    if (e.row >= rows_) throw ValidationError("sparse matrix: row index out of range");
  columns_.at(c) = normalize(std::move(entries));
}

Integer SparseMatrix::at(std::size_t r, std::size_t c) const {
  const auto& col = columns_.at(c);
  auto it = std::lower_bound(col.begin(), col.end(), r,
                             [](const Entry& e, std::size_t row) { return e.row < row; });
  if (it != col.end() && it->row == r) return it->value;
  return Integer(0);
}

SparseMatrix SparseMatrix::transpose() const {
  SparseMatrix t(cols_, rows_);
  for (std::size_t c = 0; c < cols_; ++c)
    for (const auto& e : columns_[c]) t.columns_[e.row].push_back({c, e.value});
  return t;
}

SparseMatrix SparseMatrix::operator*(const SparseMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw std::invalid_argument("sparse matrix: dimension mismatch in product");
  SparseMatrix out(rows_, rhs.cols_);
  std::map<std::size_t, Integer> acc;
  for (std::size_t c = 0; c < rhs.cols_; ++c) {
    acc.clear();
    for (const auto& e : rhs.columns_[c])
      for (const auto& f : columns_[e.row]) acc[f.row] += f.value * e.value;
    auto& col = out.columns_[c];
    for (auto& [r, v] : acc)
      if (v != 0) col.push_back({r, v});
  }
  return out;
}

SparseMatrix SparseMatrix::operator+(const SparseMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw std::invalid_argument("sparse matrix: dimension mismatch in sum");
  SparseMatrix out(rows_, cols_);
  for (std::size_t c = 0; c < cols_; ++c) {
    Column merged = columns_[c];
    merged.insert(merged.end(), rhs.columns_[c].begin(), rhs.columns_[c].end());
    out.columns_[c] = normalize(std::move(merged));
  }
  return out;
}

SparseMatrix SparseMatrix::operator-() const {
  SparseMatrix out = *this;
  for (auto& col : out.columns_)
    for (auto& e : col) e.value = -e.value;
  return out;
}

SparseMatrix SparseMatrix::operator-(const SparseMatrix& rhs) const { return *this + (-rhs); }

bool SparseMatrix::is_zero() const {
  for (const auto& c : columns_)
    if (!c.empty()) return false;
  return true;
}

bool SparseMatrix::operator==(const SparseMatrix& rhs) const {
  return rows_ == rhs.rows_ && cols_ == rhs.cols_ && columns_ == rhs.columns_;
}

std::vector<std::vector<Integer>> SparseMatrix::dense() const {
  std::vector<std::vector<Integer>> d(rows_, std::vector<Integer>(cols_, Integer(0)));
  for (std::size_t c = 0; c < cols_; ++c)
    for (const auto& e : columns_[c]) d[e.row][c] = e.value;
  return d;
}

SparseMatrix SparseMatrix::from_dense(const std::vector<std::vector<Integer>>& rows) {
  std::size_t cols = rows.empty() ? 0 : rows.front().size();
  SparseMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw ValidationError("sparse matrix: ragged dense input");
    for (std::size_t c = 0; c < cols; ++c)
      if (rows[r][c] != 0) m.columns_[c].push_back({r, rows[r][c]});
  }
  return m;
}

bool SparseMatrix::first_nonzero(std::size_t& row, std::size_t& col, Integer& value) const {
  for (std::size_t c = 0; c < cols_; ++c)
    if (!columns_[c].empty()) {
      row = columns_[c].front().row;
      col = c;
      value = columns_[c].front().value;
      return true;
    }
  return false;
}

}  // namespace coloop
