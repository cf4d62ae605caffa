#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "tauhh/scalar.hpp"

namespace tauhh {

/// Sorted (index, nonzero value) pairs.
using SparseVector = std::vector<std::pair<std::size_t, Scalar>>;

struct Triplet {
  std::size_t row;
  std::size_t col;
  Scalar value;
};

enum class RankStrategy {
  /// Integer-preserving sparse elimination with least-fill pivoting.
  FractionFree,
  /// Row-by-row reduction against an echelon basis in exact field arithmetic.
  PlainFraction,
};

/// Row-compressed sparse matrix over one field. Rows are sorted by column
/// and never store zeros.
class SparseMatrix {
 public:
  using Row = SparseVector;

  SparseMatrix(Field field, std::size_t n_rows, std::size_t n_cols);

  /// Sums duplicate positions and drops zeros. Throws std::out_of_range on a
  /// bad index and InternalError on an entry from another field.
  static SparseMatrix from_triplets(Field field, std::size_t n_rows,
                                    std::size_t n_cols,
                                    std::vector<Triplet> triplets);

  const Field& field() const { return field_; }
  std::size_t rows() const { return n_rows_; }
  std::size_t cols() const { return n_cols_; }
  std::size_t nnz() const;
  const Row& row(std::size_t i) const { return rows_.at(i); }
  Scalar at(std::size_t i, std::size_t j) const;
  bool is_zero() const { return nnz() == 0; }

  SparseMatrix transpose() const;

  friend bool operator==(const SparseMatrix&, const SparseMatrix&);

 private:
  Field field_;
  std::size_t n_rows_;
  std::size_t n_cols_;
  std::vector<Row> rows_;
};

std::size_t rank(const SparseMatrix& m,
                 RankStrategy strategy = RankStrategy::FractionFree);
std::size_t kernel_dim(const SparseMatrix& m,
                       RankStrategy strategy = RankStrategy::FractionFree);

/// Reduced row echelon form of the row span. Each row is monic at its
/// pivot, which is its smallest column, and pivots appear in no other row.
struct RowEchelon {
  std::vector<std::size_t> pivots;
  std::vector<SparseVector> rows;
};
RowEchelon reduced_echelon(const SparseMatrix& m);

/// Kernel basis {v : m v = 0}, one vector per free column f of the RREF,
/// equal to 1 at f and 0 at every other free column.
std::vector<SparseVector> kernel_basis(const SparseMatrix& m,
                                       std::vector<std::size_t>* free_columns = nullptr);

/// Product a·b; requires a.cols() == b.rows() and matching fields.
SparseMatrix multiply(const SparseMatrix& a, const SparseMatrix& b);

}  // namespace tauhh
