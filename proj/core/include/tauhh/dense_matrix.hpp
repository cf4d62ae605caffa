#pragma once

#include <cstddef>
#include <vector>

#include "tauhh/scalar.hpp"
#include "tauhh/sparse_matrix.hpp"

namespace tauhh {

/// Small row-major dense matrix. Used where explicit bases are needed
/// (kernels, syzygies, centers); ranks of large complexes go through
/// SparseMatrix.
class DenseMatrix {
 public:
  DenseMatrix(Field field, std::size_t n_rows, std::size_t n_cols);

  static DenseMatrix identity(Field field, std::size_t n);

  const Field& field() const { return field_; }
  std::size_t rows() const { return n_rows_; }
  std::size_t cols() const { return n_cols_; }

  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * n_cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const {
    return data_[i * n_cols_ + j];
  }

  bool is_zero() const;
  DenseMatrix transpose() const;
  SparseMatrix to_sparse() const;

  /// Rows stacked below this matrix; column counts must agree.
  void append_rows(const DenseMatrix& other);

  /// In-place reduced row echelon form; returns the pivot columns. Pivots are
  /// taken left to right, first nonzero row below the current one.
  std::vector<std::size_t> rref();

  std::size_t rank() const;

  /// Basis of {v : M v = 0} as the columns of the result, one per free
  /// column of the RREF, with a 1 in that free column.
  DenseMatrix kernel_basis() const;

  friend bool operator==(const DenseMatrix&, const DenseMatrix&);

 private:
  Field field_;
  std::size_t n_rows_;
  std::size_t n_cols_;
  std::vector<Scalar> data_;
};

DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b);

}  // namespace tauhh
