#include "tauhh/dense_matrix.hpp"

#include <stdexcept>

#include "tauhh/errors.hpp"

namespace tauhh {

DenseMatrix::DenseMatrix(Field field, std::size_t n_rows, std::size_t n_cols)
    : field_(field),
      n_rows_(n_rows),
      n_cols_(n_cols),
      data_(n_rows * n_cols, field.zero()) {}

DenseMatrix DenseMatrix::identity(Field field, std::size_t n) {
  DenseMatrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
  return m;
}

bool DenseMatrix::is_zero() const {
  for (const auto& s : data_) {
    if (!s.is_zero()) return false;
  }
  return true;
}

DenseMatrix DenseMatrix::transpose() const {
  DenseMatrix t(field_, n_cols_, n_rows_);
  for (std::size_t i = 0; i < n_rows_; ++i) {
    for (std::size_t j = 0; j < n_cols_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

SparseMatrix DenseMatrix::to_sparse() const {
  std::vector<Triplet> ts;
  for (std::size_t i = 0; i < n_rows_; ++i) {
    for (std::size_t j = 0; j < n_cols_; ++j) {
      if (!(*this)(i, j).is_zero()) ts.push_back({i, j, (*this)(i, j)});
    }
  }
  return SparseMatrix::from_triplets(field_, n_rows_, n_cols_, std::move(ts));
}

void DenseMatrix::append_rows(const DenseMatrix& other) {
  if (other.n_cols_ != n_cols_) throw std::invalid_argument("column counts differ");
  if (!(other.field_ == field_)) throw InternalError("stacking matrices over different fields");
  data_.insert(data_.end(), other.data_.begin(), other.data_.end());
  n_rows_ += other.n_rows_;
}

std::vector<std::size_t> DenseMatrix::rref() {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n_cols_ && r < n_rows_; ++c) {
    std::size_t p = r;
    while (p < n_rows_ && (*this)(p, c).is_zero()) ++p;
    if (p == n_rows_) continue;
    if (p != r) {
      for (std::size_t j = 0; j < n_cols_; ++j) std::swap((*this)(p, j), (*this)(r, j));
    }
    Scalar inv = (*this)(r, c).inverse();
    for (std::size_t j = c; j < n_cols_; ++j) (*this)(r, j) *= inv;
    for (std::size_t i = 0; i < n_rows_; ++i) {
      if (i == r || (*this)(i, c).is_zero()) continue;
      Scalar f = (*this)(i, c);
      for (std::size_t j = c; j < n_cols_; ++j) {
        if (!(*this)(r, j).is_zero()) (*this)(i, j) -= f * (*this)(r, j);
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t DenseMatrix::rank() const {
  DenseMatrix copy = *this;
  return copy.rref().size();
}

DenseMatrix DenseMatrix::kernel_basis() const {
  DenseMatrix red = *this;
  std::vector<std::size_t> pivots = red.rref();
  std::vector<bool> is_pivot(n_cols_, false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  std::vector<std::size_t> free;
  for (std::size_t c = 0; c < n_cols_; ++c) {
    if (!is_pivot[c]) free.push_back(c);
  }
  DenseMatrix k(field_, n_cols_, free.size());
  for (std::size_t f = 0; f < free.size(); ++f) {
    k(free[f], f) = field_.one();
    for (std::size_t i = 0; i < pivots.size(); ++i) k(pivots[i], f) = -red(i, free[f]);
  }
  return k;
}

bool operator==(const DenseMatrix& a, const DenseMatrix& b) {
  return a.field_ == b.field_ && a.n_rows_ == b.n_rows_ &&
         a.n_cols_ == b.n_cols_ && a.data_ == b.data_;
}

DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix shapes do not compose");
  if (!(a.field() == b.field())) throw InternalError("matrix product mixes fields");
  DenseMatrix c(a.field(), a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        if (!b(k, j).is_zero()) c(i, j) += a(i, k) * b(k, j);
      }
    }
  }
  return c;
}

}  // namespace tauhh
