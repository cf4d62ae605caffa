#pragma once

#include <cstddef>
#include <vector>

#include "tauhh/algebra.hpp"
#include "tauhh/dense_matrix.hpp"
#include "tauhh/quiver.hpp"

namespace tauhh {

/// A finite-dimensional Λ-bimodule given by its components yXx and the
/// actions of arrows. Left action of a: X(s(a), x) -> X(t(a), x). Right
/// action of a: X(y, t(a)) -> X(y, s(a)).
class Bimodule {
 public:
  Bimodule(Quiver quiver, Field field);

  const Quiver& quiver() const { return quiver_; }
  const Field& field() const { return field_; }

  /// Resets the component and every action matrix touching it to zero.
  void set_dim(std::size_t y, std::size_t x, std::size_t d);
  std::size_t dim(std::size_t y, std::size_t x) const { return dims_[y * nv_ + x]; }
  std::size_t total_dim() const;
  std::vector<std::vector<std::size_t>> dims() const;

  const DenseMatrix& left(std::size_t arrow, std::size_t x) const {
    return left_[arrow * nv_ + x];
  }
  const DenseMatrix& right(std::size_t arrow, std::size_t y) const {
    return right_[arrow * nv_ + y];
  }
  /// Throws PresentationError when the shape does not match the components.
  void set_left(std::size_t arrow, std::size_t x, DenseMatrix m);
  void set_right(std::size_t arrow, std::size_t y, DenseMatrix m);

  /// Action of a path; vertices act as identities.
  DenseMatrix left_path(const Path& p, std::size_t x) const;
  DenseMatrix right_path(const Path& p, std::size_t y) const;

  /// Checks that the two actions commute and that every relation of a acts
  /// as zero on both sides. Throws PresentationError otherwise.
  void validate(const FDAlgebra& a) const;

 private:
  Quiver quiver_;
  Field field_;
  std::size_t nv_;
  std::vector<std::size_t> dims_;
  std::vector<DenseMatrix> left_;
  std::vector<DenseMatrix> right_;

  void reshape_actions(std::size_t y, std::size_t x);
};

/// Λ as a bimodule over itself, in the normal basis of each Peirce component.
Bimodule regular_bimodule(const FDAlgebra& a);

/// DX = Hom_k(X, k); component (y,x) is dual to X(x,y).
Bimodule dual_bimodule(const Bimodule& x);

}  // namespace tauhh
