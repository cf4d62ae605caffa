#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "tauhh/dense_matrix.hpp"
#include "tauhh/path_vector.hpp"
#include "tauhh/quiver.hpp"
#include "tauhh/scalar.hpp"

namespace tauhh {

struct AlgebraPresentation {
  Quiver quiver;
  Field field;
  std::vector<PathVector> relations;
  std::size_t degree_cap = 20;
};

/// Throws PresentationError when a relation is zero, has a term of length
/// < 2, mixes endpoints, or carries coefficients from another field.
void validate_presentation(const AlgebraPresentation& p);

/// Monomial order on paths: length first, then lexicographic on the written
/// word (last traversed arrow first) by arrow declaration order.
struct MonomialLess {
  bool operator()(const Path& a, const Path& b) const;
};

struct BuildOptions {
  /// Use completion even when every relation is a single path.
  bool force_groebner = false;
};

/// Sparse coordinates over the algebra basis, sorted by index.
using BasisVector = std::vector<std::pair<std::size_t, Scalar>>;

class FDAlgebra {
 public:
  const Quiver& quiver() const { return presentation_.quiver; }
  const Field& field() const { return presentation_.field; }
  const AlgebraPresentation& presentation() const { return presentation_; }
  const std::vector<PathVector>& relations() const { return presentation_.relations; }

  std::size_t dim() const { return basis_.size(); }
  /// Vertices first, then normal paths in canonical order.
  const std::vector<Path>& basis() const { return basis_; }
  std::optional<std::size_t> index_of(const Path& p) const;
  std::size_t vertex_index(std::size_t v) const { return v; }
  std::size_t arrow_index(std::size_t a) const { return arrow_index_.at(a); }

  /// Least N with every length-N path in the ideal.
  std::size_t nilpotency_index() const { return nilpotency_; }
  bool is_monomial() const { return monomial_; }
  bool used_completion() const { return completed_; }
  /// Monic rewrite rules from completion; empty on the monomial path.
  const std::vector<PathVector>& reduction_rules() const { return rules_; }

  BasisVector normal_form(const Path& p) const;
  BasisVector normal_form(const PathVector& v) const;
  PathVector to_path_vector(const BasisVector& v) const;

  /// b_i·b_j: traverse b_j, then b_i.
  const BasisVector& multiply(std::size_t i, std::size_t j) const {
    return mult_[i * basis_.size() + j];
  }
  BasisVector multiply(const BasisVector& u, const BasisVector& v) const;

  /// Basis indices of yΛx (paths from x to y).
  const std::vector<std::size_t>& peirce(std::size_t y, std::size_t x) const {
    return peirce_[y * quiver().num_vertices() + x];
  }
  std::size_t peirce_dim(std::size_t y, std::size_t x) const { return peirce(y, x).size(); }
  /// Entry [y][x] = dim yΛx.
  std::vector<std::vector<std::size_t>> peirce_dims() const;
  /// Position of basis element i inside its Peirce component list.
  std::size_t peirce_position(std::size_t i) const { return peirce_pos_[i]; }

  /// Basis indices of normal paths of length >= 1.
  std::vector<std::size_t> radical_basis() const;

 private:
  friend FDAlgebra build_algebra(const AlgebraPresentation&, const BuildOptions&);

  AlgebraPresentation presentation_;
  std::vector<Path> basis_;
  std::unordered_map<Path, std::size_t, PathHash> index_;
  std::vector<std::size_t> arrow_index_;
  std::size_t nilpotency_ = 1;
  bool monomial_ = false;
  bool completed_ = false;
  std::vector<PathVector> rules_;
  std::vector<std::vector<Path>> monomial_words_;
  std::unordered_map<Path, BasisVector, PathHash> reduced_;
  std::vector<BasisVector> mult_;
  std::vector<std::vector<std::size_t>> peirce_;
  std::vector<std::size_t> peirce_pos_;

  BasisVector compute_normal_form(const Path& p) const;
};

/// Throws PresentationError on a malformed presentation and
/// AdmissibilityError when no N <= degree_cap has F^N inside the ideal.
FDAlgebra build_algebra(const AlgebraPresentation& p,
                        const BuildOptions& options = {});

/// dim Z(Λ) with a basis as the columns of the returned matrix.
DenseMatrix center_basis(const FDAlgebra& a);
std::size_t center_dim(const FDAlgebra& a);

/// dim Λ/[Λ,Λ].
std::size_t trace_space_dim(const FDAlgebra& a);

}  // namespace tauhh
