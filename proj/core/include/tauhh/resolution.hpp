#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "tauhh/algebra.hpp"
#include "tauhh/sparse_matrix.hpp"

namespace tauhh {

/// A finite-dimensional left module: component e_v·M per vertex and, for
/// each arrow a, the images of the basis of M(s(a)) in M(t(a)).
struct LeftModule {
  std::vector<std::size_t> dims;
  /// action[a][j] = a·(basis vector j of M(s(a))).
  std::vector<std::vector<SparseVector>> action;

  std::size_t total_dim() const;
  /// Image of v in M(t(a)) for v in M(s(a)).
  SparseVector apply(std::size_t arrow, const SparseVector& v) const;
};

LeftModule zero_module(const FDAlgebra& a);
LeftModule simple_module(const FDAlgebra& a, std::size_t x);
/// Λe_x in the normal basis of its components e_vΛe_x.
LeftModule projective_module(const FDAlgebra& a, std::size_t x);

/// Throws InternalError when a relation does not act as zero.
void check_module(const FDAlgebra& a, const LeftModule& m);

struct ResolutionStep {
  /// Number of copies of Λe_v in the projective cover, per vertex v.
  std::vector<std::size_t> multiplicities;
  LeftModule syzygy;
};

/// Projective cover P -> M with multiplicities dim(M/rM) per vertex, and
/// the kernel as an abstract module.
ResolutionStep minimal_resolution_step(const LeftModule& m, const FDAlgebra& a);

struct ExtTorTable {
  std::size_t bound = 0;
  /// e[i][x][y] = dim Ext^i(S_x, S_y) = multiplicity of P_y in degree i of
  /// the minimal resolution of S_x.
  std::vector<std::vector<std::vector<std::size_t>>> e;
  /// Projective dimension of S_x when its resolution stops by the bound.
  std::vector<std::optional<std::size_t>> projective_dim;

  std::size_t at(std::size_t i, std::size_t x, std::size_t y) const { return e[i][x][y]; }
  std::size_t total(std::size_t i) const;
  bool all_terminate() const;
};

/// Throws InternalError when the quiver has a loop and yet every simple
/// resolution stops within the bound.
ExtTorTable ext_tor_table(const FDAlgebra& a, std::size_t bound);

struct GlobalDimension {
  bool exact = false;
  /// The global dimension when exact, otherwise a lower bound.
  std::size_t value = 0;
};

GlobalDimension global_dimension(const ExtTorTable& table);
GlobalDimension global_dimension(const FDAlgebra& a, std::size_t bound);

}  // namespace tauhh
