#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <unordered_map>
#include <vector>

#include "tauhh/algebra.hpp"
#include "tauhh/bimodule.hpp"
#include "tauhh/sparse_matrix.hpp"

namespace tauhh {

inline constexpr std::size_t kDefaultCellCap = 200000;

/// The reduced bar complex of Λ = E ⊕ r with coefficients in a bimodule X.
/// Level n is spanned by composable sequences [w1..wn] of radical basis
/// elements (w1 traversed first); level 0 by the vertices. A cochain on a
/// sequence takes values in X(t(wn), s(w1)), a chain pairs it with
/// X(s(w1), t(wn)).
class BarComplex {
 public:
  using Sequence = std::vector<std::uint32_t>;

  BarComplex(const FDAlgebra& a, const Bimodule& x, std::size_t cell_cap = kDefaultCellCap);

  /// Builds levels on demand. Throws ResourceError naming the degree when
  /// a level exceeds the cell cap.
  std::size_t level_size(std::size_t n);
  const std::vector<Sequence>& level(std::size_t n);

  std::size_t cochain_dim(std::size_t n);
  std::size_t chain_dim(std::size_t n);

  /// δ_n : C^{n-1} -> C^n, rows indexed by C^n; n >= 1.
  SparseMatrix cochain_differential(std::size_t n);
  /// δ'_n : C_n -> C_{n-1}, rows indexed by C_{n-1}; n >= 1.
  SparseMatrix chain_differential(std::size_t n);

 private:
  struct SequenceHash {
    std::size_t operator()(const Sequence& s) const;
  };
  struct Level {
    std::vector<Sequence> seqs;
    std::unordered_map<Sequence, std::size_t, SequenceHash> index;
    std::vector<std::size_t> cochain_offset;
    std::vector<std::size_t> chain_offset;
    std::size_t cochain_total = 0;
    std::size_t chain_total = 0;
  };

  const FDAlgebra& a_;
  const Bimodule& x_;
  std::size_t cap_;
  std::vector<Level> levels_;
  std::vector<std::vector<std::uint32_t>> radical_from_;
  std::map<std::pair<std::size_t, std::size_t>, DenseMatrix> left_cache_;
  std::map<std::pair<std::size_t, std::size_t>, DenseMatrix> right_cache_;

  void ensure(std::size_t n);
  std::size_t source_of(std::size_t n, std::size_t i) const;
  std::size_t target_of(std::size_t n, std::size_t i) const;
  /// Index in level n of seq, or of the vertex v when seq is empty.
  std::size_t lookup(std::size_t n, const Sequence& seq, std::size_t v) const;
  const DenseMatrix& left_action(std::size_t w, std::size_t x);
  const DenseMatrix& right_action(std::size_t w, std::size_t y);
};

struct HochschildDims {
  /// Degrees 0..max_degree.
  std::vector<std::size_t> cohomology;
  std::vector<std::size_t> homology;
};

HochschildDims hh_dims(const FDAlgebra& a, const Bimodule& x, std::size_t max_degree,
                       std::size_t cell_cap = kDefaultCellCap,
                       RankStrategy strategy = RankStrategy::FractionFree);

struct DegreeZeroChecks {
  std::size_t center = 0;
  std::size_t trace_space = 0;
};

/// Recomputes HH^0(Λ,Λ) as the center and HH_0(Λ,Λ) as Λ/[Λ,Λ], and throws
/// InternalError if either differs from the given bar-complex values.
DegreeZeroChecks hh0_crosschecks(const FDAlgebra& a, const HochschildDims& regular);

}  // namespace tauhh
