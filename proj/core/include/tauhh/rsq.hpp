#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "tauhh/algebra.hpp"
#include "tauhh/quiver.hpp"
#include "tauhh/scalar.hpp"

namespace tauhh {

/// Cycle and orbit counts of one degree.
struct RsqCounts {
  std::size_t degree = 0;
  std::uint64_t cycles = 0;       // |O_n|
  std::uint64_t orbits = 0;       // |Ω_n|
  std::uint64_t even_orbits = 0;  // |Ω_n^even|
  std::uint64_t parallel = 0;     // |Q_n // Q_1|
};

struct RsqInvariants {
  /// counts[n] for 0 <= n <= max_degree + 1. In degree 0 the cycles are
  /// the vertices, each its own orbit.
  std::vector<RsqCounts> counts;
  Shape shape;
  std::uint64_t characteristic = 0;
};

RsqInvariants rsq_invariants(const Quiver& q, std::uint64_t characteristic,
                             std::size_t max_degree);

/// Dimensions for kQ/F^2. Index = degree; homology and τ entries start at
/// degree 1, HH^0 is filled.
struct RsqDims {
  std::vector<std::size_t> hh_homology;
  std::vector<std::size_t> tau_homology;
  bool cohomology_available = true;
  std::string unavailable_reason;
  std::vector<std::size_t> hh_cohomology;
  std::vector<std::size_t> tau_cohomology;
};

/// Closed forms from the cycle counts. τHH_n = k_n + |O_{n+1}| where k_n is
/// |Ω_n^even| for even n in odd characteristic and |Ω_n| otherwise.
/// Cohomology is summed over the connected components and is unavailable
/// when a component is a crown.
RsqDims rsq_dims(const Quiver& q, std::uint64_t characteristic, std::size_t max_degree);

/// The same dimensions from the minimal complexes: ranks of Id ± t on kO_n
/// for homology and of the D operators for cohomology, over the field.
/// Works for every quiver, crowns included.
RsqDims rsq_direct_dims(const Quiver& q, const Field& field, std::size_t max_degree);

/// kQ/F^2 presentation: every length-2 path is a relation.
AlgebraPresentation rsq_presentation(const Quiver& q, const Field& field);

/// Throws PresentationError naming a length-2 path that survives in a.
void require_radical_square_zero(const FDAlgebra& a);

}  // namespace tauhh
