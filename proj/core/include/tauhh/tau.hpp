#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "tauhh/algebra.hpp"
#include "tauhh/bimodule.hpp"
#include "tauhh/hochschild.hpp"
#include "tauhh/resolution.hpp"

namespace tauhh {

/// A[i] = Σ dim(yXx)·e_i(x,y) and B[i] = Σ dim(yXx)·e_i(y,x), 0 <= i <= bound.
struct Multiplicities {
  std::vector<std::size_t> a;
  std::vector<std::size_t> b;
};

Multiplicities multiplicities(const Bimodule& x, const ExtTorTable& table);

/// Index = degree; index 0 is unused and left at 0.
struct TauDims {
  std::vector<std::size_t> cohomology;
  std::vector<std::size_t> homology;
};

/// τHH^n = (-1)^n [Σ_{i<n} (-1)^{i+1} HH^i + Σ_{i<=n} (-1)^i A_i], and the
/// same with HH_i and B_i for τHH_n, for 1 <= n <= max_degree. Needs HH
/// through max_degree - 1 and multiplicities through max_degree. Throws
/// InternalError if any value is negative.
TauDims tau_dims(const HochschildDims& hh, const Multiplicities& m, std::size_t max_degree);

struct DegreeOne {
  std::size_t cohomology = 0;
  std::size_t homology = 0;
};

/// τHH^1 and τHH_1 of Λ from the center, Λ/[Λ,Λ] and Peirce dimensions.
DegreeOne tau_degree_one(const FDAlgebra& a);

struct VanishingReport {
  /// Least M >= 1 with τHH^i = 0 for all M <= i <= N.
  std::optional<std::size_t> cohomology_tail;
  std::optional<std::size_t> homology_tail;
  /// Least M >= 0 with A_j = 0 (resp. B_j = 0) for all M < j <= N.
  std::size_t a_tail = 0;
  std::size_t b_tail = 0;
  /// Set when the global dimension d is exact, 1 <= d <= N and X = Λ:
  /// τHH_d(Λ) was checked to vanish.
  std::optional<std::size_t> top_degree_checked;
};

/// Checks, for every M in the window, that τ dims vanishing on [M, N]
/// forces A_j = 0 on (M, N] and conversely (and likewise with B for
/// homology). Throws InternalError on a violation.
VanishingReport vanishing_report(const TauDims& tau, const Multiplicities& m,
                                 std::size_t max_degree,
                                 const std::optional<GlobalDimension>& regular_gldim = {});

/// Everything needed for τ dims of Λ with coefficients in X up to N; HH is
/// computed through N - 1 only.
struct TauComputation {
  HochschildDims hh;
  ExtTorTable table;
  Multiplicities mult;
  TauDims tau;
};

TauComputation compute_tau(const FDAlgebra& a, const Bimodule& x, std::size_t max_degree,
                           std::size_t cell_cap = kDefaultCellCap);

}  // namespace tauhh
