#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "tauhh/algebra.hpp"
#include "tauhh/resolution.hpp"

namespace tauhh {

/// Proved and Disproved are backed by a theorem or an exact decision;
/// Evidence means nonzero Tor in the top computed degree and nothing more.
enum class Verdict { Proved, Disproved, Evidence, NoEvidence };

const char* verdict_name(Verdict v);

using VertexPair = std::pair<std::size_t, std::size_t>;

struct ClassificationReport {
  std::size_t bound = 0;
  GlobalDimension global_dimension;
  /// (y, x) with yΛx != 0 and e_N(y, x) != 0.
  std::vector<VertexPair> plus_witnesses;
  /// (y, x) with yΛx != 0 and e_N(x, y) != 0.
  std::vector<VertexPair> coplus_witnesses;
  bool local = false;
  /// yΛx != 0 and xΛy != 0 for every pair.
  bool all_peirce_nonzero = false;
  /// yΛx != 0 or xΛy != 0 for every pair.
  bool some_peirce_nonzero = false;
  bool has_loop = false;
  bool monomial = false;
  bool radical_square_zero = false;
  Verdict plus = Verdict::NoEvidence;
  Verdict coplus = Verdict::NoEvidence;
  std::vector<std::string> notes;
};

/// Infinite + (resp. co+) global dimension: some (y, x) with yΛx != 0 and
/// Tor_*(k_x, yk) (resp. Tor_*(k_y, xk)) infinite. The table bound is the
/// probe degree N.
ClassificationReport classify(const FDAlgebra& a, const ExtTorTable& table);

/// For kQ/F^2: whether Tor_*(k_y, xk) is infinite, i.e. whether paths
/// x -> y of unbounded length exist.
bool rsq_exact_infinitude(const Quiver& q, std::size_t y, std::size_t x);

/// True when every length-2 path vanishes in a.
bool is_radical_square_zero(const FDAlgebra& a);

}  // namespace tauhh
