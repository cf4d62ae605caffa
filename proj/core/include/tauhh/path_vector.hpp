#pragma once

#include <map>
#include <string>

#include "tauhh/quiver.hpp"
#include "tauhh/scalar.hpp"

namespace tauhh {

/// An element of kQ: finitely many paths with nonzero coefficients, kept in
/// canonical path order.
class PathVector {
 public:
  using Terms = std::map<Path, Scalar, PathLess>;

  PathVector() = default;
  static PathVector single(const Path& p, const Scalar& c);

  /// Accumulates c·p; the term disappears if its coefficient becomes zero.
  void add(const Path& p, const Scalar& c);
  PathVector& operator+=(const PathVector& other);
  PathVector& operator*=(const Scalar& c);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Length of the shortest and longest path; undefined on zero.
  std::size_t min_length() const;
  std::size_t max_length() const;

  /// True when every term shares one source and one target.
  bool is_uniform() const;

  /// u·this·w, dropping terms that do not compose.
  PathVector sandwich(const Path& u, const Path& w) const;

  friend bool operator==(const PathVector&, const PathVector&) = default;

 private:
  Terms terms_;
};

/// Written form, e.g. "a*d - c*b" or "y*x + 2*x*y".
std::string format_path_vector(const Quiver& q, const PathVector& v);

}  // namespace tauhh
