#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace tauhh {

struct Arrow {
  std::string name;
  std::size_t source;
  std::size_t target;
};

/// A path stored in traversal order: arrows[0] is traversed first. The
/// written form reverses this, so "a*b" is stored as {b, a}. A length-0 path
/// is the stationary path at source == target.
struct Path {
  std::size_t source = 0;
  std::size_t target = 0;
  std::vector<std::size_t> arrows;

  std::size_t length() const { return arrows.size(); }
  bool is_vertex() const { return arrows.empty(); }

  friend bool operator==(const Path&, const Path&) = default;
};

/// Canonical order: by length, then vertex (for length 0) or arrow indices
/// in traversal order.
struct PathLess {
  bool operator()(const Path& a, const Path& b) const;
};

struct PathHash {
  std::size_t operator()(const Path& p) const;
};

class Quiver {
 public:
  /// Throws PresentationError on a duplicate name.
  std::size_t add_vertex(const std::string& name);
  /// Throws PresentationError on a duplicate name or a bad endpoint.
  std::size_t add_arrow(const std::string& name, std::size_t source,
                        std::size_t target);

  std::size_t num_vertices() const { return vertices_.size(); }
  std::size_t num_arrows() const { return arrows_.size(); }
  const std::string& vertex_name(std::size_t v) const { return vertices_.at(v); }
  const Arrow& arrow(std::size_t a) const { return arrows_.at(a); }
  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }

  std::optional<std::size_t> find_vertex(const std::string& name) const;
  std::optional<std::size_t> find_arrow(const std::string& name) const;

  const std::vector<std::size_t>& arrows_from(std::size_t v) const { return out_.at(v); }
  const std::vector<std::size_t>& arrows_to(std::size_t v) const { return in_.at(v); }

  Path vertex_path(std::size_t v) const { return Path{v, v, {}}; }
  Path arrow_path(std::size_t a) const;

  /// Written form: "e_x" for a vertex, otherwise arrow names joined by '*'
  /// with the last traversed arrow first.
  std::string path_name(const Path& p) const;

  /// Length-by-length adjacency counts: entry [x][y] = #arrows x -> y.
  std::vector<std::vector<std::uint64_t>> adjacency() const;

  friend bool operator==(const Quiver&, const Quiver&);

 private:
  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
  std::vector<std::vector<std::size_t>> out_;
  std::vector<std::vector<std::size_t>> in_;
};

/// pq: traverse q, then p. Throws std::invalid_argument unless t(q) = s(p).
Path compose(const Path& p, const Path& q);

/// All paths of length n in canonical order (n = 0 gives the vertices).
std::vector<Path> enumerate_paths(const Quiver& q, std::size_t n);

/// All paths of length n from x to y, canonical order.
std::vector<Path> paths_between(const Quiver& q, std::size_t x, std::size_t y,
                                std::size_t n);

/// The set O_n of closed paths of length n; O_0 is the vertex set.
std::vector<Path> enumerate_cycles(const Quiver& q, std::size_t n);

/// Rotation t: the first traversed arrow moves to the end of the traversal,
/// so the cycle now starts at the old second vertex.
Path rotate(const Quiver& q, const Path& cycle);

struct OrbitDecomposition {
  std::size_t degree = 0;
  std::vector<Path> cycles;
  /// Indices into cycles; each orbit is listed from its least member and
  /// orbits are ordered by representative.
  std::vector<std::vector<std::size_t>> orbits;

  std::size_t num_orbits() const { return orbits.size(); }
  std::size_t num_even_orbits() const;
};

OrbitDecomposition orbit_decomposition(const Quiver& q, std::size_t n);

/// |Q_n // Q_1|: pairs (length-n path, arrow) with equal source and target.
std::uint64_t parallel_pairs(const Quiver& q, std::size_t n);

enum class ShapeKind { Acyclic, Crown, General };

struct Shape {
  ShapeKind kind = ShapeKind::General;
  /// Number of vertices when kind == Crown, else 0.
  std::size_t crown_size = 0;
  bool has_loop = false;
  bool connected = true;
};

Shape classify_shape(const Quiver& q);

/// Vertex sets of the connected components of the underlying graph, each
/// sorted, ordered by least vertex.
std::vector<std::vector<std::size_t>> connected_components(const Quiver& q);

/// Full subquiver on the given vertices, keeping declaration order.
Quiver induced_subquiver(const Quiver& q, const std::vector<std::size_t>& vertices);

/// True iff some vertex on an oriented cycle is reachable from x and
/// reaches y, i.e. there are paths x -> y of unbounded length.
bool has_unbounded_paths(const Quiver& q, std::size_t x, std::size_t y);

}  // namespace tauhh
