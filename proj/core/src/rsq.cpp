#include "tauhh/rsq.hpp"

#include <algorithm>
#include <map>

#include "tauhh/errors.hpp"
#include "tauhh/sparse_matrix.hpp"

namespace tauhh {

RsqInvariants rsq_invariants(const Quiver& q, std::uint64_t characteristic,
                             std::size_t max_degree) {
  RsqInvariants inv;
  inv.shape = classify_shape(q);
  inv.characteristic = characteristic;
  for (std::size_t n = 0; n <= max_degree + 1; ++n) {
    RsqCounts c;
    c.degree = n;
    c.parallel = parallel_pairs(q, n);
    if (n == 0) {
      c.cycles = c.orbits = q.num_vertices();
    } else {
      OrbitDecomposition d = orbit_decomposition(q, n);
      c.cycles = d.cycles.size();
      c.orbits = d.num_orbits();
      c.even_orbits = d.num_even_orbits();
    }
    inv.counts.push_back(c);
  }
  return inv;
}

namespace {

std::uint64_t kernel_count(const RsqCounts& c, std::uint64_t characteristic) {
  if (characteristic != 2 && c.degree % 2 == 0) return c.even_orbits;
  return c.orbits;
}

std::size_t checked(long long v, const char* what, std::size_t n) {
  if (v < 0) {
    throw InternalError(std::string("negative ") + what + " closed form in degree " +
                        std::to_string(n));
  }
  return static_cast<std::size_t>(v);
}

/// HH^n and τHH^n of one connected non-crown quiver, n = 0..N.
void component_cohomology(const Quiver& q, std::size_t max_degree, std::vector<long long>& hh,
                          std::vector<long long>& tau) {
  auto inv = rsq_invariants(q, 0, max_degree);
  const auto& c = inv.counts;
  auto v = static_cast<long long>(q.num_vertices());
  hh[0] += static_cast<long long>(c[0].parallel) + 1;
  if (max_degree >= 1) {
    long long h1 = static_cast<long long>(c[1].parallel) - v + 1;
    hh[1] += h1;
    tau[1] += static_cast<long long>(c[1].cycles) + h1;
  }
  for (std::size_t n = 2; n <= max_degree; ++n) {
    long long hn = static_cast<long long>(c[n].parallel) - static_cast<long long>(c[n - 1].cycles);
    hh[n] += hn;
    tau[n] += static_cast<long long>(c[n].cycles) + hn;
  }
}

}  // namespace

RsqDims rsq_dims(const Quiver& q, std::uint64_t characteristic, std::size_t max_degree) {
  RsqInvariants inv = rsq_invariants(q, characteristic, max_degree);
  RsqDims d;
  d.hh_homology.assign(max_degree + 1, 0);
  d.tau_homology.assign(max_degree + 1, 0);
  for (std::size_t n = 1; n <= max_degree; ++n) {
    const RsqCounts& cur = inv.counts[n];
    const RsqCounts& next = inv.counts[n + 1];
    d.hh_homology[n] = kernel_count(cur, characteristic) + kernel_count(next, characteristic);
    d.tau_homology[n] = kernel_count(cur, characteristic) + next.cycles;
  }

  auto components = connected_components(q);
  for (const auto& comp : components) {
    Quiver sub = induced_subquiver(q, comp);
    Shape s = classify_shape(sub);
    if (s.kind == ShapeKind::Crown) {
      d.cohomology_available = false;
      d.unavailable_reason = "closed form unavailable for the crown on " +
                             std::to_string(s.crown_size) +
                             " vertices; use the general engine";
      return d;
    }
  }
  std::vector<long long> hh(max_degree + 1, 0), tau(max_degree + 1, 0);
  for (const auto& comp : components) component_cohomology(induced_subquiver(q, comp), max_degree, hh, tau);
  d.hh_cohomology.assign(max_degree + 1, 0);
  d.tau_cohomology.assign(max_degree + 1, 0);
  for (std::size_t n = 0; n <= max_degree; ++n) {
    d.hh_cohomology[n] = checked(hh[n], "cohomology", n);
    if (n >= 1) d.tau_cohomology[n] = checked(tau[n], "tau cohomology", n);
  }
  return d;
}

namespace {

std::size_t index_in(const std::vector<Path>& sorted, const Path& p) {
  auto it = std::lower_bound(sorted.begin(), sorted.end(), p, PathLess{});
  if (it == sorted.end() || !(*it == p)) throw InternalError("rotated cycle not found");
  return static_cast<std::size_t>(it - sorted.begin());
}

/// Rank of Id + sign·t on kO_n; cycles are sorted canonically.
std::size_t rotation_rank(const Quiver& q, const std::vector<Path>& cycles, const Field& f,
                          bool plus) {
  std::vector<Triplet> ts;
  Scalar sign = plus ? f.one() : -f.one();
  for (std::size_t i = 0; i < cycles.size(); ++i) {
    ts.push_back({i, i, f.one()});
    ts.push_back({index_in(cycles, rotate(q, cycles[i])), i, sign});
  }
  return rank(SparseMatrix::from_triplets(f, cycles.size(), cycles.size(), std::move(ts)));
}

struct PairKey {
  Path path;
  std::size_t arrow;
  bool operator<(const PairKey& o) const {
    if (arrow != o.arrow) return arrow < o.arrow;
    return PathLess{}(path, o.path);
  }
};

/// Rank of D_{n+1} : kO_n -> k(Q_{n+1} // Q_1).
std::size_t d_rank(const Quiver& q, const Field& f, std::size_t n) {
  std::vector<Path> cycles = n == 0 ? enumerate_paths(q, 0) : enumerate_cycles(q, n);
  std::map<PairKey, std::size_t> rows;
  std::vector<Triplet> ts;
  auto row_of = [&](PairKey k) {
    auto it = rows.find(k);
    if (it == rows.end()) it = rows.emplace(std::move(k), rows.size()).first;
    return it->second;
  };
  Scalar back = n % 2 == 0 ? -f.one() : f.one();
  for (std::size_t i = 0; i < cycles.size(); ++i) {
    const Path& g = cycles[i];
    for (std::size_t a : q.arrows_from(g.target)) {
      ts.push_back({row_of({compose(q.arrow_path(a), g), a}), i, f.one()});
    }
    for (std::size_t a : q.arrows_to(g.source)) {
      ts.push_back({row_of({compose(g, q.arrow_path(a)), a}), i, back});
    }
  }
  return rank(SparseMatrix::from_triplets(f, rows.size(), cycles.size(), std::move(ts)));
}

}  // namespace

RsqDims rsq_direct_dims(const Quiver& q, const Field& field, std::size_t max_degree) {
  RsqDims d;
  std::vector<std::size_t> cycle_count(max_degree + 2, 0), ker(max_degree + 2, 0),
      coker(max_degree + 2, 0);
  for (std::size_t n = 1; n <= max_degree + 1; ++n) {
    auto cycles = enumerate_cycles(q, n);
    std::size_t r = rotation_rank(q, cycles, field, n % 2 == 0);
    cycle_count[n] = cycles.size();
    ker[n] = cycles.size() - r;
    coker[n] = cycles.size() - r;
  }
  d.hh_homology.assign(max_degree + 1, 0);
  d.tau_homology.assign(max_degree + 1, 0);
  for (std::size_t n = 1; n <= max_degree; ++n) {
    d.hh_homology[n] = ker[n] + coker[n + 1];
    d.tau_homology[n] = ker[n] + cycle_count[n + 1];
  }

  // D_{n+1} for n = 0..N; D_0 is zero.
  std::vector<std::size_t> drank(max_degree + 2, 0);
  for (std::size_t n = 0; n <= max_degree; ++n) drank[n + 1] = d_rank(q, field, n);
  d.hh_cohomology.assign(max_degree + 1, 0);
  d.tau_cohomology.assign(max_degree + 1, 0);
  d.hh_cohomology[0] = q.num_vertices() - drank[1] + static_cast<std::size_t>(parallel_pairs(q, 0));
  for (std::size_t n = 1; n <= max_degree; ++n) {
    std::size_t on = enumerate_cycles(q, n).size();
    std::size_t co = static_cast<std::size_t>(parallel_pairs(q, n)) - drank[n];
    d.hh_cohomology[n] = (on - drank[n + 1]) + co;
    d.tau_cohomology[n] = on + co;
  }
  return d;
}

AlgebraPresentation rsq_presentation(const Quiver& q, const Field& field) {
  AlgebraPresentation p{q, field, {}, 20};
  for (const Path& path : enumerate_paths(q, 2)) p.relations.push_back(PathVector::single(path, field.one()));
  return p;
}

void require_radical_square_zero(const FDAlgebra& a) {
  for (const Path& p : enumerate_paths(a.quiver(), 2)) {
    if (!a.normal_form(p).empty()) {
      throw PresentationError("not radical square zero: the path " + a.quiver().path_name(p) +
                              " is nonzero");
    }
  }
}

}  // namespace tauhh
