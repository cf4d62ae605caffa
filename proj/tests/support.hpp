#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "tauhh/algebra.hpp"
#include "tauhh/errors.hpp"
#include "tauhh/presentation_io.hpp"
#include "tauhh/quiver.hpp"
#include "tauhh/resolution.hpp"

namespace tauhh::test {

/// Seed for randomized suites: TAUHH_TEST_SEED if set, else a fixed default.
inline std::uint64_t seed() {
  if (const char* s = std::getenv("TAUHH_TEST_SEED")) return std::strtoull(s, nullptr, 10);
  return 20261015;
}

inline std::string data_path(const std::string& name) {
  return std::string(TAUHH_TEST_DATA) + "/" + name;
}

inline FDAlgebra load_algebra(const std::string& name) {
  return build_algebra(load_presentation(data_path(name)).presentation);
}

inline FDAlgebra algebra_from(const std::string& text) {
  return build_algebra(parse_presentation(text).presentation);
}

inline Quiver random_quiver(std::mt19937_64& rng, std::size_t max_vertices,
                            std::size_t max_arrows) {
  std::size_t nv = std::uniform_int_distribution<std::size_t>(1, max_vertices)(rng);
  std::size_t na = std::uniform_int_distribution<std::size_t>(1, max_arrows)(rng);
  std::uniform_int_distribution<std::size_t> vertex(0, nv - 1);
  Quiver q;
  for (std::size_t v = 0; v < nv; ++v) q.add_vertex("v" + std::to_string(v));
  for (std::size_t a = 0; a < na; ++a) {
    q.add_arrow("a" + std::to_string(a), vertex(rng), vertex(rng));
  }
  return q;
}

/// Monomial algebra on a random quiver: random relations of length 2 or 3
/// plus every path of length `kill`, so the quotient is finite dimensional.
inline std::optional<FDAlgebra> random_monomial_algebra(std::mt19937_64& rng,
                                                        std::size_t max_vertices,
                                                        std::size_t max_arrows,
                                                        const Field& field,
                                                        std::size_t kill = 4) {
  AlgebraPresentation p;
  p.quiver = random_quiver(rng, max_vertices, max_arrows);
  p.field = field;
  std::vector<Path> candidates = enumerate_paths(p.quiver, 2);
  for (const Path& c : enumerate_paths(p.quiver, 3)) candidates.push_back(c);
  std::bernoulli_distribution pick(0.3);
  std::vector<Path> chosen;
  for (const Path& c : candidates) {
    if (pick(rng)) chosen.push_back(c);
  }
  for (const Path& c : enumerate_paths(p.quiver, kill)) chosen.push_back(c);
  for (const Path& c : chosen) p.relations.push_back(PathVector::single(c, field.one()));
  if (p.relations.empty()) return std::nullopt;
  FDAlgebra a = build_algebra(p);
  // Rejects algebras whose resolutions explode before degree 6.
  if (ext_tor_table(a, 3).total(3) > 24) return std::nullopt;
  return a;
}

namespace oracle {

/// Dense Gaussian elimination over Q, written independently of the library.
inline std::size_t rank_q(std::vector<std::vector<mpq_class>> m) {
  std::size_t r = 0;
  std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = r + 1; i < m.size(); ++i) {
      if (m[i][c] == 0) continue;
      mpq_class f = m[i][c] / m[r][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return r;
}

inline std::size_t rank_mod(std::vector<std::vector<long long>> m, long long p) {
  auto inv = [p](long long a) {
    long long r = 1, e = p - 2;
    a %= p;
    while (e > 0) {
      if (e & 1) r = r * a % p;
      a = a * a % p;
      e >>= 1;
    }
    return r;
  };
  for (auto& row : m) {
    for (auto& v : row) v = ((v % p) + p) % p;
  }
  std::size_t r = 0;
  std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t piv = r;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[r]);
    long long iv = inv(m[r][c]);
    for (std::size_t i = r + 1; i < m.size(); ++i) {
      long long f = m[i][c] * iv % p;
      if (f == 0) continue;
      for (std::size_t j = c; j < cols; ++j) m[i][j] = ((m[i][j] - f * m[r][j]) % p + p) % p;
    }
    ++r;
  }
  return r;
}

using Counts = std::vector<std::vector<std::uint64_t>>;

inline Counts adjacency(const Quiver& q) {
  Counts a(q.num_vertices(), std::vector<std::uint64_t>(q.num_vertices(), 0));
  for (const Arrow& ar : q.arrows()) ++a[ar.source][ar.target];
  return a;
}

/// Entry [x][y] = number of paths of length n from x to y.
inline Counts path_counts(const Quiver& q, std::size_t n) {
  std::size_t v = q.num_vertices();
  Counts a = adjacency(q);
  Counts r(v, std::vector<std::uint64_t>(v, 0));
  for (std::size_t i = 0; i < v; ++i) r[i][i] = 1;
  for (std::size_t k = 0; k < n; ++k) {
    Counts next(v, std::vector<std::uint64_t>(v, 0));
    for (std::size_t i = 0; i < v; ++i) {
      for (std::size_t j = 0; j < v; ++j) {
        for (std::size_t l = 0; l < v; ++l) next[i][l] += r[i][j] * a[j][l];
      }
    }
    r = next;
  }
  return r;
}

/// |O_n| = trace A^n for n >= 1.
inline std::uint64_t cycle_count(const Quiver& q, std::size_t n) {
  Counts p = path_counts(q, n);
  std::uint64_t t = 0;
  for (std::size_t i = 0; i < p.size(); ++i) t += p[i][i];
  return t;
}

inline long long mobius(std::size_t n) {
  long long m = 1;
  for (std::size_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    m = -m;
  }
  return n > 1 ? -m : m;
}

/// Number of rotation orbits of exact size d among the closed paths of
/// length n (d | n), by Moebius inversion of the fixed-point counts.
inline std::uint64_t primitive_orbits(const Quiver& q, std::size_t d) {
  long long s = 0;
  for (std::size_t e = 1; e <= d; ++e) {
    if (d % e == 0) s += mobius(d / e) * static_cast<long long>(cycle_count(q, e));
  }
  return static_cast<std::uint64_t>(s) / d;
}

/// |Ω_n| and |Ω_n^even|.
inline std::pair<std::uint64_t, std::uint64_t> orbit_counts(const Quiver& q, std::size_t n) {
  std::uint64_t all = 0, even = 0;
  for (std::size_t d = 1; d <= n; ++d) {
    if (n % d) continue;
    std::uint64_t k = primitive_orbits(q, d);
    all += k;
    if (d % 2 == 0) even += k;
  }
  return {all, even};
}

inline std::uint64_t parallel(const Quiver& q, std::size_t n) {
  Counts p = path_counts(q, n), a = adjacency(q);
  std::uint64_t s = 0;
  for (std::size_t x = 0; x < p.size(); ++x) {
    for (std::size_t y = 0; y < p.size(); ++y) s += p[x][y] * a[x][y];
  }
  return s;
}

/// Basis size of a monomial algebra: paths containing no relation as a
/// contiguous subword.
inline std::size_t monomial_dim(const Quiver& q, const std::vector<std::vector<std::size_t>>& rels) {
  auto dead = [&](const std::vector<std::size_t>& w) {
    for (const auto& r : rels) {
      if (r.size() > w.size()) continue;
      for (std::size_t i = 0; i + r.size() <= w.size(); ++i) {
        if (std::equal(r.begin(), r.end(), w.begin() + static_cast<std::ptrdiff_t>(i))) return true;
      }
    }
    return false;
  };
  std::size_t count = q.num_vertices();
  std::vector<std::vector<std::size_t>> frontier;
  for (std::size_t a = 0; a < q.num_arrows(); ++a) {
    if (!dead({a})) frontier.push_back({a});
  }
  while (!frontier.empty()) {
    count += frontier.size();
    std::vector<std::vector<std::size_t>> next;
    for (const auto& w : frontier) {
      for (std::size_t a : q.arrows_from(q.arrow(w.back()).target)) {
        auto v = w;
        v.push_back(a);
        if (!dead(v)) next.push_back(v);
      }
    }
    frontier = std::move(next);
  }
  return count;
}

}  // namespace oracle

}  // namespace tauhh::test
