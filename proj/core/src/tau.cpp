#include "tauhh/tau.hpp"

#include "tauhh/errors.hpp"

namespace tauhh {

Multiplicities multiplicities(const Bimodule& x, const ExtTorTable& table) {
  std::size_t nv = x.quiver().num_vertices();
  Multiplicities m;
  for (std::size_t i = 0; i <= table.bound; ++i) {
    std::size_t a = 0, b = 0;
    for (std::size_t s = 0; s < nv; ++s) {
      for (std::size_t t = 0; t < nv; ++t) {
        a += x.dim(t, s) * table.at(i, s, t);
        b += x.dim(t, s) * table.at(i, t, s);
      }
    }
    m.a.push_back(a);
    m.b.push_back(b);
  }
  return m;
}

namespace {

std::size_t alternating(const std::vector<std::size_t>& hh, const std::vector<std::size_t>& mult,
                        std::size_t n, const char* what) {
  long long sum = 0;
  for (std::size_t i = 0; i < n; ++i) {
    long long v = static_cast<long long>(hh.at(i));
    sum += (i % 2 == 0) ? -v : v;
  }
  for (std::size_t i = 0; i <= n; ++i) {
    long long v = static_cast<long long>(mult.at(i));
    sum += (i % 2 == 0) ? v : -v;
  }
  if (n % 2 == 1) sum = -sum;
  if (sum < 0) {
    throw InternalError(std::string("negative ") + what + " dimension " + std::to_string(sum) +
                        " in degree " + std::to_string(n));
  }
  return static_cast<std::size_t>(sum);
}

}  // namespace

TauDims tau_dims(const HochschildDims& hh, const Multiplicities& m, std::size_t max_degree) {
  TauDims t;
  t.cohomology.assign(max_degree + 1, 0);
  t.homology.assign(max_degree + 1, 0);
  for (std::size_t n = 1; n <= max_degree; ++n) {
    t.cohomology[n] = alternating(hh.cohomology, m.a, n, "tau cohomology");
    t.homology[n] = alternating(hh.homology, m.b, n, "tau homology");
  }
  return t;
}

DegreeOne tau_degree_one(const FDAlgebra& a) {
  const Quiver& q = a.quiver();
  long long diagonal = 0;
  for (std::size_t v = 0; v < q.num_vertices(); ++v) diagonal += static_cast<long long>(a.peirce_dim(v, v));
  long long forward = 0, backward = 0;
  for (const auto& arr : q.arrows()) {
    forward += static_cast<long long>(a.peirce_dim(arr.target, arr.source));
    backward += static_cast<long long>(a.peirce_dim(arr.source, arr.target));
  }
  long long co = static_cast<long long>(center_dim(a)) - diagonal + forward;
  long long ho = static_cast<long long>(trace_space_dim(a)) - diagonal + backward;
  if (co < 0 || ho < 0) throw InternalError("negative degree-one tau dimension");
  return {static_cast<std::size_t>(co), static_cast<std::size_t>(ho)};
}

namespace {

std::optional<std::size_t> zero_tail(const std::vector<std::size_t>& v, std::size_t n) {
  std::optional<std::size_t> tail;
  for (std::size_t i = n; i >= 1; --i) {
    if (v[i] != 0) break;
    tail = i;
  }
  return tail;
}

std::size_t mult_tail(const std::vector<std::size_t>& v, std::size_t n) {
  std::size_t m = n;
  while (m > 0 && v[m] == 0) --m;
  return m;
}

void check_window(const std::vector<std::size_t>& tau, const std::vector<std::size_t>& mult,
                  std::size_t n, const char* what) {
  for (std::size_t m = 1; m <= n; ++m) {
    bool tau_zero = true;
    for (std::size_t i = m; i <= n; ++i) tau_zero = tau_zero && tau[i] == 0;
    bool tau_zero_after = true;
    for (std::size_t i = m + 1; i <= n; ++i) tau_zero_after = tau_zero_after && tau[i] == 0;
    bool mult_zero = true;
    for (std::size_t j = m + 1; j <= n; ++j) mult_zero = mult_zero && mult[j] == 0;
    if (tau_zero && !mult_zero) {
      throw InternalError(std::string(what) + " vanishes from degree " + std::to_string(m) +
                          " but the multiplicities do not");
    }
    if (mult_zero && !tau_zero_after) {
      throw InternalError(std::string("multiplicities vanish after degree ") +
                          std::to_string(m) + " but " + what + " does not");
    }
  }
}

}  // namespace

VanishingReport vanishing_report(const TauDims& tau, const Multiplicities& m,
                                 std::size_t max_degree,
                                 const std::optional<GlobalDimension>& regular_gldim) {
  VanishingReport r;
  r.cohomology_tail = zero_tail(tau.cohomology, max_degree);
  r.homology_tail = zero_tail(tau.homology, max_degree);
  r.a_tail = mult_tail(m.a, max_degree);
  r.b_tail = mult_tail(m.b, max_degree);
  check_window(tau.cohomology, m.a, max_degree, "tau cohomology");
  check_window(tau.homology, m.b, max_degree, "tau homology");
  if (regular_gldim && regular_gldim->exact && regular_gldim->value >= 1 &&
      regular_gldim->value <= max_degree) {
    std::size_t d = regular_gldim->value;
    if (tau.homology[d] != 0) {
      throw InternalError("tau homology in the global dimension " + std::to_string(d) +
                          " is " + std::to_string(tau.homology[d]) + ", not 0");
    }
    r.top_degree_checked = d;
  }
  return r;
}

TauComputation compute_tau(const FDAlgebra& a, const Bimodule& x, std::size_t max_degree,
                           std::size_t cell_cap) {
  TauComputation c;
  c.hh = hh_dims(a, x, max_degree == 0 ? 0 : max_degree - 1, cell_cap);
  c.table = ext_tor_table(a, max_degree);
  c.mult = multiplicities(x, c.table);
  c.tau = tau_dims(c.hh, c.mult, max_degree);
  return c;
}

}  // namespace tauhh
