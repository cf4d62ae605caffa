#include "tauhh/algebra.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <tuple>

#include "tauhh/errors.hpp"

namespace tauhh {

void validate_presentation(const AlgebraPresentation& p) {
  if (p.degree_cap == 0) throw PresentationError("degree cap must be positive");
  for (std::size_t i = 0; i < p.relations.size(); ++i) {
    const PathVector& r = p.relations[i];
    std::string label = "relation " + std::to_string(i + 1);
    if (r.is_zero()) throw PresentationError(label + " is zero");
    if (r.min_length() < 2) {
      throw PresentationError(label + " has a term of length < 2");
    }
    if (!r.is_uniform()) throw PresentationError(label + " mixes endpoints");
    for (const auto& [path, c] : r.terms()) {
      if (c.modulus() != p.field.characteristic()) {
        throw PresentationError(label + " has a coefficient outside " + p.field.name());
      }
      for (std::size_t k = 0; k < path.arrows.size(); ++k) {
        if (path.arrows[k] >= p.quiver.num_arrows()) {
          throw PresentationError(label + " uses an unknown arrow");
        }
        if (k > 0 && p.quiver.arrow(path.arrows[k - 1]).target !=
                         p.quiver.arrow(path.arrows[k]).source) {
          throw PresentationError(label + " has a non-composable term");
        }
      }
    }
  }
}

bool MonomialLess::operator()(const Path& a, const Path& b) const {
  if (a.length() != b.length()) return a.length() < b.length();
  if (a.is_vertex()) return a.source < b.source;
  return std::lexicographical_compare(a.arrows.rbegin(), a.arrows.rend(),
                                      b.arrows.rbegin(), b.arrows.rend());
}

namespace {

using OrderedTerms = std::map<Path, Scalar, MonomialLess>;

Path subpath(const Quiver& q, const Path& p, std::size_t from, std::size_t to) {
  Path s;
  s.source = from == 0 ? p.source : q.arrow(p.arrows[from - 1]).target;
  s.target = s.source;
  s.arrows.assign(p.arrows.begin() + static_cast<std::ptrdiff_t>(from),
                  p.arrows.begin() + static_cast<std::ptrdiff_t>(to));
  if (!s.arrows.empty()) s.target = q.arrow(s.arrows.back()).target;
  return s;
}

std::optional<std::size_t> find_subword(const std::vector<std::size_t>& hay,
                                        const std::vector<std::size_t>& needle) {
  if (needle.size() > hay.size()) return std::nullopt;
  auto it = std::search(hay.begin(), hay.end(), needle.begin(), needle.end());
  if (it == hay.end()) return std::nullopt;
  return static_cast<std::size_t>(it - hay.begin());
}

bool ends_with(const std::vector<std::size_t>& hay, const std::vector<std::size_t>& needle) {
  return needle.size() <= hay.size() &&
         std::equal(needle.begin(), needle.end(), hay.end() - static_cast<std::ptrdiff_t>(needle.size()));
}

Path leading_monomial(const PathVector& v) {
  return std::max_element(v.terms().begin(), v.terms().end(),
                          [](const auto& a, const auto& b) {
                            return MonomialLess{}(a.first, b.first);
                          })
      ->first;
}

PathVector make_monic(const PathVector& v) {
  PathVector out = v;
  out *= v.terms().at(leading_monomial(v)).inverse();
  return out;
}

/// Rewrite rules g = LM + tail; LM is replaced by -tail.
class RewriteSystem {
 public:
  explicit RewriteSystem(const Quiver& q) : q_(q) {}

  const std::vector<PathVector>& rules() const { return rules_; }
  const Path& lm(std::size_t i) const { return lms_[i]; }

  PathVector reduce(const PathVector& v, std::optional<std::size_t> skip = {}) const {
    OrderedTerms pending;
    for (const auto& [p, c] : v.terms()) pending.emplace(p, c);
    PathVector result;
    while (!pending.empty()) {
      auto top = std::prev(pending.end());
      Path p = top->first;
      Scalar c = top->second;
      pending.erase(top);
      bool rewritten = false;
      for (std::size_t r = 0; r < rules_.size() && !rewritten; ++r) {
        if (skip && *skip == r) continue;
        auto pos = find_subword(p.arrows, lms_[r].arrows);
        if (!pos) continue;
        Path head = subpath(q_, p, 0, *pos);
        Path tail = subpath(q_, p, *pos + lms_[r].length(), p.length());
        for (const auto& [t, tc] : rules_[r].terms()) {
          if (t == lms_[r]) continue;
          Path w = compose(tail, compose(t, head));
          Scalar delta = -(c * tc);
          auto [it, fresh] = pending.emplace(w, delta);
          if (!fresh) {
            it->second += delta;
            if (it->second.is_zero()) pending.erase(it);
          }
        }
        rewritten = true;
      }
      if (!rewritten) result.add(p, c);
    }
    return result;
  }

  void add(const PathVector& g) {
    rules_.push_back(make_monic(g));
    lms_.push_back(leading_monomial(rules_.back()));
  }

  /// Reduces every rule by the others until stable, dropping zeros.
  void interreduce() {
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t i = 0; i < rules_.size(); ++i) {
        PathVector r = reduce(rules_[i], i);
        if (r == rules_[i]) continue;
        changed = true;
        rules_.erase(rules_.begin() + static_cast<std::ptrdiff_t>(i));
        lms_.erase(lms_.begin() + static_cast<std::ptrdiff_t>(i));
        if (!r.is_zero()) add(r);
        break;
      }
    }
  }

 private:
  const Quiver& q_;
  std::vector<PathVector> rules_;
  std::vector<Path> lms_;
};

using OverlapKey = std::tuple<std::vector<std::size_t>, std::vector<std::size_t>, std::size_t>;

/// Buchberger completion over overlaps of total length <= cap, smallest
/// degree first.
void complete(RewriteSystem& sys, const Quiver& q, const Field& field, std::size_t cap) {
  sys.interreduce();
  std::set<OverlapKey> done;
  while (true) {
    std::optional<std::tuple<std::size_t, std::size_t, std::size_t, std::size_t>> best;
    for (std::size_t i = 0; i < sys.rules().size(); ++i) {
      const Path& u = sys.lm(i);
      for (std::size_t j = 0; j < sys.rules().size(); ++j) {
        const Path& v = sys.lm(j);
        for (std::size_t l = 1; l < std::min(u.length(), v.length()); ++l) {
          std::size_t degree = u.length() + v.length() - l;
          if (degree > cap) continue;
          if (best && std::get<0>(*best) <= degree) continue;
          if (!std::equal(u.arrows.end() - static_cast<std::ptrdiff_t>(l), u.arrows.end(),
                          v.arrows.begin())) {
            continue;
          }
          if (done.count({u.arrows, v.arrows, l})) continue;
          best = std::make_tuple(degree, i, j, l);
        }
      }
    }
    if (!best) return;
    auto [degree, i, j, l] = *best;
    const Path u = sys.lm(i);
    const Path v = sys.lm(j);
    done.insert({u.arrows, v.arrows, l});
    Path after = subpath(q, v, l, v.length());
    Path before = subpath(q, u, 0, u.length() - l);
    PathVector s = sys.rules()[i].sandwich(after, q.vertex_path(u.source));
    PathVector right = sys.rules()[j].sandwich(q.vertex_path(v.target), before);
    right *= -field.one();
    s += right;
    PathVector reduced = sys.reduce(s);
    if (!reduced.is_zero()) {
      sys.add(reduced);
      sys.interreduce();
    }
  }
}

/// Echelon insertion keyed by the leading monomial.
void insert_echelon(std::map<Path, PathVector, MonomialLess>& basis, PathVector v) {
  while (!v.is_zero()) {
    Path lead = leading_monomial(v);
    auto it = basis.find(lead);
    if (it == basis.end()) {
      basis.emplace(lead, make_monic(v));
      return;
    }
    PathVector sub = it->second;
    sub *= -v.terms().at(lead);
    v += sub;
  }
}

std::optional<Path> find_surviving_path(const Quiver& q, std::size_t depth,
                                        const std::function<bool(const Path&)>& survives) {
  std::function<std::optional<Path>(Path&)> dfs = [&](Path& p) -> std::optional<Path> {
    if (p.length() == depth) return p;
    for (std::size_t a : q.arrows_from(p.target)) {
      Path next = compose(q.arrow_path(a), p);
      if (!survives(next)) continue;
      if (auto found = dfs(next)) return found;
    }
    return std::nullopt;
  };
  for (std::size_t v = 0; v < q.num_vertices(); ++v) {
    Path start = q.vertex_path(v);
    if (auto found = dfs(start)) return found;
  }
  return std::nullopt;
}

[[noreturn]] void not_admissible(const Quiver& q, std::size_t cap,
                                 const std::optional<Path>& witness) {
  std::string msg = "no N <= " + std::to_string(cap) + " with all length-N paths in the ideal";
  if (witness) msg += "; surviving path " + q.path_name(*witness);
  throw AdmissibilityError(msg);
}

}  // namespace

std::optional<std::size_t> FDAlgebra::index_of(const Path& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

BasisVector FDAlgebra::compute_normal_form(const Path& p) const {
  if (auto i = index_of(p)) return {{*i, field().one()}};
  auto it = reduced_.find(p);
  if (it != reduced_.end()) return it->second;
  return {};
}

BasisVector FDAlgebra::normal_form(const Path& p) const { return compute_normal_form(p); }

namespace {

void accumulate(std::map<std::size_t, Scalar>& acc, std::size_t i, const Scalar& c) {
  auto [it, fresh] = acc.emplace(i, c);
  if (!fresh) it->second += c;
}

BasisVector flatten(std::map<std::size_t, Scalar>& acc) {
  BasisVector out;
  for (auto& [i, c] : acc) {
    if (!c.is_zero()) out.emplace_back(i, std::move(c));
  }
  return out;
}

}  // namespace

BasisVector FDAlgebra::normal_form(const PathVector& v) const {
  std::map<std::size_t, Scalar> acc;
  for (const auto& [p, c] : v.terms()) {
    for (const auto& [i, x] : compute_normal_form(p)) accumulate(acc, i, c * x);
  }
  return flatten(acc);
}

PathVector FDAlgebra::to_path_vector(const BasisVector& v) const {
  PathVector out;
  for (const auto& [i, c] : v) out.add(basis_[i], c);
  return out;
}

BasisVector FDAlgebra::multiply(const BasisVector& u, const BasisVector& v) const {
  std::map<std::size_t, Scalar> acc;
  for (const auto& [i, x] : u) {
    for (const auto& [j, y] : v) {
      for (const auto& [k, z] : multiply(i, j)) accumulate(acc, k, x * y * z);
    }
  }
  return flatten(acc);
}

std::vector<std::vector<std::size_t>> FDAlgebra::peirce_dims() const {
  std::size_t n = quiver().num_vertices();
  std::vector<std::vector<std::size_t>> d(n, std::vector<std::size_t>(n, 0));
  for (std::size_t y = 0; y < n; ++y) {
    for (std::size_t x = 0; x < n; ++x) d[y][x] = peirce_dim(y, x);
  }
  return d;
}

std::vector<std::size_t> FDAlgebra::radical_basis() const {
  std::vector<std::size_t> r;
  for (std::size_t i = quiver().num_vertices(); i < basis_.size(); ++i) r.push_back(i);
  return r;
}

FDAlgebra build_algebra(const AlgebraPresentation& p, const BuildOptions& options) {
  validate_presentation(p);
  const Quiver& q = p.quiver;
  FDAlgebra alg;
  alg.presentation_ = p;
  alg.monomial_ = std::all_of(p.relations.begin(), p.relations.end(),
                              [](const PathVector& r) { return r.size() == 1; });
  std::size_t cap = p.degree_cap;
  std::vector<Path> normal;

  if (alg.monomial_ && !options.force_groebner) {
    std::vector<std::vector<std::size_t>> words;
    for (const auto& r : p.relations) words.push_back(r.terms().begin()->first.arrows);
    auto suffix_free = [&](const Path& path) {
      return std::none_of(words.begin(), words.end(), [&](const auto& w) {
        return ends_with(path.arrows, w);
      });
    };
    if (auto w = find_surviving_path(q, cap, suffix_free)) not_admissible(q, cap, w);
    std::vector<Path> level;
    for (std::size_t v = 0; v < q.num_vertices(); ++v) level.push_back(q.vertex_path(v));
    std::size_t n = 0;
    while (!level.empty()) {
      if (n > 0) normal.insert(normal.end(), level.begin(), level.end());
      std::vector<Path> next;
      for (const Path& path : level) {
        for (std::size_t a : q.arrows_from(path.target)) {
          Path ext = compose(q.arrow_path(a), path);
          if (suffix_free(ext)) next.push_back(std::move(ext));
        }
      }
      level = std::move(next);
      ++n;
    }
    alg.nilpotency_ = std::max<std::size_t>(n, 1);
  } else {
    alg.completed_ = true;
    RewriteSystem sys(q);
    for (const auto& r : p.relations) sys.add(r);
    complete(sys, q, p.field, cap);
    alg.rules_ = sys.rules();

    std::vector<PathVector> span;
    for (std::size_t v = 0; v < q.num_vertices(); ++v) {
      span.push_back(PathVector::single(q.vertex_path(v), p.field.one()));
    }
    std::size_t n = 1;
    for (; n <= cap; ++n) {
      std::map<Path, PathVector, MonomialLess> echelon;
      for (const auto& v : span) {
        const Path& any = v.terms().begin()->first;
        for (std::size_t a : q.arrows_from(any.target)) {
          insert_echelon(echelon, sys.reduce(v.sandwich(q.arrow_path(a), q.vertex_path(any.source))));
        }
      }
      span.clear();
      for (auto& e : echelon) span.push_back(std::move(e.second));
      if (span.empty()) break;
    }
    if (n > cap) {
      auto survives = [&](const Path& path) {
        return !sys.reduce(PathVector::single(path, p.field.one())).is_zero();
      };
      not_admissible(q, cap, find_surviving_path(q, cap, survives));
    }
    alg.nilpotency_ = n;

    std::vector<Path> columns;
    for (std::size_t len = 0; len < n; ++len) {
      auto ps = enumerate_paths(q, len);
      columns.insert(columns.end(), ps.begin(), ps.end());
    }
    std::sort(columns.begin(), columns.end(),
              [](const Path& a, const Path& b) { return MonomialLess{}(b, a); });
    std::map<Path, PathVector, MonomialLess> echelon;
    for (const auto& r : p.relations) {
      std::size_t slack = n - std::min(n, r.min_length());
      std::size_t src = r.terms().begin()->first.source;
      std::size_t tgt = r.terms().begin()->first.target;
      for (const Path& w : columns) {
        if (w.target != src || w.length() >= slack) continue;
        for (const Path& u : columns) {
          if (u.source != tgt || u.length() + w.length() >= slack) continue;
          PathVector row, full = r.sandwich(u, w);
          for (const auto& [path, c] : full.terms()) {
            if (path.length() < n) row.add(path, c);
          }
          insert_echelon(echelon, std::move(row));
        }
      }
    }
    for (auto it = echelon.begin(); it != echelon.end(); ++it) {
      PathVector& row = it->second;
      bool again = true;
      while (again) {
        again = false;
        for (const auto& [path, c] : row.terms()) {
          if (path == it->first) continue;
          auto piv = echelon.find(path);
          if (piv == echelon.end()) continue;
          PathVector sub = piv->second;
          sub *= -c;
          row += sub;
          again = true;
          break;
        }
      }
    }
    for (const Path& path : columns) {
      if (!path.is_vertex() && !echelon.count(path)) normal.push_back(path);
    }
    std::sort(normal.begin(), normal.end(), PathLess{});
    for (std::size_t v = 0; v < q.num_vertices(); ++v) alg.basis_.push_back(q.vertex_path(v));
    alg.basis_.insert(alg.basis_.end(), normal.begin(), normal.end());
    for (std::size_t i = 0; i < alg.basis_.size(); ++i) alg.index_.emplace(alg.basis_[i], i);
    for (const auto& [lead, row] : echelon) {
      BasisVector nf;
      for (const auto& [path, c] : row.terms()) {
        if (path == lead) continue;
        nf.emplace_back(alg.index_.at(path), -c);
      }
      std::sort(nf.begin(), nf.end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });
      alg.reduced_.emplace(lead, std::move(nf));
    }
    normal.clear();
  }

  if (alg.basis_.empty()) {
    std::sort(normal.begin(), normal.end(), PathLess{});
    for (std::size_t v = 0; v < q.num_vertices(); ++v) alg.basis_.push_back(q.vertex_path(v));
    alg.basis_.insert(alg.basis_.end(), normal.begin(), normal.end());
    for (std::size_t i = 0; i < alg.basis_.size(); ++i) alg.index_.emplace(alg.basis_[i], i);
  }

  for (std::size_t a = 0; a < q.num_arrows(); ++a) {
    alg.arrow_index_.push_back(alg.index_.at(q.arrow_path(a)));
  }
  std::size_t d = alg.basis_.size();
  alg.mult_.assign(d * d, {});
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      if (alg.basis_[i].source != alg.basis_[j].target) continue;
      alg.mult_[i * d + j] = alg.compute_normal_form(compose(alg.basis_[i], alg.basis_[j]));
    }
  }
  std::size_t nv = q.num_vertices();
  alg.peirce_.assign(nv * nv, {});
  alg.peirce_pos_.assign(d, 0);
  for (std::size_t i = 0; i < d; ++i) {
    auto& comp = alg.peirce_[alg.basis_[i].target * nv + alg.basis_[i].source];
    alg.peirce_pos_[i] = comp.size();
    comp.push_back(i);
  }
  return alg;
}

namespace {

BasisVector commutator(const FDAlgebra& a, std::size_t i, std::size_t j) {
  std::map<std::size_t, Scalar> acc;
  for (const auto& [k, c] : a.multiply(i, j)) accumulate(acc, k, c);
  for (const auto& [k, c] : a.multiply(j, i)) accumulate(acc, k, -c);
  return flatten(acc);
}

}  // namespace

DenseMatrix center_basis(const FDAlgebra& a) {
  std::size_t d = a.dim();
  std::vector<std::size_t> generators;
  for (std::size_t v = 0; v < a.quiver().num_vertices(); ++v) generators.push_back(v);
  for (std::size_t x = 0; x < a.quiver().num_arrows(); ++x) generators.push_back(a.arrow_index(x));
  DenseMatrix eq(a.field(), generators.size() * d, d);
  for (std::size_t g = 0; g < generators.size(); ++g) {
    for (std::size_t i = 0; i < d; ++i) {
      for (const auto& [k, c] : commutator(a, i, generators[g])) eq(g * d + k, i) = c;
    }
  }
  return eq.kernel_basis();
}

std::size_t center_dim(const FDAlgebra& a) { return center_basis(a).cols(); }

std::size_t trace_space_dim(const FDAlgebra& a) {
  std::size_t d = a.dim();
  std::vector<Triplet> ts;
  std::size_t row = 0;
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i + 1; j < d; ++j) {
      BasisVector c = commutator(a, i, j);
      if (c.empty()) continue;
      for (auto& [k, x] : c) ts.push_back({row, k, std::move(x)});
      ++row;
    }
  }
  return d - rank(SparseMatrix::from_triplets(a.field(), row, d, std::move(ts)));
}

}  // namespace tauhh
