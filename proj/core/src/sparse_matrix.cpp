#include "tauhh/sparse_matrix.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "tauhh/errors.hpp"

namespace tauhh {

namespace {

void check_field(const Field& field, const Scalar& s) {
  if (s.modulus() != field.characteristic()) {
    throw InternalError("matrix entry from " + s.field().name() +
                        " in a matrix over " + field.name());
  }
}

template <class V>
using GenericRow = std::vector<std::pair<std::size_t, V>>;

template <class V>
const V* find_entry(const GenericRow<V>& row, std::size_t col) {
  auto it = std::lower_bound(
      row.begin(), row.end(), col,
      [](const auto& e, std::size_t c) { return e.first < c; });
  if (it == row.end() || it->first != col) return nullptr;
  return &it->second;
}

struct IntegerOps {
  using Value = mpz_class;

  GenericRow<mpz_class> eliminate(const GenericRow<mpz_class>& pivot,
                                  std::size_t col,
                                  const GenericRow<mpz_class>& target) const {
    const mpz_class& p = *find_entry(pivot, col);
    const mpz_class& v = *find_entry(target, col);
    mpz_class g = gcd(p, v);
    mpz_class a = p / g;
    mpz_class b = v / g;
    GenericRow<mpz_class> out;
    out.reserve(pivot.size() + target.size());
    std::size_t i = 0, j = 0;
    while (i < target.size() || j < pivot.size()) {
      if (j == pivot.size() ||
          (i < target.size() && target[i].first < pivot[j].first)) {
        out.emplace_back(target[i].first, a * target[i].second);
        ++i;
      } else if (i == target.size() || pivot[j].first < target[i].first) {
        out.emplace_back(pivot[j].first, -b * pivot[j].second);
        ++j;
      } else {
        mpz_class x = a * target[i].second - b * pivot[j].second;
        if (sgn(x) != 0) out.emplace_back(target[i].first, std::move(x));
        ++i;
        ++j;
      }
    }
    normalize(out);
    return out;
  }

  static void normalize(GenericRow<mpz_class>& row) {
    if (row.empty()) return;
    mpz_class g = 0;
    for (const auto& e : row) {
      g = gcd(g, e.second);
      if (g == 1) return;
    }
    for (auto& e : row) mpz_divexact(e.second.get_mpz_t(), e.second.get_mpz_t(), g.get_mpz_t());
  }
};

struct ModularOps {
  using Value = std::uint32_t;
  std::uint32_t p;

  GenericRow<std::uint32_t> eliminate(const GenericRow<std::uint32_t>& pivot,
                                      std::size_t col,
                                      const GenericRow<std::uint32_t>& target) const {
    std::uint64_t factor = std::uint64_t{*find_entry(target, col)} *
                           inverse_mod(*find_entry(pivot, col), p) % p;
    std::uint64_t neg = (p - factor) % p;
    GenericRow<std::uint32_t> out;
    out.reserve(pivot.size() + target.size());
    std::size_t i = 0, j = 0;
    while (i < target.size() || j < pivot.size()) {
      if (j == pivot.size() ||
          (i < target.size() && target[i].first < pivot[j].first)) {
        out.push_back(target[i]);
        ++i;
      } else if (i == target.size() || pivot[j].first < target[i].first) {
        out.emplace_back(pivot[j].first,
                         static_cast<std::uint32_t>(neg * pivot[j].second % p));
        ++j;
      } else {
        auto x = static_cast<std::uint32_t>(
            (target[i].second + neg * pivot[j].second) % p);
        if (x != 0) out.emplace_back(target[i].first, x);
        ++i;
        ++j;
      }
    }
    return out;
  }
};

/// Least-fill elimination: the pivot row is the active row with fewest
/// nonzeros, the pivot column the one of that row met by fewest active rows.
template <class Ops>
std::size_t markowitz_rank(std::vector<GenericRow<typename Ops::Value>> rows,
                           std::size_t n_cols, const Ops& ops) {
  std::set<std::pair<std::size_t, std::size_t>> by_fill;
  std::vector<std::set<std::size_t>> col_rows(n_cols);
  auto attach = [&](std::size_t r) {
    if (rows[r].empty()) return;
    by_fill.emplace(rows[r].size(), r);
    for (const auto& e : rows[r]) col_rows[e.first].insert(r);
  };
  auto detach = [&](std::size_t r) {
    by_fill.erase({rows[r].size(), r});
    for (const auto& e : rows[r]) col_rows[e.first].erase(r);
  };
  for (std::size_t r = 0; r < rows.size(); ++r) attach(r);

  std::size_t rank = 0;
  while (!by_fill.empty()) {
    std::size_t r = by_fill.begin()->second;
    std::size_t col = rows[r].front().first;
    std::size_t best = col_rows[col].size();
    for (const auto& e : rows[r]) {
      if (col_rows[e.first].size() < best) {
        best = col_rows[e.first].size();
        col = e.first;
      }
    }
    detach(r);
    std::vector<std::size_t> targets(col_rows[col].begin(), col_rows[col].end());
    for (std::size_t t : targets) {
      detach(t);
      rows[t] = ops.eliminate(rows[r], col, rows[t]);
      attach(t);
    }
    rows[r].clear();
    ++rank;
  }
  return rank;
}

std::size_t fraction_free_rank(const SparseMatrix& m) {
  if (m.field().is_rational()) {
    std::vector<GenericRow<mpz_class>> rows(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
      const auto& src = m.row(i);
      mpz_class den = 1;
      for (const auto& e : src) den = lcm(den, e.second.rational_value().get_den());
      rows[i].reserve(src.size());
      for (const auto& e : src) {
        const mpq_class& q = e.second.rational_value();
        rows[i].emplace_back(e.first, q.get_num() * (den / q.get_den()));
      }
      IntegerOps::normalize(rows[i]);
    }
    return markowitz_rank(std::move(rows), m.cols(), IntegerOps{});
  }
  std::vector<GenericRow<std::uint32_t>> rows(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (const auto& e : m.row(i)) rows[i].emplace_back(e.first, e.second.residue());
  }
  return markowitz_rank(std::move(rows), m.cols(),
                        ModularOps{m.field().characteristic()});
}

std::size_t plain_fraction_rank(const SparseMatrix& m) {
  std::map<std::size_t, SparseMatrix::Row> pivots;
  std::size_t rank = 0;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    SparseMatrix::Row r = m.row(i);
    while (!r.empty()) {
      auto it = pivots.find(r.front().first);
      if (it == pivots.end()) {
        Scalar inv = r.front().second.inverse();
        for (auto& e : r) e.second *= inv;
        pivots.emplace(r.front().first, std::move(r));
        ++rank;
        break;
      }
      const Scalar factor = r.front().second;
      std::map<std::size_t, Scalar> acc(r.begin(), r.end());
      for (const auto& e : it->second) {
        auto [pos, fresh] = acc.emplace(e.first, -(factor * e.second));
        if (!fresh) pos->second -= factor * e.second;
      }
      r.clear();
      for (auto& e : acc) {
        if (!e.second.is_zero()) r.emplace_back(e.first, std::move(e.second));
      }
    }
  }
  return rank;
}

SparseVector axpy(const SparseVector& y, const Scalar& a, const SparseVector& x) {
  SparseVector out;
  out.reserve(x.size() + y.size());
  std::size_t i = 0, j = 0;
  while (i < y.size() || j < x.size()) {
    if (j == x.size() || (i < y.size() && y[i].first < x[j].first)) {
      out.push_back(y[i++]);
    } else if (i == y.size() || x[j].first < y[i].first) {
      out.emplace_back(x[j].first, a * x[j].second);
      ++j;
    } else {
      Scalar v = y[i].second + a * x[j].second;
      if (!v.is_zero()) out.emplace_back(y[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

RowEchelon reduced_echelon(const SparseMatrix& m) {
  std::map<std::size_t, SparseVector> pivots;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    SparseVector r = m.row(i);
    while (!r.empty()) {
      auto it = pivots.find(r.front().first);
      if (it == pivots.end()) {
        Scalar inv = r.front().second.inverse();
        for (auto& e : r) e.second *= inv;
        pivots.emplace(r.front().first, std::move(r));
        break;
      }
      r = axpy(r, -r.front().second, it->second);
    }
  }
  for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
    SparseVector& r = it->second;
    std::size_t k = 1;
    while (k < r.size()) {
      auto piv = pivots.find(r[k].first);
      if (piv == pivots.end()) {
        ++k;
        continue;
      }
      Scalar c = r[k].second;
      r = axpy(r, -c, piv->second);
    }
  }
  RowEchelon out;
  for (auto& [col, row] : pivots) {
    out.pivots.push_back(col);
    out.rows.push_back(std::move(row));
  }
  return out;
}

std::vector<SparseVector> kernel_basis(const SparseMatrix& m,
                                       std::vector<std::size_t>* free_columns) {
  RowEchelon e = reduced_echelon(m);
  std::vector<std::size_t> slot(m.cols(), SIZE_MAX);
  std::vector<std::size_t> free;
  {
    std::size_t p = 0;
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (p < e.pivots.size() && e.pivots[p] == c) {
        ++p;
      } else {
        slot[c] = free.size();
        free.push_back(c);
      }
    }
  }
  std::vector<std::vector<std::pair<std::size_t, Scalar>>> cols(free.size());
  for (std::size_t r = 0; r < e.rows.size(); ++r) {
    for (const auto& [c, v] : e.rows[r]) {
      if (c != e.pivots[r]) cols[slot[c]].emplace_back(e.pivots[r], -v);
    }
  }
  std::vector<SparseVector> basis(free.size());
  for (std::size_t f = 0; f < free.size(); ++f) {
    basis[f] = std::move(cols[f]);
    basis[f].emplace_back(free[f], m.field().one());
    std::sort(basis[f].begin(), basis[f].end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
  }
  if (free_columns) *free_columns = std::move(free);
  return basis;
}

SparseMatrix::SparseMatrix(Field field, std::size_t n_rows, std::size_t n_cols)
    : field_(field), n_rows_(n_rows), n_cols_(n_cols), rows_(n_rows) {}

SparseMatrix SparseMatrix::from_triplets(Field field, std::size_t n_rows,
                                         std::size_t n_cols,
                                         std::vector<Triplet> triplets) {
  SparseMatrix m(field, n_rows, n_cols);
  for (const auto& t : triplets) {
    if (t.row >= n_rows || t.col >= n_cols) {
      throw std::out_of_range("matrix index out of bounds");
    }
    check_field(field, t.value);
  }
  std::stable_sort(triplets.begin(), triplets.end(),
                   [](const Triplet& a, const Triplet& b) {
                     return a.row != b.row ? a.row < b.row : a.col < b.col;
                   });
  for (std::size_t i = 0; i < triplets.size();) {
    std::size_t j = i + 1;
    Scalar sum = triplets[i].value;
    while (j < triplets.size() && triplets[j].row == triplets[i].row &&
           triplets[j].col == triplets[i].col) {
      sum += triplets[j].value;
      ++j;
    }
    if (!sum.is_zero()) m.rows_[triplets[i].row].emplace_back(triplets[i].col, std::move(sum));
    i = j;
  }
  return m;
}

std::size_t SparseMatrix::nnz() const {
  std::size_t n = 0;
  for (const auto& r : rows_) n += r.size();
  return n;
}

Scalar SparseMatrix::at(std::size_t i, std::size_t j) const {
  if (i >= n_rows_ || j >= n_cols_) throw std::out_of_range("matrix index out of bounds");
  if (const Scalar* s = find_entry(rows_[i], j)) return *s;
  return field_.zero();
}

SparseMatrix SparseMatrix::transpose() const {
  SparseMatrix t(field_, n_cols_, n_rows_);
  for (std::size_t i = 0; i < n_rows_; ++i) {
    for (const auto& e : rows_[i]) t.rows_[e.first].emplace_back(i, e.second);
  }
  return t;
}

bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
  return a.field_ == b.field_ && a.n_rows_ == b.n_rows_ &&
         a.n_cols_ == b.n_cols_ && a.rows_ == b.rows_;
}

std::size_t rank(const SparseMatrix& m, RankStrategy strategy) {
  return strategy == RankStrategy::FractionFree ? fraction_free_rank(m)
                                                : plain_fraction_rank(m);
}

std::size_t kernel_dim(const SparseMatrix& m, RankStrategy strategy) {
  return m.cols() - rank(m, strategy);
}

SparseMatrix multiply(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix shapes do not compose");
  if (!(a.field() == b.field())) throw InternalError("matrix product mixes fields");
  std::vector<Triplet> out;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    std::map<std::size_t, Scalar> acc;
    for (const auto& [k, x] : a.row(i)) {
      for (const auto& [j, y] : b.row(k)) {
        auto [pos, fresh] = acc.emplace(j, x * y);
        if (!fresh) pos->second += x * y;
      }
    }
    for (auto& [j, v] : acc) {
      if (!v.is_zero()) out.push_back({i, j, std::move(v)});
    }
  }
  return SparseMatrix::from_triplets(a.field(), a.rows(), b.cols(), std::move(out));
}

}  // namespace tauhh
