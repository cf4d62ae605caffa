#include "tauhh/hochschild.hpp"

#include "tauhh/errors.hpp"

namespace tauhh {

std::size_t BarComplex::SequenceHash::operator()(const Sequence& s) const {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (std::uint32_t v : s) h = (h ^ v) * 0x100000001b3ULL;
  return h;
}

BarComplex::BarComplex(const FDAlgebra& a, const Bimodule& x, std::size_t cell_cap)
    : a_(a), x_(x), cap_(cell_cap) {
  if (!(x.quiver() == a.quiver())) throw InternalError("bimodule is over a different quiver");
  radical_from_.resize(a.quiver().num_vertices());
  for (std::size_t i : a.radical_basis()) {
    radical_from_[a.basis()[i].source].push_back(static_cast<std::uint32_t>(i));
  }
}

std::size_t BarComplex::source_of(std::size_t n, std::size_t i) const {
  if (n == 0) return i;
  return a_.basis()[levels_[n].seqs[i].front()].source;
}

std::size_t BarComplex::target_of(std::size_t n, std::size_t i) const {
  if (n == 0) return i;
  return a_.basis()[levels_[n].seqs[i].back()].target;
}

void BarComplex::ensure(std::size_t n) {
  while (levels_.size() <= n) {
    std::size_t k = levels_.size();
    Level lvl;
    if (k == 0) {
      for (std::size_t v = 0; v < a_.quiver().num_vertices(); ++v) lvl.seqs.push_back({});
    } else {
      const Level& prev = levels_[k - 1];
      std::size_t count = 0;
      for (std::size_t i = 0; i < prev.seqs.size(); ++i) count += radical_from_[target_of(k - 1, i)].size();
      if (count > cap_) {
        throw ResourceError("bar complex degree " + std::to_string(k) + " has " +
                            std::to_string(count) + " cells, above the cap of " +
                            std::to_string(cap_));
      }
      lvl.seqs.reserve(count);
      for (std::size_t i = 0; i < prev.seqs.size(); ++i) {
        for (std::uint32_t w : radical_from_[target_of(k - 1, i)]) {
          Sequence s = prev.seqs[i];
          s.push_back(w);
          lvl.seqs.push_back(std::move(s));
        }
      }
      for (std::size_t i = 0; i < lvl.seqs.size(); ++i) lvl.index.emplace(lvl.seqs[i], i);
    }
    levels_.push_back(std::move(lvl));
    Level& cur = levels_.back();
    for (std::size_t i = 0; i < cur.seqs.size(); ++i) {
      std::size_t s = source_of(k, i), t = target_of(k, i);
      cur.cochain_offset.push_back(cur.cochain_total);
      cur.chain_offset.push_back(cur.chain_total);
      cur.cochain_total += x_.dim(t, s);
      cur.chain_total += x_.dim(s, t);
    }
  }
}

std::size_t BarComplex::level_size(std::size_t n) {
  ensure(n);
  return levels_[n].seqs.size();
}

const std::vector<BarComplex::Sequence>& BarComplex::level(std::size_t n) {
  ensure(n);
  return levels_[n].seqs;
}

std::size_t BarComplex::cochain_dim(std::size_t n) {
  ensure(n);
  return levels_[n].cochain_total;
}

std::size_t BarComplex::chain_dim(std::size_t n) {
  ensure(n);
  return levels_[n].chain_total;
}

std::size_t BarComplex::lookup(std::size_t n, const Sequence& seq, std::size_t v) const {
  if (n == 0) return v;
  auto it = levels_[n].index.find(seq);
  if (it == levels_[n].index.end()) throw InternalError("bar sequence missing from its level");
  return it->second;
}

const DenseMatrix& BarComplex::left_action(std::size_t w, std::size_t x) {
  auto key = std::make_pair(w, x);
  auto it = left_cache_.find(key);
  if (it == left_cache_.end()) it = left_cache_.emplace(key, x_.left_path(a_.basis()[w], x)).first;
  return it->second;
}

const DenseMatrix& BarComplex::right_action(std::size_t w, std::size_t y) {
  auto key = std::make_pair(w, y);
  auto it = right_cache_.find(key);
  if (it == right_cache_.end()) it = right_cache_.emplace(key, x_.right_path(a_.basis()[w], y)).first;
  return it->second;
}

namespace {

void add_block(std::vector<Triplet>& ts, std::size_t row0, std::size_t col0,
               const DenseMatrix& m, const Scalar& sign) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (!m(i, j).is_zero()) ts.push_back({row0 + i, col0 + j, sign * m(i, j)});
    }
  }
}

void add_identity(std::vector<Triplet>& ts, std::size_t row0, std::size_t col0,
                  std::size_t d, const Scalar& c) {
  for (std::size_t i = 0; i < d; ++i) ts.push_back({row0 + i, col0 + i, c});
}

}  // namespace

SparseMatrix BarComplex::cochain_differential(std::size_t n) {
  ensure(n);
  const Field& f = a_.field();
  const Scalar one = f.one();
  const Scalar minus = -one;
  std::size_t m = n - 1;
  const Level& src = levels_[m];
  const Level& dst = levels_[n];
  std::vector<Triplet> ts;
  for (std::size_t r = 0; r < dst.seqs.size(); ++r) {
    const Sequence& s = dst.seqs[r];
    std::size_t row0 = dst.cochain_offset[r];
    std::size_t s_src = source_of(n, r), s_tgt = target_of(n, r);
    if (x_.dim(s_tgt, s_src) == 0) continue;

    Sequence head(s.begin(), s.end() - 1);
    std::size_t c = lookup(m, head, s_src);
    add_block(ts, row0, src.cochain_offset[c], left_action(s.back(), s_src), one);

    for (std::size_t j = 0; j + 1 < s.size(); ++j) {
      std::size_t pos = j + 1;
      const Scalar& sign = (n - pos) % 2 == 0 ? one : minus;
      for (const auto& [k, coef] : a_.multiply(s[j + 1], s[j])) {
        Sequence merged(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(j));
        merged.push_back(static_cast<std::uint32_t>(k));
        merged.insert(merged.end(), s.begin() + static_cast<std::ptrdiff_t>(j + 2), s.end());
        std::size_t cc = lookup(m, merged, 0);
        add_identity(ts, row0, src.cochain_offset[cc], x_.dim(s_tgt, s_src), sign * coef);
      }
    }

    Sequence tail(s.begin() + 1, s.end());
    std::size_t t = lookup(m, tail, a_.basis()[s.front()].target);
    add_block(ts, row0, src.cochain_offset[t], right_action(s.front(), s_tgt),
              n % 2 == 0 ? one : minus);
  }
  return SparseMatrix::from_triplets(f, dst.cochain_total, src.cochain_total, std::move(ts));
}

SparseMatrix BarComplex::chain_differential(std::size_t n) {
  ensure(n);
  const Field& f = a_.field();
  const Scalar one = f.one();
  const Scalar minus = -one;
  std::size_t m = n - 1;
  const Level& src = levels_[n];
  const Level& dst = levels_[m];
  std::vector<Triplet> ts;
  for (std::size_t c = 0; c < src.seqs.size(); ++c) {
    const Sequence& s = src.seqs[c];
    std::size_t col0 = src.chain_offset[c];
    std::size_t s_src = source_of(n, c), s_tgt = target_of(n, c);
    if (x_.dim(s_src, s_tgt) == 0) continue;

    Sequence head(s.begin(), s.end() - 1);
    std::size_t r = lookup(m, head, s_src);
    add_block(ts, dst.chain_offset[r], col0, right_action(s.back(), s_src), one);

    for (std::size_t j = 0; j + 1 < s.size(); ++j) {
      std::size_t pos = j + 1;
      const Scalar& sign = (n - pos) % 2 == 0 ? one : minus;
      for (const auto& [k, coef] : a_.multiply(s[j + 1], s[j])) {
        Sequence merged(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(j));
        merged.push_back(static_cast<std::uint32_t>(k));
        merged.insert(merged.end(), s.begin() + static_cast<std::ptrdiff_t>(j + 2), s.end());
        std::size_t rr = lookup(m, merged, 0);
        add_identity(ts, dst.chain_offset[rr], col0, x_.dim(s_src, s_tgt), sign * coef);
      }
    }

    Sequence tail(s.begin() + 1, s.end());
    std::size_t t = lookup(m, tail, a_.basis()[s.front()].target);
    add_block(ts, dst.chain_offset[t], col0, left_action(s.front(), s_tgt),
              n % 2 == 0 ? one : minus);
  }
  return SparseMatrix::from_triplets(f, dst.chain_total, src.chain_total, std::move(ts));
}

HochschildDims hh_dims(const FDAlgebra& a, const Bimodule& x, std::size_t max_degree,
                       std::size_t cell_cap, RankStrategy strategy) {
  BarComplex bar(a, x, cell_cap);
  std::vector<std::size_t> co_rank(max_degree + 2, 0);
  std::vector<std::size_t> ch_rank(max_degree + 2, 0);
  for (std::size_t n = 1; n <= max_degree + 1; ++n) {
    co_rank[n] = rank(bar.cochain_differential(n), strategy);
    ch_rank[n] = rank(bar.chain_differential(n), strategy);
  }
  HochschildDims d;
  for (std::size_t n = 0; n <= max_degree; ++n) {
    d.cohomology.push_back(bar.cochain_dim(n) - co_rank[n + 1] - co_rank[n]);
    d.homology.push_back(bar.chain_dim(n) - ch_rank[n] - ch_rank[n + 1]);
  }
  return d;
}

DegreeZeroChecks hh0_crosschecks(const FDAlgebra& a, const HochschildDims& regular) {
  DegreeZeroChecks c{center_dim(a), trace_space_dim(a)};
  if (regular.cohomology.empty() || regular.homology.empty()) return c;
  if (c.center != regular.cohomology[0]) {
    throw InternalError("center dimension " + std::to_string(c.center) +
                        " differs from HH^0 = " + std::to_string(regular.cohomology[0]));
  }
  if (c.trace_space != regular.homology[0]) {
    throw InternalError("dim Λ/[Λ,Λ] = " + std::to_string(c.trace_space) +
                        " differs from HH_0 = " + std::to_string(regular.homology[0]));
  }
  return c;
}

}  // namespace tauhh
