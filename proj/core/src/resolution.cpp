#include "tauhh/resolution.hpp"

#include <algorithm>
#include <map>

#include "tauhh/errors.hpp"

namespace tauhh {

std::size_t LeftModule::total_dim() const {
  std::size_t t = 0;
  for (std::size_t d : dims) t += d;
  return t;
}

SparseVector LeftModule::apply(std::size_t arrow, const SparseVector& v) const {
  std::map<std::size_t, Scalar> acc;
  for (const auto& [j, c] : v) {
    for (const auto& [i, x] : action[arrow][j]) {
      auto [it, fresh] = acc.emplace(i, c * x);
      if (!fresh) it->second += c * x;
    }
  }
  SparseVector out;
  for (auto& [i, x] : acc) {
    if (!x.is_zero()) out.emplace_back(i, std::move(x));
  }
  return out;
}

LeftModule zero_module(const FDAlgebra& a) {
  LeftModule m;
  m.dims.assign(a.quiver().num_vertices(), 0);
  m.action.assign(a.quiver().num_arrows(), {});
  return m;
}

LeftModule simple_module(const FDAlgebra& a, std::size_t x) {
  LeftModule m = zero_module(a);
  m.dims.at(x) = 1;
  for (std::size_t arrow = 0; arrow < a.quiver().num_arrows(); ++arrow) {
    m.action[arrow].assign(m.dims[a.quiver().arrow(arrow).source], {});
  }
  return m;
}

LeftModule projective_module(const FDAlgebra& a, std::size_t x) {
  const Quiver& q = a.quiver();
  LeftModule m = zero_module(a);
  for (std::size_t v = 0; v < q.num_vertices(); ++v) m.dims[v] = a.peirce_dim(v, x);
  for (std::size_t arrow = 0; arrow < q.num_arrows(); ++arrow) {
    std::size_t s = q.arrow(arrow).source;
    for (std::size_t j : a.peirce(s, x)) {
      SparseVector img;
      for (const auto& [k, c] : a.multiply(a.arrow_index(arrow), j)) {
        img.emplace_back(a.peirce_position(k), c);
      }
      std::sort(img.begin(), img.end(),
                [](const auto& l, const auto& r) { return l.first < r.first; });
      m.action[arrow].push_back(std::move(img));
    }
  }
  return m;
}

void check_module(const FDAlgebra& a, const LeftModule& m) {
  const Quiver& q = a.quiver();
  for (std::size_t r = 0; r < a.relations().size(); ++r) {
    const auto& terms = a.relations()[r].terms();
    std::size_t s = terms.begin()->first.source;
    for (std::size_t j = 0; j < m.dims[s]; ++j) {
      std::map<std::size_t, Scalar> acc;
      for (const auto& [p, c] : terms) {
        SparseVector v{{j, a.field().one()}};
        for (std::size_t arrow : p.arrows) v = m.apply(arrow, v);
        for (const auto& [i, x] : v) {
          auto [it, fresh] = acc.emplace(i, c * x);
          if (!fresh) it->second += c * x;
        }
      }
      for (const auto& [i, x] : acc) {
        if (!x.is_zero()) {
          throw InternalError("relation " + std::to_string(r + 1) +
                              " acts nontrivially on a module over " +
                              q.vertex_name(s));
        }
      }
    }
  }
}

ResolutionStep minimal_resolution_step(const LeftModule& m, const FDAlgebra& a) {
  const Quiver& q = a.quiver();
  std::size_t nv = q.num_vertices();
  ResolutionStep step;
  step.multiplicities.assign(nv, 0);

  struct Generator {
    std::size_t vertex;
    std::size_t index;
  };
  std::vector<Generator> gens;
  for (std::size_t v = 0; v < nv; ++v) {
    std::vector<Triplet> ts;
    std::size_t row = 0;
    for (std::size_t arrow : q.arrows_to(v)) {
      for (const auto& img : m.action[arrow]) {
        for (const auto& [i, c] : img) ts.push_back({row, i, c});
        ++row;
      }
    }
    RowEchelon e = reduced_echelon(SparseMatrix::from_triplets(a.field(), row, m.dims[v], ts));
    std::size_t p = 0;
    for (std::size_t j = 0; j < m.dims[v]; ++j) {
      if (p < e.pivots.size() && e.pivots[p] == j) {
        ++p;
        continue;
      }
      gens.push_back({v, j});
      ++step.multiplicities[v];
    }
  }

  // images[g][basis index] = b·m_g for basis paths b starting at the
  // generator's vertex.
  std::vector<std::map<std::size_t, SparseVector>> images(gens.size());
  for (std::size_t g = 0; g < gens.size(); ++g) {
    auto& img = images[g];
    for (std::size_t i = 0; i < a.dim(); ++i) {
      const Path& b = a.basis()[i];
      if (b.source != gens[g].vertex) continue;
      if (b.is_vertex()) {
        img[i] = SparseVector{{gens[g].index, a.field().one()}};
        continue;
      }
      Path prefix = b;
      prefix.arrows.pop_back();
      prefix.target = prefix.arrows.empty() ? prefix.source : q.arrow(prefix.arrows.back()).target;
      SparseVector base;
      if (auto pi = a.index_of(prefix); pi && img.count(*pi)) {
        base = img.at(*pi);
      } else {
        base = SparseVector{{gens[g].index, a.field().one()}};
        for (std::size_t arrow : prefix.arrows) base = m.apply(arrow, base);
      }
      img[i] = m.apply(b.arrows.back(), base);
    }
  }

  struct Column {
    std::size_t generator;
    std::size_t basis_index;
  };
  std::vector<std::vector<Column>> columns(nv);
  std::vector<std::vector<std::size_t>> offsets(nv, std::vector<std::size_t>(gens.size()));
  std::vector<std::vector<SparseVector>> kernels(nv);
  std::vector<std::vector<std::size_t>> slot(nv);
  for (std::size_t w = 0; w < nv; ++w) {
    std::vector<Triplet> ts;
    for (std::size_t g = 0; g < gens.size(); ++g) {
      offsets[w][g] = columns[w].size();
      for (std::size_t i : a.peirce(w, gens[g].vertex)) {
        std::size_t col = columns[w].size();
        columns[w].push_back({g, i});
        for (const auto& [r, c] : images[g].at(i)) ts.push_back({r, col, c});
      }
    }
    std::vector<std::size_t> free;
    kernels[w] = kernel_basis(
        SparseMatrix::from_triplets(a.field(), m.dims[w], columns[w].size(), std::move(ts)),
        &free);
    slot[w].assign(columns[w].size(), SIZE_MAX);
    for (std::size_t f = 0; f < free.size(); ++f) slot[w][free[f]] = f;
  }

  LeftModule& syz = step.syzygy;
  syz = zero_module(a);
  for (std::size_t w = 0; w < nv; ++w) syz.dims[w] = kernels[w].size();
  for (std::size_t arrow = 0; arrow < q.num_arrows(); ++arrow) {
    std::size_t s = q.arrow(arrow).source;
    std::size_t t = q.arrow(arrow).target;
    std::size_t ai = a.arrow_index(arrow);
    for (const SparseVector& k : kernels[s]) {
      std::map<std::size_t, Scalar> acc;
      for (const auto& [col, c] : k) {
        const Column& from = columns[s][col];
        for (const auto& [j, x] : a.multiply(ai, from.basis_index)) {
          std::size_t target_col = offsets[t][from.generator] + a.peirce_position(j);
          auto [it, fresh] = acc.emplace(target_col, c * x);
          if (!fresh) it->second += c * x;
        }
      }
      SparseVector coords;
      for (auto& [col, x] : acc) {
        if (slot[t][col] != SIZE_MAX && !x.is_zero()) coords.emplace_back(slot[t][col], std::move(x));
      }
      syz.action[arrow].push_back(std::move(coords));
    }
  }
  return step;
}

std::size_t ExtTorTable::total(std::size_t i) const {
  std::size_t t = 0;
  for (const auto& row : e.at(i)) {
    for (std::size_t v : row) t += v;
  }
  return t;
}

bool ExtTorTable::all_terminate() const {
  return std::all_of(projective_dim.begin(), projective_dim.end(),
                     [](const auto& p) { return p.has_value(); });
}

ExtTorTable ext_tor_table(const FDAlgebra& a, std::size_t bound) {
  std::size_t nv = a.quiver().num_vertices();
  ExtTorTable t;
  t.bound = bound;
  t.e.assign(bound + 1, std::vector<std::vector<std::size_t>>(nv, std::vector<std::size_t>(nv, 0)));
  t.projective_dim.assign(nv, std::nullopt);
  for (std::size_t x = 0; x < nv; ++x) {
    LeftModule m = simple_module(a, x);
    for (std::size_t i = 0; i <= bound; ++i) {
      ResolutionStep step = minimal_resolution_step(m, a);
      t.e[i][x] = step.multiplicities;
      m = std::move(step.syzygy);
      if (m.total_dim() == 0) {
        t.projective_dim[x] = i;
        break;
      }
    }
  }
  if (classify_shape(a.quiver()).has_loop && nv > 0 && t.all_terminate()) {
    throw InternalError("every simple resolution terminates although the quiver has a loop");
  }
  return t;
}

GlobalDimension global_dimension(const ExtTorTable& table) {
  if (!table.all_terminate()) return {false, table.bound + 1};
  std::size_t d = 0;
  for (const auto& p : table.projective_dim) d = std::max(d, *p);
  return {true, d};
}

GlobalDimension global_dimension(const FDAlgebra& a, std::size_t bound) {
  return global_dimension(ext_tor_table(a, bound));
}

}  // namespace tauhh
