#include "tauhh/bimodule.hpp"

#include "tauhh/errors.hpp"

namespace tauhh {

Bimodule::Bimodule(Quiver quiver, Field field)
    : quiver_(std::move(quiver)), field_(field), nv_(quiver_.num_vertices()),
      dims_(nv_ * nv_, 0) {
  left_.assign(quiver_.num_arrows() * nv_, DenseMatrix(field_, 0, 0));
  right_.assign(quiver_.num_arrows() * nv_, DenseMatrix(field_, 0, 0));
}

void Bimodule::reshape_actions(std::size_t y, std::size_t x) {
  for (std::size_t a = 0; a < quiver_.num_arrows(); ++a) {
    const Arrow& arr = quiver_.arrow(a);
    if (arr.source == y || arr.target == y) {
      left_[a * nv_ + x] = DenseMatrix(field_, dim(arr.target, x), dim(arr.source, x));
    }
    if (arr.source == x || arr.target == x) {
      right_[a * nv_ + y] = DenseMatrix(field_, dim(y, arr.source), dim(y, arr.target));
    }
  }
}

void Bimodule::set_dim(std::size_t y, std::size_t x, std::size_t d) {
  dims_.at(y * nv_ + x) = d;
  reshape_actions(y, x);
}

std::size_t Bimodule::total_dim() const {
  std::size_t t = 0;
  for (std::size_t d : dims_) t += d;
  return t;
}

std::vector<std::vector<std::size_t>> Bimodule::dims() const {
  std::vector<std::vector<std::size_t>> out(nv_, std::vector<std::size_t>(nv_));
  for (std::size_t y = 0; y < nv_; ++y) {
    for (std::size_t x = 0; x < nv_; ++x) out[y][x] = dim(y, x);
  }
  return out;
}

void Bimodule::set_left(std::size_t arrow, std::size_t x, DenseMatrix m) {
  const Arrow& arr = quiver_.arrow(arrow);
  if (m.rows() != dim(arr.target, x) || m.cols() != dim(arr.source, x)) {
    throw PresentationError("left action of '" + arr.name + "' has the wrong shape");
  }
  left_[arrow * nv_ + x] = std::move(m);
}

void Bimodule::set_right(std::size_t arrow, std::size_t y, DenseMatrix m) {
  const Arrow& arr = quiver_.arrow(arrow);
  if (m.rows() != dim(y, arr.source) || m.cols() != dim(y, arr.target)) {
    throw PresentationError("right action of '" + arr.name + "' has the wrong shape");
  }
  right_[arrow * nv_ + y] = std::move(m);
}

DenseMatrix Bimodule::left_path(const Path& p, std::size_t x) const {
  DenseMatrix m = DenseMatrix::identity(field_, dim(p.source, x));
  for (std::size_t a : p.arrows) m = left(a, x) * m;
  return m;
}

DenseMatrix Bimodule::right_path(const Path& p, std::size_t y) const {
  DenseMatrix m = DenseMatrix::identity(field_, dim(y, p.target));
  for (auto it = p.arrows.rbegin(); it != p.arrows.rend(); ++it) m = right(*it, y) * m;
  return m;
}

void Bimodule::validate(const FDAlgebra& a) const {
  if (!(a.quiver() == quiver_)) throw PresentationError("bimodule is over a different quiver");
  for (std::size_t i = 0; i < quiver_.num_arrows(); ++i) {
    const Arrow& ai = quiver_.arrow(i);
    for (std::size_t j = 0; j < quiver_.num_arrows(); ++j) {
      const Arrow& aj = quiver_.arrow(j);
      DenseMatrix lhs = right(j, ai.target) * left(i, aj.target);
      DenseMatrix rhs = left(i, aj.source) * right(j, ai.source);
      if (!(lhs == rhs)) {
        throw PresentationError("left action of '" + ai.name + "' and right action of '" +
                                aj.name + "' do not commute");
      }
    }
  }
  for (std::size_t r = 0; r < a.relations().size(); ++r) {
    const auto& terms = a.relations()[r].terms();
    const Path& any = terms.begin()->first;
    for (std::size_t v = 0; v < nv_; ++v) {
      DenseMatrix l(field_, dim(any.target, v), dim(any.source, v));
      DenseMatrix rt(field_, dim(v, any.source), dim(v, any.target));
      for (const auto& [p, c] : terms) {
        DenseMatrix lp = left_path(p, v);
        DenseMatrix rp = right_path(p, v);
        for (std::size_t i = 0; i < l.rows(); ++i) {
          for (std::size_t j = 0; j < l.cols(); ++j) l(i, j) += c * lp(i, j);
        }
        for (std::size_t i = 0; i < rt.rows(); ++i) {
          for (std::size_t j = 0; j < rt.cols(); ++j) rt(i, j) += c * rp(i, j);
        }
      }
      if (!l.is_zero() || !rt.is_zero()) {
        throw PresentationError("relation " + std::to_string(r + 1) +
                                " does not act as zero on the bimodule");
      }
    }
  }
}

Bimodule regular_bimodule(const FDAlgebra& a) {
  const Quiver& q = a.quiver();
  Bimodule x(q, a.field());
  std::size_t nv = q.num_vertices();
  for (std::size_t y = 0; y < nv; ++y) {
    for (std::size_t s = 0; s < nv; ++s) x.set_dim(y, s, a.peirce_dim(y, s));
  }
  for (std::size_t arrow = 0; arrow < q.num_arrows(); ++arrow) {
    const Arrow& arr = q.arrow(arrow);
    std::size_t ai = a.arrow_index(arrow);
    for (std::size_t v = 0; v < nv; ++v) {
      DenseMatrix l(a.field(), x.dim(arr.target, v), x.dim(arr.source, v));
      for (std::size_t j : a.peirce(arr.source, v)) {
        for (const auto& [k, c] : a.multiply(ai, j)) l(a.peirce_position(k), a.peirce_position(j)) = c;
      }
      x.set_left(arrow, v, std::move(l));
      DenseMatrix r(a.field(), x.dim(v, arr.source), x.dim(v, arr.target));
      for (std::size_t j : a.peirce(v, arr.target)) {
        for (const auto& [k, c] : a.multiply(j, ai)) r(a.peirce_position(k), a.peirce_position(j)) = c;
      }
      x.set_right(arrow, v, std::move(r));
    }
  }
  return x;
}

Bimodule dual_bimodule(const Bimodule& x) {
  const Quiver& q = x.quiver();
  std::size_t nv = q.num_vertices();
  Bimodule d(q, x.field());
  for (std::size_t y = 0; y < nv; ++y) {
    for (std::size_t s = 0; s < nv; ++s) d.set_dim(y, s, x.dim(s, y));
  }
  for (std::size_t arrow = 0; arrow < q.num_arrows(); ++arrow) {
    for (std::size_t v = 0; v < nv; ++v) {
      d.set_left(arrow, v, x.right(arrow, v).transpose());
      d.set_right(arrow, v, x.left(arrow, v).transpose());
    }
  }
  return d;
}

}  // namespace tauhh
