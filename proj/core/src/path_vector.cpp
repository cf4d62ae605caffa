#include "tauhh/path_vector.hpp"

#include <algorithm>

namespace tauhh {

PathVector PathVector::single(const Path& p, const Scalar& c) {
  PathVector v;
  v.add(p, c);
  return v;
}

void PathVector::add(const Path& p, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.emplace(p, c);
  if (fresh) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

PathVector& PathVector::operator+=(const PathVector& other) {
  for (const auto& [p, c] : other.terms_) add(p, c);
  return *this;
}

PathVector& PathVector::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.second *= c;
  return *this;
}

std::size_t PathVector::min_length() const {
  std::size_t m = SIZE_MAX;
  for (const auto& t : terms_) m = std::min(m, t.first.length());
  return m;
}

std::size_t PathVector::max_length() const {
  std::size_t m = 0;
  for (const auto& t : terms_) m = std::max(m, t.first.length());
  return m;
}

bool PathVector::is_uniform() const {
  if (terms_.empty()) return true;
  const Path& first = terms_.begin()->first;
  return std::all_of(terms_.begin(), terms_.end(), [&](const auto& t) {
    return t.first.source == first.source && t.first.target == first.target;
  });
}

PathVector PathVector::sandwich(const Path& u, const Path& w) const {
  PathVector out;
  for (const auto& [p, c] : terms_) {
    if (p.source != w.target || p.target != u.source) continue;
    out.add(compose(u, compose(p, w)), c);
  }
  return out;
}

std::string format_path_vector(const Quiver& q, const PathVector& v) {
  if (v.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (auto it = v.terms().rbegin(); it != v.terms().rend(); ++it) {
    const auto& [p, c] = *it;
    std::string coef = c.to_string();
    bool negative = !coef.empty() && coef[0] == '-';
    if (negative) coef.erase(0, 1);
    if (first) {
      if (negative) s += "-";
    } else {
      s += negative ? " - " : " + ";
    }
    if (coef != "1") s += coef + "*";
    s += q.path_name(p);
    first = false;
  }
  return s;
}

}  // namespace tauhh
