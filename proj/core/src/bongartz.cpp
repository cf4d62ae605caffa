#include "tauhh/bongartz.hpp"

#include <algorithm>
#include <functional>

#include "tauhh/errors.hpp"

namespace tauhh {

namespace {

struct Occurrence {
  std::size_t begin;
  std::size_t end;
};

std::vector<std::vector<std::size_t>> relation_words(const FDAlgebra& a) {
  if (!a.is_monomial()) {
    throw UnsupportedError("the Bongartz count needs a monomial presentation");
  }
  std::vector<std::vector<std::size_t>> words;
  for (const auto& r : a.relations()) words.push_back(r.terms().begin()->first.arrows);
  return words;
}

/// Occurrences sorted by end position.
std::vector<Occurrence> occurrences(const std::vector<std::size_t>& path,
                                    const std::vector<std::vector<std::size_t>>& words) {
  std::vector<Occurrence> out;
  for (const auto& w : words) {
    if (w.size() > path.size()) continue;
    for (std::size_t s = 0; s + w.size() <= path.size(); ++s) {
      if (std::equal(w.begin(), w.end(), path.begin() + static_cast<std::ptrdiff_t>(s))) {
        out.push_back({s, s + w.size()});
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const Occurrence& l, const Occurrence& r) {
    return l.end != r.end ? l.end < r.end : l.begin < r.begin;
  });
  return out;
}

/// Maximum number of pairwise disjoint occurrences inside [lo, hi).
std::size_t packing(const std::vector<Occurrence>& occ, std::size_t lo, std::size_t hi) {
  std::size_t count = 0;
  std::size_t free_from = lo;
  for (const auto& o : occ) {
    if (o.begin >= free_from && o.end <= hi) {
      ++count;
      free_from = o.end;
    }
  }
  return count;
}

/// Whether the path is a basis element of the Tor_m quotient, m >= 1.
bool contributes(const std::vector<Occurrence>& occ, std::size_t len, std::size_t m) {
  std::size_t whole = packing(occ, 0, len);
  auto in_power = [&](std::size_t n) { return whole >= n; };
  auto in_f_power = [&](std::size_t n) { return len >= 1 && packing(occ, 0, len - 1) >= n; };
  auto in_power_f = [&](std::size_t n) { return len >= 1 && packing(occ, 1, len) >= n; };
  auto in_f_power_f = [&](std::size_t n) { return len >= 2 && packing(occ, 1, len - 1) >= n; };
  std::size_t n = m / 2;
  if (m % 2 == 0) {
    return in_power(n) && in_f_power_f(n - 1) && !in_f_power(n) && !in_power_f(n);
  }
  return in_f_power(n) && in_power_f(n) && !in_power(n + 1) && !in_f_power_f(n);
}

std::size_t longest_relation(const std::vector<std::vector<std::size_t>>& words) {
  std::size_t l = 0;
  for (const auto& w : words) l = std::max(l, w.size());
  return l;
}

/// Paths leaving x that can still reach degree <= top: every arrow except a
/// tail shorter than the longest relation is covered by an occurrence, and a
/// proper prefix packs at most (top - 1) / 2 disjoint occurrences.
void for_each_candidate(const Quiver& q, std::size_t x,
                        const std::vector<std::vector<std::size_t>>& words, std::size_t top,
                        const std::function<void(const Path&, const std::vector<Occurrence>&)>& visit) {
  const std::size_t longest = std::max<std::size_t>(longest_relation(words), 1);
  const std::size_t max_len = top * longest;
  Path p = q.vertex_path(x);
  std::function<void()> dfs = [&]() {
    auto occ = occurrences(p.arrows, words);
    visit(p, occ);
    std::size_t len = p.length();
    if (len == max_len) return;
    if (2 * packing(occ, 0, len) + 1 > top) return;
    std::size_t covered = 0;
    std::vector<Occurrence> by_begin = occ;
    std::sort(by_begin.begin(), by_begin.end(),
              [](const Occurrence& l, const Occurrence& r) { return l.begin < r.begin; });
    for (const auto& o : by_begin) {
      if (o.begin > covered) break;
      covered = std::max(covered, o.end);
    }
    if (len >= 2 && covered + longest <= len) return;
    for (std::size_t arrow : q.arrows_from(p.target)) {
      std::size_t saved = p.target;
      p.arrows.push_back(arrow);
      p.target = q.arrow(arrow).target;
      dfs();
      p.arrows.pop_back();
      p.target = saved;
    }
  };
  dfs();
}

}  // namespace

std::size_t bongartz_tor(const FDAlgebra& a, std::size_t m, std::size_t y, std::size_t x) {
  auto words = relation_words(a);
  if (m == 0) return x == y ? 1 : 0;
  std::size_t count = 0;
  for_each_candidate(a.quiver(), x, words, m, [&](const Path& p, const std::vector<Occurrence>& occ) {
    if (p.target == y && contributes(occ, p.length(), m)) ++count;
  });
  return count;
}

std::vector<std::vector<std::vector<std::size_t>>> bongartz_table(const FDAlgebra& a,
                                                                  std::size_t bound) {
  auto words = relation_words(a);
  std::size_t nv = a.quiver().num_vertices();
  std::vector<std::vector<std::vector<std::size_t>>> t(
      bound + 1, std::vector<std::vector<std::size_t>>(nv, std::vector<std::size_t>(nv, 0)));
  for (std::size_t x = 0; x < nv; ++x) t[0][x][x] = 1;
  if (bound == 0) return t;
  for (std::size_t x = 0; x < nv; ++x) {
    for_each_candidate(a.quiver(), x, words, bound, [&](const Path& p, const std::vector<Occurrence>& occ) {
      for (std::size_t m = 1; m <= bound; ++m) {
        if (p.length() <= m * std::max<std::size_t>(longest_relation(words), 1) &&
            contributes(occ, p.length(), m)) {
          ++t[m][x][p.target];
        }
      }
    });
  }
  return t;
}

}  // namespace tauhh
