#include "tauhh/quiver.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "tauhh/errors.hpp"

namespace tauhh {

bool PathLess::operator()(const Path& a, const Path& b) const {
  if (a.length() != b.length()) return a.length() < b.length();
  if (a.is_vertex()) return a.source < b.source;
  return a.arrows < b.arrows;
}

std::size_t PathHash::operator()(const Path& p) const {
  std::size_t h = std::hash<std::size_t>{}(p.source) * 0x9e3779b97f4a7c15ULL;
  for (std::size_t a : p.arrows) h = (h ^ (a + 1)) * 0x100000001b3ULL;
  return h ^ (p.target << 1);
}

std::size_t Quiver::add_vertex(const std::string& name) {
  if (find_vertex(name)) throw PresentationError("duplicate vertex '" + name + "'");
  vertices_.push_back(name);
  out_.emplace_back();
  in_.emplace_back();
  return vertices_.size() - 1;
}

std::size_t Quiver::add_arrow(const std::string& name, std::size_t source,
                              std::size_t target) {
  if (find_arrow(name)) throw PresentationError("duplicate arrow '" + name + "'");
  if (source >= num_vertices() || target >= num_vertices()) {
    throw PresentationError("arrow '" + name + "' has an unknown endpoint");
  }
  arrows_.push_back({name, source, target});
  out_[source].push_back(arrows_.size() - 1);
  in_[target].push_back(arrows_.size() - 1);
  return arrows_.size() - 1;
}

std::optional<std::size_t> Quiver::find_vertex(const std::string& name) const {
  auto it = std::find(vertices_.begin(), vertices_.end(), name);
  if (it == vertices_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - vertices_.begin());
}

std::optional<std::size_t> Quiver::find_arrow(const std::string& name) const {
  for (std::size_t i = 0; i < arrows_.size(); ++i) {
    if (arrows_[i].name == name) return i;
  }
  return std::nullopt;
}

Path Quiver::arrow_path(std::size_t a) const {
  const Arrow& arr = arrows_.at(a);
  return Path{arr.source, arr.target, {a}};
}

std::string Quiver::path_name(const Path& p) const {
  if (p.is_vertex()) return "e_" + vertices_.at(p.source);
  std::string s;
  for (auto it = p.arrows.rbegin(); it != p.arrows.rend(); ++it) {
    if (!s.empty()) s += '*';
    s += arrows_.at(*it).name;
  }
  return s;
}

std::vector<std::vector<std::uint64_t>> Quiver::adjacency() const {
  std::vector<std::vector<std::uint64_t>> m(num_vertices(),
                                            std::vector<std::uint64_t>(num_vertices(), 0));
  for (const auto& a : arrows_) ++m[a.source][a.target];
  return m;
}

bool operator==(const Quiver& a, const Quiver& b) {
  if (a.vertices_ != b.vertices_ || a.arrows_.size() != b.arrows_.size()) return false;
  for (std::size_t i = 0; i < a.arrows_.size(); ++i) {
    const Arrow& x = a.arrows_[i];
    const Arrow& y = b.arrows_[i];
    if (x.name != y.name || x.source != y.source || x.target != y.target) return false;
  }
  return true;
}

Path compose(const Path& p, const Path& q) {
  if (q.target != p.source) throw std::invalid_argument("paths are not composable");
  Path r{q.source, p.target, q.arrows};
  r.arrows.insert(r.arrows.end(), p.arrows.begin(), p.arrows.end());
  return r;
}

namespace {

void extend_paths(const Quiver& q, Path& current, std::size_t remaining,
                  std::vector<Path>& out) {
  if (remaining == 0) {
    out.push_back(current);
    return;
  }
  for (std::size_t a : q.arrows_from(current.target)) {
    std::size_t saved = current.target;
    current.arrows.push_back(a);
    current.target = q.arrow(a).target;
    extend_paths(q, current, remaining - 1, out);
    current.arrows.pop_back();
    current.target = saved;
  }
}

}  // namespace

std::vector<Path> enumerate_paths(const Quiver& q, std::size_t n) {
  std::vector<Path> out;
  for (std::size_t v = 0; v < q.num_vertices(); ++v) {
    Path start = q.vertex_path(v);
    extend_paths(q, start, n, out);
  }
  std::sort(out.begin(), out.end(), PathLess{});
  return out;
}

std::vector<Path> paths_between(const Quiver& q, std::size_t x, std::size_t y,
                                std::size_t n) {
  std::vector<Path> out;
  Path start = q.vertex_path(x);
  extend_paths(q, start, n, out);
  std::erase_if(out, [y](const Path& p) { return p.target != y; });
  std::sort(out.begin(), out.end(), PathLess{});
  return out;
}

std::vector<Path> enumerate_cycles(const Quiver& q, std::size_t n) {
  std::vector<Path> out = enumerate_paths(q, n);
  std::erase_if(out, [](const Path& p) { return p.source != p.target; });
  return out;
}

Path rotate(const Quiver& q, const Path& cycle) {
  if (cycle.length() <= 1) return cycle;
  Path r = cycle;
  std::rotate(r.arrows.begin(), r.arrows.begin() + 1, r.arrows.end());
  r.source = r.target = q.arrow(r.arrows.front()).source;
  return r;
}

std::size_t OrbitDecomposition::num_even_orbits() const {
  return static_cast<std::size_t>(std::count_if(
      orbits.begin(), orbits.end(),
      [](const auto& o) { return o.size() % 2 == 0; }));
}

OrbitDecomposition orbit_decomposition(const Quiver& q, std::size_t n) {
  OrbitDecomposition d;
  d.degree = n;
  d.cycles = enumerate_cycles(q, n);
  std::vector<bool> seen(d.cycles.size(), false);
  auto index_of = [&](const Path& p) {
    auto it = std::lower_bound(d.cycles.begin(), d.cycles.end(), p, PathLess{});
    return static_cast<std::size_t>(it - d.cycles.begin());
  };
  for (std::size_t i = 0; i < d.cycles.size(); ++i) {
    if (seen[i]) continue;
    std::vector<std::size_t> orbit;
    Path p = d.cycles[i];
    do {
      std::size_t j = index_of(p);
      seen[j] = true;
      orbit.push_back(j);
      p = rotate(q, p);
    } while (!(p == d.cycles[i]));
    d.orbits.push_back(std::move(orbit));
  }
  return d;
}

std::uint64_t parallel_pairs(const Quiver& q, std::size_t n) {
  auto adj = q.adjacency();
  std::size_t v = q.num_vertices();
  std::vector<std::vector<std::uint64_t>> power(v, std::vector<std::uint64_t>(v, 0));
  for (std::size_t i = 0; i < v; ++i) power[i][i] = 1;
  for (std::size_t step = 0; step < n; ++step) {
    std::vector<std::vector<std::uint64_t>> next(v, std::vector<std::uint64_t>(v, 0));
    for (std::size_t i = 0; i < v; ++i) {
      for (std::size_t k = 0; k < v; ++k) {
        if (power[i][k] == 0) continue;
        for (std::size_t j = 0; j < v; ++j) next[i][j] += power[i][k] * adj[k][j];
      }
    }
    power = std::move(next);
  }
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < v; ++i) {
    for (std::size_t j = 0; j < v; ++j) total += power[i][j] * adj[i][j];
  }
  return total;
}

std::vector<std::vector<std::size_t>> connected_components(const Quiver& q) {
  std::vector<std::size_t> parent(q.num_vertices());
  for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = i;
  std::function<std::size_t(std::size_t)> root = [&](std::size_t x) {
    return parent[x] == x ? x : parent[x] = root(parent[x]);
  };
  for (const auto& a : q.arrows()) {
    std::size_t ra = root(a.source), rb = root(a.target);
    if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
  }
  std::vector<std::vector<std::size_t>> comps;
  std::vector<std::size_t> slot(q.num_vertices(), SIZE_MAX);
  for (std::size_t v = 0; v < q.num_vertices(); ++v) {
    std::size_t r = root(v);
    if (slot[r] == SIZE_MAX) {
      slot[r] = comps.size();
      comps.emplace_back();
    }
    comps[slot[r]].push_back(v);
  }
  return comps;
}

Quiver induced_subquiver(const Quiver& q, const std::vector<std::size_t>& vertices) {
  Quiver sub;
  std::vector<std::size_t> map(q.num_vertices(), SIZE_MAX);
  for (std::size_t v : vertices) map[v] = sub.add_vertex(q.vertex_name(v));
  for (const auto& a : q.arrows()) {
    if (map[a.source] != SIZE_MAX && map[a.target] != SIZE_MAX) {
      sub.add_arrow(a.name, map[a.source], map[a.target]);
    }
  }
  return sub;
}

Shape classify_shape(const Quiver& q) {
  Shape s;
  for (const auto& a : q.arrows()) {
    if (a.source == a.target) s.has_loop = true;
  }
  s.connected = connected_components(q).size() <= 1;
  std::size_t v = q.num_vertices();
  bool crown = v > 0 && q.num_arrows() == v && s.connected;
  for (std::size_t i = 0; crown && i < v; ++i) {
    crown = q.arrows_from(i).size() == 1 && q.arrows_to(i).size() == 1;
  }
  if (crown) {
    s.kind = ShapeKind::Crown;
    s.crown_size = v;
    return s;
  }
  bool acyclic = true;
  for (std::size_t n = 1; acyclic && n <= v; ++n) {
    acyclic = enumerate_cycles(q, n).empty();
  }
  s.kind = acyclic ? ShapeKind::Acyclic : ShapeKind::General;
  return s;
}

namespace {

std::vector<bool> reachable_from(const Quiver& q, std::size_t x, bool forward) {
  std::vector<bool> seen(q.num_vertices(), false);
  std::vector<std::size_t> stack{x};
  seen[x] = true;
  while (!stack.empty()) {
    std::size_t v = stack.back();
    stack.pop_back();
    const auto& edges = forward ? q.arrows_from(v) : q.arrows_to(v);
    for (std::size_t a : edges) {
      std::size_t w = forward ? q.arrow(a).target : q.arrow(a).source;
      if (!seen[w]) {
        seen[w] = true;
        stack.push_back(w);
      }
    }
  }
  return seen;
}

}  // namespace

bool has_unbounded_paths(const Quiver& q, std::size_t x, std::size_t y) {
  auto from_x = reachable_from(q, x, true);
  auto to_y = reachable_from(q, y, false);
  for (std::size_t v = 0; v < q.num_vertices(); ++v) {
    if (!from_x[v] || !to_y[v]) continue;
    for (std::size_t a : q.arrows_from(v)) {
      if (reachable_from(q, q.arrow(a).target, true)[v]) return true;
    }
  }
  return false;
}

}  // namespace tauhh
