#include "monoham/oracles.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <deque>
#include <set>

namespace monoham::oracle {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw CapacityError(what);
}

std::vector<std::uint32_t> masks_of(const ColoredGraph& g) {
  std::vector<std::uint32_t> nb(g.num_vertices(), 0);
  for (const Edge& e : g.edges()) {
    nb[e.u] |= 1u << e.v;
    nb[e.v] |= 1u << e.u;
  }
  return nb;
}

// Odd components of the graph induced by `alive`.
std::size_t odd_components(const std::vector<std::uint32_t>& nb, std::uint32_t alive) {
  std::size_t odd = 0;
  while (alive) {
    std::uint32_t comp = alive & (~alive + 1), frontier = comp;
    while (frontier) {
      std::uint32_t next = 0;
      for (std::uint32_t f = frontier; f; f &= f - 1) next |= nb[std::countr_zero(f)];
      next &= alive & ~comp;
      comp |= next;
      frontier = next;
    }
    alive &= ~comp;
    odd += std::popcount(comp) & 1;
  }
  return odd;
}

struct Dfs {
  const std::vector<std::uint32_t>& nb;
  std::size_t n;
  std::size_t best = 0;

  void go(Vertex v, std::uint32_t used, std::size_t len) {
    best = std::max(best, len);
    if (best == n) return;
    for (std::uint32_t f = nb[v] & ~used; f; f &= f - 1) go(static_cast<Vertex>(std::countr_zero(f)), used | (f & (~f + 1)), len + 1);
  }
};

}  // namespace

std::size_t matching_number(const ColoredGraph& g) {
  const std::size_t n = g.num_vertices();
  require(n <= 20, "matching oracle limited to n <= 20");
  const auto nb = masks_of(g);
  std::vector<std::int8_t> memo(std::size_t{1} << n, -1);
  std::function<int(std::uint32_t)> f = [&](std::uint32_t mask) -> int {
    if (!mask) return 0;
    if (memo[mask] >= 0) return memo[mask];
    const int v = std::countr_zero(mask);
    const std::uint32_t rest = mask & ~(1u << v);
    int best = f(rest);
    for (std::uint32_t m = nb[v] & rest; m; m &= m - 1) best = std::max(best, 1 + f(rest & ~(m & (~m + 1))));
    memo[mask] = static_cast<std::int8_t>(best);
    return best;
  };
  return static_cast<std::size_t>(f((1u << n) - 1));
}

TutteBerge tutte_berge(const ColoredGraph& g) {
  const std::size_t n = g.num_vertices();
  require(n <= 20, "Tutte-Berge oracle limited to n <= 20");
  const auto nb = masks_of(g);
  const std::uint32_t all = n ? (1u << n) - 1 : 0;
  TutteBerge tb;
  tb.deficiency = static_cast<std::int64_t>(odd_components(nb, all));
  std::uint32_t arg = 0;
  for (std::uint32_t u = 1; u <= all && u != 0; ++u) {
    const auto d = static_cast<std::int64_t>(odd_components(nb, all & ~u)) - std::popcount(u);
    if (d > tb.deficiency) {
      tb.deficiency = d;
      arg = u;
    }
  }
  for (std::uint32_t f = arg; f; f &= f - 1) tb.u.push_back(static_cast<Vertex>(std::countr_zero(f)));
  tb.nu = static_cast<std::size_t>((static_cast<std::int64_t>(n) - tb.deficiency) / 2);
  return tb;
}

namespace {

// Depth-first cycle enumeration; stops as soon as f returns true.
bool cycles(const ColoredGraph& g, const std::function<bool(std::span<const Vertex>)>& f) {
  const std::size_t n = g.num_vertices();
  require(n <= 12, "cycle enumeration limited to n <= 12");
  if (n < 3) return false;
  const auto nb = masks_of(g);
  std::vector<Vertex> seq{0};
  std::function<bool(std::uint32_t)> go = [&](std::uint32_t used) {
    const Vertex v = seq.back();
    if (seq.size() == n) return (nb[v] & 1u) && seq[1] < seq.back() && f(seq);
    for (std::uint32_t m = nb[v] & ~used; m; m &= m - 1) {
      const auto u = static_cast<Vertex>(std::countr_zero(m));
      seq.push_back(u);
      const bool stop = go(used | (1u << u));
      seq.pop_back();
      if (stop) return true;
    }
    return false;
  };
  return go(1u);
}

}  // namespace

void for_each_hamilton_cycle(const ColoredGraph& g, const std::function<void(std::span<const Vertex>)>& f) {
  cycles(g, [&](std::span<const Vertex> c) {
    f(c);
    return false;
  });
}

bool is_hamiltonian(const ColoredGraph& g) {
  return cycles(g, [](std::span<const Vertex>) { return true; });
}

std::size_t longest_path_vertices(const ColoredGraph& g) {
  const std::size_t n = g.num_vertices();
  require(n <= 12, "longest path oracle limited to n <= 12");
  const auto nb = masks_of(g);
  Dfs dfs{nb, n};
  for (Vertex v = 0; v < n && dfs.best < n; ++v) dfs.go(v, 1u << v, 1);
  return dfs.best;
}

std::vector<Vertex> path_ends_over(const ColoredGraph& g, std::span<const Vertex> vertices, Vertex start) {
  require(vertices.size() <= 10, "path end oracle limited to 10 vertices");
  std::vector<Vertex> rest;
  for (Vertex v : vertices)
    if (v != start) rest.push_back(v);
  std::sort(rest.begin(), rest.end());
  std::set<Vertex> ends;
  if (rest.empty()) return {start};
  do {
    bool ok = g.has_edge(start, rest[0]);
    for (std::size_t i = 0; ok && i + 1 < rest.size(); ++i) ok = g.has_edge(rest[i], rest[i + 1]);
    if (ok) ends.insert(rest.back());
  } while (std::next_permutation(rest.begin(), rest.end()));
  return {ends.begin(), ends.end()};
}

std::vector<Vertex> rotation_ends(const ColoredGraph& g, std::span<const Vertex> path) {
  std::set<std::vector<Vertex>> seen;
  std::deque<std::vector<Vertex>> q;
  std::set<Vertex> ends;
  std::vector<Vertex> p0(path.begin(), path.end());
  seen.insert(p0);
  q.push_back(std::move(p0));
  while (!q.empty()) {
    std::vector<Vertex> p = std::move(q.front());
    q.pop_front();
    ends.insert(p.back());
    const std::size_t t = p.size() - 1;
    for (std::size_t i = 0; i + 1 < t; ++i) {
      if (!g.has_edge(p[t], p[i])) continue;
      std::vector<Vertex> r(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(i + 1));
      r.insert(r.end(), p.rbegin(), p.rend() - static_cast<std::ptrdiff_t>(i + 1));
      if (seen.insert(r).second) q.push_back(std::move(r));
    }
  }
  return {ends.begin(), ends.end()};
}

std::vector<Edge> boosters(const ColoredGraph& g) {
  const std::size_t n = g.num_vertices();
  require(n <= 12, "booster oracle limited to n <= 12");
  const std::size_t base = longest_path_vertices(g);
  std::vector<Edge> out;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) {
      if (g.has_edge(u, v)) continue;
      std::vector<Edge> edges(g.edges().begin(), g.edges().end());
      for (Edge& e : edges) e.color = kUncolored;
      edges.push_back({u, v, kUncolored});
      const ColoredGraph h(n, std::move(edges));
      if (is_hamiltonian(h) || longest_path_vertices(h) > base) out.push_back({u, v, kUncolored});
    }
  return out;
}

bool is_expander(const ColoredGraph& g, double k, double alpha) {
  const std::size_t n = g.num_vertices();
  require(n <= 20, "expander oracle limited to n <= 20");
  const auto nb = masks_of(g);
  for (std::uint32_t u = 1; u < (1u << n); ++u) {
    const int size = std::popcount(u);
    if (size > k + 1e-9) continue;
    std::uint32_t out = 0;
    for (std::uint32_t f = u; f; f &= f - 1) out |= nb[std::countr_zero(f)];
    out &= ~u;
    if (std::popcount(out) < alpha * size - 1e-9) return false;
  }
  return true;
}

std::size_t components(const ColoredGraph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<char> seen(n, 0);
  std::size_t count = 0;
  for (Vertex s = 0; s < n; ++s) {
    if (seen[s]) continue;
    ++count;
    std::vector<Vertex> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex u = 0; u < n; ++u)
        if (!seen[u] && g.has_edge(u, v)) {
          seen[u] = 1;
          stack.push_back(u);
        }
    }
  }
  return count;
}

bool is_connected(const ColoredGraph& g) { return components(g) <= 1; }

bool bipartite_subset_condition(const ColoredGraph& g, std::span<const Vertex> x, std::span<const Vertex> y,
                                std::size_t k) {
  require(x.size() <= 20 && y.size() <= 20, "subset condition limited to sides of 20");
  if (k == 0 || k > x.size() || k > y.size()) return true;
  auto subsets = [k](std::size_t m) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t s = 0; s < (1u << m); ++s)
      if (static_cast<std::size_t>(std::popcount(s)) == k) out.push_back(s);
    return out;
  };
  // Bit j of adj[i]: x[i] ~ y[j].
  std::vector<std::uint32_t> adj(x.size(), 0);
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j)
      if (g.has_edge(x[i], y[j])) adj[i] |= 1u << j;
  const auto ys = subsets(y.size());
  for (std::uint32_t a : subsets(x.size())) {
    std::uint32_t reach = 0;
    for (std::uint32_t f = a; f; f &= f - 1) reach |= adj[std::countr_zero(f)];
    for (std::uint32_t b : ys)
      if (!(reach & b)) return false;
  }
  return true;
}

bool pseudorandom(const ColoredGraph& g, double gamma, double p) {
  const std::size_t n = g.num_vertices();
  require(n <= 12, "pseudorandomness oracle limited to n <= 12");
  const auto min = static_cast<std::size_t>(std::ceil(gamma * static_cast<double>(n) - 1e-9));
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= 3;
  std::vector<int> side(n);
  for (std::size_t code = 0; code < total; ++code) {
    std::size_t c = code, nu = 0, nw = 0;
    for (std::size_t i = 0; i < n; ++i, c /= 3) {
      side[i] = static_cast<int>(c % 3);
      nu += side[i] == 1;
      nw += side[i] == 2;
    }
    if (nu < std::max<std::size_t>(min, 1) || nw < std::max<std::size_t>(min, 1)) continue;
    std::size_t e = 0;
    for (const Edge& ed : g.edges()) e += (side[ed.u] == 1 && side[ed.v] == 2) || (side[ed.u] == 2 && side[ed.v] == 1);
    const double d = static_cast<double>(e) / static_cast<double>(nu * nw);
    if (std::abs(d - p) > gamma * p + 1e-12) return false;
  }
  return true;
}

bool set_densities_within(const ColoredGraph& g, std::size_t min_size, double gamma, double p) {
  const std::size_t n = g.num_vertices();
  require(n <= 20, "set density oracle limited to n <= 20");
  const auto nb = masks_of(g);
  for (std::uint32_t u = 1; u < (1u << n); ++u) {
    const auto size = static_cast<std::size_t>(std::popcount(u));
    if (size < std::max<std::size_t>(min_size, 2)) continue;
    std::size_t twice = 0;
    for (std::uint32_t f = u; f; f &= f - 1) twice += static_cast<std::size_t>(std::popcount(nb[std::countr_zero(f)] & u));
    const double d = static_cast<double>(twice / 2) / (static_cast<double>(size * (size - 1)) / 2.0);
    if (std::abs(d - p) > gamma * p + 1e-12) return false;
  }
  return true;
}

}  // namespace monoham::oracle
