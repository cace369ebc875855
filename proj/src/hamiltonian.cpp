#include "monoham/hamiltonian.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <deque>
#include <numeric>
#include <string>

#include "monoham/exhaustive.hpp"
#include "monoham/path.hpp"

namespace monoham {

namespace {

ColoredGraph plus_edge(const ColoredGraph& h, Vertex a, Vertex b) {
  std::vector<Edge> edges(h.edges().begin(), h.edges().end());
  edges.push_back({std::min(a, b), std::max(a, b), kUncolored});
  return ColoredGraph(h.num_vertices(), std::move(edges));
}

std::vector<Edge> candidate_non_edges(const ColoredGraph& h, const std::vector<Edge>* pool) {
  std::vector<Edge> out;
  const std::size_t n = h.num_vertices();
  if (pool) {
    for (const Edge& e : *pool) {
      Vertex a = std::min(e.u, e.v), b = std::max(e.u, e.v);
      if (a == b || b >= n) throw InputError("candidate pool edge out of range");
      if (!h.has_edge(a, b)) out.push_back({a, b, kUncolored});
    }
    std::sort(out.begin(), out.end(),
              [](const Edge& x, const Edge& y) { return std::tie(x.u, x.v) < std::tie(y.u, y.v); });
    out.erase(std::unique(out.begin(), out.end()), out.end());
  } else {
    for (Vertex a = 0; a < n; ++a)
      for (Vertex b = a + 1; b < n; ++b)
        if (!h.has_edge(a, b)) out.push_back({a, b, kUncolored});
  }
  return out;
}

// Best of a few rotation-extension runs: (closed into a Hamilton cycle, longest path).
std::pair<bool, std::size_t> heuristic_longest(const ColoredGraph& g, std::uint64_t seed, int runs) {
  std::size_t best = 0;
  for (int i = 0; i < runs; ++i) {
    PosaResult r = posa_longest_path(g, derive_seed(seed, static_cast<std::uint64_t>(i)));
    if (r.hamilton_cycle) return {true, g.num_vertices()};
    best = std::max(best, r.vertices.size());
  }
  return {false, best};
}

// Neighbourhood of U (outside U) in a graph given by adjacency lists, with a
// reusable mark array.
struct NeighborhoodCounter {
  explicit NeighborhoodCounter(std::size_t n) : mark(n, 0) {}

  std::size_t count(const ColoredGraph& g, std::span<const Vertex> u) {
    ++epoch;
    for (Vertex v : u) mark[v] = epoch;
    ++epoch;
    std::size_t c = 0;
    for (Vertex v : u)
      for (Vertex y : g.neighbors(v))
        if (mark[y] != epoch && mark[y] != epoch - 1) {
          mark[y] = epoch;
          ++c;
        }
    return c;
  }

  std::vector<std::uint32_t> mark;
  std::uint32_t epoch = 0;
};

}  // namespace

BoosterReport boosters_of(const ColoredGraph& h_in, const std::vector<Edge>* pool, std::uint64_t seed) {
  const ColoredGraph h = h_in.uncolored();
  const std::size_t n = h.num_vertices();
  BoosterReport rep;
  std::vector<Edge> cands = candidate_non_edges(h, pool);
  rep.candidates = cands.size();

  if (n <= kBoosterExactCap) {
    if (is_hamiltonian_exact(h)) {
      rep.precondition_violated = true;
      rep.longest_path = n;
      return rep;
    }
    rep.longest_path = longest_path_vertices_exact(h);
    for (const Edge& e : cands) {
      ColoredGraph h2 = plus_edge(h, e.u, e.v);
      if (is_hamiltonian_exact(h2) || longest_path_vertices_exact(h2) > rep.longest_path)
        rep.boosters.push_back(e);
    }
    return rep;
  }

  rep.exact = false;
  auto [ham, longest] = heuristic_longest(h, seed, 4);
  rep.longest_path = longest;
  if (ham) {
    rep.precondition_violated = true;
    return rep;
  }
  for (std::size_t i = 0; i < cands.size(); ++i) {
    const Edge& e = cands[i];
    auto [ham2, longest2] = heuristic_longest(plus_edge(h, e.u, e.v), derive_seed(seed, 1000 + i), 2);
    if (ham2 || longest2 > longest) rep.boosters.push_back(e);
  }
  return rep;
}

std::size_t default_d0(std::size_t n, double eps) {
  const double v = std::ceil(eps * std::log(static_cast<double>(std::max<std::size_t>(n, 2))));
  return std::max<std::size_t>(2, static_cast<std::size_t>(v));
}

namespace {

ColoredGraph sparse_on(const ColoredGraph& gw, std::size_t d0, std::uint64_t seed) {
  if (d0 < 2) throw InputError("d0 must be at least 2");
  Rng rng(derive_seed(seed, 0x737061));
  std::vector<Edge> chosen;
  std::vector<Vertex> pick;
  for (Vertex v = 0; v < gw.num_vertices(); ++v) {
    auto nb = gw.neighbors(v);
    pick.clear();
    if (nb.size() < d0) {
      pick.assign(nb.begin(), nb.end());
    } else {
      std::sample(nb.begin(), nb.end(), std::back_inserter(pick), static_cast<std::ptrdiff_t>(d0), rng);
    }
    for (Vertex y : pick) chosen.push_back({std::min(v, y), std::max(v, y), gw.color(v, y)});
  }
  std::sort(chosen.begin(), chosen.end(),
            [](const Edge& x, const Edge& y) { return std::tie(x.u, x.v) < std::tie(y.u, y.v); });
  chosen.erase(std::unique(chosen.begin(), chosen.end()), chosen.end());
  return ColoredGraph(gw.num_vertices(), std::move(chosen), gw.num_colors());
}

}  // namespace

Subgraph sparse_expander_subgraph(const ColoredGraph& g, std::span<const Vertex> w, std::size_t d0,
                                  std::uint64_t seed) {
  Subgraph sub = induced_subgraph(g, w);
  sub.graph = sparse_on(sub.graph, d0, seed);
  return sub;
}

ExpanderReport is_expander(const ColoredGraph& h, double k, double alpha, CheckMode mode,
                           const ExpanderOptions& opts) {
  const std::size_t n = h.num_vertices();
  ExpanderReport rep;
  rep.k = k;
  rep.alpha = alpha;
  rep.mode = mode;
  const auto kmax = static_cast<std::size_t>(std::floor(k + 1e-9));
  const std::size_t limit = std::min(kmax, n);
  if (limit == 0) return rep;
  auto violates = [&](std::size_t size, std::size_t nbrs) {
    return static_cast<double>(nbrs) < alpha * static_cast<double>(size) - 1e-9;
  };

  if (mode == CheckMode::exact) {
    if (n > opts.exact_cap) throw CapacityError("exact expansion check limited to n <= " + std::to_string(opts.exact_cap));
    auto nb = neighbor_masks(h);
    const std::uint32_t total = n == 32 ? 0xffffffffu : (1u << n);
    for (std::uint32_t mask = 1; mask < total; ++mask) {
      const auto size = static_cast<std::size_t>(std::popcount(mask));
      if (size > limit) continue;
      ++rep.sets_examined;
      std::uint32_t out = 0;
      for (std::uint32_t m = mask; m; m &= m - 1) out |= nb[std::countr_zero(m)];
      out &= ~mask;
      const auto nbrs = static_cast<std::size_t>(std::popcount(out));
      if (violates(size, nbrs)) {
        rep.holds = false;
        for (std::uint32_t m = mask; m; m &= m - 1) rep.witness.push_back(static_cast<Vertex>(std::countr_zero(m)));
        rep.witness_neighbors = nbrs;
        return rep;
      }
    }
    return rep;
  }

  NeighborhoodCounter counter(n);
  auto test = [&](std::vector<Vertex> u) {
    std::sort(u.begin(), u.end());
    u.erase(std::unique(u.begin(), u.end()), u.end());
    if (u.empty() || u.size() > limit) return false;
    ++rep.sets_examined;
    const std::size_t nbrs = counter.count(h, u);
    if (!violates(u.size(), nbrs)) return false;
    rep.holds = false;
    rep.witness = std::move(u);
    rep.witness_neighbors = nbrs;
    return true;
  };

  for (Vertex v = 0; v < n; ++v)
    if (test({v})) return rep;

  std::vector<Vertex> by_degree(n);
  std::iota(by_degree.begin(), by_degree.end(), Vertex{0});
  std::stable_sort(by_degree.begin(), by_degree.end(),
                   [&](Vertex a, Vertex b) { return h.degree(a) < h.degree(b); });
  const std::size_t low_count = std::min<std::size_t>(n, 64);
  std::vector<char> is_low(n, 0);
  for (std::size_t i = 0; i < low_count; ++i) is_low[by_degree[i]] = 1;

  // Low-degree pairs within distance two, and Y u N(Y) shapes.
  for (std::size_t i = 0; i < low_count; ++i) {
    const Vertex v = by_degree[i];
    std::vector<Vertex> near;
    for (Vertex a : h.neighbors(v)) {
      near.push_back(a);
      for (Vertex b : h.neighbors(a))
        if (b != v) near.push_back(b);
    }
    std::sort(near.begin(), near.end());
    near.erase(std::unique(near.begin(), near.end()), near.end());
    for (Vertex u : near)
      if (is_low[u] && u > v) {
        if (test({v, u})) return rep;
        std::vector<Vertex> closed{v, u};
        for (Vertex x : h.neighbors(v)) closed.push_back(x);
        for (Vertex x : h.neighbors(u)) closed.push_back(x);
        if (test(closed)) return rep;
      }
    std::vector<Vertex> closed{v};
    for (Vertex x : h.neighbors(v)) closed.push_back(x);
    if (test(closed)) return rep;
  }

  // Greedy growth keeping the neighbourhood small.
  const std::size_t grow_cap = std::min<std::size_t>(limit, 64);
  std::vector<char> in_u(n, 0), in_n(n, 0);
  for (std::size_t i = 0; i < std::min<std::size_t>(low_count, 32); ++i) {
    std::vector<Vertex> u{by_degree[i]}, frontier;
    std::fill(in_u.begin(), in_u.end(), 0);
    std::fill(in_n.begin(), in_n.end(), 0);
    in_u[u[0]] = 1;
    for (Vertex y : h.neighbors(u[0])) {
      in_n[y] = 1;
      frontier.push_back(y);
    }
    while (u.size() < grow_cap) {
      Vertex best = kNoVertex;
      long best_delta = 0;
      for (Vertex x : frontier) {
        if (!in_n[x]) continue;
        long delta = -1;
        for (Vertex y : h.neighbors(x))
          if (!in_u[y] && !in_n[y]) ++delta;
        if (best == kNoVertex || delta < best_delta || (delta == best_delta && x < best)) {
          best = x;
          best_delta = delta;
        }
      }
      if (best == kNoVertex) break;
      in_u[best] = 1;
      in_n[best] = 0;
      u.push_back(best);
      for (Vertex y : h.neighbors(best))
        if (!in_u[y] && !in_n[y]) {
          in_n[y] = 1;
          frontier.push_back(y);
        }
      if (test(u)) return rep;
    }
  }

  // Random sets of geometrically spaced sizes.
  Rng rng(derive_seed(opts.seed, 0x657870));
  std::vector<std::size_t> sizes;
  for (std::size_t s = 1; s <= limit; s = std::max(s + 1, s * 2)) sizes.push_back(s);
  if (sizes.back() != limit) sizes.push_back(limit);
  const std::size_t per = std::max<std::size_t>(1, opts.samples / sizes.size());
  std::vector<Vertex> all(n);
  std::iota(all.begin(), all.end(), Vertex{0});
  for (std::size_t s : sizes)
    for (std::size_t t = 0; t < per; ++t) {
      std::vector<Vertex> u;
      std::sample(all.begin(), all.end(), std::back_inserter(u), static_cast<std::ptrdiff_t>(s), rng);
      if (test(u)) return rep;
    }
  return rep;
}

ExpanderConditions check_expander_conditions(const ColoredGraph& h, std::size_t m, std::size_t d) {
  const std::size_t n = h.num_vertices();
  if (n > 18) throw CapacityError("condition check limited to n <= 18");
  ExpanderConditions c;
  c.size_ok = m >= 1 && n >= 4 * m;
  c.min_degree = n > 0 && h.min_degree() >= 2;

  auto nb = neighbor_masks(h);
  std::uint32_t low = 0;
  for (Vertex v = 0; v < n; ++v)
    if (h.degree(v) < d) low |= 1u << v;
  c.low_degree_separated = true;
  for (Vertex v = 0; v < n && c.low_degree_separated; ++v) {
    if (!(low >> v & 1u)) continue;
    // Triangle or 4-cycle through v.
    for (Vertex a = 0; a < n; ++a) {
      if (!(nb[v] >> a & 1u)) continue;
      if (nb[a] & nb[v]) c.low_degree_separated = false;
      for (Vertex b = a + 1; b < n; ++b)
        if ((nb[v] >> b & 1u) && (nb[a] & nb[b] & ~(1u << v))) c.low_degree_separated = false;
    }
    // Another low vertex within distance 4.
    std::uint32_t reach = 1u << v, ring = 1u << v;
    for (int step = 0; step < 4; ++step) {
      std::uint32_t next = 0;
      for (std::uint32_t r = ring; r; r &= r - 1) next |= nb[std::countr_zero(r)];
      ring = next & ~reach;
      reach |= next;
    }
    if (reach & low & ~(1u << v)) c.low_degree_separated = false;
  }

  const std::uint32_t total = 1u << n;
  c.small_sets_sparse = true;
  for (std::uint32_t mask = 1; mask < total && c.small_sets_sparse; ++mask) {
    const auto size = static_cast<std::size_t>(std::popcount(mask));
    if (size > 5 * m) continue;
    std::size_t twice = 0;
    for (std::uint32_t r = mask; r; r &= r - 1) twice += static_cast<std::size_t>(std::popcount(nb[std::countr_zero(r)] & mask));
    if (static_cast<double>(twice / 2) > static_cast<double>(d * size) / 10.0 + 1e-9) c.small_sets_sparse = false;
  }

  c.pairs_joined = true;
  if (2 * m <= n)
    for (std::uint32_t mask = 1; mask < total && c.pairs_joined; ++mask) {
      if (static_cast<std::size_t>(std::popcount(mask)) != m) continue;
      std::uint32_t closed = mask;
      for (std::uint32_t r = mask; r; r &= r - 1) closed |= nb[std::countr_zero(r)];
      if (static_cast<std::size_t>(n - std::popcount(closed)) >= m) c.pairs_joined = false;
    }
  return c;
}

std::vector<Vertex> ball(const ColoredGraph& g, Vertex v, std::size_t radius) {
  std::vector<std::size_t> dist(g.num_vertices(), static_cast<std::size_t>(-1));
  std::deque<Vertex> q{v};
  dist[v] = 0;
  std::vector<Vertex> out;
  while (!q.empty()) {
    Vertex x = q.front();
    q.pop_front();
    if (dist[x] == radius) continue;
    for (Vertex y : g.neighbors(x))
      if (dist[y] == static_cast<std::size_t>(-1)) {
        dist[y] = dist[x] + 1;
        out.push_back(y);
        q.push_back(y);
      }
  }
  std::sort(out.begin(), out.end());
  return out;
}

HamiltonResult hamilton_in_subset(const ColoredGraph& g, std::span<const Vertex> w, std::size_t d0,
                                  std::uint64_t seed, const HamiltonOptions& opts) {
  if (w.size() < 2) throw InputError("W needs at least 2 vertices");
  const Subgraph sub = induced_subgraph(g, w);
  const ColoredGraph& gw = sub.graph;
  const std::size_t m = gw.num_vertices();
  const bool whole = m == g.num_vertices();
  HamiltonResult res;

  if (m <= 3) {
    res.attempts = 1;
    if (m == 3 && gw.num_edges() == 3) {
      res.success = true;
      res.cycle = sub.lift(std::vector<Vertex>{0, 1, 2});
      res.transcript.add(MoveKind::path, res.cycle);
      res.transcript.add(MoveKind::close);
      if (whole) res.transcript.add(MoveKind::cycle, res.cycle);
    } else {
      res.failure = "no Hamilton cycle on fewer than 3 vertices or a non-triangle";
    }
    return res;
  }

  const AdjacencyLists host = gw.adjacency_lists();
  for (std::size_t attempt = 0; attempt <= opts.retries; ++attempt) {
    const std::uint64_t s = derive_seed(seed, attempt);
    ++res.attempts;
    const ColoredGraph h = sparse_on(gw, d0, s);
    res.sparse_edges = h.num_edges();
    EngineOptions eo = opts.engine;
    eo.goal = EngineGoal::cycle;
    eo.seed = derive_seed(s, 1);
    eo.max_boosters = m;
    EngineResult er = rotation_extension(h.adjacency_lists(), &host, {}, nullptr, eo);
    res.boosters_added = er.boosters.size();
    if (er.closed && is_hamilton_cycle(gw, er.path)) {
      res.success = true;
      res.failure.clear();
      res.cycle = sub.lift(er.path);
      res.transcript = er.transcript.relabeled(sub.to_parent);
      if (whole) res.transcript.add(MoveKind::cycle, res.cycle);
      return res;
    }
    res.failure = er.budget_exhausted ? "search budget exhausted at " + std::to_string(er.path.size()) + "/" +
                                            std::to_string(m) + " vertices"
                                      : "no booster found with path at " + std::to_string(er.path.size()) +
                                            "/" + std::to_string(m) + " vertices";
  }
  return res;
}

std::vector<Vertex> EndpointResult::path_to(Vertex y) const {
  if (y >= sub.to_child.size() || sub.child(y) == kNoVertex) throw InputError("endpoint outside W");
  return sub.lift(state.path_to(sub.child(y)));
}

Transcript EndpointResult::transcript_to(Vertex y) const {
  if (y >= sub.to_child.size() || sub.child(y) == kNoVertex) throw InputError("endpoint outside W");
  return state.transcript_to(sub.child(y)).relabeled(sub.to_parent);
}

EndpointResult hamilton_path_endpoints(const ColoredGraph& g, std::span<const Vertex> w, Vertex anchor,
                                       std::size_t d0, std::uint64_t seed, const HamiltonOptions& opts) {
  EndpointResult res;
  res.anchor = anchor;
  res.sub = induced_subgraph(g, w);
  if (anchor >= g.num_vertices() || res.sub.child(anchor) == kNoVertex) throw InputError("anchor outside W");
  res.cycle = hamilton_in_subset(g, w, d0, seed, opts);
  if (!res.cycle.success) {
    res.failure = res.cycle.failure;
    return res;
  }
  const auto& c = res.cycle.cycle;
  const auto at = static_cast<std::size_t>(std::find(c.begin(), c.end(), anchor) - c.begin());
  std::vector<Vertex> path;
  path.reserve(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) path.push_back(res.sub.child(c[(at + i) % c.size()]));
  res.state = rotation_closure(res.sub.graph, path, path.front(), opts.closure);
  res.closure_exact = res.state.exact;
  res.endpoints = res.sub.lift(res.state.endpoints);
  res.target_met = 4 * res.endpoints.size() > w.size();
  res.success = true;
  return res;
}

PropertyReport check_properties(const ColoredGraph& g, const PropertyOptions& opts) {
  const std::size_t n = g.num_vertices();
  const double ln = std::log(static_cast<double>(std::max<std::size_t>(n, 2)));
  PropertyReport rep;
  rep.low_degree_threshold = opts.low_degree_threshold.value_or(ln / 10.0);
  if (n == 0) {
    rep.p1 = rep.p2 = rep.p3 = true;
    return rep;
  }

  rep.min_degree = g.min_degree();
  rep.max_degree = g.max_degree();
  const bool low_ok = rep.min_degree >= 2;
  const bool high_ok = static_cast<double>(rep.max_degree) <= 10.0 * ln;
  rep.p1 = low_ok && high_ok;
  if (!rep.p1)
    for (Vertex v = 0; v < n; ++v)
      if ((!low_ok && g.degree(v) == rep.min_degree) || (low_ok && g.degree(v) == rep.max_degree)) {
        rep.p1_witness = v;
        break;
      }

  auto is_low = [&](Vertex v) { return static_cast<double>(g.degree(v)) < rep.low_degree_threshold; };
  rep.p2 = true;
  std::vector<Vertex> mark(n, kNoVertex);
  std::vector<int> dist(n, -1);
  std::vector<Vertex> parent(n, kNoVertex);
  for (Vertex v = 0; v < n && rep.p2; ++v) {
    if (!is_low(v)) continue;
    for (Vertex a : g.neighbors(v)) {
      for (Vertex x : g.neighbors(a)) {
        if (x == v) continue;
        if (g.has_edge(v, x)) {
          rep.p2 = false;
          rep.p2_witness = {v, a, x, v};
          break;
        }
        if (mark[x] != kNoVertex && mark[x] != a) {
          rep.p2 = false;
          rep.p2_witness = {v, mark[x], x, a, v};
          break;
        }
        mark[x] = a;
      }
      if (!rep.p2) break;
    }
    for (Vertex a : g.neighbors(v))
      for (Vertex x : g.neighbors(a)) mark[x] = kNoVertex;
    if (!rep.p2) break;

    std::vector<Vertex> seen{v};
    std::deque<Vertex> q{v};
    dist[v] = 0;
    Vertex hit = kNoVertex;
    while (!q.empty() && hit == kNoVertex) {
      Vertex x = q.front();
      q.pop_front();
      if (dist[x] == 4) continue;
      for (Vertex y : g.neighbors(x)) {
        if (dist[y] >= 0) continue;
        dist[y] = dist[x] + 1;
        parent[y] = x;
        seen.push_back(y);
        if (is_low(y)) {
          hit = y;
          break;
        }
        q.push_back(y);
      }
    }
    if (hit != kNoVertex) {
      rep.p2 = false;
      for (Vertex x = hit; x != v; x = parent[x]) rep.p2_witness.push_back(x);
      rep.p2_witness.push_back(v);
      std::reverse(rep.p2_witness.begin(), rep.p2_witness.end());
    }
    for (Vertex x : seen) dist[x] = -1;
  }

  const auto cap = static_cast<std::size_t>(std::floor(opts.eps * static_cast<double>(n) / 100.0 + 1e-9));
  auto too_dense = [&](std::size_t size, std::size_t edges) {
    return static_cast<double>(edges) > opts.eps * static_cast<double>(size) * ln / 10.0 + 1e-9;
  };
  rep.p3 = true;
  if (n <= opts.exact_cap) {
    rep.p3_mode = CheckMode::exact;
    auto nb = neighbor_masks(g);
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
      const auto size = static_cast<std::size_t>(std::popcount(mask));
      if (size > cap) continue;
      std::size_t twice = 0;
      for (std::uint32_t r = mask; r; r &= r - 1) twice += static_cast<std::size_t>(std::popcount(nb[std::countr_zero(r)] & mask));
      if (too_dense(size, twice / 2)) {
        rep.p3 = false;
        for (std::uint32_t r = mask; r; r &= r - 1) rep.p3_witness.push_back(static_cast<Vertex>(std::countr_zero(r)));
        rep.p3_witness_edges = twice / 2;
        break;
      }
    }
    return rep;
  }

  // Greedy dense sets grown from sampled seeds: repeatedly add the outside
  // vertex with the most neighbours inside.
  rep.p3_mode = CheckMode::sampled;
  if (cap < 2) return rep;
  Rng rng(derive_seed(opts.seed, 0x703321));
  std::uniform_int_distribution<Vertex> pick(0, static_cast<Vertex>(n - 1));
  std::vector<std::uint32_t> inside(n, 0);
  std::vector<char> in_u(n, 0);
  const std::size_t grow = std::min<std::size_t>(cap, 200);
  for (std::size_t s = 0; s < opts.samples && rep.p3; ++s) {
    std::vector<Vertex> u{pick(rng)};
    std::vector<Vertex> touched;
    in_u[u[0]] = 1;
    std::size_t edges = 0;
    auto absorb = [&](Vertex v) {
      for (Vertex y : g.neighbors(v)) {
        if (inside[y] == 0) touched.push_back(y);
        ++inside[y];
      }
    };
    absorb(u[0]);
    while (u.size() < grow) {
      Vertex best = kNoVertex;
      for (Vertex y : touched)
        if (!in_u[y] && (best == kNoVertex || inside[y] > inside[best])) best = y;
      if (best == kNoVertex) break;
      edges += inside[best];
      in_u[best] = 1;
      u.push_back(best);
      absorb(best);
      if (too_dense(u.size(), edges)) {
        rep.p3 = false;
        rep.p3_witness = u;
        std::sort(rep.p3_witness.begin(), rep.p3_witness.end());
        rep.p3_witness_edges = edges;
        break;
      }
    }
    for (Vertex y : touched) inside[y] = 0;
    for (Vertex v : u) in_u[v] = 0;
  }
  return rep;
}

}  // namespace monoham
