#include "monoham/path_builder.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "monoham/rotation.hpp"

namespace monoham {

PathSeq dfs_long_path(const ColoredGraph& g, std::span<const Vertex> x, std::span<const Vertex> y,
                      std::size_t /*k*/, std::optional<Color> color) {
  if (x.size() != y.size()) throw InputError("dfs_long_path needs sides of equal size");
  const std::size_t n = g.num_vertices();
  std::vector<char> side(n, 0);
  for (Vertex v : x) {
    if (v >= n) throw InputError("vertex out of range");
    side[v] = 1;
  }
  for (Vertex v : y) {
    if (v >= n) throw InputError("vertex out of range");
    if (side[v]) throw InputError("sides overlap");
    side[v] = 2;
  }
  auto usable = [&](Vertex a, Vertex b, std::uint32_t edge) {
    return side[b] != 0 && side[b] != side[a] && (!color || g.edge(edge).color == *color);
  };

  // 0 unexplored, 1 active, 2 finished.
  std::vector<char> state(n, 0);
  std::vector<std::size_t> cursor(n, 0);
  std::vector<Vertex> stack, best;
  std::vector<Vertex> roots(x.begin(), x.end());
  roots.insert(roots.end(), y.begin(), y.end());
  std::sort(roots.begin(), roots.end());
  for (Vertex root : roots) {
    if (state[root]) continue;
    state[root] = 1;
    stack.push_back(root);
    while (!stack.empty()) {
      if (stack.size() > best.size()) best = stack;
      const Vertex v = stack.back();
      auto nb = g.neighbors(v);
      auto ids = g.incident_edges(v);
      bool pushed = false;
      for (std::size_t& i = cursor[v]; i < nb.size(); ++i) {
        const Vertex u = nb[i];
        if (state[u] == 0 && usable(v, u, ids[i])) {
          state[u] = 1;
          stack.push_back(u);
          pushed = true;
          ++i;
          break;
        }
      }
      if (!pushed) {
        state[v] = 2;
        stack.pop_back();
      }
    }
  }
  return make_path(g, std::move(best), color);
}

double ReducedGraph::density(std::size_t i, std::size_t j, Color c) const {
  const double pairs = static_cast<double>(parts[i].size()) * static_cast<double>(parts[j].size());
  return pairs > 0 ? static_cast<double>(count(i, j, c)) / pairs : 0.0;
}

double ReducedGraph::total_density(std::size_t i, std::size_t j) const {
  double s = 0.0;
  for (Color c = 1; c <= r; ++c) s += density(i, j, c);
  return s;
}

ReducedGraph build_reduced(const ColoredGraph& cg, std::size_t t, std::uint64_t seed) {
  const std::size_t n = cg.num_vertices();
  if (!cg.is_colored()) throw InputError("reduced graph needs a coloured graph");
  if (t == 0 || t > n) throw InputError("part count must lie in [1, n]");
  ReducedGraph rg;
  rg.t = t;
  rg.r = cg.num_colors();
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), Vertex{0});
  Rng rng(derive_seed(seed, 0x726564));
  std::shuffle(order.begin(), order.end(), rng);
  rg.parts.resize(t);
  std::vector<std::size_t> part_of(n);
  std::size_t at = 0;
  for (std::size_t i = 0; i < t; ++i) {
    const std::size_t size = n / t + (i < n % t ? 1 : 0);
    rg.parts[i].assign(order.begin() + static_cast<std::ptrdiff_t>(at),
                       order.begin() + static_cast<std::ptrdiff_t>(at + size));
    std::sort(rg.parts[i].begin(), rg.parts[i].end());
    for (Vertex v : rg.parts[i]) part_of[v] = i;
    at += size;
  }

  rg.counts.assign(t * t * rg.r, 0);
  for (const Edge& e : cg.edges()) {
    const std::size_t a = part_of[e.u], b = part_of[e.v];
    if (a == b) continue;
    ++rg.counts[(a * t + b) * rg.r + (e.color - 1)];
    ++rg.counts[(b * t + a) * rg.r + (e.color - 1)];
  }
  const double pairs = static_cast<double>(n) * static_cast<double>(n - 1) / 2.0;
  rg.p_hat = pairs > 0 ? static_cast<double>(cg.num_edges()) / pairs : 0.0;
  rg.threshold = rg.p_hat / (2.0 * rg.r);

  std::vector<Edge> edges;
  for (std::size_t i = 0; i < t; ++i)
    for (std::size_t j = i + 1; j < t; ++j) {
      Color best = 1;
      for (Color c = 2; c <= rg.r; ++c)
        if (rg.count(i, j, c) > rg.count(i, j, best)) best = c;
      const double d = rg.density(i, j, best);
      if (rg.count(i, j, best) > 0 && d >= rg.threshold)
        edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(j), best});
    }
  rg.graph = ColoredGraph(t, std::move(edges), rg.r);
  return rg;
}

namespace {

// Connector from the tail of `cur` to the head of `next`: (index in cur,
// index in next) or nullopt.
std::optional<std::pair<std::size_t, std::size_t>> find_connector(const ColoredGraph& g,
                                                                  const std::vector<Vertex>& cur,
                                                                  const std::vector<Vertex>& next,
                                                                  std::size_t seg,
                                                                  std::vector<int>& head_pos) {
  const std::size_t h = std::min(seg, next.size());
  for (std::size_t j = 0; j < h; ++j) head_pos[next[j]] = static_cast<int>(j);
  std::optional<std::pair<std::size_t, std::size_t>> out;
  const std::size_t tl = std::min(seg, cur.size());
  for (std::size_t d = 0; d < tl && !out; ++d) {
    const std::size_t a = cur.size() - 1 - d;
    int bestj = -1;
    for (Vertex u : g.neighbors(cur[a]))
      if (head_pos[u] >= 0 && (bestj < 0 || head_pos[u] < bestj)) bestj = head_pos[u];
    if (bestj >= 0) out = std::make_pair(a, static_cast<std::size_t>(bestj));
  }
  for (std::size_t j = 0; j < h; ++j) head_pos[next[j]] = -1;
  return out;
}

// Appends `next` to `cur` through a connector, trying `next` reversed too.
bool join(const ColoredGraph& g, std::vector<Vertex>& cur, const std::vector<Vertex>& next, std::size_t seg,
          std::vector<int>& head_pos) {
  if (cur.empty()) {
    cur = next;
    return true;
  }
  const std::vector<Vertex> rev(next.rbegin(), next.rend());
  for (const std::vector<Vertex>* cand : {&next, &rev}) {
    auto c = find_connector(g, cur, *cand, seg, head_pos);
    if (!c) continue;
    cur.resize(c->first + 1);
    cur.insert(cur.end(), cand->begin() + static_cast<std::ptrdiff_t>(c->second), cand->end());
    return true;
  }
  return false;
}

}  // namespace

StitchResult stitch_paths(const ColoredGraph& g, const std::vector<PathSeq>& paths, std::size_t seg) {
  if (seg == 0) throw InputError("segment size must be positive");
  const std::size_t n = g.num_vertices();
  std::vector<char> used(n, 0);
  for (const PathSeq& p : paths)
    for (Vertex v : p.vertices) {
      if (v >= n || used[v]) throw InputError("paths must be vertex-disjoint");
      used[v] = 1;
    }
  StitchResult res;
  std::vector<int> head_pos(n, -1);
  std::vector<Vertex> cur;
  for (std::size_t i = 0; i < paths.size(); ++i) {
    if (paths[i].vertices.empty()) continue;
    const bool had = !cur.empty();
    if (!join(g, cur, paths[i].vertices, seg, head_pos)) {
      res.ok = false;
      res.failed_pair = std::make_pair(i - 1, i);
      res.failure = "no connector between paths " + std::to_string(i - 1) + " and " + std::to_string(i);
      break;
    }
    if (had) ++res.connectors;
  }
  std::optional<Color> maj;
  if (!paths.empty() && paths.front().majority_color) maj = paths.front().majority_color;
  res.path = make_path(g, std::move(cur), maj);
  return res;
}

AlmostMonoResult almost_mono_path(const ColoredGraph& cg, Color r, double eps, const PathBuilderConfig& cfg) {
  if (!cg.is_colored()) throw InputError("almost_mono_path needs a coloured graph");
  if (r < 1 || r != cg.num_colors()) throw InputError("colour count mismatch");
  const std::size_t n = cg.num_vertices();
  AlmostMonoResult res;
  if (n == 0) return res;
  const std::size_t t = std::clamp<std::size_t>(cfg.t, 1, n);
  res.reduced = build_reduced(cg, t, cfg.seed);

  res.color = 1;
  for (Color c = 1; c <= r; ++c) {
    Matching m = max_matching(res.reduced.graph, c);
    if (c == 1 || m.size() > res.reduced_matching.size()) {
      res.reduced_matching = std::move(m);
      res.color = c;
    }
  }

  for (const Edge& e : res.reduced_matching.edges) {
    std::vector<Vertex> a = res.reduced.parts[e.u], b = res.reduced.parts[e.v];
    const std::size_t m = std::min(a.size(), b.size());
    a.resize(m);
    b.resize(m);
    const std::size_t k = cfg.k_dfs ? cfg.k_dfs : static_cast<std::size_t>(std::ceil(eps * static_cast<double>(m)));
    res.pieces.push_back(dfs_long_path(cg, a, b, k, res.color));
  }

  const std::size_t seg = cfg.seg ? cfg.seg : (n + 4 * t - 1) / (4 * t);
  std::vector<int> head_pos(n, -1);
  std::vector<Vertex> cur;
  for (std::size_t i = 0; i < res.pieces.size(); ++i) {
    if (res.pieces[i].empty()) continue;
    if (!join(cg, cur, res.pieces[i].vertices, seg, head_pos))
      res.stitch_failures.push_back("no connector to piece " + std::to_string(i));
  }
  if (cur.empty()) {
    // No monochromatic reduced edge: start from any edge of the colour.
    for (const Edge& e : cg.edges())
      if (e.color == res.color) {
        cur = {e.u, e.v};
        break;
      }
  }
  res.stitched_vertices = cur.size();

  const std::size_t cap = cfg.max_vertices ? std::min(cfg.max_vertices, n) : n;
  if (cur.size() > cap) cur.resize(cap);
  if (cfg.extend && !cur.empty() && cur.size() < cap) {
    AdjacencyLists adj(n);
    for (const Edge& e : cg.edges())
      if (e.color == res.color) {
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
      }
    EngineOptions eo;
    eo.goal = EngineGoal::cap;
    eo.cap = cap;
    eo.seed = derive_seed(cfg.seed, 0x657874);
    eo.level2_tries = 8;
    eo.work_budget = 200'000'000;
    EngineResult er = rotation_extension(std::move(adj), nullptr, cur, nullptr, eo);
    // Rotations cut path edges and only add colour edges, so this never
    // raises the off-colour count.
    if (er.path.size() > cur.size()) cur = std::move(er.path);
  }
  res.path = make_path(cg, std::move(cur), res.color);
  return res;
}

}  // namespace monoham
