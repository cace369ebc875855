#include "monoham/coloring.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>

#include "monoham/matching.hpp"

namespace monoham {

namespace {

void require_colors(Color r, Color min_r) {
  if (r < min_r) throw InputError("need at least " + std::to_string(min_r) + " colours");
}

AdversaryObjective objective_of(const std::vector<std::size_t>& nu) {
  AdversaryObjective obj;
  for (std::size_t x : nu) {
    obj.total_nu += x;
    if (x > obj.max_nu) {
      obj.max_nu = x;
      obj.argmax_count = 1;
    } else if (x == obj.max_nu) {
      ++obj.argmax_count;
    }
  }
  return obj;
}

}  // namespace

LayeredPartition layered_partition(std::size_t n, Color r, std::uint64_t seed) {
  require_colors(r, 2);
  if (n < static_cast<std::size_t>(r) + 1) throw InputError("layered colouring needs n >= r+1");
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), Vertex{0});
  Rng rng(seed);
  std::shuffle(order.begin(), order.end(), rng);
  const std::size_t small = n / (static_cast<std::size_t>(r) + 1);
  LayeredPartition lp;
  lp.parts.resize(r);
  lp.layer.assign(n, 0);
  std::size_t pos = 0;
  for (Color i = 1; i <= r; ++i) {
    std::size_t size = i < r ? small : n - pos;
    auto& part = lp.parts[i - 1];
    part.assign(order.begin() + static_cast<std::ptrdiff_t>(pos),
                order.begin() + static_cast<std::ptrdiff_t>(pos + size));
    std::sort(part.begin(), part.end());
    for (Vertex v : part) lp.layer[v] = i;
    pos += size;
  }
  return lp;
}

ColoredGraph apply_layers(const ColoredGraph& g, const LayeredPartition& layers) {
  if (layers.layer.size() != g.num_vertices()) throw InputError("partition size mismatch");
  std::vector<Color> colors;
  colors.reserve(g.num_edges());
  for (const Edge& e : g.edges()) colors.push_back(std::min(layers.layer[e.u], layers.layer[e.v]));
  return g.with_colors(colors, static_cast<Color>(layers.parts.size()));
}

ColoredGraph layered_extremal_coloring(const ColoredGraph& g, Color r, std::uint64_t seed) {
  return apply_layers(g, layered_partition(g.num_vertices(), r, seed));
}

ColoredGraph random_coloring(const ColoredGraph& g, Color r, std::uint64_t seed) {
  require_colors(r, 1);
  Rng rng(seed);
  std::uniform_int_distribution<int> pick(1, r);
  std::vector<Color> colors;
  colors.reserve(g.num_edges());
  for (std::size_t i = 0; i < g.num_edges(); ++i) colors.push_back(static_cast<Color>(pick(rng)));
  return g.with_colors(colors, r);
}

std::size_t max_mono_matching(const ColoredGraph& g) {
  std::size_t best = 0;
  for (const Matching& m : mono_matchings(g)) best = std::max(best, m.size());
  return best;
}

AdversaryResult greedy_min_adversary(const ColoredGraph& g, Color r, std::uint64_t seed,
                                     std::size_t rounds) {
  require_colors(r, 2);
  AdversaryResult res;
  res.graph = random_coloring(g, r, seed);
  std::vector<Color> colors;
  for (const Edge& e : res.graph.edges()) colors.push_back(e.color);
  std::vector<Matching> best_m = mono_matchings(res.graph);
  std::vector<std::size_t> nu;
  for (const Matching& m : best_m) nu.push_back(m.size());
  AdversaryObjective current = objective_of(nu);
  res.trace.push_back(current);
  if (g.num_edges() == 0) {
    res.trace.resize(rounds + 1, current);
    return res;
  }

  Rng rng(derive_seed(seed, 0x6164));
  for (std::size_t round = 0; round < rounds; ++round) {
    std::vector<Color> largest;
    for (Color c = 1; c <= r; ++c)
      if (nu[c - 1] == current.max_nu) largest.push_back(c);
    const Color from = largest[std::uniform_int_distribution<std::size_t>(0, largest.size() - 1)(rng)];
    const Matching& mf = best_m[from - 1];
    if (mf.edges.empty()) {
      res.trace.push_back(current);
      continue;
    }
    const Edge picked = mf.edges[std::uniform_int_distribution<std::size_t>(0, mf.size() - 1)(rng)];
    const std::size_t idx = g.edge_index(picked.u, picked.v);

    std::optional<ColoredGraph> best_graph;
    std::vector<Matching> best_ms;
    std::vector<std::size_t> best_nu;
    std::vector<Color> best_colors;
    AdversaryObjective best_obj = current;
    for (Color to = 1; to <= r; ++to) {
      if (to == from) continue;
      std::vector<Color> trial = colors;
      trial[idx] = to;
      ColoredGraph cg = g.with_colors(trial, r);
      std::vector<Matching> ms = best_m;
      std::vector<std::size_t> tnu = nu;
      // Losing one edge: the old matching minus that edge is a valid start.
      Matching start = best_m[from - 1];
      std::erase_if(start.edges, [&](const Edge& e) { return e.u == picked.u && e.v == picked.v; });
      ms[from - 1] = augment_matching(cg, start, from);
      ms[to - 1] = augment_matching(cg, best_m[to - 1], to);
      tnu[from - 1] = ms[from - 1].size();
      tnu[to - 1] = ms[to - 1].size();
      AdversaryObjective obj = objective_of(tnu);
      if (obj < best_obj) {
        best_obj = obj;
        best_graph = std::move(cg);
        best_ms = std::move(ms);
        best_nu = std::move(tnu);
        best_colors = std::move(trial);
      }
    }
    if (best_graph) {
      res.graph = std::move(*best_graph);
      best_m = std::move(best_ms);
      nu = std::move(best_nu);
      current = best_obj;
      colors = std::move(best_colors);
      ++res.accepted_moves;
    }
    res.trace.push_back(current);
  }
  return res;
}

}  // namespace monoham
