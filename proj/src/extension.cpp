#include "monoham/extension.hpp"

#include <algorithm>
#include <numeric>

#include "monoham/rotation.hpp"

namespace monoham {

const char* extension_method_name(ExtensionMethod m) {
  switch (m) {
    case ExtensionMethod::none: return "none";
    case ExtensionMethod::split: return "split";
    case ExtensionMethod::rotation_repair: return "rotation_repair";
  }
  return "?";
}

const char* extension_failure_name(ExtensionFailure f) {
  switch (f) {
    case ExtensionFailure::none: return "none";
    case ExtensionFailure::no_neighbor_w: return "no_neighbor_w";
    case ExtensionFailure::no_y_edge: return "no_y_edge";
    case ExtensionFailure::sub_hamiltonicity: return "sub_hamiltonicity";
    case ExtensionFailure::repair_failed: return "repair_failed";
  }
  return "?";
}

namespace {

// Hamilton paths of G[W] starting at w, by brute force (|W| <= 8): end vertex
// and one path to it.
struct SmallEndpoints {
  std::vector<Vertex> ends;
  std::vector<std::vector<Vertex>> paths;
};

SmallEndpoints small_endpoints(const ColoredGraph& g, std::vector<Vertex> w, Vertex anchor) {
  SmallEndpoints out;
  std::vector<Vertex> rest;
  for (Vertex v : w)
    if (v != anchor) rest.push_back(v);
  std::sort(rest.begin(), rest.end());
  if (rest.empty()) {
    out.ends.push_back(anchor);
    out.paths.push_back({anchor});
    return out;
  }
  do {
    std::vector<Vertex> seq{anchor};
    seq.insert(seq.end(), rest.begin(), rest.end());
    if (!is_simple_path(g, seq)) continue;
    if (std::find(out.ends.begin(), out.ends.end(), seq.back()) != out.ends.end()) continue;
    out.ends.push_back(seq.back());
    out.paths.push_back(std::move(seq));
  } while (std::next_permutation(rest.begin(), rest.end()));
  return out;
}

struct Side {
  std::vector<Vertex> w;
  Vertex anchor = kNoVertex;
  std::vector<Vertex> ends;
  std::vector<std::vector<Vertex>> small_paths;
  EndpointResult big;
  bool small = false;

  std::vector<Vertex> path_to(Vertex y) const {
    if (!small) return big.path_to(y);
    const auto i = static_cast<std::size_t>(std::find(ends.begin(), ends.end(), y) - ends.begin());
    return small_paths[i];
  }
};

Vertex first_neighbor_in(const ColoredGraph& g, Vertex a, const std::vector<char>& in) {
  for (Vertex y : g.neighbors(a))
    if (in[y]) return y;
  return kNoVertex;
}

struct Attempt {
  bool ok = false;
  ExtensionFailure failure = ExtensionFailure::none;
  std::string detail;
  std::vector<Vertex> cycle;
};

Attempt split_attempt(const ColoredGraph& g, const PartitionPlan& plan, const std::vector<Vertex>& p,
                      std::size_t d0, std::uint64_t seed, const HamiltonOptions& ham) {
  const std::size_t n = g.num_vertices();
  Attempt at;
  std::vector<char> on_p(n, 0);
  for (Vertex v : p) on_p[v] = 1;
  std::vector<Vertex> rest;
  for (Vertex v : plan.v_prime)
    if (!on_p[v]) rest.push_back(v);
  Rng rng(derive_seed(seed, 0x73706c));
  std::shuffle(rest.begin(), rest.end(), rng);
  const std::size_t half = rest.size() / 2;

  Side side[2];
  side[0].w.assign(rest.begin(), rest.begin() + static_cast<std::ptrdiff_t>(half));
  side[1].w.assign(rest.begin() + static_cast<std::ptrdiff_t>(half), rest.end());
  side[0].w.insert(side[0].w.end(), plan.u1.begin(), plan.u1.end());
  side[1].w.insert(side[1].w.end(), plan.u2.begin(), plan.u2.end());
  std::vector<char> in0(n, 0), in1(n, 0);
  for (Vertex v : side[0].w) in0[v] = 1;
  for (Vertex v : side[1].w) in1[v] = 1;

  Vertex a1 = p.front(), a2 = p.back();
  Vertex w1 = first_neighbor_in(g, a1, in0), w2 = first_neighbor_in(g, a2, in1);
  if (w1 == kNoVertex || w2 == kNoVertex) {
    std::swap(a1, a2);
    w1 = first_neighbor_in(g, a1, in0);
    w2 = first_neighbor_in(g, a2, in1);
  }
  if (w1 == kNoVertex || w2 == kNoVertex || side[0].w.empty() || side[1].w.empty()) {
    at.failure = ExtensionFailure::no_neighbor_w;
    at.detail = "an end of P has no neighbour in its side";
    return at;
  }
  side[0].anchor = w1;
  side[1].anchor = w2;

  for (int i = 0; i < 2; ++i) {
    Side& s = side[i];
    if (s.w.size() <= 8) {
      s.small = true;
      SmallEndpoints se = small_endpoints(g, s.w, s.anchor);
      s.ends = std::move(se.ends);
      s.small_paths = std::move(se.paths);
    } else {
      s.big = hamilton_path_endpoints(g, s.w, s.anchor, d0, derive_seed(seed, 10 + i), ham);
      if (s.big.success) s.ends = s.big.endpoints;
    }
    if (s.ends.empty()) {
      at.failure = ExtensionFailure::sub_hamiltonicity;
      at.detail = "side " + std::to_string(i + 1) + " (" + std::to_string(s.w.size()) + " vertices): " +
                  (s.small ? std::string("no Hamilton path") : s.big.failure);
      return at;
    }
  }

  std::vector<char> in_y2(n, 0);
  for (Vertex y : side[1].ends) in_y2[y] = 1;
  Vertex y1 = kNoVertex, y2 = kNoVertex;
  for (Vertex y : side[0].ends) {
    y2 = first_neighbor_in(g, y, in_y2);
    if (y2 != kNoVertex) {
      y1 = y;
      break;
    }
  }
  if (y1 == kNoVertex) {
    at.failure = ExtensionFailure::no_y_edge;
    at.detail = "no edge between endpoint sets of sizes " + std::to_string(side[0].ends.size()) + " and " +
                std::to_string(side[1].ends.size());
    return at;
  }

  std::vector<Vertex> cycle = side[0].path_to(y1);
  std::vector<Vertex> q2 = side[1].path_to(y2);
  cycle.insert(cycle.end(), q2.rbegin(), q2.rend());
  if (a1 == p.front())
    cycle.insert(cycle.end(), p.rbegin(), p.rend());
  else
    cycle.insert(cycle.end(), p.begin(), p.end());
  if (!is_hamilton_cycle(g, cycle)) {
    at.failure = ExtensionFailure::sub_hamiltonicity;
    at.detail = "assembled cycle failed validation";
    return at;
  }
  at.ok = true;
  at.cycle = std::move(cycle);
  return at;
}

Transcript cycle_transcript(const std::vector<Vertex>& cycle) {
  Transcript t;
  t.add(MoveKind::path, cycle);
  t.add(MoveKind::close);
  t.add(MoveKind::cycle, cycle);
  return t;
}

}  // namespace

ExtensionResult extend_to_hamilton(const ColoredGraph& g, const PartitionPlan& plan, const PathSeq& p,
                                   const ExtensionOptions& opts) {
  const std::size_t n = g.num_vertices();
  const std::size_t d0 = opts.d0 ? opts.d0 : default_d0(n, plan.eps);
  ExtensionResult res;

  if (p.vertices.size() <= 1) {
    if (p.vertices.size() == 1 && p.vertices[0] >= n) throw InputError("path vertex out of range");
    std::vector<Vertex> all(n);
    std::iota(all.begin(), all.end(), Vertex{0});
    HamiltonResult hr = hamilton_in_subset(g, all, d0, opts.seed, opts.ham);
    res.attempts = hr.attempts;
    res.success = hr.success;
    if (hr.success) {
      res.cycle = std::move(hr.cycle);
      res.method = ExtensionMethod::split;
      res.transcript = std::move(hr.transcript);
    } else {
      res.failure = ExtensionFailure::sub_hamiltonicity;
      res.detail = hr.failure;
    }
    return res;
  }

  if (!is_simple_path(g, p.vertices)) throw InputError("P is not a path of the graph");
  if (3 * p.vertices.size() > 2 * n) throw PreconditionError("P covers more than 2n/3 vertices");
  std::vector<char> prime(n, 0);
  for (Vertex v : plan.v_prime)
    if (v < n) prime[v] = 1;
  for (Vertex v : p.vertices)
    if (!prime[v]) throw PreconditionError("P leaves V'");

  for (std::size_t attempt = 0; attempt <= opts.retries; ++attempt) {
    ++res.attempts;
    Attempt at = split_attempt(g, plan, p.vertices, d0, derive_seed(opts.seed, attempt), opts.ham);
    if (at.ok) {
      res.success = true;
      res.method = ExtensionMethod::split;
      res.failure = ExtensionFailure::none;
      res.detail.clear();
      res.cycle = std::move(at.cycle);
      res.transcript = cycle_transcript(res.cycle);
      return res;
    }
    res.failure = at.failure;
    res.detail = at.detail;
  }
  if (!opts.allow_repair) return res;

  EdgeSet protect;
  for (std::size_t i = 0; i + 1 < p.vertices.size(); ++i) protect.insert(p.vertices[i], p.vertices[i + 1]);
  const AdjacencyLists adj = g.adjacency_lists();
  for (std::size_t attempt = 0; attempt <= opts.retries; ++attempt) {
    ++res.attempts;
    EngineOptions eo = opts.ham.engine;
    eo.goal = EngineGoal::cycle;
    eo.seed = derive_seed(opts.seed, 0x726570 + attempt);
    EngineResult er = rotation_extension(adj, nullptr, p.vertices, &protect, eo);
    if (er.closed && is_hamilton_cycle(g, er.path)) {
      res.success = true;
      res.method = ExtensionMethod::rotation_repair;
      res.cycle = std::move(er.path);
      res.transcript = std::move(er.transcript);
      res.transcript.add(MoveKind::cycle, res.cycle);
      return res;
    }
  }
  res.detail += "; repair failed";
  res.failure = ExtensionFailure::repair_failed;
  return res;
}

}  // namespace monoham
