#include "monoham/matching.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>
#include <stdexcept>
#include <string>

namespace monoham {

namespace {

using Adjacency = std::vector<std::vector<Vertex>>;

Adjacency restricted_adjacency(const ColoredGraph& g, std::optional<Color> color) {
  if (color && (!g.is_colored() || *color == kUncolored || *color > g.num_colors()))
    throw InputError("restrict_color out of range");
  Adjacency adj(g.num_vertices());
  for (const Edge& e : g.edges()) {
    if (color && e.color != *color) continue;
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  return adj;
}

constexpr int kNone = -1;

// Edmonds' blossom algorithm with one alternating forest grown per search.
class Blossom {
 public:
  explicit Blossom(const Adjacency& adj)
      : adj_(adj), n_(adj.size()), match_(n_, kNone), parent_(n_), base_(n_), used_(n_),
        in_blossom_(n_), mark_(n_) {}

  void set_mates(std::span<const Vertex> mate) {
    for (std::size_t v = 0; v < n_; ++v)
      match_[v] = mate[v] == kNoVertex ? kNone : static_cast<int>(mate[v]);
  }

  void greedy() {
    for (std::size_t v = 0; v < n_; ++v) {
      if (match_[v] != kNone) continue;
      for (Vertex to : adj_[v]) {
        if (match_[to] == kNone) {
          match_[v] = static_cast<int>(to);
          match_[to] = static_cast<int>(v);
          break;
        }
      }
    }
  }

  void maximize() {
    for (std::size_t v = 0; v < n_; ++v) {
      if (match_[v] != kNone || adj_[v].empty()) continue;
      int end = grow({static_cast<int>(v)});
      if (end >= 0) flip(end);
    }
  }

  // Grows one forest rooted at every exposed vertex. Requires a maximum
  // matching; returns the outer (even) vertices.
  std::vector<char> outer_vertices() {
    std::vector<int> roots;
    for (std::size_t v = 0; v < n_; ++v)
      if (match_[v] == kNone) roots.push_back(static_cast<int>(v));
    if (grow(roots) != kNone)
      throw std::logic_error("matching passed to the decomposition is not maximum");
    return used_;
  }

  std::vector<Vertex> mates() const {
    std::vector<Vertex> out(n_, kNoVertex);
    for (std::size_t v = 0; v < n_; ++v)
      if (match_[v] != kNone) out[v] = static_cast<Vertex>(match_[v]);
    return out;
  }

 private:
  // Common base of the blossoms containing a and b, or kNone when they lie
  // in different trees (only possible with several roots).
  int lca(int a, int b) {
    std::fill(mark_.begin(), mark_.end(), 0);
    for (;;) {
      a = base_[a];
      mark_[a] = 1;
      if (match_[a] == kNone) break;
      a = parent_[match_[a]];
    }
    for (;;) {
      b = base_[b];
      if (mark_[b]) return b;
      if (match_[b] == kNone) return kNone;
      b = parent_[match_[b]];
    }
  }

  void mark_path(int v, int b, int child) {
    while (base_[v] != b) {
      in_blossom_[base_[v]] = 1;
      in_blossom_[base_[match_[v]]] = 1;
      parent_[v] = child;
      child = match_[v];
      v = parent_[match_[v]];
    }
  }

  // Returns an exposed vertex reached by an augmenting path, or kNone.
  int grow(const std::vector<int>& roots) {
    std::fill(used_.begin(), used_.end(), 0);
    std::fill(parent_.begin(), parent_.end(), kNone);
    std::iota(base_.begin(), base_.end(), 0);
    std::deque<int> queue;
    for (int r : roots) {
      used_[r] = 1;
      queue.push_back(r);
    }
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      for (Vertex tv : adj_[v]) {
        int to = static_cast<int>(tv);
        if (base_[v] == base_[to] || match_[v] == to) continue;
        bool to_outer = match_[to] == kNone ? used_[to] != 0 : parent_[match_[to]] != kNone;
        if (to_outer) {
          int cur = lca(v, to);
          if (cur == kNone) return -2;  // two trees meet: augmenting path exists
          std::fill(in_blossom_.begin(), in_blossom_.end(), 0);
          mark_path(v, cur, to);
          mark_path(to, cur, v);
          for (std::size_t i = 0; i < n_; ++i) {
            if (!in_blossom_[base_[i]]) continue;
            base_[i] = cur;
            if (!used_[i]) {
              used_[i] = 1;
              queue.push_back(static_cast<int>(i));
            }
          }
        } else if (parent_[to] == kNone) {
          parent_[to] = v;
          if (match_[to] == kNone) return to;
          used_[match_[to]] = 1;
          queue.push_back(match_[to]);
        }
      }
    }
    return kNone;
  }

  void flip(int v) {
    while (v != kNone) {
      int pv = parent_[v];
      int ppv = match_[pv];
      match_[v] = pv;
      match_[pv] = v;
      v = ppv;
    }
  }

  const Adjacency& adj_;
  std::size_t n_;
  std::vector<int> match_;
  std::vector<int> parent_;
  std::vector<int> base_;
  std::vector<char> used_;
  std::vector<char> in_blossom_;
  std::vector<char> mark_;
};

std::vector<Vertex> sorted(std::vector<Vertex> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

bool Matching::covers(Vertex v) const {
  return std::any_of(edges.begin(), edges.end(), [v](const Edge& e) { return e.u == v || e.v == v; });
}

bool is_matching(const ColoredGraph& g, const Matching& m) {
  std::vector<char> seen(g.num_vertices(), 0);
  for (const Edge& e : m.edges) {
    if (e.u >= g.num_vertices() || e.v >= g.num_vertices()) return false;
    std::size_t idx = g.edge_index(e.u, e.v);
    if (idx == ColoredGraph::npos) return false;
    if (seen[e.u] || seen[e.v]) return false;
    seen[e.u] = seen[e.v] = 1;
    if (m.color && g.edge(idx).color != *m.color) return false;
  }
  return true;
}

Matching matching_from_mates(const ColoredGraph& g, std::span<const Vertex> mate) {
  Matching m;
  for (Vertex v = 0; v < mate.size(); ++v)
    if (mate[v] != kNoVertex && v < mate[v]) m.edges.push_back({v, mate[v], g.color(v, mate[v])});
  return m;
}

std::vector<Vertex> mates_of(const Matching& m, std::size_t n) {
  std::vector<Vertex> mate(n, kNoVertex);
  for (const Edge& e : m.edges) {
    mate[e.u] = e.v;
    mate[e.v] = e.u;
  }
  return mate;
}

Matching max_matching(const ColoredGraph& g, std::optional<Color> restrict_color) {
  Adjacency adj = restricted_adjacency(g, restrict_color);
  Blossom solver(adj);
  solver.greedy();
  solver.maximize();
  Matching m = matching_from_mates(g, solver.mates());
  m.color = restrict_color;
  return m;
}

Matching augment_matching(const ColoredGraph& g, const Matching& initial,
                          std::optional<Color> restrict_color) {
  Adjacency adj = restricted_adjacency(g, restrict_color);
  Matching start = initial;
  start.color = restrict_color;
  if (!is_matching(g, start)) throw InputError("initial edge set is not a matching of the graph");
  Blossom solver(adj);
  solver.set_mates(mates_of(initial, g.num_vertices()));
  solver.maximize();
  Matching m = matching_from_mates(g, solver.mates());
  m.color = restrict_color;
  return m;
}

Matching max_matching_oracle(const ColoredGraph& g) {
  const std::size_t n = g.num_vertices();
  if (n > kMatchingOracleCap)
    throw CapacityError("exhaustive matching limited to n <= " + std::to_string(kMatchingOracleCap));
  std::vector<Edge> current;
  std::vector<Edge> best;
  std::vector<char> taken(n, 0);
  // Depth-first in lexicographic order of the sorted edge list, so the first
  // maximum reached is the lexicographically smallest one.
  auto rec = [&](auto&& self, Vertex v) -> void {
    while (v < n && taken[v]) ++v;
    std::size_t free_left = 0;
    for (Vertex x = v; x < n; ++x) free_left += !taken[x];
    if (current.size() > best.size()) best = current;
    if (v >= n || current.size() + free_left / 2 <= best.size()) return;
    taken[v] = 1;
    for (Vertex u : g.neighbors(v)) {
      if (u < v || taken[u]) continue;
      taken[u] = 1;
      current.push_back({v, u, g.color(v, u)});
      self(self, v + 1);
      current.pop_back();
      taken[u] = 0;
    }
    self(self, v + 1);
    taken[v] = 0;
  };
  rec(rec, 0);
  Matching m;
  m.edges = best;
  return m;
}

GallaiEdmonds gallai_edmonds(const ColoredGraph& g) {
  Adjacency adj = restricted_adjacency(g, std::nullopt);
  Blossom solver(adj);
  solver.greedy();
  solver.maximize();
  std::vector<char> outer = solver.outer_vertices();
  const std::size_t n = g.num_vertices();
  std::vector<char> in_a(n, 0);
  GallaiEdmonds ge;
  for (Vertex v = 0; v < n; ++v) {
    if (!outer[v]) continue;
    ge.d.push_back(v);
    for (Vertex u : g.neighbors(v))
      if (!outer[u]) in_a[u] = 1;
  }
  for (Vertex v = 0; v < n; ++v) {
    if (in_a[v]) ge.a.push_back(v);
    else if (!outer[v]) ge.c.push_back(v);
  }
  ge.matching = matching_from_mates(g, solver.mates());
  return ge;
}

std::size_t odd_components_without(const ColoredGraph& g, std::span<const Vertex> removed) {
  const std::size_t n = g.num_vertices();
  std::vector<char> gone(n, 0);
  for (Vertex v : removed) gone.at(v) = 1;
  std::vector<char> seen(n, 0);
  std::vector<Vertex> stack;
  std::size_t odd = 0;
  for (Vertex s = 0; s < n; ++s) {
    if (gone[s] || seen[s]) continue;
    std::size_t size = 0;
    seen[s] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      ++size;
      for (Vertex u : g.neighbors(v)) {
        if (gone[u] || seen[u]) continue;
        seen[u] = 1;
        stack.push_back(u);
      }
    }
    odd += size % 2;
  }
  return odd;
}

std::int64_t tutte_berge_deficiency(const ColoredGraph& g, std::span<const Vertex> u) {
  return static_cast<std::int64_t>(odd_components_without(g, u)) - static_cast<std::int64_t>(u.size());
}

TutteBergeCertificate tutte_berge_certificate(const ColoredGraph& g) {
  GallaiEdmonds ge = gallai_edmonds(g);
  TutteBergeCertificate cert;
  cert.u = ge.a;
  cert.deficiency = tutte_berge_deficiency(g, cert.u);
  cert.nu = static_cast<std::size_t>((static_cast<std::int64_t>(g.num_vertices()) - cert.deficiency) / 2);
  if (cert.nu != ge.matching.size())
    throw std::logic_error("Gallai-Edmonds certificate does not match the matching size");
  return cert;
}

bool certificate_consistent(const ColoredGraph& g, const TutteBergeCertificate& cert) {
  std::vector<Vertex> u = sorted(cert.u);
  if (std::adjacent_find(u.begin(), u.end()) != u.end()) return false;
  if (!u.empty() && u.back() >= g.num_vertices()) return false;
  std::int64_t def = tutte_berge_deficiency(g, u);
  if (def != cert.deficiency) return false;
  std::int64_t twice = static_cast<std::int64_t>(g.num_vertices()) - def;
  return twice >= 0 && twice % 2 == 0 && static_cast<std::size_t>(twice / 2) == cert.nu;
}

std::vector<Matching> mono_matchings(const ColoredGraph& g) {
  if (!g.is_colored()) throw InputError("mono_matchings needs a coloured graph");
  std::vector<Matching> out;
  for (Color c = 1; c <= g.num_colors(); ++c) out.push_back(max_matching(g, c));
  return out;
}

bool ramsey_hypothesis_holds(const ColoredGraph& g, const RamseyInstance& inst) {
  const std::size_t r = inst.k.size();
  if (r == 0 || r != g.num_colors()) return false;
  if (std::any_of(inst.k.begin(), inst.k.end(), [](std::size_t k) { return k < 1; })) return false;
  const double tol = 1e-9;
  if (inst.delta < -tol || inst.delta > 1.0 / (2.0 * static_cast<double>(r + 1)) + tol) return false;
  const double n = static_cast<double>(g.num_vertices());
  const double pairs = n * (n - 1.0) / 2.0;
  if (static_cast<double>(g.num_edges()) < (1.0 - inst.delta) * pairs - tol) return false;
  std::size_t sum = 0;
  for (std::size_t k : inst.k) sum += k - 1;
  const std::size_t kmax = *std::max_element(inst.k.begin(), inst.k.end());
  const double lhs = (1.0 - static_cast<double>(r + 1) * inst.delta) * n;
  return lhs + tol >= static_cast<double>(sum + kmax + 1);
}

RamseyResult ramsey_matching_witness(const ColoredGraph& g, const RamseyInstance& inst) {
  if (!g.is_colored()) throw InputError("ramsey_matching_witness needs a coloured graph");
  if (inst.k.size() != g.num_colors())
    throw InputError("need one target size per colour");
  RamseyResult res;
  const bool hyp = ramsey_hypothesis_holds(g, inst);
  for (Color c = 1; c <= g.num_colors(); ++c) {
    Matching m = max_matching(g, c);
    res.nu_per_color.push_back(m.size());
    if (!res.found && m.size() >= inst.k[c - 1]) {
      res.found = true;
      res.color = c;
      m.edges.resize(inst.k[c - 1]);
      res.matching = std::move(m);
    }
  }
  if (!hyp) res.outcome = RamseyOutcome::hypothesis_unmet;
  else res.outcome = res.found ? RamseyOutcome::witness : RamseyOutcome::counterexample;
  return res;
}

}  // namespace monoham
