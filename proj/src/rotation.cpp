#include "monoham/rotation.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <memory>
#include <numeric>

#include "monoham/path.hpp"

namespace monoham {

namespace {

std::uint64_t hash_sequence(const std::vector<Vertex>& s) {
  std::uint64_t h = 0x243f6a8885a308d3ULL;
  for (Vertex v : s) h = derive_seed(h, v);
  return h;
}

void apply_rotation(std::vector<Vertex>& seq, Vertex pivot) {
  auto it = std::find(seq.begin(), seq.end(), pivot);
  std::reverse(it + 1, seq.end());
}

}  // namespace

bool RotationState::contains(Vertex y) const {
  return std::binary_search(endpoints.begin(), endpoints.end(), y);
}

std::vector<RotationStep> RotationState::moves_to(Vertex y) const {
  auto it = std::lower_bound(endpoints.begin(), endpoints.end(), y);
  if (it == endpoints.end() || *it != y) throw InputError("vertex is not a reachable endpoint");
  std::uint32_t state = endpoint_state[static_cast<std::size_t>(it - endpoints.begin())];
  std::vector<RotationStep> out;
  while (state != 0) {
    const RotationStep& step = steps[state - 1];
    out.push_back(step);
    state = step.parent;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

std::vector<Vertex> RotationState::path_to(Vertex y) const {
  std::vector<Vertex> seq = path;
  for (const RotationStep& s : moves_to(y)) apply_rotation(seq, s.pivot);
  return seq;
}

Transcript RotationState::transcript_to(Vertex y) const {
  Transcript t;
  t.add(MoveKind::path, path);
  for (const RotationStep& s : moves_to(y)) t.add(MoveKind::rot, {s.tail, s.pivot, s.new_tail});
  return t;
}

RotationState rotation_closure(const ColoredGraph& g, std::span<const Vertex> path,
                               Vertex fixed_end, const ClosureOptions& opts) {
  if (path.empty() || !is_simple_path(g, path)) throw InputError("input is not a path of the graph");
  if (fixed_end != path.front() && fixed_end != path.back())
    throw InputError("fixed_end is not an endpoint of the path");
  RotationState st;
  st.fixed_end = fixed_end;
  st.path.assign(path.begin(), path.end());
  if (st.path.front() != fixed_end) std::reverse(st.path.begin(), st.path.end());
  const std::size_t n = g.num_vertices();
  const std::size_t len = st.path.size();

  std::vector<char> seen_end(n, 0);
  seen_end[st.path.back()] = 1;
  st.endpoints.push_back(st.path.back());
  st.endpoint_state.push_back(0);
  if (len < 3) return st;

  std::vector<int> pos(n, -1);
  std::unordered_set<std::uint64_t> seen_states{hash_sequence(st.path)};
  struct Item {
    std::uint32_t id;
    std::shared_ptr<const std::vector<Vertex>> seq;
  };
  std::deque<Item> queue;
  queue.push_back({0, std::make_shared<const std::vector<Vertex>>(st.path)});
  std::size_t work = 0;

  while (!queue.empty()) {
    Item item = std::move(queue.front());
    queue.pop_front();
    const std::vector<Vertex>& seq = *item.seq;
    for (std::size_t i = 0; i < len; ++i) pos[seq[i]] = static_cast<int>(i);
    const Vertex tail = seq.back();
    const Vertex pred = seq[len - 2];
    for (Vertex v : g.neighbors(tail)) {
      if (pos[v] < 0 || v == pred) continue;
      const auto i = static_cast<std::size_t>(pos[v]);
      const Vertex w = seq[i + 1];
      const bool fresh = !seen_end[w];
      if (!fresh && work >= opts.work_budget) {
        st.exact = false;
        continue;
      }
      auto child = std::make_shared<std::vector<Vertex>>(seq);
      std::reverse(child->begin() + static_cast<std::ptrdiff_t>(i + 1), child->end());
      work += len;
      if (!seen_states.insert(hash_sequence(*child)).second) continue;
      st.steps.push_back({tail, v, w, item.id});
      const auto id = static_cast<std::uint32_t>(st.steps.size());
      if (fresh) {
        seen_end[w] = 1;
        st.endpoints.push_back(w);
        st.endpoint_state.push_back(id);
      }
      queue.push_back({id, std::move(child)});
    }
    for (Vertex v : seq) pos[v] = -1;
  }

  std::vector<std::size_t> order(st.endpoints.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return st.endpoints[a] < st.endpoints[b]; });
  std::vector<Vertex> ends;
  std::vector<std::uint32_t> states;
  for (std::size_t k : order) {
    ends.push_back(st.endpoints[k]);
    states.push_back(st.endpoint_state[k]);
  }
  st.endpoints = std::move(ends);
  st.endpoint_state = std::move(states);
  return st;
}

std::vector<Vertex> external_neighborhood(const ColoredGraph& g, std::span<const Vertex> set) {
  std::vector<char> in(g.num_vertices(), 0);
  for (Vertex v : set) in[v] = 1;
  std::vector<char> hit(g.num_vertices(), 0);
  std::vector<Vertex> out;
  for (Vertex v : set)
    for (Vertex u : g.neighbors(v))
      if (!in[u] && !hit[u]) {
        hit[u] = 1;
        out.push_back(u);
      }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Vertex> closure_maximal_path(const ColoredGraph& g, std::vector<Vertex> path,
                                         Vertex fixed_end, const ClosureOptions& opts) {
  std::vector<char> on(g.num_vertices(), 0);
  for (;;) {
    // Plain extension first; closures are only needed once the end is stuck.
    std::fill(on.begin(), on.end(), 0);
    for (Vertex v : path) on[v] = 1;
    for (bool step = !path.empty(); step;) {
      step = false;
      for (Vertex x : g.neighbors(path.back()))
        if (!on[x]) {
          on[x] = 1;
          path.push_back(x);
          step = true;
          break;
        }
    }
    RotationState st = rotation_closure(g, path, fixed_end, opts);
    std::fill(on.begin(), on.end(), 0);
    for (Vertex v : st.path) on[v] = 1;
    bool grown = false;
    for (Vertex y : st.endpoints) {
      for (Vertex x : g.neighbors(y)) {
        if (on[x]) continue;
        path = st.path_to(y);
        path.push_back(x);
        grown = true;
        break;
      }
      if (grown) break;
    }
    if (!grown) return st.path;
  }
}

namespace {

class Engine {
 public:
  Engine(AdjacencyLists work, const AdjacencyLists* host, const EdgeSet* protect,
         const EngineOptions& opts)
      : adj_(std::move(work)),
        host_(host),
        protect_(protect && !protect->empty() ? protect : nullptr),
        opts_(opts),
        n_(adj_.size()),
        retired_(n_, 0),
        pos_(n_, -1),
        free_deg_(n_, 0),
        host_free_(host ? n_ : 0, 0),
        spos_(n_, -1),
        end_mark_(n_, 0),
        host_mark_(n_, 0),
        rng_(derive_seed(opts.seed, 0x726f74)) {
    for (Vertex v = 0; v < n_; ++v) free_deg_[v] = static_cast<std::uint32_t>(adj_[v].size());
    if (host_)
      for (Vertex v = 0; v < n_; ++v) host_free_[v] = static_cast<std::uint32_t>((*host_)[v].size());
    target_ = opts_.goal == EngineGoal::cap ? std::min(opts_.cap, n_) : n_;
    max_boosters_ = opts_.max_boosters ? opts_.max_boosters : n_;
  }

  EngineResult run(std::span<const Vertex> initial) {
    if (n_ == 0) return std::move(res_);
    if (initial.empty()) {
      const Vertex start = pick_start();
      res_.transcript.add(MoveKind::start, {start});
      add_vertex(start);
    } else {
      res_.transcript.add(MoveKind::path, {initial.begin(), initial.end()});
      for (Vertex v : initial) add_vertex(v);
    }

    for (;;) {
      const std::size_t len = seq_.size();
      if (opts_.goal != EngineGoal::cycle && len >= target_) {
        res_.success = true;
        break;
      }
      if (opts_.goal == EngineGoal::cycle && len == n_ && n_ >= 3 && adjacent(seq_.back(), seq_.front())) {
        res_.transcript.add(MoveKind::close);
        res_.closed = true;
        res_.success = true;
        break;
      }
      if (len < target_) {
        Vertex v = best_free(seq_.back());
        if (v != kNoVertex) {
          extend(v);
          continue;
        }
        v = best_free(seq_.front());
        if (v != kNoVertex) {
          reverse_path();
          extend(v);
          continue;
        }
      }
      ++res_.searches;
      if (search()) continue;
      if (opts_.goal != EngineGoal::cycle && retire()) continue;
      break;
    }
    if (best_.size() > seq_.size()) seq_ = best_;
    if (any_retired_) {
      // Dropped vertices are not expressible as moves; log the result only.
      res_.transcript = Transcript();
      res_.transcript.add(MoveKind::path, seq_);
    }
    res_.path = seq_;
    return std::move(res_);
  }

 private:
  enum class Hit { none, extend, close, boost_extend, boost_close };

  // A cycle must pass every vertex, so start at a minimum-degree one. Other
  // goals start at a minimum-degree vertex of the largest component.
  Vertex pick_start() const {
    std::vector<std::uint32_t> comp(n_, 0);
    std::vector<std::size_t> sizes{0};
    if (opts_.goal != EngineGoal::cycle) {
      std::vector<Vertex> stack;
      for (Vertex r = 0; r < n_; ++r) {
        if (comp[r]) continue;
        const auto id = static_cast<std::uint32_t>(sizes.size());
        sizes.push_back(0);
        comp[r] = id;
        stack.push_back(r);
        while (!stack.empty()) {
          const Vertex v = stack.back();
          stack.pop_back();
          ++sizes[id];
          for (Vertex y : adj_[v])
            if (!comp[y]) {
              comp[y] = id;
              stack.push_back(y);
            }
        }
      }
    }
    const auto big = static_cast<std::uint32_t>(std::max_element(sizes.begin(), sizes.end()) - sizes.begin());
    Vertex start = kNoVertex;
    for (Vertex v = 0; v < n_; ++v)
      if (comp[v] == big && (start == kNoVertex || adj_[v].size() < adj_[start].size())) start = v;
    return start;
  }

  struct Node {
    int parent;
    Vertex pivot;
    /// The chord to the pivot is a host edge.
    bool host;
    /// Some chord on the chain is a host edge.
    bool used;
  };

  struct Found {
    int node = -1;
    Hit hit = Hit::none;
    Vertex extra = kNoVertex;
  };

  bool adjacent(Vertex a, Vertex b) const {
    return std::binary_search(adj_[a].begin(), adj_[a].end(), b);
  }
  bool host_adjacent(Vertex a, Vertex b) const {
    return host_ && std::binary_search((*host_)[a].begin(), (*host_)[a].end(), b);
  }
  bool may_cut(Vertex a, Vertex b, bool allow_protected) const {
    return allow_protected || !protect_ || !protect_->contains(a, b);
  }

  void add_vertex(Vertex v) {
    pos_[v] = static_cast<int>(seq_.size());
    seq_.push_back(v);
    for (Vertex y : adj_[v]) --free_deg_[y];
    if (host_)
      for (Vertex y : (*host_)[v]) --host_free_[y];
  }

  bool is_free(Vertex y) const { return pos_[y] < 0 && !retired_[y]; }

  // Unvisited neighbour with the fewest unvisited neighbours. Outside cycle
  // mode, dead ends are taken only as a last resort.
  Vertex best_free(Vertex u) const {
    const bool avoid_dead = opts_.goal != EngineGoal::cycle;
    Vertex best = kNoVertex;
    auto rank = [&](Vertex y) {
      return avoid_dead && free_deg_[y] == 0 ? std::numeric_limits<std::uint32_t>::max() : free_deg_[y];
    };
    for (Vertex y : adj_[u]) {
      if (!is_free(y)) continue;
      if (best == kNoVertex || rank(y) < rank(best)) best = y;
    }
    return best;
  }

  Vertex best_host_free(Vertex u) const {
    Vertex best = kNoVertex;
    for (Vertex y : (*host_)[u]) {
      if (!is_free(y)) continue;
      if (best == kNoVertex || host_free_[y] < host_free_[best]) best = y;
    }
    return best;
  }

  void extend(Vertex v) {
    res_.transcript.add(MoveKind::ext, {v});
    add_vertex(v);
    ++res_.extensions;
  }

  void reverse_path() {
    std::reverse(seq_.begin(), seq_.end());
    for (std::size_t i = 0; i < seq_.size(); ++i) pos_[seq_[i]] = static_cast<int>(i);
    res_.transcript.add(MoveKind::rev);
  }

  void rotate(Vertex pivot) {
    const Vertex tail = seq_.back();
    const auto i = static_cast<std::size_t>(pos_[pivot]);
    const Vertex w = seq_[i + 1];
    std::reverse(seq_.begin() + static_cast<std::ptrdiff_t>(i + 1), seq_.end());
    for (std::size_t j = i + 1; j < seq_.size(); ++j) pos_[seq_[j]] = static_cast<int>(j);
    res_.transcript.add(MoveKind::rot, {tail, pivot, w});
    ++res_.rotations;
  }

  void add_booster(Vertex a, Vertex b) {
    adj_[a].insert(std::lower_bound(adj_[a].begin(), adj_[a].end(), b), b);
    adj_[b].insert(std::lower_bound(adj_[b].begin(), adj_[b].end(), a), a);
    if (is_free(b)) ++free_deg_[a];
    if (is_free(a)) ++free_deg_[b];
    res_.boosters.push_back({std::min(a, b), std::max(a, b), kUncolored});
    res_.transcript.add(MoveKind::boost, {a, b});
  }

  bool any_free_on_path() const {
    return std::any_of(seq_.begin(), seq_.end(), [&](Vertex v) { return free_deg_[v] > 0; });
  }

  // Current path is closed by the edge tail-head; reopen it at a vertex with
  // an unvisited neighbour.
  bool open_cycle(bool allow_protected) {
    const std::size_t len = seq_.size();
    if (free_deg_[seq_.front()] > 0) return true;  // the main loop extends at the head
    for (int pass = 0; pass < 2; ++pass) {
      const bool cut_any = allow_protected || pass == 1;
      const std::size_t offset = std::uniform_int_distribution<std::size_t>(1, len - 1)(rng_);
      for (std::size_t k = 0; k + 1 < len; ++k) {
        const std::size_t j = 1 + (offset - 1 + k) % (len - 1);
        if (free_deg_[seq_[j]] == 0 || !may_cut(seq_[j - 1], seq_[j], cut_any)) continue;
        const Vertex x = best_free(seq_[j]);
        res_.transcript.add(MoveKind::open, {seq_[j], x});
        std::vector<Vertex> next(seq_.rend() - static_cast<std::ptrdiff_t>(j), seq_.rend());
        next.insert(next.end(), seq_.rbegin(), seq_.rend() - static_cast<std::ptrdiff_t>(j));
        seq_ = std::move(next);
        for (std::size_t i = 0; i < seq_.size(); ++i) pos_[seq_[i]] = static_cast<int>(i);
        add_vertex(x);
        ++res_.opens;
        ++res_.extensions;
        return true;
      }
    }
    return false;
  }

  Hit classify(Vertex w, Vertex head, std::size_t len, bool use_host, bool can_open, Vertex& extra) const {
    if (len < target_ && free_deg_[w] > 0) return Hit::extend;
    const bool full_cycle = opts_.goal == EngineGoal::cycle && len == n_;
    const bool closing_helps = len >= 3 && (full_cycle || (len < target_ && can_open));
    if (closing_helps && adjacent(w, head)) return Hit::close;
    if (!use_host) return Hit::none;
    if (len < target_ && host_free_[w] > 0) {
      extra = best_host_free(w);
      return Hit::boost_extend;
    }
    if (closing_helps && host_adjacent(w, head)) return Hit::boost_close;
    return Hit::none;
  }

  // Breadth-first search over rotations of `root` with root[0] pinned.
  // Records every node (first arrival per endpoint and layer) and stops at
  // the first endpoint classified as useful. With `use_host`, a chain may use
  // one host chord missing from the working graph; that chord becomes the
  // booster, so such chains must end in a plain extension or closure.
  bool bfs(const std::vector<Vertex>& root, bool allow_protected, bool use_host, bool can_open,
           std::vector<Node>& nodes, Found& found) {
    nodes.clear();
    nodes.push_back({-1, kNoVertex, false, false});
    const std::size_t len = root.size();
    const Vertex head = root.front();
    ++epoch_;
    if (epoch_ == 0) {
      std::fill(end_mark_.begin(), end_mark_.end(), 0);
      std::fill(host_mark_.begin(), host_mark_.end(), 0);
      epoch_ = 1;
    }
    end_mark_[root.back()] = epoch_;
    host_mark_[root.back()] = epoch_;
    Vertex extra = kNoVertex;
    Hit h = classify(root.back(), head, len, use_host, can_open, extra);
    if (h != Hit::none) {
      found = {0, h, extra};
      return true;
    }
    if (len < 3) return false;

    struct Item {
      int id;
      std::shared_ptr<const std::vector<Vertex>> parent_seq;
      std::size_t cut;
      bool used;
    };
    std::deque<Item> queue;
    queue.push_back({0, nullptr, 0, false});
    while (!queue.empty()) {
      Item item = std::move(queue.front());
      queue.pop_front();
      std::shared_ptr<std::vector<Vertex>> seq;
      if (item.parent_seq) {
        seq = std::make_shared<std::vector<Vertex>>(*item.parent_seq);
        std::reverse(seq->begin() + static_cast<std::ptrdiff_t>(item.cut), seq->end());
      } else {
        seq = std::make_shared<std::vector<Vertex>>(root);
      }
      item.parent_seq.reset();
      work_ += 3 * len;
      if (work_ > opts_.work_budget) {
        res_.budget_exhausted = true;
        return false;
      }
      const std::vector<Vertex>& s = *seq;
      for (std::size_t i = 0; i < len; ++i) spos_[s[i]] = static_cast<int>(i);
      const Vertex tail = s.back();
      const Vertex pred = s[len - 2];
      bool hit = false;
      for (int layer = 0; layer < 2 && !hit; ++layer) {
        // Layer 1 walks host chords; only chains without one may take it.
        if (layer == 1 && (!use_host || item.used)) break;
        const auto& nb = layer == 0 ? adj_[tail] : (*host_)[tail];
        const bool used = item.used || layer == 1;
        auto& mark = used ? host_mark_ : end_mark_;
        const std::size_t deg = nb.size();
        const std::size_t offset = deg ? std::uniform_int_distribution<std::size_t>(0, deg - 1)(rng_) : 0;
        for (std::size_t k = 0; k < deg; ++k) {
          const Vertex v = nb[(offset + k) % deg];
          if (spos_[v] < 0 || v == pred) continue;
          if (layer == 1 && adjacent(tail, v)) continue;
          const auto i = static_cast<std::size_t>(spos_[v]);
          const Vertex w = s[i + 1];
          if (mark[w] == epoch_) continue;
          if (!may_cut(v, w, allow_protected)) continue;
          mark[w] = epoch_;
          nodes.push_back({item.id, v, layer == 1, used});
          const int id = static_cast<int>(nodes.size()) - 1;
          h = classify(w, head, len, use_host && !used, can_open, extra);
          if (h != Hit::none) {
            found = {id, h, extra};
            hit = true;
            break;
          }
          queue.push_back({id, seq, i + 1, used});
        }
      }
      for (Vertex v : s) spos_[v] = -1;
      if (hit) return true;
    }
    return false;
  }

  std::vector<std::pair<Vertex, bool>> chain(const std::vector<Node>& nodes, int id) const {
    std::vector<std::pair<Vertex, bool>> out;
    for (; id > 0; id = nodes[static_cast<std::size_t>(id)].parent)
      out.emplace_back(nodes[static_cast<std::size_t>(id)].pivot, nodes[static_cast<std::size_t>(id)].host);
    std::reverse(out.begin(), out.end());
    return out;
  }

  void apply_chain(const std::vector<std::pair<Vertex, bool>>& steps) {
    for (const auto& [pivot, host] : steps) {
      if (host) add_booster(seq_.back(), pivot);
      rotate(pivot);
    }
  }

  bool finish(const Found& f, bool allow_protected) {
    switch (f.hit) {
      case Hit::extend:
        return true;
      case Hit::boost_extend:
        add_booster(seq_.back(), f.extra);
        return true;
      case Hit::boost_close:
        add_booster(seq_.back(), seq_.front());
        [[fallthrough]];
      case Hit::close:
        if (opts_.goal == EngineGoal::cycle && seq_.size() == n_) return true;
        return open_cycle(allow_protected);
      case Hit::none:
        break;
    }
    return false;
  }

  bool boosters_left() const { return host_ && res_.boosters.size() < max_boosters_; }

  bool level1(bool allow_protected, bool use_host, bool can_open) {
    std::vector<Node> nodes;
    Found f;
    for (int side = 0; side < 2; ++side) {
      std::vector<Vertex> root = seq_;
      if (side == 1) std::reverse(root.begin(), root.end());
      if (bfs(root, allow_protected, use_host, can_open, nodes, f)) {
        if (side == 1) reverse_path();
        apply_chain(chain(nodes, f.node));
        return finish(f, allow_protected);
      }
      if (res_.budget_exhausted) return false;
    }
    return false;
  }

  bool level2(bool allow_protected, bool use_host, bool can_open) {
    if (seq_.size() < 4 || opts_.level2_tries == 0) return false;
    std::vector<Node> outer;
    std::vector<Node> inner;
    Found f;
    const std::size_t per_side = (opts_.level2_tries + 1) / 2;
    for (int side = 0; side < 2; ++side) {
      std::vector<Vertex> root = seq_;
      if (side == 1) std::reverse(root.begin(), root.end());
      // Collect the first level without a goal.
      if (bfs(root, allow_protected, false, false, outer, f)) {
        // Only reachable through a closing edge found without opening; let
        // level one handle it.
      }
      if (res_.budget_exhausted) return false;
      std::vector<int> ids(outer.size() > 1 ? outer.size() - 1 : 0);
      std::iota(ids.begin(), ids.end(), 1);
      std::shuffle(ids.begin(), ids.end(), rng_);
      if (ids.size() > per_side) ids.resize(per_side);
      for (int id : ids) {
        const auto first = chain(outer, id);
        std::vector<Vertex> py = root;
        for (const auto& step : first) apply_rotation(py, step.first);
        std::reverse(py.begin(), py.end());
        work_ += py.size() * (first.size() + 1);
        if (bfs(py, allow_protected, use_host, can_open, inner, f)) {
          if (side == 1) reverse_path();
          apply_chain(first);
          reverse_path();
          apply_chain(chain(inner, f.node));
          return finish(f, allow_protected);
        }
        if (res_.budget_exhausted) return false;
      }
    }
    return false;
  }

  // Drops the endpoint with fewer neighbours for good, so rotations can
  // restart from its predecessor. The longest path seen is kept.
  bool retire() {
    if (seq_.size() < 2) return false;
    if (seq_.size() > best_.size()) best_ = seq_;
    if (adj_[seq_.front()].size() < adj_[seq_.back()].size()) reverse_path();
    const Vertex v = seq_.back();
    seq_.pop_back();
    pos_[v] = -1;
    retired_[v] = 1;
    any_retired_ = true;
    return true;
  }

  bool search() {
    const bool can_open = any_free_on_path();
    const bool need_more = seq_.size() < target_;
    if (need_more && !can_open && !boosters_left()) return false;
    const int prot_passes = protect_ ? 2 : 1;
    for (int pass = 0; pass < prot_passes; ++pass) {
      const bool allow = pass == 1;
      if (level1(allow, false, can_open) || level2(allow, false, can_open)) return true;
      if (res_.budget_exhausted) return false;
      if (boosters_left()) {
        if (level1(allow, true, can_open) || level2(allow, true, can_open)) return true;
        if (res_.budget_exhausted) return false;
      }
    }
    return false;
  }

  AdjacencyLists adj_;
  const AdjacencyLists* host_;
  const EdgeSet* protect_;
  EngineOptions opts_;
  std::size_t n_;
  std::size_t target_ = 0;
  std::size_t max_boosters_ = 0;
  std::vector<Vertex> seq_;
  std::vector<Vertex> best_;
  std::vector<char> retired_;
  bool any_retired_ = false;
  std::vector<int> pos_;
  std::vector<std::uint32_t> free_deg_;
  std::vector<std::uint32_t> host_free_;
  std::vector<int> spos_;
  std::vector<std::uint32_t> end_mark_;
  std::vector<std::uint32_t> host_mark_;
  std::uint32_t epoch_ = 0;
  std::size_t work_ = 0;
  Rng rng_;
  EngineResult res_;
};

}  // namespace

EngineResult rotation_extension(AdjacencyLists work, const AdjacencyLists* host,
                                std::span<const Vertex> initial, const EdgeSet* protect,
                                const EngineOptions& opts) {
  for (auto& list : work) std::sort(list.begin(), list.end());
  Engine engine(std::move(work), host, protect, opts);
  return engine.run(initial);
}

PosaResult posa_longest_path(const ColoredGraph& g, std::uint64_t seed) {
  EngineOptions opts;
  opts.goal = EngineGoal::cycle;
  opts.seed = seed;
  EngineResult er = rotation_extension(g.adjacency_lists(), nullptr, {}, nullptr, opts);
  PosaResult out;
  out.vertices = std::move(er.path);
  out.transcript = std::move(er.transcript);
  out.hamilton_cycle = er.closed && is_hamilton_cycle(g, out.vertices);
  if (out.hamilton_cycle) out.transcript.add(MoveKind::cycle, out.vertices);
  return out;
}

}  // namespace monoham
