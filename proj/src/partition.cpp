#include "monoham/partition.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace monoham {

namespace {

class Draw {
 public:
  Draw(const ColoredGraph& g, const std::vector<char>& closure, std::vector<std::vector<Vertex>> blobs,
       double floor, const std::vector<char>& low, Rng& rng)
      : g_(g),
        closure_(closure),
        low_(low),
        blobs_(std::move(blobs)),
        floor_(floor),
        rng_(rng),
        n_(g.num_vertices()),
        blob_of_(n_, 0),
        pick_(blobs_.size()),
        in1_(n_, 0),
        in2_(n_, 0),
        cnt1_(n_, 0),
        cnt2_(n_, 0),
        bad_pos_(n_, -1) {
    for (std::size_t b = 0; b < blobs_.size(); ++b)
      for (Vertex v : blobs_[b]) blob_of_[v] = b;
    for (Vertex v = 0; v < n_; ++v) in1_[v] = closure_[v];
    for (std::size_t b = 0; b < blobs_.size(); ++b) draw_blob(b, false);
    for (Vertex v = 0; v < n_; ++v)
      for (Vertex y : g_.neighbors(v)) {
        cnt1_[v] += in1_[y];
        cnt2_[v] += in2_[y];
      }
    for (Vertex v = 0; v < n_; ++v) refresh(v);
  }

  std::size_t violations() const { return bad_.size(); }

  void resample_step() {
    const Vertex v = bad_[std::uniform_int_distribution<std::size_t>(0, bad_.size() - 1)(rng_)];
    std::vector<std::size_t> touched{blob_of_[v]};
    for (Vertex y : g_.neighbors(v)) touched.push_back(blob_of_[y]);
    std::sort(touched.begin(), touched.end());
    touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
    for (std::size_t b : touched) draw_blob(b, true);
  }

  void export_to(PartitionPlan& plan) const {
    plan.u1.clear();
    plan.u2.clear();
    plan.v_star.clear();
    plan.v_prime.clear();
    for (Vertex v = 0; v < n_; ++v) {
      if (in1_[v]) plan.u1.push_back(v);
      if (in2_[v]) plan.u2.push_back(v);
      (in1_[v] || in2_[v] ? plan.v_star : plan.v_prime).push_back(v);
    }
    plan.unsatisfied = bad_;
    std::sort(plan.unsatisfied.begin(), plan.unsatisfied.end());
  }

 private:
  void set_membership(Vertex x, bool one, bool two, bool update) {
    const char a = static_cast<char>(one || closure_[x]);
    const char b = static_cast<char>(two && !closure_[x]);
    if (a == in1_[x] && b == in2_[x]) return;
    if (update)
      for (Vertex y : g_.neighbors(x)) {
        cnt1_[y] += a - in1_[x];
        cnt2_[y] += b - in2_[x];
      }
    in1_[x] = a;
    in2_[x] = b;
    if (update)
      for (Vertex y : g_.neighbors(x)) refresh(y);
  }

  void draw_blob(std::size_t b, bool update) {
    const auto& blob = blobs_[b];
    auto& [old1, old2] = pick_[b];
    if (update) {
      set_membership(old1, false, false, true);
      set_membership(old2, false, false, true);
    }
    std::uniform_int_distribution<std::size_t> d(0, blob.size() - 1);
    const std::size_t i = d(rng_);
    std::size_t j = d(rng_);
    while (blob.size() > 1 && j == i) j = d(rng_);
    old1 = blob[i];
    old2 = blob[j];
    if (blob.size() == 1) {
      // A singleton blob feeds U1 only.
      set_membership(old1, true, false, update);
      return;
    }
    set_membership(old1, true, false, update);
    set_membership(old2, false, true, update);
  }

  void refresh(Vertex v) {
    const bool bad = !low_[v] && (cnt1_[v] < floor_ || cnt2_[v] < floor_);
    if (bad && bad_pos_[v] < 0) {
      bad_pos_[v] = static_cast<long>(bad_.size());
      bad_.push_back(v);
    } else if (!bad && bad_pos_[v] >= 0) {
      const auto at = static_cast<std::size_t>(bad_pos_[v]);
      bad_[at] = bad_.back();
      bad_pos_[bad_[at]] = static_cast<long>(at);
      bad_.pop_back();
      bad_pos_[v] = -1;
    }
  }

  const ColoredGraph& g_;
  const std::vector<char>& closure_;
  const std::vector<char>& low_;
  std::vector<std::vector<Vertex>> blobs_;
  double floor_;
  Rng& rng_;
  std::size_t n_;
  std::vector<std::size_t> blob_of_;
  std::vector<std::pair<Vertex, Vertex>> pick_;
  std::vector<char> in1_, in2_;
  std::vector<int> cnt1_, cnt2_;
  std::vector<long> bad_pos_;
  std::vector<Vertex> bad_;
};

}  // namespace

PartitionPlan prepare_partition(const ColoredGraph& g, double eps, std::uint64_t seed,
                                const PartitionOptions& opts) {
  if (!(eps > 0.0 && eps < 0.5)) throw InputError("eps must lie in (0, 1/2)");
  const std::size_t n = g.num_vertices();
  const double ln = std::log(static_cast<double>(std::max<std::size_t>(n, 2)));
  PartitionPlan plan;
  plan.eps = eps;
  const auto inv = static_cast<std::size_t>(std::ceil(1.0 / eps - 1e-12));
  plan.eps_prime = 1.0 / static_cast<double>(inv + 1);
  plan.blob_size = inv + 1;
  plan.d_guarantee = eps * ln / 100.0;
  plan.low_degree_threshold = opts.low_degree_threshold.value_or(ln / 10.0);
  if (n == 0) {
    plan.certified = true;
    return plan;
  }

  std::vector<char> low(n, 0), closure(n, 0);
  for (Vertex v = 0; v < n; ++v) {
    if (static_cast<double>(g.degree(v)) < plan.low_degree_threshold) {
      low[v] = closure[v] = 1;
      plan.low_degree.push_back(v);
      for (Vertex y : g.neighbors(v)) closure[y] = 1;
    }
    if (g.degree(v) == 0) plan.isolated.push_back(v);
  }
  for (Vertex v = 0; v < n; ++v)
    if (closure[v]) plan.low_closure.push_back(v);

  Rng rng(derive_seed(seed, 0x706172));
  std::size_t best = static_cast<std::size_t>(-1);
  for (std::size_t restart = 0; restart < std::max<std::size_t>(opts.restarts, 1); ++restart) {
    std::vector<Vertex> order(n);
    std::iota(order.begin(), order.end(), Vertex{0});
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<std::vector<Vertex>> blobs;
    for (std::size_t i = 0; i < n; i += plan.blob_size)
      blobs.emplace_back(order.begin() + static_cast<std::ptrdiff_t>(i),
                         order.begin() + static_cast<std::ptrdiff_t>(std::min(n, i + plan.blob_size)));
    if (blobs.size() > 1 && blobs.back().size() < 2) {
      blobs[blobs.size() - 2].push_back(blobs.back().front());
      blobs.pop_back();
    }
    Draw draw(g, closure, std::move(blobs), plan.d_guarantee, low, rng);
    std::size_t steps = 0;
    while (draw.violations() > 0 && steps < opts.blob_resamples) {
      draw.resample_step();
      ++steps;
    }
    plan.resamples_used += steps;
    plan.restarts_used = restart + 1;
    if (draw.violations() < best) {
      best = draw.violations();
      draw.export_to(plan);
    }
    if (best == 0) break;
  }
  plan.certified = verify_plan(g, plan).ok();
  return plan;
}

PlanCheck verify_plan(const ColoredGraph& g, const PartitionPlan& plan) {
  const std::size_t n = g.num_vertices();
  PlanCheck c;
  std::vector<char> in1(n, 0), in2(n, 0), star(n, 0), prime(n, 0);
  c.disjoint_cover = true;
  auto mark = [&](const std::vector<Vertex>& s, std::vector<char>& m) {
    for (Vertex v : s) {
      if (v >= n || m[v]) {
        c.disjoint_cover = false;
        continue;
      }
      m[v] = 1;
    }
  };
  mark(plan.u1, in1);
  mark(plan.u2, in2);
  mark(plan.v_star, star);
  mark(plan.v_prime, prime);
  for (Vertex v = 0; v < n && c.disjoint_cover; ++v) {
    if (in1[v] && in2[v]) c.disjoint_cover = false;
    if (star[v] != (in1[v] || in2[v])) c.disjoint_cover = false;
    if (star[v] == prime[v]) c.disjoint_cover = false;
  }

  for (Vertex v = 0; v < n; ++v) {
    if (static_cast<double>(g.degree(v)) < plan.low_degree_threshold) {
      bool ok = in1[v];
      for (Vertex y : g.neighbors(v)) ok = ok && in1[y];
      if (!ok) c.closure_violations.push_back(v);
      continue;
    }
    std::size_t a = 0, b = 0;
    for (Vertex y : g.neighbors(v)) {
      a += in1[y];
      b += in2[y];
    }
    if (static_cast<double>(a) < plan.d_guarantee || static_cast<double>(b) < plan.d_guarantee)
      c.floor_violations.push_back(v);
  }
  c.degree_floor = c.floor_violations.empty();
  c.low_closure = c.closure_violations.empty();
  c.size_bound = static_cast<double>(plan.v_star.size()) <= 2.0 * plan.eps * static_cast<double>(n) + 1e-9;
  return c;
}

}  // namespace monoham
