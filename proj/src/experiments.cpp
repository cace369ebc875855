#include "monoham/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <numeric>
#include <thread>

#include "monoham/coloring.hpp"
#include "monoham/extension.hpp"
#include "monoham/hamiltonian.hpp"
#include "monoham/partition.hpp"
#include "monoham/path.hpp"
#include "monoham/path_builder.hpp"
#include "monoham/rotation.hpp"

namespace monoham {

Adversary parse_adversary(std::string_view name) {
  if (name == "layered") return Adversary::layered;
  if (name == "random") return Adversary::random;
  if (name == "greedy") return Adversary::greedy;
  throw InputError("unknown adversary '" + std::string(name) + "'");
}

TrialMode parse_mode(std::string_view name) {
  if (name == "hamilton") return TrialMode::hamilton;
  if (name == "perfect_matching" || name == "pm") return TrialMode::perfect_matching;
  throw InputError("unknown mode '" + std::string(name) + "'");
}

const char* adversary_name(Adversary a) {
  switch (a) {
    case Adversary::layered: return "layered";
    case Adversary::random: return "random";
    case Adversary::greedy: return "greedy";
  }
  return "?";
}

const char* mode_name(TrialMode m) { return m == TrialMode::hamilton ? "hamilton" : "perfect_matching"; }

void TrialConfig::validate() const {
  if (r < 2) throw InputError("r must be at least 2");
  if (n < 10) throw InputError("n must be at least 10");
  if (!(eps > 0.0 && eps <= 0.3)) throw InputError("eps must lie in (0, 0.3]");
  if (t == 0) throw InputError("t must be positive");
  if (mode == TrialMode::perfect_matching && n % 2 != 0) throw InputError("perfect matching mode needs even n");
  if (p && !(*p >= 0.0 && *p <= 1.0)) throw InputError("p must lie in [0, 1]");
}

double TrialConfig::edge_probability() const {
  if (p) return *p;
  return mode == TrialMode::hamilton ? hamiltonicity_threshold(n, c_thr) : matching_threshold(n, c_thr);
}

bool operator==(const TrialRecord& a, const TrialRecord& b) {
  return a.seed == b.seed && a.success == b.success && a.size == b.size && a.best_mono == b.best_mono &&
         a.best_color == b.best_color && a.bound == b.bound && a.off_color == b.off_color &&
         a.fail_phase == b.fail_phase && a.detail == b.detail && a.method == b.method &&
         a.plan_certified == b.plan_certified && a.path_vertices == b.path_vertices &&
         a.path_off_color == b.path_off_color && a.cycle == b.cycle && a.matching.edges == b.matching.edges &&
         a.transcript.moves() == b.transcript.moves();
}

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

ColoredGraph color_graph(const TrialConfig& cfg, const ColoredGraph& g, std::uint64_t seed) {
  switch (cfg.adversary) {
    case Adversary::layered: return layered_extremal_coloring(g, cfg.r, seed);
    case Adversary::random: return random_coloring(g, cfg.r, seed);
    case Adversary::greedy: return greedy_min_adversary(g, cfg.r, seed, cfg.adversary_rounds).graph;
  }
  return random_coloring(g, cfg.r, seed);
}

// Almost-monochromatic path inside G[allowed], in parent labels.
PathSeq path_inside(const ColoredGraph& cg, const std::vector<Vertex>& allowed, const TrialConfig& cfg,
                    std::size_t cap, std::uint64_t seed, Color& color) {
  if (allowed.size() < 2) {
    color = 1;
    return make_path(cg, {allowed.begin(), allowed.end()}, Color{1});
  }
  const Subgraph sub = induced_subgraph(cg, allowed);
  PathBuilderConfig pc;
  pc.t = std::min(cfg.t, allowed.size());
  pc.seg = cfg.seg;
  pc.max_vertices = cap;
  pc.seed = seed;
  AlmostMonoResult amp = almost_mono_path(sub.graph, cfg.r, cfg.eps, pc);
  color = amp.color;
  return make_path(cg, sub.lift(amp.path.vertices), amp.color);
}

}  // namespace

ColoredGraph trial_graph(const TrialConfig& cfg, std::uint64_t seed) {
  cfg.validate();
  ColoredGraph g = gen_gnp({cfg.n, cfg.edge_probability(), derive_seed(seed, 1)});
  return color_graph(cfg, g, derive_seed(seed, 2));
}

TrialRecord run_hamilton_trial(const TrialConfig& cfg, std::uint64_t seed) {
  cfg.validate();
  if (cfg.mode != TrialMode::hamilton) throw InputError("configuration is not in hamilton mode");
  const std::size_t n = cfg.n;
  TrialRecord rec;
  rec.seed = seed;
  rec.bound = (2.0 / (cfg.r + 1.0) - 2.0 * cfg.eps) * static_cast<double>(n);
  const auto t0 = Clock::now();
  std::string phase = "generate";
  try {
    auto t = Clock::now();
    ColoredGraph g = gen_gnp({n, cfg.edge_probability(), derive_seed(seed, 1)});
    rec.ms.generate = ms_since(t);

    phase = "color";
    t = Clock::now();
    const ColoredGraph cg = color_graph(cfg, g, derive_seed(seed, 2));
    rec.ms.color = ms_since(t);

    phase = "partition";
    t = Clock::now();
    const PartitionPlan plan = prepare_partition(cg, cfg.eps, derive_seed(seed, 3));
    rec.plan_certified = plan.certified;
    rec.ms.partition = ms_since(t);

    phase = "path";
    t = Clock::now();
    Color color = 1;
    const PathSeq path = path_inside(cg, plan.v_prime, cfg, 2 * n / 3, derive_seed(seed, 4), color);
    rec.path_vertices = path.num_vertices();
    rec.path_off_color = path.off_color_edges.size();
    rec.ms.path = ms_since(t);

    phase = "extend";
    t = Clock::now();
    ExtensionOptions eo;
    eo.retries = cfg.retries;
    eo.d0 = cfg.d0;
    eo.seed = derive_seed(seed, 5);
    ExtensionResult ext = extend_to_hamilton(cg, plan, path, eo);
    rec.ms.finish = ms_since(t);
    rec.method = extension_method_name(ext.method);
    if (!ext.success || !is_hamilton_cycle(cg, ext.cycle)) {
      rec.fail_phase = "extend";
      rec.detail = std::string(extension_failure_name(ext.failure)) + ": " + ext.detail;
    } else {
      rec.success = true;
      rec.cycle = std::move(ext.cycle);
      rec.size = rec.cycle.size();
      auto [c, count] = best_color(cg, rec.cycle, true);
      rec.best_color = c;
      rec.best_mono = count;
      rec.off_color = rec.size - count;
      rec.transcript = std::move(ext.transcript);
    }
  } catch (const std::exception& e) {
    rec.success = false;
    rec.fail_phase = phase;
    rec.detail = e.what();
  }
  rec.ms.total = ms_since(t0);
  return rec;
}

TrialRecord run_pm_trial(const TrialConfig& cfg, std::uint64_t seed) {
  cfg.validate();
  if (cfg.mode != TrialMode::perfect_matching) throw InputError("configuration is not in perfect matching mode");
  const std::size_t n = cfg.n;
  TrialRecord rec;
  rec.seed = seed;
  rec.bound = (1.0 / (cfg.r + 1.0) - cfg.eps) * static_cast<double>(n);
  const auto t0 = Clock::now();
  std::string phase = "generate";
  try {
    auto t = Clock::now();
    ColoredGraph g = gen_gnp({n, cfg.edge_probability(), derive_seed(seed, 1)});
    rec.ms.generate = ms_since(t);

    phase = "color";
    t = Clock::now();
    const ColoredGraph cg = color_graph(cfg, g, derive_seed(seed, 2));
    rec.ms.color = ms_since(t);

    phase = "m0";
    std::vector<Vertex> mate(n, kNoVertex);
    for (Vertex v = 0; v < n; ++v) {
      if (cg.degree(v) == 0) throw PreconditionError("isolated vertex " + std::to_string(v));
      if (cg.degree(v) != 1) continue;
      const Vertex u = cg.neighbors(v)[0];
      if (mate[v] == u) continue;
      if (mate[v] != kNoVertex || mate[u] != kNoVertex)
        throw PreconditionError("edges at degree-1 vertices do not form a matching");
      mate[v] = u;
      mate[u] = v;
    }

    phase = "partition";
    t = Clock::now();
    const PartitionPlan plan = prepare_partition(cg, cfg.eps, derive_seed(seed, 3));
    rec.plan_certified = plan.certified;
    rec.ms.partition = ms_since(t);

    phase = "path";
    t = Clock::now();
    std::vector<Vertex> allowed;
    for (Vertex v : plan.v_prime)
      if (mate[v] == kNoVertex) allowed.push_back(v);
    Color color = 1;
    const PathSeq path = path_inside(cg, allowed, cfg, 2 * n / 3, derive_seed(seed, 4), color);
    rec.path_vertices = path.num_vertices();
    rec.path_off_color = path.off_color_edges.size();
    // Greedy matching of majority-colour path edges.
    for (std::size_t i = 0; i + 1 < path.vertices.size(); ++i) {
      const Vertex a = path.vertices[i], b = path.vertices[i + 1];
      if (mate[a] == kNoVertex && mate[b] == kNoVertex && cg.color(a, b) == color) {
        mate[a] = b;
        mate[b] = a;
      }
    }
    rec.ms.path = ms_since(t);

    phase = "complete";
    t = Clock::now();
    std::vector<Vertex> rest;
    for (Vertex v = 0; v < n; ++v)
      if (mate[v] == kNoVertex) rest.push_back(v);
    bool done = rest.empty();
    rec.method = "empty";
    if (!done && rest.size() >= 4) {
      const std::size_t d0 = cfg.d0 ? cfg.d0 : default_d0(n, cfg.eps);
      HamiltonOptions ho;
      ho.retries = 0;
      HamiltonResult hr = hamilton_in_subset(cg, rest, d0, derive_seed(seed, 5), ho);
      if (hr.success) {
        // Of the two perfect matchings along the even cycle, keep the one
        // with more edges of the majority colour.
        const auto& c = hr.cycle;
        std::size_t hits[2] = {0, 0};
        for (std::size_t i = 0; i < c.size(); ++i)
          if (cg.color(c[i], c[(i + 1) % c.size()]) == color) ++hits[i % 2];
        const std::size_t parity = hits[1] > hits[0] ? 1 : 0;
        for (std::size_t i = parity; i < c.size(); i += 2) {
          const Vertex a = c[i], b = c[(i + 1) % c.size()];
          mate[a] = b;
          mate[b] = a;
        }
        done = true;
        rec.method = "hamilton_path";
      }
    }
    if (!done) {
      const Subgraph sub = induced_subgraph(cg, rest);
      Matching inner = max_matching(sub.graph);
      for (const Edge& e : inner.edges) {
        const Vertex a = sub.parent(e.u), b = sub.parent(e.v);
        mate[a] = b;
        mate[b] = a;
      }
      rec.method = "matching";
      if (2 * inner.size() != rest.size()) {
        Matching m = augment_matching(cg, matching_from_mates(cg, mate));
        mate = mates_of(m, n);
        rec.method = "augment";
      }
    }
    rec.ms.finish = ms_since(t);

    Matching pm = matching_from_mates(cg, mate);
    if (2 * pm.size() != n || !is_matching(cg, pm)) {
      rec.fail_phase = "complete";
      rec.detail = "maximum matching has " + std::to_string(pm.size()) + " edges";
    } else {
      rec.success = true;
      rec.size = pm.size();
      std::vector<std::size_t> per(cg.num_colors() + 1, 0);
      for (const Edge& e : pm.edges) ++per[cg.color(e.u, e.v)];
      for (Color c = 1; c <= cg.num_colors(); ++c)
        if (per[c] > rec.best_mono) {
          rec.best_mono = per[c];
          rec.best_color = c;
        }
      rec.off_color = rec.size - rec.best_mono;
      for (const Edge& e : pm.edges) rec.transcript.add(MoveKind::match, {e.u, e.v});
      rec.matching = std::move(pm);
    }
  } catch (const std::exception& e) {
    rec.success = false;
    rec.fail_phase = phase;
    rec.detail = e.what();
  }
  rec.ms.total = ms_since(t0);
  return rec;
}

TrialRecord run_trial(const TrialConfig& cfg, std::uint64_t seed) {
  return cfg.mode == TrialMode::hamilton ? run_hamilton_trial(cfg, seed) : run_pm_trial(cfg, seed);
}

Summary summarize(const std::vector<TrialRecord>& records) {
  Summary s;
  s.trials = records.size();
  if (records.empty()) return s;
  std::size_t ok = 0, met = 0, sum = 0;
  s.min_best_mono = records.front().best_mono;
  for (const TrialRecord& r : records) {
    ok += r.success;
    met += r.meets_bound();
    sum += r.best_mono;
    s.min_best_mono = std::min(s.min_best_mono, r.best_mono);
  }
  const auto k = static_cast<double>(records.size());
  s.success_rate = static_cast<double>(ok) / k;
  s.bound_rate = static_cast<double>(met) / k;
  s.mean_best_mono = static_cast<double>(sum) / k;
  return s;
}

SuiteResult run_suite(const TrialConfig& cfg) {
  cfg.validate();
  SuiteResult out;
  out.records.resize(cfg.seeds.size());
  std::size_t threads = cfg.threads;
  if (threads == 0) {
    if (const char* env = std::getenv("MONOCHROME_THREADS")) threads = std::strtoul(env, nullptr, 10);
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  }
  threads = std::min(threads, std::max<std::size_t>(cfg.seeds.size(), 1));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < cfg.seeds.size(); i = next++) out.records[i] = run_trial(cfg, cfg.seeds[i]);
  };
  std::vector<std::thread> pool;
  for (std::size_t i = 1; i < threads; ++i) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  out.summary = summarize(out.records);
  return out;
}

}  // namespace monoham
