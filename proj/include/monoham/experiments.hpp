#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "monoham/graph.hpp"
#include "monoham/matching.hpp"
#include "monoham/transcript.hpp"

namespace monoham {

enum class Adversary { layered, random, greedy };
enum class TrialMode { hamilton, perfect_matching };

Adversary parse_adversary(std::string_view name);
TrialMode parse_mode(std::string_view name);
const char* adversary_name(Adversary a);
const char* mode_name(TrialMode m);

struct TrialConfig {
  std::size_t n = 1000;
  Color r = 2;
  /// Additive slack in the edge probability threshold.
  double c_thr = 3.0;
  double eps = 0.1;
  Adversary adversary = Adversary::random;
  std::vector<std::uint64_t> seeds;
  /// Parts of the reduced graph.
  std::size_t t = 20;
  /// 0 selects the default sparse-subgraph degree.
  std::size_t d0 = 0;
  /// 0 selects ceil(n / (4t)).
  std::size_t seg = 0;
  std::size_t retries = 3;
  TrialMode mode = TrialMode::hamilton;
  /// Edge probability; overrides the threshold formula when set.
  std::optional<double> p;
  /// Local-search rounds of the greedy adversary.
  std::size_t adversary_rounds = 100;
  /// Worker threads for run_suite; 0 reads MONOCHROME_THREADS, else hardware.
  std::size_t threads = 0;

  /// Throws InputError unless r >= 2, n >= 10, 0 < eps <= 0.3, t >= 1, and n
  /// is even in perfect-matching mode.
  void validate() const;
  double edge_probability() const;
};

struct PhaseTimes {
  double generate = 0.0;
  double color = 0.0;
  double partition = 0.0;
  double path = 0.0;
  double finish = 0.0;
  double total = 0.0;
};

struct TrialRecord {
  std::uint64_t seed = 0;
  bool success = false;
  /// Cycle length (n) or matching edge count.
  std::size_t size = 0;
  std::size_t best_mono = 0;
  Color best_color = kUncolored;
  double bound = 0.0;
  /// Edges of the structure outside the best colour.
  std::size_t off_color = 0;
  /// Milliseconds.
  PhaseTimes ms;
  /// Empty on success.
  std::string fail_phase;
  std::string detail;
  /// How the last phase finished (e.g. "split", "rotation_repair", "augment").
  std::string method;
  bool plan_certified = false;
  std::size_t path_vertices = 0;
  std::size_t path_off_color = 0;

  std::vector<Vertex> cycle;
  Matching matching;
  /// Replayable against the trial's coloured graph.
  Transcript transcript;

  bool meets_bound() const { return success && static_cast<double>(best_mono) >= bound - 1e-9; }

  /// Equality ignoring timings.
  friend bool operator==(const TrialRecord& a, const TrialRecord& b);
};

/// The coloured host graph of a trial, as the trial builds it.
ColoredGraph trial_graph(const TrialConfig& cfg, std::uint64_t seed);

/// Random graph, adversarial colouring, partition, almost-monochromatic path
/// in G[V'] capped at 2n/3 vertices, extension to a Hamilton cycle. Phase
/// failures are recorded, not thrown; invalid configurations throw.
TrialRecord run_hamilton_trial(const TrialConfig& cfg, std::uint64_t seed);

/// Matching M0 on the degree-1 vertices, almost-monochromatic path in
/// G[V' \ V(M0)], a greedy majority-colour matching along it, then a perfect
/// matching of the rest (Hamilton path of the remainder, else augmentation).
TrialRecord run_pm_trial(const TrialConfig& cfg, std::uint64_t seed);

TrialRecord run_trial(const TrialConfig& cfg, std::uint64_t seed);

struct Summary {
  std::size_t trials = 0;
  double success_rate = 0.0;
  double mean_best_mono = 0.0;
  std::size_t min_best_mono = 0;
  double bound_rate = 0.0;
};

Summary summarize(const std::vector<TrialRecord>& records);

struct SuiteResult {
  std::vector<TrialRecord> records;
  Summary summary;
};

/// One trial per seed, in parallel; records are in seed-list order.
SuiteResult run_suite(const TrialConfig& cfg);

/// Formats: "csv", "tsv", "summary". Columns:
/// seed,success,size,best_mono,bound,off_color,ms_total,fail_phase.
/// Throws InputError on an unknown format.
std::string emit_report(const std::vector<TrialRecord>& records, std::string_view format);

}  // namespace monoham
