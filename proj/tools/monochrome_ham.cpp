#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include "monoham/coloring.hpp"
#include "monoham/experiments.hpp"
#include "monoham/hamiltonian.hpp"
#include "monoham/matching.hpp"
#include "monoham/oracles.hpp"
#include "monoham/rotation.hpp"

using namespace monoham;

namespace {

struct RunArgs {
  std::string mode = "hamilton";
  std::size_t n = 1000;
  unsigned r = 2;
  std::string adversary = "random";
  std::size_t seeds = 10;
  std::uint64_t first_seed = 0;
  double eps = 0.1;
  double c_thr = 3.0;
  std::size_t t = 20;
  std::size_t d0 = 0;
  std::size_t seg = 0;
  std::size_t retries = 3;
  std::size_t rounds = 100;
  std::size_t threads = 0;
  std::string out;
  std::string format = "csv";
  std::string transcript_dir;
};

int run(const RunArgs& a) {
  TrialConfig cfg;
  cfg.mode = parse_mode(a.mode);
  cfg.n = a.n;
  cfg.r = static_cast<Color>(a.r);
  cfg.adversary = parse_adversary(a.adversary);
  cfg.eps = a.eps;
  cfg.c_thr = a.c_thr;
  cfg.t = a.t;
  cfg.d0 = a.d0;
  cfg.seg = a.seg;
  cfg.retries = a.retries;
  cfg.adversary_rounds = a.rounds;
  cfg.threads = a.threads;
  for (std::size_t i = 0; i < a.seeds; ++i) cfg.seeds.push_back(a.first_seed + i);
  cfg.validate();

  SuiteResult res = run_suite(cfg);
  const std::string report = emit_report(res.records, a.format);
  if (a.out.empty()) {
    std::cout << report;
  } else {
    std::ofstream f(a.out);
    if (!f) throw InputError("cannot write " + a.out);
    f << report;
  }
  if (a.format != "summary") std::cerr << emit_report(res.records, "summary");

  if (!a.transcript_dir.empty()) {
    namespace fs = std::filesystem;
    fs::create_directories(a.transcript_dir);
    for (const TrialRecord& rec : res.records) {
      const std::string stem = (fs::path(a.transcript_dir) / ("seed" + std::to_string(rec.seed))).string();
      std::ofstream graph_file(stem + ".graph");
      write_graph(graph_file, trial_graph(cfg, rec.seed));
      std::ofstream(stem + ".transcript") << rec.transcript.to_text();
    }
  }
  return res.records.size() == cfg.seeds.size() ? 0 : 1;
}

int verify(const std::string& graph_path, const std::string& transcript_path) {
  std::ifstream gf(graph_path), tf(transcript_path);
  if (!gf) throw InputError("cannot read " + graph_path);
  if (!tf) throw InputError("cannot read " + transcript_path);
  ColoredGraph g = read_graph(gf);
  Transcript t = Transcript::parse(tf);
  if (t.to_text().empty()) {
    std::printf("empty transcript\n");
    return 1;
  }
  ReplayResult rp = replay(g, t);
  if (!rp.ok) {
    std::printf("invalid: move %zu: %s\n", rp.failed_move, rp.error.c_str());
    return 1;
  }
  if (!rp.cycle.empty())
    std::printf("ok: cycle of %zu vertices\n", rp.cycle.size());
  else if (!rp.matching.empty())
    std::printf("ok: matching of %zu edges\n", rp.matching.size());
  else
    std::printf("ok: path of %zu vertices\n", rp.path.size());
  return 0;
}

// Library routines against the exhaustive references on small graphs.
int oracle_suite(std::size_t count, std::uint64_t seed) {
  std::size_t bad_matching = 0, bad_rotation = 0, bad_expander = 0, bad_booster = 0, boosted = 0;
  for (std::uint64_t i = 0; i < count; ++i) {
    const std::size_t n = 4 + i % 8;
    const double p = 0.2 + 0.1 * static_cast<double>(i % 5);
    ColoredGraph g = gen_gnp({n, p, derive_seed(seed, i)});
    if (max_matching(g).size() != oracle::matching_number(g)) ++bad_matching;
    std::vector<Vertex> path = closure_maximal_path(g, {0}, 0);
    if (path.size() >= 2 && rotation_closure(g, path, 0).endpoints != oracle::rotation_ends(g, path))
      ++bad_rotation;
    const double k = static_cast<double>(n / 4);
    if (is_expander(g, k, 2, CheckMode::exact).holds != oracle::is_expander(g, k, 2)) ++bad_expander;
    if (oracle::is_connected(g) && !oracle::is_hamiltonian(g)) {
      ++boosted;
      if (boosters_of(g).boosters != oracle::boosters(g)) ++bad_booster;
    }
  }
  std::printf("matching number   %zu/%zu disagree\n", bad_matching, count);
  std::printf("rotation closure  %zu/%zu disagree\n", bad_rotation, count);
  std::printf("expansion         %zu/%zu disagree\n", bad_expander, count);
  std::printf("boosters          %zu/%zu disagree\n", bad_booster, boosted);
  return bad_matching + bad_rotation + bad_expander + bad_booster == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Almost-monochromatic Hamilton cycles and perfect matchings in coloured random graphs"};
  app.require_subcommand(1);

  RunArgs ra;
  auto* run_cmd = app.add_subcommand("run", "Run seeded trials and emit a report");
  run_cmd->add_option("--mode", ra.mode, "hamilton or perfect_matching")->capture_default_str();
  run_cmd->add_option("--n", ra.n, "Vertices")->capture_default_str();
  run_cmd->add_option("--r", ra.r, "Colours")->capture_default_str();
  run_cmd->add_option("--adversary", ra.adversary, "layered, random or greedy")->capture_default_str();
  run_cmd->add_option("--seeds", ra.seeds, "Number of seeds")->capture_default_str();
  run_cmd->add_option("--first-seed", ra.first_seed, "First seed")->capture_default_str();
  run_cmd->add_option("--eps", ra.eps)->capture_default_str();
  run_cmd->add_option("--c-thr", ra.c_thr, "Slack in the edge probability")->capture_default_str();
  run_cmd->add_option("--t", ra.t, "Parts of the reduced graph")->capture_default_str();
  run_cmd->add_option("--d0", ra.d0, "Sparse subgraph degree, 0 for default")->capture_default_str();
  run_cmd->add_option("--seg", ra.seg, "Stitch segment, 0 for default")->capture_default_str();
  run_cmd->add_option("--retries", ra.retries)->capture_default_str();
  run_cmd->add_option("--rounds", ra.rounds, "Greedy adversary rounds")->capture_default_str();
  run_cmd->add_option("--threads", ra.threads, "0 reads MONOCHROME_THREADS")->capture_default_str();
  run_cmd->add_option("--out", ra.out, "Report file (stdout when empty)");
  run_cmd->add_option("--format", ra.format, "csv, tsv or summary")->capture_default_str();
  run_cmd->add_option("--transcript-dir", ra.transcript_dir, "Write seedN.graph and seedN.transcript here");

  std::string graph_path, transcript_path;
  auto* verify_cmd = app.add_subcommand("verify", "Replay a transcript against a graph");
  verify_cmd->add_option("--graph", graph_path)->required();
  verify_cmd->add_option("--transcript", transcript_path)->required();

  std::size_t count = 300;
  std::uint64_t oseed = 0;
  auto* oracle_cmd = app.add_subcommand("oracle", "Compare against exhaustive references on small graphs");
  oracle_cmd->add_option("--count", count)->capture_default_str();
  oracle_cmd->add_option("--seed", oseed)->capture_default_str();

  CLI11_PARSE(app, argc, argv);
  try {
    if (*run_cmd) return run(ra);
    if (*verify_cmd) return verify(graph_path, transcript_path);
    return oracle_suite(count, oseed);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
}
