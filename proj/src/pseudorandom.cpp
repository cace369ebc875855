#include "monoham/pseudorandom.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>

namespace monoham {

namespace {

std::size_t min_side(std::size_t n, double gamma) {
  // Guard against 0.3 * 10 evaluating to 3.0000000000000004.
  auto s = static_cast<std::size_t>(std::ceil(gamma * static_cast<double>(n) - 1e-9));
  return std::max<std::size_t>(s, 1);
}

bool violates(double density, double p, double gamma) {
  return std::abs(density - p) > gamma * p + 1e-12;
}

}  // namespace

double pair_density(const ColoredGraph& g, std::span<const Vertex> u, std::span<const Vertex> w) {
  if (u.empty() || w.empty()) return 0.0;
  std::vector<char> in_w(g.num_vertices(), 0);
  for (Vertex x : w) in_w[x] = 1;
  std::size_t count = 0;
  for (Vertex x : u)
    for (Vertex y : g.neighbors(x)) count += in_w[y];
  return static_cast<double>(count) / (static_cast<double>(u.size()) * static_cast<double>(w.size()));
}

PseudorandomVerdict check_pseudorandom(const ColoredGraph& g, double gamma, double p,
                                       CheckMode mode, const PseudorandomOptions& opts) {
  if (!(gamma > 0.0 && gamma <= 1.0)) throw InputError("gamma must lie in (0,1]");
  if (!(p > 0.0 && p <= 1.0)) throw InputError("p must lie in (0,1]");
  const std::size_t n = g.num_vertices();
  PseudorandomVerdict verdict;
  verdict.gamma = gamma;
  verdict.p = p;
  verdict.mode = mode;
  if (mode == CheckMode::exact && n > opts.exact_cap)
    throw CapacityError("exact pseudorandomness check limited to n <= " + std::to_string(opts.exact_cap));
  const std::size_t s = min_side(n, gamma);
  if (2 * s > n) return verdict;  // no admissible pair

  if (mode == CheckMode::exact) {
    std::vector<std::uint32_t> nbr_mask(n, 0);
    for (const Edge& e : g.edges()) {
      nbr_mask[e.u] |= 1u << e.v;
      nbr_mask[e.v] |= 1u << e.u;
    }
    std::vector<std::pair<int, Vertex>> outside;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
      const auto us = static_cast<std::size_t>(std::popcount(mask));
      if (us < s || n - us < s) continue;
      outside.clear();
      for (Vertex v = 0; v < n; ++v)
        if (!(mask >> v & 1u)) outside.emplace_back(std::popcount(nbr_mask[v] & mask), v);
      std::sort(outside.begin(), outside.end());
      std::size_t lo = 0;
      std::size_t hi = 0;
      for (std::size_t k = 1; k <= outside.size(); ++k) {
        lo += static_cast<std::size_t>(outside[k - 1].first);
        hi += static_cast<std::size_t>(outside[outside.size() - k].first);
        if (k < s) continue;
        verdict.pairs_examined += 2;
        const double denom = static_cast<double>(us) * static_cast<double>(k);
        const double dlo = static_cast<double>(lo) / denom;
        const double dhi = static_cast<double>(hi) / denom;
        bool low_bad = violates(dlo, p, gamma);
        if (low_bad || violates(dhi, p, gamma)) {
          verdict.holds = false;
          for (Vertex v = 0; v < n; ++v)
            if (mask >> v & 1u) verdict.witness_u.push_back(v);
          for (std::size_t j = 0; j < k; ++j)
            verdict.witness_w.push_back(low_bad ? outside[j].second
                                                : outside[outside.size() - 1 - j].second);
          std::sort(verdict.witness_w.begin(), verdict.witness_w.end());
          verdict.witness_density = low_bad ? dlo : dhi;
          return verdict;
        }
      }
    }
    return verdict;
  }

  Rng rng(opts.seed);
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), Vertex{0});
  for (std::size_t t = 0; t < opts.samples; ++t) {
    // Partial Fisher-Yates for the first 2s positions.
    for (std::size_t i = 0; i < 2 * s; ++i) {
      std::uniform_int_distribution<std::size_t> pick(i, n - 1);
      std::swap(perm[i], perm[pick(rng)]);
    }
    std::span<const Vertex> u(perm.data(), s);
    std::span<const Vertex> w(perm.data() + s, s);
    ++verdict.pairs_examined;
    double d = pair_density(g, u, w);
    if (violates(d, p, gamma)) {
      verdict.holds = false;
      verdict.witness_u.assign(u.begin(), u.end());
      verdict.witness_w.assign(w.begin(), w.end());
      std::sort(verdict.witness_u.begin(), verdict.witness_u.end());
      std::sort(verdict.witness_w.begin(), verdict.witness_w.end());
      verdict.witness_density = d;
      return verdict;
    }
  }
  return verdict;
}

}  // namespace monoham
