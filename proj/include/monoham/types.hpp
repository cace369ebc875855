#pragma once

#include <cstdint>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>

namespace monoham {

using Vertex = std::uint32_t;
/// Colour index. 0 means "uncoloured"; proper colours are 1..r.
using Color = std::uint16_t;

inline constexpr Vertex kNoVertex = std::numeric_limits<Vertex>::max();
inline constexpr Color kUncolored = 0;

using Rng = std::mt19937_64;

/// Malformed or out-of-range arguments.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An exhaustive routine was asked to run above its size cap.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// The caller violated a documented precondition of an operation.
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Mixes a base seed with a stream tag so that sub-steps of one run draw from
/// independent, reproducible streams (splitmix64 finaliser).
constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t tag) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (tag + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace monoham
