#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "monoham/graph.hpp"

namespace monoham {

/// One line of a move log. Vertex arguments are labels of the graph the log
/// is replayed against.
///
///   START v        current path := (v)
///   PATH v0 .. vk  current path := given path
///   EXT v          append v at the tail
///   REV            reverse the current path
///   ROT u v w      tail u, chord {u,v}, new tail w (w follows v)
///   OPEN v x       path closes into a cycle; cut before v, append x
///   BOOST u v      edge {u,v} joins the working subgraph
///   CLOSE          path spans its target set and closes into a cycle
///   CYCLE v0 ..    final Hamilton cycle
///   MATCH u v      edge of the final matching
enum class MoveKind { start, path, ext, rev, rot, open, boost, close, cycle, match };

struct Move {
  MoveKind kind = MoveKind::start;
  std::vector<Vertex> args;

  friend bool operator==(const Move&, const Move&) = default;
};

class Transcript {
 public:
  void add(MoveKind kind, std::vector<Vertex> args = {}) { moves_.push_back({kind, std::move(args)}); }
  void append(const Transcript& other);
  /// Rewrites every vertex argument through `to_parent`.
  Transcript relabeled(std::span<const Vertex> to_parent) const;

  const std::vector<Move>& moves() const { return moves_; }
  std::size_t size() const { return moves_.size(); }
  bool empty() const { return moves_.empty(); }
  std::size_t count(MoveKind kind) const;

  void write(std::ostream& out) const;
  std::string to_text() const;
  /// Parses the line format; blank lines and `#` comments are skipped.
  /// Throws InputError naming the offending line.
  static Transcript parse(std::istream& in);

 private:
  std::vector<Move> moves_;
};

const char* move_name(MoveKind kind);

struct ReplayResult {
  bool ok = false;
  std::string error;
  /// 1-based index of the failing move (0 when ok).
  std::size_t failed_move = 0;
  /// State after the last move.
  std::vector<Vertex> path;
  bool closed = false;
  std::vector<Vertex> cycle;
  std::vector<Edge> matching;
  std::size_t boosts = 0;
};

/// Re-executes every move against g and checks its legality; CYCLE must be a
/// Hamilton cycle of g and MATCH lines must form a perfect matching of g.
ReplayResult replay(const ColoredGraph& g, const Transcript& t);

}  // namespace monoham
