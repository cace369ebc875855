#include "monoham/transcript.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

#include "monoham/path.hpp"

namespace monoham {

namespace {

struct KindInfo {
  MoveKind kind;
  const char* name;
  int arity;  // -1: variable
};

constexpr KindInfo kKinds[] = {
    {MoveKind::start, "START", 1}, {MoveKind::path, "PATH", -1}, {MoveKind::ext, "EXT", 1},
    {MoveKind::rev, "REV", 0},     {MoveKind::rot, "ROT", 3},    {MoveKind::open, "OPEN", 2},
    {MoveKind::boost, "BOOST", 2}, {MoveKind::close, "CLOSE", 0}, {MoveKind::cycle, "CYCLE", -1},
    {MoveKind::match, "MATCH", 2},
};

const KindInfo& info(MoveKind k) {
  for (const KindInfo& ki : kKinds)
    if (ki.kind == k) return ki;
  return kKinds[0];
}

}  // namespace

const char* move_name(MoveKind kind) { return info(kind).name; }

void Transcript::append(const Transcript& other) {
  moves_.insert(moves_.end(), other.moves_.begin(), other.moves_.end());
}

Transcript Transcript::relabeled(std::span<const Vertex> to_parent) const {
  Transcript out;
  out.moves_ = moves_;
  for (Move& m : out.moves_)
    for (Vertex& v : m.args) v = to_parent[v];
  return out;
}

std::size_t Transcript::count(MoveKind kind) const {
  return static_cast<std::size_t>(
      std::count_if(moves_.begin(), moves_.end(), [kind](const Move& m) { return m.kind == kind; }));
}

void Transcript::write(std::ostream& out) const {
  for (const Move& m : moves_) {
    out << move_name(m.kind);
    for (Vertex v : m.args) out << ' ' << v;
    out << '\n';
  }
}

std::string Transcript::to_text() const {
  std::ostringstream os;
  write(os);
  return os.str();
}

Transcript Transcript::parse(std::istream& in) {
  Transcript t;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string word;
    if (!(ls >> word) || word[0] == '#') continue;
    const KindInfo* ki = nullptr;
    for (const KindInfo& k : kKinds)
      if (word == k.name) ki = &k;
    if (!ki) throw InputError("line " + std::to_string(lineno) + ": unknown move `" + word + "`");
    Move m{ki->kind, {}};
    long long v = 0;
    while (ls >> v) {
      if (v < 0 || v >= static_cast<long long>(kNoVertex))
        throw InputError("line " + std::to_string(lineno) + ": bad vertex");
      m.args.push_back(static_cast<Vertex>(v));
    }
    if (!ls.eof()) throw InputError("line " + std::to_string(lineno) + ": bad argument");
    if (ki->arity >= 0 && m.args.size() != static_cast<std::size_t>(ki->arity))
      throw InputError("line " + std::to_string(lineno) + ": " + ki->name + " takes " +
                       std::to_string(ki->arity) + " arguments");
    t.moves_.push_back(std::move(m));
  }
  return t;
}

ReplayResult replay(const ColoredGraph& g, const Transcript& t) {
  ReplayResult res;
  const std::size_t n = g.num_vertices();
  std::vector<Vertex>& path = res.path;
  std::vector<int> pos(n, -1);
  auto reset_pos = [&] {
    for (Vertex v : path) pos[v] = -1;
  };
  auto index_path = [&] {
    for (std::size_t i = 0; i < path.size(); ++i) pos[path[i]] = static_cast<int>(i);
  };
  auto in_range = [&](const Move& m) {
    return std::all_of(m.args.begin(), m.args.end(), [n](Vertex v) { return v < n; });
  };
  std::vector<char> matched(n, 0);

  for (std::size_t i = 0; i < t.moves().size(); ++i) {
    const Move& m = t.moves()[i];
    auto fail = [&](const std::string& why) {
      res.ok = false;
      res.failed_move = i + 1;
      res.error = std::string(move_name(m.kind)) + ": " + why;
      return res;
    };
    if (!in_range(m)) return fail("vertex out of range");
    switch (m.kind) {
      case MoveKind::start:
        reset_pos();
        path.assign(1, m.args[0]);
        index_path();
        res.closed = false;
        break;
      case MoveKind::path:
        if (!is_simple_path(g, m.args)) return fail("not a simple path");
        reset_pos();
        path = m.args;
        index_path();
        res.closed = false;
        break;
      case MoveKind::ext: {
        Vertex v = m.args[0];
        if (path.empty()) return fail("no current path");
        if (pos[v] >= 0) return fail("vertex already on the path");
        if (!g.has_edge(path.back(), v)) return fail("tail not adjacent");
        pos[v] = static_cast<int>(path.size());
        path.push_back(v);
        break;
      }
      case MoveKind::rev:
        std::reverse(path.begin(), path.end());
        index_path();
        break;
      case MoveKind::rot: {
        Vertex u = m.args[0];
        Vertex v = m.args[1];
        Vertex w = m.args[2];
        if (path.empty() || path.back() != u) return fail("u is not the tail");
        if (pos[v] < 0 || static_cast<std::size_t>(pos[v]) + 2 >= path.size())
          return fail("pivot not on the path or adjacent to the tail");
        if (!g.has_edge(u, v)) return fail("chord missing");
        auto iv = static_cast<std::size_t>(pos[v]);
        if (path[iv + 1] != w) return fail("w does not follow the pivot");
        std::reverse(path.begin() + static_cast<std::ptrdiff_t>(iv + 1), path.end());
        for (std::size_t j = iv + 1; j < path.size(); ++j) pos[path[j]] = static_cast<int>(j);
        break;
      }
      case MoveKind::open: {
        Vertex v = m.args[0];
        Vertex x = m.args[1];
        if (path.size() < 3 || !g.has_edge(path.back(), path.front())) return fail("path does not close");
        if (pos[v] < 1) return fail("cut vertex not on the path interior");
        if (pos[x] >= 0) return fail("new vertex already on the path");
        if (!g.has_edge(v, x)) return fail("edge to new vertex missing");
        auto j = static_cast<std::size_t>(pos[v]);
        std::vector<Vertex> next(path.rend() - static_cast<std::ptrdiff_t>(j), path.rend());
        next.insert(next.end(), path.rbegin(), path.rend() - static_cast<std::ptrdiff_t>(j));
        next.push_back(x);
        path = std::move(next);
        index_path();
        break;
      }
      case MoveKind::boost:
        if (!g.has_edge(m.args[0], m.args[1])) return fail("booster is not an edge of the host");
        ++res.boosts;
        break;
      case MoveKind::close:
        if (path.size() < 3 || !g.has_edge(path.back(), path.front())) return fail("path does not close");
        res.closed = true;
        break;
      case MoveKind::cycle:
        if (!is_hamilton_cycle(g, m.args)) return fail("not a Hamilton cycle");
        res.cycle = m.args;
        break;
      case MoveKind::match: {
        Vertex u = m.args[0];
        Vertex v = m.args[1];
        if (!g.has_edge(u, v)) return fail("not an edge");
        if (matched[u] || matched[v]) return fail("edges not disjoint");
        matched[u] = matched[v] = 1;
        res.matching.push_back({std::min(u, v), std::max(u, v), g.color(u, v)});
        break;
      }
    }
  }
  if (!res.matching.empty() && std::find(matched.begin(), matched.end(), 0) != matched.end()) {
    res.failed_move = t.moves().size();
    res.error = "MATCH lines do not form a perfect matching";
    return res;
  }
  res.ok = true;
  return res;
}

}  // namespace monoham
