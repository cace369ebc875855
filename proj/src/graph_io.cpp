#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "monoham/graph.hpp"

namespace monoham {

namespace {

bool next_data_line(std::istream& in, std::string& line, std::size_t& lineno) {
  while (std::getline(in, line)) {
    ++lineno;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    return true;
  }
  return false;
}

[[noreturn]] void fail(std::size_t lineno, const std::string& what) {
  throw InputError("line " + std::to_string(lineno) + ": " + what);
}

}  // namespace

ColoredGraph read_graph(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  if (!next_data_line(in, line, lineno)) throw InputError("missing header line `n r`");
  long long n = -1;
  long long r = -1;
  {
    std::istringstream hs(line);
    std::string extra;
    if (!(hs >> n >> r) || (hs >> extra)) fail(lineno, "header must be `n r`");
    if (n < 0 || r < 0 || r > 65535) fail(lineno, "header values out of range");
  }
  std::vector<Edge> edges;
  while (next_data_line(in, line, lineno)) {
    std::istringstream ls(line);
    long long u = -1;
    long long v = -1;
    long long c = -1;
    std::string extra;
    if (!(ls >> u >> v >> c) || (ls >> extra)) fail(lineno, "edge line must be `u v c`");
    if (u < 0 || v < 0 || u >= n || v >= n) fail(lineno, "vertex out of range");
    if (c < 0 || c > r) fail(lineno, "colour out of range");
    if (u == v) fail(lineno, "self-loop");
    edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v), static_cast<Color>(c)});
  }
  return ColoredGraph(static_cast<std::size_t>(n), std::move(edges), static_cast<Color>(r));
}

void write_graph(std::ostream& out, const ColoredGraph& g) {
  out << g.num_vertices() << ' ' << g.num_colors() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << ' ' << e.color << '\n';
}

void write_edge_lines(std::ostream& out, const ColoredGraph& g, std::span<const Edge> edges) {
  for (const Edge& e : edges) out << e.u << ' ' << e.v << ' ' << g.color(e.u, e.v) << '\n';
}

}  // namespace monoham
