#include "isolp/graph_io.hpp"

#include <fstream>
#include <iomanip>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <vector>

namespace isolp {

namespace {

bool next_content_line(std::istream& in, std::string& line, int& lineno) {
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    return true;
  }
  return false;
}

[[noreturn]] void fail(int lineno, const std::string& what) {
  throw ParseError("line " + std::to_string(lineno) + ": " + what);
}

}  // namespace

WeightedGraph read_graph(std::istream& in) {
  std::string line;
  int lineno = 0;
  if (!next_content_line(in, line, lineno)) throw ParseError("empty graph file");
  long long n = 0;
  long long m = 0;
  {
    std::istringstream hs(line);
    std::string extra;
    if (!(hs >> n >> m) || (hs >> extra)) fail(lineno, "expected header 'n m'");
    if (n < 0 || m < 0) fail(lineno, "negative size in header");
    if (n > 100000) fail(lineno, "vertex count too large");
  }
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long long k = 0; k < m; ++k) {
    if (!next_content_line(in, line, lineno)) {
      throw ParseError("expected " + std::to_string(m) + " edges, found " + std::to_string(k));
    }
    std::istringstream es(line);
    long long u = 0;
    long long v = 0;
    double w = 0.0;
    std::string extra;
    if (!(es >> u >> v >> w) || (es >> extra)) fail(lineno, "expected edge 'u v w'");
    if (u < 1 || u > n || v < 1 || v > n) fail(lineno, "vertex id out of range");
    edges.push_back({static_cast<int>(u - 1), static_cast<int>(v - 1), w});
  }
  if (next_content_line(in, line, lineno)) fail(lineno, "unexpected trailing content");
  try {
    return WeightedGraph::from_edges(static_cast<int>(n), edges);
  } catch (const InvalidInput& e) {
    throw ParseError(e.what());
  }
}

WeightedGraph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  try {
    return read_graph(in);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

void write_graph(std::ostream& out, const WeightedGraph& g) {
  const auto edges = g.edges();
  out << g.size() << ' ' << edges.size() << '\n';
  out << std::setprecision(std::numeric_limits<double>::max_digits10);
  for (const Edge& e : edges) out << e.u + 1 << ' ' << e.v + 1 << ' ' << e.w << '\n';
}

void write_graph_file(const std::string& path, const WeightedGraph& g) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  write_graph(out, g);
}

}  // namespace isolp
