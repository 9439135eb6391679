#include <algorithm>
#include <charconv>
#include <iostream>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "ramsey_forge/errors.hpp"
#include "ramsey_forge/graph.hpp"
#include "text_util.hpp"

namespace ramsey_forge {

namespace detail {

Graph read_edge_list(LineReader& reader) {
  const auto header = reader.next_fields(2);
  const std::size_t n = detail::parse_uint(header[0], "vertex count");
  const std::size_t m = detail::parse_uint(header[1], "edge count");
  Graph g(n);
  std::set<std::pair<Vertex, Vertex>> seen;
  for (std::size_t e = 0; e < m; ++e) {
    const auto fields = reader.next_fields(2);
    const auto u = static_cast<Vertex>(detail::parse_uint(fields[0], "vertex"));
    const auto v = static_cast<Vertex>(detail::parse_uint(fields[1], "vertex"));
    if (u >= n || v >= n)
      throw FormatError(reader.where() + ": vertex label out of range");
    if (u == v) throw FormatError(reader.where() + ": loop edge");
    if (!seen.emplace(std::min(u, v), std::max(u, v)).second)
      throw FormatError(reader.where() + ": duplicate edge");
    g.add_edge(u, v);
  }
  return g;
}

}  // namespace detail

Graph read_edge_list(std::istream& in) {
  detail::LineReader reader(in, "edge list");
  Graph g = detail::read_edge_list(reader);
  reader.expect_end();
  return g;
}

void write_edge_list(std::ostream& out, const Graph& g) {
  const auto edges = g.edges();
  out << g.n() << ' ' << edges.size() << '\n';
  for (auto [u, v] : edges) out << u << ' ' << v << '\n';
}

Graph load_edge_list(const std::string& path) {
  if (path == "-") return read_edge_list(std::cin);
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path);
  return read_edge_list(in);
}

void save_edge_list(const std::string& path, const Graph& g) {
  std::ofstream out(path);
  if (!out) throw FormatError("cannot write " + path);
  write_edge_list(out, g);
}

}  // namespace ramsey_forge
