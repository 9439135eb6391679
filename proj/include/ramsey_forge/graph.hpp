#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace ramsey_forge {

using Vertex = std::uint32_t;
using VertexSet = std::vector<Vertex>;

// Labeled simple graph on vertices 0..n-1 with one adjacency bit-row per
// vertex. Rows are padded to whole 64-bit words; padding bits stay zero.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n);

  static Graph complete(std::size_t n);
  static Graph cycle(std::size_t n);
  static Graph petersen();
  // Complete multipartite graph; parts occupy consecutive label ranges.
  static Graph complete_multipartite(std::span<const std::size_t> part_sizes);
  static Graph from_edges(std::size_t n,
                          std::span<const std::pair<Vertex, Vertex>> edges);

  std::size_t n() const noexcept { return n_; }
  std::size_t words() const noexcept { return words_; }

  bool has_edge(Vertex u, Vertex v) const noexcept {
    return (row_ptr(u)[v >> 6] >> (v & 63)) & 1u;
  }
  void add_edge(Vertex u, Vertex v);
  void remove_edge(Vertex u, Vertex v);

  std::span<const std::uint64_t> row(Vertex v) const noexcept {
    return {row_ptr(v), words_};
  }

  std::size_t degree(Vertex v) const noexcept;
  std::size_t edge_count() const noexcept;
  // Edges (u, v) with u < v in lexicographic order.
  std::vector<std::pair<Vertex, Vertex>> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  const std::uint64_t* row_ptr(Vertex v) const noexcept {
    return bits_.data() + static_cast<std::size_t>(v) * words_;
  }
  std::uint64_t* row_ptr(Vertex v) noexcept {
    return bits_.data() + static_cast<std::size_t>(v) * words_;
  }
  void check_pair(Vertex u, Vertex v) const;

  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

// All r-cliques of a graph, each as an increasing vertex list; members are
// sorted lexicographically.
struct CliqueSet {
  std::size_t r = 0;
  std::vector<VertexSet> members;

  std::size_t size() const noexcept { return members.size(); }
};

// G(n, 1/2). The bit for pair (u < v) is drawn from counter_hash(seed, .)
// at pair index v(v-1)/2 + u, so G(n, seed) is the induced prefix of
// G(n + 1, seed) and the result never depends on iteration order.
Graph sample_gnp_half(std::size_t n, std::uint64_t seed);

CliqueSet enumerate_cliques(const Graph& g, std::size_t r);

// Number of r-cliques without materializing them. r = 0 counts the empty
// set. Work is split over the degeneracy order; the total does not depend
// on the thread count.
std::uint64_t count_cliques(const Graph& g, std::size_t r,
                            unsigned threads = 1);

// Witness for a K_{l,...,l} subgraph: the r parts, each increasing, parts
// ordered by their smallest member.
struct MultipartiteWitness {
  std::vector<VertexSet> parts;
};

// Exact search for K_{l,...,l} with r parts as a (not necessarily induced)
// subgraph. Exponential in l*r; intended for l*r <= 18.
std::optional<MultipartiteWitness> contains_balanced_multipartite(
    const Graph& g, std::size_t l, std::size_t r);

// Vertices are relabeled 0..|S|-1 in increasing label order. Throws
// std::out_of_range for labels >= n and DomainError for repeated labels.
Graph induced_subgraph(const Graph& g, std::span<const Vertex> subset);

Graph complement(const Graph& g);

// Edge-list text: "n m" followed by m lines "u v".
Graph read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const Graph& g);
Graph load_edge_list(const std::string& path);
void save_edge_list(const std::string& path, const Graph& g);

}  // namespace ramsey_forge
