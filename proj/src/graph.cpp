#include "ramsey_forge/graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "bitset_util.hpp"
#include "ramsey_forge/errors.hpp"
#include "ramsey_forge/parallel.hpp"
#include "ramsey_forge/rng.hpp"

namespace ramsey_forge {

using detail::for_each_bit;
using detail::popcount;
using detail::words_for;

Graph::Graph(std::size_t n)
    : n_(n), words_(words_for(n)), bits_(n * words_for(n), 0) {}

Graph Graph::complete(std::size_t n) {
  Graph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph Graph::cycle(std::size_t n) {
  if (n < 3) throw DomainError("cycle needs at least 3 vertices");
  Graph g(n);
  for (Vertex v = 0; v < n; ++v)
    g.add_edge(v, static_cast<Vertex>((v + 1) % n));
  return g;
}

Graph Graph::petersen() {
  Graph g(10);
  for (Vertex i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);              // outer 5-cycle
    g.add_edge(i, i + 5);                    // spokes
    g.add_edge(i + 5, (i + 2) % 5 + 5);      // inner pentagram
  }
  return g;
}

Graph Graph::complete_multipartite(std::span<const std::size_t> part_sizes) {
  const std::size_t n =
      std::accumulate(part_sizes.begin(), part_sizes.end(), std::size_t{0});
  std::vector<std::size_t> part_of;
  part_of.reserve(n);
  for (std::size_t p = 0; p < part_sizes.size(); ++p)
    part_of.insert(part_of.end(), part_sizes[p], p);
  Graph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (part_of[u] != part_of[v]) g.add_edge(u, v);
  return g;
}

Graph Graph::from_edges(std::size_t n,
                        std::span<const std::pair<Vertex, Vertex>> edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

void Graph::check_pair(Vertex u, Vertex v) const {
  if (u >= n_ || v >= n_)
    throw std::out_of_range("vertex label out of range: " + std::to_string(u) +
                            " " + std::to_string(v) + " (n = " +
                            std::to_string(n_) + ")");
  if (u == v) throw DomainError("loops are not allowed: " + std::to_string(u));
}

void Graph::add_edge(Vertex u, Vertex v) {
  check_pair(u, v);
  detail::set_bit({row_ptr(u), words_}, v);
  detail::set_bit({row_ptr(v), words_}, u);
}

void Graph::remove_edge(Vertex u, Vertex v) {
  check_pair(u, v);
  detail::clear_bit({row_ptr(u), words_}, v);
  detail::clear_bit({row_ptr(v), words_}, u);
}

std::size_t Graph::degree(Vertex v) const noexcept { return popcount(row(v)); }

std::size_t Graph::edge_count() const noexcept {
  return popcount(bits_) / 2;
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (Vertex u = 0; u < n_; ++u)
    for_each_bit(
        row(u), [&](std::size_t v) { out.emplace_back(u, Vertex(v)); },
        std::size_t{u} + 1);
  return out;
}

Graph sample_gnp_half(std::size_t n, std::uint64_t seed) {
  Graph g(n);
  std::uint64_t pair = 0;
  std::uint64_t word = 0;
  for (Vertex v = 1; v < n; ++v) {
    for (Vertex u = 0; u < v; ++u, ++pair) {
      if ((pair & 63) == 0) word = counter_hash(seed, pair >> 6);
      if ((word >> (pair & 63)) & 1u) g.add_edge(u, v);
    }
  }
  return g;
}

namespace {

// Vertices renumbered along a degeneracy order; forward rows keep only
// neighbors later in the order, so each clique is reached once from its
// earliest vertex.
struct ForwardGraph {
  std::size_t n = 0;
  std::size_t words = 0;
  std::vector<Vertex> order;  // position -> original label
  std::vector<std::uint64_t> fwd;

  std::span<const std::uint64_t> row(std::size_t i) const {
    return {fwd.data() + i * words, words};
  }
};

std::vector<Vertex> degeneracy_order(const Graph& g) {
  const std::size_t n = g.n();
  std::vector<std::size_t> deg(n);
  for (Vertex v = 0; v < n; ++v) deg[v] = g.degree(v);
  std::vector<bool> removed(n, false);
  std::vector<Vertex> order;
  order.reserve(n);
  for (std::size_t step = 0; step < n; ++step) {
    Vertex best = 0;
    std::size_t best_deg = SIZE_MAX;
    for (Vertex v = 0; v < n; ++v)
      if (!removed[v] && deg[v] < best_deg) {
        best = v;
        best_deg = deg[v];
      }
    removed[best] = true;
    order.push_back(best);
    for_each_bit(g.row(best), [&](std::size_t w) {
      if (!removed[w]) --deg[w];
    });
  }
  return order;
}

ForwardGraph make_forward(const Graph& g) {
  ForwardGraph f;
  f.n = g.n();
  f.words = words_for(f.n);
  f.order = degeneracy_order(g);
  std::vector<std::size_t> pos(f.n);
  for (std::size_t i = 0; i < f.n; ++i) pos[f.order[i]] = i;
  f.fwd.assign(f.n * f.words, 0);
  for (std::size_t i = 0; i < f.n; ++i) {
    std::span<std::uint64_t> dst{f.fwd.data() + i * f.words, f.words};
    for_each_bit(g.row(f.order[i]), [&](std::size_t w) {
      if (pos[w] > i) detail::set_bit(dst, pos[w]);
    });
  }
  return f;
}

// Candidate sets per recursion depth, reused across calls.
struct Scratch {
  std::vector<std::vector<std::uint64_t>> levels;
  Scratch(std::size_t depth, std::size_t words)
      : levels(depth, std::vector<std::uint64_t>(words)) {}
};

std::uint64_t count_rec(const ForwardGraph& f, Scratch& s, std::size_t level,
                        std::size_t from_word, std::size_t remaining) {
  const auto& cand = s.levels[level];
  if (remaining == 1) return popcount(std::span(cand).subspan(from_word));
  std::uint64_t total = 0;
  auto& next = s.levels[level + 1];
  for_each_bit(
      std::span<const std::uint64_t>(cand),
      [&](std::size_t u) {
        const auto fu = f.row(u);
        const std::size_t w0 = u >> 6;
        bool any = false;
        for (std::size_t w = w0; w < f.words; ++w) {
          next[w] = cand[w] & fu[w];
          any |= next[w] != 0;
        }
        if (any) total += count_rec(f, s, level + 1, w0, remaining - 1);
      },
      from_word * 64);
  return total;
}

void enumerate_rec(const ForwardGraph& f, Scratch& s, std::size_t level,
                   std::size_t remaining, VertexSet& stack,
                   std::vector<VertexSet>& out) {
  const auto& cand = s.levels[level];
  auto& next = s.levels[level + 1];
  for_each_bit(std::span<const std::uint64_t>(cand), [&](std::size_t u) {
    stack.push_back(static_cast<Vertex>(u));
    if (remaining == 1) {
      VertexSet clique;
      clique.reserve(stack.size());
      for (auto p : stack) clique.push_back(f.order[p]);
      std::sort(clique.begin(), clique.end());
      out.push_back(std::move(clique));
    } else {
      const auto fu = f.row(u);
      bool any = false;
      for (std::size_t w = 0; w < f.words; ++w) {
        next[w] = cand[w] & fu[w];
        any |= next[w] != 0;
      }
      if (any) enumerate_rec(f, s, level + 1, remaining - 1, stack, out);
    }
    stack.pop_back();
  });
}

}  // namespace

CliqueSet enumerate_cliques(const Graph& g, std::size_t r) {
  if (r == 0) throw DomainError("clique size must be at least 1");
  CliqueSet result{r, {}};
  if (r > g.n()) return result;
  if (r == 1) {
    for (Vertex v = 0; v < g.n(); ++v) result.members.push_back({v});
    return result;
  }
  const ForwardGraph f = make_forward(g);
  Scratch s(r + 1, f.words);
  VertexSet stack;
  for (std::size_t i = 0; i < f.n; ++i) {
    std::copy(f.row(i).begin(), f.row(i).end(), s.levels[0].begin());
    stack.assign(1, static_cast<Vertex>(i));
    enumerate_rec(f, s, 0, r - 1, stack, result.members);
  }
  std::sort(result.members.begin(), result.members.end());
  return result;
}

std::uint64_t count_cliques(const Graph& g, std::size_t r, unsigned threads) {
  if (r == 0) return 1;
  if (r > g.n()) return 0;
  if (r == 1) return g.n();
  if (r == 2) return g.edge_count();
  const ForwardGraph f = make_forward(g);
  threads = resolve_threads(threads);
  std::vector<std::uint64_t> partial(std::max(1u, threads), 0);
  parallel_chunks(f.n, threads,
                  [&](std::size_t begin, std::size_t end, unsigned worker) {
                    Scratch s(r, f.words);
                    std::uint64_t sum = 0;
                    for (std::size_t i = begin; i < end; ++i) {
                      const auto fi = f.row(i);
                      if (popcount(fi) + 1 < r) continue;
                      std::copy(fi.begin(), fi.end(), s.levels[0].begin());
                      sum += count_rec(f, s, 0, i >> 6, r - 1);
                    }
                    partial[worker] = sum;
                  });
  return std::accumulate(partial.begin(), partial.end(), std::uint64_t{0});
}

namespace {

class MultipartiteSearch {
 public:
  MultipartiteSearch(const Graph& g, std::size_t l, std::size_t r)
      : g_(g), l_(l), r_(r), words_(g.words()) {}

  std::optional<MultipartiteWitness> run() {
    std::vector<std::uint64_t> all(words_, 0);
    for (Vertex v = 0; v < g_.n(); ++v) detail::set_bit(all, v);
    parts_.reserve(r_);
    parts_.assign(1, {});
    if (extend(all, all, 0)) return MultipartiteWitness{parts_};
    return std::nullopt;
  }

 private:
  // common: vertices adjacent to every member of the completed parts.
  // future: common restricted further to neighbours of the current part.
  // floor: members of the current part exceed this label (the first member
  // must exceed the previous part's minimum).
  bool extend(const std::vector<std::uint64_t>& common,
              const std::vector<std::uint64_t>& future, std::size_t floor) {
    auto& cur = parts_.back();
    if (cur.size() == l_) {
      if (parts_.size() == r_) return true;
      const std::size_t min_cur = cur.front();
      parts_.emplace_back();
      if (extend(future, future, min_cur + 1)) return true;
      parts_.pop_back();
      return false;
    }
    const std::size_t need_here = l_ - cur.size();
    const std::size_t need_later = (r_ - parts_.size()) * l_;
    if (detail::popcount_from(common, floor) < need_here) return false;

    bool found = false;
    std::vector<std::uint64_t> next_future(words_);
    for_each_bit(
        std::span<const std::uint64_t>(common),
        [&](std::size_t x) {
          if (found) return;
          const auto nx = g_.row(static_cast<Vertex>(x));
          for (std::size_t w = 0; w < words_; ++w)
            next_future[w] = future[w] & nx[w];
          const std::size_t first = cur.empty() ? x : cur.front();
          if (need_later > 0 &&
              detail::popcount_from(next_future, first + 1) < need_later)
            return;
          cur.push_back(static_cast<Vertex>(x));
          if (extend(common, next_future, x + 1)) {
            found = true;
            return;
          }
          parts_.back().pop_back();
        },
        floor);
    return found;
  }

  const Graph& g_;
  std::size_t l_, r_, words_;
  std::vector<VertexSet> parts_;
};

}  // namespace

std::optional<MultipartiteWitness> contains_balanced_multipartite(
    const Graph& g, std::size_t l, std::size_t r) {
  if (l == 0 || r == 0)
    throw DomainError("part size and part count must be positive");
  if (l * r > g.n()) return std::nullopt;
  return MultipartiteSearch(g, l, r).run();
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> subset) {
  VertexSet sorted(subset.begin(), subset.end());
  std::sort(sorted.begin(), sorted.end());
  for (auto v : sorted)
    if (v >= g.n())
      throw std::out_of_range("vertex " + std::to_string(v) +
                              " not in graph with n = " +
                              std::to_string(g.n()));
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw DomainError("vertex subset contains a repeated label");
  Graph h(sorted.size());
  for (Vertex i = 0; i < sorted.size(); ++i)
    for (Vertex j = i + 1; j < sorted.size(); ++j)
      if (g.has_edge(sorted[i], sorted[j])) h.add_edge(i, j);
  return h;
}

Graph complement(const Graph& g) {
  Graph h(g.n());
  for (Vertex u = 0; u < g.n(); ++u)
    for (Vertex v = u + 1; v < g.n(); ++v)
      if (!g.has_edge(u, v)) h.add_edge(u, v);
  return h;
}

}  // namespace ramsey_forge
