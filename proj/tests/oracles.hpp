#pragma once

// Slow, obviously-correct reference implementations used only by tests.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <vector>

#include "ramsey_forge/graph.hpp"
#include "ramsey_forge/packing.hpp"
#include "ramsey_forge/rational.hpp"

namespace oracle {

using ramsey_forge::Graph;
using ramsey_forge::Vertex;

// All r-subsets of {0..n-1} in lexicographic order.
inline std::vector<std::vector<Vertex>> subsets(std::size_t n, std::size_t r) {
  std::vector<std::vector<Vertex>> out;
  if (r > n) return out;
  std::vector<Vertex> cur(r);
  std::iota(cur.begin(), cur.end(), 0);
  while (true) {
    out.push_back(cur);
    std::size_t i = r;
    while (i > 0 && cur[i - 1] == n - r + i - 1) --i;
    if (i == 0) break;
    ++cur[i - 1];
    for (std::size_t j = i; j < r; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

inline bool is_clique(const Graph& g, const std::vector<Vertex>& c) {
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = i + 1; j < c.size(); ++j)
      if (!g.has_edge(c[i], c[j])) return false;
  return true;
}

inline std::vector<std::vector<Vertex>> cliques(const Graph& g, std::size_t r) {
  std::vector<std::vector<Vertex>> out;
  for (auto& c : subsets(g.n(), r))
    if (is_clique(g, c)) out.push_back(c);
  return out;
}

// Maximum set of pairwise edge-disjoint k-subsets of {0..s-1}, by plain
// recursion over candidates with no bound beyond remaining-candidate count.
inline std::size_t max_packing(std::size_t s, std::size_t k) {
  const auto cand = subsets(s, k);
  auto overlap = [](const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
    std::size_t shared = 0;
    for (auto x : a) shared += std::count(b.begin(), b.end(), x);
    return shared >= 2;
  };
  std::vector<std::size_t> chosen;
  std::size_t best = 0;
  std::function<void(std::size_t)> go = [&](std::size_t i) {
    best = std::max(best, chosen.size());
    if (chosen.size() + (cand.size() - i) <= best) return;
    for (std::size_t j = i; j < cand.size(); ++j) {
      if (chosen.size() + (cand.size() - j) <= best) return;
      bool ok = true;
      for (auto c : chosen)
        if (overlap(cand[c], cand[j])) { ok = false; break; }
      if (!ok) continue;
      chosen.push_back(j);
      go(j + 1);
      chosen.pop_back();
    }
  };
  go(0);
  return best;
}

// Labeled graphs on k vertices with no K_l, by enumerating all 2^C(k,2).
inline std::uint64_t kl_free_count(std::size_t k, std::size_t l) {
  const auto pairs = subsets(k, 2);
  const auto tuples = subsets(k, l);
  std::vector<std::uint64_t> masks;
  for (auto& t : tuples) {
    std::uint64_t m = 0;
    for (std::size_t p = 0; p < pairs.size(); ++p)
      if (std::count(t.begin(), t.end(), pairs[p][0]) &&
          std::count(t.begin(), t.end(), pairs[p][1]))
        m |= std::uint64_t{1} << p;
    masks.push_back(m);
  }
  std::uint64_t count = 0;
  for (std::uint64_t g = 0; g < (std::uint64_t{1} << pairs.size()); ++g)
    if (std::none_of(masks.begin(), masks.end(),
                     [g](std::uint64_t m) { return (g & m) == m; }))
      ++count;
  return count;
}

// P(at most z of a independent trials hit), hit probability 1 - q.
inline ramsey_forge::Rational binomial_cdf(std::uint64_t a, std::uint64_t z,
                                           const ramsey_forge::Rational& q) {
  using ramsey_forge::Rational;
  const Rational p = 1 - q;
  Rational total = 0;
  ramsey_forge::BigInt choose = 1;
  for (std::uint64_t j = 0; j <= z; ++j) {
    if (j > 0) choose = choose * (a - j + 1) / j;
    Rational term = Rational(choose);
    for (std::uint64_t t = 0; t < j; ++t) term *= p;
    for (std::uint64_t t = 0; t < a - j; ++t) term *= q;
    total += term;
  }
  return total;
}

}  // namespace oracle
