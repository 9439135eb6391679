#include "ramsey_forge/packing.hpp"

#include <algorithm>
#include <bit>
#include <istream>
#include <numeric>
#include <ostream>
#include <string>

#include "bitset_util.hpp"
#include "ramsey_forge/errors.hpp"
#include "ramsey_forge/rng.hpp"
#include "text_util.hpp"

namespace ramsey_forge {

std::string to_string(PackingMode mode) {
  return mode == PackingMode::exact ? "exact" : "greedy";
}

std::uint64_t packing_upper_bound(std::size_t s, std::size_t k) {
  if (k < 2) throw DomainError("clique size must be at least 2");
  const std::uint64_t pairs = std::uint64_t{s} * (s > 0 ? s - 1 : 0) / 2;
  return pairs / (std::uint64_t{k} * (k - 1) / 2);
}

std::size_t pack_exact_cap(std::size_t k) { return k == 3 ? 13 : 15; }

double rodl_ratio(const CliquePacking& p) {
  if (p.s == 0) return 0.0;
  return static_cast<double>(p.cliques.size()) * static_cast<double>(p.k) *
         static_cast<double>(p.k - 1) /
         (static_cast<double>(p.s) * static_cast<double>(p.s));
}

namespace {

void finalize(CliquePacking& p) {
  for (auto& c : p.cliques) std::sort(c.begin(), c.end());
  p.delta_report = 1.0 - rodl_ratio(p);
}

// k-subsets of an s-set as bit masks, for s <= 15.
using Mask = std::uint32_t;

class ExactPacker {
 public:
  ExactPacker(std::size_t s, std::size_t k) : s_(s), k_(k), pair_(k * (k - 1) / 2) {
    free_.assign(s, 0);
    for (std::size_t v = 0; v < s; ++v)
      free_[v] = ((Mask{1} << s) - 1) & ~(Mask{1} << v);
    untouched_ = (Mask{1} << s) - 1;
    target_ = bound();
  }

  std::vector<Mask> solve() {
    search();
    return best_;
  }

 private:
  // Upper bound on how many more cliques fit into the free pairs.
  std::size_t bound() const {
    std::size_t edges2 = 0, by_degree = 0, leftover = 0;
    for (std::size_t v = 0; v < s_; ++v) {
      const auto f = static_cast<std::size_t>(std::popcount(free_[v]));
      edges2 += f;
      by_degree += f / (k_ - 1);
      leftover += f % (k_ - 1);
    }
    const std::size_t edges = edges2 / 2;
    std::size_t by_edges;
    if (leftover == 0) {
      // Every leave degree is a multiple of k-1, so a nonempty leave has at
      // least C(k,2) pairs.
      by_edges = edges / pair_;
      if (edges % pair_ != 0 && by_edges > 0) --by_edges;
    } else {
      const std::size_t min_leave = (leftover + 1) / 2;
      by_edges = edges >= min_leave ? (edges - min_leave) / pair_ : 0;
    }
    return std::min(by_degree / k_, by_edges);
  }

  void search() {
    if (done_) return;
    if (best_set_ && current_.size() + bound() <= best_.size()) return;

    // Smallest free pair.
    std::size_t u = 0;
    while (u < s_ && free_[u] == 0) ++u;
    if (u == s_) {
      record();
      return;
    }
    const auto v = static_cast<std::size_t>(std::countr_zero(free_[u]));

    // Cover (u, v) with a clique through it.
    const Mask common = free_[u] & free_[v];
    const Mask spare = untouched_ & ~(Mask{1} << u) & ~(Mask{1} << v);
    std::vector<std::size_t> chosen;
    extend_clique(u, v, common, spare, chosen, 0);
    if (done_) return;

    // Leave (u, v) uncovered.
    const Mask saved_untouched = untouched_;
    free_[u] &= ~(Mask{1} << v);
    free_[v] &= ~(Mask{1} << u);
    untouched_ &= ~((Mask{1} << u) | (Mask{1} << v));
    search();
    free_[u] |= Mask{1} << v;
    free_[v] |= Mask{1} << u;
    untouched_ = saved_untouched;
  }

  // Picks the remaining k-2 members in increasing order from `cand`. The
  // untouched members used must be the smallest untouched candidates.
  void extend_clique(std::size_t u, std::size_t v, Mask cand, Mask spare,
                     std::vector<std::size_t>& chosen, std::size_t min_label) {
    if (done_) return;
    if (chosen.size() + 2 == k_) {
      apply(u, v, chosen);
      return;
    }
    cand &= ~((Mask{1} << min_label) - 1);
    if (static_cast<std::size_t>(std::popcount(cand)) + chosen.size() + 2 < k_)
      return;
    for (Mask c = cand; c; c &= c - 1) {
      const auto w = static_cast<std::size_t>(std::countr_zero(c));
      const Mask wbit = Mask{1} << w;
      if (spare & wbit) {
        // w untouched: allowed only if it is the smallest untouched
        // candidate not yet skipped.
        const Mask lower_spare = spare & (wbit - 1) &
                                 ~((Mask{1} << min_label) - 1);
        if (lower_spare != 0) continue;
      }
      chosen.push_back(w);
      extend_clique(u, v, cand & free_[w] & ~wbit,
                    spare & ~(wbit | (wbit - 1)), chosen, w + 1);
      chosen.pop_back();
      if (done_) return;
    }
  }

  void apply(std::size_t u, std::size_t v, const std::vector<std::size_t>& rest) {
    Mask members = (Mask{1} << u) | (Mask{1} << v);
    for (auto w : rest) members |= Mask{1} << w;
    for (Mask m = members; m; m &= m - 1) {
      const auto x = std::countr_zero(m);
      free_[x] &= ~members;
    }
    const Mask saved_untouched = untouched_;
    untouched_ &= ~members;
    current_.push_back(members);
    search();
    current_.pop_back();
    untouched_ = saved_untouched;
    for (Mask m = members; m; m &= m - 1) {
      const auto x = std::countr_zero(m);
      free_[x] |= members & ~(Mask{1} << x);
    }
  }

  void record() {
    if (!best_set_ || current_.size() > best_.size()) {
      best_ = current_;
      best_set_ = true;
      if (best_.size() >= target_) done_ = true;
    }
  }

  std::size_t s_, k_, pair_;
  std::vector<Mask> free_;
  Mask untouched_ = 0;
  std::size_t target_ = 0;
  std::vector<Mask> current_;
  std::vector<Mask> best_;
  bool best_set_ = false;
  bool done_ = false;
};

}  // namespace

CliquePacking pack_exact(std::size_t s, std::size_t k) {
  if (k < 2) throw DomainError("clique size must be at least 2");
  if (s > pack_exact_cap(k))
    throw DomainError("pack_exact supports s <= " +
                      std::to_string(pack_exact_cap(k)) + " for k = " +
                      std::to_string(k) + "; use pack_greedy for s = " +
                      std::to_string(s));
  CliquePacking p{s, k, {}, PackingMode::exact, 0.0};
  if (k <= s) {
    for (Mask m : ExactPacker(s, k).solve()) {
      VertexSet c;
      for (; m; m &= m - 1) c.push_back(static_cast<Vertex>(std::countr_zero(m)));
      p.cliques.push_back(std::move(c));
    }
  }
  std::sort(p.cliques.begin(), p.cliques.end());
  finalize(p);
  return p;
}

namespace {

// Free-pair graph on the ground set with seed-ranked vertex preference.
class GreedyPacker {
 public:
  GreedyPacker(std::size_t s, std::size_t k, std::uint64_t seed)
      : s_(s), k_(k), free_(Graph::complete(s)), rng_(seed), by_rank_(s) {
    std::iota(by_rank_.begin(), by_rank_.end(), Vertex{0});
    shuffle(by_rank_);
  }

  CliquePacking run() {
    auto pairs = free_.edges();
    shuffle(pairs);
    for (auto [u, v] : pairs) try_cover(u, v);

    const std::size_t cap = 10 * s_ * s_;
    std::size_t attempts = 0;
    bool improved = true;
    while (improved && attempts < cap) {
      improved = false;
      for (std::size_t i = 0; i < cliques_.size() && attempts < cap; ++i) {
        ++attempts;
        if (swap_one_for_two(i)) improved = true;
      }
      if (improved)
        for (auto [u, v] : pairs) try_cover(u, v);
    }
    // Make sure the result is maximal even if the cap cut the loop short.
    for (auto [u, v] : pairs) try_cover(u, v);

    CliquePacking p{s_, k_, std::move(cliques_), PackingMode::greedy, 0.0};
    finalize(p);
    std::sort(p.cliques.begin(), p.cliques.end());
    return p;
  }

 private:
  template <class T>
  void shuffle(std::vector<T>& xs) {
    for (std::size_t i = xs.size(); i > 1; --i)
      std::swap(xs[i - 1], xs[rng_.below(i)]);
  }

  // Free-neighbour candidates common to all of `members`, in rank order.
  std::vector<Vertex> common_free(const VertexSet& members) const {
    std::vector<Vertex> out;
    for (Vertex w : by_rank_) {
      bool ok = true;
      for (Vertex m : members)
        if (w == m || !free_.has_edge(w, m)) {
          ok = false;
          break;
        }
      if (ok) out.push_back(w);
    }
    return out;
  }

  // First k-clique (in rank order) of the free graph extending `members`.
  bool find_clique(VertexSet& members, const std::vector<Vertex>& cand,
                   std::size_t from) const {
    if (members.size() == k_) return true;
    for (std::size_t i = from; i < cand.size(); ++i) {
      if (cand.size() - i + members.size() < k_) return false;
      const Vertex w = cand[i];
      bool ok = true;
      for (std::size_t j = 2; j < members.size(); ++j)
        if (!free_.has_edge(w, members[j])) {
          ok = false;
          break;
        }
      if (!ok) continue;
      members.push_back(w);
      if (find_clique(members, cand, i + 1)) return true;
      members.pop_back();
    }
    return false;
  }

  // All k-cliques of the free graph through pair (u, v), up to `limit`.
  void all_cliques(VertexSet& members, const std::vector<Vertex>& cand,
                   std::size_t from, std::vector<VertexSet>& out,
                   std::size_t limit) const {
    if (out.size() >= limit) return;
    if (members.size() == k_) {
      out.push_back(members);
      return;
    }
    for (std::size_t i = from; i < cand.size(); ++i) {
      const Vertex w = cand[i];
      bool ok = true;
      for (std::size_t j = 2; j < members.size(); ++j)
        if (!free_.has_edge(w, members[j])) {
          ok = false;
          break;
        }
      if (!ok) continue;
      members.push_back(w);
      all_cliques(members, cand, i + 1, out, limit);
      members.pop_back();
    }
  }

  void take(const VertexSet& c) {
    for (std::size_t a = 0; a < c.size(); ++a)
      for (std::size_t b = a + 1; b < c.size(); ++b) free_.remove_edge(c[a], c[b]);
  }
  void release(const VertexSet& c) {
    for (std::size_t a = 0; a < c.size(); ++a)
      for (std::size_t b = a + 1; b < c.size(); ++b) free_.add_edge(c[a], c[b]);
  }

  void try_cover(Vertex u, Vertex v) {
    if (!free_.has_edge(u, v)) return;
    VertexSet members{u, v};
    if (find_clique(members, common_free(members), 0)) {
      take(members);
      cliques_.push_back(std::move(members));
    }
  }

  static bool share_pair(const VertexSet& a, const VertexSet& b) {
    std::size_t common = 0;
    for (auto x : a)
      if (std::find(b.begin(), b.end(), x) != b.end()) ++common;
    return common >= 2;
  }

  // Replaces clique i by two cliques if the freed pairs allow it.
  bool swap_one_for_two(std::size_t i) {
    const VertexSet old = cliques_[i];
    release(old);
    std::vector<VertexSet> options;
    constexpr std::size_t kLimit = 64;
    for (std::size_t a = 0; a < old.size(); ++a)
      for (std::size_t b = a + 1; b < old.size(); ++b) {
        VertexSet members{old[a], old[b]};
        all_cliques(members, common_free(members), 0, options, kLimit);
      }
    for (std::size_t x = 0; x < options.size(); ++x) {
      if (options[x] == old) continue;
      for (std::size_t y = x + 1; y < options.size(); ++y) {
        if (options[y] == old || share_pair(options[x], options[y])) continue;
        take(options[x]);
        take(options[y]);
        cliques_[i] = options[x];
        cliques_.push_back(options[y]);
        return true;
      }
    }
    take(old);
    return false;
  }

  std::size_t s_, k_;
  Graph free_;
  SplitMix64 rng_;
  std::vector<Vertex> by_rank_;
  std::vector<VertexSet> cliques_;
};

}  // namespace

CliquePacking pack_greedy(std::size_t s, std::size_t k, std::uint64_t seed) {
  if (k < 2) throw DomainError("clique size must be at least 2");
  if (s < k) throw DomainError("pack_greedy needs s >= k");
  return GreedyPacker(s, k, seed).run();
}

std::string validate_packing(const CliquePacking& p) {
  if (p.k < 2) return "clique size below 2";
  if (p.cliques.size() > packing_upper_bound(p.s, p.k))
    return "more cliques than floor(C(s,2)/C(k,2))";
  std::vector<std::vector<char>> covered(p.s, std::vector<char>(p.s, 0));
  for (std::size_t i = 0; i < p.cliques.size(); ++i) {
    const auto& c = p.cliques[i];
    if (c.size() != p.k) return "clique " + std::to_string(i) + " has wrong size";
    for (std::size_t a = 0; a < c.size(); ++a) {
      if (c[a] >= p.s) return "clique " + std::to_string(i) + " has label >= s";
      if (a > 0 && c[a - 1] >= c[a])
        return "clique " + std::to_string(i) + " is not strictly increasing";
    }
    for (std::size_t a = 0; a < c.size(); ++a)
      for (std::size_t b = a + 1; b < c.size(); ++b) {
        if (covered[c[a]][c[b]])
          return "pair " + std::to_string(c[a]) + "," + std::to_string(c[b]) +
                 " covered twice";
        covered[c[a]][c[b]] = 1;
      }
  }
  return {};
}

bool is_maximal(const CliquePacking& p) {
  Graph free = Graph::complete(p.s);
  for (const auto& c : p.cliques)
    for (std::size_t a = 0; a < c.size(); ++a)
      for (std::size_t b = a + 1; b < c.size(); ++b) free.remove_edge(c[a], c[b]);
  return count_cliques(free, p.k) == 0;
}

CliquePacking read_packing(std::istream& in) {
  detail::LineReader reader(in, "packing");
  const auto header = reader.next_fields(4);
  CliquePacking p;
  p.s = detail::parse_uint(header[0], "ground size");
  p.k = detail::parse_uint(header[1], "clique size");
  const std::size_t count = detail::parse_uint(header[2], "clique count");
  if (header[3] == "exact")
    p.mode = PackingMode::exact;
  else if (header[3] == "greedy")
    p.mode = PackingMode::greedy;
  else
    throw FormatError(reader.where() + ": unknown mode '" + header[3] + "'");
  for (std::size_t i = 0; i < count; ++i) {
    const auto fields = reader.next_fields(p.k);
    VertexSet c;
    for (const auto& f : fields)
      c.push_back(static_cast<Vertex>(detail::parse_uint(f, "vertex")));
    p.cliques.push_back(std::move(c));
  }
  reader.expect_end();
  if (auto problem = validate_packing(p); !problem.empty())
    throw FormatError("packing: " + problem);
  p.delta_report = 1.0 - rodl_ratio(p);
  return p;
}

void write_packing(std::ostream& out, const CliquePacking& p) {
  out << p.s << ' ' << p.k << ' ' << p.cliques.size() << ' '
      << to_string(p.mode) << '\n';
  for (const auto& c : p.cliques) {
    for (std::size_t i = 0; i < c.size(); ++i) out << (i ? " " : "") << c[i];
    out << '\n';
  }
}

}  // namespace ramsey_forge
