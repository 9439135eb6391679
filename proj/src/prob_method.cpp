#include "ramsey_forge/prob_method.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <string>

#include "ramsey_forge/bounds.hpp"
#include "ramsey_forge/errors.hpp"
#include "ramsey_forge/parallel.hpp"
#include "ramsey_forge/rng.hpp"

namespace ramsey_forge {

BigInt factorial(unsigned n) { return falling_factorial(n, n); }

BigInt falling_factorial(unsigned n, unsigned t) {
  BigInt out = 1;
  for (unsigned i = 0; i < t; ++i) out *= n - i;
  return out;
}

namespace {

void check_arguments(const Graph& h, const CliquePacking& packing,
                     std::size_t l) {
  if (h.n() != packing.s)
    throw DomainError("graph has " + std::to_string(h.n()) +
                      " vertices but the packing ground set has " +
                      std::to_string(packing.s));
  if (l < 2 || l > packing.k)
    throw DomainError("counted clique size l = " + std::to_string(l) +
                      " must satisfy 2 <= l <= k = " +
                      std::to_string(packing.k));
}

void check_permutation(std::span<const Vertex> sigma, std::size_t s) {
  if (sigma.size() != s)
    throw DomainError("permutation has length " + std::to_string(sigma.size()) +
                      ", expected " + std::to_string(s));
  std::vector<char> seen(s, 0);
  for (auto x : sigma) {
    if (x >= s || seen[x]) throw DomainError("sigma is not a permutation");
    seen[x] = 1;
  }
}

// Member index of every covered pair; -1 where uncovered.
std::vector<int> pair_owner(const CliquePacking& packing) {
  std::vector<int> owner(packing.s * packing.s, -1);
  for (std::size_t i = 0; i < packing.cliques.size(); ++i) {
    const auto& c = packing.cliques[i];
    for (auto x : c)
      for (auto y : c)
        if (x != y) owner[x * packing.s + y] = static_cast<int>(i);
  }
  return owner;
}

// Direct evaluation over a precomputed clique list: for each clique, look
// up the member owning the image of its first pair and check every other
// image pair has the same owner.
std::uint64_t stat_from_cliques(const std::vector<VertexSet>& cliques,
                                const std::vector<int>& owner, std::size_t s,
                                std::span<const Vertex> sigma) {
  std::uint64_t hits = 0;
  for (const auto& c : cliques) {
    const int m = owner[sigma[c[0]] * s + sigma[c[1]]];
    if (m < 0) continue;
    bool inside = true;
    for (std::size_t a = 0; a < c.size() && inside; ++a)
      for (std::size_t b = a + 1; b < c.size(); ++b)
        if (owner[sigma[c[a]] * s + sigma[c[b]]] != m) {
          inside = false;
          break;
        }
    if (inside) ++hits;
  }
  return hits;
}

// Fast evaluator for sampling: stat_F equals the sum over members M of the
// l-clique count of h restricted to sigma^{-1}(M). That count is read from
// a table indexed by the induced pair pattern on the k preimage vertices.
class MemberPatternEvaluator {
 public:
  MemberPatternEvaluator(const Graph& h, const CliquePacking& packing,
                         std::size_t l)
      : h_(h), packing_(packing), l_(l), k_(packing.k) {
    const std::size_t pairs = k_ * (k_ - 1) / 2;
    if (pairs <= 21) {
      table_.resize(std::size_t{1} << pairs);
      for (std::size_t mask = 0; mask < table_.size(); ++mask)
        table_[mask] = static_cast<std::uint8_t>(count_in_pattern(mask));
    }
  }

  std::uint64_t evaluate(std::span<const Vertex> inverse) const {
    std::uint64_t total = 0;
    std::vector<Vertex> pre(k_);
    for (const auto& member : packing_.cliques) {
      for (std::size_t i = 0; i < k_; ++i) pre[i] = inverse[member[i]];
      std::size_t mask = 0, bit = 0;
      for (std::size_t a = 0; a < k_; ++a)
        for (std::size_t b = a + 1; b < k_; ++b, ++bit)
          if (h_.has_edge(pre[a], pre[b])) mask |= std::size_t{1} << bit;
      total += table_.empty() ? count_in_pattern(mask) : table_[mask];
    }
    return total;
  }

 private:
  std::uint64_t count_in_pattern(std::size_t mask) const {
    std::vector<std::uint32_t> adj(k_, 0);
    std::size_t bit = 0;
    for (std::size_t a = 0; a < k_; ++a)
      for (std::size_t b = a + 1; b < k_; ++b, ++bit)
        if ((mask >> bit) & 1u) {
          adj[a] |= 1u << b;
          adj[b] |= 1u << a;
        }
    return cliques_in(adj, (k_ >= 32 ? ~0u : (1u << k_) - 1), l_);
  }

  static std::uint64_t cliques_in(const std::vector<std::uint32_t>& adj,
                                  std::uint32_t cand, std::size_t t) {
    if (t == 0) return 1;
    std::uint64_t total = 0;
    for (std::uint32_t c = cand; c; c &= c - 1) {
      const auto v = std::countr_zero(c);
      const std::uint32_t higher = cand & ~((2u << v) - 1);
      total += cliques_in(adj, higher & adj[v], t - 1);
    }
    return total;
  }

  const Graph& h_;
  const CliquePacking& packing_;
  std::size_t l_, k_;
  std::vector<std::uint8_t> table_;
};

}  // namespace

std::uint64_t stat_F(const Graph& h, const CliquePacking& packing,
                     std::span<const Vertex> sigma, std::size_t l) {
  check_arguments(h, packing, l);
  check_permutation(sigma, packing.s);
  return stat_from_cliques(enumerate_cliques(h, l).members, pair_owner(packing),
                           packing.s, sigma);
}

Rational exact_expectation(const Graph& h, const CliquePacking& packing,
                           std::size_t l) {
  check_arguments(h, packing, l);
  const auto s = static_cast<unsigned>(packing.s);
  const BigInt numerator = BigInt(count_cliques(h, l)) *
                           BigInt(packing.cliques.size()) *
                           falling_factorial(static_cast<unsigned>(packing.k),
                                             static_cast<unsigned>(l));
  return Rational(numerator, falling_factorial(s, static_cast<unsigned>(l)));
}

Rational brute_force_expectation(const Graph& h, const CliquePacking& packing,
                                 std::size_t l, unsigned threads) {
  check_arguments(h, packing, l);
  const std::size_t s = packing.s;
  if (s > 9)
    throw DomainError("brute-force expectation enumerates s! permutations; "
                      "s = " + std::to_string(s) + " exceeds the cap of 9");
  if (s == 0) return 0;
  const auto cliques = enumerate_cliques(h, l).members;
  const auto owner = pair_owner(packing);
  // Chunk i holds the permutations with sigma(0) = i.
  std::vector<std::uint64_t> partial(s, 0);
  parallel_chunks(s, threads, [&](std::size_t begin, std::size_t end, unsigned) {
    for (std::size_t first = begin; first < end; ++first) {
      Permutation sigma(s);
      sigma[0] = static_cast<Vertex>(first);
      std::size_t pos = 1;
      for (Vertex v = 0; v < s; ++v)
        if (v != first) sigma[pos++] = v;
      std::uint64_t sum = 0;
      do {
        sum += stat_from_cliques(cliques, owner, s, sigma);
      } while (std::next_permutation(sigma.begin() + 1, sigma.end()));
      partial[first] = sum;
    }
  });
  const std::uint64_t total =
      std::accumulate(partial.begin(), partial.end(), std::uint64_t{0});
  return Rational(BigInt(total), factorial(static_cast<unsigned>(s)));
}

double asymptotic_prediction(const Graph& h, const CliquePacking& packing,
                             std::size_t l) {
  check_arguments(h, packing, l);
  double value = static_cast<double>(count_cliques(h, l));
  for (std::size_t f = packing.k - 2; f + l > packing.k; --f)
    value *= static_cast<double>(f);
  return value / std::pow(static_cast<double>(packing.s),
                          static_cast<double>(l) - 2.0);
}

Permutation sample_permutation(std::size_t s, std::uint64_t seed,
                               std::uint64_t index) {
  Permutation sigma(s);
  std::iota(sigma.begin(), sigma.end(), Vertex{0});
  SplitMix64 rng(counter_hash(seed, index));
  for (std::size_t i = s; i > 1; --i) std::swap(sigma[i - 1], sigma[rng.below(i)]);
  return sigma;
}

double PermutationStatReport::standard_error() const {
  if (samples == 0) return 0.0;
  return std::sqrt(empirical_variance / static_cast<double>(samples));
}

PermutationStatReport monte_carlo_expectation(const Graph& h,
                                              const CliquePacking& packing,
                                              std::size_t l,
                                              std::uint64_t samples,
                                              std::uint64_t seed,
                                              unsigned threads) {
  check_arguments(h, packing, l);
  if (samples == 0) throw DomainError("samples must be at least 1");
  PermutationStatReport report;
  report.s = packing.s;
  report.k = packing.k;
  report.l = l;
  report.exact_expectation = exact_expectation(h, packing, l);
  report.asymptotic_prediction = asymptotic_prediction(h, packing, l);
  report.ratio = report.asymptotic_prediction > 0
                     ? to_double(report.exact_expectation) /
                           report.asymptotic_prediction
                     : 0.0;
  report.samples = samples;

  const MemberPatternEvaluator eval(h, packing, l);
  const unsigned workers = resolve_threads(threads);
  std::vector<unsigned __int128> sum(workers, 0), sum_sq(workers, 0);
  parallel_chunks(samples, workers,
                  [&](std::size_t begin, std::size_t end, unsigned w) {
                    Permutation inverse(packing.s);
                    unsigned __int128 s1 = 0, s2 = 0;
                    for (std::size_t i = begin; i < end; ++i) {
                      const auto sigma = sample_permutation(packing.s, seed, i);
                      for (std::size_t v = 0; v < sigma.size(); ++v)
                        inverse[sigma[v]] = static_cast<Vertex>(v);
                      const std::uint64_t x = eval.evaluate(inverse);
                      s1 += x;
                      s2 += static_cast<unsigned __int128>(x) * x;
                    }
                    sum[w] = s1;
                    sum_sq[w] = s2;
                  });
  unsigned __int128 s1 = 0, s2 = 0;
  for (unsigned w = 0; w < workers; ++w) {
    s1 += sum[w];
    s2 += sum_sq[w];
  }
  // Exact integer moments, then one rational-to-double rounding each.
  report.empirical_mean = to_double(Rational(BigInt(s1), BigInt(samples)));
  if (samples > 1) {
    const BigInt n = samples;
    const BigInt num = n * BigInt(s2) - BigInt(s1) * BigInt(s1);
    report.empirical_variance = to_double(Rational(num, n * (n - 1)));
  }
  return report;
}

std::string report_csv_header() {
  return "s,k,l,exact,prediction,ratio,samples,mean,variance";
}

namespace {
std::string fmt_real(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}
}  // namespace

std::string report_csv_row(const PermutationStatReport& r) {
  return std::to_string(r.s) + "," + std::to_string(r.k) + "," +
         std::to_string(r.l) + "," + to_string(r.exact_expectation) + "," +
         fmt_real(r.asymptotic_prediction) + "," + fmt_real(r.ratio) + "," +
         std::to_string(r.samples) + "," + fmt_real(r.empirical_mean) + "," +
         fmt_real(r.empirical_variance);
}

namespace {

// log2 of sum 2^x over xs.
double log2_sum(const std::vector<double>& xs) {
  const double top = *std::max_element(xs.begin(), xs.end());
  double acc = 0.0;
  for (double x : xs) acc += std::exp2(x - top);
  return top + std::log2(acc);
}

}  // namespace

TailBound tail_probability_bound(std::size_t k, std::uint64_t z,
                                 std::uint64_t a) {
  if (k < 3 || k > 8)
    throw DomainError("tail bound needs 3 <= k <= 8 (exact P(k,3))");
  if (a <= 2 * z)
    throw DomainError("tail bound requires a/2 > z (a = " + std::to_string(a) +
                      ", z = " + std::to_string(z) + ")");
  TailBound t;
  t.k = k;
  t.z = z;
  t.a = a;
  t.miss_probability = avoidance_probability_exact(k, 3).exact_value();
  const double q = to_double(t.miss_probability);
  const double log_q = std::log2(q);
  const double log_p = std::log2(1.0 - q);
  const double ad = static_cast<double>(a);
  const double zd = static_cast<double>(z);
  const double multiplicity = k == 3 ? std::log2(zd + 1) : 2 * std::log2(zd + 1);
  t.bound_log2 = multiplicity + (z > 0 ? zd * std::log2(ad) : 0.0) + ad * log_q;

  // Binomial terms log2(C(a,j) p^j q^(a-j)), j = 0..z.
  std::vector<double> terms;
  double log_choose = 0.0;
  for (std::uint64_t j = 0; j <= z; ++j) {
    if (j > 0)
      log_choose += std::log2(static_cast<double>(a - j + 1)) -
                    std::log2(static_cast<double>(j));
    terms.push_back(log_choose + static_cast<double>(j) * log_p +
                    static_cast<double>(a - j) * log_q);
  }
  if (k == 3) {
    t.exact_log2 = log2_sum(terms);
  } else {
    // sum_{i<=z} sum_{j<=i} T_j = sum_{j<=z} (z - j + 1) T_j
    for (std::uint64_t j = 0; j <= z; ++j)
      terms[j] += std::log2(static_cast<double>(z - j + 1));
    t.exact_log2 = log2_sum(terms);
  }
  return t;
}

std::uint64_t tail_threshold(std::size_t s, std::size_t k, double epsilon,
                             double correction) {
  if (k < 3) throw DomainError("tail threshold needs k >= 3");
  return static_cast<std::uint64_t>(std::floor(
      static_cast<double>(k - 2) *
      std::pow(static_cast<double>(s), 2.0 - epsilon) * correction));
}

TailBound tail_probability_bound(std::size_t s, std::size_t k, double epsilon,
                                 std::uint64_t a, double correction) {
  return tail_probability_bound(k, tail_threshold(s, k, epsilon, correction), a);
}

}  // namespace ramsey_forge
