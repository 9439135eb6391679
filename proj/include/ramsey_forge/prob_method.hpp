#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ramsey_forge/graph.hpp"
#include "ramsey_forge/packing.hpp"
#include "ramsey_forge/rational.hpp"

namespace ramsey_forge {

using Permutation = std::vector<Vertex>;

// Number of l-cliques D of h with sigma(D) inside some member of the
// packing. Requires n(h) = packing.s, 2 <= l <= packing.k and sigma a
// permutation of 0..s-1; DomainError otherwise.
std::uint64_t stat_F(const Graph& h, const CliquePacking& packing,
                     std::span<const Vertex> sigma, std::size_t l);

// cl(h,l) * |packing| * k(k-1)...(k-l+1) * (s-l)! / s!: for each l-clique
// and each member, k(k-1)...(k-l+1) (s-l)! permutations carry the clique
// into the member, and distinct members cannot both contain it.
Rational exact_expectation(const Graph& h, const CliquePacking& packing,
                           std::size_t l);

// Mean of stat_F over all s! permutations; s <= 9.
Rational brute_force_expectation(const Graph& h, const CliquePacking& packing,
                                 std::size_t l, unsigned threads = 1);

// (k-2)(k-3)...(k-l+1) cl(h,l) / s^(l-2).
double asymptotic_prediction(const Graph& h, const CliquePacking& packing,
                             std::size_t l);

// The permutation used as Monte Carlo sample `index`: Fisher-Yates driven
// by a stream seeded with counter_hash(seed, index).
Permutation sample_permutation(std::size_t s, std::uint64_t seed,
                               std::uint64_t index);

struct PermutationStatReport {
  std::size_t s = 0;
  std::size_t k = 0;
  std::size_t l = 0;
  Rational exact_expectation;
  double asymptotic_prediction = 0.0;
  // exact / prediction: the measured 1 + correction factor. 0 when the
  // prediction is 0.
  double ratio = 0.0;
  std::uint64_t samples = 0;
  double empirical_mean = 0.0;
  double empirical_variance = 0.0;  // unbiased; 0 for one sample

  double standard_error() const;
};

PermutationStatReport monte_carlo_expectation(const Graph& h,
                                              const CliquePacking& packing,
                                              std::size_t l,
                                              std::uint64_t samples,
                                              std::uint64_t seed,
                                              unsigned threads = 1);

// "s,k,l,exact,prediction,ratio,samples,mean,variance"
std::string report_csv_header();
std::string report_csv_row(const PermutationStatReport& r);

// Probability that at most z members of a packing of size a are hit, where
// members are hit independently (their pair sets are disjoint and pairs are
// independent in G(n,1/2)) and a member misses with probability
// q = P(k,3), the chance that G(k,1/2) is triangle-free (7/8 for k = 3,
// 41/64 for k = 4).
struct TailBound {
  std::size_t k = 0;
  std::uint64_t z = 0;
  std::uint64_t a = 0;
  Rational miss_probability;
  // k = 3:  log2((z+1) a^z q^a)
  // k >= 4: log2((z+1)^2 a^z q^a)
  double bound_log2 = 0.0;
  // k = 3:  log2(sum_{i<=z} C(a,i) p^i q^(a-i))
  // k >= 4: log2(sum_{i<=z} sum_{j<=i} C(a,j) p^j q^(a-j)), p = 1 - q
  double exact_log2 = 0.0;
};

// Requires 3 <= k <= 8 and a > 2z.
TailBound tail_probability_bound(std::size_t k, std::uint64_t z,
                                 std::uint64_t a);

// z = floor((k-2) * s^(2-epsilon) * correction).
std::uint64_t tail_threshold(std::size_t s, std::size_t k, double epsilon,
                             double correction = 1.0);

TailBound tail_probability_bound(std::size_t s, std::size_t k, double epsilon,
                                 std::uint64_t a, double correction = 1.0);

}  // namespace ramsey_forge
