#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ramsey_forge/rational.hpp"
#include "ramsey_forge/rng.hpp"

namespace ramsey_forge {

enum class ProbabilitySource { exact, montecarlo, asymptotic };

std::string to_string(ProbabilitySource source);
ProbabilitySource parse_probability_source(const std::string& name);

// P(k,l): probability that G(k,1/2) has no K_l.
struct AvoidanceProbability {
  std::size_t k = 0;
  std::size_t l = 0;
  ProbabilitySource mode = ProbabilitySource::exact;
  double value_log2 = 0.0;
  // exact: number of K_l-free labeled graphs on k vertices.
  std::optional<std::uint64_t> count;
  // montecarlo: sample size, hits, and binomial standard error of the
  // estimated probability.
  std::uint64_t samples = 0;
  std::uint64_t hits = 0;
  double standard_error = 0.0;

  double value() const;
  // count / 2^C(k,2); exact mode only.
  Rational exact_value() const;
};

inline constexpr std::size_t kExactAvoidanceCap = 8;

// Visits all 2^C(k,2) labeled graphs in Gray-code order, updating the K_l
// count incrementally as each pair toggles. k <= 8. Results are memoized.
AvoidanceProbability avoidance_probability_exact(std::size_t k, std::size_t l,
                                                 unsigned threads = 1);

// Fraction of sampled G(k,1/2) without K_l. Only informative while
// P(k,l) >> 1/samples. Sample i draws its pairs from counter_hash(seed, .).
AvoidanceProbability avoidance_probability_montecarlo(std::size_t k,
                                                      std::size_t l,
                                                      std::uint64_t samples,
                                                      std::uint64_t seed,
                                                      unsigned threads = 1);

// (k^2/2)(1 - 1/(l-1)) - C(k,2): the leading-order log2 P(k,l) from the
// K_l-free graph count, with an uncontrolled o(k^2) error. l >= 3.
double avoidance_exponent_asymptotic(std::size_t k, std::size_t l);

struct ExponentOptions {
  ProbabilitySource source = ProbabilitySource::exact;
  std::uint64_t samples = 1'000'000;
  std::uint64_t seed = kDefaultSeed;
  unsigned threads = 1;
};

// e(k) = -log2 P(k,l) / (k(k-1)) with l = floor(d/2)+1, so that
// R_D(s,s,d) >= 2^(e(k) s (1+o(1))). Requires d >= 2 and k >= l.
double lower_bound_exponent(std::size_t d, std::size_t k,
                            const ExponentOptions& options = {});

// 1 / (2 floor(d/2)): the limit of e(k) as k grows.
double lower_bound_exponent_limit(std::size_t d);

struct PriorBound {
  std::size_t d = 0;
  double exponent = 0.0;  // leading coefficient of s in log2 R_D(s,s,d)
  std::string form;
};

// d = 2, 3: exponent 1/2 with the stated correction terms;
// d = 4..8: c_d / 2 from the k 2^(k/2) shape with k = [c_d s].
std::vector<PriorBound> prior_bound_exponents();

// Classical two-color Ramsey numbers with literature bounds.
class RamseyTable {
 public:
  struct Entry {
    std::uint64_t lower = 0;
    std::uint64_t upper = 0;
    std::string source;
    friend bool operator==(const Entry&, const Entry&) = default;
  };

  // Table shipped with the library (data/ramsey_table.csv).
  static const RamseyTable& classical();

  // CSV with header "s,t,lower,upper,source"; symmetric duplicates must
  // agree. Throws FormatError.
  static RamseyTable read_csv(std::istream& in);
  static RamseyTable load_csv(const std::string& path);
  void write_csv(std::ostream& out) const;

  void set(std::size_t s, std::size_t t, Entry e);
  std::optional<Entry> lookup(std::size_t s, std::size_t t) const;
  std::size_t size() const noexcept { return entries_.size(); }

  friend bool operator==(const RamseyTable&, const RamseyTable&) = default;

 private:
  // Keyed by (min(s,t), max(s,t)).
  std::map<std::pair<std::size_t, std::size_t>, Entry> entries_;
};

struct BoundReport {
  std::size_t s = 0;
  std::size_t d = 0;
  double lower_log2 = 0.0;  // NaN when not computed
  double upper_log2 = 0.0;  // NaN when not computed
  std::optional<std::uint64_t> upper_value;
  std::string lower_method;
  std::string upper_method;
  std::size_t k_used = 0;
  double epsilon_used = 0.0;
};

// 2 floor(d/2) R(t,t) with t = ceil(s / floor(d/2)), using the table's upper
// value. Without a table entry, falls back to the flagged asymptotic form
// log2 <= 2s/floor(d/2) if allowed, else throws DomainError.
BoundReport upper_bound(std::size_t s, std::size_t d, const RamseyTable& table,
                        bool allow_asymptotic = false);

// Lower estimate e(k) s next to the upper bound for the same (s, d).
BoundReport bound_report(std::size_t s, std::size_t d, std::size_t k,
                         const RamseyTable& table,
                         const ExponentOptions& options = {});

// n^(r - eps) with r = floor(d/2)+1 and eps = 1/3^floor(d/2).
double clique_threshold(std::size_t n, std::size_t d);
double clique_threshold_epsilon(std::size_t d);

}  // namespace ramsey_forge
