#include "ramsey_forge/bounds.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <cmath>
#include <fstream>
#include <istream>
#include <limits>
#include <mutex>
#include <numeric>
#include <ostream>
#include <sstream>
#include <string>

#include "ramsey_forge/errors.hpp"
#include "ramsey_forge/parallel.hpp"
#include "text_util.hpp"

namespace ramsey_forge {

namespace detail {
extern const char* const kClassicalRamseyCsv;
}

std::string to_string(ProbabilitySource source) {
  switch (source) {
    case ProbabilitySource::exact:
      return "exact";
    case ProbabilitySource::montecarlo:
      return "montecarlo";
    case ProbabilitySource::asymptotic:
      return "asymptotic";
  }
  return "?";
}

ProbabilitySource parse_probability_source(const std::string& name) {
  if (name == "exact") return ProbabilitySource::exact;
  if (name == "montecarlo") return ProbabilitySource::montecarlo;
  if (name == "asymptotic") return ProbabilitySource::asymptotic;
  throw DomainError("unknown probability source '" + name +
                    "' (exact|montecarlo|asymptotic)");
}

double AvoidanceProbability::value() const { return std::exp2(value_log2); }

Rational AvoidanceProbability::exact_value() const {
  if (!count) throw DomainError("exact value requires exact mode");
  return Rational(BigInt(*count), BigInt(1) << (k * (k - 1) / 2));
}

namespace {

std::size_t pair_count(std::size_t k) { return k * (k - 1) / 2; }

// Number of t-cliques inside `cand` for a graph on at most 64 vertices.
std::uint64_t cliques_in(const std::uint64_t* adj, std::uint64_t cand,
                         std::size_t t) {
  if (t == 0) return 1;
  if (t == 1) return static_cast<std::uint64_t>(std::popcount(cand));
  std::uint64_t total = 0;
  for (std::uint64_t c = cand; c; c &= c - 1) {
    const int v = std::countr_zero(c);
    const std::uint64_t higher = v == 63 ? 0 : cand & (~std::uint64_t{0} << (v + 1));
    total += cliques_in(adj, higher & adj[v], t - 1);
  }
  return total;
}

bool has_clique(const std::uint64_t* adj, std::uint64_t cand, std::size_t t) {
  if (t == 0) return true;
  if (static_cast<std::size_t>(std::popcount(cand)) < t) return false;
  for (std::uint64_t c = cand; c; c &= c - 1) {
    const int v = std::countr_zero(c);
    const std::uint64_t higher = v == 63 ? 0 : cand & (~std::uint64_t{0} << (v + 1));
    if (has_clique(adj, higher & adj[v], t - 1)) return true;
  }
  return false;
}

std::uint64_t all_vertices(std::size_t k) {
  return k >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1;
}

// Counts K_l-free graphs among the 2^lo graphs whose high pairs are fixed
// by `high`, visiting the low pairs in Gray-code order.
std::uint64_t count_free_block(std::size_t k, std::size_t l,
                               const std::vector<std::pair<int, int>>& pairs,
                               std::size_t lo, std::uint64_t high) {
  std::uint64_t adj[8] = {};
  for (std::size_t e = lo; e < pairs.size(); ++e)
    if ((high >> (e - lo)) & 1u) {
      auto [u, v] = pairs[e];
      adj[u] |= std::uint64_t{1} << v;
      adj[v] |= std::uint64_t{1} << u;
    }
  std::uint64_t cliques = cliques_in(adj, all_vertices(k), l);
  std::uint64_t free = cliques == 0 ? 1 : 0;
  const std::uint64_t steps = std::uint64_t{1} << lo;
  for (std::uint64_t i = 1; i < steps; ++i) {
    auto [u, v] = pairs[static_cast<std::size_t>(std::countr_zero(i))];
    const std::uint64_t bit_v = std::uint64_t{1} << v;
    // K_l through (u,v) = (l-2)-cliques in the common neighbourhood.
    const std::uint64_t through =
        l == 3 ? static_cast<std::uint64_t>(std::popcount(adj[u] & adj[v]))
               : cliques_in(adj, adj[u] & adj[v], l - 2);
    if (adj[u] & bit_v) {
      cliques -= through;
    } else {
      cliques += through;
    }
    adj[u] ^= bit_v;
    adj[v] ^= std::uint64_t{1} << u;
    free += cliques == 0 ? 1 : 0;
  }
  return free;
}

std::mutex g_memo_mutex;
std::map<std::pair<std::size_t, std::size_t>, std::uint64_t> g_memo;

}  // namespace

AvoidanceProbability avoidance_probability_exact(std::size_t k, std::size_t l,
                                                 unsigned threads) {
  if (l < 2) throw DomainError("forbidden clique size must be at least 2");
  if (k > kExactAvoidanceCap)
    throw DomainError("exact enumeration covers k <= " +
                      std::to_string(kExactAvoidanceCap) +
                      "; use montecarlo or asymptotic mode for k = " +
                      std::to_string(k));
  AvoidanceProbability result;
  result.k = k;
  result.l = l;
  result.mode = ProbabilitySource::exact;
  const std::size_t m = pair_count(k);

  std::uint64_t count = 0;
  {
    std::lock_guard lock(g_memo_mutex);
    if (auto it = g_memo.find({k, l}); it != g_memo.end()) count = it->second;
  }
  if (count == 0) {
    if (l > k) {
      count = std::uint64_t{1} << m;
    } else {
      std::vector<std::pair<int, int>> pairs;
      for (int v = 1; v < static_cast<int>(k); ++v)
        for (int u = 0; u < v; ++u) pairs.emplace_back(u, v);
      const std::size_t hi = m > 12 ? 8 : 0;
      const std::size_t lo = m - hi;
      const std::size_t blocks = std::size_t{1} << hi;
      std::vector<std::uint64_t> partial(blocks, 0);
      parallel_chunks(blocks, threads,
                      [&](std::size_t begin, std::size_t end, unsigned) {
                        for (std::size_t b = begin; b < end; ++b)
                          partial[b] = count_free_block(k, l, pairs, lo, b);
                      });
      count = std::accumulate(partial.begin(), partial.end(), std::uint64_t{0});
    }
    std::lock_guard lock(g_memo_mutex);
    g_memo[{k, l}] = count;
  }
  result.count = count;
  result.value_log2 = std::log2(static_cast<double>(count)) -
                      static_cast<double>(m);
  return result;
}

AvoidanceProbability avoidance_probability_montecarlo(std::size_t k,
                                                      std::size_t l,
                                                      std::uint64_t samples,
                                                      std::uint64_t seed,
                                                      unsigned threads) {
  if (l < 2) throw DomainError("forbidden clique size must be at least 2");
  if (samples == 0) throw DomainError("samples must be at least 1");
  if (k > 64) throw DomainError("Monte Carlo avoidance supports k <= 64");
  const std::size_t m = pair_count(k);
  const std::size_t words = (m + 63) / 64;
  const unsigned workers = resolve_threads(threads);
  std::vector<std::uint64_t> partial(workers, 0);
  parallel_chunks(samples, workers,
                  [&](std::size_t begin, std::size_t end, unsigned w) {
                    std::vector<std::uint64_t> adj(std::max<std::size_t>(k, 1));
                    std::uint64_t hits = 0;
                    for (std::size_t i = begin; i < end; ++i) {
                      std::fill(adj.begin(), adj.end(), 0);
                      std::size_t e = 0;
                      std::uint64_t word = 0;
                      for (std::size_t v = 1; v < k; ++v)
                        for (std::size_t u = 0; u < v; ++u, ++e) {
                          if ((e & 63) == 0)
                            word = counter_hash(seed, i * words + (e >> 6));
                          if ((word >> (e & 63)) & 1u) {
                            adj[u] |= std::uint64_t{1} << v;
                            adj[v] |= std::uint64_t{1} << u;
                          }
                        }
                      if (!has_clique(adj.data(), all_vertices(k), l)) ++hits;
                    }
                    partial[w] = hits;
                  });
  AvoidanceProbability result;
  result.k = k;
  result.l = l;
  result.mode = ProbabilitySource::montecarlo;
  result.samples = samples;
  result.hits = std::accumulate(partial.begin(), partial.end(), std::uint64_t{0});
  const double p = static_cast<double>(result.hits) / static_cast<double>(samples);
  result.value_log2 = result.hits == 0 ? -std::numeric_limits<double>::infinity()
                                       : std::log2(p);
  result.standard_error = std::sqrt(p * (1 - p) / static_cast<double>(samples));
  return result;
}

double avoidance_exponent_asymptotic(std::size_t k, std::size_t l) {
  if (l < 3) throw DomainError("asymptotic form needs l >= 3");
  const double kd = static_cast<double>(k);
  return kd * kd / 2.0 * (1.0 - 1.0 / static_cast<double>(l - 1)) -
         kd * (kd - 1.0) / 2.0;
}

double lower_bound_exponent(std::size_t d, std::size_t k,
                            const ExponentOptions& options) {
  if (d < 2) throw DomainError("dimension must be at least 2");
  const std::size_t l = d / 2 + 1;
  if (k < l)
    throw DomainError("k = " + std::to_string(k) + " must be at least l = " +
                      std::to_string(l));
  double log2p = 0.0;
  switch (options.source) {
    case ProbabilitySource::exact:
      log2p = avoidance_probability_exact(k, l, options.threads).value_log2;
      break;
    case ProbabilitySource::montecarlo: {
      const auto p = avoidance_probability_montecarlo(
          k, l, options.samples, options.seed, options.threads);
      if (p.hits == 0)
        throw DomainError("P(" + std::to_string(k) + "," + std::to_string(l) +
                          ") unavailable: no K_l-free graph in " +
                          std::to_string(options.samples) + " samples");
      log2p = p.value_log2;
      break;
    }
    case ProbabilitySource::asymptotic:
      log2p = avoidance_exponent_asymptotic(k, l);
      break;
  }
  return -log2p / static_cast<double>(k * (k - 1));
}

double lower_bound_exponent_limit(std::size_t d) {
  if (d < 2) throw DomainError("dimension must be at least 2");
  return 1.0 / (2.0 * static_cast<double>(d / 2));
}

std::vector<PriorBound> prior_bound_exponents() {
  std::vector<PriorBound> out;
  out.push_back({2, 0.5, "2^(s/2 - c s^(1/3) ln s)"});
  out.push_back({3, 0.5, "2^(s/2 - c beta(s) s^(1/2) ln s), beta(s) = 2^(alpha(s)^2)"});
  const double c[] = {0.04413, 0.01833, 0.00806, 0.00352, 0.00165};
  for (std::size_t d = 4; d <= 8; ++d) {
    out.push_back({d, c[d - 4] / 2.0,
                   "(1+o(1)) k 2^(k/2) / (e 2^((2^(d-1)-1)/2^d)), k = [c_d s], "
                   "c_d = " + detail::format_fixed(c[d - 4], 5)});
  }
  return out;
}

const RamseyTable& RamseyTable::classical() {
  static const RamseyTable table = [] {
    std::istringstream in(detail::kClassicalRamseyCsv);
    return read_csv(in);
  }();
  return table;
}

namespace {

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream ss(line);
  while (std::getline(ss, field, ',')) fields.push_back(field);
  if (!line.empty() && line.back() == ',') fields.emplace_back();
  return fields;
}

}  // namespace

RamseyTable RamseyTable::read_csv(std::istream& in) {
  RamseyTable table;
  std::string line;
  std::size_t line_no = 0;
  bool header = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const std::string where = "ramsey table line " + std::to_string(line_no);
    if (!header) {
      if (line != "s,t,lower,upper,source")
        throw FormatError(where + ": expected header s,t,lower,upper,source");
      header = true;
      continue;
    }
    const auto f = split_csv(line);
    if (f.size() != 5) throw FormatError(where + ": expected 5 fields");
    const auto s = detail::parse_uint(f[0], "s");
    const auto t = detail::parse_uint(f[1], "t");
    Entry e{detail::parse_uint(f[2], "lower"), detail::parse_uint(f[3], "upper"),
            f[4]};
    if (e.lower > e.upper) throw FormatError(where + ": lower exceeds upper");
    if (e.source.empty()) throw FormatError(where + ": source is required");
    if (auto existing = table.lookup(s, t); existing && !(*existing == e))
      throw FormatError(where + ": conflicts with an earlier entry");
    table.set(s, t, std::move(e));
  }
  if (!header) throw FormatError("ramsey table: missing header");
  return table;
}

RamseyTable RamseyTable::load_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path);
  return read_csv(in);
}

void RamseyTable::write_csv(std::ostream& out) const {
  out << "s,t,lower,upper,source\n";
  for (const auto& [key, e] : entries_)
    out << key.first << ',' << key.second << ',' << e.lower << ',' << e.upper
        << ',' << e.source << '\n';
}

void RamseyTable::set(std::size_t s, std::size_t t, Entry e) {
  entries_[{std::min(s, t), std::max(s, t)}] = std::move(e);
}

std::optional<RamseyTable::Entry> RamseyTable::lookup(std::size_t s,
                                                      std::size_t t) const {
  auto it = entries_.find({std::min(s, t), std::max(s, t)});
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

BoundReport upper_bound(std::size_t s, std::size_t d, const RamseyTable& table,
                        bool allow_asymptotic) {
  if (d < 2) throw DomainError("upper bound needs d >= 2 so that [d/2] >= 1");
  if (s < 1) throw DomainError("s must be at least 1");
  const std::size_t h = d / 2;
  const std::size_t t = (s + h - 1) / h;
  BoundReport r;
  r.s = s;
  r.d = d;
  r.lower_log2 = std::numeric_limits<double>::quiet_NaN();
  if (auto e = table.lookup(t, t)) {
    r.upper_value = 2 * h * e->upper;
    r.upper_log2 = std::log2(static_cast<double>(*r.upper_value));
    r.upper_method = "2[d/2] R(" + std::to_string(t) + "," + std::to_string(t) +
                     ") with R <= " + std::to_string(e->upper) + " (" +
                     e->source + ")";
  } else if (allow_asymptotic) {
    r.upper_log2 = 2.0 * static_cast<double>(s) / static_cast<double>(h);
    r.upper_method = "asymptotic 4^(s/[d/2]) (1+o(1)) omitted";
  } else {
    throw DomainError("Ramsey table has no entry for R(" + std::to_string(t) +
                      "," + std::to_string(t) + ")");
  }
  return r;
}

BoundReport bound_report(std::size_t s, std::size_t d, std::size_t k,
                         const RamseyTable& table,
                         const ExponentOptions& options) {
  BoundReport r = upper_bound(s, d, table, true);
  r.k_used = k;
  r.epsilon_used = clique_threshold_epsilon(d);
  r.lower_log2 = lower_bound_exponent(d, k, options) * static_cast<double>(s);
  r.lower_method = "e(k) s with P(k,[d/2]+1) " + to_string(options.source) +
                   ", o(1) omitted";
  return r;
}

double clique_threshold_epsilon(std::size_t d) {
  if (d < 2) throw DomainError("dimension must be at least 2");
  return 1.0 / std::pow(3.0, static_cast<double>(d / 2));
}

double clique_threshold(std::size_t n, std::size_t d) {
  if (n < 1) throw DomainError("n must be at least 1");
  const double r = static_cast<double>(d / 2 + 1);
  return std::pow(static_cast<double>(n), r - clique_threshold_epsilon(d));
}

}  // namespace ramsey_forge
