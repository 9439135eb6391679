// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Usage: acceptance <path-to-ramsey-forge-cli>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>

#include "oracles.hpp"
#include "ramsey_forge/bounds.hpp"
#include "ramsey_forge/geometry.hpp"
#include "ramsey_forge/graph.hpp"
#include "ramsey_forge/packing.hpp"
#include "ramsey_forge/prob_method.hpp"
#include "ramsey_forge/rng.hpp"

using namespace ramsey_forge;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* pattern, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, pattern, x);
  return buf;
}

std::string cli_path;

// Runs the CLI, returning stdout and the exit status.
std::pair<std::string, int> run_cli(const std::string& args) {
  const std::string cmd = "'" + cli_path + "' " + args + " 2>/dev/null";
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(cmd.c_str(), "r"), pclose);
  if (!pipe) return {"", -1};
  std::string out;
  char buf[4096];
  std::size_t got;
  while ((got = std::fread(buf, 1, sizeof buf, pipe.get())) > 0) out.append(buf, got);
  const int status = pclose(pipe.release());
  return {out, WIFEXITED(status) ? WEXITSTATUS(status) : -1};
}

Outcome avoidance_constants() {
  const auto start = Clock::now();
  const auto p33 = avoidance_probability_exact(3, 3).exact_value();
  const auto p43 = avoidance_probability_exact(4, 3).exact_value();
  const double t = seconds_since(start);
  return {p33 == Rational(7, 8) && p43 == Rational(41, 64) && t < 1.0,
          "P(3,3)=" + to_string(p33) + " P(4,3)=" + to_string(p43) + " in " +
              fmt("%.3fs", t)};
}

Outcome d4_exponents() {
  const double e3 = lower_bound_exponent(4, 3);
  const double e4 = lower_bound_exponent(4, 4);
  const bool ok = std::abs(e3 - std::log2(8.0 / 7.0) / 6) <= 1e-6 &&
                  std::abs(e4 - std::log2(64.0 / 41.0) / 12) <= 1e-6 &&
                  std::abs(e3 - 0.0321075) <= 1e-6 &&
                  std::abs(e4 - 0.0535373) <= 1e-6;
  return {ok, "e(3)=" + fmt("%.7f", e3) + " e(4)=" + fmt("%.7f", e4)};
}

Outcome expectation_oracle() {
  const auto start = Clock::now();
  std::size_t instances = 0, equal = 0;
  for (std::size_t s = 5; s <= 8; ++s) {
    for (std::size_t k = 3; k <= 5; ++k) {
      if (k > s) continue;
      const auto packing = pack_exact(s, k);
      std::vector<Graph> hosts = {Graph::complete(s), Graph::cycle(s),
                                  complement(Graph::cycle(s)),
                                  sample_gnp_half(s, 1000 + s * 10 + k),
                                  sample_gnp_half(s, 2000 + s * 10 + k)};
      if (s == 5) hosts.push_back(Graph(s));
      for (const auto& h : hosts)
        for (std::size_t l = 3; l <= k; ++l) {
          ++instances;
          equal += exact_expectation(h, packing, l) ==
                   brute_force_expectation(h, packing, l);
        }
    }
  }
  const double t = seconds_since(start);
  return {instances >= 50 && equal == instances && t < 300.0,
          std::to_string(equal) + "/" + std::to_string(instances) +
              " instances equal in " + fmt("%.1fs", t)};
}

Outcome monte_carlo_consistency() {
  const auto h = sample_gnp_half(30, 5);
  const auto packing = pack_greedy(30, 4, 5);
  int within = 0;
  double worst = 0.0;
  for (std::uint64_t run = 0; run < 100; ++run) {
    const auto r = monte_carlo_expectation(h, packing, 3, 100000,
                                           counter_hash(kDefaultSeed, run));
    const double z = std::abs(r.empirical_mean - to_double(r.exact_expectation)) /
                     r.standard_error();
    within += z <= 4.0;
    worst = std::max(worst, z);
  }
  return {within >= 99, std::to_string(within) + "/100 runs within 4 SE, max " +
                            fmt("%.2f", worst) + " SE"};
}

// Random embeddings audited against the forbidden K_{3,...,3}; also tracks
// whether every produced certificate verifies (criterion 6).
bool all_random_certificates_verified = true;

Outcome forbidden_pattern_audit() {
  SplitMix64 rng(kDefaultSeed);
  int passed = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t d = 4 + rng.below(5);
    const std::size_t part_count = 1 + rng.below(d / 2);
    std::vector<std::size_t> parts(part_count);
    for (auto& m : parts) m = 1 + rng.below(6);
    const auto full = embed_multipartite(parts, d);
    VertexSet subset;
    for (Vertex v = 0; v < full.graph.n(); ++v)
      if (rng.below(4) != 0) subset.push_back(v);
    if (subset.empty()) subset.push_back(0);
    const auto cert = restrict_certificate(full, subset);
    const bool verified = verify_certificate(full, d).ok &&
                          verify_certificate(cert, d).ok;
    all_random_certificates_verified = all_random_certificates_verified && verified;
    passed += verified && forbidden_subgraph_audit(cert, d);
  }
  return {passed == 500, std::to_string(passed) + "/500 audits pass"};
}

Outcome geometry() {
  double worst = 0.0;
  bool ok = all_random_certificates_verified;
  for (std::size_t m = 1; m <= 50; ++m) {
    const std::size_t parts[] = {m, m};
    const auto cert = embed_multipartite(parts, 4);
    ok = ok && verify_certificate(cert, 4).ok;
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = m; b < 2 * m; ++b)
        worst = std::max(worst, std::abs(cert.config.distance(a, b) - 1.0));
  }
  return {ok && worst <= 1e-12,
          "max |dist-1| over K_{m,m}, m<=50: " + fmt("%.3g", worst)};
}

Outcome packing_truth() {
  bool ok = pack_exact(7, 3).size() == 7 && pack_exact(6, 3).size() == 4;
  for (std::size_t s = 3; s <= 9; ++s)
    ok = ok && pack_exact(s, 3).size() == oracle::max_packing(s, 3);
  SplitMix64 rng(kDefaultSeed);
  int bad = 0;
  for (int run = 0; run < 10000; ++run) {
    const std::size_t k = 3 + rng.below(4);
    const std::size_t s = k + rng.below(30);
    const auto p = pack_greedy(s, k, rng());
    bad += !validate_packing(p).empty() || p.size() > packing_upper_bound(s, k);
  }
  return {ok && bad == 0, "exact s<=9 matches oracle: " +
                              std::string(ok ? "yes" : "no") +
                              ", greedy violations in 10^4 runs: " +
                              std::to_string(bad)};
}

Outcome rodl_trend() {
  std::vector<double> ratios;
  std::string detail;
  for (std::size_t s : {20u, 40u, 80u, 160u}) {
    ratios.push_back(rodl_ratio(pack_greedy(s, 3, kDefaultSeed)));
    detail += (detail.empty() ? "s=" : " s=") + std::to_string(s) + ":" + fmt("%.4f", ratios.back());
  }
  bool ok = ratios.back() >= 0.85;
  for (std::size_t i = 1; i < ratios.size(); ++i)
    ok = ok && ratios[i] >= ratios[i - 1] - 0.02;
  return {ok, detail};
}

Outcome asymptotic_bridge() {
  const auto start = Clock::now();
  const auto exact = avoidance_probability_exact(8, 3);
  const double t = seconds_since(start);
  const auto mc = avoidance_probability_montecarlo(8, 3, 1'000'000, kDefaultSeed);
  const double gap = std::abs(avoidance_exponent_asymptotic(8, 3) - exact.value_log2);
  const double z = std::abs(mc.value() - exact.value()) / mc.standard_error;
  return {t < 1800.0 && z <= 4.0,
          "exact k=8 in " + fmt("%.2fs", t) + ", MC off by " + fmt("%.2f", z) +
              " sigma, |asymptotic - exact log2| = " + fmt("%.4f", gap)};
}

Outcome upper_bound_and_limit() {
  const auto& table = RamseyTable::classical();
  bool ok = upper_bound(6, 4, table).upper_value == 24u &&
            upper_bound(8, 4, table).upper_value == 72u;
  ExponentOptions opts;
  opts.source = ProbabilitySource::asymptotic;
  for (std::size_t d : {4u, 5u}) {
    double prev = 0.0;
    for (std::size_t k = 3; k <= 1000; ++k) {
      const double e = lower_bound_exponent(d, k, opts);
      ok = ok && std::abs(e - double(k - 2) / (4.0 * double(k - 1))) <= 1e-12 &&
           e > prev && e < 0.25;
      prev = e;
    }
    ok = ok && std::abs(0.25 - prev) < 1e-3 &&
         lower_bound_exponent_limit(d) == 0.25;
  }
  return {ok, "U(6,4)=24, U(8,4)=72, e(k)=(k-2)/(4(k-1)) increasing to 1/4"};
}

Outcome determinism() {
  const std::vector<std::string> commands = {
      "graph sample --n 40 --seed 7",
      "pack greedy --s 60 --k 3",
      "pack exact --s 9 --k 3",
      "embed --parts 3,4,2 --d 6",
      "expect --s 20 --k 3 --l 3 --samples 20000",
      "expect --s 7 --corpus --oracle",
      "bounds lower --d 4 --k 4",
      "bounds sweep --d 6 --kmax 7",
      "bounds avoid --k 7 --l 3 --mode montecarlo --samples 50000",
      "bounds upper --s 8 --d 4",
      "bounds prior",
  };
  int identical = 0;
  for (const auto& c : commands) {
    const auto a = run_cli("--threads 1 " + c);
    const auto b = run_cli("--threads 1 " + c);
    const auto d = run_cli("--threads 4 " + c);
    identical += a.second == 0 && !a.first.empty() && a == b && a == d;
  }
  return {identical == static_cast<int>(commands.size()),
          std::to_string(identical) + "/" + std::to_string(commands.size()) +
              " commands byte-identical across runs and thread counts"};
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: acceptance <ramsey-forge executable>\n";
    return 2;
  }
  cli_path = argv[1];

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"exact avoidance constants 7/8 and 41/64", avoidance_constants},
      {"lower-bound exponents at d=4", d4_exponents},
      {"exact expectation equals permutation oracle", expectation_oracle},
      {"Monte Carlo within 4 SE of exact", monte_carlo_consistency},
      {"forbidden K_{3,...,3} audit on 500 embeddings", forbidden_pattern_audit},
      {"embedding certificates and unit cross distances", geometry},
      {"exact packing truth and greedy soundness", packing_truth},
      {"greedy packing ratio trend", rodl_trend},
      {"k=8 exact enumeration versus Monte Carlo", asymptotic_bridge},
      {"upper bounds and asymptotic exponent identity", upper_bound_and_limit},
      {"CLI determinism", determinism},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    const auto start = Clock::now();
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failures += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << (i + 1) << ": "
              << criteria[i].first << " (" << o.detail << ", "
              << fmt("%.1fs", seconds_since(start)) << ")" << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
