#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "ramsey_forge/graph.hpp"

namespace ramsey_forge {

enum class PackingMode { exact, greedy };

std::string to_string(PackingMode mode);

// Pairwise edge-disjoint k-cliques on the ground set {0, ..., s-1}: any two
// members share at most one vertex.
struct CliquePacking {
  std::size_t s = 0;
  std::size_t k = 0;
  std::vector<VertexSet> cliques;  // each increasing
  PackingMode mode = PackingMode::exact;
  // 1 - rodl_ratio: shortfall against the asymptote s^2/(k(k-1)).
  double delta_report = 0.0;

  std::size_t size() const noexcept { return cliques.size(); }
};

// floor(C(s,2) / C(k,2)).
std::uint64_t packing_upper_bound(std::size_t s, std::size_t k);

// Largest desk-scale ground set accepted by pack_exact.
std::size_t pack_exact_cap(std::size_t k);

// Maximum packing by branch and bound: branches on the smallest undecided
// pair (cover it with a clique, or leave it uncovered), prunes with degree
// and leave-parity bounds, and treats still-untouched vertices as
// interchangeable. Deterministic. Throws DomainError beyond pack_exact_cap.
CliquePacking pack_exact(std::size_t s, std::size_t k);

// Maximal packing from a seed-shuffled greedy pass followed by 1-out-2-in
// swaps until no swap applies or 10*s^2 swap attempts have been made.
CliquePacking pack_greedy(std::size_t s, std::size_t k, std::uint64_t seed);

// |cliques| * k(k-1) / s^2.
double rodl_ratio(const CliquePacking& p);

// Empty string if the packing is well formed, otherwise the first problem.
std::string validate_packing(const CliquePacking& p);

// No k-clique of K_s is edge-disjoint from every member.
bool is_maximal(const CliquePacking& p);

// Packing file: "s k count mode" then one line of k labels per clique.
CliquePacking read_packing(std::istream& in);
void write_packing(std::ostream& out, const CliquePacking& p);

}  // namespace ramsey_forge
