#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "ramsey_forge/graph.hpp"

namespace ramsey_forge {

inline constexpr double kDefaultTolerance = 1e-9;

// Finite point set in R^d, stored row-major.
class PointConfig {
 public:
  PointConfig() = default;
  PointConfig(std::size_t dim, std::size_t count)
      : dim_(dim), coords_(dim * count, 0.0) {}

  std::size_t dim() const noexcept { return dim_; }
  std::size_t size() const noexcept {
    return dim_ == 0 ? 0 : coords_.size() / dim_;
  }

  std::span<const double> point(std::size_t i) const {
    return {coords_.data() + i * dim_, dim_};
  }
  std::span<double> point(std::size_t i) {
    return {coords_.data() + i * dim_, dim_};
  }

  double distance(std::size_t i, std::size_t j) const;

  // Points restricted to the given indices, in the given order.
  PointConfig subset(std::span<const Vertex> indices) const;

  friend bool operator==(const PointConfig&, const PointConfig&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<double> coords_;
};

// Coordinates claimed to realize `graph` as a distance graph: every edge
// has unit length within `tolerance`.
struct RealizationCertificate {
  PointConfig config;
  Graph graph;
  double tolerance = kDefaultTolerance;
};

struct EdgeViolation {
  Vertex u = 0;
  Vertex v = 0;
  double distance = 0.0;
};

struct VerificationReport {
  bool ok = true;
  std::vector<EdgeViolation> non_unit_edges;
  // Point pairs closer than the tolerance.
  std::vector<EdgeViolation> coincident_points;
};

// Part i (0-based) goes on the circle of radius sqrt(1/2) in coordinate
// plane (2i, 2i+1), so every cross-part distance is exactly 1 up to
// rounding. Within a part the m points sit at angles
//   i*pi/7 + j*pi/(2m),  j = 0..m-1,
// an arc narrower than a quarter turn, so no intra-part pair is at unit
// distance. Requires parts <= floor(d/2) and d >= 2.
RealizationCertificate embed_multipartite(
    std::span<const std::size_t> part_sizes, std::size_t dim,
    double tolerance = kDefaultTolerance);

// Checks edge lengths and point distinctness. Non-edges are unconstrained.
// `dim` must match the configuration's dimension (DomainError otherwise);
// pass 0 to skip that check.
VerificationReport verify_certificate(const RealizationCertificate& cert,
                                      std::size_t dim = 0);

// True iff the certified graph has no K_{3,...,3} with floor(d/2)+1 parts.
// A distance graph in R^d never contains one, so false on a verified
// certificate means a bug upstream. Throws DomainError if the certificate
// does not verify.
bool forbidden_subgraph_audit(const RealizationCertificate& cert,
                              std::size_t dim);

// Certificate restricted to a vertex subset, relabeled in increasing order.
RealizationCertificate restrict_certificate(const RealizationCertificate& cert,
                                            std::span<const Vertex> subset);

// All pairs at distance 1 within tolerance.
Graph unit_distance_graph(const PointConfig& config, double tolerance);

// Point file: "n d" then n lines of d coordinates (17 significant digits).
PointConfig read_points(std::istream& in);
void write_points(std::ostream& out, const PointConfig& config);

// Certificate file:
//   certificate
//   tolerance <t>
//   <point file>
//   <edge-list file>
RealizationCertificate read_certificate(std::istream& in);
void write_certificate(std::ostream& out, const RealizationCertificate& cert);
RealizationCertificate load_certificate(const std::string& path);
void save_certificate(const std::string& path,
                      const RealizationCertificate& cert);

}  // namespace ramsey_forge
