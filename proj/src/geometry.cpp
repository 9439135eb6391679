#include "ramsey_forge/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <numbers>
#include <ostream>
#include <stdexcept>
#include <string>

#include "ramsey_forge/errors.hpp"
#include "text_util.hpp"

namespace ramsey_forge {

double PointConfig::distance(std::size_t i, std::size_t j) const {
  const auto a = point(i);
  const auto b = point(j);
  double sum = 0.0;
  for (std::size_t c = 0; c < dim_; ++c) {
    const double diff = a[c] - b[c];
    sum += diff * diff;
  }
  return std::sqrt(sum);
}

PointConfig PointConfig::subset(std::span<const Vertex> indices) const {
  PointConfig out(dim_, indices.size());
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (indices[i] >= size())
      throw std::out_of_range("point index " + std::to_string(indices[i]) +
                              " out of range");
    const auto src = point(indices[i]);
    std::copy(src.begin(), src.end(), out.point(i).begin());
  }
  return out;
}

RealizationCertificate embed_multipartite(
    std::span<const std::size_t> part_sizes, std::size_t dim,
    double tolerance) {
  if (dim < 2) throw DomainError("dimension must be at least 2");
  const std::size_t cap = dim / 2;
  if (part_sizes.size() > cap)
    throw DomainError("parts exceed [d/2]: " +
                      std::to_string(part_sizes.size()) + " parts, but d = " +
                      std::to_string(dim) + " allows at most " +
                      std::to_string(cap));
  if (tolerance < 0) throw DomainError("tolerance must be nonnegative");
  std::size_t n = 0;
  for (auto m : part_sizes) {
    if (m == 0) throw DomainError("part sizes must be positive");
    n += m;
  }

  const double radius = std::sqrt(0.5);
  RealizationCertificate cert{PointConfig(dim, n),
                              Graph::complete_multipartite(part_sizes),
                              tolerance};
  std::size_t next = 0;
  for (std::size_t part = 0; part < part_sizes.size(); ++part) {
    const std::size_t m = part_sizes[part];
    const double offset = static_cast<double>(part) * std::numbers::pi / 7.0;
    const double step = std::numbers::pi / (2.0 * static_cast<double>(m));
    for (std::size_t j = 0; j < m; ++j, ++next) {
      const double angle = offset + static_cast<double>(j) * step;
      auto p = cert.config.point(next);
      p[2 * part] = radius * std::cos(angle);
      p[2 * part + 1] = radius * std::sin(angle);
    }
  }

  // Intra-part pairs are non-edges; none may land on unit distance.
  std::size_t first = 0;
  for (auto m : part_sizes) {
    for (std::size_t a = first; a < first + m; ++a)
      for (std::size_t b = a + 1; b < first + m; ++b)
        if (std::abs(cert.config.distance(a, b) - 1.0) <= tolerance)
          throw std::logic_error("intra-part unit distance in embedding");
    first += m;
  }
  return cert;
}

VerificationReport verify_certificate(const RealizationCertificate& cert,
                                      std::size_t dim) {
  if (dim != 0 && cert.config.dim() != dim)
    throw DomainError("certificate dimension " +
                      std::to_string(cert.config.dim()) + " does not match d = " +
                      std::to_string(dim));
  if (cert.config.size() != cert.graph.n())
    throw DomainError("certificate has " + std::to_string(cert.config.size()) +
                      " points for a graph on " + std::to_string(cert.graph.n()) +
                      " vertices");
  VerificationReport report;
  const std::size_t n = cert.graph.n();
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      const double dist = cert.config.distance(u, v);
      if (cert.graph.has_edge(u, v) &&
          !(std::abs(dist - 1.0) <= cert.tolerance))
        report.non_unit_edges.push_back({u, v, dist});
      if (!(dist > cert.tolerance))
        report.coincident_points.push_back({u, v, dist});
    }
  }
  report.ok = report.non_unit_edges.empty() && report.coincident_points.empty();
  return report;
}

bool forbidden_subgraph_audit(const RealizationCertificate& cert,
                              std::size_t dim) {
  if (!verify_certificate(cert, dim).ok)
    throw DomainError("audit requires a certificate that verifies");
  return !contains_balanced_multipartite(cert.graph, 3, dim / 2 + 1);
}

RealizationCertificate restrict_certificate(const RealizationCertificate& cert,
                                            std::span<const Vertex> subset) {
  VertexSet sorted(subset.begin(), subset.end());
  std::sort(sorted.begin(), sorted.end());
  return {cert.config.subset(sorted), induced_subgraph(cert.graph, sorted),
          cert.tolerance};
}

Graph unit_distance_graph(const PointConfig& config, double tolerance) {
  Graph g(config.size());
  for (Vertex u = 0; u < config.size(); ++u)
    for (Vertex v = u + 1; v < config.size(); ++v)
      if (std::abs(config.distance(u, v) - 1.0) <= tolerance) g.add_edge(u, v);
  return g;
}

namespace detail {

PointConfig read_points(LineReader& reader) {
  const auto header = reader.next_fields(2);
  const std::size_t n = parse_uint(header[0], "point count");
  const std::size_t d = parse_uint(header[1], "dimension");
  PointConfig config(d, n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto fields = reader.next_fields(d);
    auto p = config.point(i);
    for (std::size_t c = 0; c < d; ++c)
      p[c] = parse_double(fields[c], "coordinate");
  }
  return config;
}

}  // namespace detail

namespace {

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

PointConfig read_points(std::istream& in) {
  detail::LineReader reader(in, "point file");
  PointConfig config = detail::read_points(reader);
  reader.expect_end();
  return config;
}

void write_points(std::ostream& out, const PointConfig& config) {
  out << config.size() << ' ' << config.dim() << '\n';
  for (std::size_t i = 0; i < config.size(); ++i) {
    const auto p = config.point(i);
    for (std::size_t c = 0; c < p.size(); ++c)
      out << (c ? " " : "") << format_double(p[c]);
    out << '\n';
  }
}

RealizationCertificate read_certificate(std::istream& in) {
  detail::LineReader reader(in, "certificate");
  if (reader.next_fields(1)[0] != "certificate")
    throw FormatError(reader.where() + ": expected 'certificate'");
  const auto tol = reader.next_fields(2);
  if (tol[0] != "tolerance")
    throw FormatError(reader.where() + ": expected 'tolerance <t>'");
  RealizationCertificate cert;
  cert.tolerance = detail::parse_double(tol[1], "tolerance");
  if (!(cert.tolerance >= 0))
    throw FormatError(reader.where() + ": tolerance must be nonnegative");
  cert.config = detail::read_points(reader);
  cert.graph = detail::read_edge_list(reader);
  reader.expect_end();
  if (cert.config.size() != cert.graph.n())
    throw FormatError("certificate: point count does not match vertex count");
  return cert;
}

void write_certificate(std::ostream& out, const RealizationCertificate& cert) {
  out << "certificate\n"
      << "tolerance " << format_double(cert.tolerance) << '\n';
  write_points(out, cert.config);
  write_edge_list(out, cert.graph);
}

RealizationCertificate load_certificate(const std::string& path) {
  if (path == "-") return read_certificate(std::cin);
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path);
  return read_certificate(in);
}

void save_certificate(const std::string& path,
                      const RealizationCertificate& cert) {
  std::ofstream out(path);
  if (!out) throw FormatError("cannot write " + path);
  write_certificate(out, cert);
}

}  // namespace ramsey_forge
