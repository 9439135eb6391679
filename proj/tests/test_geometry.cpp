#include <doctest.h>

#include <cmath>
#include <sstream>

#include "ramsey_forge/errors.hpp"
#include "ramsey_forge/geometry.hpp"
#include "ramsey_forge/rng.hpp"

using namespace ramsey_forge;

namespace {

RealizationCertificate embed(std::initializer_list<std::size_t> parts,
                             std::size_t d) {
  const std::vector<std::size_t> v(parts);
  return embed_multipartite(v, d);
}

}  // namespace

TEST_CASE("two singleton parts") {
  const auto cert = embed({1, 1}, 4);
  CHECK(std::abs(cert.config.distance(0, 1) - 1.0) < 1e-15);
  CHECK(verify_certificate(cert, 4).ok);
  // One circle per part: the plane holds a single part.
  CHECK_THROWS_AS(embed({1, 1}, 2), DomainError);
  CHECK(verify_certificate(embed({5}, 2), 2).ok);
}

TEST_CASE("K_{m,m} in R^4 has unit cross distances and radius^2 = 1/2") {
  for (std::size_t m = 1; m <= 50; ++m) {
    const auto cert = embed({m, m}, 4);
    for (std::size_t i = 0; i < 2 * m; ++i) {
      const auto p = cert.config.point(i);
      double r2 = 0;
      for (double x : p) r2 += x * x;
      CHECK(std::abs(r2 - 0.5) < 1e-15);
    }
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = m; b < 2 * m; ++b)
        CHECK(std::abs(cert.config.distance(a, b) - 1.0) <= 1e-12);
    CHECK(verify_certificate(cert, 4).ok);
  }
}

TEST_CASE("K_{3,3,3} in R^6") {
  const auto cert = embed({3, 3, 3}, 6);
  CHECK(cert.graph.edge_count() == 27);
  CHECK(verify_certificate(cert).ok);
  CHECK(forbidden_subgraph_audit(cert, 6));
}

TEST_CASE("embedding rejects too many parts") {
  try {
    embed({3, 3, 3}, 4);
    FAIL("expected DomainError");
  } catch (const DomainError& e) {
    CHECK(std::string(e.what()).find("parts exceed [d/2]") != std::string::npos);
  }
  CHECK_THROWS_AS(embed({1}, 1), DomainError);
  CHECK_THROWS_AS(embed({2, 0}, 4), DomainError);
}

TEST_CASE("intra-part distances stay away from 1") {
  for (std::size_t m = 1; m <= 64; ++m) {
    const auto cert = embed({m, m, m}, 7);
    const auto g = unit_distance_graph(cert.config, 1e-9);
    CHECK(g == cert.graph);
  }
}

TEST_CASE("perturbation is caught and reported") {
  auto cert = embed({2, 2}, 4);
  cert.config.point(0)[0] += 1e-3;
  const auto report = verify_certificate(cert, 4);
  CHECK_FALSE(report.ok);
  REQUIRE_FALSE(report.non_unit_edges.empty());
  for (const auto& v : report.non_unit_edges) CHECK(v.u == 0);
}

TEST_CASE("unit square with a 4-cycle") {
  RealizationCertificate cert{PointConfig(2, 4), Graph::cycle(4), 1e-9};
  const double xy[4][2] = {{0, 0}, {1, 0}, {1, 1}, {0, 1}};
  for (std::size_t i = 0; i < 4; ++i) {
    cert.config.point(i)[0] = xy[i][0];
    cert.config.point(i)[1] = xy[i][1];
  }
  CHECK(verify_certificate(cert, 2).ok);
  CHECK_THROWS_AS(verify_certificate(cert, 3), DomainError);
}

TEST_CASE("scaling breaks every certificate with an edge") {
  for (double lambda : {0.5, 0.999, 1.001, 2.0}) {
    auto cert = embed({3, 2}, 4);
    for (std::size_t i = 0; i < cert.config.size(); ++i)
      for (double& x : cert.config.point(i)) x *= lambda;
    CHECK_FALSE(verify_certificate(cert).ok);
  }
}

TEST_CASE("coincident points fail verification") {
  RealizationCertificate cert{PointConfig(2, 2), Graph(2), 1e-9};
  CHECK_FALSE(verify_certificate(cert).ok);
}

TEST_CASE("audit examples and precondition") {
  CHECK(forbidden_subgraph_audit(embed({3, 3}, 4), 4));
  CHECK(forbidden_subgraph_audit(embed({2, 2}, 4), 4));
  auto cert = embed({2, 2}, 4);
  cert.config.point(1)[1] += 0.1;
  CHECK_THROWS_AS(forbidden_subgraph_audit(cert, 4), DomainError);
}

TEST_CASE("restrict_certificate keeps verification") {
  const auto cert = embed({4, 4, 4}, 6);
  const Vertex pick[] = {0, 3, 5, 9, 11};
  const auto sub = restrict_certificate(cert, pick);
  CHECK(sub.graph.n() == 5);
  CHECK(verify_certificate(sub).ok);
  CHECK(sub.graph.has_edge(0, 2));
  CHECK_FALSE(sub.graph.has_edge(0, 1));
}

TEST_CASE("certificate round trip is bit faithful") {
  const auto cert = embed({5, 3, 2}, 7);
  std::stringstream buf;
  write_certificate(buf, cert);
  const auto back = read_certificate(buf);
  CHECK(back.config == cert.config);
  CHECK(back.graph == cert.graph);
  CHECK(back.tolerance == cert.tolerance);
}

TEST_CASE("point file parsing errors") {
  std::istringstream bad("2 2\n0 0\n1\n");
  CHECK_THROWS_AS(read_points(bad), FormatError);
  std::istringstream junk("1 2\n0 abc\n");
  CHECK_THROWS_AS(read_points(junk), FormatError);
  std::istringstream ok("1 3\n0.5 -1e-3 2\n");
  const auto p = read_points(ok);
  CHECK(p.point(0)[1] == -1e-3);
}
