#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ramsey_forge/bounds.hpp"
#include "ramsey_forge/errors.hpp"
#include "ramsey_forge/geometry.hpp"
#include "ramsey_forge/graph.hpp"
#include "ramsey_forge/packing.hpp"
#include "ramsey_forge/prob_method.hpp"

namespace py = pybind11;
namespace rf = ramsey_forge;

namespace {

// Exact rationals cross the boundary as fractions.Fraction.
py::object to_fraction(const rf::Rational& r) {
  static py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(py::int_(py::str(boost::multiprecision::numerator(r).str())),
                  py::int_(py::str(boost::multiprecision::denominator(r).str())));
}

std::vector<std::vector<double>> points_of(const rf::PointConfig& c) {
  std::vector<std::vector<double>> out;
  for (std::size_t i = 0; i < c.size(); ++i) {
    const auto p = c.point(i);
    out.emplace_back(p.begin(), p.end());
  }
  return out;
}

rf::PointConfig config_from(const std::vector<std::vector<double>>& points) {
  const std::size_t dim = points.empty() ? 0 : points.front().size();
  rf::PointConfig c(dim, points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i].size() != dim)
      throw rf::DomainError("all points must have the same dimension");
    std::copy(points[i].begin(), points[i].end(), c.point(i).begin());
  }
  return c;
}

rf::ExponentOptions options(const std::string& mode, std::uint64_t samples,
                            std::uint64_t seed, unsigned threads) {
  rf::ExponentOptions o;
  o.source = rf::parse_probability_source(mode);
  o.samples = samples;
  o.seed = seed;
  o.threads = threads;
  return o;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Distance Ramsey number toolkit: graphs, embeddings, packings, bounds";

  auto domain_error = py::register_exception<rf::DomainError>(
      m, "DomainError", PyExc_ValueError);
  py::register_exception<rf::FormatError>(m, "FormatError", PyExc_OSError);
  (void)domain_error;

  m.attr("DEFAULT_SEED") = rf::kDefaultSeed;

  py::class_<rf::Graph>(m, "Graph")
      .def(py::init<std::size_t>(), py::arg("n") = 0)
      .def_static("complete", &rf::Graph::complete)
      .def_static("cycle", &rf::Graph::cycle)
      .def_static("petersen", &rf::Graph::petersen)
      .def_static("complete_multipartite",
                  [](const std::vector<std::size_t>& parts) {
                    return rf::Graph::complete_multipartite(parts);
                  })
      .def_static("from_edges",
                  [](std::size_t n,
                     const std::vector<std::pair<rf::Vertex, rf::Vertex>>& e) {
                    return rf::Graph::from_edges(n, e);
                  })
      .def_property_readonly("n", &rf::Graph::n)
      .def("has_edge", &rf::Graph::has_edge)
      .def("add_edge", &rf::Graph::add_edge)
      .def("remove_edge", &rf::Graph::remove_edge)
      .def("degree", &rf::Graph::degree)
      .def("edge_count", &rf::Graph::edge_count)
      .def("edges", &rf::Graph::edges)
      .def("__eq__", [](const rf::Graph& a, const rf::Graph& b) { return a == b; })
      .def("__repr__", [](const rf::Graph& g) {
        return "<Graph n=" + std::to_string(g.n()) +
               " edges=" + std::to_string(g.edge_count()) + ">";
      });

  m.def("sample_gnp_half", &rf::sample_gnp_half, py::arg("n"),
        py::arg("seed") = rf::kDefaultSeed);
  m.def("enumerate_cliques",
        [](const rf::Graph& g, std::size_t r) { return rf::enumerate_cliques(g, r).members; },
        py::arg("g"), py::arg("r"));
  m.def("count_cliques", &rf::count_cliques, py::arg("g"), py::arg("r"),
        py::arg("threads") = 1, py::call_guard<py::gil_scoped_release>());
  m.def("contains_balanced_multipartite",
        [](const rf::Graph& g, std::size_t l, std::size_t r)
            -> std::optional<std::vector<rf::VertexSet>> {
          auto w = rf::contains_balanced_multipartite(g, l, r);
          if (!w) return std::nullopt;
          return w->parts;
        },
        py::arg("g"), py::arg("l"), py::arg("r"));
  m.def("induced_subgraph",
        [](const rf::Graph& g, const rf::VertexSet& s) { return rf::induced_subgraph(g, s); });
  m.def("complement", &rf::complement);

  py::class_<rf::RealizationCertificate>(m, "RealizationCertificate")
      .def(py::init([](const std::vector<std::vector<double>>& points,
                       const rf::Graph& graph, double tolerance) {
             return rf::RealizationCertificate{config_from(points), graph, tolerance};
           }),
           py::arg("points"), py::arg("graph"),
           py::arg("tolerance") = rf::kDefaultTolerance)
      .def_property_readonly("points", [](const rf::RealizationCertificate& c) {
        return points_of(c.config);
      })
      .def_property_readonly("dim", [](const rf::RealizationCertificate& c) {
        return c.config.dim();
      })
      .def_readonly("graph", &rf::RealizationCertificate::graph)
      .def_readonly("tolerance", &rf::RealizationCertificate::tolerance);

  m.def("embed_multipartite",
        [](const std::vector<std::size_t>& parts, std::size_t d, double tol) {
          return rf::embed_multipartite(parts, d, tol);
        },
        py::arg("parts"), py::arg("d"), py::arg("tolerance") = rf::kDefaultTolerance);
  m.def("verify_certificate",
        [](const rf::RealizationCertificate& c, std::size_t d) {
          const auto r = rf::verify_certificate(c, d);
          py::list bad;
          for (const auto& v : r.non_unit_edges) bad.append(py::make_tuple(v.u, v.v, v.distance));
          for (const auto& v : r.coincident_points) bad.append(py::make_tuple(v.u, v.v, v.distance));
          return py::make_tuple(r.ok, bad);
        },
        py::arg("cert"), py::arg("d") = 0,
        "Returns (ok, [(u, v, distance), ...]) listing every violation.");
  m.def("forbidden_subgraph_audit", &rf::forbidden_subgraph_audit,
        py::arg("cert"), py::arg("d"));

  py::class_<rf::CliquePacking>(m, "CliquePacking")
      .def_readonly("s", &rf::CliquePacking::s)
      .def_readonly("k", &rf::CliquePacking::k)
      .def_readonly("cliques", &rf::CliquePacking::cliques)
      .def_property_readonly("mode", [](const rf::CliquePacking& p) {
        return rf::to_string(p.mode);
      })
      .def_readonly("delta_report", &rf::CliquePacking::delta_report)
      .def("__len__", &rf::CliquePacking::size);

  m.def("pack_exact", &rf::pack_exact, py::arg("s"), py::arg("k"),
        py::call_guard<py::gil_scoped_release>());
  m.def("pack_greedy", &rf::pack_greedy, py::arg("s"), py::arg("k"),
        py::arg("seed") = rf::kDefaultSeed);
  m.def("rodl_ratio", &rf::rodl_ratio);
  m.def("validate_packing", &rf::validate_packing,
        "Empty string when the packing is sound, otherwise the first problem.");
  m.def("is_maximal", &rf::is_maximal);

  m.def("stat_F",
        [](const rf::Graph& h, const rf::CliquePacking& p,
           const std::vector<rf::Vertex>& sigma, std::size_t l) {
          return rf::stat_F(h, p, sigma, l);
        },
        py::arg("h"), py::arg("packing"), py::arg("sigma"), py::arg("l"));
  m.def("exact_expectation",
        [](const rf::Graph& h, const rf::CliquePacking& p, std::size_t l) {
          return to_fraction(rf::exact_expectation(h, p, l));
        },
        py::arg("h"), py::arg("packing"), py::arg("l"));
  m.def("brute_force_expectation",
        [](const rf::Graph& h, const rf::CliquePacking& p, std::size_t l,
           unsigned threads) {
          rf::Rational r;
          {
            py::gil_scoped_release release;
            r = rf::brute_force_expectation(h, p, l, threads);
          }
          return to_fraction(r);
        },
        py::arg("h"), py::arg("packing"), py::arg("l"), py::arg("threads") = 1);
  m.def("monte_carlo_expectation",
        [](const rf::Graph& h, const rf::CliquePacking& p, std::size_t l,
           std::uint64_t samples, std::uint64_t seed, unsigned threads) {
          rf::PermutationStatReport r;
          {
            py::gil_scoped_release release;
            r = rf::monte_carlo_expectation(h, p, l, samples, seed, threads);
          }
          py::dict out;
          out["s"] = r.s;
          out["k"] = r.k;
          out["l"] = r.l;
          out["exact"] = to_fraction(r.exact_expectation);
          out["prediction"] = r.asymptotic_prediction;
          out["ratio"] = r.ratio;
          out["samples"] = r.samples;
          out["mean"] = r.empirical_mean;
          out["variance"] = r.empirical_variance;
          out["standard_error"] = r.standard_error();
          return out;
        },
        py::arg("h"), py::arg("packing"), py::arg("l"), py::arg("samples"),
        py::arg("seed") = rf::kDefaultSeed, py::arg("threads") = 1);
  m.def("tail_probability_bound",
        [](std::size_t k, std::uint64_t z, std::uint64_t a) {
          const auto t = rf::tail_probability_bound(k, z, a);
          return py::make_tuple(t.bound_log2, t.exact_log2);
        },
        py::arg("k"), py::arg("z"), py::arg("a"),
        "Returns (log2 of the closed-form bound, log2 of the exact sum).");

  m.def("avoidance_probability_exact",
        [](std::size_t k, std::size_t l, unsigned threads) {
          rf::AvoidanceProbability p;
          {
            py::gil_scoped_release release;
            p = rf::avoidance_probability_exact(k, l, threads);
          }
          return to_fraction(p.exact_value());
        },
        py::arg("k"), py::arg("l"), py::arg("threads") = 1);
  m.def("avoidance_probability_montecarlo",
        [](std::size_t k, std::size_t l, std::uint64_t samples,
           std::uint64_t seed, unsigned threads) {
          const auto p = rf::avoidance_probability_montecarlo(k, l, samples, seed, threads);
          return py::make_tuple(p.value(), p.standard_error);
        },
        py::arg("k"), py::arg("l"), py::arg("samples"),
        py::arg("seed") = rf::kDefaultSeed, py::arg("threads") = 1);
  m.def("avoidance_exponent_asymptotic", &rf::avoidance_exponent_asymptotic);
  m.def("lower_bound_exponent",
        [](std::size_t d, std::size_t k, const std::string& mode,
           std::uint64_t samples, std::uint64_t seed, unsigned threads) {
          return rf::lower_bound_exponent(d, k, options(mode, samples, seed, threads));
        },
        py::arg("d"), py::arg("k"), py::arg("mode") = "exact",
        py::arg("samples") = 1'000'000, py::arg("seed") = rf::kDefaultSeed,
        py::arg("threads") = 1);
  m.def("lower_bound_exponent_limit", &rf::lower_bound_exponent_limit);
  m.def("upper_bound",
        [](std::size_t s, std::size_t d, bool allow_asymptotic) -> py::object {
          const auto r = rf::upper_bound(s, d, rf::RamseyTable::classical(),
                                         allow_asymptotic);
          if (r.upper_value) return py::int_(*r.upper_value);
          return py::float_(r.upper_log2);
        },
        py::arg("s"), py::arg("d"), py::arg("allow_asymptotic") = false,
        "Integer bound from the shipped Ramsey table, or its log2 when only the "
        "asymptotic estimate is available.");
  m.def("prior_bound_exponents", [] {
    py::list out;
    for (const auto& p : rf::prior_bound_exponents())
      out.append(py::make_tuple(p.d, p.exponent, p.form));
    return out;
  });
  m.def("clique_threshold", &rf::clique_threshold);
}
