// ramsey-forge: command line front end for the graph, geometry, packing,
// permutation-statistics and bounds modules.
//
// Exit codes: 0 success, 1 domain error, 2 I/O or format error.

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "ramsey_forge/bounds.hpp"
#include "ramsey_forge/errors.hpp"
#include "ramsey_forge/geometry.hpp"
#include "ramsey_forge/graph.hpp"
#include "ramsey_forge/packing.hpp"
#include "ramsey_forge/parallel.hpp"
#include "ramsey_forge/prob_method.hpp"
#include "ramsey_forge/rng.hpp"

namespace rf = ramsey_forge;

namespace {

struct RunConfig {
  std::uint64_t seed = rf::kDefaultSeed;
  unsigned threads = 0;
  std::string output = "-";
};

std::string fmt(const char* pattern, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, pattern, x);
  return buf;
}

void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.output == "-") {
    std::cout << text << std::flush;
    return;
  }
  std::ofstream out(cfg.output);
  if (!out) throw rf::FormatError("cannot write " + cfg.output);
  out << text;
}

rf::Graph named_graph(const std::string& kind, std::size_t n,
                      std::uint64_t seed) {
  if (kind == "gnp") return rf::sample_gnp_half(n, seed);
  if (kind == "complete") return rf::Graph::complete(n);
  if (kind == "empty") return rf::Graph(n);
  if (kind == "cycle") return rf::Graph::cycle(n);
  if (kind == "petersen") return rf::Graph::petersen();
  throw rf::DomainError("unknown graph kind '" + kind +
                        "' (gnp|complete|empty|cycle|petersen)");
}

// ---------------------------------------------------------------- graph

void add_graph_commands(CLI::App& app, RunConfig& cfg) {
  auto* graph = app.add_subcommand("graph", "Graph sampling and clique statistics");
  graph->require_subcommand(1);

  auto* sample = graph->add_subcommand("sample", "Sample G(n,1/2) as an edge list");
  auto n = std::make_shared<std::size_t>(0);
  sample->add_option("--n", *n, "Vertex count")->required();
  sample->callback([&cfg, n] {
    std::ostringstream out;
    rf::write_edge_list(out, rf::sample_gnp_half(*n, cfg.seed));
    emit(cfg, out.str());
  });

  auto* cliques = graph->add_subcommand("cliques", "Count (or list) r-cliques");
  auto r = std::make_shared<std::size_t>(3);
  auto list = std::make_shared<bool>(false);
  auto path = std::make_shared<std::string>();
  cliques->add_option("--r", *r, "Clique size")->required();
  cliques->add_flag("--list", *list, "List the cliques instead of counting");
  cliques->add_option("file", *path, "Edge-list file ('-' for stdin)")->required();
  cliques->callback([&cfg, r, list, path] {
    const auto g = rf::load_edge_list(*path);
    std::ostringstream out;
    if (*list) {
      for (const auto& c : rf::enumerate_cliques(g, *r).members) {
        for (std::size_t i = 0; i < c.size(); ++i) out << (i ? " " : "") << c[i];
        out << '\n';
      }
    } else {
      out << rf::count_cliques(g, *r, cfg.threads) << '\n';
    }
    emit(cfg, out.str());
  });

  auto* detect = graph->add_subcommand(
      "multipartite-detect", "Search for a K_{l,...,l} subgraph with r parts");
  auto part_size = std::make_shared<std::size_t>(3);
  auto parts = std::make_shared<std::size_t>(2);
  auto dpath = std::make_shared<std::string>();
  detect->add_option("--l", *part_size, "Part size")->required();
  detect->add_option("--r", *parts, "Part count")->required();
  detect->add_option("file", *dpath, "Edge-list file ('-' for stdin)")->required();
  detect->callback([&cfg, part_size, parts, dpath] {
    const auto g = rf::load_edge_list(*dpath);
    const auto witness = rf::contains_balanced_multipartite(g, *part_size, *parts);
    std::ostringstream out;
    if (!witness) {
      out << "false\n";
    } else {
      out << "true\n";
      for (const auto& p : witness->parts) {
        for (std::size_t i = 0; i < p.size(); ++i) out << (i ? " " : "") << p[i];
        out << '\n';
      }
    }
    emit(cfg, out.str());
  });

  auto* comp = graph->add_subcommand("complement", "Complement of an edge list");
  auto cpath = std::make_shared<std::string>();
  comp->add_option("file", *cpath, "Edge-list file ('-' for stdin)")->required();
  comp->callback([&cfg, cpath] {
    std::ostringstream out;
    rf::write_edge_list(out, rf::complement(rf::load_edge_list(*cpath)));
    emit(cfg, out.str());
  });
}

// ---------------------------------------------------------------- embed

void add_embed_commands(CLI::App& app, RunConfig& cfg) {
  auto* embed = app.add_subcommand(
      "embed", "Unit-distance embeddings of complete multipartite graphs");
  embed->require_subcommand(0, 1);
  auto parts = std::make_shared<std::vector<std::size_t>>();
  auto dim = std::make_shared<std::size_t>(0);
  auto tol = std::make_shared<double>(rf::kDefaultTolerance);
  embed->add_option("--parts", *parts, "Part sizes, comma separated")
      ->delimiter(',');
  embed->add_option("--d", *dim, "Ambient dimension");
  embed->add_option("--tolerance", *tol, "Certificate tolerance");

  auto* verify = embed->add_subcommand("verify", "Check a certificate file");
  auto vpath = std::make_shared<std::string>();
  verify->add_option("file", *vpath, "Certificate file ('-' for stdin)")->required();
  verify->callback([&cfg, vpath, dim] {
    const auto cert = rf::load_certificate(*vpath);
    const auto report = rf::verify_certificate(cert, *dim);
    std::ostringstream out;
    out << (report.ok ? "pass" : "fail") << '\n';
    for (const auto& v : report.non_unit_edges)
      out << "edge " << v.u << ' ' << v.v << " distance " << fmt("%.17g", v.distance)
          << '\n';
    for (const auto& v : report.coincident_points)
      out << "coincident " << v.u << ' ' << v.v << " distance "
          << fmt("%.17g", v.distance) << '\n';
    emit(cfg, out.str());
    if (!report.ok) throw rf::DomainError("certificate does not verify");
  });

  auto* audit = embed->add_subcommand(
      "audit", "Check that a certified graph has no K_{3,...,3} with [d/2]+1 parts");
  auto apath = std::make_shared<std::string>();
  audit->add_option("file", *apath, "Certificate file ('-' for stdin)")->required();
  audit->callback([&cfg, apath, dim] {
    const auto cert = rf::load_certificate(*apath);
    const std::size_t d = *dim ? *dim : cert.config.dim();
    const bool ok = rf::forbidden_subgraph_audit(cert, d);
    emit(cfg, std::string(ok ? "pass" : "fail") + "\n");
    if (!ok)
      throw rf::DomainError("certified graph contains a forbidden K_{3,...,3}");
  });

  embed->callback([embed, &cfg, parts, dim, tol] {
    if (!embed->get_subcommands().empty()) return;
    if (parts->empty() || *dim == 0)
      throw CLI::ValidationError("embed", "--parts and --d are required");
    std::ostringstream out;
    rf::write_certificate(out, rf::embed_multipartite(*parts, *dim, *tol));
    emit(cfg, out.str());
  });
}

// ---------------------------------------------------------------- pack

void add_pack_commands(CLI::App& app, RunConfig& cfg) {
  auto* pack = app.add_subcommand("pack", "Edge-disjoint clique packings of K_s");
  pack->require_subcommand(1);
  auto s = std::make_shared<std::size_t>(0);
  auto k = std::make_shared<std::size_t>(3);

  auto* exact = pack->add_subcommand("exact", "Maximum packing (small s)");
  exact->add_option("--s", *s, "Ground set size")->required();
  exact->add_option("--k", *k, "Clique size");
  exact->callback([&cfg, s, k] {
    std::ostringstream out;
    rf::write_packing(out, rf::pack_exact(*s, *k));
    emit(cfg, out.str());
  });

  auto* greedy = pack->add_subcommand("greedy", "Randomized maximal packing");
  greedy->add_option("--s", *s, "Ground set size")->required();
  greedy->add_option("--k", *k, "Clique size");
  greedy->callback([&cfg, s, k] {
    std::ostringstream out;
    rf::write_packing(out, rf::pack_greedy(*s, *k, cfg.seed));
    emit(cfg, out.str());
  });

  auto* ratio = pack->add_subcommand("ratio", "|cliques| k(k-1)/s^2 of a packing file");
  auto path = std::make_shared<std::string>();
  ratio->add_option("file", *path, "Packing file")->required();
  ratio->callback([&cfg, path] {
    std::ifstream in(*path);
    if (!in) throw rf::FormatError("cannot open " + *path);
    const auto p = rf::read_packing(in);
    emit(cfg, "s,k,count,mode,ratio\n" + std::to_string(p.s) + "," +
                  std::to_string(p.k) + "," + std::to_string(p.size()) + "," +
                  rf::to_string(p.mode) + "," + fmt("%.10g", rf::rodl_ratio(p)) +
                  "\n");
  });
}

// ---------------------------------------------------------------- expect

struct CorpusInstance {
  std::string name;
  rf::Graph h;
  rf::CliquePacking packing;
  std::size_t l;
};

// Random and structured host graphs against exact packings, s <= max_s.
std::vector<CorpusInstance> expectation_corpus(std::size_t max_s,
                                               std::uint64_t seed) {
  std::vector<CorpusInstance> out;
  for (std::size_t s = 3; s <= max_s; ++s) {
    for (std::size_t k = 3; k <= std::min<std::size_t>(5, s); ++k) {
      const auto packing = rf::pack_exact(s, k);
      std::vector<std::pair<std::string, rf::Graph>> hosts = {
          {"complete", rf::Graph::complete(s)},
          {"gnp", rf::sample_gnp_half(s, rf::counter_hash(seed, s * 16 + k))},
      };
      if (s >= 3) hosts.emplace_back("cycle", rf::Graph::cycle(s));
      for (const auto& [name, h] : hosts)
        for (std::size_t l = 3; l <= k; ++l)
          out.push_back({name + "/s=" + std::to_string(s) + "/k=" +
                             std::to_string(k) + "/l=" + std::to_string(l),
                         h, packing, l});
    }
  }
  return out;
}

void add_expect_command(CLI::App& app, RunConfig& cfg) {
  auto* expect = app.add_subcommand(
      "expect", "Expectation of the packing-hit statistic over random permutations");
  struct Args {
    std::size_t s = 7, k = 3, l = 3;
    std::string graph_file, graph_kind = "gnp", packing_file, packing = "auto";
    std::uint64_t graph_seed = 1, samples = 0;
    bool oracle = false, corpus = false;
  };
  auto a = std::make_shared<Args>();
  expect->add_option("--s", a->s, "Vertex count (corpus: largest s)");
  expect->add_option("--k", a->k, "Packing clique size");
  expect->add_option("--l", a->l, "Counted clique size");
  expect->add_option("--graph", a->graph_file, "Host graph edge-list file");
  expect->add_option("--graph-kind", a->graph_kind,
                     "gnp|complete|empty|cycle|petersen when no file is given");
  expect->add_option("--graph-seed", a->graph_seed, "Seed for --graph-kind gnp");
  expect->add_option("--packing", a->packing,
                     "auto|exact|greedy, or a packing file (auto: exact when possible)");
  expect->add_option("--samples", a->samples, "Monte Carlo permutation samples");
  expect->add_flag("--oracle", a->oracle,
                   "Also average over all s! permutations and require equality");
  expect->add_flag("--corpus", a->corpus, "Run the built-in corpus up to --s");
  expect->callback([&cfg, a] {
    std::ostringstream out;
    if (a->corpus) {
      out << "instance,exact,oracle,match\n";
      bool all = true;
      for (const auto& inst : expectation_corpus(a->s, cfg.seed)) {
        const auto exact = rf::exact_expectation(inst.h, inst.packing, inst.l);
        std::string oracle = "-", match = "-";
        if (a->oracle) {
          const auto brute = rf::brute_force_expectation(inst.h, inst.packing,
                                                         inst.l, cfg.threads);
          oracle = rf::to_string(brute);
          match = brute == exact ? "yes" : "no";
          all = all && brute == exact;
        }
        out << inst.name << ',' << rf::to_string(exact) << ',' << oracle << ','
            << match << '\n';
      }
      emit(cfg, out.str());
      if (!all) throw rf::DomainError("exact expectation disagrees with oracle");
      return;
    }

    const rf::Graph h = a->graph_file.empty()
                            ? named_graph(a->graph_kind, a->s, a->graph_seed)
                            : rf::load_edge_list(a->graph_file);
    rf::CliquePacking packing;
    if (a->packing == "exact" ||
        (a->packing == "auto" && h.n() <= rf::pack_exact_cap(a->k))) {
      packing = rf::pack_exact(h.n(), a->k);
    } else if (a->packing == "greedy" || a->packing == "auto") {
      packing = rf::pack_greedy(h.n(), a->k, cfg.seed);
    } else {
      std::ifstream in(a->packing);
      if (!in) throw rf::FormatError("cannot open " + a->packing);
      packing = rf::read_packing(in);
    }
    rf::PermutationStatReport report;
    if (a->samples > 0) {
      report = rf::monte_carlo_expectation(h, packing, a->l, a->samples, cfg.seed,
                                           cfg.threads);
    } else {
      report.s = packing.s;
      report.k = packing.k;
      report.l = a->l;
      report.exact_expectation = rf::exact_expectation(h, packing, a->l);
      report.asymptotic_prediction = rf::asymptotic_prediction(h, packing, a->l);
      report.ratio = report.asymptotic_prediction > 0
                         ? rf::to_double(report.exact_expectation) /
                               report.asymptotic_prediction
                         : 0.0;
    }
    out << rf::report_csv_header() << '\n' << rf::report_csv_row(report) << '\n';
    if (a->oracle) {
      const auto brute = rf::brute_force_expectation(h, packing, a->l, cfg.threads);
      out << "oracle," << rf::to_string(brute) << ','
          << (brute == report.exact_expectation ? "match" : "MISMATCH") << '\n';
      emit(cfg, out.str());
      if (brute != report.exact_expectation)
        throw rf::DomainError("exact expectation disagrees with oracle");
      return;
    }
    emit(cfg, out.str());
  });
}

// ---------------------------------------------------------------- bounds

void add_bounds_commands(CLI::App& app, RunConfig& cfg) {
  auto* bounds = app.add_subcommand("bounds", "Lower and upper bound evaluation");
  bounds->require_subcommand(1);
  struct Args {
    std::size_t d = 4, k = 3, l = 3, s = 0, n = 0, kmax = 8;
    std::string mode = "exact", table, graph;
    std::uint64_t samples = 1'000'000;
    bool allow_asymptotic = false;
  };
  auto a = std::make_shared<Args>();
  auto options = [&cfg, a] {
    rf::ExponentOptions o;
    o.source = rf::parse_probability_source(a->mode);
    o.samples = a->samples;
    o.seed = cfg.seed;
    o.threads = cfg.threads;
    return o;
  };
  auto table = [a]() -> rf::RamseyTable {
    return a->table.empty() ? rf::RamseyTable::classical()
                            : rf::RamseyTable::load_csv(a->table);
  };

  auto* lower = bounds->add_subcommand("lower", "Exponent e(k) of the lower bound");
  lower->add_option("--d", a->d, "Dimension")->required();
  lower->add_option("--k", a->k, "Packing clique size")->required();
  lower->add_option("--mode", a->mode, "exact|montecarlo|asymptotic");
  lower->add_option("--samples", a->samples, "Samples for montecarlo mode");
  lower->callback([&cfg, a, options] {
    emit(cfg, fmt("%.7f", rf::lower_bound_exponent(a->d, a->k, options())) + "\n");
  });

  auto* sweep = bounds->add_subcommand("sweep", "e(k) for k = [d/2]+1 .. kmax");
  sweep->add_option("--d", a->d, "Dimension")->required();
  sweep->add_option("--kmax", a->kmax, "Largest k");
  sweep->add_option("--mode", a->mode, "exact|montecarlo|asymptotic");
  sweep->add_option("--samples", a->samples, "Samples for montecarlo mode");
  sweep->callback([&cfg, a, options] {
    std::ostringstream out;
    out << "d,k,l,mode,exponent,limit\n";
    const std::size_t l = a->d / 2 + 1;
    for (std::size_t k = l; k <= a->kmax; ++k)
      out << a->d << ',' << k << ',' << l << ',' << a->mode << ','
          << fmt("%.10f", rf::lower_bound_exponent(a->d, k, options())) << ','
          << fmt("%.10f", rf::lower_bound_exponent_limit(a->d)) << '\n';
    emit(cfg, out.str());
  });

  auto* upper = bounds->add_subcommand("upper", "2[d/2] R(t,t) upper bound");
  upper->add_option("--s", a->s, "Subgraph size")->required();
  upper->add_option("--d", a->d, "Dimension")->required();
  upper->add_option("--table", a->table, "Ramsey table CSV (default: shipped)");
  upper->add_flag("--allow-asymptotic", a->allow_asymptotic,
                  "Fall back to 4^(s/[d/2]) when the table lacks R(t,t)");
  upper->callback([&cfg, a, table] {
    const auto r = rf::upper_bound(a->s, a->d, table(), a->allow_asymptotic);
    if (r.upper_value)
      emit(cfg, std::to_string(*r.upper_value) + "\n");
    else
      emit(cfg, "2^" + fmt("%.10g", r.upper_log2) + " (" + r.upper_method + ")\n");
  });

  auto* report = bounds->add_subcommand("report", "Lower and upper log2 bounds for (s, d)");
  report->add_option("--s", a->s, "Subgraph size")->required();
  report->add_option("--d", a->d, "Dimension")->required();
  report->add_option("--k", a->k, "Packing clique size")->required();
  report->add_option("--mode", a->mode, "exact|montecarlo|asymptotic");
  report->add_option("--table", a->table, "Ramsey table CSV (default: shipped)");
  report->callback([&cfg, a, options, table] {
    const auto r = rf::bound_report(a->s, a->d, a->k, table(), options());
    emit(cfg, "s,d,k,lower_log2,upper_log2,lower_method,upper_method\n" +
                  std::to_string(r.s) + "," + std::to_string(r.d) + "," +
                  std::to_string(r.k_used) + "," + fmt("%.10g", r.lower_log2) +
                  "," + fmt("%.10g", r.upper_log2) + ",\"" + r.lower_method +
                  "\",\"" + r.upper_method + "\"\n");
  });

  auto* prior = bounds->add_subcommand("prior", "Earlier exponents next to e(k)");
  prior->callback([&cfg] {
    std::ostringstream out;
    out << "d,prior_exponent,best_exact_exponent,best_k,prior_form\n";
    for (const auto& p : rf::prior_bound_exponents()) {
      const std::size_t l = p.d / 2 + 1;
      double best = 0.0;
      std::size_t best_k = 0;
      for (std::size_t k = l; k <= 7; ++k) {
        rf::ExponentOptions o;
        o.threads = cfg.threads;
        const double e = rf::lower_bound_exponent(p.d, k, o);
        if (e > best) {
          best = e;
          best_k = k;
        }
      }
      out << p.d << ',' << fmt("%.7f", p.exponent) << ',' << fmt("%.7f", best)
          << ',' << best_k << ",\"" << p.form << "\"\n";
    }
    emit(cfg, out.str());
  });

  auto* avoid = bounds->add_subcommand("avoid", "P(k,l): G(k,1/2) has no K_l");
  avoid->add_option("--k", a->k, "Graph order")->required();
  avoid->add_option("--l", a->l, "Forbidden clique size")->required();
  avoid->add_option("--mode", a->mode, "exact|montecarlo|asymptotic");
  avoid->add_option("--samples", a->samples, "Samples for montecarlo mode");
  avoid->callback([&cfg, a] {
    std::ostringstream out;
    out << "k,l,mode,count,value_log2,samples,stderr\n";
    const auto mode = rf::parse_probability_source(a->mode);
    if (mode == rf::ProbabilitySource::asymptotic) {
      out << a->k << ',' << a->l << ",asymptotic,,"
          << fmt("%.10g", rf::avoidance_exponent_asymptotic(a->k, a->l))
          << ",,\n";
    } else {
      const auto p = mode == rf::ProbabilitySource::exact
                         ? rf::avoidance_probability_exact(a->k, a->l, cfg.threads)
                         : rf::avoidance_probability_montecarlo(
                               a->k, a->l, a->samples, cfg.seed, cfg.threads);
      out << p.k << ',' << p.l << ',' << rf::to_string(p.mode) << ','
          << (p.count ? std::to_string(*p.count) : "") << ','
          << fmt("%.10g", p.value_log2) << ','
          << (p.count ? "" : std::to_string(p.samples)) << ','
          << (p.count ? "" : fmt("%.10g", p.standard_error)) << '\n';
    }
    emit(cfg, out.str());
  });

  auto* threshold = bounds->add_subcommand(
      "threshold", "n^(r - eps) with r = [d/2]+1; optionally audit a graph");
  threshold->add_option("--n", a->n, "Vertex count (defaults to the graph's)");
  threshold->add_option("--d", a->d, "Dimension")->required();
  threshold->add_option("--graph", a->graph, "Edge-list or certificate graph to audit");
  threshold->callback([&cfg, a] {
    std::ostringstream out;
    const std::size_t r = a->d / 2 + 1;
    out << "n,d,r,epsilon,threshold,cliques,within\n";
    if (a->graph.empty()) {
      if (a->n == 0) throw rf::DomainError("--n or --graph is required");
      out << a->n << ',' << a->d << ',' << r << ','
          << fmt("%.10g", rf::clique_threshold_epsilon(a->d)) << ','
          << fmt("%.10g", rf::clique_threshold(a->n, a->d)) << ",,\n";
    } else {
      const auto g = rf::load_edge_list(a->graph);
      const double t = rf::clique_threshold(g.n(), a->d);
      const auto c = rf::count_cliques(g, r, cfg.threads);
      out << g.n() << ',' << a->d << ',' << r << ','
          << fmt("%.10g", rf::clique_threshold_epsilon(a->d)) << ','
          << fmt("%.10g", t) << ',' << c << ','
          << (static_cast<double>(c) <= t ? "yes" : "no") << '\n';
    }
    emit(cfg, out.str());
  });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ramsey-forge: distance Ramsey number toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;
  app.add_option("--seed", cfg.seed, "Random seed (default 0x5EED)");
  app.add_option("--threads", cfg.threads,
                 "Worker threads (0: RAMSEY_FORGE_THREADS or 1)");
  app.add_option("-o,--output", cfg.output, "Output file ('-' for stdout)");

  add_graph_commands(app, cfg);
  add_embed_commands(app, cfg);
  add_pack_commands(app, cfg);
  add_expect_command(app, cfg);
  add_bounds_commands(app, cfg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const rf::FormatError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const rf::DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
