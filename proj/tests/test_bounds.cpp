#include <doctest.h>

#include <cmath>
#include <sstream>

#include "oracles.hpp"
#include "ramsey_forge/bounds.hpp"
#include "ramsey_forge/errors.hpp"

using namespace ramsey_forge;

TEST_CASE("exact avoidance constants") {
  const auto p33 = avoidance_probability_exact(3, 3);
  CHECK(p33.exact_value() == Rational(7, 8));
  CHECK(*p33.count == 7);
  const auto p43 = avoidance_probability_exact(4, 3);
  CHECK(p43.exact_value() == Rational(41, 64));
  CHECK(avoidance_probability_exact(2, 3).exact_value() == 1);
  CHECK(avoidance_probability_exact(3, 2).exact_value() == Rational(1, 8));
}

TEST_CASE("triangle-free labeled graph counts") {
  const std::uint64_t expected[] = {1, 1, 2, 7, 41, 388, 5789, 133501, 4682270};
  for (std::size_t k = 0; k <= 8; ++k)
    CHECK(*avoidance_probability_exact(k, 3, 2).count == expected[k]);
}

TEST_CASE("exact avoidance agrees with a slow enumeration") {
  for (std::size_t k = 2; k <= 6; ++k)
    for (std::size_t l = 2; l <= 5; ++l)
      CHECK(*avoidance_probability_exact(k, l).count == oracle::kl_free_count(k, l));
}

TEST_CASE("exact avoidance cap") {
  CHECK_THROWS_AS(avoidance_probability_exact(9, 3), DomainError);
}

TEST_CASE("monte carlo avoidance within 4 sigma") {
  const auto p = avoidance_probability_montecarlo(4, 3, 1'000'000, 7);
  CHECK(std::abs(p.value() - 41.0 / 64.0) <= 4 * p.standard_error);
  const auto q = avoidance_probability_montecarlo(3, 2, 200'000, 8);
  CHECK(std::abs(q.value() - 0.125) <= 4 * q.standard_error);
  CHECK(avoidance_probability_montecarlo(6, 3, 10000, 1, 1).hits ==
        avoidance_probability_montecarlo(6, 3, 10000, 1, 4).hits);
}

TEST_CASE("asymptotic avoidance exponent") {
  for (std::size_t k = 3; k <= 20; ++k)
    CHECK(avoidance_exponent_asymptotic(k, 3) ==
          doctest::Approx(-double(k * k) / 4 + double(k) / 2));
  CHECK(avoidance_exponent_asymptotic(10, 3) == doctest::Approx(-20.0));
}

TEST_CASE("lower bound exponents at d = 4") {
  CHECK(std::abs(lower_bound_exponent(4, 3) - std::log2(8.0 / 7.0) / 6) < 1e-12);
  CHECK(std::abs(lower_bound_exponent(4, 4) - std::log2(64.0 / 41.0) / 12) < 1e-12);
  CHECK(std::abs(lower_bound_exponent(4, 3) - 0.0321075) < 1e-6);
  CHECK(std::abs(lower_bound_exponent(4, 4) - 0.0535373) < 1e-6);
  CHECK(lower_bound_exponent(5, 4) == lower_bound_exponent(4, 4));
}

TEST_CASE("asymptotic mode identity and monotone limit") {
  ExponentOptions opts;
  opts.source = ProbabilitySource::asymptotic;
  for (std::size_t d : {4u, 5u}) {
    double prev = 0;
    for (std::size_t k = 3; k <= 200; ++k) {
      const double e = lower_bound_exponent(d, k, opts);
      CHECK(e == doctest::Approx(double(k - 2) / (4.0 * double(k - 1))));
      CHECK(e > prev);
      CHECK(e < 0.25);
      prev = e;
    }
    CHECK(lower_bound_exponent_limit(d) == doctest::Approx(0.25));
  }
}

TEST_CASE("lower bound argument checks") {
  CHECK_THROWS_AS(lower_bound_exponent(4, 2), DomainError);
  CHECK_THROWS_AS(lower_bound_exponent(4, 12), DomainError);
  CHECK_THROWS_AS(parse_probability_source("guess"), DomainError);
  CHECK(parse_probability_source("montecarlo") == ProbabilitySource::montecarlo);
}

TEST_CASE("prior bound table") {
  const auto prior = prior_bound_exponents();
  auto find = [&](std::size_t d) {
    for (const auto& p : prior)
      if (p.d == d) return p;
    FAIL("missing d");
    return PriorBound{};
  };
  CHECK(find(4).exponent == doctest::Approx(0.022065));
  CHECK(find(8).exponent == doctest::Approx(0.000825));
  CHECK(find(2).exponent == doctest::Approx(0.5));
  CHECK(lower_bound_exponent(4, 4) > find(4).exponent);
}

TEST_CASE("upper bounds from the classical table") {
  const auto& table = RamseyTable::classical();
  CHECK(*upper_bound(6, 4, table).upper_value == 24);
  CHECK(*upper_bound(8, 4, table).upper_value == 72);
  CHECK(*upper_bound(4, 8, table).upper_value == 8);
  CHECK(*upper_bound(6, 5, table).upper_value == 24);
  CHECK_THROWS_AS(upper_bound(40, 4, table), DomainError);
  const auto asym = upper_bound(40, 4, table, true);
  CHECK_FALSE(asym.upper_value.has_value());
  CHECK(std::isfinite(asym.upper_log2));
  CHECK_THROWS_AS(upper_bound(6, 1, table), DomainError);
}

TEST_CASE("ramsey table lookups and csv round trip") {
  const auto& table = RamseyTable::classical();
  CHECK(table.lookup(3, 3)->upper == 6);
  CHECK(table.lookup(4, 4)->upper == 18);
  CHECK(table.lookup(5, 3)->upper == 14);
  CHECK(table.lookup(5, 5)->lower == 43);
  CHECK_FALSE(table.lookup(9, 9).has_value());

  std::stringstream buf;
  table.write_csv(buf);
  const std::string text = buf.str();
  CHECK(RamseyTable::read_csv(buf) == table);

  std::istringstream bad("s,t,lower,upper,source\n3,3,7,6,x\n");
  CHECK_THROWS_AS(RamseyTable::read_csv(bad), FormatError);
  std::istringstream header("a,b\n");
  CHECK_THROWS_AS(RamseyTable::read_csv(header), FormatError);
}

TEST_CASE("bound report combines both sides") {
  const auto r = bound_report(8, 4, 4, RamseyTable::classical());
  CHECK(r.lower_log2 == doctest::Approx(8 * lower_bound_exponent(4, 4)));
  CHECK(r.upper_log2 == doctest::Approx(std::log2(72.0)));
}

TEST_CASE("clique threshold") {
  CHECK(clique_threshold(100, 4) == doctest::Approx(std::pow(100.0, 3 - 1.0 / 9)));
  CHECK(clique_threshold(10, 2) == doctest::Approx(std::pow(10.0, 2 - 1.0 / 3)));
  CHECK(clique_threshold_epsilon(4) == doctest::Approx(1.0 / 9));
}
