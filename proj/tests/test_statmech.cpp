#include <bellhopf/boson.hpp>
#include <bellhopf/combinatorics.hpp>
#include <bellhopf/fock.hpp>
#include <bellhopf/statmech.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>
#include <vector>

using namespace bellhopf;
using namespace bellhopf::statmech;
using boson::BosonWord;
using combinatorics::bell;
using combinatorics::bell_polynomial;

TEST_CASE("free-boson integrand series three ways", "[statmech]") {
  // Route 1: exp of the scaled exponential seed, coefficient by coefficient.
  // Route 2: Bell polynomials from the Stirling triangle.
  // Route 3: normal ordering of (a†a)^n followed by coherent expectation.
  const auto series_route = pfi_free_boson(12);
  const auto boson_route =
      boson::egf_expectation_ybar(BosonWord::number_operator(), 12);
  for (std::size_t n = 0; n <= 12; ++n) {
    CHECK(series_route.coefficient(n) == bell_polynomial(n));
    CHECK(series_route.coefficient(n) == boson_route.coefficient(n));
  }
}

TEST_CASE("closed-form partition function", "[statmech]") {
  const Real z1 = partition_function_closed(Real(1));
  const Real reference("1.581976706869326424385002005111");
  CHECK(abs(z1 - reference) < Real("1e-25"));

  // beta*eps = ln 2 gives 1/(1 - 1/2) = 2 exactly.
  const Real zln2 = partition_function_closed(log(Real(2)));
  CHECK(abs(zln2 - Real(2)) < Real("1e-40"));

  // Large beta*eps: ground state dominates, Z -> 1.
  CHECK(abs(partition_function_closed(Real(50)) - Real(1)) < Real("1e-20"));

  CHECK_THROWS_AS(partition_function_closed(Real(0)), std::domain_error);
  CHECK_THROWS_AS(partition_function_closed(Real(-1)), std::domain_error);
}

TEST_CASE("quadrature agrees with the closed form", "[statmech]") {
  for (const double bx : {-0.5, -1.0, -2.0}) {
    const Real x(bx);
    const auto q = partition_function_quadrature(x);
    const Real closed = partition_function_closed(-x);
    const Real diff = abs(q.value - closed);
    INFO("x = " << bx << ", |quad - closed| = " << diff);
    CHECK(diff < Real("1e-9"));
    // The a-priori Simpson bound must cover the actual simpson error.
    const Real simpson_exact = closed - q.tail;
    CHECK(abs(q.simpson - simpson_exact) <= q.error_bound);
  }
  CHECK_THROWS_AS(partition_function_quadrature(Real(0)), std::domain_error);
  CHECK_THROWS_AS(partition_function_quadrature(Real(1)), std::domain_error);
}

TEST_CASE("term-wise divergence report", "[statmech]") {
  const auto report = termwise_divergence_report(6);
  REQUIRE(report.rows.size() == 7);
  CHECK(report.all_divergent());
  CHECK(report.rows[0].powers == std::vector<std::size_t>{0});
  CHECK(report.rows[1].powers == std::vector<std::size_t>{1});
  CHECK(report.rows[2].powers == std::vector<std::size_t>{1, 2});
  CHECK(report.rows[3].powers == std::vector<std::size_t>{1, 2, 3});
  CHECK(report.rows[4].term == bell_polynomial(4));
  for (const auto& row : report.rows) CHECK(row.divergent);
}

TEST_CASE("moments to cumulants", "[statmech]") {
  // Bell moments have all cumulants 1 (the EGF log is e^x - 1).
  std::vector<Rational> w;
  for (std::size_t n = 0; n <= 12; ++n) w.emplace_back(bell(n));
  const auto v = moments_to_cumulants(MomentSequence<Rational>(std::move(w)));
  REQUIRE(v.order() == 12);
  for (std::size_t n = 1; n <= 12; ++n) CHECK(v.cumulant(n) == Rational(1));

  // Constant moments W_n = 1: the log is x, so V = (1, 0, 0, ...).
  const auto v1 = moments_to_cumulants(
      MomentSequence<Rational>(std::vector<Rational>(9, Rational(1))));
  CHECK(v1.cumulant(1) == Rational(1));
  for (std::size_t n = 2; n <= 8; ++n) CHECK(v1.cumulant(n) == Rational(0));

  // Symbolic: W_n = B_n(ybar) gives V_n = ybar for every n.
  std::vector<YPolynomial> wp;
  for (std::size_t n = 0; n <= 8; ++n) wp.push_back(bell_polynomial(n));
  const auto vp =
      moments_to_cumulants(MomentSequence<YPolynomial>(std::move(wp)));
  for (std::size_t n = 1; n <= 8; ++n)
    CHECK(vp.cumulant(n) == YPolynomial::monomial(1));

  CHECK_THROWS_AS(MomentSequence<Rational>(
                      std::vector<Rational>{Rational(2), Rational(1)}),
                  std::domain_error);
}

TEST_CASE("cumulants to moments", "[statmech]") {
  // All cumulants 1 -> Bell moments.
  const auto w = cumulants_to_moments(
      CumulantSequence<Rational>(std::vector<Rational>(10, Rational(1))));
  for (std::size_t n = 0; n <= 10; ++n) CHECK(w.moment(n) == Rational(bell(n)));

  // No cumulants beyond the order: W = (1, 0, ...) for V empty of nonzeros.
  const auto w0 = cumulants_to_moments(
      CumulantSequence<Rational>(std::vector<Rational>(5, Rational(0))));
  CHECK(w0.moment(0) == Rational(1));
  for (std::size_t n = 1; n <= 5; ++n) CHECK(w0.moment(n) == Rational(0));

  // Only V_1 = 1: moments of a deterministic unit, all W_n = 1.
  std::vector<Rational> v{Rational(1), Rational(0), Rational(0)};
  const auto w1 = cumulants_to_moments(CumulantSequence<Rational>(v));
  for (std::size_t n = 0; n <= 3; ++n) CHECK(w1.moment(n) == Rational(1));
}

TEST_CASE("conversion round trip on random rational data", "[statmech]") {
  std::mt19937 rng(314159);
  std::uniform_int_distribution<int> numer(-6, 6);
  std::uniform_int_distribution<int> denom(1, 4);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Rational> w{Rational(1)};
    for (int n = 1; n <= 12; ++n)
      w.emplace_back(Rational(numer(rng), denom(rng)));
    const MomentSequence<Rational> moments(w);
    const auto back = cumulants_to_moments(moments_to_cumulants(moments));
    CHECK(back == moments);
  }
}

TEST_CASE("graph expansion over diagram shapes", "[statmech]") {
  // V identically 1 counts the diagrams themselves.
  const CumulantSequence<Rational> ones(std::vector<Rational>(8, Rational(1)));
  CHECK(graph_expansion(ones, 3) == Rational(5));
  for (std::size_t n = 0; n <= 8; ++n)
    CHECK(graph_expansion(ones, n) == Rational(bell(n)));

  // Only single-line vertices: one contributing diagram, product v^n.
  const Rational v13(7, 3);
  const CumulantSequence<Rational> only1(
      std::vector<Rational>{v13, Rational(0), Rational(0)});
  CHECK(graph_expansion(only1, 3) == v13 * v13 * v13);

  // Only two-line vertices: no diagram on 3 lines has all blocks of size 2.
  const CumulantSequence<Rational> only2(
      std::vector<Rational>{Rational(0), Rational(1), Rational(0)});
  CHECK(graph_expansion(only2, 3) == Rational(0));

  CHECK_THROWS_AS(graph_expansion(only2, 4), std::out_of_range);
}

TEST_CASE("graph expansion equals the series route and the enumerated route",
          "[statmech]") {
  std::mt19937 rng(777);
  std::uniform_int_distribution<int> numer(-5, 5);
  std::uniform_int_distribution<int> denom(1, 3);
  for (int trial = 0; trial < 12; ++trial) {
    std::vector<Rational> vv;
    for (int n = 1; n <= 8; ++n)
      vv.emplace_back(Rational(numer(rng), denom(rng)));
    const CumulantSequence<Rational> v(vv);
    const auto w = cumulants_to_moments(v);
    for (std::size_t n = 0; n <= 8; ++n) {
      const Rational closed = graph_expansion(v, n);
      CHECK(closed == w.moment(n));
      CHECK(closed == graph_expansion_enumerated(v, n));
    }
  }
}

TEST_CASE("moments and cumulants of the number word", "[statmech]") {
  const auto p = pfi_general(BosonWord::number_operator(), 8);
  for (std::size_t n = 0; n <= 8; ++n)
    CHECK(p.moments.moment(n) == bell_polynomial(n));
  for (std::size_t n = 1; n <= 8; ++n)
    CHECK(p.cumulants.cumulant(n) == YPolynomial::monomial(1));

  // At ybar = 1 the moments are the Bell numbers.
  const auto values = pfi_at(BosonWord::number_operator(), 6, Rational(1));
  for (std::size_t n = 0; n <= 6; ++n)
    CHECK(values.moments.moment(n) == Rational(bell(n)));
  for (std::size_t n = 1; n <= 6; ++n)
    CHECK(values.cumulants.cumulant(n) == Rational(1));
}

TEST_CASE("empty word gives the trivial model", "[statmech]") {
  const auto p = pfi_general(BosonWord::parse(""), 4);
  for (std::size_t n = 0; n <= 4; ++n)
    CHECK(p.moments.moment(n) == YPolynomial(1));
  CHECK(p.cumulants.cumulant(1) == YPolynomial(1));
  for (std::size_t n = 2; n <= 4; ++n)
    CHECK(p.cumulants.cumulant(n) == YPolynomial{});

  CHECK_THROWS_AS(pfi_general(BosonWord::parse("c"), 4), std::domain_error);
}

TEST_CASE("quartic word moments", "[statmech]") {
  // w = (a†)^2 a^2: W_1 = ybar^2 and W_2 = <z| N(w^2) |z>.
  const auto word = BosonWord::parse("ccaa");
  const auto p = pfi_general(word, 2);
  CHECK(p.moments.moment(1) == YPolynomial::monomial(2));
  const auto w2 = boson::coherent_expectation(
                      boson::normal_order(word.repeated(2)))
                      .to_ybar_polynomial();
  CHECK(p.moments.moment(2) == w2);
  // V_2 = W_2 - W_1^2.
  CHECK(p.cumulants.cumulant(2) ==
        w2 - YPolynomial::monomial(2) * YPolynomial::monomial(2));

  // Numeric cross-check of W_2 against the truncated-basis oracle.
  const Rational z(4, 5); // ybar = 16/25
  const auto fock = boson::fock_expectation(word, 2, z, 64);
  const Rational exact = w2.evaluate(z * z);
  CHECK(fock.converged);
  CHECK(std::abs(fock.value - static_cast<double>(exact)) < 1e-8);
}

TEST_CASE("json rendering", "[statmech]") {
  const auto values = pfi_at(BosonWord::number_operator(), 3, Rational(1));
  CHECK(sequences_to_json(values.moments, values.cumulants) ==
        "{\"order\":3,\"W\":[\"1\",\"1\",\"2\",\"5\"],"
        "\"V\":[\"1\",\"1\",\"1\"]}");

  const auto p = pfi_general(BosonWord::number_operator(), 2);
  CHECK(sequences_to_json(p.moments, p.cumulants) ==
        "{\"order\":2,\"W\":[[\"1\"],[\"0\",\"1\"],[\"0\",\"1\",\"1\"]],"
        "\"V\":[[\"0\",\"1\"],[\"0\",\"1\"]]}");
}

TEST_CASE("model validation", "[statmech]") {
  ModelSpec spec;
  CHECK_NOTHROW(spec.validate());
  CHECK(abs(spec.beta_epsilon() - Real(1)) < Real("1e-40"));
  CHECK(abs(spec.x() + Real(1)) < Real("1e-40"));

  ModelSpec bad;
  bad.energy_scale = Real(0);
  CHECK_THROWS_AS(bad.validate(), std::domain_error);
  ModelSpec cold;
  cold.inverse_temperature = Real(-2);
  CHECK_THROWS_AS(cold.validate(), std::domain_error);
}
