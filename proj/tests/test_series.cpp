#include <bellhopf/combinatorics.hpp>
#include <bellhopf/polynomial.hpp>
#include <bellhopf/series.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <vector>

using namespace bellhopf;
using namespace bellhopf::series;

namespace {

ExpSeries<Rational> random_series(std::mt19937& rng, std::size_t order,
                                  Rational c0) {
  std::uniform_int_distribution<int> num(-6, 6);
  std::uniform_int_distribution<int> den(1, 4);
  ExpSeries<Rational> f(order);
  f.set_coefficient(0, std::move(c0));
  for (std::size_t n = 1; n <= order; ++n)
    f.set_coefficient(n, Rational(num(rng)) / Rational(den(rng)));
  return f;
}

} // namespace

static_assert(CoefficientRing<Rational>);
static_assert(CoefficientRing<Integer>);
static_assert(CoefficientRing<YPolynomial>);

TEST_CASE("construction and access", "[series]") {
  ExpSeries<Rational> f(4);
  CHECK(f.order() == 4);
  CHECK(f.coefficient(4) == Rational(0));
  CHECK_THROWS_AS(f.coefficient(5), std::out_of_range);
  f.set_coefficient(2, Rational(7));
  CHECK(f.coefficient(2) == Rational(7));
  CHECK(f.truncated(1).order() == 1);
  CHECK(f.truncated(9).coefficient(2) == Rational(7));
  CHECK(f.truncated(9).coefficient(9) == Rational(0));
  CHECK_THROWS_AS(ExpSeries<Rational>(std::vector<Rational>{}),
                  std::invalid_argument);
}

TEST_CASE("EGF product: e^x * e^x = e^{2x}", "[series]") {
  ExpSeries<Rational> ex(10);
  for (std::size_t n = 0; n <= 10; ++n) ex.set_coefficient(n, Rational(1));
  const auto sq = ex * ex;
  for (std::size_t n = 0; n <= 10; ++n)
    CHECK(sq.coefficient(n) == power(Rational(2), n));
}

TEST_CASE("EGF product of (e^x - 1) with itself", "[series]") {
  const auto f = exp_x_minus_one<Rational>(10);
  const auto sq = f * f;
  CHECK(sq.coefficient(0) == Rational(0));
  CHECK(sq.coefficient(1) == Rational(0));
  for (std::size_t n = 2; n <= 10; ++n)
    CHECK(sq.coefficient(n) == power(Rational(2), n) - Rational(2));
}

TEST_CASE("exp of e^x - 1 has Bell coefficients", "[series]") {
  const auto g = exp(exp_x_minus_one<Rational>(12));
  for (std::size_t n = 0; n <= 12; ++n)
    CHECK(g.coefficient(n) == Rational(combinatorics::bell(n)));
}

TEST_CASE("exp/log domain checks", "[series]") {
  ExpSeries<Rational> f(3);
  f.set_coefficient(0, Rational(1));
  CHECK_THROWS_AS(exp(f), std::domain_error);
  ExpSeries<Rational> g(3);
  CHECK_THROWS_AS(log(g), std::domain_error);
}

TEST_CASE("log inverts exp on random series", "[series]") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 40; ++trial) {
    const auto f = random_series(rng, 10, Rational(0));
    CHECK(log(exp(f)) == f);
  }
  for (int trial = 0; trial < 40; ++trial) {
    const auto g = random_series(rng, 10, Rational(1));
    CHECK(exp(log(g)) == g);
  }
}

TEST_CASE("exp turns sums into products", "[series]") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 25; ++trial) {
    const auto f = random_series(rng, 8, Rational(0));
    const auto g = random_series(rng, 8, Rational(0));
    CHECK(exp(f + g) == exp(f) * exp(g));
  }
}

TEST_CASE("arithmetic truncates to the smaller order", "[series]") {
  ExpSeries<Rational> f(6), g(3);
  f.set_coefficient(5, Rational(1));
  g.set_coefficient(2, Rational(2));
  CHECK((f + g).order() == 3);
  CHECK((f - g).order() == 3);
  CHECK((f * g).order() == 3);
}

TEST_CASE("polynomial coefficients: exp(ybar(e^x-1)) gives Bell polynomials",
          "[series]") {
  // Two routes to B_n(ybar): the Stirling triangle, and series exp over the
  // polynomial ring. They must agree coefficient by coefficient.
  const auto g = exp(
      scaled_exp_x_minus_one<YPolynomial>(YPolynomial::variable(), 10));
  for (std::size_t n = 0; n <= 10; ++n)
    CHECK(g.coefficient(n) == combinatorics::bell_polynomial(n));
}

TEST_CASE("scaled seed evaluates like the Bell polynomial", "[series]") {
  const auto g = exp(scaled_exp_x_minus_one<Rational>(Rational(2), 8));
  for (std::size_t n = 0; n <= 8; ++n)
    CHECK(g.coefficient(n) ==
          combinatorics::bell_polynomial(n).evaluate(Rational(2)));
}
