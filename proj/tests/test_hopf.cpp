#include <bellhopf/combinatorics.hpp>
#include <bellhopf/hopf.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <string>
#include <vector>

using namespace bellhopf;
using namespace bellhopf::hopf;

namespace {

Element random_element(std::mt19937& rng) {
  std::uniform_int_distribution<int> term_count(1, 3);
  std::uniform_int_distribution<unsigned> index(1, 4);
  std::uniform_int_distribution<unsigned> expo(1, 2);
  std::uniform_int_distribution<int> numer(-4, 4);
  std::uniform_int_distribution<int> denom(1, 3);
  Element out;
  const int terms = term_count(rng);
  for (int t = 0; t < terms; ++t) {
    Monomial m;
    const unsigned factors = expo(rng);
    for (unsigned f = 0; f < factors; ++f)
      m.multiply_variable(index(rng), expo(rng));
    int p = numer(rng);
    if (p == 0) p = 1;
    out.add_term(m, Rational(p, denom(rng)));
  }
  return out;
}

} // namespace

TEST_CASE("element construction and printing", "[hopf]") {
  CHECK(Element{}.to_string() == "0");
  CHECK(Element::unit().to_string() == "e");
  CHECK(Element::generator(2).to_string() == "y2");

  Element e;
  e.add_term(Monomial::variable(1, 2) * Monomial::variable(3), Rational(3, 2));
  e.add_term(Monomial::variable(2), Rational(1));
  CHECK(e.to_string() == "y2 + 3/2*y1^2*y3");

  Element cancel = e - e;
  CHECK(cancel.is_zero());
  CHECK((Element::generator(1) * Element::generator(2)).to_string() ==
        "y1*y2");
}

TEST_CASE("generators are primitive", "[hopf]") {
  const auto d = coproduct(Element::generator(2));
  auto expected = TensorElement::pure(Monomial{}, Monomial::variable(2));
  expected.add_term(Monomial::variable(2), Monomial{}, Rational(1));
  CHECK(d == expected);
  CHECK(d.to_string() == "e (x) y2 + y2 (x) e");
}

TEST_CASE("coproduct splits multisets with binomial weights", "[hopf]") {
  // Δ(y1^2) = e⊗y1^2 + 2·y1⊗y1 + y1^2⊗e.
  const auto d = coproduct(Element(Monomial::variable(1, 2)));
  TensorElement expected;
  expected.add_term(Monomial{}, Monomial::variable(1, 2), Rational(1));
  expected.add_term(Monomial::variable(1), Monomial::variable(1), Rational(2));
  expected.add_term(Monomial::variable(1, 2), Monomial{}, Rational(1));
  CHECK(d == expected);
}

TEST_CASE("splitting coproduct equals the generator-product route", "[hopf]") {
  // Independent construction: Δ is an algebra map, so Δ(m) can be computed
  // by multiplying the primitive coproducts of m's generator factors.
  for (const auto& m : basis_monomials(Alphabet::bell, 6))
    CHECK(coproduct(m) == coproduct_via_generators(m));
}

TEST_CASE("counit and antipode on small elements", "[hopf]") {
  CHECK(counit(Element::unit()) == Rational(1));
  CHECK(counit(Element::generator(1)) == Rational(0));
  Element mixed = Element(Rational(5, 2)) + Element::generator(3);
  CHECK(counit(mixed) == Rational(5, 2));

  CHECK(antipode(Element::unit()) == Element::unit());
  CHECK(antipode(Element::generator(2)) ==
        Element(Rational(-1)) * Element::generator(2));
  // Even vertex count: sign +1.
  const Element y1y2(Monomial::variable(1) * Monomial::variable(2));
  CHECK(antipode(y1y2) == y1y2);

  // S(M) = (-1)^{deg} M on every basis monomial.
  for (const auto& m : basis_monomials(Alphabet::bell, 8)) {
    const Element em(m);
    const Rational sign = (m.degree() % 2 == 0) ? Rational(1) : Rational(-1);
    CHECK(antipode(em) == Element(sign) * em);
  }
}

TEST_CASE("antipode convolution collapses to the counit", "[hopf]") {
  CHECK(convolve_antipode_id(Element::unit()) == Element::unit());
  CHECK(convolve_antipode_id(Element::generator(1)) == Element{});
  CHECK(convolve_id_antipode(Element(Monomial::variable(1, 2))) == Element{});

  std::mt19937 rng(7781);
  for (int trial = 0; trial < 30; ++trial) {
    const Element a = random_element(rng);
    const Element expected = Element(counit(a)); // ε(a)·e
    CHECK(convolve_antipode_id(a) == expected);
    CHECK(convolve_id_antipode(a) == expected);
  }
}

TEST_CASE("grading by line count", "[hopf]") {
  Element e = Element::generator(1) + Element::generator(2) +
              Element(Rational(2));
  const auto parts = grade_components(e);
  REQUIRE(parts.size() == 3);
  CHECK(parts.at(0) == Element(Rational(2)));
  CHECK(parts.at(1) == Element::generator(1));
  CHECK(parts.at(2) == Element::generator(2));

  Element sum;
  for (const auto& [weight, part] : parts) sum += part;
  CHECK(sum == e);
  CHECK(grade_components(Element{}).empty());

  // The product adds weights: grade(y2 * y3) lives in weight 5.
  const auto prod = grade_components(Element::generator(2) *
                                     Element::generator(3));
  REQUIRE(prod.size() == 1);
  CHECK(prod.begin()->first == 5);
}

TEST_CASE("basis enumeration", "[hopf]") {
  // Bell monomials of weight <= 6: sum of p(0..6) = 1+1+2+3+5+7+11 = 30.
  CHECK(basis_monomials(Alphabet::bell, 6).size() == 30);
  // Poly keeps only powers of y1: e, y1, ..., y1^6.
  const auto poly = basis_monomials(Alphabet::poly, 6);
  REQUIRE(poly.size() == 7);
  for (unsigned k = 0; k < poly.size(); ++k)
    CHECK(poly[k] == Monomial::variable(1, k));
  CHECK(uses_only_generator_one(Element(poly.back())));
  CHECK_FALSE(uses_only_generator_one(Element::generator(2)));
}

TEST_CASE("axiom sweep passes on both alphabets", "[hopf]") {
  for (const auto alphabet : {Alphabet::bell, Alphabet::poly}) {
    const auto report = check_hopf_axioms(alphabet, 4, 40, 99u);
    INFO("alphabet " << to_string(alphabet));
    CHECK(report.all_passed());
    CHECK(report.checks.size() == 5);
    for (const auto& check : report.checks) {
      INFO(check.name << ": " << check.counterexample);
      CHECK(check.passed);
      CHECK(check.cases > 0);
    }
  }
  // Weight bound 0 leaves only the unit monomial.
  const auto tiny = check_hopf_axioms(Alphabet::bell, 0, 5, 1u);
  CHECK(tiny.basis_size == 1);
  CHECK(tiny.all_passed());
}

TEST_CASE("element parsing", "[hopf]") {
  CHECK(parse_element("e") == Element::unit());
  CHECK(parse_element("0") == Element{});
  CHECK(parse_element("y2^3") == Element(Monomial::variable(2, 3)));
  CHECK(parse_element("3/2*y1^2*y3 + y2") ==
        Element(Monomial::variable(2)) +
            Element(Rational(3, 2)) *
                Element(Monomial::variable(1, 2) * Monomial::variable(3)));
  CHECK(parse_element("-y1 + 2") ==
        Element(Rational(2)) - Element::generator(1));
  CHECK(parse_element(" y1 \t+ y1 ") ==
        Element(Rational(2)) * Element::generator(1));

  const auto fails_at = [](const std::string& text, std::size_t pos) {
    try {
      parse_element(text);
      return false;
    } catch (const ParseError& e) {
      return e.position() == pos;
    }
  };
  CHECK(fails_at("z", 1));
  CHECK(fails_at("y0", 2));
  CHECK(fails_at("y1^", 4));
  CHECK(fails_at("1/0", 3));
  CHECK(fails_at("", 1));
  CHECK(fails_at("y1 y2", 4));
}

TEST_CASE("printing round-trips through the parser", "[hopf]") {
  std::mt19937 rng(5150);
  for (int trial = 0; trial < 40; ++trial) {
    const Element a = random_element(rng);
    CHECK(parse_element(a.to_string()) == a);
  }
  CHECK(parse_element(Element{}.to_string()) == Element{});
  CHECK(parse_element(Element::unit().to_string()) == Element::unit());
}

TEST_CASE("tensor product acts slotwise", "[hopf]") {
  const auto a = TensorElement::pure(Monomial::variable(1), Monomial{});
  const auto b = TensorElement::pure(Monomial::variable(1),
                                     Monomial::variable(2), Rational(3));
  const auto ab = a * b;
  TensorElement expected = TensorElement::pure(
      Monomial::variable(1, 2), Monomial::variable(2), Rational(3));
  CHECK(ab == expected);
  CHECK(a.swapped() == TensorElement::pure(Monomial{}, Monomial::variable(1)));

  // Bilinearity over sums.
  const auto s = (a + b) * b;
  CHECK(s == a * b + b * b);
}
