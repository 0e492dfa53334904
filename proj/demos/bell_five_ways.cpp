// One number, five independent routes: B(n) via the Stirling recurrence,
// the EGF exp(e^x - 1), the normal-ordering rewriter evaluated in a coherent
// state at ybar = 1, brute diagram enumeration, and the vertex-weighted
// graph expansion with all V_k = 1. They agree — that is most of the story
// this library tells.

#include <bellhopf/bellhopf.hpp>

#include <iostream>

using namespace bellhopf;

int main() {
  const std::size_t max_n = 8;

  const auto egf = series::exp(series::exp_x_minus_one<Rational>(max_n));
  const auto word = boson::BosonWord::number_operator();
  const statmech::CumulantSequence<Rational> ones(
      std::vector<Rational>(max_n, Rational(1)));

  std::cout << "n  recurrence  series  coherent  diagrams  graphs\n";
  for (std::size_t n = 0; n <= max_n; ++n) {
    const Natural b = combinatorics::bell(n);
    const Rational via_series = egf.coefficient(n);
    const Rational via_coherent =
        boson::coherent_expectation(boson::normal_order(word.repeated(n)))
            .evaluate_ybar(Rational(1));
    Natural via_diagrams(0);
    diagrams::enumerate_labeled_diagrams(
        n, [&](const diagrams::LabeledDiagram&) { via_diagrams += 1; });
    const Rational via_graphs = statmech::graph_expansion(ones, n);
    std::cout << n << "  " << b.str() << "  " << to_string(via_series) << "  "
              << to_string(via_coherent) << "  " << via_diagrams.str() << "  "
              << to_string(via_graphs) << "\n";
    if (!(via_series == Rational(b) && via_coherent == Rational(b) &&
          via_diagrams == b && via_graphs == Rational(b))) {
      std::cerr << "mismatch at n = " << n << "\n";
      return 1;
    }
  }
  std::cout << "all routes agree\n";
  return 0;
}
