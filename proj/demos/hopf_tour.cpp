// A short tour of the diagram-code algebra: parse an element, apply the
// structure maps, and run the machine check of the Hopf axioms.

#include <bellhopf/bellhopf.hpp>

#include <iostream>

using namespace bellhopf;

int main() {
  const auto a = hopf::parse_element("3/2*y1^2*y3 + y2");
  std::cout << "a           = " << a.to_string() << "\n";
  std::cout << "coproduct   = " << hopf::coproduct(a).to_string() << "\n";
  std::cout << "antipode    = " << hopf::antipode(a).to_string() << "\n";
  std::cout << "counit      = " << to_string(hopf::counit(a)) << "\n";
  std::cout << "S*id        = " << hopf::convolve_antipode_id(a).to_string()
            << "  (equals counit(a)*e)\n";

  for (const auto& [weight, part] : hopf::grade_components(a))
    std::cout << "weight " << weight << "   = " << part.to_string() << "\n";

  const auto report = hopf::check_hopf_axioms(hopf::Alphabet::bell, 4, 50, 11);
  std::cout << "\naxiom check (weight <= " << report.weight_bound << ", "
            << report.basis_size << " basis monomials, "
            << report.random_samples << " random samples):\n";
  for (const auto& check : report.checks)
    std::cout << "  " << check.name << ": "
              << (check.passed ? "pass" : "FAIL") << " (" << check.cases
              << " cases)\n";
  return report.all_passed() ? 0 : 1;
}
