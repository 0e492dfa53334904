#ifndef BELLHOPF_MONOMIAL_HPP
#define BELLHOPF_MONOMIAL_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace bellhopf {

/// A commutative word over the infinite alphabet {y1, y2, ...}: the product
/// ∏ y_k^{m_k}, stored as index -> exponent with zero exponents dropped.
/// The empty product is the unit, printed "e". Degree counts letters
/// (Σ m_k); weight sums indices with multiplicity (Σ k·m_k). Monomials
/// correspond bijectively to integer partitions: weight-n monomials are
/// partitions of n, with y_k contributing a part k.
class Monomial {
public:
  Monomial() = default; // the unit e

  static Monomial variable(unsigned index, unsigned exponent = 1) {
    Monomial m;
    m.multiply_variable(index, exponent);
    return m;
  }

  /// Builds the monomial whose parts (with multiplicity) are given; order
  /// does not matter. {2,1,1} -> y1^2*y2.
  static Monomial from_parts(const std::vector<unsigned>& parts) {
    Monomial m;
    for (unsigned k : parts) m.multiply_variable(k, 1);
    return m;
  }

  Monomial& multiply_variable(unsigned index, unsigned exponent) {
    if (index == 0) throw std::invalid_argument("Monomial: index must be >= 1");
    if (exponent > 0) exponents_[index] += exponent;
    return *this;
  }

  const std::map<unsigned, unsigned>& exponents() const { return exponents_; }

  unsigned exponent_of(unsigned index) const {
    auto it = exponents_.find(index);
    return it == exponents_.end() ? 0u : it->second;
  }

  bool is_unit() const { return exponents_.empty(); }

  /// Number of letters, Σ m_k.
  unsigned degree() const {
    unsigned d = 0;
    for (const auto& [k, e] : exponents_) d += e;
    return d;
  }

  /// Σ k·m_k — the ground-set size of the coded diagram shape.
  unsigned weight() const {
    unsigned w = 0;
    for (const auto& [k, e] : exponents_) w += k * e;
    return w;
  }

  /// The coded integer partition, parts descending: y1^2*y2 -> {2,1,1}.
  std::vector<unsigned> parts() const {
    std::vector<unsigned> out;
    out.reserve(degree());
    for (auto it = exponents_.rbegin(); it != exponents_.rend(); ++it)
      out.insert(out.end(), it->second, it->first);
    return out;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial out = a;
    for (const auto& [k, e] : b.exponents_) out.exponents_[k] += e;
    return out;
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;

  /// Total order: lexicographic on the descending part vectors, so within
  /// one weight the all-singletons code comes first and the connected code
  /// last (y1^3 < y1*y2 < y3), matching the census listing order.
  friend std::strong_ordering operator<=>(const Monomial& a,
                                          const Monomial& b) {
    const auto pa = a.parts();
    const auto pb = b.parts();
    return std::lexicographical_compare_three_way(pa.begin(), pa.end(),
                                                  pb.begin(), pb.end());
  }

  /// "e", "y3", "y1^2*y3" — factors by ascending index.
  std::string to_string() const {
    if (exponents_.empty()) return "e";
    std::string out;
    bool first = true;
    for (const auto& [k, e] : exponents_) {
      if (!first) out += "*";
      first = false;
      out += "y" + std::to_string(k);
      if (e > 1) out += "^" + std::to_string(e);
    }
    return out;
  }

private:
  std::map<unsigned, unsigned> exponents_;
};

} // namespace bellhopf

#endif
