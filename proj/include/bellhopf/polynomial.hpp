#ifndef BELLHOPF_POLYNOMIAL_HPP
#define BELLHOPF_POLYNOMIAL_HPP

#include <bellhopf/numbers.hpp>

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace bellhopf {

/// Dense univariate polynomial over a coefficient ring T. The coefficient
/// vector is kept canonical: no trailing zeros, so degree() is the index of
/// the last stored entry and the zero polynomial stores nothing.
template <typename T>
class Polynomial {
public:
  Polynomial() = default;

  Polynomial(const T& constant) { // NOLINT: implicit by design
    coeffs_.push_back(constant);
    trim();
  }

  Polynomial(const Integer& constant) : Polynomial(T(constant)) {}
  Polynomial(int constant) : Polynomial(T(constant)) {}

  explicit Polynomial(std::vector<T> coefficients)
      : coeffs_(std::move(coefficients)) {
    trim();
  }

  /// c * var^k
  static Polynomial monomial(std::size_t k, const T& c = T(1)) {
    std::vector<T> v(k + 1, T{});
    v[k] = c;
    return Polynomial(std::move(v));
  }

  static Polynomial variable() { return monomial(1); }

  bool is_zero() const { return coeffs_.empty(); }

  /// Degree of the zero polynomial is -1 by convention.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }

  const std::vector<T>& coefficients() const { return coeffs_; }

  T coefficient(std::size_t k) const {
    if (k >= coeffs_.size()) return T{};
    return coeffs_[k];
  }

  /// Exponents whose coefficient is nonzero, ascending.
  std::vector<std::size_t> support() const {
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
      if (!(coeffs_[k] == T{})) out.push_back(k);
    return out;
  }

  T evaluate(const T& x) const {
    T acc{};
    for (std::size_t k = coeffs_.size(); k-- > 0;) acc = acc * x + coeffs_[k];
    return acc;
  }

  Polynomial operator-() const {
    Polynomial out = *this;
    for (auto& c : out.coeffs_) c = T{} - c;
    return out;
  }

  Polynomial& operator+=(const Polynomial& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k)
      coeffs_[k] = coeffs_[k] + rhs.coeffs_[k];
    trim();
    return *this;
  }

  Polynomial& operator-=(const Polynomial& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k)
      coeffs_[k] = coeffs_[k] - rhs.coeffs_[k];
    trim();
    return *this;
  }

  friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) {
    lhs += rhs;
    return lhs;
  }

  friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) {
    lhs -= rhs;
    return lhs;
  }

  friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) return Polynomial{};
    std::vector<T> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1, T{});
    for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
        out[i + j] = out[i + j] + lhs.coeffs_[i] * rhs.coeffs_[j];
    return Polynomial(std::move(out));
  }

  friend Polynomial operator*(const Polynomial& lhs, const T& scalar) {
    Polynomial out = lhs;
    for (auto& c : out.coeffs_) c = c * scalar;
    out.trim();
    return out;
  }

  friend Polynomial operator*(const T& scalar, const Polynomial& rhs) {
    return rhs * scalar;
  }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  /// Human form, terms by ascending power: "y + 3 y^2 + y^3".
  std::string to_string(const std::string& var = "y") const;

private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == T{}) coeffs_.pop_back();
  }

  std::vector<T> coeffs_;
};

/// Polynomials in the single indeterminate y (or ybar = |z|^2 downstream);
/// Rational coefficients keep Bell/Stirling entries exact.
using YPolynomial = Polynomial<Rational>;

namespace detail {

inline bool rational_is_negative(const Rational& r) { return r < 0; }

inline std::string rational_abs_string(const Rational& r) {
  return to_string(r < 0 ? Rational(-r) : r);
}

} // namespace detail

template <typename T>
std::string Polynomial<T>::to_string(const std::string& var) const {
  static_assert(std::is_same_v<T, Rational>,
                "printing is provided for Rational coefficients");
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const T& c = coeffs_[k];
    if (c == T{}) continue;
    const bool neg = detail::rational_is_negative(c);
    if (first) {
      if (neg) out += "-";
      first = false;
    } else {
      out += neg ? " - " : " + ";
    }
    const std::string mag = detail::rational_abs_string(c);
    if (k == 0) {
      out += mag;
    } else {
      if (mag != "1") out += mag + " ";
      out += var;
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out;
}

} // namespace bellhopf

#endif
