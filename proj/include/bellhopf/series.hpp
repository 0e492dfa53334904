#ifndef BELLHOPF_SERIES_HPP
#define BELLHOPF_SERIES_HPP

#include <bellhopf/combinatorics.hpp>
#include <bellhopf/numbers.hpp>

#include <concepts>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace bellhopf::series {

/// Coefficient ring requirements: commutative +,-,* with value semantics,
/// zero via default construction, and embedding of Integer (the binomial
/// weights of the EGF convolution).
template <typename C>
concept CoefficientRing =
    std::regular<C> && requires(const C& a, const C& b, const Integer& n) {
      { a + b } -> std::convertible_to<C>;
      { a - b } -> std::convertible_to<C>;
      { a * b } -> std::convertible_to<C>;
      C(n);
      C(1);
    };

inline constexpr std::size_t default_order = 16;

/// Truncated exponential generating function with exact coefficients:
/// f(x) = sum_n c_n x^n / n! + O(x^{order+1}). The divided-power convention
/// keeps Bell/Stirling data integral. Arithmetic never extends the order;
/// binary operations truncate to the smaller operand.
template <CoefficientRing C>
class ExpSeries {
public:
  /// Zero series of the given truncation order.
  explicit ExpSeries(std::size_t order) : coeffs_(order + 1, C{}) {}

  explicit ExpSeries(std::vector<C> coefficients)
      : coeffs_(std::move(coefficients)) {
    if (coeffs_.empty())
      throw std::invalid_argument("ExpSeries: need at least c0");
  }

  std::size_t order() const { return coeffs_.size() - 1; }

  const C& coefficient(std::size_t n) const {
    if (n >= coeffs_.size())
      throw std::out_of_range("ExpSeries::coefficient: index " +
                              std::to_string(n) + " exceeds order " +
                              std::to_string(order()));
    return coeffs_[n];
  }

  const std::vector<C>& coefficients() const { return coeffs_; }

  void set_coefficient(std::size_t n, C value) {
    if (n >= coeffs_.size())
      throw std::out_of_range("ExpSeries::set_coefficient: index exceeds order");
    coeffs_[n] = std::move(value);
  }

  /// Truncate (or zero-extend) to a new order.
  ExpSeries truncated(std::size_t new_order) const {
    std::vector<C> out(new_order + 1, C{});
    for (std::size_t n = 0; n <= std::min(new_order, order()); ++n)
      out[n] = coeffs_[n];
    return ExpSeries(std::move(out));
  }

  friend bool operator==(const ExpSeries&, const ExpSeries&) = default;

private:
  std::vector<C> coeffs_;
};

template <CoefficientRing C>
ExpSeries<C> operator+(const ExpSeries<C>& f, const ExpSeries<C>& g) {
  const std::size_t order = std::min(f.order(), g.order());
  ExpSeries<C> out(order);
  for (std::size_t n = 0; n <= order; ++n)
    out.set_coefficient(n, C(f.coefficient(n) + g.coefficient(n)));
  return out;
}

template <CoefficientRing C>
ExpSeries<C> operator-(const ExpSeries<C>& f, const ExpSeries<C>& g) {
  const std::size_t order = std::min(f.order(), g.order());
  ExpSeries<C> out(order);
  for (std::size_t n = 0; n <= order; ++n)
    out.set_coefficient(n, C(f.coefficient(n) - g.coefficient(n)));
  return out;
}

/// EGF product: c_n(fg) = sum_k C(n,k) c_k(f) c_{n-k}(g).
template <CoefficientRing C>
ExpSeries<C> operator*(const ExpSeries<C>& f, const ExpSeries<C>& g) {
  const std::size_t order = std::min(f.order(), g.order());
  ExpSeries<C> out(order);
  for (std::size_t n = 0; n <= order; ++n) {
    C acc{};
    for (std::size_t k = 0; k <= n; ++k) {
      const C w{combinatorics::binomial(n, k)};
      acc = C(acc + C(C(w * f.coefficient(k)) * g.coefficient(n - k)));
    }
    out.set_coefficient(n, std::move(acc));
  }
  return out;
}

/// exp of a series with zero constant term, via
/// c_n(e^f) = sum_{k=1}^{n} C(n-1,k-1) c_k(f) c_{n-k}(e^f), c_0 = 1.
/// Exact over any coefficient ring: no division occurs.
template <CoefficientRing C>
ExpSeries<C> exp(const ExpSeries<C>& f) {
  if (!(f.coefficient(0) == C{}))
    throw std::domain_error("series exp: nonzero constant term");
  ExpSeries<C> g(f.order());
  g.set_coefficient(0, C(1));
  for (std::size_t n = 1; n <= f.order(); ++n) {
    C acc{};
    for (std::size_t k = 1; k <= n; ++k) {
      const C w{combinatorics::binomial(n - 1, k - 1)};
      acc = C(acc + C(C(w * f.coefficient(k)) * g.coefficient(n - k)));
    }
    g.set_coefficient(n, std::move(acc));
  }
  return g;
}

/// Inverse of exp for series with unit constant term:
/// c_n(log f) = c_n(f) - sum_{k=1}^{n-1} C(n-1,k-1) c_k(log f) c_{n-k}(f).
template <CoefficientRing C>
ExpSeries<C> log(const ExpSeries<C>& f) {
  if (!(f.coefficient(0) == C(1)))
    throw std::domain_error("series log: constant term is not 1");
  ExpSeries<C> g(f.order());
  for (std::size_t n = 1; n <= f.order(); ++n) {
    C acc = f.coefficient(n);
    for (std::size_t k = 1; k < n; ++k) {
      const C w{combinatorics::binomial(n - 1, k - 1)};
      acc = C(acc - C(C(w * g.coefficient(k)) * f.coefficient(n - k)));
    }
    g.set_coefficient(n, std::move(acc));
  }
  return g;
}

/// The series e^x - 1: c_0 = 0, c_n = 1 for n >= 1.
template <CoefficientRing C>
ExpSeries<C> exp_x_minus_one(std::size_t order) {
  ExpSeries<C> f(order);
  for (std::size_t n = 1; n <= order; ++n) f.set_coefficient(n, C(1));
  return f;
}

/// a*(e^x - 1): the seed whose exp has coefficients B_n(a).
template <CoefficientRing C>
ExpSeries<C> scaled_exp_x_minus_one(const C& a, std::size_t order) {
  ExpSeries<C> f(order);
  for (std::size_t n = 1; n <= order; ++n) f.set_coefficient(n, a);
  return f;
}

} // namespace bellhopf::series

#endif
