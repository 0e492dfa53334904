#ifndef BELLHOPF_STATMECH_HPP
#define BELLHOPF_STATMECH_HPP

#include <bellhopf/boson.hpp>
#include <bellhopf/combinatorics.hpp>
#include <bellhopf/diagrams.hpp>
#include <bellhopf/numbers.hpp>
#include <bellhopf/polynomial.hpp>
#include <bellhopf/series.hpp>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace bellhopf::statmech {

/// A single-mode model H = ε·w(a,a†) at inverse temperature β; the series
/// variable is x = −βε, negative for any physical temperature.
struct ModelSpec {
  boson::BosonWord word = boson::BosonWord::number_operator();
  Real energy_scale{1};
  Real inverse_temperature{1};

  Real beta_epsilon() const { return inverse_temperature * energy_scale; }
  Real x() const { return -beta_epsilon(); }

  void validate() const {
    if (!(energy_scale > 0))
      throw std::domain_error("ModelSpec: energy scale must be positive");
    if (!(inverse_temperature > 0))
      throw std::domain_error("ModelSpec: inverse temperature must be positive");
  }
};

/// <z|exp(x a†a)|z> = exp(ybar(e^x − 1)) as a truncated EGF in x; the n-th
/// coefficient is the Bell polynomial B_n(ybar). This is the closed route;
/// the operator route is boson::egf_expectation_ybar on the word "ca".
inline series::ExpSeries<YPolynomial> pfi_free_boson(std::size_t order) {
  return series::exp(series::scaled_exp_x_minus_one<YPolynomial>(
      YPolynomial::variable(), order));
}

/// 1/(1 − e^{−βε}), the geometric sum over number states.
inline Real partition_function_closed(const Real& beta_epsilon) {
  if (!(beta_epsilon > 0))
    throw std::domain_error(
        "partition_function_closed: beta*epsilon must be positive "
        "(the geometric series diverges otherwise)");
  return Real(1) / (Real(1) - exp(-beta_epsilon));
}

struct QuadratureResult {
  Real value;       // finite-interval quadrature plus the analytic tail
  Real simpson;     // composite-Simpson piece over [0, upper]
  Real tail;        // exact tail integral e^{upper·(e^x−1)} / (1 − e^x)
  Real error_bound; // Simpson remainder bound (upper/180)·h^4·(e^x−1)^4
  Real upper;
  std::size_t steps = 0;
};

/// ∫₀^∞ e^{y(e^x−1)} dy by composite Simpson on [0, upper] plus the exact
/// exponential tail. Requires x < 0 so the integrand decays. Summation
/// order is fixed, so results are bit-stable.
inline QuadratureResult partition_function_quadrature(const Real& x,
                                                      const Real& upper = Real(60),
                                                      std::size_t steps = 8192) {
  if (!(x < 0))
    throw std::domain_error(
        "partition_function_quadrature: x must be negative "
        "(the y-integral diverges for x >= 0)");
  if (!(upper > 0))
    throw std::domain_error("partition_function_quadrature: upper must be positive");
  if (steps < 2) steps = 2;
  if (steps % 2 != 0) ++steps; // Simpson needs an even panel count

  const Real c = exp(x) - Real(1); // < 0
  const auto f = [&](const Real& y) { return exp(c * y); };
  const Real h = upper / Real(static_cast<unsigned>(steps));

  Real odd_sum(0), even_sum(0);
  for (std::size_t i = 1; i < steps; ++i) {
    const Real yi = h * Real(static_cast<unsigned>(i));
    if (i % 2 == 1)
      odd_sum += f(yi);
    else
      even_sum += f(yi);
  }
  QuadratureResult out;
  out.simpson =
      (f(Real(0)) + f(upper) + Real(4) * odd_sum + Real(2) * even_sum) * h /
      Real(3);
  out.tail = exp(c * upper) / (Real(1) - exp(x));
  out.value = out.simpson + out.tail;
  // |d^4/dy^4 e^{cy}| = c^4 e^{cy} <= c^4 on y >= 0.
  out.error_bound = (upper / Real(180)) * h * h * h * h * c * c * c * c;
  out.upper = upper;
  out.steps = steps;
  return out;
}

/// The term-wise story of why Z cannot be computed by integrating the
/// series term by term: every term B_n(y)·x^n/n! of the expanded integrand
/// contains only monomials y^k, and ∫₀^∞ y^k dy diverges for every k >= 0.
struct DivergenceReport {
  struct Row {
    unsigned n = 0;
    YPolynomial term;                 // B_n(y)
    std::vector<std::size_t> powers;  // exponents appearing in the term
    bool divergent = true;            // each power integrates to infinity
  };
  std::size_t order = 0;
  std::vector<Row> rows; // n = 0..order

  bool all_divergent() const {
    for (const auto& r : rows)
      if (!r.divergent) return false;
    return true;
  }
};

inline DivergenceReport termwise_divergence_report(std::size_t order) {
  DivergenceReport report;
  report.order = order;
  for (std::size_t n = 0; n <= order; ++n) {
    DivergenceReport::Row row;
    row.n = static_cast<unsigned>(n);
    row.term = combinatorics::bell_polynomial(n);
    row.powers = row.term.support();
    row.divergent = true; // ∫₀^∞ y^k dy = ∞ for every k >= 0
    report.rows.push_back(std::move(row));
  }
  return report;
}

/// Moments W_0..W_N of a state-normalized model: W_0 = 1 always.
template <series::CoefficientRing C>
class MomentSequence {
public:
  explicit MomentSequence(series::ExpSeries<C> series)
      : series_(std::move(series)) {
    if (!(series_.coefficient(0) == C(1)))
      throw std::domain_error(
          "MomentSequence: W_0 must be 1 (state normalization)");
  }

  explicit MomentSequence(std::vector<C> values)
      : MomentSequence(series::ExpSeries<C>(std::move(values))) {}

  std::size_t order() const { return series_.order(); }
  const C& moment(std::size_t n) const { return series_.coefficient(n); }
  const series::ExpSeries<C>& series() const { return series_; }

  friend bool operator==(const MomentSequence&, const MomentSequence&) = default;

private:
  series::ExpSeries<C> series_;
};

/// Cumulants V_1..V_N; indexing starts at 1 (V_0 would be log W_0 = 0).
template <series::CoefficientRing C>
class CumulantSequence {
public:
  explicit CumulantSequence(std::vector<C> values) : values_(std::move(values)) {}

  std::size_t order() const { return values_.size(); }

  const C& cumulant(std::size_t n) const {
    if (n < 1 || n > values_.size())
      throw std::out_of_range("CumulantSequence: index " + std::to_string(n) +
                              " outside 1.." + std::to_string(values_.size()));
    return values_[n - 1];
  }

  const std::vector<C>& values() const { return values_; }

  /// As an EGF with zero constant term, ready for series::exp.
  series::ExpSeries<C> to_series() const {
    series::ExpSeries<C> s(values_.size());
    for (std::size_t n = 1; n <= values_.size(); ++n)
      s.set_coefficient(n, values_[n - 1]);
    return s;
  }

  friend bool operator==(const CumulantSequence&, const CumulantSequence&) = default;

private:
  std::vector<C> values_;
};

/// V from W by the series logarithm: Σ V_n x^n/n! = log Σ W_n x^n/n!.
template <series::CoefficientRing C>
CumulantSequence<C> moments_to_cumulants(const MomentSequence<C>& w) {
  const auto lg = series::log(w.series());
  std::vector<C> v(lg.coefficients().begin() + 1, lg.coefficients().end());
  return CumulantSequence<C>(std::move(v));
}

/// W from V by the series exponential; inverse of moments_to_cumulants.
template <series::CoefficientRing C>
MomentSequence<C> cumulants_to_moments(const CumulantSequence<C>& v) {
  return MomentSequence<C>(series::exp(v.to_series()));
}

/// W_n as a sum over diagram shapes: Σ_shapes multiplicity(s)·∏_parts V_k.
/// The closed-multiplicity route; works for any n with cumulants supplied.
template <series::CoefficientRing C>
C graph_expansion(const CumulantSequence<C>& v, std::size_t n) {
  if (n > v.order())
    throw std::out_of_range("graph_expansion: W_" + std::to_string(n) +
                            " needs cumulants up to V_" + std::to_string(n));
  C total{};
  combinatorics::enumerate_integer_partitions(
      static_cast<unsigned>(n), [&](const std::vector<unsigned>& parts) {
        C prod{C(1)};
        for (unsigned k : parts) prod = C(prod * v.cumulant(k));
        const diagrams::DiagramShape shape{parts};
        const C mult{Integer(diagrams::shape_multiplicity(shape))};
        total = C(total + C(mult * prod));
      });
  return total;
}

/// The same sum, one labeled diagram at a time: Σ_diagrams ∏_vertices
/// V_{degree}. Exponentially slower (bell(n) visits); the cross-check route.
template <series::CoefficientRing C>
C graph_expansion_enumerated(const CumulantSequence<C>& v, std::size_t n) {
  if (n > v.order())
    throw std::out_of_range("graph_expansion_enumerated: W_" +
                            std::to_string(n) + " needs cumulants up to V_" +
                            std::to_string(n));
  C total{};
  diagrams::enumerate_labeled_diagrams(n, [&](const diagrams::LabeledDiagram& d) {
    C prod{C(1)};
    for (const auto& block : d.blocks()) prod = C(prod * v.cumulant(block.size()));
    total = C(total + prod);
  });
  return total;
}

/// Moments and cumulants of F(x,z) = <z|exp(xw)|z> for a balanced word w,
/// as polynomials in ybar = |z|^2. W comes from the normal-ordering engine,
/// V from the series logarithm.
struct PfiPolynomials {
  MomentSequence<YPolynomial> moments;
  CumulantSequence<YPolynomial> cumulants;
};

inline PfiPolynomials pfi_general(const boson::BosonWord& word,
                                  std::size_t order) {
  MomentSequence<YPolynomial> w(boson::egf_expectation_ybar(word, order));
  auto v = moments_to_cumulants(w);
  return {std::move(w), std::move(v)};
}

/// pfi_general specialized at a numeric ybar.
struct PfiValues {
  MomentSequence<Rational> moments;
  CumulantSequence<Rational> cumulants;
};

inline PfiValues pfi_at(const boson::BosonWord& word, std::size_t order,
                        const Rational& ybar) {
  const PfiPolynomials p = pfi_general(word, order);
  std::vector<Rational> w;
  w.reserve(order + 1);
  for (std::size_t n = 0; n <= order; ++n)
    w.push_back(p.moments.moment(n).evaluate(ybar));
  std::vector<Rational> v;
  v.reserve(order);
  for (std::size_t n = 1; n <= order; ++n)
    v.push_back(p.cumulants.cumulant(n).evaluate(ybar));
  return {MomentSequence<Rational>(std::move(w)),
          CumulantSequence<Rational>(std::move(v))};
}

// -- JSON rendering ----------------------------------------------------------

namespace detail {

inline std::string json_value(const Rational& r) {
  return "\"" + bellhopf::to_string(r) + "\"";
}

/// YPolynomials render as ascending coefficient lists; ybar -> ["0","1"].
inline std::string json_value(const YPolynomial& p) {
  std::string out = "[";
  const auto& coeffs = p.coefficients();
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (k) out += ",";
    out += json_value(coeffs[k]);
  }
  return out + "]";
}

} // namespace detail

/// {"order":N,"W":[...],"V":[...]} — W indexed 0..N, V indexed 1..N.
template <series::CoefficientRing C>
std::string sequences_to_json(const MomentSequence<C>& w,
                              const CumulantSequence<C>& v) {
  std::string out = "{\"order\":" + std::to_string(w.order()) + ",\"W\":[";
  for (std::size_t n = 0; n <= w.order(); ++n) {
    if (n) out += ",";
    out += detail::json_value(w.moment(n));
  }
  out += "],\"V\":[";
  for (std::size_t n = 1; n <= v.order(); ++n) {
    if (n > 1) out += ",";
    out += detail::json_value(v.cumulant(n));
  }
  return out + "]}";
}

} // namespace bellhopf::statmech

#endif
