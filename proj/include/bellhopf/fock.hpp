#ifndef BELLHOPF_FOCK_HPP
#define BELLHOPF_FOCK_HPP

#include <bellhopf/boson.hpp>
#include <bellhopf/numbers.hpp>

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace bellhopf::boson {

/// Result of evaluating <z|w^n|z> in a truncated number basis. The error
/// estimate compares against a smaller truncation, so it reflects how much
/// probability the operator word pushed past the cutoff.
struct FockExpectation {
  double value = 0.0;
  double error_estimate = 0.0;
  std::size_t dimension = 0;
  bool converged = false;
};

namespace detail {

// (a v)[m] = sqrt(m+1) v[m+1]; the top component has nowhere to come from.
inline void apply_annihilator(std::vector<double>& v) {
  const std::size_t dim = v.size();
  for (std::size_t m = 0; m + 1 < dim; ++m)
    v[m] = std::sqrt(static_cast<double>(m + 1)) * v[m + 1];
  v[dim - 1] = 0.0;
}

// (a† v)[m] = sqrt(m) v[m-1]; the top component falls off the cutoff.
inline void apply_creator(std::vector<double>& v) {
  const std::size_t dim = v.size();
  for (std::size_t m = dim; m-- > 1;)
    v[m] = std::sqrt(static_cast<double>(m)) * v[m - 1];
  v[0] = 0.0;
}

inline double expectation_in_dimension(const BosonWord& word, std::size_t n,
                                       double z, std::size_t dim) {
  // Coherent state, normalized within the truncated space: v[m] ~ z^m/sqrt(m!).
  std::vector<double> v(dim, 0.0);
  v[0] = 1.0;
  for (std::size_t m = 1; m < dim; ++m)
    v[m] = v[m - 1] * z / std::sqrt(static_cast<double>(m));
  double norm2 = 0.0;
  for (double x : v) norm2 += x * x;
  const double inv_norm = 1.0 / std::sqrt(norm2);
  for (double& x : v) x *= inv_norm;

  const std::vector<double> bra = v; // real z, real amplitudes
  std::vector<double> ket = v;
  for (std::size_t rep = 0; rep < n; ++rep) {
    // A word acts as a composition, rightmost letter first.
    const auto& letters = word.letters();
    for (std::size_t i = letters.size(); i-- > 0;) {
      if (letters[i] == Op::annihilate)
        apply_annihilator(ket);
      else
        apply_creator(ket);
    }
  }

  double dot = 0.0;
  for (std::size_t m = 0; m < dim; ++m) dot += bra[m] * ket[m];
  return dot;
}

} // namespace detail

/// Numeric <z|w^n|z> for real z, computed matrix-free in a dim-dimensional
/// number basis and re-computed at a smaller cutoff for the error estimate.
inline FockExpectation fock_expectation(const BosonWord& word, std::size_t n,
                                        const Rational& z, std::size_t dim,
                                        double tolerance = 1e-8) {
  if (dim < 16)
    throw std::domain_error("fock_expectation: dimension " +
                            std::to_string(dim) + " is below the minimum 16");
  const double zd = static_cast<double>(z);
  const double full = detail::expectation_in_dimension(word, n, zd, dim);
  const double reduced =
      detail::expectation_in_dimension(word, n, zd, dim - 8);
  FockExpectation out;
  out.value = full;
  out.error_estimate = std::abs(full - reduced);
  out.dimension = dim;
  out.converged = out.error_estimate <= tolerance;
  return out;
}

} // namespace bellhopf::boson

#endif
