#ifndef BELLHOPF_NUMBERS_HPP
#define BELLHOPF_NUMBERS_HPP

#include <boost/multiprecision/cpp_dec_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace bellhopf {

namespace mp = boost::multiprecision;

/// Arbitrary-precision signed integer. Expression templates are disabled so
/// arithmetic returns plain values and `auto` behaves.
using Integer = mp::number<mp::cpp_int_backend<>, mp::et_off>;

/// Alias used where a value is non-negative by construction (counts,
/// Stirling/Bell values, multiplicities). Same representation as Integer.
using Natural = Integer;

/// Exact rational; always reduced, denominator > 0.
using Rational =
    mp::number<mp::rational_adaptor<mp::cpp_int_backend<>>, mp::et_off>;

/// High-precision real for the analytically continued quantities
/// (partition function values). 50 decimal digits.
using Real = mp::number<mp::cpp_dec_float<50>, mp::et_off>;

/// Raised by the text parsers (boson words, algebra elements, rationals).
/// `position()` is 1-based and refers to the offending character.
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error("parse error at position " +
                           std::to_string(position) + ": " + what),
        position_(position) {}

  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

/// Renders "p/q", or just "p" when the denominator is 1.
inline std::string to_string(const Rational& r) {
  Integer num = numerator(r);
  Integer den = denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

inline std::string to_string(const Integer& n) { return n.str(); }

/// Parses "p" or "p/q" with an optional leading sign. Whole input must match.
inline Rational parse_rational(std::string_view text) {
  if (text.empty()) throw ParseError("empty rational", 1);
  std::size_t i = 0;
  auto digits_from = [&](std::size_t start) {
    std::size_t j = start;
    while (j < text.size() && text[j] >= '0' && text[j] <= '9') ++j;
    return j;
  };
  if (text[i] == '+' || text[i] == '-') ++i;
  std::size_t num_end = digits_from(i);
  if (num_end == i) throw ParseError("expected digits", i + 1);
  Integer num{std::string(text.substr(0, num_end))};
  if (num_end == text.size()) return Rational(num);
  if (text[num_end] != '/')
    throw ParseError(std::string("unexpected character '") + text[num_end] +
                         "'",
                     num_end + 1);
  std::size_t den_begin = num_end + 1;
  std::size_t den_end = digits_from(den_begin);
  if (den_end == den_begin) throw ParseError("expected digits", den_begin + 1);
  if (den_end != text.size())
    throw ParseError(std::string("unexpected character '") + text[den_end] +
                         "'",
                     den_end + 1);
  Integer den{std::string(text.substr(den_begin, den_end - den_begin))};
  if (den == 0) throw ParseError("zero denominator", den_begin + 1);
  return Rational(num) / Rational(den);
}

/// x^e by repeated squaring; works for any multiplicative type with a
/// one-argument constructor from int.
template <typename T>
T power(T base, unsigned long exponent) {
  T result{1};
  while (exponent != 0) {
    if (exponent & 1u) result = result * base;
    exponent >>= 1u;
    if (exponent != 0) base = base * base;
  }
  return result;
}

} // namespace bellhopf

#endif
