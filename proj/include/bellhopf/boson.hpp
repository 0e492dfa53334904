#ifndef BELLHOPF_BOSON_HPP
#define BELLHOPF_BOSON_HPP

#include <bellhopf/combinatorics.hpp>
#include <bellhopf/numbers.hpp>
#include <bellhopf/polynomial.hpp>
#include <bellhopf/series.hpp>

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace bellhopf::boson {

/// The two letters of the operator alphabet.
enum class Op : unsigned char { annihilate, create };

/// A finite product of boson operators, read left to right. The word text
/// form uses 'a' for the annihilator and 'c' for the creator, so "ca" is
/// the number operator. The empty word is the identity operator.
class BosonWord {
public:
  BosonWord() = default;

  explicit BosonWord(std::vector<Op> letters) : letters_(std::move(letters)) {}

  static BosonWord parse(std::string_view text) {
    std::vector<Op> letters;
    letters.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
      switch (text[i]) {
        case 'a': letters.push_back(Op::annihilate); break;
        case 'c': letters.push_back(Op::create); break;
        default:
          throw ParseError(std::string("invalid character '") + text[i] +
                               "' (word alphabet is {a, c})",
                           i + 1);
      }
    }
    return BosonWord(std::move(letters));
  }

  /// a†a, the word "ca".
  static BosonWord number_operator() {
    return BosonWord({Op::create, Op::annihilate});
  }

  const std::vector<Op>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  std::size_t creator_count() const {
    std::size_t c = 0;
    for (Op op : letters_)
      if (op == Op::create) ++c;
    return c;
  }

  std::size_t annihilator_count() const { return size() - creator_count(); }

  bool is_balanced() const { return 2 * creator_count() == size(); }

  BosonWord repeated(std::size_t n) const {
    std::vector<Op> out;
    out.reserve(letters_.size() * n);
    for (std::size_t i = 0; i < n; ++i)
      out.insert(out.end(), letters_.begin(), letters_.end());
    return BosonWord(std::move(out));
  }

  std::string to_string() const {
    std::string out;
    out.reserve(letters_.size());
    for (Op op : letters_) out += (op == Op::create) ? 'c' : 'a';
    return out;
  }

  friend bool operator==(const BosonWord&, const BosonWord&) = default;

private:
  std::vector<Op> letters_;
};

/// A normally ordered operator: finite sum  c_{r,s} (a†)^r a^s  with exact
/// integer coefficients; zero coefficients are never stored.
class NormalForm {
public:
  using Key = std::pair<unsigned, unsigned>; // (creator power r, annihilator power s)

  NormalForm() = default; // the zero operator

  static NormalForm identity() { return term(0, 0, Integer(1)); }

  static NormalForm term(unsigned r, unsigned s, Integer coeff = Integer(1)) {
    NormalForm nf;
    nf.add_term(r, s, coeff);
    return nf;
  }

  void add_term(unsigned r, unsigned s, const Integer& coeff) {
    if (coeff == 0) return;
    const Key key{r, s};
    auto it = terms_.find(key);
    if (it == terms_.end()) {
      terms_.emplace(key, coeff);
      return;
    }
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }

  const std::map<Key, Integer>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  NormalForm& operator+=(const NormalForm& rhs) {
    for (const auto& [key, coeff] : rhs.terms_)
      add_term(key.first, key.second, coeff);
    return *this;
  }

  friend NormalForm operator+(NormalForm lhs, const NormalForm& rhs) {
    lhs += rhs;
    return lhs;
  }

  friend NormalForm operator*(const NormalForm& nf, const Integer& scalar) {
    NormalForm out;
    if (scalar == 0) return out;
    for (const auto& [key, coeff] : nf.terms_)
      out.terms_.emplace(key, coeff * scalar);
    return out;
  }

  friend NormalForm operator*(const Integer& scalar, const NormalForm& nf) {
    return nf * scalar;
  }

  friend bool operator==(const NormalForm&, const NormalForm&) = default;

  /// Canonical text, terms sorted by descending (r,s): "c^2 a^2 + c a".
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [key, coeff] = *it;
      const bool neg = coeff < 0;
      const Integer mag = neg ? Integer(-coeff) : coeff;
      if (first) {
        if (neg) out += "-";
        first = false;
      } else {
        out += neg ? " - " : " + ";
      }
      std::string piece;
      if (key.first > 0) {
        piece += "c";
        if (key.first > 1) piece += "^" + std::to_string(key.first);
      }
      if (key.second > 0) {
        if (!piece.empty()) piece += " ";
        piece += "a";
        if (key.second > 1) piece += "^" + std::to_string(key.second);
      }
      if (piece.empty()) {
        out += mag.str();
      } else {
        if (mag != 1) out += mag.str() + " ";
        out += piece;
      }
    }
    return out;
  }

  /// JSON array of {"r":..,"s":..,"coeff":"<decimal>"} in the same
  /// descending term order as to_string(); stable byte-for-byte.
  std::string to_json() const {
    std::string out = "[";
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      if (!first) out += ",";
      first = false;
      out += "{\"r\":" + std::to_string(it->first.first) +
             ",\"s\":" + std::to_string(it->first.second) + ",\"coeff\":\"" +
             it->second.str() + "\"}";
    }
    return out + "]";
  }

private:
  std::map<Key, Integer> terms_;
};

/// Right-multiplies a normal form by one letter, rewriting with
/// [a, a†] = 1 and collecting terms:
///   (a†)^r a^s · a  = (a†)^r a^{s+1}
///   (a†)^r a^s · a† = (a†)^{r+1} a^s + s (a†)^r a^{s-1}
inline NormalForm append_letter(const NormalForm& nf, Op op) {
  NormalForm out;
  for (const auto& [key, coeff] : nf.terms()) {
    const auto [r, s] = key;
    if (op == Op::annihilate) {
      out.add_term(r, s + 1, coeff);
    } else {
      out.add_term(r + 1, s, coeff);
      if (s > 0) out.add_term(r, s - 1, coeff * Integer(s));
    }
  }
  return out;
}

inline NormalForm append_word(NormalForm nf, const BosonWord& word) {
  for (Op op : word.letters()) nf = append_letter(nf, op);
  return nf;
}

/// Unique normal form of a word, creators left of annihilators.
inline NormalForm normal_order(const BosonWord& word) {
  return append_word(NormalForm::identity(), word);
}

/// Linear extension to formal integer combinations of words.
inline NormalForm normal_order(
    const std::vector<std::pair<Integer, BosonWord>>& sum) {
  NormalForm out;
  for (const auto& [coeff, word] : sum) out += normal_order(word) * coeff;
  return out;
}

/// (a†a)^n = sum_{k=1}^{n} S(n,k) (a†)^k a^k, directly from the Stirling
/// table; an independent route kept separate from the rewriter so the two
/// can cross-validate. n = 0 gives the identity.
inline NormalForm normal_order_nhat_power(std::size_t n) {
  if (n == 0) return NormalForm::identity();
  NormalForm out;
  const auto row = combinatorics::stirling_row(n);
  for (std::size_t k = 1; k <= n; ++k)
    out.add_term(static_cast<unsigned>(k), static_cast<unsigned>(k), row[k]);
  return out;
}

/// Exact value of a coherent-state diagonal expectation: a polynomial in
/// zbar and z with rational coefficients, stored sparsely as
/// (r,s) -> coefficient of zbar^r z^s. Balanced values (all r == s)
/// are polynomials in ybar = |z|^2.
class CoherentValue {
public:
  using Key = std::pair<unsigned, unsigned>;

  CoherentValue() = default; // zero

  CoherentValue(const Rational& c) { add_term(0, 0, c); } // NOLINT
  CoherentValue(const Integer& c) : CoherentValue(Rational(c)) {}
  CoherentValue(int c) : CoherentValue(Rational(c)) {}

  static CoherentValue term(unsigned r, unsigned s,
                            Rational coeff = Rational(1)) {
    CoherentValue v;
    v.add_term(r, s, coeff);
    return v;
  }

  /// ybar^k as the balanced monomial zbar^k z^k.
  static CoherentValue ybar_power(unsigned k, Rational coeff = Rational(1)) {
    return term(k, k, std::move(coeff));
  }

  void add_term(unsigned r, unsigned s, const Rational& coeff) {
    if (coeff == 0) return;
    const Key key{r, s};
    auto it = terms_.find(key);
    if (it == terms_.end()) {
      terms_.emplace(key, coeff);
      return;
    }
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }

  const std::map<Key, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  bool is_balanced() const {
    for (const auto& [key, coeff] : terms_)
      if (key.first != key.second) return false;
    return true;
  }

  CoherentValue& operator+=(const CoherentValue& rhs) {
    for (const auto& [key, coeff] : rhs.terms_)
      add_term(key.first, key.second, coeff);
    return *this;
  }

  friend CoherentValue operator+(CoherentValue lhs, const CoherentValue& rhs) {
    lhs += rhs;
    return lhs;
  }

  friend CoherentValue operator-(const CoherentValue& lhs,
                                 const CoherentValue& rhs) {
    CoherentValue out = lhs;
    for (const auto& [key, coeff] : rhs.terms_)
      out.add_term(key.first, key.second, -coeff);
    return out;
  }

  friend CoherentValue operator*(const CoherentValue& lhs,
                                 const CoherentValue& rhs) {
    CoherentValue out;
    for (const auto& [k1, c1] : lhs.terms_)
      for (const auto& [k2, c2] : rhs.terms_)
        out.add_term(k1.first + k2.first, k1.second + k2.second, c1 * c2);
    return out;
  }

  friend bool operator==(const CoherentValue&, const CoherentValue&) = default;

  /// Balanced values as polynomials in ybar = |z|^2.
  YPolynomial to_ybar_polynomial() const {
    std::vector<Rational> coeffs;
    for (const auto& [key, coeff] : terms_) {
      if (key.first != key.second)
        throw std::domain_error(
            "CoherentValue: unbalanced term zbar^" +
            std::to_string(key.first) + " z^" + std::to_string(key.second) +
            " has no ybar form");
      if (coeffs.size() <= key.first) coeffs.resize(key.first + 1);
      coeffs[key.first] = coeff;
    }
    return YPolynomial(std::move(coeffs));
  }

  /// Substitutes ybar -> value (balanced values only).
  Rational evaluate_ybar(const Rational& ybar) const {
    return to_ybar_polynomial().evaluate(ybar);
  }

  /// Substitutes zbar = z = a real value; works for any value.
  Rational evaluate_real(const Rational& z) const {
    Rational acc(0);
    for (const auto& [key, coeff] : terms_)
      acc += coeff * power(z, key.first + key.second);
    return acc;
  }

  /// Balanced values print as ybar polynomials ("ybar + 3 ybar^2");
  /// unbalanced ones in zbar/z form ("zbar^2 z + zbar").
  std::string to_string() const {
    if (is_balanced()) return to_ybar_polynomial().to_string("ybar");
    std::string out;
    bool first = true;
    for (const auto& [key, coeff] : terms_) {
      const bool neg = coeff < 0;
      if (first) {
        if (neg) out += "-";
        first = false;
      } else {
        out += neg ? " - " : " + ";
      }
      const std::string mag = bellhopf::detail::rational_abs_string(coeff);
      std::string piece;
      if (key.first > 0) {
        piece += "zbar";
        if (key.first > 1) piece += "^" + std::to_string(key.first);
      }
      if (key.second > 0) {
        if (!piece.empty()) piece += " ";
        piece += "z";
        if (key.second > 1) piece += "^" + std::to_string(key.second);
      }
      if (piece.empty()) {
        out += mag;
      } else {
        if (mag != "1") out += mag + " ";
        out += piece;
      }
    }
    return out;
  }

private:
  std::map<Key, Rational> terms_;
};

/// <z| sum c_{r,s} (a†)^r a^s |z> = sum c_{r,s} zbar^r z^s, using
/// a|z> = z|z> on normalized coherent states.
inline CoherentValue coherent_expectation(const NormalForm& nf) {
  CoherentValue out;
  for (const auto& [key, coeff] : nf.terms())
    out.add_term(key.first, key.second, Rational(coeff));
  return out;
}

/// The partition function integrand F(x,z) = <z|exp(x w)|z> as a truncated
/// EGF: c_n = <z|w^n|z>. Normal forms of the powers are built incrementally.
inline series::ExpSeries<CoherentValue> egf_expectation(const BosonWord& word,
                                                        std::size_t order) {
  series::ExpSeries<CoherentValue> out(order);
  NormalForm nf = NormalForm::identity();
  out.set_coefficient(0, coherent_expectation(nf));
  for (std::size_t n = 1; n <= order; ++n) {
    nf = append_word(std::move(nf), word);
    out.set_coefficient(n, coherent_expectation(nf));
  }
  return out;
}

/// Same series with coefficients as ybar polynomials; requires a balanced
/// word (equal creator and annihilator counts).
inline series::ExpSeries<YPolynomial> egf_expectation_ybar(
    const BosonWord& word, std::size_t order) {
  if (!word.is_balanced())
    throw std::domain_error(
        "egf_expectation_ybar: word '" + word.to_string() +
        "' is unbalanced; its expectations are not polynomials in ybar");
  const auto general = egf_expectation(word, order);
  series::ExpSeries<YPolynomial> out(order);
  for (std::size_t n = 0; n <= order; ++n)
    out.set_coefficient(n, general.coefficient(n).to_ybar_polynomial());
  return out;
}

} // namespace bellhopf::boson

#endif
