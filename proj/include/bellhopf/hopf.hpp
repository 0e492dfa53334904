#ifndef BELLHOPF_HOPF_HPP
#define BELLHOPF_HOPF_HPP

#include <bellhopf/combinatorics.hpp>
#include <bellhopf/monomial.hpp>
#include <bellhopf/numbers.hpp>

#include <cstddef>
#include <map>
#include <random>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

namespace bellhopf::hopf {

/// The two graded bialgebras share one implementation; `poly` is the
/// single-generator instance (only y1 admitted).
enum class Alphabet : unsigned char { poly, bell };

inline std::string to_string(Alphabet a) {
  return a == Alphabet::poly ? "poly" : "bell";
}

/// A finite rational linear combination of monomials over Y. Zero
/// coefficients are never stored; the zero element has no terms.
class Element {
public:
  Element() = default; // zero

  Element(const Rational& c) { add_term(Monomial{}, c); } // NOLINT
  Element(const Integer& c) : Element(Rational(c)) {}
  Element(int c) : Element(Rational(c)) {}
  Element(Monomial m) { add_term(std::move(m), Rational(1)); } // NOLINT

  static Element unit() { return Element(Monomial{}); }
  static Element generator(unsigned k) { return Element(Monomial::variable(k)); }

  void add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_.emplace(m, c);
      return;
    }
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }

  const std::map<Monomial, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Rational coefficient_of(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  Element& operator+=(const Element& rhs) {
    for (const auto& [m, c] : rhs.terms_) add_term(m, c);
    return *this;
  }

  friend Element operator+(Element lhs, const Element& rhs) {
    lhs += rhs;
    return lhs;
  }

  friend Element operator-(const Element& lhs, const Element& rhs) {
    Element out = lhs;
    for (const auto& [m, c] : rhs.terms_) out.add_term(m, -c);
    return out;
  }

  friend Element operator*(const Element& lhs, const Element& rhs) {
    Element out;
    for (const auto& [m1, c1] : lhs.terms_)
      for (const auto& [m2, c2] : rhs.terms_) out.add_term(m1 * m2, c1 * c2);
    return out;
  }

  friend Element operator*(const Rational& scalar, const Element& e) {
    Element out;
    if (scalar == 0) return out;
    for (const auto& [m, c] : e.terms_) out.terms_.emplace(m, scalar * c);
    return out;
  }

  friend bool operator==(const Element&, const Element&) = default;

  /// "y2 + 3/2*y1^2*y3"; coefficient 1 is dropped, the unit monomial
  /// prints as "e", zero as "0". Round-trips through parse_element.
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
      const bool neg = c < 0;
      if (first) {
        if (neg) out += "-";
        first = false;
      } else {
        out += neg ? " - " : " + ";
      }
      const std::string mag = bellhopf::detail::rational_abs_string(c);
      if (mag == "1")
        out += m.to_string();
      else
        out += mag + "*" + m.to_string();
    }
    return out;
  }

private:
  std::map<Monomial, Rational> terms_;
};

/// An element of the tensor square, expanded over the monomial basis
/// m1 (x) m2. Canonical form (sorted, folded) so equality is structural.
class TensorElement {
public:
  using Key = std::pair<Monomial, Monomial>;

  TensorElement() = default; // zero

  static TensorElement pure(Monomial left, Monomial right,
                            Rational c = Rational(1)) {
    TensorElement t;
    t.add_term(std::move(left), std::move(right), c);
    return t;
  }

  static TensorElement unit() { return pure(Monomial{}, Monomial{}); }

  void add_term(Monomial left, Monomial right, const Rational& c) {
    if (c == 0) return;
    Key key{std::move(left), std::move(right)};
    auto it = terms_.find(key);
    if (it == terms_.end()) {
      terms_.emplace(std::move(key), c);
      return;
    }
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }

  const std::map<Key, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  TensorElement& operator+=(const TensorElement& rhs) {
    for (const auto& [key, c] : rhs.terms_)
      add_term(key.first, key.second, c);
    return *this;
  }

  friend TensorElement operator+(TensorElement lhs, const TensorElement& rhs) {
    lhs += rhs;
    return lhs;
  }

  friend TensorElement operator-(const TensorElement& lhs,
                                 const TensorElement& rhs) {
    TensorElement out = lhs;
    for (const auto& [key, c] : rhs.terms_)
      out.add_term(key.first, key.second, -c);
    return out;
  }

  /// Componentwise product (A (x) B)(C (x) D) = AC (x) BD, bilinear.
  friend TensorElement operator*(const TensorElement& lhs,
                                 const TensorElement& rhs) {
    TensorElement out;
    for (const auto& [k1, c1] : lhs.terms_)
      for (const auto& [k2, c2] : rhs.terms_)
        out.add_term(k1.first * k2.first, k1.second * k2.second, c1 * c2);
    return out;
  }

  friend TensorElement operator*(const Rational& scalar,
                                 const TensorElement& t) {
    TensorElement out;
    if (scalar == 0) return out;
    for (const auto& [key, c] : t.terms_) out.terms_.emplace(key, scalar * c);
    return out;
  }

  /// The flip m1 (x) m2 -> m2 (x) m1; co-commutativity means Δ(A) is fixed.
  TensorElement swapped() const {
    TensorElement out;
    for (const auto& [key, c] : terms_)
      out.add_term(key.second, key.first, c);
    return out;
  }

  friend bool operator==(const TensorElement&, const TensorElement&) = default;

  /// "e (x) y2 + y2 (x) e"; coefficients prefix the left factor.
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [key, c] : terms_) {
      const bool neg = c < 0;
      if (first) {
        if (neg) out += "-";
        first = false;
      } else {
        out += neg ? " - " : " + ";
      }
      const std::string mag = bellhopf::detail::rational_abs_string(c);
      if (mag != "1") out += mag + "*";
      out += key.first.to_string() + " (x) " + key.second.to_string();
    }
    return out;
  }

private:
  std::map<Key, Rational> terms_;
};

/// Triple tensors appear only transiently, in the coassociativity check.
class Tensor3Element {
public:
  using Key = std::tuple<Monomial, Monomial, Monomial>;

  void add_term(Monomial a, Monomial b, Monomial c, const Rational& coeff) {
    if (coeff == 0) return;
    Key key{std::move(a), std::move(b), std::move(c)};
    auto it = terms_.find(key);
    if (it == terms_.end()) {
      terms_.emplace(std::move(key), coeff);
      return;
    }
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }

  const std::map<Key, Rational>& terms() const { return terms_; }

  friend bool operator==(const Tensor3Element&, const Tensor3Element&) = default;

private:
  std::map<Key, Rational> terms_;
};

/// Coproduct on one monomial by multiset splitting: for M = ∏ y_k^{m_k},
/// Δ(M) = Σ_{0<=j_k<=m_k} ∏_k C(m_k, j_k) · (∏ y_k^{j_k}) (x) (∏ y_k^{m_k-j_k}).
/// Every generator is primitive, and this is the multiplicative extension.
inline TensorElement coproduct(const Monomial& m) {
  // Odometer over the exponent choices j_k.
  std::vector<std::pair<unsigned, unsigned>> vars(m.exponents().begin(),
                                                  m.exponents().end());
  std::vector<unsigned> j(vars.size(), 0);
  TensorElement out;
  for (;;) {
    Monomial left, right;
    Rational coeff(1);
    for (std::size_t i = 0; i < vars.size(); ++i) {
      const auto [k, mk] = vars[i];
      left.multiply_variable(k, j[i]);
      right.multiply_variable(k, mk - j[i]);
      coeff *= Rational(combinatorics::binomial(mk, j[i]));
    }
    out.add_term(std::move(left), std::move(right), coeff);
    std::size_t i = 0;
    while (i < vars.size() && j[i] == vars[i].second) j[i++] = 0;
    if (i == vars.size()) return out;
    ++j[i];
  }
}

inline TensorElement coproduct(const Element& e) {
  TensorElement out;
  for (const auto& [m, c] : e.terms()) out += c * coproduct(m);
  return out;
}

/// The same coproduct computed the slow way: Δ(y_k) = y_k (x) e + e (x) y_k
/// multiplied out in the tensor algebra. Kept as an independent route; the
/// splitting formula above must agree with it.
inline TensorElement coproduct_via_generators(const Monomial& m) {
  TensorElement out = TensorElement::unit();
  for (const auto& [k, e] : m.exponents()) {
    const TensorElement primitive =
        TensorElement::pure(Monomial::variable(k), Monomial{}) +
        TensorElement::pure(Monomial{}, Monomial::variable(k));
    for (unsigned i = 0; i < e; ++i) out = out * primitive;
  }
  return out;
}

/// ε: the coefficient of the empty monomial.
inline Rational counit(const Element& e) {
  return e.coefficient_of(Monomial{});
}

/// S(M) = (−1)^{degree(M)} M, extended linearly — the anti-homomorphism
/// extension of S(y_k) = −y_k, which in a commutative algebra is also the
/// homomorphic one.
inline Element antipode(const Element& e) {
  Element out;
  for (const auto& [m, c] : e.terms())
    out.add_term(m, m.degree() % 2 == 0 ? c : -c);
  return out;
}

/// m ∘ (S (x) id) ∘ Δ — the Hopf axiom demands this equal counit(A)·e.
inline Element convolve_antipode_id(const Element& a) {
  Element out;
  const TensorElement d = coproduct(a);
  for (const auto& [key, c] : d.terms())
    out += c * (antipode(Element(key.first)) * Element(key.second));
  return out;
}

/// m ∘ (id (x) S) ∘ Δ — the mirror-image axiom.
inline Element convolve_id_antipode(const Element& a) {
  Element out;
  const TensorElement d = coproduct(a);
  for (const auto& [key, c] : d.terms())
    out += c * (Element(key.first) * antipode(Element(key.second)));
  return out;
}

/// Splits an element into weight-homogeneous components; absent weights are
/// omitted, so the zero element yields an empty collection.
inline std::map<unsigned, Element> grade_components(const Element& e) {
  std::map<unsigned, Element> out;
  for (const auto& [m, c] : e.terms()) out[m.weight()].add_term(m, c);
  return out;
}

// -- tensor-slot helpers used by the axiom checks ---------------------------

/// (Δ (x) id) applied to an expanded tensor element.
inline Tensor3Element coproduct_left_slot(const TensorElement& t) {
  Tensor3Element out;
  for (const auto& [key, c] : t.terms()) {
    const TensorElement inner = coproduct(key.first);
    for (const auto& [pair, d] : inner.terms())
      out.add_term(pair.first, pair.second, key.second, c * d);
  }
  return out;
}

/// (id (x) Δ).
inline Tensor3Element coproduct_right_slot(const TensorElement& t) {
  Tensor3Element out;
  for (const auto& [key, c] : t.terms()) {
    const TensorElement inner = coproduct(key.second);
    for (const auto& [pair, d] : inner.terms())
      out.add_term(key.first, pair.first, pair.second, c * d);
  }
  return out;
}

/// (ε (x) id): collapses the left factor to its counit.
inline Element counit_left_slot(const TensorElement& t) {
  Element out;
  for (const auto& [key, c] : t.terms())
    if (key.first.is_unit()) out.add_term(key.second, c);
  return out;
}

/// (id (x) ε).
inline Element counit_right_slot(const TensorElement& t) {
  Element out;
  for (const auto& [key, c] : t.terms())
    if (key.second.is_unit()) out.add_term(key.first, c);
  return out;
}

/// All basis monomials of weight <= bound: in bell mode one per integer
/// partition of each weight (including e at weight 0); in poly mode the
/// powers of y1 (weight = degree there).
inline std::vector<Monomial> basis_monomials(Alphabet alphabet,
                                             unsigned weight_bound) {
  std::vector<Monomial> out;
  if (alphabet == Alphabet::poly) {
    for (unsigned d = 0; d <= weight_bound; ++d)
      out.push_back(Monomial::variable(1, d));
    return out;
  }
  for (unsigned w = 0; w <= weight_bound; ++w)
    combinatorics::enumerate_integer_partitions(
        w, [&](const std::vector<unsigned>& parts) {
          out.push_back(Monomial::from_parts(parts));
        });
  return out;
}

inline bool uses_only_generator_one(const Element& e) {
  for (const auto& [m, c] : e.terms())
    for (const auto& [k, exp] : m.exponents())
      if (k != 1) return false;
  return true;
}

struct AxiomCheck {
  std::string name;
  std::size_t cases = 0;
  bool passed = true;
  std::string counterexample; // empty when passed
};

struct AxiomReport {
  Alphabet alphabet = Alphabet::bell;
  unsigned weight_bound = 0;
  std::size_t basis_size = 0;
  std::size_t random_samples = 0;
  unsigned seed = 0;
  std::vector<AxiomCheck> checks;

  bool all_passed() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return true;
  }
};

namespace detail {

inline bool check_coassociativity(const Element& a) {
  const TensorElement d = coproduct(a);
  return coproduct_left_slot(d) == coproduct_right_slot(d);
}

inline bool check_counit_laws(const Element& a) {
  const TensorElement d = coproduct(a);
  return counit_left_slot(d) == a && counit_right_slot(d) == a;
}

inline bool check_antipode(const Element& a) {
  const Element expected = counit(a) * Element::unit();
  return convolve_antipode_id(a) == expected &&
         convolve_id_antipode(a) == expected;
}

inline bool check_cocommutativity(const Element& a) {
  const TensorElement d = coproduct(a);
  return d.swapped() == d;
}

inline bool check_homomorphism(const Element& a, const Element& b) {
  return coproduct(a * b) == coproduct(a) * coproduct(b);
}

} // namespace detail

/// Exhaustively verifies the Hopf axioms on every basis monomial of weight
/// <= weight_bound, then on pseudo-random linear combinations (fixed seed,
/// so runs are reproducible). The homomorphism family checks basis pairs
/// whose weights sum within the bound, and random pairs.
inline AxiomReport check_hopf_axioms(Alphabet alphabet, unsigned weight_bound,
                                     std::size_t random_samples = 120,
                                     unsigned seed = 20260819u) {
  AxiomReport report;
  report.alphabet = alphabet;
  report.weight_bound = weight_bound;
  report.random_samples = random_samples;
  report.seed = seed;

  const std::vector<Monomial> basis = basis_monomials(alphabet, weight_bound);
  report.basis_size = basis.size();

  AxiomCheck coassoc{"coassociativity"};
  AxiomCheck counit_laws{"counit laws"};
  AxiomCheck antipode_axiom{"antipode (both sides)"};
  AxiomCheck cocomm{"co-commutativity"};
  AxiomCheck homomorphism{"coproduct homomorphism"};

  auto run = [](AxiomCheck& check, const Element& subject, bool ok) {
    ++check.cases;
    if (!ok && check.passed) {
      check.passed = false;
      check.counterexample = subject.to_string();
    }
  };

  for (const Monomial& m : basis) {
    const Element a{m};
    run(coassoc, a, detail::check_coassociativity(a));
    run(counit_laws, a, detail::check_counit_laws(a));
    run(antipode_axiom, a, detail::check_antipode(a));
    run(cocomm, a, detail::check_cocommutativity(a));
  }
  for (const Monomial& m1 : basis)
    for (const Monomial& m2 : basis) {
      if (m1.weight() + m2.weight() > weight_bound) continue;
      const Element product = Element(m1) * Element(m2);
      run(homomorphism, product,
          detail::check_homomorphism(Element(m1), Element(m2)));
    }

  std::mt19937 rng(seed);
  std::uniform_int_distribution<std::size_t> pick_index(0, basis.size() - 1);
  std::uniform_int_distribution<int> pick_terms(1, 3);
  std::uniform_int_distribution<int> pick_num(-3, 3);
  std::uniform_int_distribution<int> pick_den(1, 3);
  auto random_element = [&]() {
    Element e;
    const int terms = pick_terms(rng);
    for (int t = 0; t < terms; ++t) {
      int num = pick_num(rng);
      if (num == 0) num = 1;
      e.add_term(basis[pick_index(rng)], Rational(num) / Rational(pick_den(rng)));
    }
    return e;
  };
  for (std::size_t s = 0; s < random_samples; ++s) {
    const Element a = random_element();
    const Element b = random_element();
    run(coassoc, a, detail::check_coassociativity(a));
    run(counit_laws, a, detail::check_counit_laws(a));
    run(antipode_axiom, a, detail::check_antipode(a));
    run(cocomm, a, detail::check_cocommutativity(a));
    run(homomorphism, a * b, detail::check_homomorphism(a, b));
  }

  report.checks = {coassoc, counit_laws, antipode_axiom, cocomm, homomorphism};
  return report;
}

/// Parses the element syntax used on the command line: terms joined by
/// '+'/'-', each an optional rational coefficient and/or '*'-joined factors
/// 'e' or 'yK' or 'yK^E'. Examples: "e", "y1", "y2^3", "3/2*y1^2*y3 + y2".
inline Element parse_element(std::string_view text) {
  std::size_t i = 0;
  const auto skip_ws = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
  };
  const auto parse_uint = [&](const char* what) {
    if (i >= text.size() || text[i] < '0' || text[i] > '9')
      throw ParseError(std::string("expected ") + what, i + 1);
    unsigned long v = 0;
    while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
      v = v * 10 + static_cast<unsigned long>(text[i] - '0');
      if (v > 1'000'000) throw ParseError("number too large", i + 1);
      ++i;
    }
    return static_cast<unsigned>(v);
  };
  // factor := 'e' | 'y' INT ['^' INT]
  const auto parse_factor = [&](Monomial& m) {
    if (i < text.size() && text[i] == 'e') {
      ++i;
      return;
    }
    if (i >= text.size() || text[i] != 'y')
      throw ParseError("expected a factor 'e' or 'yK'", i + 1);
    ++i;
    const std::size_t index_pos = i;
    const unsigned index = parse_uint("a generator index after 'y'");
    if (index == 0) throw ParseError("generator index must be >= 1", index_pos + 1);
    unsigned exponent = 1;
    if (i < text.size() && text[i] == '^') {
      ++i;
      exponent = parse_uint("an exponent after '^'");
    }
    m.multiply_variable(index, exponent);
  };

  Element out;
  skip_ws();
  if (i == text.size()) throw ParseError("empty element", i + 1);
  bool negative = false;
  if (text[i] == '+' || text[i] == '-') negative = (text[i++] == '-');
  for (;;) {
    skip_ws();
    // term := coefficient ['*' factors] | factors
    Rational coeff(1);
    bool have_factors = false;
    Monomial m;
    if (i < text.size() && text[i] >= '0' && text[i] <= '9') {
      const unsigned num = parse_uint("digits");
      coeff = Rational(num);
      if (i < text.size() && text[i] == '/') {
        ++i;
        const std::size_t den_pos = i;
        const unsigned den = parse_uint("a denominator after '/'");
        if (den == 0) throw ParseError("zero denominator", den_pos + 1);
        coeff /= Rational(den);
      }
      skip_ws();
      if (i < text.size() && text[i] == '*') {
        ++i;
        skip_ws();
        have_factors = true;
        parse_factor(m);
      }
    } else {
      have_factors = true;
      parse_factor(m);
    }
    if (have_factors) {
      for (;;) {
        skip_ws();
        if (i < text.size() && text[i] == '*') {
          ++i;
          skip_ws();
          parse_factor(m);
          continue;
        }
        break;
      }
    }
    out.add_term(m, negative ? Rational(-coeff) : coeff);
    skip_ws();
    if (i == text.size()) return out;
    if (text[i] != '+' && text[i] != '-')
      throw ParseError(std::string("unexpected character '") + text[i] + "'",
                       i + 1);
    negative = (text[i++] == '-');
  }
}

} // namespace bellhopf::hopf

#endif
