// Command-line front end: every library operation behind one binary with
// deterministic text/JSON/DOT output, suitable for golden-file testing.
//
// Exit codes: 0 success, 1 check failure (hopf-check), 2 parse error,
// 3 domain error, 4 bound/range error.

#include <bellhopf/bellhopf.hpp>

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace {

using namespace bellhopf;

// ---- small formatting helpers ----------------------------------------------

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::string bracket_list(const std::vector<std::string>& items) {
  std::string out = "[";
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += ", ";
    out += items[i];
  }
  return out + "]";
}

Real parse_real(const std::string& text) {
  if (text == "ln2") return log(Real(2));
  try {
    return Real(text);
  } catch (const std::exception&) {
    throw ParseError("invalid number '" + text + "'", 1);
  }
}

std::vector<Rational> parse_rational_list(const std::string& text) {
  std::vector<Rational> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string::npos) comma = text.size();
    try {
      out.push_back(parse_rational(
          std::string_view(text).substr(start, comma - start)));
    } catch (const ParseError& e) {
      throw ParseError(e.what() + std::string(" in list '") + text + "'",
                       start + e.position());
    }
    start = comma + 1;
    if (comma == text.size()) break;
  }
  return out;
}

// ---- subcommand bodies ------------------------------------------------------

int run_bell(unsigned long max_n) {
  if (max_n > 512)
    throw std::out_of_range("bell: max n is 512 (asked for " +
                            std::to_string(max_n) + ")");
  for (unsigned long n = 0; n <= max_n; ++n)
    std::cout << n << " " << combinatorics::bell(n).str() << "\n";
  return 0;
}

int run_stirling(unsigned long n) {
  if (n > 512)
    throw std::out_of_range("stirling: max n is 512 (asked for " +
                            std::to_string(n) + ")");
  const auto row = combinatorics::stirling_row(n);
  for (std::size_t k = 0; k < row.size(); ++k)
    std::cout << k << " " << row[k].str() << "\n";
  return 0;
}

int run_normal_order(const std::string& word_text, const std::string& format) {
  const auto word = boson::BosonWord::parse(word_text);
  const auto nf = boson::normal_order(word);
  if (format == "json")
    std::cout << nf.to_json() << "\n";
  else
    std::cout << nf.to_string() << "\n";
  return 0;
}

int run_diagrams(unsigned long n, const std::string& format, bool census_only) {
  if (census_only) {
    if (n > 30)
      throw std::out_of_range("diagrams --census: max n is 30 (asked for " +
                              std::to_string(n) + ")");
    // Closed-form counts; no enumeration, so large n stays cheap.
    std::map<diagrams::DiagramShape, Natural> counts;
    combinatorics::enumerate_integer_partitions(
        static_cast<unsigned>(n), [&](const std::vector<unsigned>& parts) {
          const diagrams::DiagramShape shape{parts};
          counts.emplace(shape, diagrams::shape_multiplicity(shape));
        });
    Natural total(0);
    std::string line = "census: ";
    bool first = true;
    for (const auto& [shape, count] : counts) {
      if (!first) line += ", ";
      first = false;
      line += diagrams::code_monomial(shape).to_string() + ":" + count.str();
      total += count;
    }
    std::cout << line << "\n" << "total: " << total.str() << "\n";
    return 0;
  }
  if (n > 8)
    throw std::out_of_range(
        "diagrams: full listing stops at n = 8 (bell(n) diagrams); "
        "use --census for shape counts at n = " +
        std::to_string(n));
  if (format == "dot") {
    std::size_t index = 0;
    diagrams::enumerate_labeled_diagrams(n, [&](const diagrams::LabeledDiagram& d) {
      std::cout << diagrams::to_dot(d, "d" + std::to_string(++index));
    });
    return 0;
  }
  std::map<diagrams::DiagramShape, Natural> counts;
  Natural total(0);
  diagrams::enumerate_labeled_diagrams(n, [&](const diagrams::LabeledDiagram& d) {
    const auto shape = diagrams::shape_of(d);
    std::cout << d.to_string() << " shape=" << shape.to_string()
              << " code=" << diagrams::code_monomial(shape).to_string() << "\n";
    counts[shape] += 1;
    total += 1;
  });
  std::string line = "census: ";
  bool first = true;
  for (const auto& [shape, count] : counts) {
    if (!first) line += ", ";
    first = false;
    line += diagrams::code_monomial(shape).to_string() + ":" + count.str();
  }
  std::cout << line << "\n" << "total: " << total.str() << "\n";
  return 0;
}

int run_hopf_check(const std::string& alphabet_name, unsigned long bound,
                   unsigned long samples, unsigned long seed) {
  if (bound > 12)
    throw std::out_of_range("hopf-check: max weight bound is 12 (asked for " +
                            std::to_string(bound) + ")");
  const auto alphabet =
      alphabet_name == "poly" ? hopf::Alphabet::poly : hopf::Alphabet::bell;
  const auto report = hopf::check_hopf_axioms(
      alphabet, static_cast<unsigned>(bound), samples,
      static_cast<unsigned>(seed));
  std::cout << "alphabet: " << hopf::to_string(report.alphabet) << "\n"
            << "weight bound: " << report.weight_bound << "\n"
            << "basis monomials: " << report.basis_size << "\n"
            << "random samples: " << report.random_samples
            << " (seed " << report.seed << ")\n";
  for (const auto& check : report.checks) {
    std::cout << check.name << ": " << (check.passed ? "pass" : "FAIL") << " ("
              << check.cases << " cases)";
    if (!check.passed)
      std::cout << " counterexample: " << check.counterexample;
    std::cout << "\n";
  }
  std::cout << "result: " << (report.all_passed() ? "PASS" : "FAIL") << "\n";
  return report.all_passed() ? 0 : 1;
}

int run_pfi(const std::string& word_text, unsigned long order,
            const std::string& ybar_text, const std::string& format) {
  if (order > 24)
    throw std::out_of_range("pfi: max order is 24 (asked for " +
                            std::to_string(order) + ")");
  const auto word = boson::BosonWord::parse(word_text);
  if (ybar_text.empty()) {
    const auto p = statmech::pfi_general(word, order);
    if (format == "json") {
      std::cout << statmech::sequences_to_json(p.moments, p.cumulants) << "\n";
      return 0;
    }
    std::vector<std::string> w, v;
    for (std::size_t n = 0; n <= order; ++n)
      w.push_back(p.moments.moment(n).to_string("ybar"));
    for (std::size_t n = 1; n <= order; ++n)
      v.push_back(p.cumulants.cumulant(n).to_string("ybar"));
    std::cout << "order: " << order << "\n"
              << "W = " << bracket_list(w) << "\n"
              << "V = " << bracket_list(v) << "\n";
    return 0;
  }
  const Rational ybar = parse_rational(ybar_text);
  const auto p = statmech::pfi_at(word, order, ybar);
  if (format == "json") {
    std::cout << statmech::sequences_to_json(p.moments, p.cumulants) << "\n";
    return 0;
  }
  std::vector<std::string> w, v;
  for (std::size_t n = 0; n <= order; ++n)
    w.push_back(to_string(p.moments.moment(n)));
  for (std::size_t n = 1; n <= order; ++n)
    v.push_back(to_string(p.cumulants.cumulant(n)));
  std::cout << "order: " << order << "\n"
            << "ybar = " << to_string(ybar) << "\n"
            << "W = " << bracket_list(w) << "\n"
            << "V = " << bracket_list(v) << "\n";
  return 0;
}

int run_z(const std::string& beta_eps_text, const std::string& method,
          const std::string& upper_text, unsigned long steps,
          unsigned long precision) {
  if (precision < 5 || precision > 45)
    throw std::out_of_range("z: precision must be within 5..45 digits");
  if (steps < 2 || steps > (1ul << 22))
    throw std::out_of_range("z: steps must be within 2..4194304");
  const Real beta_eps = parse_real(beta_eps_text);
  if (!(beta_eps > 0))
    throw std::domain_error(
        "z: beta*epsilon must be positive (the partition sum diverges)");
  const unsigned digits = static_cast<unsigned>(precision);
  std::cout << "beta*epsilon = " << beta_eps.str(digits) << "\n";
  const Real closed = statmech::partition_function_closed(beta_eps);
  std::cout << "closed form = " << closed.str(digits) << "\n";
  if (method == "closed") return 0;
  const Real upper = parse_real(upper_text);
  const auto quad =
      statmech::partition_function_quadrature(-beta_eps, upper, steps);
  std::cout << "quadrature = " << quad.value.str(digits) << " (upper="
            << upper.str(digits) << ", steps=" << quad.steps << ")\n";
  const Real diff = abs(closed - quad.value);
  std::cout << "|difference| = " << diff.str(3, std::ios_base::scientific)
            << "\n"
            << "error bound = "
            << quad.error_bound.str(3, std::ios_base::scientific) << "\n";
  return 0;
}

int run_graph_expansion(unsigned long n, const std::string& cumulants_text,
                        bool breakdown) {
  if (n > 20)
    throw std::out_of_range("graph-expansion: max n is 20 (asked for " +
                            std::to_string(n) + ")");
  const auto values = parse_rational_list(cumulants_text);
  if (values.size() < n)
    throw std::out_of_range("graph-expansion: need at least " +
                            std::to_string(n) + " cumulants, got " +
                            std::to_string(values.size()));
  const statmech::CumulantSequence<Rational> v(values);
  std::vector<std::string> shown;
  for (const auto& value : values) shown.push_back(to_string(value));
  std::cout << "n = " << n << "\n"
            << "V = " << bracket_list(shown) << "\n";
  if (breakdown) {
    std::map<diagrams::DiagramShape, std::pair<Natural, Rational>> rows;
    combinatorics::enumerate_integer_partitions(
        static_cast<unsigned>(n), [&](const std::vector<unsigned>& parts) {
          Rational prod(1);
          for (unsigned k : parts) prod *= v.cumulant(k);
          const diagrams::DiagramShape shape{parts};
          rows.emplace(shape,
                       std::make_pair(diagrams::shape_multiplicity(shape), prod));
        });
    for (const auto& [shape, data] : rows)
      std::cout << "  " << diagrams::code_monomial(shape).to_string()
                << " mult=" << data.first.str()
                << " product=" << to_string(data.second) << " term="
                << to_string(Rational(data.first) * data.second) << "\n";
  }
  std::cout << "W_" << n << " = " << to_string(statmech::graph_expansion(v, n))
            << "\n";
  return 0;
}

int run_divergence_report(unsigned long order) {
  if (order > 64)
    throw std::out_of_range("divergence-report: max order is 64 (asked for " +
                            std::to_string(order) + ")");
  const auto report = statmech::termwise_divergence_report(order);
  for (const auto& row : report.rows) {
    std::string powers = "{";
    for (std::size_t i = 0; i < row.powers.size(); ++i) {
      if (i) powers += ",";
      powers += std::to_string(row.powers[i]);
    }
    powers += "}";
    std::cout << "n=" << row.n << ": term " << row.term.to_string("y")
              << ", powers " << powers << ", "
              << (row.divergent ? "divergent" : "convergent") << "\n";
  }
  std::cout << (report.all_divergent()
                    ? "all terms divergent: summation and integration may "
                      "not interchange"
                    : "some terms converge")
            << "\n";
  return 0;
}

int run_coherent(const std::string& word_text, unsigned long power,
                 const std::string& ybar_text, bool with_fock,
                 const std::string& z_text, unsigned long fock_dim) {
  if (power > 16)
    throw std::out_of_range("coherent: max power is 16 (asked for " +
                            std::to_string(power) + ")");
  if (fock_dim > 4096)
    throw std::out_of_range("coherent: max fock dimension is 4096");
  const auto word = boson::BosonWord::parse(word_text);
  const auto value =
      boson::coherent_expectation(boson::normal_order(word.repeated(power)));
  std::cout << "word = " << (word_text.empty() ? "(identity)" : word_text)
            << "\n"
            << "power = " << power << "\n"
            << "exact = " << value.to_string() << "\n";
  if (!ybar_text.empty()) {
    const Rational ybar = parse_rational(ybar_text);
    std::cout << "at ybar = " << to_string(ybar) << ": "
              << to_string(value.evaluate_ybar(ybar)) << "\n";
  }
  if (with_fock) {
    const Rational z = parse_rational(z_text);
    const auto fock = boson::fock_expectation(word, power, z, fock_dim);
    std::cout << "fock(dim=" << fock.dimension << ", z=" << to_string(z)
              << ") = " << format_double(fock.value)
              << " error<=" << format_double(fock.error_estimate) << " "
              << (fock.converged ? "converged" : "NOT converged") << "\n";
  }
  return 0;
}

int run_hopf_op(const std::string& op, const std::string& element_text,
                const std::string& second_text,
                const std::string& alphabet_name) {
  const auto element = hopf::parse_element(element_text);
  if (alphabet_name == "poly" && !hopf::uses_only_generator_one(element))
    throw std::domain_error("hopf: poly mode admits only the generator y1");
  if (op == "coproduct") {
    std::cout << hopf::coproduct(element).to_string() << "\n";
  } else if (op == "antipode") {
    std::cout << hopf::antipode(element).to_string() << "\n";
  } else if (op == "counit") {
    std::cout << to_string(hopf::counit(element)) << "\n";
  } else if (op == "product") {
    const auto second = hopf::parse_element(second_text);
    if (alphabet_name == "poly" && !hopf::uses_only_generator_one(second))
      throw std::domain_error("hopf: poly mode admits only the generator y1");
    std::cout << (element * second).to_string() << "\n";
  } else if (op == "convolve") {
    std::cout << "left = " << hopf::convolve_antipode_id(element).to_string()
              << "\n"
              << "right = " << hopf::convolve_id_antipode(element).to_string()
              << "\n"
              << "expected = "
              << (hopf::counit(element) * hopf::Element::unit()).to_string()
              << "\n";
  } else { // grade
    for (const auto& [weight, part] : hopf::grade_components(element))
      std::cout << weight << ": " << part.to_string() << "\n";
  }
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Bell/Stirling combinatorics, boson normal ordering, "
               "set-partition diagrams, their Hopf algebra, and the "
               "single-mode partition-function layer"};
  app.require_subcommand(1);

  // bell
  unsigned long bell_max = 0;
  auto* cmd_bell = app.add_subcommand("bell", "Print n, B(n) for n = 0..max");
  cmd_bell->add_option("max", bell_max, "largest n")->required();

  // stirling
  unsigned long stirling_n = 0;
  auto* cmd_stirling =
      app.add_subcommand("stirling", "Print k, S(n,k) for k = 0..n");
  cmd_stirling->add_option("n", stirling_n, "row index")->required();

  // normal-order
  std::string no_word, no_format = "text";
  auto* cmd_no = app.add_subcommand(
      "normal-order", "Rewrite a word over {a, c} into normal form");
  cmd_no->add_option("word", no_word,
                     "operator word, e.g. \"caca\" for (a†a)²");
  cmd_no->add_option("--format", no_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  // diagrams
  unsigned long diagrams_n = 0;
  std::string diagrams_format = "text";
  bool diagrams_census = false;
  auto* cmd_diagrams = app.add_subcommand(
      "diagrams", "List the labeled diagrams on n lines with their codes");
  cmd_diagrams->add_option("n", diagrams_n, "number of lines")->required();
  cmd_diagrams->add_option("--format", diagrams_format, "text or dot")
      ->check(CLI::IsMember({"text", "dot"}));
  cmd_diagrams->add_flag("--census", diagrams_census,
                         "shape counts only (closed form, no enumeration)");

  // hopf-check
  std::string check_alphabet = "bell";
  unsigned long check_bound = 6, check_samples = 120, check_seed = 20260819;
  auto* cmd_check =
      app.add_subcommand("hopf-check", "Machine-check the Hopf axioms");
  cmd_check->add_option("--alphabet", check_alphabet, "poly or bell")
      ->check(CLI::IsMember({"poly", "bell"}));
  cmd_check->add_option("--bound", check_bound, "weight bound (default 6)");
  cmd_check->add_option("--samples", check_samples,
                        "random linear combinations (default 120)");
  cmd_check->add_option("--seed", check_seed, "RNG seed (default 20260819)");

  // pfi
  std::string pfi_word, pfi_ybar, pfi_format = "text";
  unsigned long pfi_order = 8;
  auto* cmd_pfi = app.add_subcommand(
      "pfi", "Moments W and cumulants V of <z|exp(xw)|z> for a balanced word");
  cmd_pfi->add_option("word", pfi_word, "balanced operator word, e.g. \"ca\"");
  cmd_pfi->add_option("--order", pfi_order, "truncation order (default 8)")
      ->envname("BELLHOPF_ORDER");
  cmd_pfi->add_option("--ybar", pfi_ybar,
                      "evaluate at ybar = |z|^2 (rational; default symbolic)");
  cmd_pfi->add_option("--format", pfi_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  // z
  std::string z_beta_eps, z_method = "closed", z_upper = "60";
  unsigned long z_steps = 8192, z_precision = 30;
  auto* cmd_z = app.add_subcommand(
      "z", "Free-boson partition function 1/(1 - e^{-beta*eps})");
  cmd_z->add_option("beta_eps", z_beta_eps, "beta*epsilon > 0 (or \"ln2\")")
      ->required();
  cmd_z->add_option("--method", z_method, "closed or both")
      ->check(CLI::IsMember({"closed", "both"}));
  cmd_z->add_option("--upper", z_upper, "quadrature cutoff (default 60)");
  cmd_z->add_option("--steps", z_steps, "Simpson panels (default 8192)");
  cmd_z->add_option("--precision", z_precision,
                    "displayed digits, 5..45 (default 30)")
      ->envname("BELLHOPF_PRECISION");

  // graph-expansion
  unsigned long ge_n = 0;
  std::string ge_cumulants;
  bool ge_breakdown = false;
  auto* cmd_ge = app.add_subcommand(
      "graph-expansion",
      "W_n as a sum over diagram shapes with vertex weights V_k");
  cmd_ge->add_option("n", ge_n, "moment index")->required();
  cmd_ge->add_option("--cumulants", ge_cumulants,
                     "comma-separated rationals V_1,V_2,...")
      ->required();
  cmd_ge->add_flag("--breakdown", ge_breakdown, "print per-shape terms");

  // divergence-report
  unsigned long div_order = 8;
  auto* cmd_div = app.add_subcommand(
      "divergence-report",
      "Per-term divergence of the termwise-integrated series");
  cmd_div->add_option("--order", div_order, "largest n (default 8)")
      ->envname("BELLHOPF_ORDER");

  // coherent
  std::string coh_word, coh_ybar, coh_z = "1";
  unsigned long coh_power = 1, coh_dim = 32;
  bool coh_fock = false;
  auto* cmd_coh = app.add_subcommand(
      "coherent", "Exact coherent-state expectation <z|w^n|z>");
  cmd_coh->add_option("word", coh_word, "operator word over {a, c}");
  cmd_coh->add_option("--power", coh_power, "n in w^n (default 1)");
  cmd_coh->add_option("--ybar", coh_ybar, "evaluate at ybar (rational)");
  cmd_coh->add_flag("--fock", coh_fock,
                    "also evaluate in a truncated number basis");
  cmd_coh->add_option("--z", coh_z, "real z for --fock (default 1)");
  cmd_coh->add_option("--fock-dim", coh_dim,
                      "truncation dimension (default 32)")
      ->envname("BELLHOPF_FOCK_DIM");

  // hopf (element operations)
  std::string hop_op, hop_element, hop_second, hop_alphabet = "bell";
  auto* cmd_hopf = app.add_subcommand(
      "hopf", "Apply one algebra operation to parsed elements");
  cmd_hopf
      ->add_option("op", hop_op,
                   "coproduct, antipode, counit, product, convolve, grade")
      ->required()
      ->check(CLI::IsMember({"coproduct", "antipode", "counit", "product",
                             "convolve", "grade"}));
  cmd_hopf->add_option("element", hop_element, "e.g. \"3/2*y1^2*y3 + y2\"")
      ->required();
  cmd_hopf->add_option("second", hop_second, "second element (product only)");
  cmd_hopf->add_option("--alphabet", hop_alphabet, "poly or bell")
      ->check(CLI::IsMember({"poly", "bell"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e); // prints help or the error message
    return code == 0 ? 0 : 2;
  }

  try {
    if (*cmd_bell) return run_bell(bell_max);
    if (*cmd_stirling) return run_stirling(stirling_n);
    if (*cmd_no) return run_normal_order(no_word, no_format);
    if (*cmd_diagrams)
      return run_diagrams(diagrams_n, diagrams_format, diagrams_census);
    if (*cmd_check)
      return run_hopf_check(check_alphabet, check_bound, check_samples,
                            check_seed);
    if (*cmd_pfi) return run_pfi(pfi_word, pfi_order, pfi_ybar, pfi_format);
    if (*cmd_z) return run_z(z_beta_eps, z_method, z_upper, z_steps, z_precision);
    if (*cmd_ge) return run_graph_expansion(ge_n, ge_cumulants, ge_breakdown);
    if (*cmd_div) return run_divergence_report(div_order);
    if (*cmd_coh)
      return run_coherent(coh_word, coh_power, coh_ybar, coh_fock, coh_z,
                          coh_dim);
    if (*cmd_hopf)
      return run_hopf_op(hop_op, hop_element, hop_second, hop_alphabet);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
