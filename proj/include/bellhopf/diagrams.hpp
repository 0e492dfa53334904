#ifndef BELLHOPF_DIAGRAMS_HPP
#define BELLHOPF_DIAGRAMS_HPP

#include <bellhopf/combinatorics.hpp>
#include <bellhopf/monomial.hpp>
#include <bellhopf/numbers.hpp>

#include <algorithm>
#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace bellhopf::diagrams {

/// A labeled diagram on n lines: each line (label) attaches to exactly one
/// internal vertex, so the diagram is exactly a set partition of the labels
/// — blocks are the vertices, block members the attached lines.
using LabeledDiagram = combinatorics::SetPartition;

template <typename Visitor>
void enumerate_labeled_diagrams(std::size_t n, Visitor&& visit) {
  combinatorics::enumerate_set_partitions(n, std::forward<Visitor>(visit));
}

inline std::vector<LabeledDiagram> all_labeled_diagrams(std::size_t n) {
  return combinatorics::all_set_partitions(n);
}

/// The shape of a diagram: the multiset of vertex degrees, i.e. an integer
/// partition of the line count. Parts are kept descending.
class DiagramShape {
public:
  DiagramShape() = default; // shape of the empty diagram

  explicit DiagramShape(std::vector<unsigned> parts) : parts_(std::move(parts)) {
    for (unsigned p : parts_)
      if (p == 0) throw std::invalid_argument("DiagramShape: zero part");
    std::sort(parts_.begin(), parts_.end(), std::greater<>());
  }

  const std::vector<unsigned>& parts() const { return parts_; }

  /// Total number of lines.
  unsigned weight() const {
    unsigned w = 0;
    for (unsigned p : parts_) w += p;
    return w;
  }

  /// Number of vertices (connected components).
  std::size_t components() const { return parts_.size(); }

  /// Multiplicity m_k of the part size k.
  unsigned count_of(unsigned k) const {
    return static_cast<unsigned>(
        std::count(parts_.begin(), parts_.end(), k));
  }

  friend bool operator==(const DiagramShape&, const DiagramShape&) = default;

  /// Lexicographic on descending parts: {1,1,1} < {2,1} < {3}, the census
  /// listing order.
  friend std::strong_ordering operator<=>(const DiagramShape&,
                                          const DiagramShape&) = default;

  /// "{2,1}"; the empty shape prints "{}".
  std::string to_string() const {
    std::string out = "{";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(parts_[i]);
    }
    return out + "}";
  }

private:
  std::vector<unsigned> parts_;
};

inline DiagramShape shape_of(const LabeledDiagram& d) {
  return DiagramShape(d.block_sizes());
}

/// The coding of a shape as a monomial over Y: each vertex with k lines
/// contributes one letter y_k, so shape {2,1} -> y1*y2. Weight and letter
/// count carry over (monomial weight = line count, degree = vertex count).
inline Monomial code_monomial(const DiagramShape& s) {
  return Monomial::from_parts(s.parts());
}

/// Inverse of code_monomial; total on monomials, and a bijection.
inline DiagramShape decode_monomial(const Monomial& m) {
  return DiagramShape(m.parts());
}

/// Number of labeled diagrams with the given shape, in closed form:
/// n! / (∏_k (k!)^{m_k} · m_k!) for a shape of weight n with m_k parts of
/// size k.
inline Natural shape_multiplicity(const DiagramShape& s) {
  Natural out = combinatorics::factorial(s.weight());
  unsigned run = 0;
  const auto& parts = s.parts();
  for (std::size_t i = 0; i < parts.size(); ++i) {
    out /= combinatorics::factorial(parts[i]);
    ++run;
    if (i + 1 == parts.size() || parts[i + 1] != parts[i]) {
      out /= combinatorics::factorial(run);
      run = 0;
    }
  }
  return out;
}

/// Same count by brute enumeration of set partitions; the independent route
/// for validating the closed form. Practical for weight <= 10.
inline Natural shape_multiplicity_enumerated(const DiagramShape& s) {
  Natural count(0);
  enumerate_labeled_diagrams(s.weight(), [&](const LabeledDiagram& d) {
    if (shape_of(d) == s) ++count;
  });
  return count;
}

/// Diagram census for n lines: every shape that occurs, with its labeled
/// count. Keys iterate in census order ({1,1,1} before {2,1} before {3});
/// counts sum to bell(n).
inline std::map<DiagramShape, Natural> census(std::size_t n) {
  std::map<DiagramShape, Natural> out;
  enumerate_labeled_diagrams(n, [&](const LabeledDiagram& d) {
    out[shape_of(d)] += 1;
  });
  return out;
}

/// Graphviz form. White dots w1..wn are the lines, black dots b1..bk the
/// vertices (in block order, i.e. by least contained label); one edge per
/// line. Node and edge order are fixed so output is byte-stable.
inline std::string to_dot(const LabeledDiagram& d,
                          const std::string& name = "diagram") {
  std::string out = "graph " + name + " {\n";
  const std::size_t n = d.ground_size();
  for (std::size_t i = 1; i <= n; ++i)
    out += "  w" + std::to_string(i) + " [shape=circle];\n";
  for (std::size_t b = 1; b <= d.block_count(); ++b)
    out += "  b" + std::to_string(b) + " [shape=point];\n";
  for (std::size_t b = 0; b < d.block_count(); ++b)
    for (int label : d.blocks()[b])
      out += "  b" + std::to_string(b + 1) + " -- w" + std::to_string(label) +
             ";\n";
  return out + "}\n";
}

} // namespace bellhopf::diagrams

#endif
