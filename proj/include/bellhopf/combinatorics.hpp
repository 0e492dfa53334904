#ifndef BELLHOPF_COMBINATORICS_HPP
#define BELLHOPF_COMBINATORICS_HPP

#include <bellhopf/numbers.hpp>
#include <bellhopf/polynomial.hpp>

#include <algorithm>
#include <cstddef>
#include <mutex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace bellhopf::combinatorics {

inline Natural factorial(std::size_t n) {
  Natural out(1);
  for (std::size_t i = 2; i <= n; ++i) out *= Integer(i);
  return out;
}

/// C(n,k), exact; 0 when k > n.
inline Natural binomial(std::size_t n, std::size_t k) {
  if (k > n) return Natural(0);
  k = std::min(k, n - k);
  Natural out(1);
  for (std::size_t i = 1; i <= k; ++i) {
    out *= Integer(n - k + i);
    out /= Integer(i); // divides exactly at every step
  }
  return out;
}

namespace detail {

// Shared triangle of S(n,k) rows, grown on demand. Synchronized so the
// exposed operations stay pure under concurrent use.
inline std::vector<Natural> stirling_row_copy(std::size_t n) {
  static std::vector<std::vector<Natural>> rows; // rows[m][k] = S(m,k)
  static std::mutex guard;
  std::lock_guard<std::mutex> lock(guard);
  if (rows.empty()) rows.push_back({Natural(1)}); // S(0,0) = 1
  while (rows.size() <= n) {
    const std::size_t m = rows.size();
    const auto& prev = rows.back();
    std::vector<Natural> row(m + 1, Natural(0));
    for (std::size_t k = 1; k <= m; ++k) {
      // S(m,k) = k*S(m-1,k) + S(m-1,k-1)
      Natural v = prev[k - 1];
      if (k < m) v += Integer(k) * prev[k];
      row[k] = v;
    }
    rows.push_back(std::move(row));
  }
  return rows[n];
}

} // namespace detail

/// Row S(n,0..n) as a vector.
inline std::vector<Natural> stirling_row(std::size_t n) {
  return detail::stirling_row_copy(n);
}

/// Stirling number of the second kind. Requires k <= n.
inline Natural stirling2(std::size_t n, std::size_t k) {
  if (k > n)
    throw std::domain_error("stirling2: k = " + std::to_string(k) +
                            " exceeds n = " + std::to_string(n));
  return detail::stirling_row_copy(n)[k];
}

/// Bell number B(n) = sum_k S(n,k), with B(0) = 1.
inline Natural bell(std::size_t n) {
  const auto row = detail::stirling_row_copy(n);
  Natural out(0);
  for (const auto& v : row) out += v;
  return out;
}

/// B_n(y) = sum_k S(n,k) y^k. Evaluating at y = 1 gives bell(n).
inline YPolynomial bell_polynomial(std::size_t n) {
  const auto row = detail::stirling_row_copy(n);
  std::vector<Rational> coeffs(row.size());
  for (std::size_t k = 0; k < row.size(); ++k) coeffs[k] = Rational(row[k]);
  return YPolynomial(std::move(coeffs));
}

/// A partition of {1,...,n} into non-empty disjoint blocks. Canonical form:
/// each block sorted ascending, blocks ordered by least element.
class SetPartition {
public:
  SetPartition() = default; // partition of the empty set

  explicit SetPartition(std::vector<std::vector<int>> blocks)
      : blocks_(std::move(blocks)) {
    canonicalize_and_validate();
  }

  /// Builds from a restricted growth word: word[i] is the block index of
  /// label i+1. RGW canonical order matches block-by-least-element order.
  static SetPartition from_growth_word(const std::vector<int>& word) {
    SetPartition p;
    int max_block = -1;
    for (std::size_t i = 0; i < word.size(); ++i) {
      const int b = word[i];
      if (b < 0 || b > max_block + 1)
        throw std::invalid_argument("not a restricted growth word");
      if (b == max_block + 1) {
        p.blocks_.emplace_back();
        ++max_block;
      }
      p.blocks_[static_cast<std::size_t>(b)].push_back(static_cast<int>(i) +
                                                       1);
    }
    return p;
  }

  std::size_t ground_size() const {
    std::size_t n = 0;
    for (const auto& b : blocks_) n += b.size();
    return n;
  }

  std::size_t block_count() const { return blocks_.size(); }

  const std::vector<std::vector<int>>& blocks() const { return blocks_; }

  /// Sizes of the blocks, descending.
  std::vector<unsigned> block_sizes() const {
    std::vector<unsigned> sizes;
    sizes.reserve(blocks_.size());
    for (const auto& b : blocks_) sizes.push_back(static_cast<unsigned>(b.size()));
    std::sort(sizes.begin(), sizes.end(), std::greater<>());
    return sizes;
  }

  /// "{1,2}{3}"; the empty partition prints "e".
  std::string to_string() const {
    if (blocks_.empty()) return "e";
    std::string out;
    for (const auto& block : blocks_) {
      out += "{";
      for (std::size_t i = 0; i < block.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(block[i]);
      }
      out += "}";
    }
    return out;
  }

  friend bool operator==(const SetPartition&, const SetPartition&) = default;
  friend auto operator<=>(const SetPartition&, const SetPartition&) = default;

private:
  void canonicalize_and_validate() {
    std::vector<int> seen;
    for (auto& block : blocks_) {
      if (block.empty())
        throw std::invalid_argument("set partition: empty block");
      std::sort(block.begin(), block.end());
      seen.insert(seen.end(), block.begin(), block.end());
    }
    std::sort(blocks_.begin(), blocks_.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    std::sort(seen.begin(), seen.end());
    for (std::size_t i = 0; i < seen.size(); ++i)
      if (seen[i] != static_cast<int>(i) + 1)
        throw std::invalid_argument(
            "set partition: labels must cover {1,...,n} exactly once");
  }

  std::vector<std::vector<int>> blocks_;
};

/// Visits every set partition of {1,...,n} exactly once, in lexicographic
/// restricted-growth-word order ({{1,...,n}} first, all-singletons last).
/// Practical bound: n <= 12 (bell(12) = 4213597 visits).
template <typename Visitor>
void enumerate_set_partitions(std::size_t n, Visitor&& visit) {
  if (n == 0) {
    visit(SetPartition{});
    return;
  }
  std::vector<int> word(n, 0);  // word[i] = block of label i+1
  std::vector<int> prefix_max(n, 0); // max of word[0..i]
  for (;;) {
    visit(SetPartition::from_growth_word(word));
    // advance to the next RGW: rightmost position that can still grow
    std::size_t i = n;
    while (i-- > 1) {
      if (word[i] <= prefix_max[i - 1]) {
        ++word[i];
        prefix_max[i] = std::max(prefix_max[i - 1], word[i]);
        for (std::size_t j = i + 1; j < n; ++j) {
          word[j] = 0;
          prefix_max[j] = prefix_max[i];
        }
        break;
      }
    }
    if (i == 0) return; // wrapped: word was the final all-distinct word
  }
}

inline std::vector<SetPartition> all_set_partitions(std::size_t n) {
  std::vector<SetPartition> out;
  enumerate_set_partitions(n, [&](const SetPartition& p) { out.push_back(p); });
  return out;
}

/// Visits the integer partitions of n as descending part vectors, in
/// descending lexicographic order ([n] first, [1,1,...,1] last). n = 0
/// yields the single empty partition.
template <typename Visitor>
void enumerate_integer_partitions(unsigned n, Visitor&& visit) {
  std::vector<unsigned> parts;
  if (n == 0) {
    visit(parts);
    return;
  }
  parts.push_back(n);
  for (;;) {
    visit(parts);
    // find rightmost part > 1, rebuild the tail greedily
    std::size_t i = parts.size();
    while (i > 0 && parts[i - 1] == 1) --i;
    if (i == 0) return;
    unsigned remainder = static_cast<unsigned>(parts.size() - i) + 1;
    const unsigned cap = --parts[i - 1];
    parts.resize(i);
    while (remainder > 0) {
      const unsigned next = std::min(cap, remainder);
      parts.push_back(next);
      remainder -= next;
    }
  }
}

} // namespace bellhopf::combinatorics

#endif
