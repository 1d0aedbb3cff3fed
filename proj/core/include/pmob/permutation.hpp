#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pmob {

/// A permutation of {1..n} in one-line notation; n = 0 is the empty
/// permutation. Values are stored as bytes, so n is capped at kMaxLength and
/// the byte string doubles as the canonical map key.
class Permutation {
 public:
  using value_type = std::uint8_t;
  static constexpr std::size_t kMaxLength = 255;

  Permutation() = default;

  /// Validating constructor. Throws NotAPermutation unless `seq` is a
  /// bijection onto {1..len}, PermutationTooLong past kMaxLength.
  static Permutation from_one_line(std::span<const int> seq);
  static Permutation from_one_line(std::initializer_list<int> seq) {
    return from_one_line(std::span<const int>(seq.begin(), seq.size()));
  }

  /// Renormalises an arbitrary sequence of distinct integers (order-isomorphic
  /// standardisation).
  static Permutation standardize(std::span<const int> seq);

  static Permutation identity(std::size_t n);
  static Permutation reverse_identity(std::size_t n);

  std::size_t size() const noexcept { return values_.size(); }
  bool empty() const noexcept { return values_.empty(); }

  /// Value at 0-based index `i` (1..n).
  int operator[](std::size_t i) const noexcept { return values_[i]; }
  /// Value at 1-based position.
  int at(std::size_t position) const;

  std::span<const value_type> values() const noexcept { return values_; }

  /// Canonical key: the value sequence as raw bytes.
  std::string_view key() const noexcept {
    return {reinterpret_cast<const char*>(values_.data()), values_.size()};
  }

  bool is_identity() const noexcept;
  bool is_reverse_identity() const noexcept;

  /// Separated textual form, e.g. "3 1 5 2 6 4"; "" for the empty permutation.
  std::string to_string(std::string_view separator = " ") const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
    if (a.size() != b.size()) return a.size() <=> b.size();
    return a.values_ <=> b.values_;
  }

 private:
  explicit Permutation(std::vector<value_type> values) : values_(std::move(values)) {}
  friend struct PermutationAccess;

  std::vector<value_type> values_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept {
    return std::hash<std::string_view>{}(p.key());
  }
};

/// Parses "3 1 5 2 6 4", "3,1,5,2,6,4", or (for n <= 9) the bare digit
/// string "315264". Throws ParseError or NotAPermutation.
Permutation parse_permutation(std::string_view text);

/// Containment (pattern order). True iff `text` has a subsequence
/// order-isomorphic to `pattern`.
bool contains(const Permutation& pattern, const Permutation& text);

/// Removes the point at 1-based `position` and renormalises.
Permutation delete_point(const Permutation& pi, std::size_t position);

Permutation direct_sum(const Permutation& a, const Permutation& b);
Permutation skew_sum(const Permutation& a, const Permutation& b);

/// a ⊕ b with the largest point of a and the smallest point of b exchanged.
/// Throws EmptyOperand if either side is empty.
Permutation interleave(const Permutation& a, const Permutation& b);
/// a ⊖ b with the smallest point of a and the largest point of b exchanged.
Permutation skew_interleave(const Permutation& a, const Permutation& b);

/// ⊕^r alpha. Requires r >= 1.
Permutation iterated_sum(const Permutation& alpha, std::int64_t r);
/// ⊙^k(21), built left to right in O(k).
Permutation iterated_interleave_21(std::int64_t k);

Permutation inverse(const Permutation& pi);
Permutation reverse(const Permutation& pi);
Permutation complement(const Permutation& pi);

/// Components of the finest direct-sum decomposition.
class SumDecomposition {
 public:
  explicit SumDecomposition(std::vector<Permutation> components)
      : components_(std::move(components)) {}

  std::size_t size() const noexcept { return components_.size(); }
  const Permutation& operator[](std::size_t i) const { return components_[i]; }
  const std::vector<Permutation>& components() const noexcept { return components_; }

  /// π_{<=i}: sum of the first i components (i = 0 gives ε).
  Permutation prefix(std::size_t i) const;
  /// π_{>i}: sum of the components after the first i (i = size() gives ε).
  Permutation suffix(std::size_t i) const;
  Permutation reconstruct() const { return prefix(size()); }

  /// Number of leading components equal to the first one.
  std::size_t leading_run() const noexcept;

 private:
  std::vector<Permutation> components_;
};

/// Splits at prefix-maximum boundaries.
SumDecomposition sum_decompose(const Permutation& pi);
bool is_sum_indecomposable(const Permutation& pi);

bool is_simple(const Permutation& pi);

/// {α, 1⊕α, α⊕1, 1⊕α⊕1}, sorted and deduplicated.
std::vector<Permutation> family_sum(const Permutation& alpha);
/// {α, 1⊙α, α⊙1, 1⊙α⊙1}; requires |α| > 1.
std::vector<Permutation> family_interleave(const Permutation& alpha);

}  // namespace pmob
