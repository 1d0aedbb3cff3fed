#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

#include "pmob/permutation.hpp"

namespace pmob {

inline constexpr std::size_t kDefaultDownsetCap = 12;

/// Permutations grouped by length: layers[L] holds the members of length L,
/// sorted.
using Layers = std::vector<std::vector<Permutation>>;

/// Every τ ≤ pi, ε and pi included. Throws TooLarge when |pi| > cap.
Layers downset(const Permutation& pi, std::size_t cap = kDefaultDownsetCap);

std::size_t layer_total(const Layers& layers) noexcept;

struct IntervalTable {
  Permutation lower;
  Permutation upper;
  Layers members;  // empty when lower is not contained in upper
  std::unordered_map<Permutation, std::int64_t, PermutationHash> mu;

  bool empty() const noexcept { return layer_total(members) == 0; }
  std::size_t size() const noexcept { return layer_total(members); }
};

/// Members of [sigma, pi]; mu is left empty.
IntervalTable interval(const Permutation& sigma, const Permutation& pi,
                       std::size_t cap = kDefaultDownsetCap);

/// Members of [sigma, pi] with μ(sigma, ·) filled in for each.
IntervalTable interval_with_mobius(const Permutation& sigma, const Permutation& pi,
                                   std::size_t cap = kDefaultDownsetCap);

/// μ(sigma, pi) straight from the defining recursion over the interval.
std::int64_t mobius_naive(const Permutation& sigma, const Permutation& pi,
                          std::size_t cap = kDefaultDownsetCap);

/// μ(σ, π) for every pair of permutations of length at most max_len, built
/// once and queried in O(log |downset|). Intended for exhaustive sweeps.
class MobiusOracleTable {
 public:
  explicit MobiusOracleTable(std::size_t max_len);

  std::size_t max_len() const noexcept { return max_len_; }
  std::size_t size() const noexcept { return perms_.size(); }

  /// All permutations of length <= max_len, ordered by length then lexicographically.
  const std::vector<Permutation>& permutations() const noexcept { return perms_; }
  std::size_t index_of(const Permutation& p) const;

  /// Indices of every τ ≤ perms()[id], ascending.
  std::span<const std::uint32_t> downset_of(std::size_t id) const noexcept;
  /// μ(τ, perms()[id]) aligned with downset_of(id).
  std::span<const std::int32_t> mobius_row(std::size_t id) const noexcept;

  /// μ(sigma, pi); 0 when sigma is not below pi. Both must be in range.
  std::int64_t mobius(const Permutation& sigma, const Permutation& pi) const;
  std::int64_t mobius(std::size_t sigma_id, std::size_t pi_id) const;

 private:
  std::size_t max_len_;
  std::vector<Permutation> perms_;
  std::unordered_map<Permutation, std::uint32_t, PermutationHash> index_;
  std::vector<std::size_t> offsets_;
  std::vector<std::uint32_t> down_;
  std::vector<std::int32_t> mu_;
};

/// All permutations of length n in lexicographic order.
std::vector<Permutation> all_permutations(std::size_t n);

}  // namespace pmob
