#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "pmob/oscillation_fast.hpp"
#include "pmob/permutation.hpp"
#include "pmob/poset_oracle.hpp"

namespace pmob {

/// Pair-keyed memo of Möbius values. Single-threaded; once the entry budget
/// is spent further insertions are dropped.
class MobiusCache {
 public:
  explicit MobiusCache(std::size_t max_entries = kUnbounded) : max_entries_(max_entries) {}

  static constexpr std::size_t kUnbounded = static_cast<std::size_t>(-1);
  /// Budget in entries for a byte budget, using a rough per-entry footprint.
  static std::size_t entries_for_bytes(std::size_t bytes) noexcept { return bytes / 96; }

  std::optional<std::int64_t> get(const Permutation& sigma, const Permutation& pi) const;
  void put(const Permutation& sigma, const Permutation& pi, std::int64_t value);

  std::size_t size() const noexcept { return map_.size(); }
  std::size_t dropped() const noexcept { return dropped_; }
  std::size_t max_entries() const noexcept { return max_entries_; }
  void clear() {
    map_.clear();
    dropped_ = 0;
  }

 private:
  static std::string pair_key(const Permutation& sigma, const Permutation& pi);

  std::size_t max_entries_;
  std::size_t dropped_ = 0;
  std::unordered_map<std::string, std::int64_t> map_;
};

struct WeightedContribution {
  Permutation alpha;
  std::int64_t r = 0;
  int weight = 0;

  friend bool operator==(const WeightedContribution&, const WeightedContribution&) = default;
};

/// Smallest r >= 1 with 1⊕(⊕^r alpha)⊕1 not contained in pi.
std::int64_t min_r_general(const Permutation& alpha, const Permutation& pi);

/// Weight of alpha for the pair (sigma, pi), decided by containment of
/// ⊕^r alpha and its capped variants in pi.
int weight_general(const Permutation& sigma, const Permutation& alpha, const Permutation& pi);

/// When pi is one of ⊕^k α, 1⊕(⊕^k α), (⊕^k α)⊕1, 1⊕(⊕^k α)⊕1 for an
/// indecomposable α ≠ 1: that α and +1 for the first and last forms, -1 for
/// the one-sided ones.
struct FamilyMembership {
  Permutation alpha;
  int sign = 0;
};
std::optional<FamilyMembership> sum_family_membership(const Permutation& pi);

struct EngineOptions {
  std::size_t downset_cap = kDefaultDownsetCap;
  bool oscillation_fast_path = true;
  std::size_t cache_entries = MobiusCache::kUnbounded;
};

struct EngineStats {
  std::size_t naive_fallbacks = 0;  // σ decomposable with π indecomposable
  std::size_t theorem_calls = 0;
  std::size_t oscillation_calls = 0;
  std::size_t decomposable_calls = 0;
};

struct TheoremTraceRow {
  Permutation alpha;
  std::int64_t r = 0;
  int weight = 0;
  std::int64_t mu = 0;  // μ(sigma, alpha)
};

/// Exact Möbius values on the permutation poset, dispatching each pair to the
/// cheapest applicable recursion. Not thread-safe; use one engine per thread.
class MobiusEngine {
 public:
  explicit MobiusEngine(EngineOptions options = {});

  std::int64_t mobius(const Permutation& sigma, const Permutation& pi);

  /// π decomposable with first component 1.
  std::int64_t mobius_prop1(const Permutation& sigma, const Permutation& pi);
  /// π decomposable with first component ≠ 1.
  std::int64_t mobius_prop2(const Permutation& sigma, const Permutation& pi);
  /// As mobius_prop2 with sigma indecomposable.
  std::int64_t mobius_cor3(const Permutation& sigma, const Permutation& pi);

  /// Indecomposable sigma, |pi| > 3, pi not monotone.
  std::int64_t mobius_theorem(const Permutation& sigma, const Permutation& pi,
                              std::vector<TheoremTraceRow>* trace = nullptr);

  /// Indecomposable α ∈ [sigma, pi) with nonzero weight in mobius_theorem.
  std::vector<WeightedContribution> contributing_set(const Permutation& sigma, const Permutation& pi);

  const EngineOptions& options() const noexcept { return options_; }
  const EngineStats& stats() const noexcept { return stats_; }
  const MobiusCache& cache() const noexcept { return cache_; }
  OscillationEngine& oscillations() noexcept { return osc_; }

  void clear_cache() {
    cache_.clear();
    profiles_.clear();
    osc_.clear();
  }

 private:
  struct Candidate {
    Permutation alpha;
    std::int64_t r;
    int weight;  // σ-independent part, including the family boundary term
  };

  const std::vector<Candidate>& profile(const Permutation& pi);
  std::int64_t dispatch(const Permutation& sigma, const Permutation& pi);
  std::int64_t naive_and_store(const Permutation& sigma, const Permutation& pi);

  EngineOptions options_;
  EngineStats stats_;
  MobiusCache cache_;
  std::unordered_map<Permutation, std::vector<Candidate>, PermutationHash> profiles_;
  OscillationEngine osc_;
};

/// Engine options from the environment: MOBIUS_CACHE_BYTES bounds the cache.
EngineOptions options_from_environment(EngineOptions base = {});

}  // namespace pmob
