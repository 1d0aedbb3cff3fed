#pragma once

#include <vector>

#include "pmob/permutation.hpp"

namespace pmob {

// Library-internal constructor that skips validation. Callers guarantee the
// values already form a permutation.
struct PermutationAccess {
  static Permutation make(std::vector<Permutation::value_type> values) {
    return Permutation(std::move(values));
  }
  static std::vector<Permutation::value_type>& values(Permutation& p) { return p.values_; }
};

}  // namespace pmob
