#include "pmob/mobius_engine.hpp"

#include <charconv>
#include <cstdlib>
#include <cstring>

#include "pmob/checked.hpp"
#include "pmob/error.hpp"
#include "pmob/shape.hpp"

namespace pmob {

namespace {

const Permutation& one() {
  static const Permutation p = Permutation::identity(1);
  return p;
}

bool is_one(const Permutation& p) { return p.size() == 1; }

std::size_t leading_ones(const SumDecomposition& d) {
  if (d.size() == 0 || !is_one(d[0])) return 0;
  return d.leading_run();
}

}  // namespace

std::string MobiusCache::pair_key(const Permutation& sigma, const Permutation& pi) {
  // Values are 1..255, so a zero byte separates the two keys unambiguously.
  std::string key;
  key.reserve(sigma.size() + pi.size() + 1);
  key.append(sigma.key());
  key.push_back('\0');
  key.append(pi.key());
  return key;
}

std::optional<std::int64_t> MobiusCache::get(const Permutation& sigma, const Permutation& pi) const {
  auto it = map_.find(pair_key(sigma, pi));
  if (it == map_.end()) return std::nullopt;
  return it->second;
}

void MobiusCache::put(const Permutation& sigma, const Permutation& pi, std::int64_t value) {
  if (map_.size() >= max_entries_) {
    ++dropped_;
    return;
  }
  map_.insert_or_assign(pair_key(sigma, pi), value);
}

std::int64_t min_r_general(const Permutation& alpha, const Permutation& pi) {
  if (alpha.empty()) throw Error(ErrorKind::EmptyOperand, "alpha must be nonempty");
  const auto bound = static_cast<std::int64_t>(pi.size() / alpha.size()) + 1;
  std::int64_t r = 1;
  while (r < bound && contains(direct_sum(direct_sum(one(), iterated_sum(alpha, r)), one()), pi)) ++r;
  return r;
}

namespace {

// The σ-independent part of the weight, valid whenever σ ≤ α.
int capped_weight(const Permutation& alpha, std::int64_t r, const Permutation& pi) {
  const Permutation copies = iterated_sum(alpha, r);
  if (!contains(copies, pi)) return 0;
  const bool left = contains(direct_sum(one(), copies), pi);
  const bool right = contains(direct_sum(copies, one()), pi);
  if (!left && !right) return 1;
  if (left && right && !contains(iterated_sum(alpha, r + 1), pi)) return -1;
  return 0;
}

}  // namespace

int weight_general(const Permutation& sigma, const Permutation& alpha, const Permutation& pi) {
  if (alpha.empty() || !contains(alpha, pi)) return 0;
  const std::int64_t r = min_r_general(alpha, pi);
  if (!contains(sigma, iterated_sum(alpha, r))) return 0;
  return capped_weight(alpha, r, pi);
}

std::optional<FamilyMembership> sum_family_membership(const Permutation& pi) {
  const SumDecomposition d = sum_decompose(pi);
  const std::size_t m = d.size();
  if (m < 2) return std::nullopt;
  const bool lead = is_one(d[0]);
  const bool trail = is_one(d[m - 1]) && (lead ? m >= 3 : true);
  const std::size_t begin = lead ? 1 : 0;
  const std::size_t end = trail ? m - 1 : m;
  if (begin >= end || is_one(d[begin])) return std::nullopt;
  for (std::size_t i = begin + 1; i < end; ++i) {
    if (d[i] != d[begin]) return std::nullopt;
  }
  return FamilyMembership{d[begin], lead == trail ? 1 : -1};
}

MobiusEngine::MobiusEngine(EngineOptions options) : options_(options), cache_(options.cache_entries) {}

std::int64_t MobiusEngine::mobius(const Permutation& sigma, const Permutation& pi) {
  if (auto hit = cache_.get(sigma, pi)) return *hit;
  const std::int64_t value = dispatch(sigma, pi);
  cache_.put(sigma, pi, value);
  return value;
}

std::int64_t MobiusEngine::dispatch(const Permutation& sigma, const Permutation& pi) {
  if (sigma == pi) return 1;
  if (sigma.empty()) return pi.size() == 1 ? -1 : 0;
  if (!contains(sigma, pi)) return 0;
  if (pi.is_identity() || pi.is_reverse_identity()) return sigma.size() + 1 == pi.size() ? -1 : 0;
  if (sigma.size() + 1 == pi.size()) return -1;

  const SumDecomposition d = sum_decompose(pi);
  if (d.size() >= 2) {
    if (is_one(d[0])) return mobius_prop1(sigma, pi);
    if (is_sum_indecomposable(sigma)) return mobius_cor3(sigma, pi);
    return mobius_prop2(sigma, pi);
  }

  if (is_sum_indecomposable(sigma)) {
    if (options_.oscillation_fast_path && pi.size() >= 4) {
      auto id = identify_oscillation(pi);
      if (id && (is_one(sigma) || identify_oscillation(sigma))) {
        ++stats_.oscillation_calls;
        return osc_.mobius(sigma, *id);
      }
    }
    if (pi.size() > 3) return mobius_theorem(sigma, pi);
    return naive_and_store(sigma, pi);
  }

  ++stats_.naive_fallbacks;
  return naive_and_store(sigma, pi);
}

std::int64_t MobiusEngine::naive_and_store(const Permutation& sigma, const Permutation& pi) {
  IntervalTable table = interval_with_mobius(sigma, pi, options_.downset_cap);
  for (const auto& [tau, value] : table.mu) cache_.put(sigma, tau, value);
  return table.mu.at(pi);
}

std::int64_t MobiusEngine::mobius_prop1(const Permutation& sigma, const Permutation& pi) {
  const SumDecomposition d = sum_decompose(pi);
  if (d.size() < 2 || !is_one(d[0])) {
    throw Error(ErrorKind::PreconditionViolation, "first component of pi must be 1 with >= 2 components");
  }
  if (sigma.empty()) throw Error(ErrorKind::PreconditionViolation, "sigma must be nonempty");
  if (!contains(sigma, pi)) return 0;
  ++stats_.decomposable_calls;

  const SumDecomposition s = sum_decompose(sigma);
  const std::size_t k = leading_ones(d);
  const std::size_t l = leading_ones(s);
  const Permutation rest = d.suffix(k);
  if (k - 1 > l) return 0;
  if (k - 1 == l) return checked_neg(mobius(s.suffix(k - 1), rest));
  return checked_sub(mobius(s.suffix(k), rest), mobius(s.suffix(k - 1), rest));
}

std::int64_t MobiusEngine::mobius_prop2(const Permutation& sigma, const Permutation& pi) {
  const SumDecomposition d = sum_decompose(pi);
  if (d.size() < 2 || is_one(d[0])) {
    throw Error(ErrorKind::PreconditionViolation, "first component of pi must differ from 1 with >= 2 components");
  }
  if (!contains(sigma, pi)) return 0;
  ++stats_.decomposable_calls;

  const SumDecomposition s = sum_decompose(sigma);
  const std::size_t k = d.leading_run();
  std::int64_t total = 0;
  for (std::size_t i = 1; i <= s.size(); ++i) {
    const std::int64_t head = mobius(s.prefix(i), d[0]);
    if (head == 0) continue;
    const Permutation tail = s.suffix(i);
    for (std::size_t j = 1; j <= k; ++j) {
      total = checked_add(total, checked_mul(head, mobius(tail, d.suffix(j))));
    }
  }
  return total;
}

std::int64_t MobiusEngine::mobius_cor3(const Permutation& sigma, const Permutation& pi) {
  const SumDecomposition d = sum_decompose(pi);
  if (d.size() < 2 || is_one(d[0])) {
    throw Error(ErrorKind::PreconditionViolation, "first component of pi must differ from 1 with >= 2 components");
  }
  if (!is_sum_indecomposable(sigma)) throw Error(ErrorKind::PreconditionViolation, "sigma must be indecomposable");
  if (!contains(sigma, pi)) return 0;
  ++stats_.decomposable_calls;

  const std::size_t k = d.leading_run();
  if (d.size() == k) return mobius(sigma, d[0]);
  if (d.size() == k + 1 && is_one(d[k])) return checked_neg(mobius(sigma, d[0]));
  return 0;
}

const std::vector<MobiusEngine::Candidate>& MobiusEngine::profile(const Permutation& pi) {
  auto it = profiles_.find(pi);
  if (it != profiles_.end()) return it->second;

  const auto family = sum_family_membership(pi);
  std::vector<Candidate> candidates;
  const Layers layers = downset(pi, options_.downset_cap);
  for (std::size_t len = 2; len < pi.size(); ++len) {
    for (const auto& alpha : layers[len]) {
      if (!is_sum_indecomposable(alpha)) continue;
      const std::int64_t r = min_r_general(alpha, pi);
      int w = capped_weight(alpha, r, pi);
      // When π itself belongs to the family of ⊕^k α, the family is cut off
      // at π and α picks up the boundary term.
      if (family && family->alpha == alpha) w -= family->sign;
      if (w != 0) candidates.push_back({alpha, r, w});
    }
  }
  return profiles_.emplace(pi, std::move(candidates)).first->second;
}

std::vector<WeightedContribution> MobiusEngine::contributing_set(const Permutation& sigma, const Permutation& pi) {
  std::vector<WeightedContribution> out;
  if (!contains(sigma, pi)) return out;
  for (const auto& c : profile(pi)) {
    if (contains(sigma, c.alpha)) out.push_back({c.alpha, c.r, c.weight});
  }
  return out;
}

std::int64_t MobiusEngine::mobius_theorem(const Permutation& sigma, const Permutation& pi,
                                          std::vector<TheoremTraceRow>* trace) {
  if (!is_sum_indecomposable(sigma)) throw Error(ErrorKind::PreconditionViolation, "sigma must be indecomposable");
  if (pi.size() <= 3) throw Error(ErrorKind::PreconditionViolation, "pi must have length > 3");
  if (pi.is_identity() || pi.is_reverse_identity()) {
    throw Error(ErrorKind::PreconditionViolation, "pi must not be monotone");
  }
  if (!contains(sigma, pi)) return 0;
  if (sigma == pi) return 1;
  ++stats_.theorem_calls;

  std::int64_t total = 0;
  for (const auto& c : contributing_set(sigma, pi)) {
    const std::int64_t mu = mobius(sigma, c.alpha);
    if (trace != nullptr) trace->push_back({c.alpha, c.r, c.weight, mu});
    total = checked_add(total, checked_mul(c.weight, mu));
  }
  return checked_neg(total);
}

EngineOptions options_from_environment(EngineOptions base) {
  const char* raw = std::getenv("MOBIUS_CACHE_BYTES");
  if (raw == nullptr || *raw == '\0') return base;
  std::size_t bytes = 0;
  const char* end = raw + std::strlen(raw);
  auto [ptr, ec] = std::from_chars(raw, end, bytes);
  if (ec != std::errc{} || ptr != end) {
    throw Error(ErrorKind::ParseError, std::string("MOBIUS_CACHE_BYTES is not a byte count: ") + raw);
  }
  base.cache_entries = MobiusCache::entries_for_bytes(bytes);
  return base;
}

}  // namespace pmob
