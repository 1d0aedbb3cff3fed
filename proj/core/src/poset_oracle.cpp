#include "pmob/poset_oracle.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "pmob/checked.hpp"
#include "pmob/error.hpp"

namespace pmob {

namespace {

void check_cap(const Permutation& pi, std::size_t cap) {
  if (pi.size() > cap) {
    throw Error(ErrorKind::TooLarge, "length " + std::to_string(pi.size()) +
                                         " exceeds the downset cap " + std::to_string(cap));
  }
}

std::vector<Permutation> children(const Permutation& pi) {
  std::vector<Permutation> out;
  out.reserve(pi.size());
  for (std::size_t i = 1; i <= pi.size(); ++i) out.push_back(delete_point(pi, i));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

class Bitset {
 public:
  explicit Bitset(std::size_t bits = 0) : words_((bits + 63) / 64, 0) {}
  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  void merge(const Bitset& other) {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= other.words_[w];
  }
  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        f(w * 64 + static_cast<std::size_t>(__builtin_ctzll(bits)));
        bits &= bits - 1;
      }
    }
  }

 private:
  std::vector<std::uint64_t> words_;
};

}  // namespace

std::size_t layer_total(const Layers& layers) noexcept {
  std::size_t total = 0;
  for (const auto& layer : layers) total += layer.size();
  return total;
}

Layers downset(const Permutation& pi, std::size_t cap) {
  check_cap(pi, cap);
  Layers layers(pi.size() + 1);
  layers[pi.size()].push_back(pi);
  for (std::size_t len = pi.size(); len > 0; --len) {
    std::unordered_set<Permutation, PermutationHash> next;
    for (const auto& tau : layers[len]) {
      for (std::size_t i = 1; i <= len; ++i) next.insert(delete_point(tau, i));
    }
    layers[len - 1].assign(next.begin(), next.end());
    std::sort(layers[len - 1].begin(), layers[len - 1].end());
  }
  return layers;
}

IntervalTable interval(const Permutation& sigma, const Permutation& pi, std::size_t cap) {
  IntervalTable table{sigma, pi, {}, {}};
  check_cap(pi, cap);
  if (!contains(sigma, pi)) return table;
  table.members = downset(pi, cap);
  for (std::size_t len = 0; len < table.members.size(); ++len) {
    auto& layer = table.members[len];
    if (len < sigma.size()) {
      layer.clear();
      continue;
    }
    std::erase_if(layer, [&](const Permutation& tau) { return !contains(sigma, tau); });
  }
  return table;
}

IntervalTable interval_with_mobius(const Permutation& sigma, const Permutation& pi, std::size_t cap) {
  IntervalTable table = interval(sigma, pi, cap);
  if (table.empty()) return table;

  std::unordered_map<Permutation, std::size_t, PermutationHash> index;
  std::vector<std::int64_t> mu;
  for (const auto& layer : table.members) {
    for (const auto& tau : layer) {
      index.emplace(tau, index.size());
    }
  }
  mu.assign(index.size(), 0);
  const std::size_t total = index.size();

  // Down-closures inside the interval, kept for one layer at a time.
  std::unordered_map<std::size_t, Bitset> previous;
  for (std::size_t len = sigma.size(); len <= pi.size(); ++len) {
    std::unordered_map<std::size_t, Bitset> current;
    for (const auto& tau : table.members[len]) {
      const std::size_t id = index.at(tau);
      Bitset closure(total);
      closure.set(id);
      if (len > sigma.size()) {
        for (const auto& child : children(tau)) {
          auto it = index.find(child);
          if (it != index.end()) closure.merge(previous.at(it->second));
        }
      }
      if (len == sigma.size()) {
        mu[id] = 1;
      } else {
        std::int64_t sum = 0;
        closure.for_each([&](std::size_t other) {
          if (other != id) sum = checked_add(sum, mu[other]);
        });
        mu[id] = checked_neg(sum);
      }
      current.emplace(id, std::move(closure));
    }
    previous = std::move(current);
  }

  for (const auto& [tau, id] : index) table.mu.emplace(tau, mu[id]);
  return table;
}

std::int64_t mobius_naive(const Permutation& sigma, const Permutation& pi, std::size_t cap) {
  check_cap(pi, cap);
  if (sigma == pi) return 1;
  if (!contains(sigma, pi)) return 0;
  if (sigma.size() + 1 == pi.size()) return -1;
  IntervalTable table = interval_with_mobius(sigma, pi, cap);
  return table.mu.at(pi);
}

std::vector<Permutation> all_permutations(std::size_t n) {
  std::vector<int> seq(n);
  std::iota(seq.begin(), seq.end(), 1);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation::from_one_line(seq));
  } while (std::next_permutation(seq.begin(), seq.end()));
  return out;
}

MobiusOracleTable::MobiusOracleTable(std::size_t max_len) : max_len_(max_len) {
  if (max_len > 10) throw Error(ErrorKind::TooLarge, "oracle table is limited to length 10");
  for (std::size_t len = 0; len <= max_len; ++len) {
    for (auto& p : all_permutations(len)) perms_.push_back(std::move(p));
  }
  index_.reserve(perms_.size());
  for (std::size_t i = 0; i < perms_.size(); ++i) index_.emplace(perms_[i], static_cast<std::uint32_t>(i));

  offsets_.assign(1, 0);
  std::vector<std::int64_t> acc(perms_.size(), 0);
  std::vector<std::uint32_t> merged;
  for (std::size_t id = 0; id < perms_.size(); ++id) {
    const Permutation& pi = perms_[id];

    // downset(π) = {π} ∪ the downsets of its one-point deletions.
    merged.clear();
    merged.push_back(static_cast<std::uint32_t>(id));
    std::vector<std::uint32_t> kids;
    for (const auto& child : children(pi)) kids.push_back(index_.at(child));
    for (auto kid : kids) {
      auto row = downset_of(kid);
      merged.insert(merged.end(), row.begin(), row.end());
    }
    std::sort(merged.begin(), merged.end());
    merged.erase(std::unique(merged.begin(), merged.end()), merged.end());

    // μ(σ, π) = -Σ_{σ ≤ λ < π} μ(σ, λ): accumulate each λ's stored column.
    for (auto lambda : merged) {
      if (lambda == id) continue;
      auto down = downset_of(lambda);
      auto mu = mobius_row(lambda);
      for (std::size_t t = 0; t < down.size(); ++t) acc[down[t]] += mu[t];
    }
    for (auto sigma : merged) {
      const std::int64_t value = sigma == id ? 1 : -acc[sigma];
      acc[sigma] = 0;
      if (value > INT32_MAX || value < INT32_MIN) throw Error(ErrorKind::Overflow, "oracle table entry");
      down_.push_back(sigma);
      mu_.push_back(static_cast<std::int32_t>(value));
    }
    offsets_.push_back(down_.size());
  }
}

std::size_t MobiusOracleTable::index_of(const Permutation& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) throw Error(ErrorKind::TooLarge, "permutation outside the oracle table");
  return it->second;
}

std::span<const std::uint32_t> MobiusOracleTable::downset_of(std::size_t id) const noexcept {
  return {down_.data() + offsets_[id], offsets_[id + 1] - offsets_[id]};
}

std::span<const std::int32_t> MobiusOracleTable::mobius_row(std::size_t id) const noexcept {
  return {mu_.data() + offsets_[id], offsets_[id + 1] - offsets_[id]};
}

std::int64_t MobiusOracleTable::mobius(std::size_t sigma_id, std::size_t pi_id) const {
  auto down = downset_of(pi_id);
  auto it = std::lower_bound(down.begin(), down.end(), static_cast<std::uint32_t>(sigma_id));
  if (it == down.end() || *it != sigma_id) return 0;
  return mobius_row(pi_id)[static_cast<std::size_t>(it - down.begin())];
}

std::int64_t MobiusOracleTable::mobius(const Permutation& sigma, const Permutation& pi) const {
  return mobius(index_of(sigma), index_of(pi));
}

}  // namespace pmob
