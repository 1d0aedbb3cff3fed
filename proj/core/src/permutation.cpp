#include "pmob/permutation.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <numeric>

#include "permutation_access.hpp"
#include "pmob/error.hpp"

namespace pmob {

namespace {

using Values = std::vector<Permutation::value_type>;

void check_length(std::size_t n) {
  if (n > Permutation::kMaxLength) {
    throw Error(ErrorKind::PermutationTooLong,
                "length " + std::to_string(n) + " exceeds " +
                    std::to_string(Permutation::kMaxLength));
  }
}

Permutation make(Values v) { return PermutationAccess::make(std::move(v)); }

}  // namespace

Permutation Permutation::from_one_line(std::span<const int> seq) {
  check_length(seq.size());
  const std::size_t n = seq.size();
  std::vector<bool> seen(n + 1, false);
  Values values;
  values.reserve(n);
  for (int v : seq) {
    if (v < 1 || static_cast<std::size_t>(v) > n || seen[v]) {
      throw Error(ErrorKind::NotAPermutation,
                  "value " + std::to_string(v) + " invalid for length " + std::to_string(n));
    }
    seen[v] = true;
    values.push_back(static_cast<value_type>(v));
  }
  return Permutation(std::move(values));
}

Permutation Permutation::standardize(std::span<const int> seq) {
  check_length(seq.size());
  std::vector<std::size_t> order(seq.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return seq[a] < seq[b]; });
  Values values(seq.size());
  for (std::size_t rank = 0; rank < order.size(); ++rank) {
    if (rank > 0 && seq[order[rank]] == seq[order[rank - 1]]) {
      throw Error(ErrorKind::NotAPermutation, "repeated value in sequence");
    }
    values[order[rank]] = static_cast<value_type>(rank + 1);
  }
  return Permutation(std::move(values));
}

Permutation Permutation::identity(std::size_t n) {
  check_length(n);
  Values values(n);
  std::iota(values.begin(), values.end(), value_type{1});
  return Permutation(std::move(values));
}

Permutation Permutation::reverse_identity(std::size_t n) {
  check_length(n);
  Values values(n);
  for (std::size_t i = 0; i < n; ++i) values[i] = static_cast<value_type>(n - i);
  return Permutation(std::move(values));
}

int Permutation::at(std::size_t position) const {
  if (position < 1 || position > size()) {
    throw Error(ErrorKind::IndexOutOfRange, "position " + std::to_string(position));
  }
  return values_[position - 1];
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (values_[i] != i + 1) return false;
  }
  return true;
}

bool Permutation::is_reverse_identity() const noexcept {
  const std::size_t n = values_.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (values_[i] != n - i) return false;
  }
  return true;
}

std::string Permutation::to_string(std::string_view separator) const {
  std::string out;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (i > 0) out += separator;
    out += std::to_string(values_[i]);
  }
  return out;
}

Permutation parse_permutation(std::string_view text) {
  auto is_sep = [](char c) { return c == ',' || c == ' ' || c == '\t'; };
  while (!text.empty() && is_sep(text.front())) text.remove_prefix(1);
  while (!text.empty() && is_sep(text.back())) text.remove_suffix(1);

  std::vector<int> seq;
  const bool separated = std::any_of(text.begin(), text.end(), is_sep);
  if (!separated) {
    if (text.size() > 9) {
      throw Error(ErrorKind::ParseError,
                  "bare digit strings are limited to length 9: '" + std::string(text) + "'");
    }
    for (char c : text) {
      if (c < '0' || c > '9') throw Error(ErrorKind::ParseError, "unexpected character '" + std::string(1, c) + "'");
      seq.push_back(c - '0');
    }
    return Permutation::from_one_line(seq);
  }

  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && is_sep(text[i])) ++i;
    std::size_t j = i;
    while (j < text.size() && !is_sep(text[j])) ++j;
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + j, value);
    if (ec != std::errc{} || ptr != text.data() + j) {
      throw Error(ErrorKind::ParseError, "bad token '" + std::string(text.substr(i, j - i)) + "'");
    }
    seq.push_back(value);
    i = j;
  }
  return Permutation::from_one_line(seq);
}

bool contains(const Permutation& pattern, const Permutation& text) {
  const std::size_t m = pattern.size();
  const std::size_t n = text.size();
  if (m > n) return false;
  if (m == 0) return true;
  if (m == n) return pattern == text;

  // For each pattern entry, the already-placed entries closest below and
  // above it in value. Placing entry j then only needs two comparisons.
  std::array<int, Permutation::kMaxLength> lo{}, hi{};
  for (std::size_t j = 0; j < m; ++j) {
    int below = -1, above = -1;
    for (std::size_t i = 0; i < j; ++i) {
      if (pattern[i] < pattern[j] && (below < 0 || pattern[i] > pattern[below])) below = static_cast<int>(i);
      if (pattern[i] > pattern[j] && (above < 0 || pattern[i] < pattern[above])) above = static_cast<int>(i);
    }
    lo[j] = below;
    hi[j] = above;
  }

  std::array<int, Permutation::kMaxLength> chosen{};  // text value matched to pattern[j]
  std::array<std::size_t, Permutation::kMaxLength> next{};  // next text index to try for j
  const int ni = static_cast<int>(n);
  const int mi = static_cast<int>(m);

  std::size_t j = 0;
  next[0] = 0;
  while (true) {
    bool placed = false;
    const std::size_t last = n - (m - j);
    const int pj = pattern[j];
    for (std::size_t t = next[j]; t <= last; ++t) {
      const int v = text[t];
      if (lo[j] >= 0) {
        if (v - chosen[lo[j]] < pj - pattern[lo[j]]) continue;
      } else if (v < pj) {
        continue;
      }
      if (hi[j] >= 0) {
        if (chosen[hi[j]] - v < pattern[hi[j]] - pj) continue;
      } else if (ni - v < mi - pj) {
        continue;
      }
      chosen[j] = v;
      next[j] = t + 1;
      placed = true;
      break;
    }
    if (placed) {
      if (++j == m) return true;
      next[j] = next[j - 1];
    } else {
      if (j == 0) return false;
      --j;
    }
  }
}

Permutation delete_point(const Permutation& pi, std::size_t position) {
  if (position < 1 || position > pi.size()) {
    throw Error(ErrorKind::IndexOutOfRange,
                "position " + std::to_string(position) + " for length " + std::to_string(pi.size()));
  }
  const int removed = pi[position - 1];
  Values values;
  values.reserve(pi.size() - 1);
  for (std::size_t i = 0; i < pi.size(); ++i) {
    if (i + 1 == position) continue;
    const int v = pi[i];
    values.push_back(static_cast<Permutation::value_type>(v > removed ? v - 1 : v));
  }
  return make(std::move(values));
}

Permutation direct_sum(const Permutation& a, const Permutation& b) {
  check_length(a.size() + b.size());
  Values values(a.values().begin(), a.values().end());
  values.reserve(a.size() + b.size());
  for (auto v : b.values()) values.push_back(static_cast<Permutation::value_type>(v + a.size()));
  return make(std::move(values));
}

Permutation skew_sum(const Permutation& a, const Permutation& b) {
  check_length(a.size() + b.size());
  Values values;
  values.reserve(a.size() + b.size());
  for (auto v : a.values()) values.push_back(static_cast<Permutation::value_type>(v + b.size()));
  values.insert(values.end(), b.values().begin(), b.values().end());
  return make(std::move(values));
}

namespace {

void swap_values(Values& values, int x, int y) {
  for (auto& v : values) {
    if (v == x) {
      v = static_cast<Permutation::value_type>(y);
    } else if (v == y) {
      v = static_cast<Permutation::value_type>(x);
    }
  }
}

void require_nonempty(const Permutation& a, const Permutation& b) {
  if (a.empty() || b.empty()) throw Error(ErrorKind::EmptyOperand, "interleave needs nonempty operands");
}

}  // namespace

Permutation interleave(const Permutation& a, const Permutation& b) {
  require_nonempty(a, b);
  Permutation s = direct_sum(a, b);
  const int top_of_a = static_cast<int>(a.size());
  swap_values(PermutationAccess::values(s), top_of_a, top_of_a + 1);
  return s;
}

Permutation skew_interleave(const Permutation& a, const Permutation& b) {
  require_nonempty(a, b);
  Permutation s = skew_sum(a, b);
  const int top_of_b = static_cast<int>(b.size());
  swap_values(PermutationAccess::values(s), top_of_b, top_of_b + 1);
  return s;
}

Permutation iterated_sum(const Permutation& alpha, std::int64_t r) {
  if (r < 1) throw Error(ErrorKind::PreconditionViolation, "iterated_sum needs r >= 1");
  if (alpha.empty()) return alpha;
  if (static_cast<std::uint64_t>(r) > Permutation::kMaxLength / alpha.size()) {
    throw Error(ErrorKind::PermutationTooLong, "iterated sum too long");
  }
  Values values;
  values.reserve(alpha.size() * static_cast<std::size_t>(r));
  for (std::int64_t copy = 0; copy < r; ++copy) {
    const std::size_t shift = alpha.size() * static_cast<std::size_t>(copy);
    for (auto v : alpha.values()) values.push_back(static_cast<Permutation::value_type>(v + shift));
  }
  return make(std::move(values));
}

Permutation iterated_interleave_21(std::int64_t k) {
  if (k < 1) throw Error(ErrorKind::PreconditionViolation, "iterated_interleave_21 needs k >= 1");
  if (static_cast<std::uint64_t>(k) > Permutation::kMaxLength / 2) {
    throw Error(ErrorKind::PermutationTooLong, "oscillation too long");
  }
  // Appending ⊙21 to a chain of length L moves its maximum (at index L-2) up
  // by one and appends L+2, L.
  Values values{2, 1};
  values.reserve(static_cast<std::size_t>(2 * k));
  for (std::int64_t step = 1; step < k; ++step) {
    const auto len = static_cast<Permutation::value_type>(values.size());
    values[len - 2] = static_cast<Permutation::value_type>(len + 1);
    values.push_back(static_cast<Permutation::value_type>(len + 2));
    values.push_back(len);
  }
  return make(std::move(values));
}

Permutation inverse(const Permutation& pi) {
  Values values(pi.size());
  for (std::size_t i = 0; i < pi.size(); ++i) values[pi[i] - 1] = static_cast<Permutation::value_type>(i + 1);
  return make(std::move(values));
}

Permutation reverse(const Permutation& pi) {
  Values values(pi.values().rbegin(), pi.values().rend());
  return make(std::move(values));
}

Permutation complement(const Permutation& pi) {
  Values values(pi.size());
  const int n1 = static_cast<int>(pi.size()) + 1;
  for (std::size_t i = 0; i < pi.size(); ++i) values[i] = static_cast<Permutation::value_type>(n1 - pi[i]);
  return make(std::move(values));
}

Permutation SumDecomposition::prefix(std::size_t i) const {
  if (i > components_.size()) throw Error(ErrorKind::IndexOutOfRange, "prefix index");
  Values values;
  std::size_t shift = 0;
  for (std::size_t c = 0; c < i; ++c) {
    for (auto v : components_[c].values()) values.push_back(static_cast<Permutation::value_type>(v + shift));
    shift += components_[c].size();
  }
  return make(std::move(values));
}

Permutation SumDecomposition::suffix(std::size_t i) const {
  if (i > components_.size()) throw Error(ErrorKind::IndexOutOfRange, "suffix index");
  Values values;
  std::size_t shift = 0;
  for (std::size_t c = i; c < components_.size(); ++c) {
    for (auto v : components_[c].values()) values.push_back(static_cast<Permutation::value_type>(v + shift));
    shift += components_[c].size();
  }
  return make(std::move(values));
}

std::size_t SumDecomposition::leading_run() const noexcept {
  if (components_.empty()) return 0;
  std::size_t run = 1;
  while (run < components_.size() && components_[run] == components_[0]) ++run;
  return run;
}

SumDecomposition sum_decompose(const Permutation& pi) {
  std::vector<Permutation> components;
  std::size_t start = 0;
  int running_max = 0;
  for (std::size_t i = 0; i < pi.size(); ++i) {
    running_max = std::max(running_max, pi[i]);
    if (static_cast<std::size_t>(running_max) == i + 1) {
      Values values;
      values.reserve(i + 1 - start);
      for (std::size_t t = start; t <= i; ++t) values.push_back(static_cast<Permutation::value_type>(pi[t] - start));
      components.push_back(make(std::move(values)));
      start = i + 1;
    }
  }
  return SumDecomposition(std::move(components));
}

bool is_sum_indecomposable(const Permutation& pi) {
  if (pi.empty()) return false;
  int running_max = 0;
  for (std::size_t i = 0; i + 1 < pi.size(); ++i) {
    running_max = std::max(running_max, pi[i]);
    if (static_cast<std::size_t>(running_max) == i + 1) return false;
  }
  return true;
}

bool is_simple(const Permutation& pi) {
  const std::size_t n = pi.size();
  if (n <= 2) return true;
  for (std::size_t i = 0; i < n; ++i) {
    int lo = pi[i], hi = pi[i];
    for (std::size_t j = i + 1; j < n; ++j) {
      lo = std::min(lo, pi[j]);
      hi = std::max(hi, pi[j]);
      const std::size_t len = j - i + 1;
      if (len == n) break;
      if (static_cast<std::size_t>(hi - lo) + 1 == len) return false;
    }
  }
  return true;
}

namespace {

std::vector<Permutation> sorted_unique(std::vector<Permutation> items) {
  std::sort(items.begin(), items.end());
  items.erase(std::unique(items.begin(), items.end()), items.end());
  return items;
}

}  // namespace

std::vector<Permutation> family_sum(const Permutation& alpha) {
  if (alpha.empty()) throw Error(ErrorKind::EmptyOperand, "family of the empty permutation");
  const Permutation one = Permutation::identity(1);
  const Permutation left = direct_sum(one, alpha);
  return sorted_unique({alpha, left, direct_sum(alpha, one), direct_sum(left, one)});
}

std::vector<Permutation> family_interleave(const Permutation& alpha) {
  if (alpha.empty()) throw Error(ErrorKind::EmptyOperand, "family of the empty permutation");
  if (alpha.size() < 2) throw Error(ErrorKind::OperandTooShort, "interleave family needs |alpha| > 1");
  const Permutation one = Permutation::identity(1);
  const Permutation left = interleave(one, alpha);
  return sorted_unique({alpha, left, interleave(alpha, one), interleave(left, one)});
}

}  // namespace pmob
