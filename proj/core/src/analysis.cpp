#include "pmob/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "pmob/error.hpp"
#include "pmob/shape.hpp"

namespace pmob {

double normalized_ratio(std::int64_t n, std::int64_t abs) {
  const std::int64_t m = n / 2;
  const double denom = n % 2 == 0 ? static_cast<double>(m) * m : static_cast<double>(m) * m + m;
  return denom > 0 ? static_cast<double>(abs) / denom : 0.0;
}

void PrincipalSeries::extend_to(std::int64_t n_max) {
  if (n_max <= this->n_max()) return;
  if (n_max < 1) throw Error(ErrorKind::RangeError, "series length must be >= 1");
  const Permutation one = Permutation::identity(1);
  engine_.mobius(one, {OscKind::W, n_max});
  for (std::int64_t n = this->n_max() + 1; n <= n_max; ++n) {
    SeriesRecord rec;
    rec.n = n;
    rec.mu_w = engine_.mobius(one, {OscKind::W, n});
    rec.mu_m = engine_.mobius(one, {OscKind::M, n});
    rec.abs = rec.mu_w < 0 ? -rec.mu_w : rec.mu_w;
    rec.ratio = normalized_ratio(n, rec.abs);
    records_.push_back(rec);
  }
}

const SeriesRecord& PrincipalSeries::at(std::int64_t n) const {
  if (n < 1 || n > n_max()) {
    throw Error(ErrorKind::RangeError, "length " + std::to_string(n) + " outside the computed series");
  }
  return records_[static_cast<std::size_t>(n - 1)];
}

std::vector<SeriesRecord> principal_series(std::int64_t n_max) {
  if (n_max < 4) throw Error(ErrorKind::RangeError, "n_max must be >= 4");
  PrincipalSeries series;
  series.extend_to(n_max);
  return {series.records().begin() + 3, series.records().end()};
}

namespace {

void require_window(const PrincipalSeries& series, std::int64_t lo, std::int64_t hi) {
  if (lo < 1 || hi < lo) {
    throw Error(ErrorKind::RangeError, "bad window " + std::to_string(lo) + ".." + std::to_string(hi));
  }
  if (hi > series.n_max()) {
    throw Error(ErrorKind::RangeError, "series only reaches length " + std::to_string(series.n_max()));
  }
}

}  // namespace

std::vector<Violation> sign_check(const PrincipalSeries& series, std::int64_t lo, std::int64_t hi) {
  require_window(series, lo, hi);
  std::vector<Violation> out;
  for (std::int64_t n = lo; n <= hi; ++n) {
    const std::int64_t mu = series.at(n).mu_w;
    const bool even = n % 2 == 0;
    if (even ? mu >= 0 : mu <= 0) out.push_back({n, even ? "mu(1,W_n) < 0" : "mu(1,W_n) > 0", even ? "< 0" : "> 0", mu});
  }
  return out;
}

std::vector<Violation> bound_check(const PrincipalSeries& series, std::int64_t lo, std::int64_t hi) {
  require_window(series, lo, hi);
  std::vector<Violation> out;
  for (std::int64_t n = lo; n <= hi; ++n) {
    const SeriesRecord& rec = series.at(n);
    if (n < 62 && rec.abs > (std::int64_t{1} << n)) {
      out.push_back({n, "|mu(1,W_n)| <= 2^n", "<= " + std::to_string(std::int64_t{1} << n), rec.abs});
    }
    if (rec.mu_w != rec.mu_m) out.push_back({n, "mu(1,W_n) = mu(1,M_n)", std::to_string(rec.mu_w), rec.mu_m});
  }
  return out;
}

std::vector<Violation> jelinek_check(std::int64_t n_lo, std::int64_t n_hi, const PrincipalSeries& series,
                                     JelinekRules rules) {
  if (n_lo <= 50) throw Error(ErrorKind::RangeError, "the conjecture is stated for n > 50");
  if (n_hi < n_lo) throw Error(ErrorKind::RangeError, "empty range");
  require_window(series, 2 * n_lo, 2 * n_hi + 1);

  const bool plus = rules == JelinekRules::OddPlusVariant;
  std::vector<Violation> out;
  for (std::int64_t n = n_lo; n <= n_hi; ++n) {
    const bool prime = is_prime(static_cast<std::uint64_t>(n + 1));
    const bool zero = prime && n % 6 == 0;
    const bool four = prime && n % 6 == 4;
    const std::int64_t even = series.magnitude(2 * n);
    const std::int64_t odd = series.magnitude(2 * n + 1);
    const std::int64_t sq = n * n;
    const std::int64_t odd_base = plus ? sq + n : sq - n;
    const std::string odd_label = plus ? "n^2+n" : "n^2-n";

    struct Rule {
      std::string name;
      std::int64_t target;
      std::int64_t actual;
      bool predicted;
    };
    const Rule checks[] = {
        {"M(2n) = n^2", sq, even, zero},
        {"M(2n) = n^2-1", sq - 1, even, four},
        {"M(2n+1) = " + odd_label, odd_base, odd, zero},
        {"M(2n+1) = " + odd_label + "-1", odd_base - 1, odd, four},
    };
    for (const auto& rule : checks) {
      if ((rule.actual == rule.target) != rule.predicted) {
        out.push_back({n, rule.name, (rule.predicted ? "== " : "!= ") + std::to_string(rule.target), rule.actual});
      }
    }
  }
  return out;
}

int band_of_length(std::int64_t n) {
  // Odd length 2m+1 shares the band of even length 2m.
  switch ((n % 2 == 0 ? n : n - 1) % 12) {
    case 10: return 0;
    case 2:
    case 6: return 1;
    case 4: return 2;
    default: return 3;
  }
}

namespace {

struct Range {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  void add(double x) {
    lo = std::min(lo, x);
    hi = std::max(hi, x);
  }
  bool empty() const { return lo > hi; }
};

BandConstants constants_from(const std::array<Range, 4>& bands) {
  BandConstants c;
  c.values = {bands[0].lo, bands[0].hi, bands[1].lo, bands[1].hi, bands[2].lo, bands[2].hi, bands[3].lo};
  for (int b = 0; b < 4; ++b) c.upper[b] = bands[b].hi;
  return c;
}

bool is_ordered(const std::array<Range, 4>& bands) {
  for (const auto& b : bands) {
    if (b.empty()) return false;
  }
  for (int b = 0; b + 1 < 4; ++b) {
    if (!(bands[b].hi < bands[b + 1].lo)) return false;
  }
  return bands[3].hi <= 1.0 && bands[0].lo > 0.0;
}

}  // namespace

BandingResult banding_report(std::int64_t lo, std::int64_t hi, const PrincipalSeries& series, double tolerance) {
  if (lo < 4 || hi <= lo) throw Error(ErrorKind::RangeError, "banding needs 4 <= lo < hi");
  require_window(series, lo, hi);

  BandingResult result;
  result.lo = lo;
  result.hi = hi;

  std::array<Range, 12> per_class{};
  std::array<std::int64_t, 12> counts{};
  std::array<Range, 4> combined{}, even{}, odd{};
  for (std::int64_t n = lo; n <= hi; ++n) {
    const SeriesRecord& rec = series.at(n);
    const int residue = static_cast<int>(n % 12);
    const int band = band_of_length(n);
    per_class[residue].add(rec.ratio);
    ++counts[residue];
    combined[band].add(rec.ratio);
    (n % 2 == 0 ? even : odd)[band].add(rec.ratio);
    if (rec.ratio > 1.0) result.excess.push_back({n, "ratio <= 1", "<= 1", rec.abs});
  }

  // Rows in the conjecture's order: even class then its odd partner.
  constexpr int kEvenOrder[] = {10, 2, 6, 4, 8, 0};
  for (int e : kEvenOrder) {
    for (int residue : {e, (e + 1) % 12}) {
      if (counts[residue] == 0) continue;
      result.classes.push_back({residue, residue % 2 == 0, band_of_length(residue),
                                per_class[residue].lo, per_class[residue].hi, counts[residue]});
    }
  }

  result.combined = constants_from(combined);
  result.even_only = constants_from(even);
  result.odd_only = constants_from(odd);
  result.ordered = is_ordered(combined);
  bool overlap = true;
  for (int b = 0; b < 4; ++b) {
    overlap = overlap && !even[b].empty() && !odd[b].empty() && even[b].lo <= odd[b].hi && odd[b].lo <= even[b].hi;
  }
  result.paired = is_ordered(even) && is_ordered(odd) && overlap;

  static constexpr const char* kNames[] = {"a", "b", "c", "d", "e", "f", "g"};
  for (std::size_t i = 0; i < 7; ++i) {
    const double got = result.combined.values[i];
    if (!(std::abs(got - kReferenceBandConstants[i]) <= tolerance)) {
      result.deviations.push_back({kNames[i], got, kReferenceBandConstants[i]});
    }
  }
  return result;
}

LogLogExport loglog_export(const PrincipalSeries& series, std::int64_t lo, std::int64_t hi) {
  require_window(series, lo, hi);
  LogLogExport out;
  for (std::int64_t n = lo; n <= hi; ++n) {
    const std::int64_t abs = series.at(n).abs;
    if (abs == 0) {
      ++out.skipped;
      continue;
    }
    out.rows.emplace_back(std::log(static_cast<double>(n)), std::log(static_cast<double>(abs)));
  }
  return out;
}

namespace {

__extension__ using u128 = unsigned __int128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1;
  base %= m;
  while (exp != 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  static constexpr std::uint64_t kWitnesses[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (std::uint64_t p : kWitnesses) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : kWitnesses) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s && composite; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) composite = false;
    }
    if (composite) return false;
  }
  return true;
}

}  // namespace pmob
