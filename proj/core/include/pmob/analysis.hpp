#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "pmob/oscillation_fast.hpp"

namespace pmob {

/// One length of the principal series μ(1, W_n) = μ(1, M_n).
struct SeriesRecord {
  std::int64_t n = 0;
  std::int64_t mu_w = 0;
  std::int64_t mu_m = 0;
  std::int64_t abs = 0;
  /// abs / m² for n = 2m, abs / (m² + m) for n = 2m + 1.
  double ratio = 0.0;
};

double normalized_ratio(std::int64_t n, std::int64_t abs);

/// Growable principal series backed by the oscillation engine.
class PrincipalSeries {
 public:
  void extend_to(std::int64_t n_max);

  std::int64_t n_max() const noexcept { return static_cast<std::int64_t>(records_.size()); }
  /// Record for length n, 1 <= n <= n_max().
  const SeriesRecord& at(std::int64_t n) const;
  /// |μ(1, W_n)|.
  std::int64_t magnitude(std::int64_t n) const { return at(n).abs; }
  const std::vector<SeriesRecord>& records() const noexcept { return records_; }

 private:
  OscillationEngine engine_;
  std::vector<SeriesRecord> records_;  // records_[n - 1]
};

/// Records for n = 4..n_max.
std::vector<SeriesRecord> principal_series(std::int64_t n_max);

struct Violation {
  std::int64_t n = 0;
  std::string rule;
  std::string expected;
  std::int64_t actual = 0;
};

/// μ(1, W_n) < 0 for even n and > 0 for odd n, n in [lo, hi].
std::vector<Violation> sign_check(const PrincipalSeries& series, std::int64_t lo, std::int64_t hi);
/// |μ(1, W_n)| <= 2^n and μ(1, W_n) = μ(1, M_n), n in [lo, hi].
std::vector<Violation> bound_check(const PrincipalSeries& series, std::int64_t lo, std::int64_t hi);

enum class JelinekRules {
  AsStated,          // odd lengths n² - n and n² - n - 1
  OddPlusVariant,    // odd lengths n² + n and n² + n - 1
};

/// The four primality biconditionals over half-lengths n in [n_lo, n_hi];
/// every failure in either direction is reported. Needs the series up to
/// length 2 n_hi + 1 and n_lo > 50.
std::vector<Violation> jelinek_check(std::int64_t n_lo, std::int64_t n_hi, const PrincipalSeries& series,
                                     JelinekRules rules = JelinekRules::AsStated);

struct BandReport {
  int residue = 0;    // length mod 12
  bool even = true;   // E ratio for even lengths, O ratio for odd
  int band = 0;       // 0: [a,b], 1: [c,d], 2: [e,f], 3: [g,1]
  double min = 0.0;
  double max = 0.0;
  std::int64_t count = 0;
};

struct BandConstants {
  std::array<double, 7> values{};  // a..g
  std::array<double, 4> upper{};   // observed top of each band
};

inline constexpr std::array<double, 7> kReferenceBandConstants = {0.615, 0.680, 0.692, 0.760,
                                                                  0.821, 0.896, 0.923};

struct ConstantDeviation {
  std::string name;
  double estimate = 0.0;
  double reference = 0.0;
};

struct BandingResult {
  std::int64_t lo = 0;
  std::int64_t hi = 0;
  std::vector<BandReport> classes;  // twelve rows, grouped by band
  BandConstants combined;
  BandConstants even_only;
  BandConstants odd_only;
  bool ordered = false;  // a < b < c < d < e < f < g and the top band <= 1
  bool paired = false;   // even-only and odd-only estimates are each ordered and overlap band by band
  std::vector<ConstantDeviation> deviations;  // constants further than the tolerance from the reference
  std::vector<Violation> excess;      // ratios above 1
};

/// Band of a length under the mod-12 classification.
int band_of_length(std::int64_t n);

BandingResult banding_report(std::int64_t lo, std::int64_t hi, const PrincipalSeries& series,
                             double tolerance = 0.05);

struct LogLogExport {
  std::vector<std::pair<double, double>> rows;  // (ln n, ln |μ(1, W_n)|)
  std::int64_t skipped = 0;
};

LogLogExport loglog_export(const PrincipalSeries& series, std::int64_t lo, std::int64_t hi);

/// Deterministic for every 64-bit input.
bool is_prime(std::uint64_t n) noexcept;

}  // namespace pmob
