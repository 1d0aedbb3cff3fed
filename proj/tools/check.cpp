#include <algorithm>
#include <ostream>

#include "cli.hpp"
#include "commands.hpp"
#include "json.hpp"
#include "pmob/analysis.hpp"
#include "pmob/error.hpp"
#include "pmob/mobius_engine.hpp"
#include "pmob/poset_oracle.hpp"

namespace pmob::cli {

namespace {

using nlohmann::ordered_json;

constexpr std::int64_t kDefaultSignLength = 5000;
constexpr std::pair<std::int64_t, std::int64_t> kDefaultJelinekRange{51, 1000};
constexpr std::pair<std::int64_t, std::int64_t> kDefaultBandingRange{1000, 20000};

ordered_json violations_json(const std::vector<Violation>& violations) {
  ordered_json out = ordered_json::array();
  for (const auto& v : violations) {
    out.push_back({{"n", v.n}, {"rule", v.rule}, {"expected", v.expected}, {"actual", v.actual}});
  }
  return out;
}

ordered_json constants_json(const BandConstants& c) {
  static constexpr const char* kNames[] = {"a", "b", "c", "d", "e", "f", "g"};
  ordered_json out = ordered_json::object();
  for (std::size_t i = 0; i < c.values.size(); ++i) out[kNames[i]] = c.values[i];
  return out;
}

std::vector<Violation> crosscheck(std::size_t max_len, const EngineOptions& options, std::int64_t& pairs) {
  const MobiusOracleTable oracle(max_len);
  MobiusEngine engine(options);
  std::vector<Violation> out;
  const auto& perms = oracle.permutations();
  for (std::size_t p = 0; p < perms.size(); ++p) {
    const auto down = oracle.downset_of(p);
    const auto row = oracle.mobius_row(p);
    for (std::size_t i = 0; i < down.size(); ++i) {
      const Permutation& sigma = perms[down[i]];
      const std::int64_t got = engine.mobius(sigma, perms[p]);
      ++pairs;
      if (got != row[i]) {
        out.push_back({static_cast<std::int64_t>(perms[p].size()),
                       "mu(" + format_permutation(sigma) + "," + format_permutation(perms[p]) + ") auto = naive",
                       std::to_string(row[i]), got});
      }
    }
  }
  return out;
}

}  // namespace

int cmd_check(const CommandConfig& config, std::ostream& out) {
  ordered_json report;
  report["suite"] = config.suite;
  std::vector<Violation> violations;

  if (config.suite == "crosscheck") {
    if (config.range) throw Error(ErrorKind::PreconditionViolation, "crosscheck takes --max-len, not --range");
    EngineOptions options = options_from_environment();
    options.downset_cap = std::max(config.downset_cap, config.max_len);
    std::int64_t pairs = 0;
    violations = crosscheck(config.max_len, options, pairs);
    report["range"] = {1, config.max_len};
    report["pairs"] = pairs;
  } else if (config.suite == "sign" || config.suite == "bound") {
    const std::int64_t hi = config.n_max > 0 ? config.n_max : kDefaultSignLength;
    const auto [lo, top] = config.range ? parse_range(*config.range) : std::pair<std::int64_t, std::int64_t>{4, hi};
    PrincipalSeries series;
    series.extend_to(std::max<std::int64_t>(top, 1));
    violations = config.suite == "sign" ? sign_check(series, lo, top) : bound_check(series, lo, top);
    report["range"] = {lo, top};
  } else if (config.suite == "jelinek") {
    const auto [lo, hi] = config.range ? parse_range(*config.range) : kDefaultJelinekRange;
    if (lo <= 50 || hi < lo) throw Error(ErrorKind::RangeError, "jelinek needs 50 < lo <= hi");
    PrincipalSeries series;
    series.extend_to(2 * hi + 1);
    const auto rules = config.jelinek_rules == "plus" ? JelinekRules::OddPlusVariant : JelinekRules::AsStated;
    violations = jelinek_check(lo, hi, series, rules);
    report["range"] = {lo, hi};
    report["rules"] = config.jelinek_rules;
  } else {
    auto [lo, hi] = config.range ? parse_range(*config.range) : kDefaultBandingRange;
    if (!config.range && config.n_max > 0) hi = config.n_max;
    if (lo < 4 || hi <= lo) throw Error(ErrorKind::RangeError, "banding needs 4 <= lo < hi");
    PrincipalSeries series;
    series.extend_to(hi);
    const BandingResult result = banding_report(lo, hi, series, config.tolerance);
    violations = result.excess;
    if (!result.ordered) violations.push_back({lo, "bands ordered a<b<c<d<e<f<g<=1", "ordered", 0});
    if (!result.paired) violations.push_back({lo, "even and odd classes share bands", "paired", 0});
    report["range"] = {lo, hi};
    ordered_json classes = ordered_json::array();
    for (const auto& c : result.classes) {
      classes.push_back({{"class_mod_12", c.residue},
                         {"parity", c.even ? "even" : "odd"},
                         {"band", c.band},
                         {"min", c.min},
                         {"max", c.max},
                         {"count", c.count}});
    }
    report["classes"] = classes;
    report["ordered"] = result.ordered;
    report["paired"] = result.paired;
    report["constants"] = constants_json(result.combined);
    report["constants_even"] = constants_json(result.even_only);
    report["constants_odd"] = constants_json(result.odd_only);
    ordered_json deviations = ordered_json::array();
    for (const auto& d : result.deviations) {
      deviations.push_back({{"constant", d.name}, {"estimate", d.estimate}, {"reference", d.reference}});
    }
    report["deviations"] = deviations;
    report["tolerance"] = config.tolerance;
  }

  report["violations"] = violations_json(violations);
  out << report.dump(2) << "\n";
  return violations.empty() ? kOk : kViolations;
}

}  // namespace pmob::cli
