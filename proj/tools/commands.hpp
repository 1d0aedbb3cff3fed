#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "pmob/permutation.hpp"

namespace pmob::cli {

struct CommandConfig {
  std::string sigma_text;
  std::string pi_text;
  std::string engine = "auto";
  std::string format;  // empty: text for mobius, csv elsewhere
  std::string suite;
  std::string jelinek_rules = "stated";
  std::optional<std::string> range;
  std::int64_t n_max = 0;  // 0: the subcommand's default
  std::size_t max_len = 7;
  std::size_t downset_cap = 12;
  double tolerance = 0.05;
  bool trace = false;
  bool loglog = false;
};

/// Compact form for output: digits up to length 9, space separated beyond.
std::string format_permutation(const Permutation& p);

/// "lo..hi" with both bounds inclusive.
std::pair<std::int64_t, std::int64_t> parse_range(const std::string& text);

int cmd_mobius(const CommandConfig& config, std::ostream& out);
int cmd_interval(const CommandConfig& config, std::ostream& out);
int cmd_downset(const CommandConfig& config, std::ostream& out);
int cmd_series(const CommandConfig& config, std::ostream& out, std::ostream& err);
int cmd_check(const CommandConfig& config, std::ostream& out);

}  // namespace pmob::cli
