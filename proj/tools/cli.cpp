#include "cli.hpp"

#include <fstream>
#include <ostream>

#include "CLI11.hpp"
#include "commands.hpp"
#include "pmob/error.hpp"

namespace pmob::cli {

namespace {

void add_format(CLI::App* cmd, CommandConfig& config, std::initializer_list<std::string> allowed) {
  cmd->add_option("--format", config.format, "Output format")->check(CLI::IsMember(std::vector<std::string>(allowed)));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CommandConfig config;
  std::string out_path;

  CLI::App app{"Möbius function of the permutation pattern poset", "pmob"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--out", out_path, "Write results to this file instead of stdout");
  app.add_option("--downset-cap", config.downset_cap, "Largest permutation length whose downset may be enumerated")
      ->check(CLI::Range(1, 64));

  auto* mobius = app.add_subcommand("mobius", "Print mu(sigma, pi)");
  mobius->add_option("sigma", config.sigma_text, "Lower bound")->required();
  mobius->add_option("pi", config.pi_text, "Upper bound")->required();
  mobius->add_option("--engine", config.engine, "naive, general, oscillation or auto")
      ->check(CLI::IsMember({"naive", "general", "oscillation", "auto"}));
  mobius->add_flag("--trace", config.trace, "Print the contributing terms before the value");
  add_format(mobius, config, {"text", "json"});

  auto* interval = app.add_subcommand("interval", "Dump [sigma, pi] with mu(sigma, .) as CSV");
  interval->add_option("sigma", config.sigma_text)->required();
  interval->add_option("pi", config.pi_text)->required();
  add_format(interval, config, {"csv", "json"});

  auto* down = app.add_subcommand("downset", "List every pattern of pi as CSV");
  down->add_option("pi", config.pi_text)->required();
  add_format(down, config, {"csv", "json"});

  auto* series = app.add_subcommand("series", "Principal series mu(1, W_n), mu(1, M_n)");
  series->add_option("--n-max", config.n_max, "Largest length")->required()->check(CLI::Range(std::int64_t{4}, std::int64_t{1} << 40));
  series->add_flag("--loglog", config.loglog, "Emit (ln n, ln |mu|) rows instead");
  add_format(series, config, {"csv", "json"});

  auto* check = app.add_subcommand("check", "Run a verification suite and print a JSON report");
  check->add_option("--suite", config.suite)
      ->required()
      ->check(CLI::IsMember({"sign", "bound", "jelinek", "banding", "crosscheck"}));
  check->add_option("--range", config.range, "lo..hi (half-lengths for jelinek, lengths otherwise)");
  check->add_option("--n-max", config.n_max, "Upper length for sign and bound")->check(CLI::Range(std::int64_t{4}, std::int64_t{1} << 40));
  check->add_option("--max-len", config.max_len, "Largest pi for crosscheck")->check(CLI::Range(1, 10));
  check->add_option("--jelinek-rules", config.jelinek_rules, "stated or plus (odd rows n^2+n, n^2+n-1)")
      ->check(CLI::IsMember({"stated", "plus"}));
  check->add_option("--tolerance", config.tolerance, "Allowed distance of band constants from the reference");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }
  if (config.format.empty()) config.format = *mobius ? "text" : "csv";

  std::ofstream file;
  std::ostream* sink = &out;
  if (!out_path.empty()) {
    file.open(out_path);
    if (!file) {
      err << "pmob: cannot open " << out_path << " for writing\n";
      return kToolError;
    }
    sink = &file;
  }

  try {
    int code = kOk;
    if (*mobius) code = cmd_mobius(config, *sink);
    if (*interval) code = cmd_interval(config, *sink);
    if (*down) code = cmd_downset(config, *sink);
    if (*series) code = cmd_series(config, *sink, err);
    if (*check) code = cmd_check(config, *sink);
    sink->flush();
    if (!*sink) {
      err << "pmob: write failed\n";
      return kToolError;
    }
    return code;
  } catch (const Error& e) {
    err << "pmob: " << e.what() << "\n";
    return e.kind() == ErrorKind::ParseError || e.kind() == ErrorKind::NotAPermutation ||
                   e.kind() == ErrorKind::PermutationTooLong
               ? kUsage
               : kToolError;
  } catch (const std::exception& e) {
    err << "pmob: " << e.what() << "\n";
    return kToolError;
  }
}

}  // namespace pmob::cli
