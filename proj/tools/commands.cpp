#include "commands.hpp"

#include <charconv>
#include <cstdio>
#include <ostream>

#include "json.hpp"
#include "pmob/analysis.hpp"
#include "pmob/error.hpp"
#include "pmob/mobius_engine.hpp"
#include "pmob/oscillation_fast.hpp"
#include "pmob/poset_oracle.hpp"
#include "pmob/shape.hpp"

namespace pmob::cli {

using nlohmann::ordered_json;

std::string format_permutation(const Permutation& p) {
  if (p.size() <= 9) {
    std::string s;
    for (std::size_t i = 0; i < p.size(); ++i) s += static_cast<char>('0' + p[i]);
    return s;
  }
  return p.to_string(" ");
}

std::pair<std::int64_t, std::int64_t> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  std::int64_t lo = 0, hi = 0;
  auto parse = [&](std::string_view part, std::int64_t& value) {
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
    return ec == std::errc{} && ptr == part.data() + part.size() && !part.empty();
  };
  if (dots == std::string::npos || !parse(std::string_view(text).substr(0, dots), lo) ||
      !parse(std::string_view(text).substr(dots + 2), hi)) {
    throw Error(ErrorKind::ParseError, "expected a range lo..hi, got '" + text + "'");
  }
  return {lo, hi};
}

namespace {

std::string fixed(double value, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, value);
  return buf;
}

EngineOptions engine_options(const CommandConfig& config) {
  EngineOptions options = options_from_environment();
  options.downset_cap = config.downset_cap;
  return options;
}

struct TraceLine {
  Permutation alpha;
  std::int64_t r;
  int weight;
  std::int64_t mu;
  std::string empty_shape;  // set for a shape with no α in its range
};

bool theorem_applies(const Permutation& sigma, const Permutation& pi) {
  return sigma != pi && !sigma.empty() && is_sum_indecomposable(sigma) && pi.size() > 3 && !pi.is_identity() &&
         !pi.is_reverse_identity() && contains(sigma, pi);
}

void print_ranges(const std::vector<OscKRange>& ranges, std::ostream& out) {
  out << "shape        min_k  max_k\n";
  for (const auto& range : ranges) {
    std::string name(to_string(range.kind));
    name.resize(13, ' ');
    std::string lo = std::to_string(range.min_k);
    lo.resize(7, ' ');
    out << name << lo << range.max_k << "\n";
  }
}

}  // namespace

int cmd_mobius(const CommandConfig& config, std::ostream& out) {
  const Permutation sigma = parse_permutation(config.sigma_text);
  const Permutation pi = parse_permutation(config.pi_text);

  std::int64_t value = 0;
  std::vector<OscKRange> ranges;
  std::vector<TraceLine> lines;

  if (config.engine == "naive") {
    value = mobius_naive(sigma, pi, config.downset_cap);
  } else if (config.engine == "oscillation") {
    const auto id = identify_oscillation(pi);
    if (!id) throw Error(ErrorKind::NotAnOscillation, format_permutation(pi) + " is not an increasing oscillation");
    if (contains(sigma, pi)) {
      OscillationEngine engine;
      OscTrace trace;
      value = engine.mobius(sigma, *id, config.trace ? &trace : nullptr);
      ranges = trace.ranges;
      for (const auto& range : trace.ranges) {
        bool any = false;
        for (const auto& row : trace.rows) {
          if (row.shape.kind != range.kind) continue;
          lines.push_back({row.alpha, row.r, row.weight, row.mu, {}});
          any = true;
        }
        if (!any) lines.push_back({{}, 0, 0, 0, std::string(to_string(range.kind))});
      }
    }
  } else {
    EngineOptions options = engine_options(config);
    options.oscillation_fast_path = config.engine == "auto";
    MobiusEngine engine(options);
    if (config.engine == "general" && config.trace && theorem_applies(sigma, pi)) {
      std::vector<TheoremTraceRow> rows;
      value = engine.mobius_theorem(sigma, pi, &rows);
      for (const auto& row : rows) lines.push_back({row.alpha, row.r, row.weight, row.mu, {}});
    } else {
      value = engine.mobius(sigma, pi);
    }
  }

  if (config.format == "json") {
    ordered_json doc;
    doc["sigma"] = format_permutation(sigma);
    doc["pi"] = format_permutation(pi);
    doc["engine"] = config.engine;
    doc["mu"] = value;
    if (config.trace) {
      ordered_json ranges_json = ordered_json::array();
      for (const auto& r : ranges) {
        ranges_json.push_back({{"shape", to_string(r.kind)}, {"min_k", r.min_k}, {"max_k", r.max_k}});
      }
      ordered_json rows = ordered_json::array();
      for (const auto& l : lines) {
        if (!l.empty_shape.empty()) continue;
        rows.push_back({{"alpha", format_permutation(l.alpha)}, {"r", l.r}, {"weight", l.weight}, {"mu", l.mu}});
      }
      doc["ranges"] = ranges_json;
      doc["terms"] = rows;
    }
    out << doc.dump(2) << "\n";
    return 0;
  }

  if (config.trace) {
    if (!ranges.empty()) {
      print_ranges(ranges, out);
      out << "\n";
    }
    for (const auto& l : lines) {
      if (!l.empty_shape.empty()) {
        out << "shape=" << l.empty_shape << " no possibilities\n";
        continue;
      }
      out << "alpha=" << format_permutation(l.alpha) << " r=" << l.r << " weight=" << l.weight << " mu=" << l.mu
          << "\n";
    }
    if (!ranges.empty() || !lines.empty()) out << "\n";
  }
  out << value << "\n";
  return 0;
}

int cmd_interval(const CommandConfig& config, std::ostream& out) {
  const Permutation sigma = parse_permutation(config.sigma_text);
  const Permutation pi = parse_permutation(config.pi_text);
  const IntervalTable table = interval_with_mobius(sigma, pi, config.downset_cap);

  if (config.format == "json") {
    ordered_json rows = ordered_json::array();
    for (const auto& layer : table.members) {
      for (const auto& tau : layer) {
        rows.push_back({{"length", tau.size()}, {"permutation", format_permutation(tau)}, {"mu", table.mu.at(tau)}});
      }
    }
    out << ordered_json{{"sigma", format_permutation(sigma)}, {"pi", format_permutation(pi)}, {"rows", rows}}.dump(2)
        << "\n";
    return 0;
  }
  out << "length,permutation,mu\n";
  for (const auto& layer : table.members) {
    for (const auto& tau : layer) out << tau.size() << "," << format_permutation(tau) << "," << table.mu.at(tau) << "\n";
  }
  return 0;
}

int cmd_downset(const CommandConfig& config, std::ostream& out) {
  const Permutation pi = parse_permutation(config.pi_text);
  const Layers layers = downset(pi, config.downset_cap);

  if (config.format == "json") {
    ordered_json json_layers = ordered_json::array();
    for (const auto& layer : layers) {
      ordered_json members = ordered_json::array();
      for (const auto& tau : layer) members.push_back(format_permutation(tau));
      json_layers.push_back(members);
    }
    out << ordered_json{{"pi", format_permutation(pi)}, {"layers", json_layers}}.dump(2) << "\n";
    return 0;
  }
  out << "length,permutation\n";
  for (const auto& layer : layers) {
    for (const auto& tau : layer) out << tau.size() << "," << format_permutation(tau) << "\n";
  }
  return 0;
}

int cmd_series(const CommandConfig& config, std::ostream& out, std::ostream& err) {
  PrincipalSeries series;
  series.extend_to(config.n_max);

  if (config.loglog) {
    const LogLogExport data = loglog_export(series, 4, config.n_max);
    if (data.skipped > 0) err << "pmob: skipped " << data.skipped << " lengths with mu = 0\n";
    if (config.format == "json") {
      ordered_json rows = ordered_json::array();
      for (const auto& [x, y] : data.rows) rows.push_back({x, y});
      out << ordered_json{{"rows", rows}, {"skipped", data.skipped}}.dump(2) << "\n";
      return 0;
    }
    out << "log_n,log_abs\n";
    for (const auto& [x, y] : data.rows) out << fixed(x, 12) << "," << fixed(y, 12) << "\n";
    return 0;
  }

  const auto& records = series.records();
  if (config.format == "json") {
    ordered_json rows = ordered_json::array();
    for (std::size_t i = 3; i < records.size(); ++i) {
      const auto& rec = records[i];
      rows.push_back({{"n", rec.n},
                      {"mu_w", rec.mu_w},
                      {"mu_m", rec.mu_m},
                      {"abs", rec.abs},
                      {"ratio", rec.ratio},
                      {"class_mod_12", rec.n % 12}});
    }
    out << ordered_json{{"records", rows}}.dump(2) << "\n";
    return 0;
  }
  out << "n,kind,mu,abs,ratio,class_mod_12\n";
  for (std::size_t i = 3; i < records.size(); ++i) {
    const auto& rec = records[i];
    const std::string tail = "," + std::to_string(rec.abs) + "," + fixed(rec.ratio, 9) + "," + std::to_string(rec.n % 12) + "\n";
    out << rec.n << ",W," << rec.mu_w << tail;
    out << rec.n << ",M," << rec.mu_m << tail;
  }
  return 0;
}

}  // namespace pmob::cli
