#pragma once

// Command-line grammar:
//   veritool verify <check-id> [--family ID] [--min N] [--max N | --max-p N]
//                   [--params k=v,...] [--jobs N] [--format json|text] [--out PATH]
//   veritool list

#include <veritool/sweep.hpp>

#include "CLI11.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace veritool {

/// --help was requested; carries the rendered help text.
class HelpRequested : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Command { verify, list };

struct Invocation {
  Command command = Command::verify;
  SweepSpec spec;
};

namespace detail {

inline Params parse_params(const std::string& text) {
  Params out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    const std::string item = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    const std::size_t eq = item.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == item.size()) {
      throw UsageError("--params expects k=v[,k=v...], got '" + item + "'");
    }
    out.emplace_back(item.substr(0, eq), item.substr(eq + 1));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace detail

/// Parses argv (without the program name). Throws UsageError or HelpRequested.
inline Invocation parse_invocation(const std::vector<std::string>& args) {
  CLI::App app{"Exact verification sweeps for central binomial sums and supercongruences", "veritool"};
  app.require_subcommand(1, 1);

  app.add_subcommand("list", "List registered check ids");

  auto* verify = app.add_subcommand("verify", "Run one check over a range");
  std::string check_id;
  std::string family;
  std::optional<std::int64_t> min;
  std::optional<std::int64_t> max;
  std::optional<std::int64_t> max_p;
  std::string params;
  unsigned jobs = 1;
  std::string format = "json";
  std::string out;
  verify->add_option("check-id", check_id, "Check identifier (see `veritool list`)")->required();
  verify->add_option("--family", family, "Sum family: 3k1b16, 6k1b256 or 42k5b4096");
  verify->add_option("--min", min, "Range minimum (n, m, k or p depending on the check)");
  auto* max_opt = verify->add_option("--max", max, "Range maximum");
  verify->add_option("--max-p", max_p, "Largest prime, for prime-ranged checks")->excludes(max_opt);
  verify->add_option("--params", params, "Extra parameters k=v,...");
  verify->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  verify->add_option("--format", format, "Report format")->check(CLI::IsMember({"json", "text"}));
  verify->add_option("--out", out, "Report path (default stdout)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    throw HelpRequested(app.help());
  } catch (const CLI::CallForAllHelp&) {
    throw HelpRequested(app.help("", CLI::AppFormatMode::All));
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  Invocation inv;
  if (app.got_subcommand("list")) {
    inv.command = Command::list;
    return inv;
  }

  SweepSpec spec;
  spec.check_id = check_id;
  spec.family = family;
  spec.min = min;
  spec.max = max;
  if (max_p) {
    const CheckInfo* info = find_check(check_id);
    if (info != nullptr && !info->prime_range) {
      throw UsageError("--max-p applies only to prime-ranged checks; use --max for '" + check_id + "'");
    }
    spec.max = max_p;
  }
  if (!params.empty()) spec.params = detail::parse_params(params);
  spec.jobs = jobs;
  spec.format = format == "text" ? OutputFormat::text : OutputFormat::json;
  spec.out_path = out;
  inv.spec = resolve_spec(std::move(spec));
  return inv;
}

/// The `verify` form only: validated SweepSpec or UsageError.
inline SweepSpec parse_spec(const std::vector<std::string>& args) {
  Invocation inv = parse_invocation(args);
  if (inv.command != Command::verify) throw UsageError("expected the verify command");
  return inv.spec;
}

}  // namespace veritool
