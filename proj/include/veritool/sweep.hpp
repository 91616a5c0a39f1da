#pragma once

// Sweep execution and report serialization for the veritool front end.

#include <veritool/exact.hpp>
#include <veritool/sequences.hpp>
#include <veritool/verifiers.hpp>

#include "json.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

namespace veritool {

inline constexpr std::string_view kToolVersion = "1.0.0";

/// Bad command line or sweep description; maps to exit code 2.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class OutputFormat { json, text };

struct SweepSpec {
  std::string check_id;
  std::string family;  // empty for checks without a family
  std::optional<std::int64_t> min;
  std::optional<std::int64_t> max;
  Params params;
  unsigned jobs = 1;
  OutputFormat format = OutputFormat::json;
  std::string out_path;  // empty writes to stdout
};

/// Static description of one registered check id.
struct CheckInfo {
  std::string_view id;
  bool prime_range;  // range bounds select primes rather than every integer
  bool takes_family;
  std::int64_t default_min;
  std::int64_t default_max;
  std::vector<std::string_view> param_keys;
  std::string_view summary;
};

inline const std::vector<CheckInfo>& registered_checks() {
  static const std::vector<CheckInfo> checks{
      {"thm1-div", false, true, 2, 2000, {}, "2n*C(2n,n) divides the weighted sum S(n)"},
      {"thm2-cong", true, true, 5, 1000, {}, "weighted sum supercongruence mod p^4"},
      {"transformed-sum", false, false, 2, 200, {}, "8 divides T(n)"},
      {"a-coeff", false, false, 2, 200, {}, "a(n,k) is an even integer"},
      {"lemma2.2", false, false, 6, 5000, {}, "n - ord2((n-1)!) >= 3"},
      {"lemma2.3", false, false, 6, 1025, {}, "C(n-1,k) even for n = 2^m+1"},
      {"lemma2.4", false, false, 6, 1025, {}, "8 | C(4n-2,2n-1) + 2C(2n-2,n-1) for n = 2^m+1"},
      {"lemma2.5", false, false, 0, 60, {"x"}, "binomial-sum identity in x"},
      {"staver", false, false, 1, 300, {}, "Staver's identity"},
      {"wz-relation", false, false, 0, 60, {}, "WZ pair relation at (k, j)"},
      {"wz-telescope", false, false, 1, 40, {}, "telescoped WZ identity at N"},
      {"floor-ineq", false, false, 2, 64, {"bound"}, "floor superadditivity for a, b <= bound"},
      {"morley", true, false, 5, 10000, {}, "Morley's congruence mod p^3"},
      {"wolstenholme", true, false, 5, 500, {}, "p^2 | numerator of H_{p-1}"},
      {"lemma3.3", true, false, 5, 500, {}, "central binomial at p-1+2k mod p^2"},
      {"lemma3.4", true, false, 5, 500, {}, "C(p-1+2k,2k)/p mod p^2"},
      {"lemma3.5", true, false, 5, 500, {}, "reciprocal central binomial sum mod p"},
      {"intro-cong", true, false, 5, 500, {}, "four auxiliary congruences"},
      {"kummer-cross", false, false, 0, 512, {"p"}, "Kummer carries vs Legendre valuations"},
  };
  return checks;
}

inline const CheckInfo* find_check(std::string_view id) {
  for (const auto& c : registered_checks()) {
    if (c.id == id) return &c;
  }
  return nullptr;
}

namespace detail {

inline std::optional<std::string> param_value(const Params& params, std::string_view key) {
  for (const auto& [k, v] : params) {
    if (k == key) return v;
  }
  return std::nullopt;
}

inline std::int64_t parse_int_param(std::string_view key, const std::string& v) {
  try {
    const ExactInt x = ExactInt::parse(v);
    if (!x.fits_int64()) throw std::invalid_argument("too large");
    return x.to_int64();
  } catch (const std::exception&) {
    throw UsageError("parameter " + std::string(key) + " must be an integer, got '" + v + "'");
  }
}

}  // namespace detail

/// Validates a spec and fills defaults. Throws UsageError.
inline SweepSpec resolve_spec(SweepSpec spec) {
  const CheckInfo* info = find_check(spec.check_id);
  if (info == nullptr) throw UsageError("unknown check id '" + spec.check_id + "'");
  if (info->takes_family) {
    if (spec.family.empty()) spec.family = std::string(kFamily16.id);
    if (find_family(spec.family) == nullptr) throw UsageError("unknown family '" + spec.family + "'");
  } else if (!spec.family.empty()) {
    throw UsageError("check '" + spec.check_id + "' does not take --family");
  }
  if (!spec.min) spec.min = info->default_min;
  if (!spec.max) spec.max = info->default_max;
  if (*spec.min < 0) throw UsageError("range minimum must be >= 0");
  if (*spec.min > *spec.max) throw UsageError("range minimum exceeds maximum");
  if (spec.jobs == 0) throw UsageError("--jobs must be >= 1");

  for (const auto& [key, value] : spec.params) {
    if (std::find(info->param_keys.begin(), info->param_keys.end(), key) == info->param_keys.end()) {
      throw UsageError("check '" + spec.check_id + "' has no parameter '" + key + "'");
    }
    if (key == "x") {
      try {
        (void)ExactRational::parse(value);
      } catch (const std::exception&) {
        throw UsageError("parameter x must be a rational num[/den], got '" + value + "'");
      }
    } else if (key == "bound") {
      if (detail::parse_int_param(key, value) < 0) throw UsageError("bound must be >= 0");
    } else if (key == "p") {
      const std::int64_t p = detail::parse_int_param(key, value);
      if (p < 2 || !is_prime(static_cast<std::uint64_t>(p))) throw UsageError("p must be prime");
    }
  }
  return spec;
}

using Instance = std::function<std::vector<CheckResult>()>;

/// Expands a resolved spec into independent instances. Prime-ranged checks
/// iterate the primes p >= 5 in [min, max].
inline std::vector<Instance> expand_instances(const SweepSpec& spec) {
  const CheckInfo* info = find_check(spec.check_id);
  if (info == nullptr || !spec.min || !spec.max) throw UsageError("spec is not resolved");
  const std::string& id = spec.check_id;
  const std::int64_t lo = *spec.min;
  const std::int64_t hi = *spec.max;

  std::vector<std::int64_t> points;
  if (info->prime_range) {
    // every prime-indexed statement needs p > 3
    const std::int64_t first = std::max<std::int64_t>(lo, 5);
    if (first <= hi) {
      for (const auto p : primes_in(first, hi)) points.push_back(static_cast<std::int64_t>(p));
    }
  } else {
    for (std::int64_t v = lo; v <= hi; ++v) points.push_back(v);
  }

  const auto single = [](auto fn) -> Instance { return [fn] { return std::vector<CheckResult>{fn()}; }; };
  std::vector<Instance> out;
  const SumFamily* fam = info->takes_family ? find_family(spec.family) : nullptr;

  for (const std::int64_t v : points) {
    if (id == "thm1-div") {
      out.push_back(single([fam, v] { return check_divisibility(*fam, v); }));
    } else if (id == "thm2-cong") {
      out.push_back(single([fam, v] { return check_supercongruence(*fam, v); }));
    } else if (id == "transformed-sum") {
      out.push_back(single([v] { return check_transformed_sum(v); }));
    } else if (id == "a-coeff") {
      out.push_back([v] {
        std::vector<CheckResult> rs;
        if (v < 2) {
          rs.push_back(check_a_coeff(v, 0));
          return rs;
        }
        for (std::int64_t k = 0; k < v; ++k) rs.push_back(check_a_coeff(v, k));
        return rs;
      });
    } else if (id == "lemma2.2") {
      if (v >= 6 && !detail::is_two_power_plus_one(v)) out.push_back(single([v] { return check_lemma22(v); }));
    } else if (id == "lemma2.3") {
      if (v >= 6 && detail::is_two_power_plus_one(v)) out.push_back(single([v] { return check_lemma23(v); }));
    } else if (id == "lemma2.4") {
      if (v >= 6 && detail::is_two_power_plus_one(v)) out.push_back(single([v] { return check_lemma24(v); }));
    } else if (id == "lemma2.5") {
      std::vector<ExactRational> xs;
      if (auto x = detail::param_value(spec.params, "x")) {
        xs.push_back(ExactRational::parse(*x));
      } else {
        for (std::int64_t i = -5; i <= 10; ++i) xs.emplace_back(i);
        xs.push_back(ExactRational::parse("-1/2"));
        xs.push_back(ExactRational::parse("1/2"));
        xs.push_back(ExactRational::parse("7/3"));
      }
      for (const auto& x : xs) out.push_back(single([v, x] { return check_lemma25(v, x); }));
    } else if (id == "staver") {
      out.push_back(single([v] { return check_staver(v); }));
    } else if (id == "wz-relation") {
      for (std::int64_t j = std::max<std::int64_t>(1, lo); j <= hi; ++j) {
        out.push_back(single([v, j] { return check_wz_relation(v, j); }));
      }
    } else if (id == "wz-telescope") {
      out.push_back(single([v] { return check_wz_telescope(v); }));
    } else if (id == "floor-ineq") {
      const std::int64_t bound =
          detail::parse_int_param("bound", detail::param_value(spec.params, "bound").value_or("200"));
      out.push_back(single([v, bound] { return check_floor_ineq(v, bound); }));
    } else if (id == "morley") {
      out.push_back(single([v] { return check_morley(v); }));
    } else if (id == "wolstenholme") {
      out.push_back(single([v] { return check_wolstenholme(v); }));
    } else if (id == "lemma3.3" || id == "lemma3.4") {
      const bool is33 = id == "lemma3.3";
      out.push_back([v, is33] {
        std::vector<CheckResult> rs;
        const std::int64_t top = std::max<std::int64_t>(1, (v - 1) / 2);
        for (std::int64_t k = 1; k <= top; ++k) rs.push_back(is33 ? check_lemma33(v, k) : check_lemma34(v, k));
        return rs;
      });
    } else if (id == "lemma3.5") {
      out.push_back(single([v] { return check_lemma35(v); }));
    } else if (id == "intro-cong") {
      out.push_back([v] { return check_intro_congruences(v); });
    } else if (id == "kummer-cross") {
      std::vector<std::int64_t> ps{2, 3, 5, 7};
      if (auto p = detail::param_value(spec.params, "p")) ps = {detail::parse_int_param("p", *p)};
      for (const auto p : ps) out.push_back(single([v, p] { return check_kummer_cross(v, p); }));
    }
  }
  return out;
}

namespace detail {

// Integers compare numerically, anything else lexicographically.
inline int compare_values(const std::string& a, const std::string& b) {
  const auto is_int = [](const std::string& s) {
    if (s.empty()) return false;
    const std::size_t start = s[0] == '-' ? 1 : 0;
    if (start == s.size()) return false;
    return std::all_of(s.begin() + static_cast<std::ptrdiff_t>(start), s.end(),
                       [](char c) { return c >= '0' && c <= '9'; });
  };
  if (is_int(a) && is_int(b)) {
    const ExactInt x = ExactInt::parse(a);
    const ExactInt y = ExactInt::parse(b);
    return x < y ? -1 : (y < x ? 1 : 0);
  }
  return a.compare(b) < 0 ? -1 : (a == b ? 0 : 1);
}

inline bool result_less(const CheckResult& a, const CheckResult& b) {
  if (a.check_id != b.check_id) return a.check_id < b.check_id;
  const std::size_t n = std::min(a.params.size(), b.params.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (a.params[i].first != b.params[i].first) return a.params[i].first < b.params[i].first;
    const int c = compare_values(a.params[i].second, b.params[i].second);
    if (c != 0) return c < 0;
  }
  return a.params.size() < b.params.size();
}

}  // namespace detail

struct Counts {
  std::int64_t pass = 0;
  std::int64_t fail = 0;
  std::int64_t error = 0;

  friend bool operator==(const Counts&, const Counts&) = default;
};

struct SweepReport {
  std::string version{kToolVersion};
  SweepSpec spec;
  std::vector<CheckResult> results;
  Counts counts;
  std::int64_t wall_ms = 0;
};

inline Counts tally(const std::vector<CheckResult>& results) {
  Counts c;
  for (const auto& r : results) {
    switch (r.status) {
      case CheckStatus::pass: ++c.pass; break;
      case CheckStatus::fail: ++c.fail; break;
      case CheckStatus::error: ++c.error; break;
    }
  }
  return c;
}

struct SweepOptions {
  /// Applied to every result before aggregation. Test hook for fault injection.
  std::function<void(CheckResult&)> post_check;
};

/// Runs every instance of a resolved spec on `spec.jobs` workers. Workers share
/// only an atomic cursor and write to disjoint slots; results are merged and
/// sorted by (check_id, params), so the report does not depend on `jobs`.
inline SweepReport run_sweep(const SweepSpec& spec, const SweepOptions& options = {}) {
  const auto start = std::chrono::steady_clock::now();
  const std::vector<Instance> instances = expand_instances(spec);
  std::vector<std::vector<CheckResult>> slots(instances.size());

  std::atomic<std::size_t> cursor{0};
  const auto worker = [&] {
    for (std::size_t i = cursor.fetch_add(1); i < instances.size(); i = cursor.fetch_add(1)) {
      try {
        slots[i] = instances[i]();
        if (options.post_check) {
          for (auto& r : slots[i]) options.post_check(r);
        }
      } catch (const std::exception& e) {
        slots[i] = {CheckResult{spec.check_id, {{"instance", std::to_string(i)}}, CheckStatus::error, "", "",
                                std::string("exception: ") + e.what()}};
      }
    }
  };
  const unsigned jobs = std::max(1U, std::min<unsigned>(spec.jobs, static_cast<unsigned>(instances.size())));
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(jobs);
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
  }

  SweepReport report;
  report.spec = spec;
  for (auto& slot : slots) {
    for (auto& r : slot) report.results.push_back(std::move(r));
  }
  std::stable_sort(report.results.begin(), report.results.end(), detail::result_less);
  report.counts = tally(report.results);
  report.wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start)
                       .count();
  return report;
}

/// 1 when any claim that is not an open conjecture failed, else 0.
inline int exit_code(const SweepReport& report) {
  for (const auto& r : report.results) {
    if (r.status == CheckStatus::fail && !is_conjectural(r)) return 1;
  }
  return 0;
}

// ---------------------------------------------------------------------------
// JSON

using Json = nlohmann::ordered_json;

inline Json result_to_json(const CheckResult& r) {
  Json params = Json::object();
  for (const auto& [k, v] : r.params) params[k] = v;
  return Json{{"check_id", r.check_id}, {"params", params}, {"status", std::string(to_string(r.status))},
              {"lhs", r.lhs},           {"rhs", r.rhs},     {"note", r.note}};
}

/// Throws std::invalid_argument on schema violations.
inline CheckResult result_from_json(const Json& j) {
  const auto need_string = [&j](const char* key) -> std::string {
    if (!j.is_object() || !j.contains(key) || !j.at(key).is_string()) {
      throw std::invalid_argument(std::string("result: missing string field '") + key + "'");
    }
    return j.at(key).get<std::string>();
  };
  CheckResult r;
  r.check_id = need_string("check_id");
  const auto status = parse_status(need_string("status"));
  if (!status) throw std::invalid_argument("result: bad status");
  r.status = *status;
  r.lhs = need_string("lhs");
  r.rhs = need_string("rhs");
  r.note = need_string("note");
  if (!j.contains("params") || !j.at("params").is_object()) throw std::invalid_argument("result: params must be an object");
  for (const auto& [k, v] : j.at("params").items()) {
    if (!v.is_string()) throw std::invalid_argument("result: param values must be strings");
    r.params.emplace_back(k, v.get<std::string>());
  }
  return r;
}

inline Json spec_to_json(const SweepSpec& spec) {
  Json j{{"check_id", spec.check_id}};
  if (!spec.family.empty()) j["family"] = spec.family;
  j["min"] = spec.min.value_or(0);
  j["max"] = spec.max.value_or(0);
  Json params = Json::object();
  for (const auto& [k, v] : spec.params) params[k] = v;
  j["params"] = params;
  j["format"] = spec.format == OutputFormat::json ? "json" : "text";
  return j;
}

inline Json report_to_json(const SweepReport& report) {
  Json results = Json::array();
  for (const auto& r : report.results) results.push_back(result_to_json(r));
  return Json{{"version", report.version},
              {"spec", spec_to_json(report.spec)},
              {"results", std::move(results)},
              {"counts", {{"pass", report.counts.pass}, {"fail", report.counts.fail}, {"error", report.counts.error}}},
              {"wall_ms", report.wall_ms}};
}

/// Reads back the parts of a report needed to audit it: version, results, counts, timing.
inline SweepReport report_from_json(const Json& j) {
  if (!j.is_object()) throw std::invalid_argument("report: not an object");
  for (const char* key : {"version", "spec", "results", "counts", "wall_ms"}) {
    if (!j.contains(key)) throw std::invalid_argument(std::string("report: missing '") + key + "'");
  }
  SweepReport report;
  report.version = j.at("version").get<std::string>();
  const Json& s = j.at("spec");
  report.spec.check_id = s.at("check_id").get<std::string>();
  if (s.contains("family")) report.spec.family = s.at("family").get<std::string>();
  report.spec.min = s.at("min").get<std::int64_t>();
  report.spec.max = s.at("max").get<std::int64_t>();
  for (const auto& [k, v] : s.at("params").items()) report.spec.params.emplace_back(k, v.get<std::string>());
  report.spec.format = s.at("format").get<std::string>() == "text" ? OutputFormat::text : OutputFormat::json;
  for (const auto& r : j.at("results")) report.results.push_back(result_from_json(r));
  const Json& c = j.at("counts");
  report.counts = {c.at("pass").get<std::int64_t>(), c.at("fail").get<std::int64_t>(), c.at("error").get<std::int64_t>()};
  report.wall_ms = j.at("wall_ms").get<std::int64_t>();
  return report;
}

// ---------------------------------------------------------------------------
// Text

namespace detail {
inline std::string abbreviate(const std::string& s, std::size_t width = 32) {
  if (s.size() <= width) return s;
  return s.substr(0, 14) + "..." + s.substr(s.size() - 8) + " (" + std::to_string(s.size()) + " chars)";
}
}  // namespace detail

inline std::string report_to_text(const SweepReport& report) {
  std::vector<std::array<std::string, 6>> rows;
  rows.push_back({"check_id", "params", "status", "lhs", "rhs", "note"});
  for (const auto& r : report.results) {
    std::string params;
    for (const auto& [k, v] : r.params) params += (params.empty() ? "" : " ") + k + "=" + v;
    rows.push_back({r.check_id, params, std::string(to_string(r.status)), detail::abbreviate(r.lhs),
                    detail::abbreviate(r.rhs), r.note});
  }
  std::array<std::size_t, 6> width{};
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
  }
  std::ostringstream out;
  out << "veritool " << report.version << "  check=" << report.spec.check_id;
  if (!report.spec.family.empty()) out << "  family=" << report.spec.family;
  out << "  range=[" << report.spec.min.value_or(0) << "," << report.spec.max.value_or(0) << "]\n";
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      out << std::left << std::setw(static_cast<int>(i + 1 == row.size() ? 0 : width[i])) << row[i];
      if (i + 1 != row.size()) out << "  ";
    }
    out << '\n';
  }
  out << "pass=" << report.counts.pass << " fail=" << report.counts.fail << " error=" << report.counts.error
      << " wall_ms=" << report.wall_ms << '\n';
  return out.str();
}

inline std::string serialize_report(const SweepReport& report, OutputFormat format) {
  if (format == OutputFormat::text) return report_to_text(report);
  return report_to_json(report).dump(2) + "\n";
}

/// Writes the report to `path` (stdout when empty) and returns the process
/// exit code: 0 ok, 1 proved-claim failure or I/O failure.
inline int emit_report(const SweepReport& report, OutputFormat format, const std::string& path,
                       std::ostream& diag = std::cerr) {
  const std::string body = serialize_report(report, format);
  if (path.empty()) {
    std::cout << body;
    std::cout.flush();
    if (!std::cout) {
      diag << "veritool: failed writing report to stdout\n";
      return 1;
    }
  } else {
    std::ofstream file(path, std::ios::binary);
    if (file) file << body;
    if (!file) {
      diag << "veritool: cannot write report to '" << path << "'\n";
      return 1;
    }
  }
  return exit_code(report);
}

}  // namespace veritool
