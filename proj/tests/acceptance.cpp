// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <veritool/fastmod.hpp>
#include <veritool/sweep.hpp>

#include "oracle.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using veritool::CheckStatus;
using veritool::ExactInt;
using veritool::SweepReport;
using veritool::SweepSpec;

namespace {

// Runtime ceilings in milliseconds (single-threaded).
constexpr long kAc1LimitMs = 1000;
constexpr long kAc2LimitMs = 60000;
constexpr long kAc4LimitMs = 120000;

struct Outcome {
  bool ok = true;
  std::ostringstream detail;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      if (!ok) detail << "; ";
      detail << what;
      ok = false;
    }
  }
};

SweepReport sweep(const std::string& id, std::int64_t lo, std::int64_t hi, const std::string& family = "",
                  veritool::Params params = {}, unsigned jobs = 1) {
  SweepSpec s;
  s.check_id = id;
  s.family = family;
  s.min = lo;
  s.max = hi;
  s.params = std::move(params);
  s.jobs = jobs;
  return veritool::run_sweep(veritool::resolve_spec(std::move(s)));
}

// Every result passes and the count matches.
void require_all_pass(Outcome& o, const SweepReport& r, std::size_t expected_count, const std::string& label) {
  if (r.results.size() != expected_count) {
    o.require(false, label + ": expected " + std::to_string(expected_count) + " results, got " +
                         std::to_string(r.results.size()));
  }
  for (const auto& x : r.results) {
    if (x.status != CheckStatus::pass) {
      std::string params;
      for (const auto& [k, v] : x.params) params += k + "=" + v + " ";
      o.require(false, label + ": " + params + std::string(veritool::to_string(x.status)) + " " + x.note);
      return;
    }
  }
}

std::size_t prime_count(std::uint64_t lo, std::uint64_t hi) {
  std::size_t n = 0;
  for (std::uint64_t p = lo; p <= hi; ++p) n += oracle::is_prime(p) ? 1 : 0;
  return n;
}

std::string normalized_json(SweepReport r) {
  r.wall_ms = 0;
  return veritool::serialize_report(r, veritool::OutputFormat::json);
}

SweepReport ac2_report;
SweepReport ac4_report;

void ac1(Outcome& o) {
  const auto start = std::chrono::steady_clock::now();
  const auto r = sweep("transformed-sum", 2, 5);
  const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  const std::vector<std::string> expected{"-16", "-152", "-1664", "-20072"};
  require_all_pass(o, r, 4, "transformed-sum");
  for (std::size_t i = 0; i < expected.size() && i < r.results.size(); ++i) {
    o.require(r.results[i].lhs == expected[i], "T(" + std::to_string(i + 2) + ") = " + r.results[i].lhs);
  }
  o.require(ms < kAc1LimitMs, "took " + std::to_string(ms) + " ms");
  if (o.ok) o.detail << "T(2..5) = -16, -152, -1664, -20072 in " << ms << " ms";
}

void ac2(Outcome& o) {
  ac2_report = sweep("thm1-div", 2, 2000, "3k1b16");
  require_all_pass(o, ac2_report, 1999, "thm1-div 3k1b16");
  o.require(ac2_report.wall_ms < kAc2LimitMs, "took " + std::to_string(ac2_report.wall_ms) + " ms");
  if (o.ok) o.detail << "1999/1999 n in [2,2000] in " << ac2_report.wall_ms << " ms";
}

void ac3(Outcome& o) {
  for (const std::string fam : {"6k1b256", "42k5b4096"}) {
    const auto r = sweep("thm1-div", 1, 500, fam);
    o.require(r.results.size() == 500, fam + ": result count " + std::to_string(r.results.size()));
    if (r.results.size() != 500) continue;
    const auto& first = r.results[0];
    o.require(first.param("n") == "1" && first.status == CheckStatus::error &&
                  first.note.find("n must be >= 2") != std::string::npos,
              fam + ": n=1 not reported as out-of-range error");
    for (std::size_t i = 1; i < r.results.size(); ++i) {
      if (r.results[i].status != CheckStatus::pass) {
        o.require(false, fam + ": n=" + r.results[i].param("n").value_or("?") + " " + r.results[i].note);
        break;
      }
    }
  }
  if (o.ok) o.detail << "both companion families pass n in [2,500]; n=1 reported as outside n >= 2";
}

void ac4(Outcome& o) {
  ac4_report = sweep("thm2-cong", 5, 1000, "3k1b16");
  require_all_pass(o, ac4_report, prime_count(5, 1000), "thm2-cong 3k1b16");
  // spot witnesses, recomputed here from the term-by-term rational series
  const std::pair<std::uint64_t, std::string> spots[] = {{5, "380"}, {7, "1379"}};
  for (const auto& [p, want] : spots) {
    const auto m = static_cast<std::int64_t>(p * p * p * p);
    const auto reference = oracle::reduce(oracle::weighted_series(3, 1, 16, (p - 1) / 2), m);
    o.require(std::to_string(reference) == want, "reference p=" + std::to_string(p) + " gives " +
                                                      std::to_string(reference));
    for (const auto& r : ac4_report.results) {
      if (r.param("p") == std::to_string(p)) {
        o.require(r.lhs == want && r.rhs == want, "p=" + std::to_string(p) + " witnesses " + r.lhs + "/" + r.rhs);
      }
    }
  }
  // the word-sized path agrees with the exact witnesses at every prime
  for (const auto& r : ac4_report.results) {
    const auto p = static_cast<std::uint64_t>(std::stoll(r.param("p").value_or("0")));
    if (std::to_string(veritool::fast_supercong_lhs(veritool::kFamily16, p)) != r.lhs) {
      o.require(false, "fast path differs at p=" + std::to_string(p));
      break;
    }
  }
  o.require(ac4_report.wall_ms < kAc4LimitMs, "took " + std::to_string(ac4_report.wall_ms) + " ms");
  if (o.ok) {
    o.detail << ac4_report.results.size() << " primes in [5,1000] mod p^4; p=5 -> 380, p=7 -> 1379; "
             << ac4_report.wall_ms << " ms";
  }
}

void ac5(Outcome& o) {
  for (const std::string fam : {"6k1b256", "42k5b4096"}) {
    require_all_pass(o, sweep("thm2-cong", 5, 300, fam), prime_count(5, 300), "thm2-cong " + fam);
  }
  if (o.ok) o.detail << "both companion families hold mod p^4 for primes in [5,300]";
}

void ac6(Outcome& o) {
  require_all_pass(o, sweep("morley", 5, 10000), prime_count(5, 10000), "morley");
  require_all_pass(o, sweep("wolstenholme", 5, 500), prime_count(5, 500), "wolstenholme");
  std::size_t half_sum = 0;
  for (std::uint64_t p = 5; p <= 500; ++p) half_sum += oracle::is_prime(p) ? (p - 1) / 2 : 0;
  require_all_pass(o, sweep("lemma3.3", 5, 500), half_sum, "lemma3.3");
  require_all_pass(o, sweep("lemma3.4", 5, 500), half_sum, "lemma3.4");
  require_all_pass(o, sweep("lemma3.5", 5, 500), prime_count(5, 500), "lemma3.5");
  if (o.ok) {
    o.detail << "morley p <= 10^4; wolstenholme, lemma3.3, lemma3.4 (" << half_sum
             << " (p,k) pairs each), lemma3.5 for p <= 500";
  }
}

void ac7(Outcome& o) {
  require_all_pass(o, sweep("lemma2.5", 0, 60), 61 * 19, "lemma2.5");
  require_all_pass(o, sweep("staver", 1, 300), 300, "staver");
  require_all_pass(o, sweep("wz-relation", 0, 60), 61 * 60, "wz-relation");
  require_all_pass(o, sweep("wz-telescope", 1, 40), 40, "wz-telescope");
  const auto floors = sweep("floor-ineq", 2, 64, "", {{"bound", "200"}});
  require_all_pass(o, floors, 63, "floor-ineq");
  for (const auto& r : floors.results) o.require(r.lhs == "0", "floor-ineq violations at m=" + *r.param("m"));
  if (o.ok) o.detail << "lemma2.5 on 61x19 points, staver n<=300, wz-relation 61x60 (k,j), wz-telescope N<=40, "
                      "floor-ineq a,b<=200 m<=64";
}

void ac8(Outcome& o) {
  std::size_t eligible = 0;
  for (std::int64_t n = 6; n <= 5000; ++n) {
    const auto m = static_cast<std::uint64_t>(n - 1);
    eligible += (m & (m - 1)) == 0 ? 0 : 1;
  }
  require_all_pass(o, sweep("lemma2.2", 6, 5000), eligible, "lemma2.2");
  const std::set<std::string> special{"9", "17", "33", "65", "129", "257", "513", "1025"};
  for (const std::string id : {"lemma2.3", "lemma2.4"}) {
    const auto r = sweep(id, 6, 1025);
    require_all_pass(o, r, special.size(), id);
    std::set<std::string> seen;
    for (const auto& x : r.results) seen.insert(*x.param("n"));
    o.require(seen == special, id + ": unexpected n set");
  }
  const auto kummer = sweep("kummer-cross", 0, 512);
  require_all_pass(o, kummer, 513 * 4, "kummer-cross");
  if (o.ok) o.detail << "lemma2.2 on " << eligible << " n, lemma2.3/2.4 on n=2^m+1 in [9,1025], kummer-cross m<=512 "
                          "p in {2,3,5,7}";
}

void ac9(Outcome& o) {
  for (std::int64_t n = 2; n <= 200; ++n) {
    const auto un = static_cast<std::uint64_t>(n);
    const ExactInt v = ExactInt(8) * veritool::weighted_sum(veritool::kFamily16, un) +
                       ExactInt(2 * n) * veritool::binomial(2 * n, n) * veritool::transformed_sum(n);
    if (!v.is_zero()) {
      o.require(false, "nonzero at n=" + std::to_string(n));
      return;
    }
  }
  o.detail << "8 S(n) + 2n C(2n,n) T(n) = 0 for n in [2,200]";
}

void ac10(Outcome& o) {
  const auto r = sweep("intro-cong", 5, 500);
  require_all_pass(o, r, 4 * prime_count(5, 500), "intro-cong");
  bool p5_checked = false;
  for (const auto& x : r.results) {
    if (x.param("which") != "3") continue;
    o.require(x.note.find("+p^2*E_{p-3} form gives") != std::string::npos,
              "p=" + *x.param("p") + ": sign note missing");
    if (x.param("p") == "5") {
      p5_checked = true;
      o.require(x.lhs == "26" && x.note.find("gives 101") != std::string::npos, "p=5 witness " + x.lhs);
    }
  }
  o.require(p5_checked, "p=5 missing");
  if (o.ok) o.detail << "4 congruences at " << r.results.size() / 4 << " primes; third in minus form, p=5: 26 vs plus-form 101";
}

void ac11(Outcome& o) {
  const auto many2 = sweep("thm1-div", 2, 2000, "3k1b16", {}, 8);
  o.require(normalized_json(ac2_report) == normalized_json(many2), "thm1-div reports differ");
  const auto many4 = sweep("thm2-cong", 5, 1000, "3k1b16", {}, 8);
  o.require(normalized_json(ac4_report) == normalized_json(many4), "thm2-cong reports differ");
  o.require(!ac2_report.results.empty() && !ac4_report.results.empty(), "criteria 2 and 4 must run first");
  if (o.ok) o.detail << "jobs=1 and jobs=8 JSON identical (wall_ms zeroed) for criteria 2 and 4";
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria{
      {"AC1 ", ac1}, {"AC2 ", ac2}, {"AC3 ", ac3}, {"AC4 ", ac4}, {"AC5 ", ac5},  {"AC6 ", ac6},
      {"AC7 ", ac7}, {"AC8 ", ac8}, {"AC9 ", ac9}, {"AC10", ac10}, {"AC11", ac11},
  };
  int failures = 0;
  for (const auto& [name, fn] : criteria) {
    Outcome o;
    try {
      fn(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    std::cout << (o.ok ? "[PASS] " : "[FAIL] ") << name << "  " << o.detail.str() << std::endl;
    failures += o.ok ? 0 : 1;
  }
  std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
