// Acceptance suite: one line per criterion, PASS only when every claim of
// the criterion passes within its runtime bound.

#include <chrono>
#include <cstdio>
#include <map>

#include "bolkit/verify.hpp"

using namespace bolkit;

int main() {
  VerifyContext ctx;
  std::map<int, std::vector<ClaimResult>> results;
  std::map<int, double> limits;
  for (const auto& check : claim_checks()) {
    auto t0 = std::chrono::steady_clock::now();
    ClaimResult r;
    try {
      r = check.run(ctx);
    } catch (const std::exception& e) {
      r.pass = false;
      r.details = std::string("error: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    r.id = check.id;
    results[check.criterion].push_back(r);
    limits[check.criterion] = check.time_limit_s;
  }

  bool all = true;
  for (const auto& [criterion, claims] : results) {
    double seconds = 0;
    bool pass = true;
    for (const auto& c : claims) {
      seconds += c.seconds;
      pass = pass && c.pass;
    }
    bool in_time = seconds < limits[criterion];
    bool ok = pass && in_time;
    all = all && ok;
    std::printf("criterion %2d: %s  %.3f s (limit %.0f s)%s\n", criterion, ok ? "PASS" : "FAIL", seconds,
                limits[criterion], in_time ? "" : " TIME EXCEEDED");
    for (const auto& c : claims)
      std::printf("    %s %s: %s\n", c.pass ? "ok  " : "FAIL", c.id.c_str(), c.details.c_str());
  }
  std::printf("%s\n", all ? "acceptance: all criteria pass" : "acceptance: FAILURES");
  return all ? 0 : 1;
}
