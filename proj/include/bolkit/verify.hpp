#pragma once

// Claim-by-claim verification of the published results, shared by the
// `bolkit verify-paper` command and the acceptance test binary.

#include <functional>
#include <string>
#include <vector>

#include "bolkit/loop.hpp"

namespace bolkit {

struct ClaimResult {
  std::string id;
  std::string citation;
  bool pass = false;
  std::string details;
  double seconds = 0.0;
};

struct VerificationReport {
  std::vector<ClaimResult> claims;

  bool all_pass() const;
  /// One line per claim: "<PASS|FAIL> <id> [<citation>] <details>".
  std::string render(bool with_timing = false) const;
};

struct VerifyContext {
  std::string fixture_dir = BOLKIT_FIXTURE_DIR;
  std::uint64_t oracle_budget = 2'000'000'000ull;
  std::size_t random_extensions = 100;
  unsigned seed = 20240531u;
};

struct ClaimCheck {
  std::string id;
  std::string citation;
  int criterion = 0;           // acceptance criterion number
  double time_limit_s = 0.0;   // runtime bound for the criterion
  std::function<ClaimResult(const VerifyContext&)> run;
};

/// All checks in criterion order.
const std::vector<ClaimCheck>& claim_checks();

/// Runs every check (timed) and collects the results.
VerificationReport verify_paper(const VerifyContext& ctx = {});

// Catalogs used by the checks; exposed for tests.

/// The 21 loops with non-subloop commutant: 19 q9 representatives, the
/// exceptional loop, and the order-12 semidirect product.
std::vector<LoopTable> non_subloop_commutant_catalog();

/// The 21 loops plus direct products with small groups, the order-4n family
/// for n = 3..8 and further Bol loops built along the way.
std::vector<LoopTable> structure_catalog(const std::string& fixture_dir);

/// Groups of order 2k, k odd, whose commutants must be subloops.
std::vector<LoopTable> order_2k_catalog();

/// Every loop of order n with identity 1 (reduced Latin squares), n <= 5.
std::vector<LoopTable> all_normalized_loops(std::size_t n);

/// Isomorphism test by trying all (n-1)! bijections fixing 1.
bool brute_force_isomorphic(const LoopTable& a, const LoopTable& b);

}  // namespace bolkit
