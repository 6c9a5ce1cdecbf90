#pragma once

// Exhaustive search for left Bol loops of small order.
//
// Cells are assigned row-major with identity fixed at element 1. Row and
// column candidate sets are maintained incrementally, and every Bol triple is
// checked (and, where one side is known, used to force the missing cell) as
// soon as enough of its products are decided.

#include <cstdint>
#include <functional>
#include <vector>

#include "bolkit/loop.hpp"

namespace bolkit {

inline constexpr std::uint64_t kDefaultSearchBudget = 2'000'000'000ull;

struct BolSearchStats {
  std::uint64_t nodes = 0;
  std::uint64_t solutions = 0;
};

/// Calls `visit` for every left Bol loop table of order n (1 <= n <= 16) with
/// identity 1. Throws SearchBudgetExceeded after `budget` search nodes.
BolSearchStats enumerate_left_bol(std::size_t n,
                                  const std::function<void(const LoopTable&)>& visit,
                                  std::uint64_t budget = kDefaultSearchBudget);

struct Order8OracleResult {
  std::size_t order = 0;
  std::uint64_t tables = 0;
  std::uint64_t nodes = 0;
  std::size_t classes = 0;
  std::size_t associative_classes = 0;
  std::size_t nonassociative_classes = 0;
  bool all_commutants_subloops = true;
  std::vector<LoopTable> representatives;
};

/// Enumerates every left Bol loop of order n, checks that each commutant is
/// a subloop, and classifies the tables up to isomorphism.
Order8OracleResult run_bol_oracle(std::size_t n = 8, std::uint64_t budget = kDefaultSearchBudget);

}  // namespace bolkit
