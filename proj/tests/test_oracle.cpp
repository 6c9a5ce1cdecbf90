#include <doctest.h>

#include <algorithm>

#include "bolkit/oracle.hpp"
#include "bolkit/structure.hpp"
#include "oracles.hpp"

using namespace bolkit;

TEST_CASE("search agrees with filtering all Latin squares") {
  for (std::size_t n = 1; n <= 6; ++n) {
    std::vector<LoopTable> found;
    enumerate_left_bol(n, [&](const LoopTable& q) { found.push_back(q); });
    std::vector<LoopTable> brute;
    for (const auto& q : oracle::reduced_latin_squares(n))
      if (oracle::left_bol(q)) brute.push_back(q);
    CAPTURE(n);
    REQUIRE(found.size() == brute.size());
    auto key = [](const LoopTable& q) { return std::vector<Element>(q.cells().begin(), q.cells().end()); };
    std::vector<std::vector<Element>> a, b;
    for (const auto& q : found) a.push_back(key(q));
    for (const auto& q : brute) b.push_back(key(q));
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    CHECK(a == b);
  }
}

TEST_CASE("order 8") {
  auto r = run_bol_oracle(8);
  CHECK(r.all_commutants_subloops);
  CHECK(r.associative_classes == 5);
  CHECK(r.classes == r.representatives.size());
  CHECK(r.classes == r.associative_classes + r.nonassociative_classes);
  for (const auto& q : r.representatives) CHECK(is_left_bol(q));
  MESSAGE("order 8: " << r.tables << " tables, " << r.nonassociative_classes << " nonassociative classes");
}

TEST_CASE("small orders") {
  CHECK(run_bol_oracle(7).classes == 1);
  auto six = run_bol_oracle(6);
  CHECK(six.classes == 2);
  CHECK(six.associative_classes == 2);
}

TEST_CASE("orders 9 and 10 have only groups") {
  for (std::size_t n : {9, 10}) {
    auto r = run_bol_oracle(n);
    CHECK(r.all_commutants_subloops);
    CHECK(r.classes == 2);
    CHECK(r.nonassociative_classes == 0);
  }
}

TEST_CASE("budget and parameter errors") {
  CHECK_THROWS_AS(run_bol_oracle(8, 10), Error);
  CHECK_THROWS_AS(enumerate_left_bol(0, [](const LoopTable&) {}), Error);
  CHECK_THROWS_AS(enumerate_left_bol(17, [](const LoopTable&) {}), Error);
}
