#include <doctest.h>

#include <sstream>

#include "bolkit/loop.hpp"
#include "bolkit/structure.hpp"
#include "oracles.hpp"

using namespace bolkit;

namespace {

LoopTable t8() { return load_table(std::string(BOLKIT_FIXTURE_DIR) + "/bol8_commutant_rnuc.tbl"); }

std::vector<Element> imgs(const Permutation& p) { return {p.images().begin(), p.images().end()}; }

}  // namespace

TEST_CASE("parse the smallest loop") {
  auto q = parse_table_string("2\n1 2\n2 1\n");
  CHECK(q.order() == 2);
  CHECK(q(2, 2) == 1);
  CHECK(q == cyclic_group(2));
}

TEST_CASE("parse rejects bad input") {
  auto kind = [](const std::string& s) {
    try {
      parse_table_string(s);
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::BadSpec;  // sentinel: no error
  };
  CHECK(kind("2\n1 1\n2 1\n") == ErrorKind::NotLatin);
  CHECK(kind("2\n1 2\n2\n") == ErrorKind::Malformed);
  CHECK(kind("2\n1 2\n2 3\n") == ErrorKind::Malformed);
  CHECK(kind("x\n") == ErrorKind::Malformed);
  CHECK(kind("") == ErrorKind::Malformed);
  CHECK(kind("2\n1 2\n2 1\n7\n") == ErrorKind::Malformed);
  CHECK(kind("3\n1 2 3\n3 1 2\n2 3 1\n") == ErrorKind::NoIdentity);
  CHECK(parse_table_string("3\n2 3 1\n3 1 2\n1 2 3\n").order() == 3);  // identity at 3 is moved to 1
  CHECK_THROWS_AS(load_table("/nonexistent/file.tbl"), Error);
}

TEST_CASE("identity not at 1 is relabeled") {
  // Z3 with identity at 2: element 2 is 0, 1 is 1, 3 is 2
  std::vector<Element> cells = {3, 1, 2, 1, 2, 3, 2, 3, 1};
  CHECK_THROWS_AS(LoopTable(3, cells), Error);
  auto q = LoopTable::normalized(3, cells, "z3");
  CHECK(q.name().find("relabeled") != std::string::npos);
  CHECK(oracle::isomorphic(q, cyclic_group(3)));
}

TEST_CASE("order-8 fixture: products, divisions, translations") {
  auto q = t8();
  CHECK(q.order() == 8);
  CHECK(mul(q, 5, 7) == 3);
  CHECK(mul(q, 7, 5) == 4);
  CHECK(left_divide(q, 5, 3) == 7);
  CHECK(right_divide(q, 5, 3) == 8);
  CHECK(imgs(translation(q, 5, Side::left)) == std::vector<Element>{5, 6, 7, 8, 1, 2, 3, 4});
  CHECK(translation(q, 1, Side::left).is_identity());
  CHECK(translation(q, 1, Side::right).is_identity());
  CHECK(power(q, 7, 2) == 2);
  CHECK(power(q, 7, 4) == 1);
  CHECK(element_order(q, 7) == 4);
  CHECK(element_order(q, 2) == 2);
  CHECK(element_order(q, 1) == 1);
  CHECK(inverse(q, 7) == 8);
  CHECK(inverse(q, 1) == 1);
  for (Element a = 1; a <= 8; ++a) CHECK(power(q, a, 0) == 1);
}

TEST_CASE("commutant elements have equal left and right translations") {
  auto q = t8();
  for (auto c : commutant(q)) CHECK(translation(q, c, Side::left) == translation(q, c, Side::right));
}

TEST_CASE("Latin round trips and translations on every small loop") {
  std::vector<LoopTable> all = {t8(), load_table(std::string(BOLKIT_FIXTURE_DIR) + "/bol16_trivial_lnuc.tbl")};
  for (std::size_t n = 1; n <= 5; ++n)
    for (auto& q : oracle::reduced_latin_squares(n)) all.push_back(q);
  for (const auto& q : all) {
    auto n = static_cast<Element>(q.order());
    for (Element a = 1; a <= n; ++a) {
      CHECK(left_divide(q, a, a) == 1);
      CHECK(right_divide(q, a, a) == 1);
      auto la = translation(q, a, Side::left), ra = translation(q, a, Side::right);
      for (Element b = 1; b <= n; ++b) {
        CHECK(mul(q, a, left_divide(q, a, b)) == b);
        CHECK(mul(q, right_divide(q, a, b), a) == b);
        CHECK(left_divide(q, a, mul(q, a, b)) == b);
        CHECK(la(b) == q(a, b));
        CHECK(ra(b) == q(b, a));
      }
    }
    CHECK(parse_table_string(render(q)) == q);
  }
}

TEST_CASE("render format") {
  auto s = render(cyclic_group(3));
  CHECK(s == "3\n1 2 3\n2 3 1\n3 1 2\n");
  auto q = t8();
  CHECK(parse_table_string(render(q)) == q);
}

TEST_CASE("left power alternative in left Bol loops") {
  for (const auto& q : {t8(), dihedral_group(5), cyclic_group(7)}) {
    REQUIRE(is_left_bol(q));
    auto n = static_cast<long long>(q.order());
    for (Element a = 1; a <= q.order(); ++a) {
      CHECK_NOTHROW(inverse(q, a));
      auto la = translation(q, a, Side::left);
      for (long long m = -n; m <= 2 * n; ++m) CHECK(translation(q, power(q, a, m), Side::left) == la.pow(m));
      for (long long m = 0; m <= 2 * n; ++m)
        for (long long k = 0; k <= 2 * n; ++k)
          CHECK(power(q, a, m + k) == translation(q, power(q, a, m), Side::left)(power(q, a, k)));
    }
  }
}

TEST_CASE("negative powers need a two-sided inverse") {
  std::size_t seen = 0;
  for (const auto& q : oracle::reduced_latin_squares(5))
    for (Element a = 1; a <= 5; ++a) {
      if (q.rdiv(a, 1) == q.ldiv(a, 1)) continue;
      ++seen;
      CHECK_THROWS_AS(inverse(q, a), Error);
      CHECK_THROWS_AS(power(q, a, -1), Error);
    }
  CHECK(seen > 0);
}

TEST_CASE("permutations") {
  Permutation p({2, 3, 1}), q({1, 3, 2});
  CHECK((p * q)(1) == q(p(1)));
  CHECK((p * p.inverse()).is_identity());
  CHECK(p.pow(3).is_identity());
  CHECK(p.pow(-1) == p.inverse());
  CHECK(to_string(p) == "[2,3,1]");
  CHECK_THROWS_AS(Permutation({1, 1, 2}), Error);
}

TEST_CASE("relabel and direct product") {
  auto q = t8();
  Permutation phi({1, 3, 2, 5, 4, 7, 6, 8});
  auto r = relabel(q, phi);
  for (Element a = 1; a <= 8; ++a)
    for (Element b = 1; b <= 8; ++b) CHECK(r(phi(a), phi(b)) == phi(q(a, b)));
  auto d = direct_product(cyclic_group(2), cyclic_group(3));
  CHECK(d.order() == 6);
  CHECK(oracle::isomorphic(d, cyclic_group(6)));
  CHECK(d(2, 3) == 4);  // (2,1)(1,2) = (2,2) -> 2 + 2*1
}

TEST_CASE("standard groups") {
  CHECK(oracle::associative(dihedral_group(4)));
  CHECK(oracle::commutant(dihedral_group(4)).size() == 2);
  CHECK(oracle::commutant(dihedral_group(3)).size() == 1);
  auto e = elementary_abelian_2group(3);
  CHECK(e.order() == 8);
  CHECK(oracle::involutions(e) == 7);
  CHECK(e(2, 3) == 4);
}
