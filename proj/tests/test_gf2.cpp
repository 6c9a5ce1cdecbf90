#include <doctest.h>

#include <random>
#include <set>

#include "bolkit/gf2.hpp"
#include "bolkit/iso.hpp"
#include "bolkit/structure.hpp"
#include "oracles.hpp"

using namespace bolkit;
using namespace bolkit::gf2;

namespace {

CMap random_cmap(std::mt19937& rng, std::size_t dim) {
  CMap c(dim);
  for (Vec2 e = 1; e < (1u << dim); ++e)
    for (std::size_t i = 0; i < dim; ++i) c.set(e, i, static_cast<int>(rng() & 1u));
  return c;
}

// f(a, b) = sum of c(a, e_i) over the support of b
int right_additive_value(const CMap& c, Vec2 a, Vec2 b) {
  int s = 0;
  for (std::size_t i = 0; i < c.dim(); ++i)
    if ((b >> i) & 1u) s ^= c(a, i);
  return s;
}

// On K x E with K, E = (Z2)^2 listed 1, k1, k2, k1k2 (bits), the loop
// (u,a)(v,b) = (psi_{a,b}(u) v, ab) with psi_{1,b} for b in {e2, e1e2} and
// psi_{e1,b} for b in `e1_cols`.
LoopTable psi_loop(std::set<Vec2> e1_cols) {
  std::vector<Element> cells(256);
  auto idx = [](Vec2 u, Vec2 a) { return static_cast<Element>(u + 1 + 4 * a); };
  for (Vec2 a = 0; a < 4; ++a)
    for (Vec2 u = 0; u < 4; ++u)
      for (Vec2 b = 0; b < 4; ++b)
        for (Vec2 v = 0; v < 4; ++v) {
          Vec2 w = u;
          if (a == 0 && (b == 2 || b == 3)) w = u ^ ((u >> 1) & 1u);       // k2 -> k1k2
          if (a == 1 && e1_cols.count(b)) w = u ^ ((u & 1u) << 1);          // k1 -> k1k2
          cells[(idx(u, a) - 1) * 16 + idx(v, b) - 1] = idx(w ^ v, a ^ b);
        }
  return LoopTable(16, cells);
}

LoopTable fixture16() { return load_table(std::string(BOLKIT_FIXTURE_DIR) + "/bol16_trivial_lnuc.tbl"); }

}  // namespace

TEST_CASE("associated cocycles") {
  CHECK(associated_cocycle(CMap(3)) == Cocycle(3));
  std::mt19937 rng(3);
  for (int t = 0; t < 100; ++t) {
    std::size_t dim = 1 + t % 4;
    auto c = random_cmap(rng, dim);
    auto f = associated_cocycle(c);
    CHECK(is_right_additive(f));
    CHECK(e2k2_bol_check(f));
    for (Vec2 a = 0; a < f.size(); ++a) {
      for (std::size_t i = 0; i < dim; ++i) CHECK(f(a, Vec2{1} << i) == c(a, i));
      for (Vec2 b = 0; b < f.size(); ++b) CHECK(f(a, b) == right_additive_value(c, a, b));
    }
  }
}

TEST_CASE("right additivity detects a single flipped entry") {
  std::mt19937 rng(5);
  auto f = associated_cocycle(random_cmap(rng, 3));
  for (Vec2 a = 1; a < 8; ++a)
    for (Vec2 b = 1; b < 8; ++b) {
      auto g = f;
      g.set(a, b, 1 - f(a, b));
      CHECK_FALSE(is_right_additive(g));
    }
  CHECK_THROWS_AS(f.set(0, 3, 1), Error);
  CHECK_THROWS_AS(CMap(3).set(0, 1, 1), Error);
}

TEST_CASE("Bol criterion agrees with the built loop") {
  std::mt19937 rng(9);
  std::size_t agree_bol = 0;
  for (int t = 0; t < 60; ++t) {
    std::size_t dim = 2 + t % 2;
    Cocycle f = associated_cocycle(random_cmap(rng, dim));
    // perturb some of them
    if (t % 3) {
      Vec2 a = 1 + rng() % (f.size() - 1), b = 1 + rng() % (f.size() - 1);
      f.set(a, b, 1 - f(a, b));
    }
    auto q = build_trivial_action(f);
    bool bol = oracle::left_bol(q);
    agree_bol += bol;
    CHECK(e2k2_bol_check(f) == bol);
  }
  CHECK(agree_bol > 0);
  CHECK(e2k2_bol_check(Cocycle(3)));
}

TEST_CASE("right nucleus of a right-additive loop") {
  std::mt19937 rng(13);
  for (int t = 0; t < 20; ++t) {
    auto f = associated_cocycle(random_cmap(rng, 3));
    auto q = build_trivial_action(f);
    auto rn = oracle::nucleus(q, 2);
    for (Vec2 c = 0; c < 8; ++c) {
      bool additive = true;
      for (Vec2 a = 0; a < 8; ++a)
        for (Vec2 b = 0; b < 8; ++b) additive = additive && f(a ^ b, c) == (f(a, c) ^ f(b, c));
      for (int w = 0; w < 2; ++w) CHECK(rn.count(static_cast<Element>(1 + w + 2 * c)) == (additive ? 1u : 0u));
    }
  }
}

TEST_CASE("q9 loops") {
  auto q = build_q9({0, 0, 0, 0, 0, 0, 0, 0, 0});
  CHECK(q.order() == 16);
  CHECK(oracle::left_bol(q));
  CHECK_FALSE(oracle::associative(q));
  auto com = oracle::commutant(q);
  CHECK(com.size() == 6);
  CHECK_FALSE(oracle::closed(q, com));
  auto fam = enumerate_q9();
  REQUIRE(fam.size() == 512);
  for (std::size_t i = 1; i < fam.size(); ++i) CHECK(fam[i - 1].params < fam[i].params);
  for (const auto& m : fam) {
    auto c = q9_cmap(m.params);
    CHECK(satisfies_q9_constraints(c));
    CHECK(is_right_additive(associated_cocycle(c)));
    // (0,e1) and (0,e2) are central-commuting, their product is not
    auto cm = commutant(m.table);
    CHECK(cm.contains(3));
    CHECK(cm.contains(5));
    CHECK_FALSE(cm.contains(m.table(3, 5)));
    CHECK(cm.is_subset_of(right_nucleus(m.table)));
  }
  CHECK(to_string(fam[1].params) == "000000001");
  CHECK(fam[1].table.name() == "q9 000000001");
}

TEST_CASE("q9 parameter parsing") {
  CHECK(parse_q9("010000001") == Q9Params{0, 1, 0, 0, 0, 0, 0, 0, 1});
  CHECK_THROWS_AS(parse_q9("01"), Error);
  CHECK_THROWS_AS(parse_q9("01000000x"), Error);
  CHECK_THROWS_AS(parse_q9("0100000010"), Error);
  CHECK(q9_representatives().size() == 19);
}

TEST_CASE("exhaustive search over all dim-3 maps") {
  // c with c(0, .) = 0 has 21 free entries. The semantic condition: (0,e1)
  // and (0,e2) lie in the commutant of the loop of f = f_c, (0,e1+e2) does not.
  auto in_commutant = [](const CMap& c, Vec2 a) {
    for (Vec2 b = 0; b < 8; ++b)
      if (right_additive_value(c, a, b) != right_additive_value(c, b, a)) return false;
    return true;
  };
  std::set<std::uint32_t> semantic, library;
  CMap c(3);
  for (std::uint32_t bits = 0; bits < (1u << 21); ++bits) {
    for (std::uint32_t s = 0; s < 21; ++s) c.set(1 + s / 3, s % 3, (bits >> s) & 1u);
    if (in_commutant(c, 1) && in_commutant(c, 2) && !in_commutant(c, 3)) semantic.insert(bits);
    if (satisfies_q9_constraints(c)) library.insert(bits);
  }
  CHECK(semantic.size() == 512);
  CHECK(library == semantic);
  CHECK(q9_free_parameter_formula(3) == 9);
  CHECK(q9_free_parameter_formula(4) == 32);
  CHECK(q9_constraint_free_bits(3) == std::optional<std::size_t>(9));
  CHECK(q9_constraint_free_bits(4) == std::optional<std::size_t>(32));
  for (std::size_t n = 3; n <= 6; ++n) CHECK(q9_constraint_free_bits(n) == q9_free_parameter_formula(n));
}

TEST_CASE("cocycle equivalence") {
  auto f0 = associated_cocycle(q9_cmap({0, 0, 0, 0, 0, 0, 0, 0, 0}));
  auto f1 = associated_cocycle(q9_cmap({0, 0, 0, 0, 0, 0, 0, 0, 1}));
  CHECK(cocycle_equivalent(f0, f0));
  CHECK_FALSE(cocycle_equivalent(f0, f1));
  CHECK(general_linear_group(3).size() == 168);
  CHECK(general_linear_group(2).size() == 6);
  std::mt19937 rng(17);
  auto gl = general_linear_group(3);
  for (int t = 0; t < 10; ++t) {
    auto f = associated_cocycle(random_cmap(rng, 3));
    const auto& phi = gl[rng() % gl.size()];
    // g(phi a, phi b) = f(a, b)
    Cocycle g(3);
    for (Vec2 a = 0; a < 8; ++a)
      for (Vec2 b = 0; b < 8; ++b) g.set(phi(a), phi(b), f(a, b));
    auto found = find_cocycle_equivalence(f, g);
    REQUIRE(found);
    for (Vec2 a = 0; a < 8; ++a)
      for (Vec2 b = 0; b < 8; ++b) CHECK(f(a, b) == g((*found)(a), (*found)(b)));
    // (u,a) -> (u, phi a) is an isomorphism of the two loops
    std::vector<Element> img(16);
    for (Vec2 a = 0; a < 8; ++a)
      for (Vec2 u = 0; u < 2; ++u) img[u + 2 * a] = static_cast<Element>(1 + u + 2 * (*found)(a));
    CHECK(oracle::is_hom(build_trivial_action(f), build_trivial_action(g), img));
    CHECK(find_isomorphism(build_trivial_action(f), build_trivial_action(g)).has_value());
  }
}

TEST_CASE("exceptional loop") {
  auto q = build_exceptional();
  CHECK(q == fixture16());
  CHECK(q == psi_loop({2, 3}));
  CHECK(q(5, 9) == 13);
  CHECK(q(6, 9) == 16);
  CHECK(oracle::left_bol(q));
  for (Element x = 1; x <= 16; ++x) CHECK(q(x, x) == 1);
  CHECK(oracle::commutant(q) == std::set<Element>{1, 2, 5, 7});
  CHECK(oracle::nucleus(q, 0) == std::set<Element>{1});
}

TEST_CASE("the construction with psi at (e1,e1) instead of (e1,e2) is not Bol") {
  auto literal = psi_loop({1, 3});
  CHECK_FALSE(oracle::left_bol(literal));
}
