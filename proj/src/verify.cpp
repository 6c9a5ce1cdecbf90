#include "bolkit/verify.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "bolkit/extensions.hpp"
#include "bolkit/gf2.hpp"
#include "bolkit/iso.hpp"
#include "bolkit/oracle.hpp"
#include "bolkit/structure.hpp"

namespace bolkit {

namespace {

// Collects failed sub-checks; a claim passes when none were recorded.
struct Checker {
  std::vector<std::string> failures;
  std::ostringstream info;

  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }

  ClaimResult finish() const {
    ClaimResult r;
    r.pass = failures.empty();
    r.details = info.str();
    for (std::size_t i = 0; i < failures.size() && i < 5; ++i)
      r.details += (r.details.empty() ? "" : "; ") + std::string("failed: ") + failures[i];
    if (failures.size() > 5) r.details += "; ... " + std::to_string(failures.size() - 5) + " more";
    return r;
  }
};

std::string fixture(const VerifyContext& ctx, const char* file) { return ctx.fixture_dir + "/" + file; }

std::vector<LoopTable> q9_rep_tables() {
  std::vector<LoopTable> out;
  for (const auto& p : gf2::q9_representatives()) out.push_back(gf2::build_q9(p));
  return out;
}

std::vector<LoopTable> order16_catalog() {
  auto out = q9_rep_tables();
  out.push_back(gf2::build_exceptional());
  return out;
}

// --- criterion 1 ---------------------------------------------------------

ClaimResult check_order8_example(const VerifyContext& ctx) {
  Checker c;
  auto q = load_table(fixture(ctx, "bol8_commutant_rnuc.tbl"));
  auto nuc = nuclei(q);
  auto com = commutant(q);
  c.expect(q.order() == 8, "order 8");
  c.expect(is_left_bol(q), "left Bol");
  c.expect(!is_associative(q), "nonassociative");
  c.expect(nuc.left == ElementSet{1, 2}, "LNuc = {1,2}");
  c.expect(nuc.center == ElementSet{1, 2}, "Z = {1,2}");
  c.expect(com == ElementSet{1, 2, 3, 4}, "C = {1,2,3,4}");
  c.expect(nuc.right == ElementSet{1, 2, 3, 4}, "RNuc = {1,2,3,4}");
  c.expect(generated_subloop(q, ElementSet{4, 5}) == ElementSet::all(8), "<4,5> = Q");
  c.info << "C=" << to_string(com) << " RNuc=" << to_string(nuc.right) << " LNuc=" << to_string(nuc.left)
         << " Z=" << to_string(nuc.center);
  return c.finish();
}

// --- criterion 2 ---------------------------------------------------------

ClaimResult check_order12(const VerifyContext&) {
  Checker c;
  auto data = named_example_data(NamedExample::order12);
  auto q = build_extension(data);
  auto com = commutant(q);
  auto kf = ker_fix(data.e, data.k, data.tau);
  c.expect(q.order() == 12, "order 12");
  c.expect(is_left_bol(q), "left Bol");
  c.expect(!is_associative(q), "nonassociative");
  c.expect(com.size() == 3, "|C| = 3");
  c.expect(!is_subloop(q, com), "C not a subloop");
  c.expect(kf.fix.size() == 1 && kf.ker.size() == 3, "|Fix| = 1, |Ker| = 3");
  c.expect(com.size() == kf.fix.size() * kf.ker.size(), "|C| = |Fix||Ker|");
  c.info << "C=" << to_string(com) << " |Fix|=" << kf.fix.size() << " |Ker|=" << kf.ker.size();
  return c.finish();
}

// --- criterion 3 ---------------------------------------------------------

ClaimResult check_order16_semidirect(const VerifyContext&) {
  Checker c;
  auto cyc = build_named_example(NamedExample::order16cyclic);
  auto ele = build_named_example(NamedExample::order16elem);
  for (const auto* q : {&cyc, &ele}) {
    c.expect(q->order() == 16, q->name() + " order 16");
    c.expect(is_left_bol(*q), q->name() + " left Bol");
    c.expect(!is_associative(*q), q->name() + " nonassociative");
    c.expect(commutant(*q).size() == 6, q->name() + " |C| = 6");
  }
  auto ic = involution_count(cyc), ie = involution_count(ele);
  c.expect(ic == 9, "cyclic kernel: 9 involutions");
  c.expect(ie == 13, "elementary kernel: 13 involutions");
  c.expect(!find_isomorphism(cyc, ele), "non-isomorphic");
  c.info << "involutions " << ic << " and " << ie;
  return c.finish();
}

// --- criterion 4 ---------------------------------------------------------

ClaimResult check_q9_family(const VerifyContext&) {
  Checker c;
  auto family = gf2::enumerate_q9();
  std::size_t bad = 0;
  for (const auto& m : family) {
    const auto& q = m.table;
    auto com = commutant(q);
    bool ok = q.order() == 16 && is_left_bol(q) && com.size() == 6 && !is_subloop(q, com) &&
              com.is_subset_of(right_nucleus(q));
    if (!ok) ++bad;
  }
  c.expect(family.size() == 512, "512 tables");
  c.expect(bad == 0, std::to_string(bad) + " tables miss a property");
  c.info << family.size() << " tables checked";
  return c.finish();
}

ClaimResult check_q9_noniso(const VerifyContext&) {
  Checker c;
  auto reps = q9_rep_tables();
  std::size_t iso_pairs = 0;
  for (std::size_t i = 0; i < reps.size(); ++i)
    for (std::size_t j = i + 1; j < reps.size(); ++j)
      if (find_isomorphism(reps[i], reps[j])) {
        ++iso_pairs;
        c.expect(false, reps[i].name() + " ~ " + reps[j].name());
      }
  c.expect(reps.size() == 19, "19 listed tuples");
  c.info << reps.size() << " representatives, " << iso_pairs << " isomorphic pairs";
  return c.finish();
}

ClaimResult check_q9_classes(const VerifyContext&) {
  Checker c;
  auto family = gf2::enumerate_q9();
  std::vector<LoopTable> tables;
  std::map<gf2::Q9Params, std::size_t> index;
  for (std::size_t i = 0; i < family.size(); ++i) {
    index[family[i].params] = i;
    tables.push_back(family[i].table);
  }
  auto classes = classify(tables);
  c.expect(classes.size() == 19, "19 classes (got " + std::to_string(classes.size()) + ")");
  // each listed tuple must land in its own class, covering all of them
  std::vector<std::size_t> class_of(tables.size());
  for (std::size_t k = 0; k < classes.size(); ++k)
    for (auto m : classes[k].members) class_of[m] = k;
  std::set<std::size_t> hit;
  for (const auto& p : gf2::q9_representatives()) hit.insert(class_of[index.at(p)]);
  c.expect(hit.size() == classes.size(), "listed tuples cover every class once");
  c.info << classes.size() << " classes";
  return c.finish();
}

// --- criterion 5 ---------------------------------------------------------

ClaimResult check_exceptional(const VerifyContext& ctx) {
  Checker c;
  auto q = gf2::build_exceptional();
  auto nuc = nuclei(q);
  auto com = commutant(q);
  bool involutory = true;
  for (Element x = 1; x <= q.order(); ++x) involutory = involutory && q(x, x) == 1;
  c.expect(involutory, "involutory");
  c.expect(is_left_bol(q), "left Bol");
  c.expect(nuc.left == ElementSet{1} && nuc.center == ElementSet{1}, "LNuc = Z = {1}");
  c.expect(nuc.right.size() == 8, "|RNuc| = 8");
  if (is_subloop(q, nuc.right)) {
    auto r = subloop_table(q, nuc.right);
    c.expect(is_associative(r) && is_commutative(r), "RNuc elementary abelian");
  } else {
    c.expect(false, "RNuc subloop");
  }
  c.expect(com == ElementSet{1, 2, 5, 7}, "C = {1,2,5,7}");
  c.expect(generated_subloop(q, com) == nuc.right, "<C> = RNuc");

  auto fixture16 = load_table(fixture(ctx, "bol16_trivial_lnuc.tbl"));
  auto phi = find_isomorphism(q, fixture16);
  c.expect(phi.has_value(), "isomorphic to the fixture");
  if (phi) c.info << (phi->is_identity() ? "equal to the fixture table" : "fixture table via " + to_string(*phi));

  auto reps = q9_rep_tables();
  for (const auto& r : reps) c.expect(!find_isomorphism(q, r), "not isomorphic to " + r.name());

  auto all = order16_catalog();
  auto classes16 = classify(all);
  c.expect(classes16.size() == 20, "20 classes of order 16");
  auto twelve = build_named_example(NamedExample::order12);
  all.push_back(twelve);
  auto classes = classify(all);
  c.expect(classes.size() == 21, "21 classes in total");
  c.info << "; " << classes16.size() << " classes of order 16, " << classes.size() << " in total";
  return c.finish();
}

// --- criterion 6 ---------------------------------------------------------

ClaimResult check_coprime3(const VerifyContext&) {
  Checker c;
  for (const auto& q : order16_catalog()) {
    auto h = generated_subloop(q, commutant(q));
    auto ht = subloop_table(q, h);
    c.expect(is_associative(ht) && is_commutative(ht), q.name() + ": <C> abelian group");
    c.expect(16 % h.size() == 0, q.name() + ": |<C>| divides 16");
    c.expect(right_regular_is_homomorphism(q, h), q.name() + ": R restricted to <C> a homomorphism");
  }
  c.info << "20 loops";
  return c.finish();
}

// --- criterion 7 ---------------------------------------------------------

// Power law for commutant pairs, the c^2 criterion, C_{2m} closure, cube identities.
void commutant_laws(const LoopTable& q, Checker& c) {
  auto com = commutant(q);
  auto nuc = nuclei(q);
  const auto& cm = com.members();
  // powers 0..8 of each commutant element
  std::map<Element, std::vector<Element>> pw;
  for (auto a : cm) {
    auto& v = pw[a];
    for (long long k = 0; k <= 8; ++k) v.push_back(power(q, a, k));
  }
  bool ab = true;
  for (auto a : cm)
    for (auto b : cm)
      for (int k = 0; k <= 4 && ab; ++k)
        for (int l = 0; l <= 4 && ab; ++l)
          for (int m = 0; m <= 4 && ab; ++m)
            for (int n = 0; n <= 4 && ab; ++n) {
              auto lhs = q(q(pw[a][k], pw[b][l]), q(pw[a][m], pw[b][n]));
              auto rhs = q(pw[a][k + m], pw[b][l + n]);
              ab = lhs == rhs;
            }
  c.expect(ab, q.name() + ": power law for commutant pairs");

  for (auto x : cm)
    c.expect(nuc.left.contains(q(x, x)) == nuc.right.contains(x),
             q.name() + ": c^2 in LNuc iff c in RNuc for c=" + std::to_string(x));

  for (std::size_t m : {1, 2, 3})
    c.expect(is_subloop(q, commutant_prime_part(q, 2 * m)), q.name() + ": C_" + std::to_string(2 * m) + " subloop");

  bool cubes = true;
  for (Element x = 1; x <= q.order() && cubes; ++x) {
    Element x3 = power(q, x, 3);
    for (auto a : cm)
      for (auto b : cm) {
        Element a3 = pw[a][3];
        Element u = q(q(x, b), a3), v = q(q(x, a3), b), w = q(x, q(a3, b));
        Element s = q(q(x3, a), b), t = q(q(x3, b), a), r = q(x3, q(a, b));
        if (u != v || v != w || s != t || t != r) cubes = false;
      }
  }
  c.expect(cubes, q.name() + ": cube identities");
}

ClaimResult check_commutant_laws(const VerifyContext& ctx) {
  Checker c;
  auto catalog = structure_catalog(ctx.fixture_dir);
  for (const auto& q : catalog) commutant_laws(q, c);
  c.info << catalog.size() << " loops";
  return c.finish();
}

ClaimResult check_order_2k(const VerifyContext&) {
  Checker c;
  auto catalog = order_2k_catalog();
  // every left Bol loop of order 6
  for (auto& q : run_bol_oracle(6).representatives) catalog.push_back(q);
  for (const auto& q : catalog) {
    c.expect(is_left_bol(q), q.name() + " left Bol");
    c.expect(is_subloop(q, commutant(q)), q.name() + ": commutant is a subloop");
  }
  c.info << catalog.size() << " loops";
  return c.finish();
}

// --- criterion 8 ---------------------------------------------------------

void compare_extension(const ExtensionData& x, const std::string& label, Checker& c) {
  auto q = build_extension(x);
  auto ko = x.k.order();
  c.expect(bol_conditions(x) == is_left_bol(q), label + ": Bol condition");
  c.expect(group_conditions(x) == is_associative(q), label + ": group condition");
  c.expect(to_element_set(right_nucleus_members(x), ko) == right_nucleus(q), label + ": right nucleus");
  c.expect(to_element_set(commutant_members(x), ko) == commutant(q), label + ": commutant");
}

ExtensionData q9_extension(const gf2::Q9Params& p) {
  auto f2 = gf2::associated_cocycle(gf2::q9_cmap(p));
  GroupTable k(cyclic_group(2));
  auto e = elementary_abelian_2group(3);
  std::vector<Element> vals;
  for (gf2::Vec2 a = 0; a < 8; ++a)
    for (gf2::Vec2 b = 0; b < 8; ++b) vals.push_back(static_cast<Element>(1 + f2(a, b)));
  auto tau = TauMap::trivial(e, k);
  Cocycle f(e, k, std::move(vals));
  return ExtensionData{k, e, tau, f};
}

ExtensionData random_extension(std::mt19937& rng) {
  static const std::vector<LoopTable> smalls = {cyclic_group(1), cyclic_group(2), cyclic_group(3),
                                                cyclic_group(4), elementary_abelian_2group(2)};
  std::uniform_int_distribution<std::size_t> pick(0, smalls.size() - 1);
  GroupTable k(smalls[pick(rng)]);
  auto e = smalls[pick(rng)];
  auto aut = automorphism_group(k);
  std::uniform_int_distribution<std::size_t> pick_aut(0, aut.size() - 1);
  std::vector<Automorphism> assign{Automorphism::identity(k)};
  for (std::size_t a = 2; a <= e.order(); ++a) assign.push_back(aut[pick_aut(rng)]);
  std::uniform_int_distribution<int> coin(0, 1);
  std::uniform_int_distribution<Element> elem(1, static_cast<Element>(k.order()));
  // half the cases keep f trivial, where Bol loops are far more common
  bool twist = coin(rng);
  std::vector<Element> vals;
  for (std::size_t a = 1; a <= e.order(); ++a)
    for (std::size_t b = 1; b <= e.order(); ++b)
      vals.push_back(a == 1 || b == 1 || !twist ? Element{1} : elem(rng));
  TauMap tau(e, k, std::move(assign));
  Cocycle f(e, k, std::move(vals));
  return ExtensionData{k, e, tau, f};
}

ClaimResult check_extension_conditions(const VerifyContext& ctx) {
  Checker c;
  std::size_t count = 0;
  for (auto which : {NamedExample::order12, NamedExample::order16cyclic, NamedExample::order16elem}) {
    compare_extension(named_example_data(which), std::string(to_string(which)), c);
    ++count;
  }
  for (std::size_t n = 3; n <= 8; ++n) {
    compare_extension(named_example_data(NamedExample::order4n, {.n = n}), "order4n:" + std::to_string(n), c);
    ++count;
  }
  for (std::size_t k = 3; k <= 7; ++k) {
    compare_extension(named_example_data(NamedExample::commutant_order, {.k = k}),
                      "commutant:" + std::to_string(k), c);
    ++count;
  }
  for (const auto& p : gf2::q9_representatives()) {
    auto x = q9_extension(p);
    c.expect(build_extension(x) == gf2::build_q9(p), "q9 " + gf2::to_string(p) + ": same table as extension");
    compare_extension(x, "q9 " + gf2::to_string(p), c);
    ++count;
  }
  std::mt19937 rng(ctx.seed);
  std::size_t bol = 0;
  for (std::size_t i = 0; i < ctx.random_extensions; ++i) {
    auto x = random_extension(rng);
    if (is_left_bol(build_extension(x))) ++bol;
    compare_extension(x, "random #" + std::to_string(i), c);
  }
  c.info << count << " catalog extensions, " << ctx.random_extensions << " random (" << bol << " Bol)";
  return c.finish();
}

// --- criterion 9 ---------------------------------------------------------

ClaimResult check_order8_oracle(const VerifyContext& ctx) {
  Checker c;
  auto r = run_bol_oracle(8, ctx.oracle_budget);
  c.expect(r.all_commutants_subloops, "every commutant a subloop");
  c.expect(r.associative_classes == 5, "5 group classes (got " + std::to_string(r.associative_classes) + ")");
  c.info << r.tables << " tables, " << r.classes << " classes (" << r.associative_classes << " groups, "
         << r.nonassociative_classes << " nonassociative), " << r.nodes << " nodes";
  return c.finish();
}

// --- criterion 10 --------------------------------------------------------

ClaimResult check_free_parameters(const VerifyContext&) {
  Checker c;
  // all 2^21 maps with c(0, .) = 0
  std::set<std::vector<int>> solutions;
  gf2::CMap m(3);
  for (std::uint32_t bits = 0; bits < (1u << 21); ++bits) {
    for (std::uint32_t s = 0; s < 21; ++s) m.set(1 + s / 3, s % 3, (bits >> s) & 1u);
    if (!gf2::satisfies_q9_constraints(m)) continue;
    std::vector<int> v;
    for (gf2::Vec2 e = 1; e < 8; ++e)
      for (std::size_t i = 0; i < 3; ++i) v.push_back(m(e, i));
    solutions.insert(v);
  }
  std::set<std::vector<int>> family;
  for (const auto& mem : gf2::enumerate_q9()) {
    auto cm = gf2::q9_cmap(mem.params);
    std::vector<int> v;
    for (gf2::Vec2 e = 1; e < 8; ++e)
      for (std::size_t i = 0; i < 3; ++i) v.push_back(cm(e, i));
    family.insert(v);
  }
  auto formula = gf2::q9_free_parameter_formula(3);
  auto elim = gf2::q9_constraint_free_bits(3);
  c.expect(solutions.size() == 512, "2^9 solutions (got " + std::to_string(solutions.size()) + ")");
  c.expect(formula == 9, "formula gives 9");
  c.expect(elim && *elim == 9, "elimination gives 9 free bits");
  c.expect(solutions == family, "solutions are exactly the parametrized family");
  c.info << solutions.size() << " solutions, formula " << formula;
  return c.finish();
}

// --- criterion 11 --------------------------------------------------------

ClaimResult check_tiny_iso(const VerifyContext&) {
  Checker c;
  std::ostringstream counts;
  std::size_t total = 0;
  for (std::size_t n = 1; n <= 5; ++n) {
    auto loops = all_normalized_loops(n);
    total += loops.size();
    auto classes = classify(loops);
    std::vector<std::size_t> class_of(loops.size());
    for (std::size_t k = 0; k < classes.size(); ++k)
      for (auto m : classes[k].members) class_of[m] = k;
    for (std::size_t i = 0; i < loops.size(); ++i)
      for (std::size_t j = i + 1; j < loops.size(); ++j)
        c.expect((class_of[i] == class_of[j]) == brute_force_isomorphic(loops[i], loops[j]),
                 "order " + std::to_string(n) + " pair " + std::to_string(i) + "," + std::to_string(j));
    counts << (n > 1 ? "," : "") << classes.size();
  }
  c.info << total << " loops, classes by order " << counts.str();
  return c.finish();
}

ClaimResult with_id(const ClaimCheck& check, ClaimResult r) {
  r.id = check.id;
  r.citation = check.citation;
  return r;
}

}  // namespace

// --- catalogs ------------------------------------------------------------

std::vector<LoopTable> non_subloop_commutant_catalog() {
  auto out = order16_catalog();
  out.push_back(build_named_example(NamedExample::order12));
  return out;
}

std::vector<LoopTable> structure_catalog(const std::string& fixture_dir) {
  auto base = non_subloop_commutant_catalog();
  std::vector<LoopTable> out = base;
  auto z2 = cyclic_group(2), z3 = cyclic_group(3);
  for (const auto& q : base) out.push_back(direct_product(q, z2).with_name(q.name() + " x Z2"));
  out.push_back(direct_product(base.back(), z3).with_name(base.back().name() + " x Z3"));
  auto bol8 = load_table(fixture_dir + "/bol8_commutant_rnuc.tbl");
  out.push_back(bol8);
  out.push_back(direct_product(bol8, z2).with_name(bol8.name() + " x Z2"));
  out.push_back(direct_product(bol8, z3).with_name(bol8.name() + " x Z3"));
  out.push_back(load_table(fixture_dir + "/bol16_trivial_lnuc.tbl"));
  out.push_back(build_named_example(NamedExample::order16cyclic));
  out.push_back(build_named_example(NamedExample::order16elem));
  for (std::size_t n = 3; n <= 8; ++n) out.push_back(build_named_example(NamedExample::order4n, {.n = n}));
  for (std::size_t k = 3; k <= 7; ++k) out.push_back(build_named_example(NamedExample::commutant_order, {.k = k}));
  out.push_back(dihedral_group(4));
  out.push_back(dihedral_group(3));
  out.push_back(cyclic_group(9));
  return out;
}

std::vector<LoopTable> order_2k_catalog() {
  std::vector<LoopTable> out;
  for (std::size_t k : {1, 3, 5, 7, 9}) {
    out.push_back(cyclic_group(2 * k));
    if (k > 1) out.push_back(dihedral_group(k));
  }
  out.push_back(direct_product(dihedral_group(3), cyclic_group(3)).with_name("D6 x Z3"));
  return out;
}

std::vector<LoopTable> all_normalized_loops(std::size_t n) {
  if (n == 0 || n > 5) throw Error(ErrorKind::BadParams, "tiny loop enumeration needs 1 <= n <= 5");
  std::vector<LoopTable> out;
  std::vector<Element> cells(n * n, 0);
  for (std::size_t x = 0; x < n; ++x) cells[x] = cells[x * n] = static_cast<Element>(x + 1);
  // plain backtracking over rows 2..n, columns 2..n
  std::function<void(std::size_t)> fill = [&](std::size_t idx) {
    if (idx == n * n) {
      out.emplace_back(n, cells, "L" + std::to_string(n) + "-" + std::to_string(out.size() + 1));
      return;
    }
    std::size_t r = idx / n, c = idx % n;
    if (r == 0 || c == 0) return fill(idx + 1);
    for (Element v = 1; v <= n; ++v) {
      bool ok = true;
      for (std::size_t j = 0; j < c && ok; ++j) ok = cells[r * n + j] != v;
      for (std::size_t i = 0; i < r && ok; ++i) ok = cells[i * n + c] != v;
      if (!ok) continue;
      cells[idx] = v;
      fill(idx + 1);
      cells[idx] = 0;
    }
  };
  fill(0);
  return out;
}

bool brute_force_isomorphic(const LoopTable& a, const LoopTable& b) {
  if (a.order() != b.order()) return false;
  std::size_t n = a.order();
  std::vector<Element> img(n);
  std::iota(img.begin(), img.end(), Element{1});
  do {
    bool ok = true;
    for (std::size_t x = 1; x <= n && ok; ++x)
      for (std::size_t y = 1; y <= n && ok; ++y)
        ok = img[a(static_cast<Element>(x), static_cast<Element>(y)) - 1] == b(img[x - 1], img[y - 1]);
    if (ok) return true;
  } while (std::next_permutation(img.begin() + 1, img.end()));
  return false;
}

// --- report --------------------------------------------------------------

const std::vector<ClaimCheck>& claim_checks() {
  static const std::vector<ClaimCheck> checks = {
      {"sec3-order8-example", "order-8 example: C = RNuc = {1,2,3,4}, generated by 4 and 5", 1, 1.0,
       check_order8_example},
      {"sec5-order12", "order-12 semidirect product with commutant of order 3", 2, 1.0, check_order12},
      {"sec5-order16-semidirect", "order-16 semidirect products with 9 and 13 involutions", 3, 1.0,
       check_order16_semidirect},
      {"sec6-q9-family", "512 cocycle loops: left Bol, |C| = 6, C not a subloop, C in RNuc", 4, 60.0,
       check_q9_family},
      {"sec6-19-noniso", "19 listed parameter tuples are pairwise non-isomorphic", 4, 60.0, check_q9_noniso},
      {"sec6-q9-classes", "512 cocycle loops fall into the 19 listed classes", 4, 60.0, check_q9_classes},
      {"sec6-exceptional", "loop with trivial left nucleus; 21 loops with non-subloop commutant", 5, 5.0,
       check_exceptional},
      {"sec3-coprime3", "<C> abelian with R|<C> a homomorphism on the order-16 loops", 6, 30.0, check_coprime3},
      {"sec2-commutant-laws", "power law, c^2 criterion, C_2m closure and cube identities", 7, 60.0,
       check_commutant_laws},
      {"sec2-order-2k", "commutant of a Bol loop of order 2k, k odd, is a subloop", 7, 60.0, check_order_2k},
      {"sec4-extension-conditions", "extension criteria agree with direct table checks", 8, 60.0,
       check_extension_conditions},
      {"sec5-order8-oracle", "no left Bol loop of order 8 has a non-subloop commutant", 9, 600.0,
       check_order8_oracle},
      {"sec6-free-parameters", "free-parameter count (2^n-4)(n-2)+3n-4 at n = 3", 10, 5.0, check_free_parameters},
      {"iso-tiny-oracle", "classification matches brute force on all loops of order <= 5", 11, 60.0,
       check_tiny_iso},
  };
  return checks;
}

bool VerificationReport::all_pass() const {
  return std::all_of(claims.begin(), claims.end(), [](const ClaimResult& c) { return c.pass; });
}

std::string VerificationReport::render(bool with_timing) const {
  std::ostringstream out;
  for (const auto& c : claims) {
    out << (c.pass ? "PASS " : "FAIL ") << c.id << " [" << c.citation << "] " << c.details;
    if (with_timing) out << " (" << c.seconds << " s)";
    out << "\n";
  }
  out << (all_pass() ? "all claims pass" : "some claims FAILED") << "\n";
  return out.str();
}

VerificationReport verify_paper(const VerifyContext& ctx) {
  VerificationReport report;
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
    report.claims.push_back(with_id(check, std::move(r)));
  }
  return report;
}

}  // namespace bolkit
