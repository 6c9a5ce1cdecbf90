#include "bolkit/extensions.hpp"

#include <algorithm>
#include <functional>

namespace bolkit {

// ---------------------------------------------------------------------------
// GroupTable, Automorphism

GroupTable::GroupTable(LoopTable table) : table_(std::move(table)) {
  if (!is_associative(table_))
    throw Error(ErrorKind::NotGroup, "table '" + table_.name() + "' is not associative");
}

Automorphism::Automorphism(const GroupTable& k, Permutation perm) : perm_(std::move(perm)) {
  if (perm_.degree() != k.order())
    throw Error(ErrorKind::NotAutomorphism, "degree does not match the group order");
  auto n = static_cast<Element>(k.order());
  for (Element u = 1; u <= n; ++u)
    for (Element v = 1; v <= n; ++v)
      if (perm_(k(u, v)) != k(perm_(u), perm_(v)))
        throw Error(ErrorKind::NotAutomorphism, to_string(perm_) + " does not preserve products");
}

Automorphism Automorphism::identity(const GroupTable& k) {
  Automorphism a;
  a.perm_ = Permutation::identity(k.order());
  return a;
}

Automorphism Automorphism::after(const Automorphism& b) const {
  Automorphism r;
  r.perm_ = b.perm_ * perm_;
  return r;
}

std::vector<Automorphism> automorphism_group(const GroupTable& k) {
  std::size_t n = k.order();
  if (n > kMaxAutGroupOrder)
    throw Error(ErrorKind::TooLarge, "automorphism enumeration needs |K| <= 64");
  const LoopTable& t = k.table();

  // Greedy generating set in index order.
  std::vector<Element> gens;
  ElementSet span{1};
  for (Element x = 2; x <= n; ++x)
    if (!span.contains(x)) {
      gens.push_back(x);
      span = generated_subloop(t, ElementSet(gens));
    }
  std::vector<std::size_t> ord(n + 1);
  for (Element x = 1; x <= n; ++x) ord[x] = element_order(t, x);

  std::vector<Automorphism> out;
  std::vector<Element> phi(n + 1, 0);
  phi[1] = 1;

  // Extends phi through products of known elements; false on conflict.
  auto propagate = [&](std::vector<Element>& map) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (Element x = 1; x <= n; ++x) {
        if (!map[x]) continue;
        for (Element y = 1; y <= n; ++y) {
          if (!map[y]) continue;
          Element xy = t(x, y), img = t(map[x], map[y]);
          if (!map[xy]) {
            map[xy] = img;
            changed = true;
          } else if (map[xy] != img) {
            return false;
          }
        }
      }
    }
    return true;
  };

  std::function<void(std::size_t, std::vector<Element>)> search =
      [&](std::size_t gi, std::vector<Element> map) {
        if (gi == gens.size()) {
          std::vector<Element> img(map.begin() + 1, map.end());
          std::vector<bool> hit(n + 1, false);
          for (Element v : img) {
            if (!v || hit[v]) return;
            hit[v] = true;
          }
          out.emplace_back(k, Permutation(std::move(img)));
          return;
        }
        Element g = gens[gi];
        for (Element cand = 2; cand <= n; ++cand) {
          if (ord[cand] != ord[g]) continue;
          auto next = map;
          next[g] = cand;
          if (propagate(next)) search(gi + 1, std::move(next));
        }
      };
  search(0, phi);
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// TauMap, Cocycle

TauMap::TauMap(const LoopTable& e, const GroupTable& k, std::vector<Automorphism> assignment)
    : assignment_(std::move(assignment)) {
  if (assignment_.size() != e.order())
    throw Error(ErrorKind::BadParams, "tau needs one automorphism per element of E");
  for (const auto& a : assignment_)
    if (a.perm().degree() != k.order())
      throw Error(ErrorKind::BadParams, "tau value acts on a group of the wrong order");
  if (!assignment_.front().is_identity())
    throw Error(ErrorKind::BadParams, "tau_1 must be the identity automorphism");
}

TauMap TauMap::trivial(const LoopTable& e, const GroupTable& k) {
  return TauMap(e, k, std::vector<Automorphism>(e.order(), Automorphism::identity(k)));
}

Cocycle::Cocycle(const LoopTable& e, const GroupTable& k, std::vector<Element> values)
    : n_(e.order()), values_(std::move(values)) {
  if (values_.size() != n_ * n_) throw Error(ErrorKind::BadParams, "cocycle needs |E|^2 values");
  for (Element v : values_)
    if (v < 1 || v > k.order()) throw Error(ErrorKind::BadParams, "cocycle value outside K");
  for (std::size_t a = 0; a < n_; ++a)
    if (values_[a] != 1 || values_[a * n_] != 1)
      throw Error(ErrorKind::BadParams, "cocycle must satisfy f(1,a) = f(a,1) = 1");
}

Cocycle Cocycle::trivial(const LoopTable& e, const GroupTable& k) {
  return Cocycle(e, k, std::vector<Element>(e.order() * e.order(), 1));
}

// ---------------------------------------------------------------------------
// Construction

LoopTable build_extension(const ExtensionData& x) {
  const auto& k = x.k;
  const auto& e = x.e;
  std::size_t nk = k.order(), ne = e.order(), n = nk * ne;
  std::vector<Element> cells(n * n);
  for (Element a = 1; a <= ne; ++a)
    for (Element u = 1; u <= nk; ++u) {
      Element row = pair_index(nk, u, a);
      for (Element b = 1; b <= ne; ++b) {
        Element fab = x.f(a, b);
        Element ab = e(a, b);
        for (Element v = 1; v <= nk; ++v) {
          Element w = k(k(u, x.tau[a](v)), fab);
          cells[(row - 1) * n + (pair_index(nk, v, b) - 1)] = pair_index(nk, w, ab);
        }
      }
    }
  return LoopTable(n, std::move(cells));
}

LoopTable build_semidirect(const GroupTable& k, const LoopTable& e, const TauMap& tau) {
  return build_extension({k, e, tau, Cocycle::trivial(e, k)});
}

// ---------------------------------------------------------------------------
// Condition equations

bool bol_conditions(const ExtensionData& x) {
  const auto& k = x.k;
  const auto& e = x.e;
  const auto& tau = x.tau;
  const auto& f = x.f;
  if (!is_left_bol(e)) return false;
  auto ne = static_cast<Element>(e.order());
  auto nk = static_cast<Element>(k.order());
  for (Element a = 1; a <= ne; ++a)
    for (Element b = 1; b <= ne; ++b) {
      Element ba = e(b, a);
      Element a_ba = e(a, ba);
      // tau_a(f(b,a)) f(a,ba)
      Element prefix = k(tau[a](f(b, a)), f(a, ba));
      for (Element c = 1; c <= ne; ++c) {
        Element ac = e(a, c);
        Element lhs = k(prefix, f(a_ba, c));
        Element rhs = k(k(tau[a](tau[b](f(a, c))), tau[a](f(b, ac))), f(a, e(b, ac)));
        if (lhs != rhs) return false;
      }
      for (Element w = 1; w <= nk; ++w) {
        Element lhs = k(prefix, tau[a_ba](w));
        Element rhs = k(tau[a](tau[b](tau[a](w))), prefix);
        if (lhs != rhs) return false;
      }
    }
  return true;
}

bool group_conditions(const ExtensionData& x) {
  const auto& k = x.k;
  const auto& e = x.e;
  const auto& tau = x.tau;
  const auto& f = x.f;
  if (!is_associative(e)) return false;
  auto ne = static_cast<Element>(e.order());
  auto nk = static_cast<Element>(k.order());
  for (Element a = 1; a <= ne; ++a)
    for (Element b = 1; b <= ne; ++b) {
      Element ab = e(a, b);
      for (Element c = 1; c <= ne; ++c)
        if (k(tau[a](f(b, c)), f(a, e(b, c))) != k(f(a, b), f(ab, c))) return false;
      for (Element w = 1; w <= nk; ++w)
        if (k(tau[a](tau[b](w)), f(a, b)) != k(f(a, b), tau[ab](w))) return false;
    }
  return true;
}

std::vector<Pair> right_nucleus_members(const ExtensionData& x) {
  const auto& k = x.k;
  const auto& e = x.e;
  const auto& tau = x.tau;
  const auto& f = x.f;
  auto ne = static_cast<Element>(e.order());
  auto nk = static_cast<Element>(k.order());
  auto rnuc_e = right_nucleus(e);
  std::vector<Pair> out;
  for (Element c : rnuc_e)
    for (Element w = 1; w <= nk; ++w) {
      bool ok = true;
      for (Element a = 1; a <= ne && ok; ++a)
        for (Element b = 1; b <= ne && ok; ++b) {
          Element ab = e(a, b);
          Element lhs = k(k(f(a, b), tau[ab](w)), f(ab, c));
          Element rhs = k(k(tau[a](tau[b](w)), tau[a](f(b, c))), f(a, e(b, c)));
          ok = lhs == rhs;
        }
      if (ok) out.emplace_back(w, c);
    }
  return out;
}

std::vector<Pair> commutant_members(const ExtensionData& x) {
  const auto& k = x.k;
  const auto& e = x.e;
  const auto& tau = x.tau;
  const auto& f = x.f;
  auto ne = static_cast<Element>(e.order());
  auto nk = static_cast<Element>(k.order());
  auto ce = commutant(e);
  std::vector<Pair> out;
  for (Element a : ce)
    for (Element u = 1; u <= nk; ++u) {
      bool ok = true;
      for (Element v = 1; v <= nk && ok; ++v) ok = tau[a](v) == k(k(k.inv(u), v), u);
      for (Element b = 1; b <= ne && ok; ++b)
        ok = tau[b](u) == k(k(u, f(a, b)), k.inv(f(b, a)));
      if (ok) out.emplace_back(u, a);
    }
  return out;
}

ElementSet to_element_set(const std::vector<Pair>& pairs, std::size_t k_order) {
  std::vector<Element> xs;
  xs.reserve(pairs.size());
  for (auto [u, a] : pairs) xs.push_back(pair_index(k_order, u, a));
  return ElementSet(std::move(xs));
}

bool is_semihomomorphism(const LoopTable& e, const TauMap& tau) {
  auto ne = static_cast<Element>(e.order());
  for (Element a = 1; a <= ne; ++a)
    for (Element b = 1; b <= ne; ++b)
      if (tau[e(a, e(b, a))] != tau[a].after(tau[b]).after(tau[a])) return false;
  return true;
}

bool is_homomorphism(const LoopTable& e, const TauMap& tau) {
  auto ne = static_cast<Element>(e.order());
  for (Element a = 1; a <= ne; ++a)
    for (Element b = 1; b <= ne; ++b)
      if (tau[e(a, b)] != tau[a].after(tau[b])) return false;
  return true;
}

KerFix ker_fix(const LoopTable& e, const GroupTable& k, const TauMap& tau) {
  std::vector<Element> ker, fix;
  auto ne = static_cast<Element>(e.order());
  auto nk = static_cast<Element>(k.order());
  for (Element a = 1; a <= ne; ++a)
    if (tau[a].is_identity()) ker.push_back(a);
  for (Element u = 1; u <= nk; ++u) {
    bool fixed = true;
    for (Element a = 1; a <= ne && fixed; ++a) fixed = tau[a](u) == u;
    if (fixed) fix.push_back(u);
  }
  return {ElementSet(std::move(ker)), ElementSet(std::move(fix))};
}

ElementSet embedded_kernel(std::size_t k_order) {
  return ElementSet::all(k_order);
}

// ---------------------------------------------------------------------------
// Named examples

std::string_view to_string(NamedExample which) {
  switch (which) {
    case NamedExample::order12: return "order12";
    case NamedExample::order16cyclic: return "order16cyclic";
    case NamedExample::order16elem: return "order16elem";
    case NamedExample::order4n: return "order4n";
    case NamedExample::commutant_order: return "commutant_order";
  }
  return "unknown";
}

namespace {

// Inversion k -> k^-1 on Z_n.
Automorphism cyclic_inversion(const GroupTable& k) {
  std::vector<Element> img(k.order());
  for (Element u = 1; u <= k.order(); ++u) img[u - 1] = k.inv(u);
  return Automorphism(k, Permutation(std::move(img)));
}

// tau on (Z2)^2 with tau_1 = tau_e1 = tau_e2 = 1 and tau_{e1e2} = phi.
ExtensionData klein_semidirect(GroupTable k, const Automorphism& phi) {
  LoopTable e = elementary_abelian_2group(2);
  auto id = Automorphism::identity(k);
  TauMap tau(e, k, {id, id, id, phi});
  Cocycle f = Cocycle::trivial(e, k);
  return {std::move(k), std::move(e), std::move(tau), std::move(f)};
}

}  // namespace

ExtensionData named_example_data(NamedExample which, const NamedParams& params) {
  switch (which) {
    case NamedExample::order12: {
      GroupTable k(cyclic_group(3));
      auto phi = cyclic_inversion(k);
      return klein_semidirect(std::move(k), phi);
    }
    case NamedExample::order16cyclic: {
      GroupTable k(cyclic_group(4));
      auto psi = cyclic_inversion(k);
      return klein_semidirect(std::move(k), psi);
    }
    case NamedExample::order16elem: {
      // K = <k1,k2> listed as 1, k1, k2, k1k2; k1 -> k1, k2 -> k1k2
      GroupTable k(elementary_abelian_2group(2));
      Automorphism t(k, Permutation({1, 2, 4, 3}));
      return klein_semidirect(std::move(k), t);
    }
    case NamedExample::order4n: {
      if (params.n <= 2) throw Error(ErrorKind::BadParams, "order4n needs n > 2");
      if (4 * params.n > kMaxOrder) throw Error(ErrorKind::BadParams, "order4n: n too large");
      GroupTable k(cyclic_group(params.n));
      auto psi = cyclic_inversion(k);
      return klein_semidirect(std::move(k), psi);
    }
    case NamedExample::commutant_order: {
      std::size_t kk = params.k;
      if (kk <= 2) throw Error(ErrorKind::BadParams, "commutant_order needs k > 2");
      std::size_t m = params.m;
      if (m == 0)
        while ((std::size_t{1} << m) <= kk) ++m;
      if (m < 2 || m > 10 || (std::size_t{1} << m) <= kk)
        throw Error(ErrorKind::BadParams, "commutant_order needs 2 <= m <= 10 and 2^m > k");
      GroupTable k(cyclic_group(3));
      auto phi = cyclic_inversion(k);
      auto id = Automorphism::identity(k);
      LoopTable e = elementary_abelian_2group(m);
      std::size_t ne = e.order();
      // a = e1 (index 2), b = e2 (index 3), ab = index 4 carries phi. The
      // kernel is filled with the lowest remaining indices so that phi sits
      // on the lexicographically last elements.
      std::vector<Automorphism> assign(ne, phi);
      assign[0] = assign[1] = assign[2] = id;
      for (std::size_t i = 4, need = kk - 3; need > 0; ++i, --need) assign[i] = id;
      TauMap tau(e, k, std::move(assign));
      Cocycle f = Cocycle::trivial(e, k);
      return {std::move(k), std::move(e), std::move(tau), std::move(f)};
    }
  }
  throw Error(ErrorKind::BadParams, "unknown example");
}

LoopTable build_named_example(NamedExample which, const NamedParams& params) {
  auto data = named_example_data(which, params);
  std::string name(to_string(which));
  if (which == NamedExample::order4n) name += ":" + std::to_string(params.n);
  if (which == NamedExample::commutant_order) name += ":" + std::to_string(params.k);
  return build_extension(data).with_name(std::move(name));
}

}  // namespace bolkit
