#include "bolkit/structure.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <unordered_set>

namespace bolkit {

// ---------------------------------------------------------------------------
// ElementSet

ElementSet::ElementSet(std::vector<Element> xs) : members_(std::move(xs)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

ElementSet ElementSet::all(std::size_t n) {
  std::vector<Element> xs(n);
  std::iota(xs.begin(), xs.end(), Element{1});
  return ElementSet(std::move(xs));
}

bool ElementSet::contains(Element x) const noexcept {
  return std::binary_search(members_.begin(), members_.end(), x);
}

bool ElementSet::is_subset_of(const ElementSet& other) const {
  return std::includes(other.members_.begin(), other.members_.end(), members_.begin(),
                       members_.end());
}

ElementSet intersect(const ElementSet& a, const ElementSet& b) {
  std::vector<Element> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return ElementSet(std::move(out));
}

std::string to_string(const ElementSet& s) {
  std::string out = "{";
  bool first = true;
  for (Element x : s) {
    if (!first) out += ',';
    out += std::to_string(x);
    first = false;
  }
  return out + "}";
}

// ---------------------------------------------------------------------------
// Identities

std::string_view to_string(Identity id) {
  switch (id) {
    case Identity::left_bol: return "left_bol";
    case Identity::right_bol: return "right_bol";
    case Identity::moufang: return "moufang";
    case Identity::associative: return "associative";
    case Identity::commutative: return "commutative";
    case Identity::left_power_alternative: return "left_power_alternative";
  }
  return "unknown";
}

namespace {

template <typename Pred>
bool all_triples(const LoopTable& q, Pred pred) {
  auto n = static_cast<Element>(q.order());
  for (Element x = 1; x <= n; ++x)
    for (Element y = 1; y <= n; ++y)
      for (Element z = 1; z <= n; ++z)
        if (!pred(x, y, z)) return false;
  return true;
}

bool left_power_alternative(const LoopTable& q) {
  auto n = static_cast<Element>(q.order());
  for (Element x = 1; x <= n; ++x) {
    std::size_t ord = element_order(q, x);
    // row of L_x^m, starting at m = 0
    std::vector<Element> lm(n);
    std::iota(lm.begin(), lm.end(), Element{1});
    Element xm = 1;
    for (std::size_t m = 0; m <= ord; ++m) {
      for (Element y = 1; y <= n; ++y)
        if (lm[y - 1] != q(xm, y)) return false;
      for (auto& v : lm) v = q(x, v);
      xm = q(x, xm);
    }
  }
  return true;
}

}  // namespace

bool check_identity(const LoopTable& q, Identity which) {
  switch (which) {
    case Identity::left_bol:
      return all_triples(q, [&](Element x, Element y, Element z) {
        return q(x, q(y, q(x, z))) == q(q(x, q(y, x)), z);
      });
    case Identity::right_bol:
      return all_triples(q, [&](Element x, Element y, Element z) {
        return q(q(q(z, x), y), x) == q(z, q(q(x, y), x));
      });
    case Identity::moufang:
      return all_triples(q, [&](Element x, Element y, Element z) {
        return q(x, q(y, q(x, z))) == q(q(q(x, y), x), z);
      });
    case Identity::associative:
      return all_triples(q, [&](Element x, Element y, Element z) {
        return q(x, q(y, z)) == q(q(x, y), z);
      });
    case Identity::commutative: {
      auto n = static_cast<Element>(q.order());
      for (Element x = 1; x <= n; ++x)
        for (Element y = x + 1; y <= n; ++y)
          if (q(x, y) != q(y, x)) return false;
      return true;
    }
    case Identity::left_power_alternative:
      return left_power_alternative(q);
  }
  return false;
}

// ---------------------------------------------------------------------------
// Commutant and nuclei

ElementSet commutant(const LoopTable& q) {
  auto n = static_cast<Element>(q.order());
  std::vector<Element> out;
  for (Element c = 1; c <= n; ++c) {
    bool ok = true;
    for (Element x = 1; x <= n && ok; ++x) ok = q(c, x) == q(x, c);
    if (ok) out.push_back(c);
  }
  return ElementSet(std::move(out));
}

namespace {

template <typename Pred>
ElementSet nucleus_by(const LoopTable& q, Pred associates) {
  auto n = static_cast<Element>(q.order());
  std::vector<Element> out;
  for (Element a = 1; a <= n; ++a) {
    bool ok = true;
    for (Element x = 1; x <= n && ok; ++x)
      for (Element y = 1; y <= n && ok; ++y) ok = associates(a, x, y);
    if (ok) out.push_back(a);
  }
  return ElementSet(std::move(out));
}

}  // namespace

ElementSet left_nucleus(const LoopTable& q) {
  return nucleus_by(q, [&](Element a, Element x, Element y) {
    return q(a, q(x, y)) == q(q(a, x), y);
  });
}

ElementSet middle_nucleus(const LoopTable& q) {
  return nucleus_by(q, [&](Element a, Element x, Element y) {
    return q(x, q(a, y)) == q(q(x, a), y);
  });
}

ElementSet right_nucleus(const LoopTable& q) {
  return nucleus_by(q, [&](Element a, Element x, Element y) {
    return q(x, q(y, a)) == q(q(x, y), a);
  });
}

Nuclei nuclei(const LoopTable& q) {
  Nuclei r;
  r.left = left_nucleus(q);
  r.middle = middle_nucleus(q);
  r.right = right_nucleus(q);
  r.nucleus = intersect(intersect(r.left, r.middle), r.right);
  r.center = intersect(r.nucleus, commutant(q));
  return r;
}

ElementSet commutant_prime_part(const LoopTable& q, std::size_t m) {
  if (m < 2) throw Error(ErrorKind::BadParams, "commutant_prime_part needs m > 1");
  std::vector<Element> out;
  for (Element c : commutant(q))
    if (std::gcd(element_order(q, c), m) == 1) out.push_back(c);
  return ElementSet(std::move(out));
}

// ---------------------------------------------------------------------------
// Subloops

ElementSet generated_subloop(const LoopTable& q, const ElementSet& s) {
  std::size_t n = q.order();
  std::vector<bool> in(n + 1, false);
  std::vector<Element> members{1};
  in[1] = true;
  for (Element x : s)
    if (!in[x]) {
      in[x] = true;
      members.push_back(x);
    }
  // Each newly added element is combined with every earlier one in all
  // orders, so when the loop finishes every pair has been visited.
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      Element a = members[i], b = members[j];
      const Element cand[] = {q(a, b),       q(b, a),       q.ldiv(a, b), q.ldiv(b, a),
                              q.rdiv(a, b),  q.rdiv(b, a)};
      for (Element c : cand)
        if (!in[c]) {
          in[c] = true;
          members.push_back(c);
        }
    }
  }
  return ElementSet(std::move(members));
}

bool is_subloop(const LoopTable& q, const ElementSet& s) {
  if (!s.contains(1)) return false;
  return generated_subloop(q, s) == s;
}

namespace {

// Set {f(s) : s in S} as a sorted vector.
template <typename F>
std::vector<Element> image(const ElementSet& s, F f) {
  std::vector<Element> out;
  out.reserve(s.size());
  for (Element x : s) out.push_back(f(x));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

bool is_normal(const LoopTable& q, const ElementSet& s) {
  if (!is_subloop(q, s)) return false;
  auto n = static_cast<Element>(q.order());
  for (Element x = 1; x <= n; ++x) {
    auto xs = image(s, [&](Element t) { return q(x, t); });
    auto sx = image(s, [&](Element t) { return q(t, x); });
    if (xs != sx) return false;
    for (Element y = 1; y <= n; ++y) {
      auto xs_y = image(s, [&](Element t) { return q(q(x, t), y); });
      auto x_sy = image(s, [&](Element t) { return q(x, q(t, y)); });
      if (xs_y != x_sy) return false;
      auto sx_y = image(s, [&](Element t) { return q(q(t, x), y); });
      auto s_xy = image(s, [&](Element t) { return q(t, q(x, y)); });
      if (sx_y != s_xy) return false;
    }
  }
  return true;
}

LoopTable subloop_table(const LoopTable& q, const ElementSet& s) {
  if (!is_subloop(q, s)) throw Error(ErrorKind::NotSubloop, to_string(s) + " is not a subloop");
  std::vector<Element> pos(q.order() + 1, 0);
  Element k = 0;
  for (Element x : s) pos[x] = ++k;
  std::size_t m = s.size();
  std::vector<Element> cells(m * m);
  for (Element a : s)
    for (Element b : s) cells[(pos[a] - 1) * m + (pos[b] - 1)] = pos[q(a, b)];
  return LoopTable(m, std::move(cells));
}

std::vector<ElementSet> cosets(const LoopTable& q, const ElementSet& s) {
  auto n = static_cast<Element>(q.order());
  std::vector<int> owner(n + 1, -1);
  std::vector<ElementSet> out;
  for (Element x = 1; x <= n; ++x) {
    if (owner[x] >= 0) continue;
    ElementSet xs(image(s, [&](Element t) { return q(x, t); }));
    int id = -1;
    for (Element y : xs)
      if (owner[y] >= 0) {
        id = owner[y];
        break;
      }
    if (id >= 0) {
      if (!(out[static_cast<std::size_t>(id)] == xs))
        throw Error(ErrorKind::NotPartition, "left cosets overlap without coinciding");
      continue;
    }
    for (Element y : xs) owner[y] = static_cast<int>(out.size());
    out.push_back(std::move(xs));
  }
  return out;
}

LoopTable quotient(const LoopTable& q, const ElementSet& s) {
  if (!is_normal(q, s)) throw Error(ErrorKind::NotNormal, to_string(s) + " is not normal");
  auto cs = cosets(q, s);
  // cosets are discovered by smallest member, and the coset of 1 comes first
  std::vector<Element> block(q.order() + 1, 0);
  for (std::size_t i = 0; i < cs.size(); ++i)
    for (Element x : cs[i]) block[x] = static_cast<Element>(i + 1);
  std::size_t m = cs.size();
  std::vector<Element> cells(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      cells[i * m + j] = block[q(cs[i].members().front(), cs[j].members().front())];
  return LoopTable(m, std::move(cells));
}

// ---------------------------------------------------------------------------
// Multiplication group

namespace {

struct ImagesHash {
  std::size_t operator()(const std::vector<Element>& v) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (Element x : v) h = (h ^ x) * 1099511628211ull;
    return h;
  }
};

}  // namespace

PermGroup close_group(std::vector<Permutation> generators, std::size_t cap) {
  PermGroup g;
  std::size_t n = generators.empty() ? 0 : generators.front().degree();
  g.generators = std::move(generators);
  std::unordered_set<std::vector<Element>, ImagesHash> seen;
  std::deque<Permutation> frontier;
  auto id = Permutation::identity(n);
  seen.emplace(id.images().begin(), id.images().end());
  g.elements.push_back(id);
  frontier.push_back(id);
  while (!frontier.empty()) {
    Permutation p = std::move(frontier.front());
    frontier.pop_front();
    for (const auto& gen : g.generators) {
      Permutation r = p * gen;
      std::vector<Element> key(r.images().begin(), r.images().end());
      if (seen.insert(std::move(key)).second) {
        if (g.elements.size() >= cap)
          throw Error(ErrorKind::ClosureCapExceeded,
                      "permutation group closure exceeds " + std::to_string(cap));
        g.elements.push_back(r);
        frontier.push_back(std::move(r));
      }
    }
  }
  std::sort(g.elements.begin(), g.elements.end());
  return g;
}

PermGroup multiplication_group(const LoopTable& q, std::size_t cap) {
  std::vector<Permutation> gens;
  auto n = static_cast<Element>(q.order());
  for (Element a = 2; a <= n; ++a) {
    auto l = translation(q, a, Side::left);
    auto r = translation(q, a, Side::right);
    gens.push_back(l);
    if (r != l) gens.push_back(std::move(r));
  }
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  if (gens.empty()) gens.push_back(Permutation::identity(n));
  return close_group(std::move(gens), cap);
}

bool right_regular_is_homomorphism(const LoopTable& q, const ElementSet& s) {
  if (!is_subloop(q, s)) throw Error(ErrorKind::NotSubloop, to_string(s) + " is not a subloop");
  auto n = static_cast<Element>(q.order());
  for (Element a : s)
    for (Element b : s) {
      Element ab = q(a, b);
      for (Element x = 1; x <= n; ++x)
        if (q(x, ab) != q(q(x, a), b)) return false;
    }
  return true;
}

std::size_t involution_count(const LoopTable& q) {
  std::size_t count = 0;
  auto n = static_cast<Element>(q.order());
  for (Element a = 2; a <= n; ++a)
    if (q(a, a) == 1) ++count;
  return count;
}

// ---------------------------------------------------------------------------
// Report

std::string structure_report(const LoopTable& q) {
  std::string out;
  auto line = [&](std::string_view key, const std::string& value) {
    out.append(key).append(": ").append(value).append("\n");
  };
  auto flag = [](bool b) { return std::string(b ? "true" : "false"); };

  line("order", std::to_string(q.order()));
  for (Identity id : {Identity::left_bol, Identity::right_bol, Identity::moufang,
                      Identity::associative, Identity::commutative,
                      Identity::left_power_alternative})
    line(to_string(id), flag(check_identity(q, id)));

  auto c = commutant(q);
  auto nuc = nuclei(q);
  line("commutant", to_string(c));
  line("commutant_size", std::to_string(c.size()));
  line("commutant_is_subloop", flag(is_subloop(q, c)));
  line("commutant_in_right_nucleus", flag(c.is_subset_of(nuc.right)));
  line("generated_by_commutant", to_string(generated_subloop(q, c)));
  line("left_nucleus", to_string(nuc.left));
  line("middle_nucleus", to_string(nuc.middle));
  line("right_nucleus", to_string(nuc.right));
  line("nucleus", to_string(nuc.nucleus));
  line("center", to_string(nuc.center));
  line("involutions", std::to_string(involution_count(q)));
  return out;
}

}  // namespace bolkit
