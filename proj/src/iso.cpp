#include "bolkit/iso.hpp"

#include <algorithm>
#include <functional>

#include "bolkit/structure.hpp"

namespace bolkit {

IsoProfile invariant_profile(const LoopTable& q) {
  IsoProfile p;
  p.order = q.order();
  auto n = static_cast<Element>(q.order());
  for (Element a = 1; a <= n; ++a) p.order_spectrum.push_back(element_order(q, a));
  std::sort(p.order_spectrum.begin(), p.order_spectrum.end());
  auto nuc = nuclei(q);
  p.commutant_size = commutant(q).size();
  p.lnuc_size = nuc.left.size();
  p.mnuc_size = nuc.middle.size();
  p.rnuc_size = nuc.right.size();
  p.center_size = nuc.center.size();
  p.involutions = involution_count(q);
  if (check_identity(q, Identity::left_bol)) p.flags |= kLeftBol;
  if (check_identity(q, Identity::right_bol)) p.flags |= kRightBol;
  if (check_identity(q, Identity::moufang)) p.flags |= kMoufang;
  if (check_identity(q, Identity::associative)) p.flags |= kAssociative;
  if (check_identity(q, Identity::commutative)) p.flags |= kCommutative;
  return p;
}

std::string to_string(const IsoProfile& p) {
  std::string s = "order=" + std::to_string(p.order) + " spectrum=";
  for (std::size_t i = 0; i < p.order_spectrum.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(p.order_spectrum[i]);
  }
  s += " C=" + std::to_string(p.commutant_size);
  s += " LN=" + std::to_string(p.lnuc_size);
  s += " MN=" + std::to_string(p.mnuc_size);
  s += " RN=" + std::to_string(p.rnuc_size);
  s += " Z=" + std::to_string(p.center_size);
  s += " inv=" + std::to_string(p.involutions);
  s += " flags=";
  std::string f;
  if (p.flags & kLeftBol) f += "LB,";
  if (p.flags & kRightBol) f += "RB,";
  if (p.flags & kMoufang) f += "M,";
  if (p.flags & kAssociative) f += "A,";
  if (p.flags & kCommutative) f += "C,";
  if (f.empty()) f = "-";
  else f.pop_back();
  return s + f;
}

bool is_isomorphism(const LoopTable& q1, const LoopTable& q2, const Permutation& phi) {
  if (q1.order() != q2.order() || phi.degree() != q1.order()) return false;
  auto n = static_cast<Element>(q1.order());
  for (Element a = 1; a <= n; ++a)
    for (Element b = 1; b <= n; ++b)
      if (phi(q1(a, b)) != q2(phi(a), phi(b))) return false;
  return true;
}

namespace {

// Per-element invariant: order, sorted orders of the row products, and
// membership in commutant and nuclei.
std::vector<std::vector<std::size_t>> local_keys(const LoopTable& q) {
  auto n = static_cast<Element>(q.order());
  std::vector<std::size_t> ord(n + 1);
  for (Element a = 1; a <= n; ++a) ord[a] = element_order(q, a);
  auto nuc = nuclei(q);
  auto c = commutant(q);
  std::vector<std::vector<std::size_t>> keys(n + 1);
  for (Element a = 1; a <= n; ++a) {
    std::vector<std::size_t> row;
    row.reserve(n);
    for (Element b = 1; b <= n; ++b) row.push_back(ord[q(a, b)]);
    std::sort(row.begin(), row.end());
    auto& k = keys[a];
    k.push_back(ord[a]);
    k.push_back(static_cast<std::size_t>(c.contains(a)) | nuc.left.contains(a) << 1 |
                nuc.middle.contains(a) << 2 | nuc.right.contains(a) << 3);
    k.insert(k.end(), row.begin(), row.end());
  }
  return keys;
}

}  // namespace

std::optional<Permutation> find_isomorphism(const LoopTable& q1, const LoopTable& q2) {
  if (q1.order() != q2.order()) return std::nullopt;
  if (!(invariant_profile(q1) == invariant_profile(q2))) return std::nullopt;
  auto n = static_cast<Element>(q1.order());
  auto k1 = local_keys(q1);
  auto k2 = local_keys(q2);

  std::vector<std::vector<Element>> candidates(n + 1);
  for (Element a = 1; a <= n; ++a)
    for (Element b = 1; b <= n; ++b)
      if (k1[a] == k2[b]) candidates[a].push_back(b);

  struct State {
    std::vector<Element> phi;   // 0 = unassigned
    std::vector<Element> inv;   // inverse of phi on its image
    std::vector<Element> done;  // assigned elements of q1
  };

  // Assigns phi(a) = t and closes under products; false on conflict.
  auto assign = [&](State& s, Element a, Element t) {
    std::vector<std::pair<Element, Element>> queue{{a, t}};
    while (!queue.empty()) {
      auto [x, img] = queue.back();
      queue.pop_back();
      if (s.phi[x]) {
        if (s.phi[x] != img) return false;
        continue;
      }
      if (s.inv[img] || k1[x] != k2[img]) return false;
      s.phi[x] = img;
      s.inv[img] = x;
      s.done.push_back(x);
      for (Element y : s.done) {
        queue.emplace_back(q1(x, y), q2(img, s.phi[y]));
        queue.emplace_back(q1(y, x), q2(s.phi[y], img));
      }
    }
    return true;
  };

  State root{std::vector<Element>(n + 1, 0), std::vector<Element>(n + 1, 0), {}};
  if (!assign(root, 1, 1)) return std::nullopt;

  std::optional<Permutation> found;
  std::function<bool(const State&)> search = [&](const State& s) {
    Element x = 0;
    for (Element a = 1; a <= n; ++a)
      if (!s.phi[a]) {
        x = a;
        break;
      }
    if (!x) {
      found = Permutation(std::vector<Element>(s.phi.begin() + 1, s.phi.end()));
      return true;
    }
    for (Element t : candidates[x]) {
      if (s.inv[t]) continue;
      State next = s;
      if (assign(next, x, t) && search(next)) return true;
    }
    return false;
  };
  search(root);
  return found;
}

std::vector<IsoClass> classify(const std::vector<LoopTable>& loops) {
  std::vector<IsoProfile> profiles;
  profiles.reserve(loops.size());
  for (const auto& q : loops) profiles.push_back(invariant_profile(q));

  std::vector<IsoClass> classes;
  for (std::size_t i = 0; i < loops.size(); ++i) {
    bool placed = false;
    for (auto& cls : classes) {
      std::size_t r = cls.representative;
      if (!(profiles[r] == profiles[i])) continue;
      if (find_isomorphism(loops[r], loops[i])) {
        cls.members.push_back(i);
        placed = true;
        break;
      }
    }
    if (!placed) classes.push_back({i, {i}});
  }
  return classes;
}

std::string classification_report(const std::vector<LoopTable>& loops,
                                  const std::vector<IsoClass>& classes) {
  std::string out;
  for (std::size_t k = 0; k < classes.size(); ++k) {
    const auto& cls = classes[k];
    const auto& rep = loops[cls.representative];
    std::string name = rep.name().empty() ? "#" + std::to_string(cls.representative + 1) : rep.name();
    out += "class " + std::to_string(k + 1) + ": size " + std::to_string(cls.members.size()) +
           " representative " + name + " profile " + to_string(invariant_profile(rep)) + "\n";
  }
  return out;
}

}  // namespace bolkit
