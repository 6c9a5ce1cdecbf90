#pragma once

// Left-nuclear extensions Q(K,E,tau,f) of a group K by a loop E:
//
//   (u,a)(v,b) = (u tau_a(v) f(a,b), a*b)
//
// together with the condition equations that decide when the result is Bol,
// a group, and which pairs lie in its right nucleus and commutant.
//
// Pairs (u,a) are encoded as the single index u + |K|(a-1). Products of
// automorphisms read right to left: tau_a tau_b (w) = tau_a(tau_b(w)).

#include <string>
#include <utility>
#include <vector>

#include "bolkit/loop.hpp"
#include "bolkit/structure.hpp"

namespace bolkit {

/// A loop table verified to be associative.
class GroupTable {
 public:
  /// Throws NotGroup.
  explicit GroupTable(LoopTable table);

  const LoopTable& table() const noexcept { return table_; }
  std::size_t order() const noexcept { return table_.order(); }
  Element operator()(Element a, Element b) const noexcept { return table_(a, b); }
  Element inv(Element a) const noexcept { return table_.ldiv(a, 1); }

 private:
  LoopTable table_;
};

/// Product-preserving bijection of a group.
class Automorphism {
 public:
  /// Throws NotAutomorphism.
  Automorphism(const GroupTable& k, Permutation perm);
  static Automorphism identity(const GroupTable& k);

  Element operator()(Element u) const noexcept { return perm_(u); }
  const Permutation& perm() const noexcept { return perm_; }
  bool is_identity() const noexcept { return perm_.is_identity(); }

  /// (a.after(b))(u) = a(b(u))
  Automorphism after(const Automorphism& b) const;

  friend bool operator==(const Automorphism&, const Automorphism&) = default;
  friend auto operator<=>(const Automorphism&, const Automorphism&) = default;

 private:
  Automorphism() = default;
  Permutation perm_;
};

inline constexpr std::size_t kMaxAutGroupOrder = 64;

/// Aut(K) sorted by image sequence (identity first). Throws TooLarge when
/// |K| > 64.
std::vector<Automorphism> automorphism_group(const GroupTable& k);

/// tau: E -> Aut(K) with tau_1 = 1.
class TauMap {
 public:
  /// Throws BadParams on size mismatch or when tau_1 is not the identity.
  TauMap(const LoopTable& e, const GroupTable& k, std::vector<Automorphism> assignment);
  static TauMap trivial(const LoopTable& e, const GroupTable& k);

  const Automorphism& operator[](Element a) const noexcept { return assignment_[a - 1]; }
  std::size_t size() const noexcept { return assignment_.size(); }

 private:
  std::vector<Automorphism> assignment_;
};

/// f: E x E -> K with f(a,1) = f(1,a) = 1.
class Cocycle {
 public:
  /// values is row-major |E| x |E|. Throws BadParams when the normalization
  /// fails or an entry is not an element of K.
  Cocycle(const LoopTable& e, const GroupTable& k, std::vector<Element> values);
  static Cocycle trivial(const LoopTable& e, const GroupTable& k);

  Element operator()(Element a, Element b) const noexcept { return values_[(a - 1) * n_ + (b - 1)]; }

 private:
  std::size_t n_;
  std::vector<Element> values_;
};

/// Everything describing Q(K,E,tau,f).
struct ExtensionData {
  GroupTable k;
  LoopTable e;
  TauMap tau;
  Cocycle f;
};

using Pair = std::pair<Element, Element>;  // (u in K, a in E)

inline Element pair_index(std::size_t k_order, Element u, Element a) {
  return static_cast<Element>(u + k_order * (a - 1));
}

LoopTable build_extension(const ExtensionData& x);
/// Q(K,E,tau) with the all-identity cocycle.
LoopTable build_semidirect(const GroupTable& k, const LoopTable& e, const TauMap& tau);

/// Bol criterion for the extension: E is left Bol and, for all a,b,c in E
/// and w in K,
///   tau_a(f(b,a)) f(a,ba) f(a.ba,c) = tau_a tau_b(f(a,c)) tau_a(f(b,ac)) f(a,b.ac)
///   tau_a(f(b,a)) f(a,ba) tau_{a.ba}(w) = tau_a tau_b tau_a(w) tau_a(f(b,a)) f(a,ba)
bool bol_conditions(const ExtensionData& x);

/// E is a group and, for all a,b,c in E and w in K,
///   tau_a(f(b,c)) f(a,bc) = f(a,b) f(ab,c)
///   tau_a tau_b(w) f(a,b) = f(a,b) tau_{ab}(w)
bool group_conditions(const ExtensionData& x);

/// All (w,c) with c in RNuc(E) and, for all a,b,
///   f(a,b) tau_{ab}(w) f(ab,c) = tau_a tau_b(w) tau_a(f(b,c)) f(a,bc).
std::vector<Pair> right_nucleus_members(const ExtensionData& x);

/// All (u,a) with a in C(E), tau_a(v) = u^-1 v u for all v and
/// tau_b(u) = u f(a,b) f(b,a)^-1 for all b.
std::vector<Pair> commutant_members(const ExtensionData& x);

/// Converts a pair set to built-table indices.
ElementSet to_element_set(const std::vector<Pair>& pairs, std::size_t k_order);

/// tau_{a.ba} = tau_a tau_b tau_a for all a, b.
bool is_semihomomorphism(const LoopTable& e, const TauMap& tau);
/// tau_{ab} = tau_a tau_b for all a, b.
bool is_homomorphism(const LoopTable& e, const TauMap& tau);

struct KerFix {
  ElementSet ker;  // subset of E
  ElementSet fix;  // subset of K
};

KerFix ker_fix(const LoopTable& e, const GroupTable& k, const TauMap& tau);

/// {(u,1) : u in K} inside the built table.
ElementSet embedded_kernel(std::size_t k_order);

// Named examples -------------------------------------------------------------

enum class NamedExample {
  order12,           // K = Z3, E = (Z2)^2, tau_{e1e2} = inversion
  order16cyclic,     // K = Z4, E = (Z2)^2, tau_{e1e2} = inversion
  order16elem,       // K = (Z2)^2, E = (Z2)^2, tau_{e1e2}: k1 -> k1, k2 -> k1k2
  order4n,           // K = Zn (n > 2), E = (Z2)^2, tau_{e1e2} = inversion
  commutant_order,   // K = Z3, E = (Z2)^m with 2^m > k, |Ker tau| = k
};

struct NamedParams {
  std::size_t n = 0;  // order4n
  std::size_t k = 0;  // commutant_order
  std::size_t m = 0;  // commutant_order; 0 picks the least m with 2^m > k
};

/// The semidirect data behind a named example. Throws BadParams.
ExtensionData named_example_data(NamedExample which, const NamedParams& params = {});
LoopTable build_named_example(NamedExample which, const NamedParams& params = {});

std::string_view to_string(NamedExample which);

}  // namespace bolkit
