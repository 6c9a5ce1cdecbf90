#pragma once

// Structural analysis of loops: identities, commutant, nuclei, subloops,
// normality, quotients and the multiplication group.

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "bolkit/loop.hpp"

namespace bolkit {

/// Sorted, duplicate-free set of elements of some loop.
class ElementSet {
 public:
  ElementSet() = default;
  ElementSet(std::initializer_list<Element> xs) : ElementSet(std::vector<Element>(xs)) {}
  explicit ElementSet(std::vector<Element> xs);

  /// {1..n}
  static ElementSet all(std::size_t n);

  bool contains(Element x) const noexcept;
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  const std::vector<Element>& members() const noexcept { return members_; }
  auto begin() const noexcept { return members_.begin(); }
  auto end() const noexcept { return members_.end(); }

  bool is_subset_of(const ElementSet& other) const;
  friend ElementSet intersect(const ElementSet& a, const ElementSet& b);
  friend bool operator==(const ElementSet&, const ElementSet&) = default;

 private:
  std::vector<Element> members_;
};

/// "{1,2,3,4}"
std::string to_string(const ElementSet& s);

enum class Identity {
  left_bol,
  right_bol,
  moufang,
  associative,
  commutative,
  left_power_alternative,
};

std::string_view to_string(Identity id);

/// Exhaustive check of the named identity over all element tuples.
bool check_identity(const LoopTable& q, Identity which);

inline bool is_left_bol(const LoopTable& q) { return check_identity(q, Identity::left_bol); }
inline bool is_associative(const LoopTable& q) { return check_identity(q, Identity::associative); }
inline bool is_commutative(const LoopTable& q) { return check_identity(q, Identity::commutative); }

/// {c : cx = xc for all x}
ElementSet commutant(const LoopTable& q);

struct Nuclei {
  ElementSet left;
  ElementSet middle;
  ElementSet right;
  ElementSet nucleus;
  ElementSet center;
};

Nuclei nuclei(const LoopTable& q);
ElementSet left_nucleus(const LoopTable& q);
ElementSet middle_nucleus(const LoopTable& q);
ElementSet right_nucleus(const LoopTable& q);

/// C_m(Q): commutant elements whose order is coprime to m.
ElementSet commutant_prime_part(const LoopTable& q, std::size_t m);

/// Least subloop containing s, closed under multiplication and both divisions.
ElementSet generated_subloop(const LoopTable& q, const ElementSet& s);

bool is_subloop(const LoopTable& q, const ElementSet& s);
/// xS = Sx, (xS)y = x(Sy), (Sx)y = S(xy) for all x,y, checked setwise.
bool is_normal(const LoopTable& q, const ElementSet& s);

/// Multiplication table restricted to a subloop, relabeled 1..|S| in
/// increasing order of the members. Throws NotSubloop.
LoopTable subloop_table(const LoopTable& q, const ElementSet& s);

/// Distinct left cosets xS in order of first appearance. Throws NotPartition
/// when two cosets overlap without coinciding.
std::vector<ElementSet> cosets(const LoopTable& q, const ElementSet& s);

/// Q/S on the left cosets of a normal subloop; the coset of 1 becomes 1 and
/// the rest are numbered by smallest member. Throws NotNormal.
LoopTable quotient(const LoopTable& q, const ElementSet& s);

struct PermGroup {
  std::vector<Permutation> generators;
  std::vector<Permutation> elements;  // sorted
  std::size_t order() const noexcept { return elements.size(); }
};

inline constexpr std::size_t kDefaultClosureCap = 1'000'000;

/// Closure of a generating set under composition. Throws ClosureCapExceeded.
PermGroup close_group(std::vector<Permutation> generators, std::size_t cap = kDefaultClosureCap);

/// Mlt(Q) = <L_a, R_a | a in Q>.
PermGroup multiplication_group(const LoopTable& q, std::size_t cap = kDefaultClosureCap);

/// R_{st} = R_s R_t (R_s applied first) for all s,t in S. Throws NotSubloop.
bool right_regular_is_homomorphism(const LoopTable& q, const ElementSet& s);

/// #{a != 1 : a*a = 1}
std::size_t involution_count(const LoopTable& q);

/// Diff-stable "key: value" report of the structural invariants.
std::string structure_report(const LoopTable& q);

}  // namespace bolkit
