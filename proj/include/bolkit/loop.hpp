#pragma once

// Finite loops stored as Cayley tables.
//
// Elements are 1-based indices; element 1 is always the identity. Cells are
// kept in a flat row-major array, cells[(a-1)*n + (b-1)] = a*b, together with
// the two division tables so that a\b and b/a are constant-time lookups.

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "bolkit/error.hpp"

namespace bolkit {

using Element = std::uint16_t;

inline constexpr std::size_t kMaxOrder = 4096;

/// A bijection of {1..n}. Composition follows the right-action convention
/// used for translations: (p * q)(x) = q(p(x)), i.e. apply p first.
class Permutation {
 public:
  Permutation() = default;
  /// Throws Malformed unless `images` is a bijection of 1..images.size().
  explicit Permutation(std::vector<Element> images);

  static Permutation identity(std::size_t n);

  std::size_t degree() const noexcept { return images_.size(); }
  Element operator()(Element x) const noexcept { return images_[x - 1]; }
  std::span<const Element> images() const noexcept { return images_; }

  bool is_identity() const noexcept;
  Permutation inverse() const;
  /// x^m for any integer m (negative powers use the inverse).
  Permutation pow(long long m) const;

  friend Permutation operator*(const Permutation& first, const Permutation& then);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<Element> images_;
};

std::string to_string(const Permutation& p);

/// Immutable Cayley table of a finite loop with identity at index 1.
class LoopTable {
 public:
  LoopTable() = default;

  /// Validates a row-major table already normalized to identity 1.
  /// Throws Malformed, NotLatin or NoIdentity.
  LoopTable(std::size_t order, std::vector<Element> cells, std::string name = {});

  /// Validates an arbitrary loop table and relabels so that the identity sits
  /// at index 1; elements before the identity shift up by one, the rest keep
  /// their index. The applied relabeling is appended to `name`.
  static LoopTable normalized(std::size_t order, std::vector<Element> cells,
                              std::string name = {});

  std::size_t order() const noexcept { return n_; }
  const std::string& name() const noexcept { return name_; }
  LoopTable with_name(std::string name) const;

  Element operator()(Element a, Element b) const noexcept {
    return cells_[(a - 1) * n_ + (b - 1)];
  }
  /// The unique x with a*x = b.
  Element ldiv(Element a, Element b) const noexcept { return ldiv_[(a - 1) * n_ + (b - 1)]; }
  /// The unique y with y*a = b.
  Element rdiv(Element a, Element b) const noexcept { return rdiv_[(a - 1) * n_ + (b - 1)]; }

  std::span<const Element> cells() const noexcept { return cells_; }
  std::span<const Element> row(Element a) const noexcept {
    return std::span<const Element>(cells_).subspan((a - 1) * n_, n_);
  }

  bool contains(Element a) const noexcept { return a >= 1 && a <= n_; }

  /// Tables are equal when their cells are; names are metadata.
  friend bool operator==(const LoopTable& x, const LoopTable& y) noexcept {
    return x.n_ == y.n_ && x.cells_ == y.cells_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<Element> cells_;
  std::vector<Element> ldiv_;
  std::vector<Element> rdiv_;
  std::string name_;
};

enum class Side { left, right };

// Element-level operations. All take a validated table and valid elements.

inline Element mul(const LoopTable& q, Element a, Element b) { return q(a, b); }
inline Element left_divide(const LoopTable& q, Element a, Element b) { return q.ldiv(a, b); }
inline Element right_divide(const LoopTable& q, Element a, Element b) { return q.rdiv(a, b); }

/// L_a (b -> ab) or R_a (b -> ba).
Permutation translation(const LoopTable& q, Element a, Side side);

/// Left-associated power: a^0 = 1, a^m = a * a^(m-1), a^-m = (a^-1)^m.
/// Throws NoInverse for m < 0 when a has no two-sided inverse.
Element power(const LoopTable& q, Element a, long long m);

/// Least m > 0 with a^m = 1. Throws NotPeriodicThroughIdentity when the power
/// sequence cycles without reaching 1.
std::size_t element_order(const LoopTable& q, Element a);

/// Two-sided inverse; throws NoTwoSidedInverse when 1/a != a\1.
Element inverse(const LoopTable& q, Element a);

// Text format: '#' comment lines, the order n, then n*n entries row-major.
LoopTable parse_table(std::istream& in, std::string name = {});
LoopTable parse_table_string(const std::string& text, std::string name = {});
LoopTable load_table(const std::string& path);
std::string render(const LoopTable& q);
void save_table(const LoopTable& q, const std::string& path);

/// Relabels q by the bijection phi: result(phi(a), phi(b)) = phi(q(a,b)).
/// phi must fix 1.
LoopTable relabel(const LoopTable& q, const Permutation& phi);

/// Direct product with pair (a,b) encoded as a + |A|(b-1).
LoopTable direct_product(const LoopTable& a, const LoopTable& b);

LoopTable cyclic_group(std::size_t n);
/// (Z_2)^m; element i is the bit vector i-1, bit j standing for generator j+1.
LoopTable elementary_abelian_2group(std::size_t m);
/// Dihedral group of order 2k: r^i s^j encoded as 1 + i + k*j.
LoopTable dihedral_group(std::size_t k);

}  // namespace bolkit
