#pragma once

// Right-additive cocycles over elementary abelian 2-groups and the loops
// Q(Z2, (Z2)^n, trivial action, f) they define.
//
// A vector of (Z2)^n is stored as an unsigned integer; bit i is the
// coefficient of basis vector e_{i+1}.

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "bolkit/loop.hpp"

namespace bolkit::gf2 {

using Vec2 = std::uint32_t;

inline constexpr std::size_t kMaxDim = 6;

inline int bit(Vec2 v, std::size_t i) { return static_cast<int>((v >> i) & 1u); }

/// c: E x B -> Z2 with c(0, e_i) = 0; values[e][i] = c(e, e_{i+1}).
class CMap {
 public:
  explicit CMap(std::size_t dim);

  std::size_t dim() const noexcept { return dim_; }
  int operator()(Vec2 e, std::size_t i) const noexcept { return values_[e * dim_ + i]; }
  /// Throws BadParams when setting a nonzero value on row 0.
  void set(Vec2 e, std::size_t i, int value);

  friend bool operator==(const CMap&, const CMap&) = default;

 private:
  std::size_t dim_;
  std::vector<std::uint8_t> values_;
};

/// f: E x E -> Z2 with f(0,b) = f(a,0) = 0.
class Cocycle {
 public:
  explicit Cocycle(std::size_t dim);

  std::size_t dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return std::size_t{1} << dim_; }
  int operator()(Vec2 a, Vec2 b) const noexcept { return values_[a * size() + b]; }
  /// Throws BadParams when the value would break f(0,b) = f(a,0) = 0.
  void set(Vec2 a, Vec2 b, int value);

  friend bool operator==(const Cocycle&, const Cocycle&) = default;

 private:
  std::size_t dim_;
  std::vector<std::uint8_t> values_;
};

/// The unique right-additive cocycle agreeing with c on basis columns.
Cocycle associated_cocycle(const CMap& c);

/// f(a, b+c) = f(a,b) + f(a,c) for all a, b, c.
bool is_right_additive(const Cocycle& f);

/// Bol criterion for Q(Z2, E, trivial, f) with E, K elementary abelian:
///   f(a, a+c) = f(a,a) + f(a,c)
///   f(a, b+c) + f(a,b) + f(a,c) = f(b, a+c) + f(b,a) + f(b,c)
bool e2k2_bol_check(const Cocycle& f);

/// Q(Z2, (Z2)^n, trivial, f): (u,a)(v,b) = (u+v+f(a,b), a+b), with (u,a)
/// stored at index 1 + u + 2a.
LoopTable build_trivial_action(const Cocycle& f);

/// Constraints on c for a right-additive cocycle whose loop has a
/// non-subloop commutant witnessed by e1, e2, e3 (dim >= 3).
bool satisfies_q9_constraints(const CMap& c);

using Q9Params = std::array<int, 9>;

/// Fills the nine free slots and derives every other entry.
CMap q9_cmap(const Q9Params& c);
LoopTable build_q9(const Q9Params& c);

struct Q9Member {
  Q9Params params;
  LoopTable table;
};

/// All 512 parameter tuples in lexicographic order (c1 most significant).
std::vector<Q9Member> enumerate_q9();

/// "000000001"
std::string to_string(const Q9Params& c);
/// Parses nine 0/1 characters. Throws BadSpec.
Q9Params parse_q9(std::string_view bits);

/// The 19 tuples listed as pairwise non-isomorphic representatives.
const std::vector<Q9Params>& q9_representatives();

/// n x n bit matrix acting on column vectors; column j is the image of e_{j+1}.
struct LinearMap {
  std::vector<Vec2> columns;
  Vec2 operator()(Vec2 v) const noexcept;
};

/// GL(n,2), by filtering all n x n matrices for invertibility.
std::vector<LinearMap> general_linear_group(std::size_t n);

/// Some phi in GL(n,2) with f(a,b) = g(phi a, phi b), if any.
std::optional<LinearMap> find_cocycle_equivalence(const Cocycle& f, const Cocycle& g);
bool cocycle_equivalent(const Cocycle& f, const Cocycle& g);

/// The loop on K x E, K = <k1,k2>, E = <e1,e2>, with
/// (u,a)(v,b) = (psi_{a,b}(u) v, ab), where psi_{1,e2} = psi_{1,e1e2} is
/// k1 -> k1, k2 -> k1k2, psi_{e1,e2} = psi_{e1,e1e2} is k1 -> k1k2, k2 -> k2,
/// and every other psi_{a,b} is trivial. (u,a) is stored at
/// pos(u) + 4(pos(a)-1) with K listed 1,k1,k2,k1k2 and E as 1,e1,e2,e1e2.
/// Left Bol with trivial left nucleus; not an extension with K in LNuc.
LoopTable build_exceptional();

/// Number of free bits among the CMap entries subject to the q9 constraints,
/// by Gaussian elimination over GF(2) (the constraints are affine).
/// Returns nullopt when the constraint system is inconsistent.
std::optional<std::size_t> q9_constraint_free_bits(std::size_t dim);

/// (2^n - 4)(n - 2) + 3n - 4
std::size_t q9_free_parameter_formula(std::size_t dim);

}  // namespace bolkit::gf2
