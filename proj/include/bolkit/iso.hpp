#pragma once

// Isomorphism testing and classification of loops.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bolkit/loop.hpp"

namespace bolkit {

/// Isomorphism-invariant fingerprint of a loop.
struct IsoProfile {
  std::size_t order = 0;
  std::vector<std::size_t> order_spectrum;  // sorted element orders
  std::size_t commutant_size = 0;
  std::size_t lnuc_size = 0;
  std::size_t mnuc_size = 0;
  std::size_t rnuc_size = 0;
  std::size_t center_size = 0;
  std::size_t involutions = 0;
  std::uint8_t flags = 0;  // IsoFlag bits

  friend bool operator==(const IsoProfile&, const IsoProfile&) = default;
  friend auto operator<=>(const IsoProfile&, const IsoProfile&) = default;
};

enum IsoFlag : std::uint8_t {
  kLeftBol = 1,
  kRightBol = 2,
  kMoufang = 4,
  kAssociative = 8,
  kCommutative = 16,
};

IsoProfile invariant_profile(const LoopTable& q);

/// "order=16 spectrum=1,2,2,... C=6 LN=2 MN=2 RN=8 Z=2 inv=9 flags=LB"
std::string to_string(const IsoProfile& p);

/// An isomorphism phi: q1 -> q2, the lexicographically least by image
/// sequence, or nullopt.
std::optional<Permutation> find_isomorphism(const LoopTable& q1, const LoopTable& q2);

/// phi(a b) = phi(a) phi(b) for all a, b.
bool is_isomorphism(const LoopTable& q1, const LoopTable& q2, const Permutation& phi);

struct IsoClass {
  std::size_t representative = 0;    // index into the input list
  std::vector<std::size_t> members;  // increasing, starts with representative
};

/// Partition of `loops` into isomorphism classes, ordered by first member.
std::vector<IsoClass> classify(const std::vector<LoopTable>& loops);

/// One line per class:
/// "class <k>: size <m> representative <name> profile <fields>"
std::string classification_report(const std::vector<LoopTable>& loops,
                                  const std::vector<IsoClass>& classes);

}  // namespace bolkit
