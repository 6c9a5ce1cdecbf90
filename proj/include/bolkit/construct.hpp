#pragma once

// Text specifications for the table builders, as accepted by
// `bolkit construct`:
//
//   q9 <b1..b9>                  nine 0/1 digits, c1 first
//   exceptional
//   named order12 | order16cyclic | order16elem | order4n:<n> | commutant:<k>[:<m>]
//   semidirect K=<group> E=<group> tau=<i1>,<i2>,...,<i|E|>
//
// where <group> is cyclic:<n>, elem2:<m> (order 2^m) or dihedral:<k>
// (order 2k), and i_a is the 1-based position of tau_a in Aut(K) sorted by
// image sequence (position 1 is the identity, so i1 must be 1). Tokens are
// separated by whitespace; semidirect fields may come in any order.

#include <string_view>

#include "bolkit/loop.hpp"

namespace bolkit {

/// Throws BadSpec for unknown or malformed specs; builder errors propagate.
LoopTable construct_from_spec(std::string_view spec);

/// "cyclic:3" etc. Throws BadSpec.
LoopTable group_from_spec(std::string_view spec);

}  // namespace bolkit
