#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "basilica/word.hpp"

namespace basilica::algebra {

// Search for a relation w(g, h) = 1 between two group elements, following the
// recursive argument that the group has no free subgroup of rank two:
//
//  * both inputs fix the first level: find relations u, v between the
//    x-sections and y-sections; then [u, v] kills both coordinates;
//  * exactly one input swaps: replace it by its square and proceed as above;
//  * both swap: pass to a pair among (g^2, h^2), (gh, hg), (gh^-1, hg^-1)
//    chosen from which sections fix the first level.
//
// When the recursion revisits a pair or stalls, length-reducing Nielsen moves
// and a fixed table of short commutator relations are tried instead.
//
// Witnesses are words over the abstract letters g, h (stored as a, b).

struct RelationBudget {
  unsigned max_depth = 16;
  std::uint64_t max_nodes = 20000;
  std::uint64_t max_witness_length = 1u << 16;
};

struct RelationResult {
  Word witness;  // over {g, h}; empty on failure
  bool verified = false;
  std::vector<std::string> trace;
  std::string failure;

  std::string witness_str() const { return witness.str('g', 'h'); }
};

RelationResult find_relation(const Word& g, const Word& h,
                             const RelationBudget& budget = {});

/// Height L(g,h) = |g| + |h| - #({g,h} in Stab(x)) / 3 with |.| the
/// freely reduced length.
double relation_height(const Word& g, const Word& h);

/// Membership in {a^-i b^n a^j : i, j in {0,1}}, the words whose sections
/// need not be shorter.
bool in_exceptional_set(const Word& w);

/// First-level stabilizer membership (no root swap).
bool fixes_first_level(const Word& w);

}  // namespace basilica::algebra
