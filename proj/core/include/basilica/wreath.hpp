#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "basilica/word.hpp"

namespace basilica {

// Self-similar structure of the group generated by
//   a = <b, 1> (x y),   b = <a, 1>
// acting on the binary tree {x,y}^*.
//
// Convention: g = <g_x, g_y> pi acts by g(i.u) = pi(i) . g_i(u), products
// apply the leftmost factor first, so (gh)_i = g_i h_{i^g}. With this
// convention [b, a^2] = <[a,b], 1> and [a,b] = <a, a^-b> hold, where
// [u,v] = u^-1 v^-1 u v and u^v = v^-1 u v.
//
// Vertices at level n are encoded as n-bit integers with x = 0, y = 1 and
// the root letter in the most significant bit, so integer order is the
// lexicographic order of addresses.

struct Decomposition {
  Word x;
  Word y;
  bool swap = false;

  friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

Decomposition decompose(const Word& w);

/// Section of `w` at a vertex given as a string over {x, y}.
Word section(const Word& w, std::string_view address);

/// Image of a vertex (string over {x, y}) under `w`.
std::string act(const Word& w, std::string_view vertex);

/// Same, on the integer encoding.
std::uint64_t act(const Word& w, std::uint64_t vertex, unsigned level);

/// Image of `vertex` under g^exp for a single generator, in O(level).
std::uint64_t act_power(Gen g, std::int64_t exp, std::uint64_t vertex,
                        unsigned level);

using Permutation = std::vector<std::uint32_t>;

inline constexpr unsigned kMaxPermutationLevel = 24;

/// perm[v] = image of v under w at the given level. Throws ResourceError
/// above kMaxPermutationLevel.
Permutation level_permutation(const Word& w, unsigned level);

/// Letter counts of a freely reduced word; value = a_count + sqrt(2) b_count.
struct Norm {
  std::uint64_t a_count = 0;
  std::uint64_t b_count = 0;

  double value() const;
};

Norm norm(const Word& w);

/// Fixed point of l -> (l + 1)/sqrt(2). Sections two levels down obey
/// |w_ij| <= (|w| + 1)/sqrt(2), so longer words shrink every two levels.
double contraction_fixed_point();

/// All freely reduced sections of `w` at all vertices (including w itself).
/// Finite because sections contract the norm.
std::vector<Word> section_closure(const Word& w);

bool is_trivial(const Word& w);
bool equal(const Word& u, const Word& v);

// Vertex address helpers.
std::uint64_t vertex_index(std::string_view address);
std::string vertex_address(std::uint64_t index, unsigned level);

}  // namespace basilica
