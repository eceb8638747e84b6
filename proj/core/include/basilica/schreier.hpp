#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "basilica/wreath.hpp"

namespace basilica::schreier {

// Edge-labelled orbit graphs of the generators on level n. Edges are stored
// as the permutations v -> v^a and v -> v^b; loops are kept.

inline constexpr unsigned kMaxGraphLevel = 16;

struct LabeledGraph {
  unsigned n = 0;
  Permutation a;
  Permutation b;
  std::uint32_t distinguished = 0;
  bool addressed = false;  // vertex i is the tree vertex with index i

  std::size_t size() const { return a.size(); }
  std::string name(std::uint32_t v) const;

  friend bool operator==(const LabeledGraph&, const LabeledGraph&) = default;
};

/// Vertices are the level-n addresses, distinguished vertex x^n.
LabeledGraph build_direct(unsigned n);

// Which polygon index is attached at vertex v_i of a polygon. With t the
// exponent of the largest power of 2 dividing i:
//   Exponent:  B_{2t} on a-polygons, A_{2t+1} on b-polygons;
//   Power:     B_{2^{t+1}} and A_{2^{t+1}+1}.
enum class AttachmentReading { Exponent, Power };

struct PolygonPiece {
  char kind = 'A';  // 'A': polygon of a-edges, 'B': polygon of b-edges
  unsigned index = 0;
  std::vector<std::uint32_t> polygon;  // polygon[0] is the distinguished vertex
  std::vector<std::size_t> children;   // pieces attached at polygon[1..]
};

struct RecursiveBuild {
  LabeledGraph graph;
  std::vector<PolygonPiece> pieces;
};

/// Gamma_n = A_n and B_n glued at the distinguished vertex. A_m for odd m is
/// an a-polygon on 2^{(m+1)/2} vertices with B pieces hung from every
/// vertex but the first; B_m for even m is a b-polygon on 2^{m/2} vertices
/// with A pieces; A_{2k} = A_{2k-1}, B_{2k+1} = B_{2k}, A_0 = B_0 = a point.
/// Vertices that get no edge of some label carry a loop of that label.
/// Throws ResourceError when the reading produces more than 2^n vertices.
RecursiveBuild build_recursive_pieces(unsigned n,
                                      AttachmentReading reading = AttachmentReading::Exponent);
LabeledGraph build_recursive(unsigned n,
                             AttachmentReading reading = AttachmentReading::Exponent);

/// The unique label- and basepoint-preserving isomorphism, if any:
/// map[v] is the image in `h` of vertex v of `g`.
std::optional<Permutation> find_isomorphism(const LabeledGraph& g, const LabeledGraph& h);
bool check_isomorphic(const LabeledGraph& g, const LabeledGraph& h);

/// Same graph with vertex v renamed map[v].
LabeledGraph relabel(const LabeledGraph& g, const Permutation& map, bool addressed);

bool is_connected(const LabeledGraph& g);
/// Both edge maps are bijections and every vertex has degree 4 counting
/// loops twice.
bool is_four_regular(const LabeledGraph& g);

std::string to_dot(const LabeledGraph& g);
std::string to_json(const LabeledGraph& g);
/// Throws InputError on malformed documents.
LabeledGraph from_json(std::string_view text);
std::string export_graph(const LabeledGraph& g, std::string_view format);

}  // namespace basilica::schreier
