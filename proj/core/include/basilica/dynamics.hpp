#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "basilica/path.hpp"
#include "basilica/point_cloud.hpp"
#include "basilica/schreier.hpp"
#include "basilica/word.hpp"

namespace basilica::dynamics {

// The map z -> z^2 + c (c = -1 by default) and the loops whose lifts give
// the generators:
//   a: small counter-clockwise loop around the critical value c,
//   b: small counter-clockwise loop around 0.
// Both are based at a point near the fixed point (1 - sqrt 5)/2, pushed
// off the real axis so that the preimage tree is generic.

struct QuadraticMap {
  Complex c{-1.0, 0.0};

  Complex operator()(Complex z) const { return z * z + c; }
  Complex critical_value() const { return c; }
  /// Forward orbit of the critical value while it stays finite and new
  /// (for c = -1: {-1, 0}); at most `limit` points.
  std::vector<Complex> postcritical(unsigned limit = 16, double tol = 1e-12) const;
};

inline constexpr unsigned kMaxTreeLevel = 16;

struct DynamicsOptions {
  Complex basepoint{-0.6180339887498949, 0.05};
  double loop_radius = 0.1;
  std::size_t loop_samples = 256;
  std::size_t path_samples = 256;
  double thin_spacing = 0.002;  // stored connecting paths are thinned to this
  double consistency_tol = 1e-9;
  LiftOptions lift;
};

/// Level-1 point near the basepoint (letter x) and its negative (letter y).
Complex first_level_point(const QuadraticMap& map, const DynamicsOptions& options, int letter);

/// Connecting paths from the basepoint: a straight segment to x, and an arc
/// over the origin to y.
Path connecting_path(const QuadraticMap& map, const DynamicsOptions& options, int letter);

Path generator_loop(const QuadraticMap& map, const DynamicsOptions& options, Gen g);

struct PreimageTree {
  Complex basepoint;
  // levels[k][i] is the point with address vertex_address(i, k).
  std::vector<std::vector<Complex>> levels;
  std::vector<double> min_separation;  // per level
};

/// Addresses follow lifts of the connecting paths: the point i.u is the end
/// of the lift of the connecting path to i through f^|u| starting at the
/// point u, so f drops the last letter. Throws ConsistencyError if two
/// points of a level collide or a point does not map to its parent.
PreimageTree build_preimage_tree(const QuadraticMap& map, unsigned n,
                                 const DynamicsOptions& options = {});

/// Endpoint permutation of the lifts of a generator loop through f^n,
/// perm[v] = w meaning the lift starting at vertex v ends at vertex w.
Permutation numeric_monodromy(const QuadraticMap& map, const PreimageTree& tree, Gen g,
                              unsigned n, const DynamicsOptions& options = {});

/// Inverse iteration from the repelling fixed point (1 + sqrt(1 - 4c))/2,
/// which is kept as the first sample; random branches, `burn_in` steps
/// discarded before the rest are collected.
PointCloud julia_sample(const QuadraticMap& map, std::size_t count, std::uint64_t seed,
                        std::size_t burn_in = 50);

struct EmbeddedGraph {
  schreier::LabeledGraph graph;
  PointCloud positions;  // positions[v] for vertex v
};

EmbeddedGraph embed_schreier(const QuadraticMap& map, unsigned n,
                             const DynamicsOptions& options = {});
EmbeddedGraph embed_schreier(const PreimageTree& tree, unsigned n);

/// {"level", "vertices": [{"addr","re","im"}], "a_perm", "b_perm"}.
std::string embedding_json(const EmbeddedGraph& e);

}  // namespace basilica::dynamics
