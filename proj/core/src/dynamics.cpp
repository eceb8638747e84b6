#include "basilica/dynamics.hpp"

#include <numbers>
#include <random>
#include <sstream>

#include <nlohmann/json.hpp>

#include "basilica/error.hpp"
#include "basilica/wreath.hpp"

namespace basilica::dynamics {

std::vector<Complex> QuadraticMap::postcritical(unsigned limit, double tol) const {
  std::vector<Complex> orbit;
  Complex z = c;
  while (orbit.size() < limit && std::isfinite(std::abs(z)) && std::abs(z) < 1e6) {
    for (const Complex& w : orbit)
      if (std::abs(w - z) <= tol) return orbit;
    orbit.push_back(z);
    z = (*this)(z);
  }
  return orbit;
}

Complex first_level_point(const QuadraticMap& map, const DynamicsOptions& options, int letter) {
  const Complex r = std::sqrt(options.basepoint - map.c);
  const Complex x = std::abs(r - options.basepoint) <= std::abs(-r - options.basepoint) ? r : -r;
  return letter == 0 ? x : -x;
}

Path connecting_path(const QuadraticMap& map, const DynamicsOptions& options, int letter) {
  const Complex target = first_level_point(map, options, letter);
  if (letter == 0) return segment(options.basepoint, target, options.path_samples);
  double sweep = std::arg(target) - std::arg(options.basepoint);
  if (sweep > 0) sweep -= 2 * std::numbers::pi;
  return arc(0.0, options.basepoint, target, sweep, options.path_samples);
}

Path generator_loop(const QuadraticMap& map, const DynamicsOptions& options, Gen g) {
  const Complex center = g == Gen::a ? map.c : Complex{0.0, 0.0};
  return stadium_loop(options.basepoint, center, options.loop_radius, options.loop_samples);
}

namespace {

void check_level(const std::vector<Complex>& points, unsigned level, double tol,
                 PreimageTree& tree) {
  const double sep = min_pairwise_distance(points);
  tree.min_separation.push_back(sep);
  if (!(sep > tol)) {
    std::ostringstream msg;
    msg << "preimage tree: points collide at level " << level << " (separation " << sep
        << "); the basepoint is not generic";
    throw ConsistencyError(msg.str());
  }
}

void check_parent(const QuadraticMap& map, Complex child, Complex parent, double tol,
                  unsigned level) {
  if (std::abs(map(child) - parent) > tol * std::max(1.0, std::abs(parent))) {
    std::ostringstream msg;
    msg << "preimage tree: level " << level << " point " << child << " maps to " << map(child)
        << ", expected " << parent;
    throw ConsistencyError(msg.str());
  }
}

}  // namespace

PreimageTree build_preimage_tree(const QuadraticMap& map, unsigned n,
                                 const DynamicsOptions& options) {
  if (n > kMaxTreeLevel)
    throw ResourceError("preimage tree: level " + std::to_string(n) + " exceeds cap " +
                        std::to_string(kMaxTreeLevel));
  PreimageTree tree;
  tree.basepoint = options.basepoint;
  tree.levels.push_back({options.basepoint});
  tree.min_separation.push_back(INFINITY);

  // paths[i][u]: lift of the connecting path to letter i through f^k
  // starting at the level-k point u.
  std::vector<std::vector<Path>> paths(2);
  for (int i = 0; i < 2; ++i)
    paths[i].push_back(thinned(connecting_path(map, options, i), options.thin_spacing));

  for (unsigned k = 0; k < n; ++k) {
    const std::size_t width = std::size_t{1} << k;
    std::vector<Complex> next(2 * width);
    for (std::size_t i = 0; i < 2; ++i) {
      for (std::size_t u = 0; u < width; ++u) {
        const std::size_t v = (i << k) | u;
        next[v] = paths[i][u].back();
        const Complex parent = k == 0 ? options.basepoint : tree.levels[k][(i << (k - 1)) | (u >> 1)];
        check_parent(map, next[v], parent, options.consistency_tol, k + 1);
      }
    }
    check_level(next, k + 1, options.consistency_tol, tree);
    tree.levels.push_back(std::move(next));
    if (k + 1 == n) break;

    std::vector<std::vector<Path>> lifted(2, std::vector<Path>(2 * width));
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t u = 0; u < 2 * width; ++u)
        lifted[i][u] = thinned(
            lift_path(map.c, paths[i][u >> 1], tree.levels[k + 1][u], options.lift),
            options.thin_spacing);
    paths = std::move(lifted);
  }
  return tree;
}

Permutation numeric_monodromy(const QuadraticMap& map, const PreimageTree& tree, Gen g,
                              unsigned n, const DynamicsOptions& options) {
  if (n >= tree.levels.size())
    throw PreconditionError("numeric_monodromy: tree has depth " +
                            std::to_string(tree.levels.size() - 1) + ", level " +
                            std::to_string(n) + " requested");
  const std::vector<Complex>& leaves = tree.levels[n];
  NearestIndex index(leaves);
  Permutation perm(leaves.size());

  // Depth-first over prefixes; stack[k] is the lift through f^k of the loop
  // starting at the level-k point of the current prefix.
  std::vector<Path> stack(n + 1);
  stack[0] = thinned(generator_loop(map, options, g), options.thin_spacing);
  std::vector<std::uint64_t> prefix(n + 1, 0);
  auto visit = [&](auto&& self, unsigned k, std::uint64_t v) -> void {
    if (k == n) {
      auto [w, d] = index.nearest(stack[k].back());
      if (d > 1e-6) {
        std::ostringstream msg;
        msg << "numeric_monodromy: lift from " << vertex_address(v, n) << " ends " << d
            << " away from the nearest level-" << n << " point";
        throw ConsistencyError(msg.str());
      }
      perm[v] = static_cast<std::uint32_t>(w);
      return;
    }
    for (std::uint64_t j = 0; j < 2; ++j) {
      const std::uint64_t child = 2 * v + j;
      stack[k + 1] = thinned(lift_path(map.c, stack[k], tree.levels[k + 1][child], options.lift),
                             options.thin_spacing);
      self(self, k + 1, child);
    }
  };
  visit(visit, 0, 0);
  std::vector<bool> seen(perm.size(), false);
  for (std::uint32_t w : perm) {
    if (seen[w]) throw ConsistencyError("numeric_monodromy: lift endpoints are not a permutation");
    seen[w] = true;
  }
  return perm;
}

PointCloud julia_sample(const QuadraticMap& map, std::size_t count, std::uint64_t seed,
                        std::size_t burn_in) {
  if (count == 0) throw PreconditionError("julia_sample: count must be at least 1");
  std::mt19937_64 rng(seed);
  const Complex beta = 0.5 * (1.0 + std::sqrt(1.0 - 4.0 * map.c));
  PointCloud out;
  out.reserve(count);
  out.push_back(beta);
  Complex z = beta;
  for (std::size_t step = 0; out.size() < count; ++step) {
    const Complex r = std::sqrt(z - map.c);
    z = (rng() >> 63) ? -r : r;
    if (step >= burn_in) out.push_back(z);
  }
  return out;
}

EmbeddedGraph embed_schreier(const PreimageTree& tree, unsigned n) {
  if (n >= tree.levels.size())
    throw PreconditionError("embed_schreier: tree too shallow for level " + std::to_string(n));
  EmbeddedGraph e;
  e.graph = schreier::build_direct(n);
  e.positions = tree.levels[n];
  if (e.positions.size() != e.graph.size())
    throw ConsistencyError("embed_schreier: tree level and graph sizes differ");
  return e;
}

EmbeddedGraph embed_schreier(const QuadraticMap& map, unsigned n, const DynamicsOptions& options) {
  return embed_schreier(build_preimage_tree(map, n, options), n);
}

std::string embedding_json(const EmbeddedGraph& e) {
  nlohmann::ordered_json j;
  j["level"] = e.graph.n;
  nlohmann::ordered_json vertices = nlohmann::ordered_json::array();
  for (std::uint32_t v = 0; v < e.graph.size(); ++v) {
    nlohmann::ordered_json item;
    item["addr"] = e.graph.n == 0 ? std::string() : vertex_address(v, e.graph.n);
    item["re"] = e.positions[v].real();
    item["im"] = e.positions[v].imag();
    vertices.push_back(std::move(item));
  }
  j["vertices"] = std::move(vertices);
  j["a_perm"] = e.graph.a;
  j["b_perm"] = e.graph.b;
  return j.dump() + "\n";
}

}  // namespace basilica::dynamics
