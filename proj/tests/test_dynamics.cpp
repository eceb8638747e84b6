#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "basilica/dynamics.hpp"
#include "basilica/error.hpp"
#include "basilica/wreath.hpp"

using namespace basilica;
using namespace basilica::dynamics;

TEST_SUITE("dynamics") {
  TEST_CASE("postcritical set of z^2 - 1") {
    const auto pc = QuadraticMap{}.postcritical();
    REQUIRE(pc.size() == 2);
    CHECK(std::abs(pc[0] - Complex(-1, 0)) < 1e-15);
    CHECK(std::abs(pc[1]) < 1e-15);
  }

  TEST_CASE("path builders") {
    const Path s = segment(0.0, Complex(1, 1), 11);
    CHECK(s.size() == 11);
    CHECK(s.length() == doctest::Approx(std::sqrt(2.0)));
    const Path loop = stadium_loop(Complex(-0.6, 0.05), Complex(-1, 0), 0.1, 128);
    CHECK(loop.closed(1e-12));
    const Path t = thinned(segment(0.0, 1.0, 1001), 0.01);
    CHECK(t.front() == Complex(0.0));
    CHECK(t.back() == Complex(1.0));
    CHECK(t.size() <= 102);
    const Path r = reversed(s);
    CHECK(r.front() == s.back());
    const Path c = concat(s, r);
    CHECK(c.closed(1e-15));
    const Path half = arc(0.0, 1.0, -1.0, std::numbers::pi, 65);
    CHECK(std::abs(half.z[32] - Complex(0, 1)) < 1e-12);
  }

  TEST_CASE("lifts map back onto the path") {
    const Complex c(-1, 0);
    const Path p = stadium_loop(Complex(-0.6, 0.05), c, 0.1, 256);
    const Complex start = std::sqrt(p.front() - c);
    const Path lift = lift_path(c, p, start);
    REQUIRE(lift.size() >= p.size());
    for (const Complex& w : lift.z) {
      double nearest = INFINITY;
      for (const Complex& z : p.z) nearest = std::min(nearest, std::abs(w * w + c - z));
      CHECK(nearest < 0.05);
    }
    CHECK(std::abs(lift.back() * lift.back() + c - p.back()) < 1e-9);
    // a loop around the critical value swaps the two preimages
    CHECK(std::abs(lift.back() + start) < 1e-9);
  }

  TEST_CASE("lifting rejects bad input") {
    const Complex c(-1, 0);
    const Path through = segment(Complex(-1, -0.5), Complex(-1, 0.5), 65);
    CHECK_THROWS_AS(lift_path(c, through, std::sqrt(through.front() - c)), PreconditionError);
    const Path p = segment(Complex(0.5, 0.1), Complex(0.6, 0.1), 10);
    CHECK_THROWS_AS(lift_path(c, p, Complex(5, 5)), PreconditionError);
  }

  TEST_CASE("preimage tree") {
    const QuadraticMap map;
    const auto tree = build_preimage_tree(map, 8);
    REQUIRE(tree.levels.size() == 9);
    for (unsigned k = 1; k <= 8; ++k) {
      CHECK(tree.levels[k].size() == (1u << k));
      for (std::size_t v = 0; v < tree.levels[k].size(); ++v) {
        const Complex parent = tree.levels[k - 1][v >> 1];
        CHECK(std::abs(map(tree.levels[k][v]) - parent) < 1e-9);
      }
      CHECK(tree.min_separation[k] > 1e-6);
    }
    CHECK_THROWS_AS(build_preimage_tree(map, kMaxTreeLevel + 1), ResourceError);
  }

  TEST_CASE("numeric monodromy matches the algebraic action") {
    const QuadraticMap map;
    const auto tree = build_preimage_tree(map, 5);
    for (unsigned n = 0; n <= 5; ++n) {
      CHECK(numeric_monodromy(map, tree, Gen::a, n) == level_permutation(Word::a(), n));
      CHECK(numeric_monodromy(map, tree, Gen::b, n) == level_permutation(Word::b(), n));
    }
    CHECK_THROWS_AS(numeric_monodromy(map, tree, Gen::a, 6), PreconditionError);
  }

  TEST_CASE("Julia samples stay bounded and are reproducible") {
    const QuadraticMap map;
    const auto cloud = julia_sample(map, 2000, 9);
    CHECK(cloud == julia_sample(map, 2000, 9));
    CHECK(cloud.size() == 2000);
    CHECK(cloud[0] == Complex((1 + std::sqrt(5.0)) / 2, 0));
    for (const Complex& z0 : cloud) {
      Complex z = z0;
      for (int i = 0; i < 40; ++i) z = map(z);
      CHECK(std::abs(z) < 2.0);
    }
    CHECK_THROWS_AS(julia_sample(map, 0, 1), PreconditionError);
  }

  TEST_CASE("Julia cloud is invariant under the map") {
    const QuadraticMap map;
    const auto j1 = julia_sample(map, 20000, 1);
    const auto j2 = julia_sample(map, 20000, 2);
    PointCloud image;
    for (const Complex& z : j1) image.push_back(map(z));
    const double between = hausdorff_distance(j1, j2);
    CHECK(hausdorff_distance(image, j1) <= 2 * between);
  }

  TEST_CASE("Hausdorff distance") {
    std::mt19937_64 rng(6);
    std::uniform_real_distribution<double> u(-1.5, 1.5);
    for (int t = 0; t < 10; ++t) {
      PointCloud p, q;
      for (int i = 0; i < 300; ++i) p.emplace_back(u(rng), u(rng));
      for (int i = 0; i < 200; ++i) q.emplace_back(u(rng), 0.3 * u(rng));
      CHECK(hausdorff_distance(p, q) == doctest::Approx(hausdorff_brute_force(p, q)).epsilon(1e-12));
      CHECK(hausdorff_distance(p, q) == hausdorff_distance(q, p));
    }
    CHECK(hausdorff_distance({Complex(0, 0)}, {Complex(3, 4)}) == doctest::Approx(5.0));
    CHECK_THROWS_AS(hausdorff_distance({}, {Complex(0, 0)}), PreconditionError);
  }

  TEST_CASE("nearest index") {
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> u(-2, 2);
    PointCloud p;
    for (int i = 0; i < 500; ++i) p.emplace_back(u(rng), u(rng));
    const NearestIndex index(p);
    for (int t = 0; t < 200; ++t) {
      const Complex q(3 * u(rng), u(rng));
      double best = INFINITY;
      for (const Complex& z : p) best = std::min(best, std::abs(z - q));
      CHECK(index.nearest(q).second == best);
    }
  }

  TEST_CASE("point cloud CSV") {
    const PointCloud p{{0.1, -0.2}, {1.0 / 3, 2.0}};
    const std::string csv = cloud_csv(p, {"x", "y"});
    CHECK(csv.rfind("re,im,address\n", 0) == 0);
    CHECK(read_cloud_csv(csv) == p);
    CHECK(read_cloud_csv(cloud_csv(p)) == p);
    CHECK_THROWS_AS(read_cloud_csv("re,im\n1,zz\n"), InputError);
  }

  TEST_CASE("embedding") {
    const auto e = embed_schreier(QuadraticMap{}, 4);
    CHECK(e.positions.size() == 16);
    CHECK(e.graph == schreier::build_direct(4));
    const std::string j = embedding_json(e);
    CHECK(j.find("\"a_perm\"") != std::string::npos);
    CHECK(j.find("\"addr\":\"xxxx\"") != std::string::npos);
  }

  TEST_CASE("embedded vertices approach the Julia set") {
    const QuadraticMap map;
    const auto reference = julia_sample(map, 20000, 3);
    const auto tree = build_preimage_tree(map, 10);
    double previous = INFINITY;
    for (unsigned n = 4; n <= 10; n += 2) {
      const double d = hausdorff_distance(tree.levels[n], reference);
      CHECK(d <= previous);
      previous = d;
    }
  }
}
