#include <doctest.h>

#include <numeric>
#include <random>

#include "basilica/error.hpp"
#include "basilica/schreier.hpp"
#include "oracle.hpp"

using namespace basilica;
using namespace basilica::schreier;

TEST_SUITE("schreier") {
  TEST_CASE("orbit graph edges follow the action") {
    for (unsigned n = 0; n <= 8; ++n) {
      const auto g = build_direct(n);
      CHECK(g.a == oracle::permutation("a", n));
      CHECK(g.b == oracle::permutation("b", n));
      CHECK(g.distinguished == 0);
      CHECK(g.addressed);
    }
  }

  TEST_CASE("level 2 by hand") {
    const auto g = build_direct(2);
    // xx -> yx, xy -> yy, yx -> xx, yy -> xy under a
    CHECK(g.a == Permutation{2, 3, 0, 1});
    // xx -> xy, xy -> xx, yx and yy fixed under b
    CHECK(g.b == Permutation{1, 0, 2, 3});
    CHECK(g.name(2) == "yx");
    CHECK(build_direct(0).name(0) == "root");
  }

  TEST_CASE("recursive construction is isomorphic to the orbit graph") {
    for (unsigned n = 0; n <= 12; ++n) {
      INFO("level " << n);
      const auto r = build_recursive(n);
      CHECK(r.size() == (std::size_t{1} << n));
      CHECK(check_isomorphic(build_direct(n), r));
      CHECK(is_connected(r));
      CHECK(is_four_regular(r));
    }
  }

  TEST_CASE("power reading of the attachments does not match") {
    bool mismatch = false;
    for (unsigned n = 0; n <= 8 && !mismatch; ++n) {
      try {
        mismatch = !check_isomorphic(build_direct(n), build_recursive(n, AttachmentReading::Power));
      } catch (const ResourceError&) {
        mismatch = true;  // polygons overflow the vertex budget
      }
    }
    CHECK(mismatch);
  }

  TEST_CASE("polygon pieces cover the vertices") {
    const auto pieces = build_recursive_pieces(6);
    CHECK_FALSE(pieces.pieces.empty());
    std::size_t sides = 0;
    for (const auto& p : pieces.pieces) sides += p.polygon.size();
    CHECK(sides >= pieces.graph.size());
  }

  TEST_CASE("isomorphism respects the distinguished vertex") {
    std::mt19937_64 rng(4);
    const auto g = build_direct(6);
    Permutation shuffle(g.size());
    std::iota(shuffle.begin(), shuffle.end(), 0u);
    std::shuffle(shuffle.begin(), shuffle.end(), rng);
    const auto h = relabel(g, shuffle, false);
    const auto map = find_isomorphism(g, h);
    REQUIRE(map.has_value());
    CHECK((*map)[g.distinguished] == h.distinguished);
    auto moved = h;
    moved.distinguished = (h.distinguished + 1) % h.size();
    CHECK_FALSE(check_isomorphic(g, moved));
    auto swapped = g;
    std::swap(swapped.a, swapped.b);
    CHECK_FALSE(check_isomorphic(g, swapped));
  }

  TEST_CASE("DOT export") {
    const std::string dot = to_dot(build_direct(1));
    CHECK(dot.rfind("digraph schreier_1 {", 0) == 0);
    CHECK(dot.find("v0 [label=\"x\", shape=doublecircle];") != std::string::npos);
    CHECK(dot.find("v0 -> v1 [label=a];") != std::string::npos);
    CHECK(dot.find("v1 -> v1 [label=b];") != std::string::npos);
  }

  TEST_CASE("JSON round trip and validation") {
    const auto g = build_recursive(5);
    CHECK(from_json(to_json(g)) == g);
    CHECK(from_json(export_graph(build_direct(3), "json")) == build_direct(3));
    CHECK_THROWS_AS(export_graph(g, "csv"), InputError);
    CHECK_THROWS_AS(from_json("{\"level\":1}"), InputError);
    CHECK_THROWS_AS(from_json("not json"), InputError);
    CHECK_THROWS_AS(
        from_json(R"({"level":1,"addressed":true,"distinguished":0,"vertices":2,"a":[0,0],"b":[0,1]})"),
        InputError);
  }

  TEST_CASE("level cap") {
    CHECK_THROWS_AS(build_direct(kMaxGraphLevel + 1), ResourceError);
  }
}
