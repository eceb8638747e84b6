#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "basilica/error.hpp"
#include "basilica/parse.hpp"
#include "basilica/wreath.hpp"
#include "oracle.hpp"

using namespace basilica;

TEST_SUITE("wreath") {
  TEST_CASE("generator decompositions") {
    CHECK(decompose(Word::a()) == Decomposition{Word::b(), Word{}, true});
    CHECK(decompose(Word::b()) == Decomposition{Word::a(), Word{}, false});
    CHECK(decompose(Word{}) == Decomposition{});
  }

  TEST_CASE("small identities") {
    CHECK(is_trivial(parse_word("[[a,b],b]")));
    CHECK(is_trivial(parse_word("[[b,a^2],a^2]")));
    CHECK_FALSE(is_trivial(parse_word("[[a,b],a]")));
    CHECK_FALSE(is_trivial(parse_word("a")));
    CHECK(is_trivial(Word{}));
    CHECK(equal(parse_word("a^2"), parse_word("a a")));
  }

  TEST_CASE("section and act on addresses") {
    CHECK(section(Word::a(), "x") == Word::b());
    CHECK(section(Word::a(), "y").empty());
    CHECK(section(Word::a(), "") == Word::a());
    CHECK(act(Word::a(), "xx") == "yx");
    CHECK(act(Word::b(), "xx") == "xy");
    CHECK(act(Word::a(), "") == "");
    CHECK_THROWS_AS(act(Word::a(), "xz"), InputError);
  }

  TEST_CASE("vertex encoding") {
    CHECK(vertex_index("yx") == 2);
    CHECK(vertex_address(2, 2) == "yx");
    CHECK(vertex_address(0, 0) == "");
  }

  TEST_CASE("action agrees with the automaton") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 200; ++i) {
      const std::string letters = oracle::random_reduced(rng, 1 + rng() % 10);
      const Word w = Word::from_letters(letters);
      const unsigned level = 1 + rng() % 9;
      CHECK(level_permutation(w, level) == oracle::permutation(letters, level));
      const std::string v = oracle::address(rng() % (1u << level), level);
      CHECK(act(w, v) == oracle::apply_word(letters, v));
    }
  }

  TEST_CASE("sections describe the action below the first letter") {
    std::mt19937_64 rng(12);
    for (int i = 0; i < 200; ++i) {
      const std::string letters = oracle::random_reduced(rng, 1 + rng() % 12);
      const Word w = Word::from_letters(letters);
      const Decomposition d = decompose(w);
      for (char first : {'x', 'y'}) {
        const std::string u = oracle::address(rng() % 64, 6);
        const std::string image = oracle::apply_word(letters, first + u);
        const char moved = d.swap ? (first == 'x' ? 'y' : 'x') : first;
        CHECK(image[0] == moved);
        CHECK(image.substr(1) == act(first == 'x' ? d.x : d.y, u));
      }
    }
  }

  TEST_CASE("product rule for sections") {
    std::mt19937_64 rng(13);
    for (int i = 0; i < 200; ++i) {
      const Word g = Word::from_letters(oracle::random_reduced(rng, rng() % 8));
      const Word h = Word::from_letters(oracle::random_reduced(rng, rng() % 8));
      const Decomposition dg = decompose(g), dh = decompose(h), dgh = decompose(g * h);
      CHECK(dgh.swap == (dg.swap != dh.swap));
      const Word& hx = dg.swap ? dh.y : dh.x;
      const Word& hy = dg.swap ? dh.x : dh.y;
      CHECK(equal(dgh.x, dg.x * hx));
      CHECK(equal(dgh.y, dg.y * hy));
    }
  }

  TEST_CASE("is_trivial agrees with deep action on random words") {
    std::mt19937_64 rng(14);
    for (int i = 0; i < 150; ++i) {
      const std::string letters = oracle::random_reduced(rng, 1 + rng() % 8);
      const Word w = Word::from_letters(letters);
      CHECK(is_trivial(w) == oracle::acts_trivially(letters, 14));
    }
  }

  TEST_CASE("trivial words stay trivial under conjugation and products") {
    std::mt19937_64 rng(15);
    const Word r1 = parse_word("[[a,b],b]"), r2 = parse_word("[[b,a^2],a^2]");
    for (int i = 0; i < 50; ++i) {
      const Word g = Word::from_letters(oracle::random_reduced(rng, rng() % 10));
      CHECK(is_trivial(conjugate(r1, g) * conjugate(r2, g.inverse())));
      CHECK(equal(g * r1, g));
    }
  }

  TEST_CASE("norm contracts on second-level sections") {
    std::mt19937_64 rng(16);
    const double fixed = contraction_fixed_point();
    CHECK(fixed == doctest::Approx(1 / (std::sqrt(2.0) - 1)));
    // one level is not enough: A b^2 a has the section B a^2 b of equal norm
    const Decomposition conj = decompose(parse_word("A b^2 a"));
    CHECK(norm(conj.y).value() == doctest::Approx(norm(parse_word("A b^2 a")).value()));
    for (int i = 0; i < 500; ++i) {
      const Word w = Word::from_letters(oracle::random_reduced(rng, 1 + rng() % 20));
      const double n = norm(w).value();
      const Decomposition d = decompose(w);
      for (const Word* s : {&d.x, &d.y}) {
        const Decomposition e = decompose(*s);
        CHECK(norm(e.x).value() <= (n + 1) / std::sqrt(2.0) + 1e-12);
        CHECK(norm(e.y).value() <= (n + 1) / std::sqrt(2.0) + 1e-12);
      }
    }
  }

  TEST_CASE("section closure is finite and closed") {
    const Word w = parse_word("[a,b]^a b^3");
    const auto closure = section_closure(w);
    CHECK(std::find(closure.begin(), closure.end(), w) != closure.end());
    for (const Word& s : closure) {
      const Decomposition d = decompose(s);
      CHECK(std::find(closure.begin(), closure.end(), d.x) != closure.end());
      CHECK(std::find(closure.begin(), closure.end(), d.y) != closure.end());
    }
  }

  TEST_CASE("level cap") {
    CHECK_THROWS_AS(level_permutation(Word::a(), kMaxPermutationLevel + 1), ResourceError);
  }
}
