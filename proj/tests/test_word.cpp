#include <doctest.h>

#include <random>

#include "basilica/error.hpp"
#include "basilica/parse.hpp"
#include "basilica/word.hpp"
#include "oracle.hpp"

using namespace basilica;

TEST_SUITE("word") {
  TEST_CASE("free reduction") {
    CHECK(Word::from_letters("aAbB").empty());
    CHECK(Word::from_letters("aab") == Word{{Gen::a, 2}, {Gen::b, 1}});
    CHECK(Word::from_letters("a bB A").empty());
    CHECK(Word::from_letters("abBa").str() == "a^2");
    CHECK(Word{}.str() == "1");
    CHECK_THROWS_AS(Word::from_letters("abc"), InputError);
  }

  TEST_CASE("inverse and powers") {
    const Word w = Word::from_letters("abAAb");
    CHECK((w * w.inverse()).empty());
    CHECK(w.pow(3) == w * w * w);
    CHECK(w.pow(-2) == w.inverse() * w.inverse());
    CHECK(w.pow(0).empty());
    CHECK(w.length() == 5);
    CHECK(w.exponent_sum(Gen::a) == -1);
    CHECK(w.count(Gen::b) == 2);
  }

  TEST_CASE("commutator and conjugation conventions") {
    const Word a = Word::a(), b = Word::b();
    CHECK(commutator(a, b) == Word::from_letters("ABab"));
    CHECK(conjugate(a, b) == Word::from_letters("Bab"));
  }

  TEST_CASE("substitution") {
    const Word w = Word::from_letters("abA");
    CHECK(substitute(w, Word::b(), Word::a()) == Word::from_letters("baB"));
    CHECK(substitute(w, Word::a(2), Word{}).empty());
  }

  TEST_CASE("parse syntax") {
    CHECK(parse_word("a^-3 b^2") == Word{{Gen::a, -3}, {Gen::b, 2}});
    CHECK(parse_word("[a,b]") == Word::from_letters("ABab"));
    CHECK(parse_word("a^b") == Word::from_letters("Bab"));
    CHECK(parse_word("a^-b") == Word::from_letters("BAb"));
    CHECK(parse_word("(ab)^2") == Word::from_letters("abab"));
    CHECK(parse_word("{a b}^-1") == Word::from_letters("BA"));
    CHECK(parse_word("1").empty());
    CHECK(parse_word("[[a,b],b]") == commutator(commutator(Word::a(), Word::b()), Word::b()));
    CHECK(parse_word("g h G", {}, 'g', 'h') == Word::from_letters("abA"));
  }

  TEST_CASE("parse errors") {
    CHECK_THROWS_AS(parse_word("a^"), InputError);
    CHECK_THROWS_AS(parse_word("[a,b"), InputError);
    CHECK_THROWS_AS(parse_word("(a"), InputError);
    CHECK_THROWS_AS(parse_word("q"), InputError);
    CHECK_THROWS_AS(parse_word("a b )"), InputError);
  }

  TEST_CASE("named elements") {
    const SymbolTable table{{"c", parse_word("[a,b]")}};
    CHECK(parse_word("c^a", table) == parse_word("[a,b]^a"));
  }

  TEST_CASE("reduction matches letter-by-letter cancellation") {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 500; ++i) {
      std::string raw;
      const std::size_t n = rng() % 16;
      for (std::size_t k = 0; k < n; ++k) raw += "aAbB"[rng() % 4];
      std::string stack;
      for (char c : raw) {
        if (!stack.empty() && oracle::inverse(std::string(1, c))[0] == stack.back())
          stack.pop_back();
        else
          stack += c;
      }
      const Word w = Word::from_letters(raw);
      CHECK(w == Word::from_letters(stack));
      CHECK(w.length() == stack.size());
    }
  }
}
