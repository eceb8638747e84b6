#include <doctest.h>

#include <random>

#include "basilica/algebra.hpp"
#include "basilica/error.hpp"
#include "basilica/parse.hpp"
#include "basilica/wreath.hpp"
#include "oracle.hpp"

using namespace basilica;

namespace {
Word named(const char* text) { return parse_word(text, algebra::named_elements()); }
}  // namespace

TEST_SUITE("algebra") {
  TEST_CASE("named elements") {
    CHECK(algebra::element_c() == parse_word("[a,b]"));
    CHECK(algebra::element_d() == parse_word("[[a,b],a]"));
    CHECK(algebra::element_e() == parse_word("[[[a,b],a],a]"));
    CHECK_FALSE(is_trivial(algebra::element_d()));
  }

  TEST_CASE("identity catalogue passes") {
    for (const auto& outcome : algebra::run_identity_catalogue()) {
      INFO(outcome.name << ": " << outcome.detail);
      CHECK(outcome.passed);
    }
  }

  TEST_CASE("catalogue sections by hand") {
    const Decomposition c = decompose(named("c"));
    CHECK_FALSE(c.swap);
    CHECK(equal(c.x, Word::a()));
    CHECK(equal(c.y, parse_word("a^-b")));
    CHECK(equal(named("c^b"), named("c")));
    CHECK_FALSE(equal(named("c^a"), named("c")));
  }

  TEST_CASE("commutator witness lands on d^-1") {
    const auto w = algebra::nonsolvability_witness();
    CHECK(w.nontrivial);
    CHECK_FALSE(w.swap);
    CHECK(w.section_y_trivial);
    CHECK(w.section_x_equals_d_inverse);
    CHECK_FALSE(w.section_x_equals_d);
    const Decomposition reversed = decompose(named("[c^-1 c^-a, c]"));
    CHECK(equal(reversed.x, algebra::element_d()));
  }

  TEST_CASE("relators") {
    const auto report = algebra::check_relators(3);
    CHECK(report.relators.size() == 8);
    CHECK(report.consistent());
    CHECK_FALSE(report.negative_control.trivial);
    CHECK_THROWS_AS(algebra::check_relators(64), InputError);
  }

  TEST_CASE("relators agree with the automaton") {
    for (const char* r : {"ABabBBAbab", "[[b,a^2],a^2]", "[[a^2,b^2],b^2]"}) {
      const Word w = parse_word(r);
      std::string letters;
      for (const auto& run : w.runs())
        for (std::int64_t k = 0; k < std::abs(run.exp); ++k)
          letters += run.gen == Gen::a ? (run.exp > 0 ? 'a' : 'A') : (run.exp > 0 ? 'b' : 'B');
      CHECK(oracle::acts_trivially(letters, 12));
    }
  }

  TEST_CASE("abelianization") {
    CHECK(algebra::abelianize(named("c")).is_zero());
    CHECK(algebra::abelianize(parse_word("a^3 b^-2 a")) == algebra::AbelianImage{4, -2});
    for (int m = -4; m <= 4; ++m)
      for (int n = -4; n <= 4; ++n)
        if (m || n) CHECK_FALSE(is_trivial(Word::a(m) * Word::b(n)));
  }

  TEST_CASE("word oracle on short words") {
    const auto report = algebra::word_oracle_check(5, 10);
    CHECK(report.words == 1 + 4 * (1 + 3 + 9 + 27 + 81));
    CHECK(report.disagreements.empty());
    CHECK(report.trivial == 1);
  }

  TEST_CASE("word oracle count at length 8") {
    // 1 + 4 (3^8 - 1) / 2 freely reduced words
    const auto report = algebra::word_oracle_check(8, 12);
    CHECK(report.words == 13121);
    CHECK(report.disagreements.empty());
  }

  TEST_CASE("torsion probe is deterministic") {
    const auto r1 = algebra::torsion_probe(30, 10, 6, 7);
    const auto r2 = algebra::torsion_probe(30, 10, 6, 7);
    CHECK(r1.violations.empty());
    CHECK(r1.samples == 30);
    REQUIRE(r1.words.size() == r2.words.size());
    for (std::size_t i = 0; i < r1.words.size(); ++i) CHECK(r1.words[i] == r2.words[i]);
  }

  TEST_CASE("free monoid") {
    const auto r = algebra::free_monoid_check(8);
    CHECK(r.words == 510);
    CHECK(r.collisions.empty());
  }

  TEST_CASE("transitivity") {
    for (unsigned n = 0; n <= 10; ++n) {
      const auto r = algebra::transitivity_check(n);
      CHECK(r.transitive);
      CHECK(r.orbit_size == (1u << n));
    }
  }

  TEST_CASE("random words") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 100; ++i) {
      const Word w = algebra::random_word(rng, 7);
      CHECK(w.length() == 7);
    }
  }
}
