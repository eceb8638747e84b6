#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "basilica/parse.hpp"
#include "basilica/word.hpp"

namespace basilica::algebra {

// Named elements: c = [a,b], d = [c,a], e = [d,a].
Word element_c();
Word element_d();
Word element_e();

/// Symbol table with c, d, e for parse_word.
const SymbolTable& named_elements();

struct AbelianImage {
  std::int64_t exp_a = 0;
  std::int64_t exp_b = 0;

  bool is_zero() const { return exp_a == 0 && exp_b == 0; }
  friend bool operator==(const AbelianImage&, const AbelianImage&) = default;
};

AbelianImage abelianize(const Word& w);

bool check_identity(const Word& lhs, const Word& rhs);

// One entry of the identity catalogue. Equality entries compare two words;
// Sections entries assert decompose(word) == (expect_x, expect_y, no swap)
// up to equality in the group.
struct Identity {
  enum class Kind { Equality, Sections };
  std::string name;
  Kind kind = Kind::Equality;
  Word lhs;
  Word rhs;       // Equality only
  Word expect_x;  // Sections only
  Word expect_y;  // Sections only
};

struct CheckOutcome {
  std::string name;
  bool passed = false;
  double seconds = 0.0;
  std::string detail;
};

const std::vector<Identity>& identity_catalogue();
CheckOutcome run_identity(const Identity& id);
std::vector<CheckOutcome> run_identity_catalogue();

struct RelatorEntry {
  std::int64_t p = 0;
  std::string text;
  Word relator;
  bool trivial = false;
  double seconds = 0.0;
};

struct RelatorReport {
  std::vector<RelatorEntry> relators;
  RelatorEntry negative_control;  // [[a,b],a], expected nontrivial
  bool consistent() const;
};

inline constexpr unsigned kMaxRelatorPowerExponent = 6;

/// [[a^p,b^p],b^p] and [[b^p,a^2p],a^2p] for p = 1, 2, 4, ..., 2^max.
/// Throws InputError above kMaxRelatorPowerExponent.
RelatorReport check_relators(unsigned max_power_exponent);

/// Uniformly random freely reduced word of exactly `length` letters.
template <class Rng>
Word random_word(Rng& rng, std::uint64_t length);

struct TorsionViolation {
  Word word;
  std::int64_t power = 0;
};

struct TorsionReport {
  std::uint64_t samples = 0;
  std::uint64_t rejected_trivial = 0;
  std::uint64_t powers_checked = 0;
  std::vector<TorsionViolation> violations;
  std::vector<Word> words;
};

TorsionReport torsion_probe(std::uint64_t samples, std::uint64_t max_length,
                            std::int64_t max_power, std::uint64_t seed);

struct MonoidReport {
  unsigned max_length = 0;
  std::uint64_t words = 0;
  unsigned fingerprint_level = 0;
  std::uint64_t buckets = 0;
  std::uint64_t largest_bucket = 0;
  std::uint64_t confirmations = 0;  // pairs sent to the exact decision
  std::vector<std::pair<Word, Word>> collisions;
};

inline constexpr unsigned kMaxMonoidLength = 16;

MonoidReport free_monoid_check(unsigned max_length,
                               unsigned fingerprint_level = 10);

struct OracleDisagreement {
  Word word;
  bool trivial = false;       // is_trivial
  unsigned moved_depth = 0;   // shallowest level where the action is nontrivial, 0 if none
};

struct OracleReport {
  unsigned max_length = 0;
  unsigned depth = 0;
  std::uint64_t words = 0;  // including the empty word
  std::uint64_t trivial = 0;
  std::vector<OracleDisagreement> disagreements;
};

inline constexpr unsigned kMaxOracleLength = 12;

/// Every freely reduced word of length <= max_length is decided by
/// is_trivial and by its action on level `depth`; the two must agree.
OracleReport word_oracle_check(unsigned max_length, unsigned depth);

struct TransitivityReport {
  unsigned level = 0;
  std::uint64_t orbit_size = 0;
  bool transitive = false;
};

TransitivityReport transitivity_check(unsigned level);

struct NonsolvabilityWitness {
  Word word;                 // [c, c^(-1-a)]
  Word section_x;
  Word section_y;
  bool swap = false;
  bool nontrivial = false;
  bool section_y_trivial = false;
  bool section_x_equals_d = false;
  bool section_x_equals_d_inverse = false;
};

NonsolvabilityWitness nonsolvability_witness();

}  // namespace basilica::algebra

#include "basilica/detail/random_word.hpp"
