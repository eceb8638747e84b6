#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace basilica {

// The two generators of the group. Words over an abstract pair of letters
// (e.g. the g, h of a relation witness) reuse the same type.
enum class Gen : std::uint8_t { a = 0, b = 1 };

inline constexpr Gen other(Gen g) { return g == Gen::a ? Gen::b : Gen::a; }

struct Run {
  Gen gen;
  std::int64_t exp;  // never zero

  friend bool operator==(const Run&, const Run&) = default;
};

/// A freely reduced word in run-length form.
///
/// Adjacent runs always carry distinct generators and no run has exponent
/// zero, so two Words compare equal exactly when they are equal in the free
/// group. The empty word is the identity.
class Word {
 public:
  Word() = default;
  Word(std::initializer_list<Run> runs);

  static Word gen(Gen g, std::int64_t exp = 1);
  static Word a(std::int64_t exp = 1) { return gen(Gen::a, exp); }
  static Word b(std::int64_t exp = 1) { return gen(Gen::b, exp); }

  /// Reduce a raw letter sequence over {a, A, b, B}; whitespace is ignored.
  /// Throws InputError on any other character.
  static Word from_letters(std::string_view letters);

  const std::vector<Run>& runs() const { return runs_; }
  bool empty() const { return runs_.empty(); }
  std::size_t run_count() const { return runs_.size(); }

  /// Total absolute exponent (number of letters once expanded).
  std::uint64_t length() const;
  std::uint64_t count(Gen g) const;
  std::int64_t exponent_sum(Gen g) const;

  Word inverse() const;
  Word pow(std::int64_t k) const;

  /// Append g^exp with free cancellation.
  void push(Gen g, std::int64_t exp);
  Word& operator*=(const Word& rhs);
  friend Word operator*(Word lhs, const Word& rhs) { return lhs *= rhs; }

  friend bool operator==(const Word&, const Word&) = default;

  /// Letters rendered as "a", "A", "a^3", "a^-3"; identity renders as "1".
  std::string str(char first = 'a', char second = 'b') const;

  std::size_t hash() const;

 private:
  std::vector<Run> runs_;
};

/// [u,v] = u^-1 v^-1 u v
Word commutator(const Word& u, const Word& v);
/// u^v = v^-1 u v
Word conjugate(const Word& u, const Word& v);

/// Replace the letters a, b of `w` by the given words.
Word substitute(const Word& w, const Word& image_a, const Word& image_b);

struct WordHash {
  std::size_t operator()(const Word& w) const { return w.hash(); }
};

}  // namespace basilica
