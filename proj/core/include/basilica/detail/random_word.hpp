#pragma once

#include <random>

namespace basilica::algebra {

template <class Rng>
Word random_word(Rng& rng, std::uint64_t length) {
  // Letters 0..3 = a, A, b, B; the inverse of letter k is k ^ 1.
  Word w;
  int previous = -1;
  for (std::uint64_t i = 0; i < length; ++i) {
    int letter;
    if (previous < 0) {
      letter = std::uniform_int_distribution<int>(0, 3)(rng);
    } else {
      letter = std::uniform_int_distribution<int>(0, 2)(rng);
      if (letter >= (previous ^ 1)) ++letter;
    }
    w.push(letter < 2 ? Gen::a : Gen::b, (letter & 1) ? -1 : 1);
    previous = letter;
  }
  return w;
}

}  // namespace basilica::algebra
