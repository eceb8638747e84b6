#include "basilica/word.hpp"

#include <cstdlib>
#include <string>

#include "basilica/error.hpp"

namespace basilica {

Word::Word(std::initializer_list<Run> runs) {
  for (const Run& r : runs) push(r.gen, r.exp);
}

Word Word::gen(Gen g, std::int64_t exp) {
  Word w;
  w.push(g, exp);
  return w;
}

Word Word::from_letters(std::string_view letters) {
  Word w;
  for (char ch : letters) {
    switch (ch) {
      case 'a': w.push(Gen::a, 1); break;
      case 'A': w.push(Gen::a, -1); break;
      case 'b': w.push(Gen::b, 1); break;
      case 'B': w.push(Gen::b, -1); break;
      case ' ': case '\t': case '\n': break;
      default:
        throw InputError(std::string("malformed letter '") + ch + "'");
    }
  }
  return w;
}

std::uint64_t Word::length() const {
  std::uint64_t n = 0;
  for (const Run& r : runs_) n += static_cast<std::uint64_t>(std::llabs(r.exp));
  return n;
}

std::uint64_t Word::count(Gen g) const {
  std::uint64_t n = 0;
  for (const Run& r : runs_)
    if (r.gen == g) n += static_cast<std::uint64_t>(std::llabs(r.exp));
  return n;
}

std::int64_t Word::exponent_sum(Gen g) const {
  std::int64_t n = 0;
  for (const Run& r : runs_)
    if (r.gen == g) n += r.exp;
  return n;
}

void Word::push(Gen g, std::int64_t exp) {
  if (exp == 0) return;
  if (!runs_.empty() && runs_.back().gen == g) {
    runs_.back().exp += exp;
    if (runs_.back().exp == 0) runs_.pop_back();
    return;
  }
  runs_.push_back({g, exp});
}

Word& Word::operator*=(const Word& rhs) {
  if (&rhs == this) {
    const Word copy = rhs;
    return *this *= copy;
  }
  // Runs of rhs are reduced among themselves, so cancellation can only
  // cascade through its first run.
  std::size_t i = 0;
  while (i < rhs.runs_.size()) {
    const Run& r = rhs.runs_[i];
    if (runs_.empty() || runs_.back().gen != r.gen) break;
    runs_.back().exp += r.exp;
    ++i;
    if (runs_.back().exp != 0) break;
    runs_.pop_back();
  }
  for (; i < rhs.runs_.size(); ++i) push(rhs.runs_[i].gen, rhs.runs_[i].exp);
  return *this;
}

Word Word::inverse() const {
  Word w;
  w.runs_.reserve(runs_.size());
  for (auto it = runs_.rbegin(); it != runs_.rend(); ++it)
    w.runs_.push_back({it->gen, -it->exp});
  return w;
}

Word Word::pow(std::int64_t k) const {
  if (runs_.size() == 1) return gen(runs_[0].gen, runs_[0].exp * k);
  Word base = k < 0 ? inverse() : *this;
  std::uint64_t n = static_cast<std::uint64_t>(k < 0 ? -k : k);
  Word result;
  while (n > 0) {
    if (n & 1u) result *= base;
    n >>= 1;
    if (n > 0) base *= base;
  }
  return result;
}

std::string Word::str(char first, char second) const {
  if (runs_.empty()) return "1";
  std::string out;
  for (const Run& r : runs_) {
    if (!out.empty()) out += ' ';
    char letter = r.gen == Gen::a ? first : second;
    if (r.exp == 1) {
      out += letter;
    } else if (r.exp == -1) {
      out += static_cast<char>(letter - 'a' + 'A');
    } else {
      out += letter;
      out += '^';
      out += std::to_string(r.exp);
    }
  }
  return out;
}

std::size_t Word::hash() const {
  std::size_t h = 0xcbf29ce484222325ull;
  for (const Run& r : runs_) {
    std::uint64_t v = (static_cast<std::uint64_t>(r.exp) << 1) |
                      static_cast<std::uint64_t>(r.gen);
    h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

Word commutator(const Word& u, const Word& v) {
  return u.inverse() * v.inverse() * u * v;
}

Word conjugate(const Word& u, const Word& v) { return v.inverse() * u * v; }

Word substitute(const Word& w, const Word& image_a, const Word& image_b) {
  Word out;
  for (const Run& r : w.runs())
    out *= (r.gen == Gen::a ? image_a : image_b).pow(r.exp);
  return out;
}

}  // namespace basilica
