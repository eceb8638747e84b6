#include "basilica/parse.hpp"

#include <cctype>
#include <charconv>
#include <string>

#include "basilica/error.hpp"

namespace basilica {
namespace {

class Parser {
 public:
  Parser(std::string_view text, const SymbolTable& symbols, char first,
         char second)
      : text_(text), symbols_(symbols), first_(first), second_(second) {}

  Word parse() {
    Word w = word();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character");
    return w;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw InputError("word syntax: " + what + " at offset " +
                     std::to_string(pos_) + " in \"" + std::string(text_) +
                     "\"");
  }

  void skip_space() {
    while (pos_ < text_.size() &&
           (std::isspace(static_cast<unsigned char>(text_[pos_])) ||
            text_[pos_] == '*'))
      ++pos_;
  }

  bool at_end() { skip_space(); return pos_ >= text_.size(); }

  char peek() { skip_space(); return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void expect(char ch) {
    if (peek() != ch) fail(std::string("expected '") + ch + "'");
    ++pos_;
  }

  bool starts_primary(char ch) const {
    return ch == '[' || ch == '(' || ch == '{' || ch == '1' ||
           std::isalpha(static_cast<unsigned char>(ch));
  }

  Word word() {
    Word w;
    while (!at_end() && starts_primary(peek())) w *= factor();
    return w;
  }

  Word factor() {
    Word w = primary();
    while (peek() == '^') {
      ++pos_;
      bool negate = false;
      if (peek() == '-') { negate = true; ++pos_; }
      if (peek() == '+') ++pos_;
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        std::int64_t k = integer();
        w = w.pow(negate ? -k : k);
      } else {
        Word conj = primary();
        if (negate) w = w.inverse();
        w = conjugate(w, conj);
      }
    }
    return w;
  }

  std::int64_t integer() {
    skip_space();
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + pos_,
                                     text_.data() + text_.size(), value);
    if (ec != std::errc()) fail("bad exponent");
    pos_ = static_cast<std::size_t>(ptr - text_.data());
    return value;
  }

  Word primary() {
    char ch = peek();
    if (ch == '[') {
      ++pos_;
      Word u = word();
      expect(',');
      Word v = word();
      expect(']');
      return commutator(u, v);
    }
    if (ch == '(' || ch == '{') {
      ++pos_;
      Word u = word();
      expect(ch == '(' ? ')' : '}');
      return u;
    }
    if (ch == '1') {
      ++pos_;
      return Word{};
    }
    if (!std::isalpha(static_cast<unsigned char>(ch))) fail("expected a letter");
    std::size_t start = pos_;
    if (std::islower(static_cast<unsigned char>(ch))) {
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
              text_[pos_] == '_'))
        ++pos_;
    } else {
      ++pos_;
    }
    std::string_view name = text_.substr(start, pos_ - start);
    if (name.size() == 1) {
      char c = name[0];
      char lower = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
      std::int64_t exp = std::isupper(static_cast<unsigned char>(c)) ? -1 : 1;
      if (lower == first_) return Word::a(exp);
      if (lower == second_) return Word::b(exp);
    }
    // A run of generator letters such as "abAB" written without spaces.
    bool all_letters = !name.empty();
    for (char c : name) {
      char lower = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
      if (lower != first_ && lower != second_) all_letters = false;
    }
    if (auto it = symbols_.find(name); it != symbols_.end()) return it->second;
    if (all_letters) {
      Word w;
      for (char c : name) {
        char lower = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        std::int64_t exp = std::isupper(static_cast<unsigned char>(c)) ? -1 : 1;
        w.push(lower == first_ ? Gen::a : Gen::b, exp);
      }
      return w;
    }
    pos_ = start;
    fail("unknown symbol '" + std::string(name) + "'");
  }

  std::string_view text_;
  const SymbolTable& symbols_;
  char first_;
  char second_;
  std::size_t pos_ = 0;
};

}  // namespace

Word parse_word(std::string_view text, const SymbolTable& symbols, char first,
                char second) {
  return Parser(text, symbols, first, second).parse();
}

}  // namespace basilica
