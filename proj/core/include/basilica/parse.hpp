#pragma once

#include <map>
#include <string>
#include <string_view>

#include "basilica/word.hpp"

namespace basilica {

using SymbolTable = std::map<std::string, Word, std::less<>>;

/// Parse the text word syntax.
///
///   word    := factor*
///   factor  := primary ('^' power)*
///   power   := ['-'] integer | ['-'] primary     (u^-v means (u^-1)^v)
///   primary := 'a' | 'b' | 'A' | 'B' | '1' | name | '[' word ',' word ']'
///            | '(' word ')' | '{' word '}'
///
/// Capitals are inverses, `[u,v]` is u^-1 v^-1 u v and `u^v` is v^-1 u v.
/// Names (lowercase identifiers other than a, b) are looked up in `symbols`.
/// `first`/`second` rename the two generator letters, e.g. 'g','h' for
/// relation witnesses. Throws InputError on malformed text.
Word parse_word(std::string_view text, const SymbolTable& symbols = {},
                char first = 'a', char second = 'b');

}  // namespace basilica
