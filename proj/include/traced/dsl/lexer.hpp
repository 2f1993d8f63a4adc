#pragma once

#include "traced/dsl/ast.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace traced::dsl {

enum class Tok {
  Word, Number, LParen, RParen, LBrack, RBrack, LBrace, RBrace,
  Comma, Colon, Semi, Star, Arrow, Eq, Bar, Minus, Slash, End
};

struct Token {
  Tok kind;
  std::string text;
  Span span;
};

// Comments run from '#' or "//" to the end of the line. Columns count UTF-8
// code points.
std::vector<Token> tokenize(std::string_view text);

std::string describe(Tok kind);

}  // namespace traced::dsl
