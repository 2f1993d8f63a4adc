#include "traced/dsl/lexer.hpp"

#include <cctype>

namespace traced::dsl {

std::string describe(Tok kind) {
  switch (kind) {
    case Tok::Word: return "name";
    case Tok::Number: return "number";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::LBrack: return "'['";
    case Tok::RBrack: return "']'";
    case Tok::LBrace: return "'{'";
    case Tok::RBrace: return "'}'";
    case Tok::Comma: return "','";
    case Tok::Colon: return "':'";
    case Tok::Semi: return "';'";
    case Tok::Star: return "'*'";
    case Tok::Arrow: return "'->'";
    case Tok::Eq: return "'='";
    case Tok::Bar: return "'|'";
    case Tok::Minus: return "'-'";
    case Tok::Slash: return "'/'";
    case Tok::End: return "end of input";
  }
  return "?";
}

namespace {

bool word_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool word_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

}  // namespace

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  Span pos;
  auto advance = [&] {
    char c = text[i++];
    if (c == '\n') {
      ++pos.line;
      pos.col = 1;
    } else if ((static_cast<unsigned char>(c) & 0xC0) != 0x80) {
      ++pos.col;
    }
  };
  auto peek = [&](std::size_t k = 0) { return i + k < text.size() ? text[i + k] : '\0'; };

  while (i < text.size()) {
    char c = peek();
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      advance();
      continue;
    }
    if (c == '#' || (c == '/' && peek(1) == '/')) {
      while (i < text.size() && peek() != '\n') advance();
      continue;
    }
    Span start = pos;
    std::size_t begin = i;
    Tok kind;
    if (word_start(c)) {
      while (i < text.size() && word_char(peek())) advance();
      kind = Tok::Word;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(peek()))) advance();
      kind = Tok::Number;
    } else if (c == '-' && peek(1) == '>') {
      advance();
      advance();
      kind = Tok::Arrow;
    } else {
      switch (c) {
        case '(': kind = Tok::LParen; break;
        case ')': kind = Tok::RParen; break;
        case '[': kind = Tok::LBrack; break;
        case ']': kind = Tok::RBrack; break;
        case '{': kind = Tok::LBrace; break;
        case '}': kind = Tok::RBrace; break;
        case ',': kind = Tok::Comma; break;
        case ':': kind = Tok::Colon; break;
        case ';': kind = Tok::Semi; break;
        case '*': kind = Tok::Star; break;
        case '=': kind = Tok::Eq; break;
        case '|': kind = Tok::Bar; break;
        case '-': kind = Tok::Minus; break;
        case '/': kind = Tok::Slash; break;
        default: {
          std::size_t len = 1;
          auto u = static_cast<unsigned char>(c);
          if (u >= 0xF0) len = 4;
          else if (u >= 0xE0) len = 3;
          else if (u >= 0xC0) len = 2;
          throw LexError(start, "unexpected character '" + std::string(text.substr(i, len)) + "'");
        }
      }
      advance();
    }
    out.push_back({kind, std::string(text.substr(begin, i - begin)), start});
  }
  out.push_back({Tok::End, "", pos});
  return out;
}

}  // namespace traced::dsl
