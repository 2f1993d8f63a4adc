#include "traced/dsl/ast.hpp"

namespace traced::dsl {

std::string to_string(Span span) {
  return std::to_string(span.line) + ":" + std::to_string(span.col);
}

DslError::DslError(const std::string& kind, Span span, const std::string& message)
    : Error(to_string(span) + ": " + kind + ": " + message), span_(span), message_(message) {}

namespace {

std::string expected_list(const std::vector<std::string>& expected) {
  std::string s;
  for (std::size_t i = 0; i < expected.size(); ++i) s += (i ? ", " : "") + expected[i];
  return s;
}

}  // namespace

ParseError::ParseError(Span span, std::vector<std::string> expected, const std::string& found)
    : DslError("parse error", span,
               "expected " + (expected.size() > 1 ? "one of " : std::string()) +
                   expected_list(expected) + ", found " + found),
      expected_(std::move(expected)) {}

// Structural equality ignores spans.

bool ObjExpr::operator==(const ObjExpr& o) const {
  return kind == o.kind && name == o.name && args == o.args && dim == o.dim && even == o.even &&
         odd == o.odd && degrees == o.degrees && labels == o.labels;
}

bool Term::operator==(const Term& o) const {
  return kind == o.kind && name == o.name && objs == o.objs && terms == o.terms &&
         triples == o.triples && value == o.value;
}

bool TripleExpr::operator==(const TripleExpr& o) const {
  return kind == o.kind && name == o.name && objs == o.objs && terms == o.terms &&
         inner == o.inner && fraction == o.fraction;
}

bool Decl::operator==(const Decl& o) const {
  return kind == o.kind && name == o.name && sig == o.sig && obj == o.obj &&
         literal == o.literal && term == o.term && triple == o.triple;
}

bool Command::operator==(const Command& o) const { return kind == o.kind && terms == o.terms; }

}  // namespace traced::dsl
