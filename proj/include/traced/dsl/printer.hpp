#pragma once

#include "traced/dsl/ast.hpp"

#include <string>

namespace traced::dsl {

// Canonical source text. parse(print(p)) == p for every program, and
// print(parse(s)) == s when s is already canonical.
std::string print(const Program& program);
std::string print(const Term& term);
std::string print(const ObjExpr& obj);
std::string print(const TripleExpr& triple);
std::string print(const MorLiteral& literal);

}  // namespace traced::dsl
